#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "mucode/cli.hpp"

using namespace mucode;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::dispatch(args, in, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("worked encoding example through the front end") {
    const RunResult res =
        run({"constrained", "encode", "--alg", "rll", "--cap", "13"}, "1000000000001\n");
    REQUIRE(res.code == 0);
    REQUIRE(res.out == "10110010000100\n");
}

TEST_CASE("count and bound subcommands") {
    REQUIRE(run({"cf", "bound", "--n", "3", "--q", "2"}).out == "2\n");
    REQUIRE(run({"constrained", "count", "--n", "3", "--q", "2", "--k", "2"}).out == "5\n");
    REQUIRE(run({"constrained", "count", "--n", "3", "--q", "2", "--k", "3", "--d", "2"}).out ==
            "4\n");
    REQUIRE(run({"dmu", "autocyclic", "--d", "5"}).out == "11111101011100111110\n");
}

TEST_CASE("curve export row count and reparse accuracy") {
    const RunResult res = run({"mu", "curves", "--q", "2", "--z", "-2,-1,0", "--grid", "200"});
    REQUIRE(res.code == 0);
    std::istringstream lines(res.out);
    std::string header;
    std::getline(lines, header);
    REQUIRE(header == "q,delta,z,f_value,normalized_cardinality,bound2,bound3");
    std::size_t rows = 0;
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        // re-parse: printed values sit within 1e-12 of the in-memory ones,
        // evaluated at the exact grid point the row was generated from
        double delta, f, norm;
        int z;
        unsigned q;
        REQUIRE(std::sscanf(line.c_str(), "%u,%lf,%d,%lf,%lf", &q, &delta, &z, &f, &norm) == 5);
        // 12 significant digits guarantee 5e-12 relative round-trip fidelity
        const double exact_delta = -1.0 + double(rows % 200 + 1) / 200.0;
        const AnalysisPoint p = c1_asymptotic(q, z, exact_delta);
        REQUIRE(std::abs(p.delta - delta) <= 5e-12 * std::max(1.0, std::abs(p.delta)));
        REQUIRE(std::abs(p.f_value - f) <= 5e-12 * std::max(1.0, std::abs(p.f_value)));
        REQUIRE(std::abs(p.normalized_cardinality - norm) <=
                1e-12 + 5e-12 * std::abs(p.normalized_cardinality));
        ++rows;
    }
    REQUIRE(rows == 600);
}

TEST_CASE("byte-identical reruns") {
    const std::vector<std::string> args{"mu", "curves", "--q", "5", "--z", "-1,0", "--grid", "64"};
    REQUIRE(run(args).out == run(args).out);
    const std::vector<std::string> bargs{"constrained", "bounds", "--n", "64", "--q", "2",
                                         "--k",  "6",    "--format", "csv"};
    const RunResult b1 = run(bargs), b2 = run(bargs);
    REQUIRE(b1.code == 0);
    REQUIRE(b1.out.substr(0, 2) == "n,");  // csv header row
    REQUIRE(b1.out == b2.out);
    // global flags parse on either side of the subcommand
    const RunResult pre = run({"--format", "csv", "constrained", "bounds", "--n", "64", "--q",
                               "2", "--k", "6"});
    REQUIRE(pre.out == b1.out);
    const RunResult wwl_csv = run({"constrained", "bounds", "--n", "16", "--q", "2", "--k", "4",
                                   "--d", "2", "--format", "csv"});
    REQUIRE(wwl_csv.code == 0);
    REQUIRE(wwl_csv.out.find("bound_log2") != std::string::npos);
}

TEST_CASE("codebook round trip with checks") {
    REQUIRE(run({"mu", "check"}, "0011\n").out == "ok\n");
    const RunResult bad = run({"mu", "check"}, "01\n10\n");
    REQUIRE(bad.code == 0);
    REQUIRE(bad.out.substr(0, 9) == "violation");
    REQUIRE(run({"dmu", "check", "--dh", "1", "--dm", "1"}, "001101\n001111\n").out == "ok\n");
    REQUIRE(run({"emu", "check", "--de", "2", "--dm", "1"}, "001101\n").out == "ok\n");
    REQUIRE(run({"cf", "check"}, "001\n").out == "ok\n");
}

TEST_CASE("encode and decode pipelines agree") {
    const RunResult enc = run({"mu", "encode", "--n", "16"}, "10110100\n00000000\n");
    REQUIRE(enc.code == 0);
    const RunResult dec = run({"mu", "decode", "--n", "16"}, enc.out);
    REQUIRE(dec.out == "10110100\n00000000\n");

    const RunResult vt = run({"vt", "correct", "--n", "4", "--b", "0"}, "001\n101\n11001\n");
    REQUIRE(vt.out == "1001\n1001\n1001\n");
}

TEST_CASE("dna words cross the boundary both ways") {
    const RunResult enc = run({"--dna", "mu", "encode", "--n", "16"}, "GTCA\n");
    REQUIRE(enc.code == 0);
    const RunResult dec = run({"--dna", "mu", "decode", "--n", "16"}, enc.out);
    REQUIRE(dec.out == "GTCA\n");
}

TEST_CASE("error reporting and exit codes") {
    // ragged codebook
    const RunResult ragged = run({"mu", "check"}, "0011\n001\n");
    REQUIRE(ragged.code == 1);
    REQUIRE(ragged.err.substr(0, 7) == "E_PARAM");
    // duplicates
    const RunResult dup = run({"mu", "check"}, "0011\n0011\n");
    REQUIRE(dup.code == 1);
    REQUIRE(dup.err.substr(0, 7) == "E_PARAM");
    // corrupt encoded word
    const RunResult corrupt = run({"mu", "decode", "--n", "16"}, "1111111111111111\n");
    REQUIRE(corrupt.code == 2);
    REQUIRE(corrupt.err.substr(0, 9) == "E_CORRUPT");
    // capacity ceiling
    const RunResult cap = run({"constrained", "count", "--n", "20000", "--q", "2", "--k", "4"});
    REQUIRE(cap.code == 1);
    REQUIRE(cap.err.substr(0, 10) == "E_CAPACITY");
    // unknown flags
    REQUIRE(run({"mu", "encode"}).code == 1);
    REQUIRE(run({"nonsense"}).code == 1);
}

TEST_CASE("prefix synchronization via a marker file") {
    const std::string path = "ps_markers_test.txt";
    {
        std::ofstream f(path);
        f << "00\n";
    }
    const RunResult ok = run({"ps", "check", "--H", path}, "00111\n00101\n");
    REQUIRE(ok.code == 0);
    REQUIRE(ok.out == "ok\n");
    const RunResult indexed = run({"ps", "check", "--H", path, "--rho", "1"}, "00111\n00101\n");
    REQUIRE(indexed.code == 0);
    REQUIRE(indexed.out == "ok\n");
    // a codeword ending in 0 recreates the marker across the boundary
    const RunResult bad = run({"ps", "check", "--H", path}, "00110\n");
    REQUIRE(bad.out.substr(0, 9) == "violation");
    std::remove(path.c_str());
}

TEST_CASE("remaining subcommand surfaces") {
    // wwl encode/decode with the capacity flag
    const RunResult wenc =
        run({"constrained", "encode", "--alg", "wwl", "--cap", "1024", "--d", "2"}, "0110100\n");
    REQUIRE(wenc.code == 0);
    const RunResult wdec =
        run({"constrained", "decode", "--alg", "wwl", "--cap", "1024", "--d", "2"}, wenc.out);
    REQUIRE(wdec.out == "0110100\n");

    // construction 2 and 3 encode/decode, with and without indel repair
    const RunResult denc = run({"dmu", "encode", "--n", "24", "--dh", "1", "--dm", "1"},
                               "101101010011\n");
    REQUIRE(denc.code == 0);
    REQUIRE(run({"dmu", "decode", "--n", "24", "--dh", "1", "--dm", "1"}, denc.out).out ==
            "101101010011\n");
    const RunResult eenc = run({"emu", "encode", "--n", "24", "--dm", "1"}, "1011010\n");
    REQUIRE(eenc.code == 0);
    std::string clipped = eenc.out.substr(0, eenc.out.size() - 2);  // drop one symbol
    const RunResult edec =
        run({"emu", "decode", "--n", "24", "--dm", "1", "--correct-indel"}, clipped + "\n");
    REQUIRE(edec.out == "1011010\n");
    REQUIRE(run({"emu", "decode", "--n", "24", "--dm", "1"}, clipped + "\n").code == 2);

    // report-emitting commands run and carry their headline values
    REQUIRE(run({"mu", "bound", "--n", "8", "--q", "2"}).out.find("levenshtein") !=
            std::string::npos);
    REQUIRE(run({"dmu", "bound", "--n", "6", "--q", "2", "--dh", "1", "--dm", "1"}).out.find(
                "bound_sphere") != std::string::npos);
    REQUIRE(run({"emu", "bound", "--n", "4", "--q", "2", "--de", "4", "--dm", "4"}).out.find(
                "e_closed_form") != std::string::npos);
    REQUIRE(run({"bmu", "bound", "--n", "4", "--q", "2"}).out.find("bound") != std::string::npos);
    REQUIRE(run({"constrained", "capacity", "--k", "2", "--q", "2"}).out.substr(0, 7) ==
            "0.69424");
    REQUIRE(run({"mu", "enumerate", "--n", "5", "--q", "2", "--k", "1"}).out == "01111\n");
}

TEST_CASE("balanced encoder through the front end") {
    const std::string payload(221, '0');
    const RunResult enc = run({"bmu", "encode", "--n", "256"}, payload + "\n");
    REQUIRE(enc.code == 0);
    REQUIRE(enc.out.size() == 257);
    const RunResult dec = run({"bmu", "decode", "--n", "256"}, enc.out);
    REQUIRE(dec.out == payload + "\n");
    REQUIRE(run({"bmu", "enumerate", "--n", "6", "--k", "2"}).out == "001011\n001101\n");
}
