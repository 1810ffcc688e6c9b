#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include <CLI11.hpp>

#include "mucode/balanced_mu.hpp"
#include "mucode/constrained.hpp"
#include "mucode/distance_mu.hpp"
#include "mucode/edit_mu.hpp"
#include "mucode/errors.hpp"
#include "mucode/mu.hpp"
#include "mucode/related.hpp"
#include "mucode/word.hpp"

namespace mucode::cli {

/// Flags shared across the subcommand tree.
struct RunConfig {
    std::string format = "text";  // text | csv
    unsigned long seed = 0;
    bool dna = false;
    unsigned q_override = 0;  // 0: infer from input
    std::size_t threads = 1;  // capped by MUCODEC_THREADS
};

inline std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::string(buf);
}

inline Word parse_word_line(const std::string& line, const RunConfig& cfg) {
    if (cfg.dna) return from_dna(DnaWord::parse(line));
    return Word::parse(line, cfg.q_override);
}

inline std::string format_word(const Word& w, const RunConfig& cfg) {
    if (cfg.dna) return to_dna(w).bases;
    return w.str();
}

/// Newline-delimited digit strings (or ACGT with --dna); uniform length,
/// duplicates rejected.
inline Codebook read_codebook(std::istream& in, const RunConfig& cfg) {
    Codebook code;
    std::unordered_set<std::string> seen;
    std::string line;
    unsigned q = cfg.q_override;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        if (!seen.insert(line).second) throw parameter_error("duplicate codeword: " + line);
        Word w = cfg.dna ? from_dna(DnaWord::parse(line)) : Word::parse(line, 0);
        q = std::max(q, w.q());
        code.push_back(std::move(w));
    }
    if (!cfg.dna) {
        // normalize the alphabet across the codebook
        for (Word& w : code) w = Word(w.symbols(), q);
    }
    validate_codebook(code);
    return code;
}

inline void write_codebook(std::ostream& out, const Codebook& code, const RunConfig& cfg) {
    for (const Word& w : code) out << format_word(w, cfg) << '\n';
}

inline void print_report(std::ostream& out, const BoundReport& rep, const RunConfig& cfg) {
    if (cfg.format == "csv") {
        std::string header, row;
        for (const auto& [k, v] : rep.inputs) {
            header += k + ',';
            row += fmt_double(v) + ',';
        }
        for (const auto& [k, v] : rep.values) {
            header += k + ',';
            row += fmt_double(v) + ',';
        }
        for (const auto& [k, v] : rep.exact) {
            header += k + ',';
            row += v.get_str() + ',';
        }
        if (!header.empty()) {
            header.pop_back();
            row.pop_back();
        }
        out << header << '\n' << row << '\n';
    } else {
        out << rep.op << '\n';
        for (const auto& [k, v] : rep.inputs) out << "  " << k << " = " << fmt_double(v) << '\n';
        for (const auto& [k, v] : rep.values) out << "  " << k << " = " << fmt_double(v) << '\n';
        for (const auto& [k, v] : rep.exact) out << "  " << k << " = " << v.get_str() << '\n';
        if (!rep.commentary.empty()) out << "  # " << rep.commentary << '\n';
    }
}

/// Parses argv, routes to the module operations, and maps the library's
/// error classes to exit codes: 0 success, 1 parameter/capacity (E_PARAM,
/// E_CAPACITY), 2 corruption or decode failure (E_CORRUPT).
inline int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                    std::ostream& err) {
    CLI::App app{"mucodec: constrained and mutually uncorrelated code toolkit"};
    app.require_subcommand(1);
    RunConfig cfg;
    if (const char* env = std::getenv("MUCODEC_THREADS")) {
        cfg.threads = std::max(1ul, std::strtoul(env, nullptr, 10));
    }
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "csv"}));
    app.add_option("--seed", cfg.seed, "seed for randomized sweeps");
    app.add_flag("--dna", cfg.dna, "words on stdin/stdout are ACGT strings");
    app.add_option("--q", cfg.q_override, "alphabet size override for parsed words");

    std::size_t n = 0, k = 0, d = 0, dh = 1, dm = 1, de = 2, grid = 200, cap = 0;
    unsigned q = 2;
    unsigned long b_residue = 0;
    std::string alg = "rll", z_list = "-2,-1,0", h_file;
    bool correct_indel = false;
    std::size_t rho = 0;

    // constrained ------------------------------------------------------------
    auto* constrained = app.add_subcommand("constrained", "RLL/WWL counting, bounds, encoding");
    auto* c_count = constrained->add_subcommand("count", "exact constrained count");
    c_count->add_option("--n", n)->required();
    c_count->add_option("--q", q);
    c_count->add_option("--k", k)->required();
    c_count->add_option("--d", d);
    auto* c_encode = constrained->add_subcommand("encode", "encode words from stdin");
    c_encode->add_option("--alg", alg)->check(CLI::IsMember({"rll", "wwl"}));
    c_encode->add_option("--cap", cap)->required();
    c_encode->add_option("--d", d);
    auto* c_decode = constrained->add_subcommand("decode", "decode words from stdin");
    c_decode->add_option("--alg", alg)->check(CLI::IsMember({"rll", "wwl"}));
    c_decode->add_option("--cap", cap)->required();
    c_decode->add_option("--d", d);
    auto* c_bounds = constrained->add_subcommand("bounds", "finite-n bounds");
    c_bounds->add_option("--n", n)->required();
    c_bounds->add_option("--q", q);
    c_bounds->add_option("--k", k)->required();
    c_bounds->add_option("--d", d);
    auto* c_capacity = constrained->add_subcommand("capacity", "transfer-matrix capacity");
    c_capacity->add_option("--k", k)->required();
    c_capacity->add_option("--q", q);

    // mu ----------------------------------------------------------------------
    auto* mu = app.add_subcommand("mu", "plain MU codes");
    auto* mu_check = mu->add_subcommand("check", "check the MU property of a codebook on stdin");
    auto* mu_encode_cmd = mu->add_subcommand("encode", "Construction 1 encode");
    mu_encode_cmd->add_option("--n", n)->required();
    auto* mu_decode_cmd = mu->add_subcommand("decode", "Construction 1 decode");
    mu_decode_cmd->add_option("--n", n)->required();
    auto* mu_enum = mu->add_subcommand("enumerate", "list C1(n,q,k)");
    mu_enum->add_option("--n", n)->required();
    mu_enum->add_option("--q", q);
    mu_enum->add_option("--k", k)->required();
    auto* mu_bound_cmd = mu->add_subcommand("bound", "cardinality upper bound");
    mu_bound_cmd->add_option("--n", n)->required();
    mu_bound_cmd->add_option("--q", q);
    auto* mu_curves = mu->add_subcommand("curves", "normalized cardinality curve export");
    mu_curves->add_option("--q", q);
    mu_curves->add_option("--z", z_list, "comma-separated z values");
    mu_curves->add_option("--grid", grid, "grid points per z");

    // dmu ---------------------------------------------------------------------
    auto* dmu = app.add_subcommand("dmu", "(d_h,d_m)-MU codes");
    auto* dmu_encode_cmd = dmu->add_subcommand("encode", "Construction 2 encode");
    dmu_encode_cmd->add_option("--n", n)->required();
    dmu_encode_cmd->add_option("--dh", dh)->required();
    dmu_encode_cmd->add_option("--dm", dm)->required();
    auto* dmu_decode_cmd = dmu->add_subcommand("decode", "Construction 2 decode");
    dmu_decode_cmd->add_option("--n", n)->required();
    dmu_decode_cmd->add_option("--dh", dh)->required();
    dmu_decode_cmd->add_option("--dm", dm)->required();
    auto* dmu_check = dmu->add_subcommand("check", "check the (d_h,d_m)-MU property");
    dmu_check->add_option("--dh", dh)->required();
    dmu_check->add_option("--dm", dm)->required();
    auto* dmu_bound_cmd = dmu->add_subcommand("bound", "cardinality upper bound");
    dmu_bound_cmd->add_option("--n", n)->required();
    dmu_bound_cmd->add_option("--q", q);
    dmu_bound_cmd->add_option("--dh", dh)->required();
    dmu_bound_cmd->add_option("--dm", dm)->required();
    auto* dmu_auto = dmu->add_subcommand("autocyclic", "d-auto-cyclic marker vector");
    dmu_auto->add_option("--d", d)->required();

    // emu / vt ------------------------------------------------------------------
    auto* emu = app.add_subcommand("emu", "edit-distance MU codes");
    auto* emu_encode_cmd = emu->add_subcommand("encode", "Construction 3 encode");
    emu_encode_cmd->add_option("--n", n)->required();
    emu_encode_cmd->add_option("--dm", dm)->required();
    auto* emu_decode_cmd = emu->add_subcommand("decode", "Construction 3 decode");
    emu_decode_cmd->add_option("--n", n)->required();
    emu_decode_cmd->add_option("--dm", dm)->required();
    emu_decode_cmd->add_flag("--correct-indel", correct_indel);
    auto* emu_check = emu->add_subcommand("check", "check the (d_e,d_m)-EMU property");
    emu_check->add_option("--de", de)->required();
    emu_check->add_option("--dm", dm)->required();
    auto* emu_bound_cmd = emu->add_subcommand("bound", "cardinality upper bound");
    emu_bound_cmd->add_option("--n", n)->required();
    emu_bound_cmd->add_option("--q", q);
    emu_bound_cmd->add_option("--de", de)->required();
    emu_bound_cmd->add_option("--dm", dm)->required();

    auto* vt = app.add_subcommand("vt", "Varshamov-Tenengolts codes");
    auto* vt_correct_cmd = vt->add_subcommand("correct", "single-indel correction");
    vt_correct_cmd->add_option("--n", n)->required();
    vt_correct_cmd->add_option("--b", b_residue);

    // bmu -------------------------------------------------------------------
    auto* bmu = app.add_subcommand("bmu", "balanced MU codes");
    auto* bmu_encode_cmd = bmu->add_subcommand("encode", "extended Knuth encode");
    bmu_encode_cmd->add_option("--n", n)->required();
    auto* bmu_decode_cmd = bmu->add_subcommand("decode", "extended Knuth decode");
    bmu_decode_cmd->add_option("--n", n)->required();
    auto* bmu_bound_cmd = bmu->add_subcommand("bound", "balanced MU cardinality bound");
    bmu_bound_cmd->add_option("--n", n)->required();
    bmu_bound_cmd->add_option("--q", q);
    auto* bmu_enum = bmu->add_subcommand("enumerate", "list C4(n,k)");
    bmu_enum->add_option("--n", n)->required();
    bmu_enum->add_option("--k", k)->required();

    // cf / ps ------------------------------------------------------------------
    auto* cf = app.add_subcommand("cf", "comma-free codes");
    auto* cf_check = cf->add_subcommand("check", "comma-free check of stdin codebook");
    cf_check->add_option("--d", d);
    cf_check->add_option("--rho", rho);
    auto* cf_bound_cmd = cf->add_subcommand("bound", "Moebius counting bound");
    cf_bound_cmd->add_option("--n", n)->required();
    cf_bound_cmd->add_option("--q", q);

    auto* ps = app.add_subcommand("ps", "prefix synchronized codes");
    auto* ps_check = ps->add_subcommand("check", "prefix-synchronization check");
    ps_check->add_option("--H", h_file, "file holding the marker set")->required();
    auto* rho_opt = ps_check->add_option("--rho", rho, "index for the distance variant");

    // global flags remain usable after a subcommand name
    auto enable_fallthrough = [](CLI::App* node, auto&& self) -> void {
        for (CLI::App* sub : node->get_subcommands({})) {
            sub->fallthrough();
            self(sub, self);
        }
    };
    enable_fallthrough(&app, enable_fallthrough);

    std::vector<const char*> argv;
    argv.push_back("mucodec");
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "E_PARAM: " << e.what() << '\n';
        return 1;
    }

    try {
        if (*c_count) {
            if (c_count->count("--d"))
                out << count_wwl(n, q, k, d).get_str() << '\n';
            else
                out << count_rll(n, q, k).get_str() << '\n';
        } else if (*c_encode || *c_decode) {
            const bool enc = static_cast<bool>(*c_encode);
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                const Word wrd = parse_word_line(line, cfg);
                Word res({}, 2);
                if (alg == "rll")
                    res = enc ? rll_encode(wrd, cap) : rll_decode(wrd, cap);
                else
                    res = enc ? wwl_encode(wrd, cap, d) : wwl_decode(wrd, cap, d);
                out << format_word(res, cfg) << '\n';
            }
        } else if (*c_bounds) {
            const BoundReport rep = c_bounds->count("--d") ? wwl_finite_upper_bound(n, q, k, d)
                                                           : rll_finite_bounds(n, q, k);
            print_report(out, rep, cfg);
        } else if (*c_capacity) {
            const CapacityEstimate est = capacity_estimate(k, q);
            out << fmt_double(est.value) << '\n';
        } else if (*mu_check) {
            const Codebook code = read_codebook(in, cfg);
            const MuCheck res = is_mu_code(code);
            if (res.ok)
                out << "ok\n";
            else
                out << "violation prefix_word=" << res.witness.a_index
                    << " suffix_word=" << res.witness.b_index << " overlap=" << res.witness.overlap
                    << '\n';
        } else if (*mu_encode_cmd || *mu_decode_cmd) {
            const bool enc = static_cast<bool>(*mu_encode_cmd);
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                const Word wrd = parse_word_line(line, cfg);
                out << format_word(enc ? c1_encode(wrd, n) : c1_decode(wrd, n), cfg) << '\n';
            }
        } else if (*mu_enum) {
            write_codebook(out, c1_enumerate(n, q, k), cfg);
        } else if (*mu_bound_cmd) {
            print_report(out, mu_upper_bound(n, q), cfg);
        } else if (*mu_curves) {
            std::vector<int> zs;
            std::stringstream ss(z_list);
            std::string tok;
            while (std::getline(ss, tok, ',')) zs.push_back(std::stoi(tok));
            out << "q,delta,z,f_value,normalized_cardinality,bound2,bound3\n";
            for (const AnalysisPoint& p : c1_curve(q, zs, grid))
                out << p.q << ',' << fmt_double(p.delta) << ',' << p.z << ','
                    << fmt_double(p.f_value) << ',' << fmt_double(p.normalized_cardinality) << ','
                    << fmt_double(mu_bound2(q)) << ',' << fmt_double(mu_bound3(q)) << '\n';
        } else if (*dmu_encode_cmd || *dmu_decode_cmd) {
            const bool enc = static_cast<bool>(*dmu_encode_cmd);
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                const Word wrd = parse_word_line(line, cfg);
                out << format_word(enc ? c2_encode(wrd, n, dh, dm) : c2_decode(wrd, n, dh, dm),
                                   cfg)
                    << '\n';
            }
        } else if (*dmu_check) {
            const Codebook code = read_codebook(in, cfg);
            const DmuCheck res = is_dmu_code(code, dh, dm);
            if (res.ok)
                out << "ok\n";
            else
                out << "violation kind="
                    << (res.witness.kind == DmuWitness::Kind::distance ? "distance"
                                                                       : "prefix_suffix")
                    << " a=" << res.witness.a_index << " b=" << res.witness.b_index
                    << " i=" << res.witness.overlap << '\n';
        } else if (*dmu_bound_cmd) {
            print_report(out, dmu_upper_bound(n, q, dh, dm), cfg);
        } else if (*dmu_auto) {
            out << auto_cyclic_vector(d).u.str() << '\n';
        } else if (*emu_encode_cmd || *emu_decode_cmd) {
            const bool enc = static_cast<bool>(*emu_encode_cmd);
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                const Word wrd = parse_word_line(line, cfg);
                out << format_word(
                           enc ? c3_encode(wrd, n, dm) : c3_decode(wrd, n, dm, correct_indel), cfg)
                    << '\n';
            }
        } else if (*emu_check) {
            const Codebook code = read_codebook(in, cfg);
            const EmuCheck res = is_emu_code(code, de, dm);
            if (res.ok)
                out << "ok\n";
            else
                out << "violation kind="
                    << (res.witness.kind == EmuWitness::Kind::distance ? "distance"
                                                                       : "prefix_suffix")
                    << " a=" << res.witness.a_index << " b=" << res.witness.b_index
                    << " i=" << res.witness.i << " j=" << res.witness.j << '\n';
        } else if (*emu_bound_cmd) {
            print_report(out, emu_upper_bound(n, q, de, dm), cfg);
        } else if (*vt_correct_cmd) {
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                const Word wrd = parse_word_line(line, cfg);
                out << format_word(vt_correct(wrd, n, b_residue), cfg) << '\n';
            }
        } else if (*bmu_encode_cmd || *bmu_decode_cmd) {
            const bool enc = static_cast<bool>(*bmu_encode_cmd);
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                const Word wrd = parse_word_line(line, cfg);
                out << format_word(enc ? bmu_encode(wrd, n) : bmu_decode(wrd, n), cfg) << '\n';
            }
        } else if (*bmu_bound_cmd) {
            print_report(out, bmu_upper_bound(n, q), cfg);
        } else if (*bmu_enum) {
            write_codebook(out, c4_enumerate(n, k), cfg);
        } else if (*cf_check) {
            const Codebook code = read_codebook(in, cfg);
            const CfCheck res = (cf_check->count("--d") || cf_check->count("--rho"))
                                    ? is_d_rho_comma_free(code, d, rho)
                                    : is_comma_free(code);
            if (res.ok)
                out << "ok\n";
            else
                out << "violation a=" << res.witness.a_index << " b=" << res.witness.b_index
                    << " i=" << res.witness.i << " window=" << res.witness.window.str() << '\n';
        } else if (*cf_bound_cmd) {
            out << comma_free_bound(n, q).get_str() << '\n';
        } else if (*ps_check) {
            const Codebook code = read_codebook(in, cfg);
            std::ifstream hf(h_file);
            if (!hf) throw parameter_error("cannot open marker file: " + h_file);
            const Codebook markers = read_codebook(hf, cfg);
            const CfCheck res = rho_opt->count()
                                    ? is_prefix_synchronized_indexed(code, markers, rho)
                                    : is_prefix_synchronized(code, markers);
            if (res.ok)
                out << "ok\n";
            else
                out << "violation a=" << res.witness.a_index << " h=" << res.witness.b_index
                    << " i=" << res.witness.i << " window=" << res.witness.window.str() << '\n';
        } else {
            err << "E_PARAM: unknown subcommand\n";
            return 1;
        }
    } catch (const parameter_error& e) {
        err << "E_PARAM: " << e.what() << '\n';
        return 1;
    } catch (const capacity_error& e) {
        err << "E_CAPACITY: " << e.what() << '\n';
        return 1;
    } catch (const corruption_error& e) {
        err << "E_CORRUPT: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace mucode::cli
