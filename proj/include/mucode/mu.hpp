#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mucode/constrained.hpp"
#include "mucode/errors.hpp"
#include "mucode/numeric.hpp"
#include "mucode/search.hpp"
#include "mucode/word.hpp"

namespace mucode {

/// Ordered mutual-uncorrelatedness predicate: no non-trivial prefix of a
/// equals the same-length suffix of b.
inline bool are_mu_pair(const Word& a, const Word& b) {
    if (a.q() != b.q()) throw parameter_error("are_mu_pair: alphabet mismatch");
    if (a.size() != b.size()) throw parameter_error("are_mu_pair: length mismatch");
    const std::size_t n = a.size();
    for (std::size_t i = 1; i < n; ++i) {
        bool equal = true;
        for (std::size_t j = 0; j < i; ++j)
            if (a[j] != b[n - i + j]) {
                equal = false;
                break;
            }
        if (equal) return false;
    }
    return true;
}

struct MuWitness {
    std::size_t a_index = 0;  // word whose prefix matches
    std::size_t b_index = 0;  // word whose suffix matches
    std::size_t overlap = 0;  // matching length i
};

struct MuCheck {
    bool ok = true;
    MuWitness witness{};
    explicit operator bool() const { return ok; }
};

/// Checks the MU property over all ordered pairs including self-pairs.
/// Set-based: for each overlap length the prefix set and suffix set must be
/// disjoint, which is equivalent to the pairwise definition and linear in
/// the codebook size per overlap.
inline MuCheck is_mu_code(const Codebook& code) {
    validate_codebook(code);
    if (code.empty()) return {};
    const std::size_t n = code[0].size();
    for (std::size_t i = 1; i + 1 <= n; ++i) {
        std::unordered_map<std::string, std::size_t> suffixes;
        for (std::size_t w = 0; w < code.size(); ++w)
            suffixes.emplace(code[w].suffix(i).str(), w);
        for (std::size_t w = 0; w < code.size(); ++w) {
            auto it = suffixes.find(code[w].prefix(i).str());
            if (it != suffixes.end()) return {false, {w, it->second, i}};
        }
    }
    return {};
}

/// Construction 1: 0^k s m t with s, t nonzero and m a k-RLL word.
inline Codebook c1_enumerate(std::size_t n, unsigned q, std::size_t k) {
    if (k < 1 || k + 2 > n) throw parameter_error("c1_enumerate: require 1 <= k < n-1");
    Codebook out;
    const Word head = Word::zeros(k, q);
    const std::vector<Word> interiors = enumerate_rll(n - k - 2, q, k);
    for (unsigned s = 1; s < q; ++s)
        for (const Word& m : interiors)
            for (unsigned t = 1; t < q; ++t) {
                Word w = head + Word({static_cast<Symbol>(s)}, q) + m +
                         Word({static_cast<Symbol>(t)}, q);
                out.push_back(std::move(w));
            }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::size_t c1_payload_length(std::size_t n) {
    const std::size_t red = ceil_log(2, n) + 4;
    if (n < red + 1) throw parameter_error("c1_encode: n too small");
    return n - red;
}

/// Construction 1 encoder with k = ceil(log n) + 1; the interior is the zero
/// run-length encoding of the payload, so membership in C1(n,2,k) is
/// automatic and total redundancy is ceil(log n) + 4 bits.
inline Word c1_encode(const Word& x, std::size_t n) {
    if (x.q() != 2) throw parameter_error("c1_encode: binary input required");
    if (x.size() != c1_payload_length(n))
        throw parameter_error("c1_encode: payload must have length n - ceil(log n) - 4");
    const std::size_t k = ceil_log(2, n) + 1;
    Word y = Word::zeros(k, 2) + Word::ones(1, 2) + rll_encode(x, n) + Word::ones(1, 2);
    return y;
}

inline Word c1_decode(const Word& y, std::size_t n) {
    if (y.q() != 2) throw parameter_error("c1_decode: binary input required");
    if (y.size() != n) throw parameter_error("c1_decode: length mismatch");
    const std::size_t k = ceil_log(2, n) + 1;
    for (std::size_t i = 0; i < k; ++i)
        if (y[i] != 0) throw corruption_error("c1_decode: frame prefix mismatch");
    if (y[k] != 1 || y[n - 1] != 1) throw corruption_error("c1_decode: frame marker mismatch");
    return rll_decode(y.sub(k + 2, n - 1), n);
}

/// Levenshtein's cardinality bound ((n-1)/n)^(n-1) q^n / n and the weaker
/// closed form q^n / (e (n-1)).
inline BoundReport mu_upper_bound(std::size_t n, unsigned q) {
    if (n < 2) throw parameter_error("mu_upper_bound: require n >= 2");
    if (q < 2) throw parameter_error("mu_upper_bound: q must be at least 2");
    const double log2q = std::log2(double(q));
    const double lev_log2 =
        (double(n) - 1) * (std::log2(double(n) - 1) - std::log2(double(n))) + double(n) * log2q -
        std::log2(double(n));
    const double weak_log2 =
        double(n) * log2q - std::log2(std::exp(1.0)) - std::log2(double(n) - 1);
    BoundReport rep;
    rep.op = "mu_upper_bound";
    rep.inputs = {{"n", double(n)}, {"q", double(q)}};
    rep.values = {{"levenshtein", std::exp2(lev_log2)},
                  {"levenshtein_log2", lev_log2},
                  {"weak", std::exp2(weak_log2)},
                  {"weak_log2", weak_log2}};
    return rep;
}

struct ExactSearchResult {
    std::size_t size = 0;
    Codebook witness;
};

/// Exact maximum MU code by branch and bound over the self-uncorrelated
/// candidates in lexicographic order. Deterministic: the witness is the
/// lexicographically least maximum code.
inline ExactSearchResult mu_exact_search(std::size_t n, unsigned q,
                                         std::size_t node_budget = 50'000'000) {
    if (n < 1) throw parameter_error("mu_exact_search: require n >= 1");
    double total = std::pow(double(q), double(n));
    if (total > 65536.0) throw capacity_error("mu_exact_search: q^n exceeds 2^16");
    const std::size_t count = static_cast<std::size_t>(total + 0.5);

    Codebook candidates;
    for (std::size_t v = 0; v < count; ++v) {
        Word w = word_from_value(v, q, n);
        if (are_mu_pair(w, w)) candidates.push_back(std::move(w));
    }
    CompatGraph g(candidates.size());
    for (std::size_t a = 0; a < candidates.size(); ++a)
        for (std::size_t b = a + 1; b < candidates.size(); ++b)
            if (are_mu_pair(candidates[a], candidates[b]) &&
                are_mu_pair(candidates[b], candidates[a]))
                g.add_edge(a, b);
    std::vector<std::size_t> clique = max_clique(g, node_budget);
    ExactSearchResult res;
    res.size = clique.size();
    for (std::size_t idx : clique) res.witness.push_back(candidates[idx]);
    return res;
}

/// One point of the Construction 1 asymptotic analysis:
/// f(delta, z) = delta - z - log_q(e) (q-1) q^(delta-z-1) and the normalized
/// cardinality (q-1)^2/q^2 * q^f, the n-free factor of |C1| * n / q^n.
struct AnalysisPoint {
    unsigned q = 2;
    double delta = 0.0;
    int z = 0;
    double f_value = 0.0;
    double normalized_cardinality = 0.0;
};

inline double c1_f(unsigned q, double delta, int z) {
    const double logq_e = 1.0 / std::log(double(q));
    return delta - z - logq_e * (q - 1) * std::pow(double(q), delta - z - 1);
}

inline AnalysisPoint c1_asymptotic(unsigned q, int z, double delta) {
    if (q < 2) throw parameter_error("c1_asymptotic: q must be at least 2");
    if (!(delta > -1.0 - 1e-12 && delta <= 1e-12))
        throw parameter_error("c1_asymptotic: delta must lie in (-1, 0]");
    AnalysisPoint p;
    p.q = q;
    p.delta = delta;
    p.z = z;
    p.f_value = c1_f(q, delta, z);
    p.normalized_cardinality =
        std::pow((double(q) - 1) / q, 2.0) * std::pow(double(q), p.f_value);
    return p;
}

/// The z in {-2,-1,0} maximizing f(delta, z), in closed form: for q = 2 the
/// switch sits at delta = log2(ln 2), for q > 2 at -log_q((q-1)^2/(q ln q)).
inline int c1_best_z(unsigned q, double delta) {
    if (q == 2) return delta <= std::log2(std::log(2.0)) ? -2 : -1;
    const double delta0 =
        -std::log((double(q) - 1) * (double(q) - 1) / (double(q) * std::log(double(q)))) /
        std::log(double(q));
    return delta <= delta0 ? -1 : 0;
}

inline double c1_f_max(unsigned q, double delta) { return c1_f(q, delta, c1_best_z(q, delta)); }

/// Reference line of bound (2): q^(-q/(q-1)) ln q.
inline double mu_bound2(unsigned q) {
    return std::pow(double(q), -double(q) / (double(q) - 1)) * std::log(double(q));
}

/// Reference line of bound (3): (q-1)/(q e).
inline double mu_bound3(unsigned q) { return (double(q) - 1) / (double(q) * std::exp(1.0)); }

/// Curve data behind the cardinality figures: grid points over (-1, 0] for
/// each requested z.
inline std::vector<AnalysisPoint> c1_curve(unsigned q, const std::vector<int>& zs,
                                           std::size_t grid) {
    if (grid < 1) throw parameter_error("c1_curve: grid must be positive");
    std::vector<AnalysisPoint> out;
    out.reserve(zs.size() * grid);
    for (int z : zs)
        for (std::size_t j = 1; j <= grid; ++j) {
            const double delta = -1.0 + double(j) / double(grid);
            out.push_back(c1_asymptotic(q, z, delta));
        }
    return out;
}

}  // namespace mucode
