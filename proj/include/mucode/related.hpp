#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "mucode/errors.hpp"
#include "mucode/numeric.hpp"
#include "mucode/word.hpp"

namespace mucode {

struct CfWitness {
    std::size_t a_index = 0;
    std::size_t b_index = 0;
    std::size_t i = 0;  // window start in [2, n]
    Word window;
};

struct CfCheck {
    bool ok = true;
    CfWitness witness{};
    explicit operator bool() const { return ok; }
};

/// Comma-free check: no interior window of any ordered concatenation ab
/// (self-pairs included) is itself a codeword. Window starts range over
/// [2, n]; the boundary occurrences at 1 and n+1 are the codewords.
inline CfCheck is_comma_free(const Codebook& code) {
    validate_codebook(code);
    if (code.empty()) return {};
    const std::size_t n = code[0].size();
    std::unordered_map<std::string, std::size_t> members;
    for (std::size_t w = 0; w < code.size(); ++w) members.emplace(code[w].str(), w);
    for (std::size_t a = 0; a < code.size(); ++a)
        for (std::size_t b = 0; b < code.size(); ++b) {
            const Word ab = code[a] + code[b];
            for (std::size_t i = 2; i <= n; ++i) {
                const Word window = ab.sub(i, i + n - 1);
                if (members.count(window.str()))
                    return {false, {a, b, i, window}};
            }
        }
    return {};
}

inline int mobius(unsigned long m) {
    if (m == 0) throw parameter_error("mobius: undefined at 0");
    int mu = 1;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return 0;
            mu = -mu;
        }
    }
    if (m > 1) mu = -mu;
    return mu;
}

/// (1/n) sum over divisors d of n of mu(d) q^(n/d); always an integer.
inline BigInt comma_free_bound(std::size_t n, unsigned q) {
    if (n < 1) throw parameter_error("comma_free_bound: require n >= 1");
    if (q < 2) throw parameter_error("comma_free_bound: q must be at least 2");
    BigInt sum = 0;
    for (std::size_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        const int mu = mobius(d);
        if (mu == 0) continue;
        sum += mu * big_pow(q, n / d);
    }
    if (sum % BigInt(static_cast<unsigned long>(n)) != 0)
        throw corruption_error("comma_free_bound: necklace sum not divisible by n");
    return sum / BigInt(static_cast<unsigned long>(n));
}

/// (d, rho)-comma-free: minimum pairwise Hamming distance d and every
/// interior window of every ordered concatenation at distance >= rho from
/// every codeword.
inline CfCheck is_d_rho_comma_free(const Codebook& code, std::size_t d, std::size_t rho) {
    validate_codebook(code);
    if (code.empty()) return {};
    const std::size_t n = code[0].size();
    for (std::size_t a = 0; a < code.size(); ++a)
        for (std::size_t b = a + 1; b < code.size(); ++b)
            if (hamming_distance(code[a], code[b]) < d)
                return {false, {a, b, 0, code[b]}};
    for (std::size_t a = 0; a < code.size(); ++a)
        for (std::size_t b = 0; b < code.size(); ++b) {
            const Word ab = code[a] + code[b];
            for (std::size_t i = 2; i <= n; ++i) {
                const Word window = ab.sub(i, i + n - 1);
                for (const Word& c : code)
                    if (hamming_distance(window, c) < rho)
                        return {false, {a, b, i, window}};
            }
        }
    return {};
}

/// Prefix synchronized: for every codeword a and marker h, the word ah
/// contains members of H only in the first and last m positions.
inline CfCheck is_prefix_synchronized(const Codebook& code, const Codebook& markers) {
    validate_codebook(code);
    validate_codebook(markers);
    if (code.empty() || markers.empty()) return {};
    const std::size_t n = code[0].size();
    const std::size_t m = markers[0].size();
    if (m > n) throw parameter_error("is_prefix_synchronized: markers longer than codewords");
    std::unordered_map<std::string, std::size_t> marker_set;
    for (std::size_t h = 0; h < markers.size(); ++h) marker_set.emplace(markers[h].str(), h);
    for (std::size_t a = 0; a < code.size(); ++a)
        for (std::size_t h = 0; h < markers.size(); ++h) {
            const Word ah = code[a] + markers[h];
            for (std::size_t i = 2; i <= n; ++i) {
                const Word window = ah.sub(i, i + m - 1);
                if (marker_set.count(window.str()))
                    return {false, {a, h, i, window}};
            }
        }
    return {};
}

/// Index-rho variant: every interior window of ah at Hamming distance >= rho
/// from h.
inline CfCheck is_prefix_synchronized_indexed(const Codebook& code, const Codebook& markers,
                                              std::size_t rho) {
    validate_codebook(code);
    validate_codebook(markers);
    if (code.empty() || markers.empty()) return {};
    const std::size_t n = code[0].size();
    const std::size_t m = markers[0].size();
    if (m > n) throw parameter_error("is_prefix_synchronized_indexed: markers longer than codewords");
    for (std::size_t a = 0; a < code.size(); ++a)
        for (std::size_t h = 0; h < markers.size(); ++h) {
            const Word ah = code[a] + markers[h];
            for (std::size_t i = 2; i <= n; ++i) {
                const Word window = ah.sub(i, i + m - 1);
                if (hamming_distance(window, markers[h]) < rho)
                    return {false, {a, h, i, window}};
            }
        }
    return {};
}

/// Exact maximum comma-free code by depth-first search with incremental
/// violation bookkeeping. Intended for toy instances (the membership
/// constraint couples word triples, so this is not a clique search).
inline std::pair<std::size_t, Codebook> comma_free_exact_search(std::size_t n, unsigned q,
                                                                std::size_t budget = 1 << 20) {
    if (n < 1) throw parameter_error("comma_free_exact_search: require n >= 1");
    double total = std::pow(double(q), double(n));
    if (total > 4096.0) throw capacity_error("comma_free_exact_search: q^n exceeds 2^12");
    const std::size_t count = static_cast<std::size_t>(total + 0.5);
    Codebook words;
    for (std::size_t v = 0; v < count; ++v) words.push_back(word_from_value(v, q, n));

    // window id sets per ordered pair
    std::vector<std::vector<std::size_t>> windows(count * count);
    for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = 0; b < count; ++b) {
            const Word ab = words[a] + words[b];
            auto& list = windows[a * count + b];
            for (std::size_t i = 2; i <= n; ++i)
                list.push_back(static_cast<std::size_t>(value_of_word(ab.sub(i, i + n - 1))));
        }

    std::vector<std::size_t> chosen, best;
    std::vector<char> in_chosen(count, 0);
    std::size_t nodes = 0;
    auto conflicts = [&](std::size_t x) {
        // every pair involving x must have windows disjoint from chosen + {x},
        // and no existing pair's window may equal x
        auto window_hits_set = [&](std::size_t a, std::size_t b) {
            for (std::size_t wid : windows[a * count + b])
                if (wid == x || in_chosen[wid]) return true;
            return false;
        };
        if (window_hits_set(x, x)) return true;
        for (std::size_t s : chosen) {
            if (window_hits_set(x, s) || window_hits_set(s, x)) return true;
            for (std::size_t t : chosen)
                for (std::size_t wid : windows[s * count + t])
                    if (wid == x) return true;
        }
        return false;
    };
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (++nodes > budget) throw capacity_error("comma_free_exact_search: budget exceeded");
        if (chosen.size() > best.size()) best = chosen;
        if (chosen.size() + (count - from) <= best.size()) return;
        for (std::size_t x = from; x < count; ++x) {
            if (conflicts(x)) continue;
            chosen.push_back(x);
            in_chosen[x] = 1;
            self(self, x + 1);
            in_chosen[x] = 0;
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    Codebook witness;
    for (std::size_t idx : best) witness.push_back(words[idx]);
    return {best.size(), witness};
}

}  // namespace mucode
