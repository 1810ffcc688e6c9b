#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "mucode/errors.hpp"
#include "mucode/numeric.hpp"
#include "mucode/word.hpp"

namespace mucode {

/// Parameters of the k-RLL constraint: no zeros run of length k.
struct RllParams {
    std::size_t n;
    unsigned q;
    std::size_t k;

    RllParams(std::size_t n_, unsigned q_, std::size_t k_) : n(n_), q(q_), k(k_) {
        if (k < 1) throw parameter_error("RLL: k must be at least 1");
        if (q < 2) throw parameter_error("RLL: q must be at least 2");
    }
};

/// Parameters of the (d,k)-WWL constraint: every length-k window weighs >= d.
struct WwlParams {
    std::size_t n;
    unsigned q;
    std::size_t k;
    std::size_t d;

    WwlParams(std::size_t n_, unsigned q_, std::size_t k_, std::size_t d_)
        : n(n_), q(q_), k(k_), d(d_) {
        if (d < 1 || d > k) throw parameter_error("WWL: require 1 <= d <= k");
        if (q < 2) throw parameter_error("WWL: q must be at least 2");
    }
};

struct CapacityEstimate {
    std::size_t k;
    unsigned q;
    double value;  // bits per symbol
    std::string method = "eigenvalue";
};

inline bool is_rll(const Word& a, std::size_t k) {
    if (k < 1) throw parameter_error("is_rll: k must be at least 1");
    return longest_zero_run(a) < k;
}

inline bool is_wwl(const Word& a, std::size_t k, std::size_t d) {
    if (d < 1 || d > k) throw parameter_error("is_wwl: require 1 <= d <= k");
    const std::size_t n = a.size();
    if (n < k) return true;
    std::size_t w = 0;
    for (std::size_t i = 0; i < k; ++i) w += a[i] != 0;
    if (w < d) return false;
    for (std::size_t i = k; i < n; ++i) {
        w += (a[i] != 0);
        w -= (a[i - k] != 0);
        if (w < d) return false;
    }
    return true;
}

/// Exact |A_q(n,k)| by DP over the trailing-zero-run length. One scalar
/// multiplication and one subtraction per position: S_{t+1} = q*S_t - (dying
/// run-(k-1) class), so the whole count is Theta(n) big-integer operations.
inline BigInt count_rll(std::size_t n, unsigned q, std::size_t k, std::size_t max_n = 10000) {
    RllParams params(n, q, k);
    if (n > max_n) throw capacity_error("count_rll: n exceeds the DP ceiling");
    if (n < k) return big_pow(q, n);
    std::vector<BigInt> ring(k, 0);
    ring[0] = 1;  // empty word, trailing run 0
    std::size_t base = 0;  // index of run-length 0
    BigInt total = 1;
    for (std::size_t pos = 0; pos < n; ++pos) {
        // run length r lives at ring[(base + r) % k]; shift by moving base back
        base = (base + k - 1) % k;
        BigInt dying = ring[base];  // was run length k-1
        ring[base] = (q - 1) * total;
        total = q * total - dying;
    }
    return total;
}

/// Exact |A_q(n,k,d)| by DP over the nonzero-indicator pattern of the last
/// k-1 positions (2^(k-1) states). The state space is what limits k.
inline BigInt count_wwl(std::size_t n, unsigned q, std::size_t k, std::size_t d,
                        std::size_t max_k = 24) {
    WwlParams params(n, q, k, d);
    if (k > max_k) throw capacity_error("count_wwl: k exceeds the state-space ceiling");
    if (n < k) return big_pow(q, n);
    const std::size_t bits = k - 1;
    const std::size_t states = std::size_t(1) << bits;
    const std::size_t mask_all = states - 1;
    std::vector<BigInt> dp(states, 0), next(states, 0);
    dp[0] = 1;
    for (std::size_t pos = 1; pos <= n; ++pos) {
        for (auto& v : next) v = 0;
        for (std::size_t m = 0; m < states; ++m) {
            if (dp[m] == 0) continue;
            const std::size_t w = static_cast<std::size_t>(__builtin_popcountll(m));
            for (unsigned bit = 0; bit <= 1; ++bit) {
                if (pos >= k && w + bit < d) continue;
                const std::size_t nm = bits == 0 ? 0 : (((m << 1) | bit) & mask_all);
                if (bit == 0)
                    next[nm] += dp[m];
                else
                    next[nm] += (q - 1) * dp[m];
            }
        }
        std::swap(dp, next);
    }
    BigInt total = 0;
    for (const auto& v : dp) total += v;
    return total;
}

/// Enumerates A_q(n,k) in lexicographic order. Intended for small n.
inline std::vector<Word> enumerate_rll(std::size_t n, unsigned q, std::size_t k) {
    RllParams params(n, q, k);
    std::vector<Word> out;
    std::vector<Symbol> cur(n, 0);
    auto rec = [&](auto&& self, std::size_t pos, std::size_t run) -> void {
        if (run >= k) return;
        if (pos == n) {
            out.emplace_back(cur, q);
            return;
        }
        for (unsigned s = 0; s < q; ++s) {
            cur[pos] = static_cast<Symbol>(s);
            self(self, pos + 1, s == 0 ? run + 1 : 0);
        }
    };
    rec(rec, 0, 0);
    return out;
}

inline std::vector<Word> enumerate_wwl(std::size_t n, unsigned q, std::size_t k, std::size_t d) {
    WwlParams params(n, q, k, d);
    std::vector<Word> out;
    std::vector<Symbol> cur(n, 0);
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos >= k) {
            std::size_t w = 0;
            for (std::size_t i = pos - k; i < pos; ++i) w += cur[i] != 0;
            if (w < d) return;
        }
        if (pos == n) {
            out.emplace_back(cur, q);
            return;
        }
        for (unsigned s = 0; s < q; ++s) {
            cur[pos] = static_cast<Symbol>(s);
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return out;
}

/// Finite-n sandwich on a_q(n,k): the closed-form lower bound
/// q^n ((q-1)/q)^m e^(-2qm/((q-1) q^ceil(k/2))) with m = floor(n/q^(k-1))+1,
/// and the closed-form upper bound q^(n - c3 (n-2k)/q^k). Both are reported
/// as log_q values.
inline BoundReport rll_finite_bounds(std::size_t n, unsigned q, std::size_t k) {
    if (k < 5 || k > n) throw parameter_error("rll_finite_bounds: require 5 <= k <= n");
    const double logq = std::log2(double(q));
    const double logq_e = std::log2(std::exp(1.0)) / logq;  // log_q(e)

    // m = floor(n / q^(k-1)) + 1, exactly
    BigInt denom = big_pow(q, k - 1);
    BigInt m_big = BigInt(static_cast<unsigned long>(n)) / denom + 1;
    const double m = m_big.get_d();

    const double c1 =
        (q - 1) * std::pow(double(q), std::ceil(k / 2.0) - k / 2.0) / (2.0 * double(q));
    const double c2 = m / (double(n) / std::pow(double(q), double(k) - 1));
    const double c3 = logq_e * (q - 1) * (q - 1) / (2.0 * double(q) * double(q));

    // exponent of the exp() factor: 2 q m / ((q-1) q^ceil(k/2)), guarded for big k
    double expo = 0.0;
    const double half_pow_log = std::ceil(k / 2.0) * std::log(double(q));
    if (half_pow_log < 600.0)
        expo = 2.0 * q * m / ((q - 1) * std::exp(half_pow_log));

    const double lower_logq = double(n) + m * (std::log2(double(q - 1)) / logq - 1.0)
                              - expo * logq_e;

    double upper_corr = 0.0;
    if (double(k) * std::log(double(q)) < 600.0)
        upper_corr = c3 * (double(n) - 2.0 * double(k)) / std::pow(double(q), double(k));
    const double upper_logq = double(n) - upper_corr;

    BoundReport rep;
    rep.op = "rll_finite_bounds";
    rep.inputs = {{"n", double(n)}, {"q", double(q)}, {"k", double(k)}};
    rep.values = {{"lower_logq", lower_logq},
                  {"upper_logq", upper_logq},
                  {"c1", c1},
                  {"c2", c2},
                  {"c3", c3}};
    return rep;
}

/// Exact upper bound (q^(2k) - b(k))^floor(n/2k) * q^(n mod 2k) on
/// a_q(n,k,d), with b(k) = q^(k-2d) (q-1)^(2d) (k-2d+1) sum_{i<d} C(k,i).
inline BoundReport wwl_finite_upper_bound(std::size_t n, unsigned q, std::size_t k,
                                          std::size_t d) {
    if (d < 1 || k < 2 * d || k > n)
        throw parameter_error("wwl_finite_upper_bound: require d <= k <= n and k >= 2d");
    BigInt tail_sum = 0;
    for (std::size_t i = 0; i < d; ++i) tail_sum += binomial(k, i);
    BigInt b = big_pow(q, k - 2 * d) * big_pow(q - 1, 2 * d) * BigInt(k - 2 * d + 1) * tail_sum;
    BigInt base = big_pow(q, 2 * k) - b;
    if (base <= 0) throw parameter_error("wwl_finite_upper_bound: degenerate block count");
    BigInt bound;
    mpz_pow_ui(bound.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n / (2 * k)));
    bound *= big_pow(q, n % (2 * k));

    BoundReport rep;
    rep.op = "wwl_finite_upper_bound";
    rep.inputs = {{"n", double(n)}, {"q", double(q)}, {"k", double(k)}, {"d", double(d)}};
    rep.values = {{"bound_log2", log2_big(bound)},
                  {"bound_logq", log2_big(bound) / std::log2(double(q))}};
    rep.exact = {{"bound", bound}, {"b_k", b}};
    rep.commentary =
        "asymptotic form q^(n - C (n-2k) k^(d-1) / q^k) holds for an unnamed constant C > 0; "
        "only this finite-n block bound is computable";
    return rep;
}

/// Capacity of the k-RLL constraint as the log of the spectral radius of the
/// k-state transfer matrix, by power iteration to relative tolerance 1e-12.
inline CapacityEstimate capacity_estimate(std::size_t k, unsigned q) {
    if (k < 1 || k > 20) throw parameter_error("capacity_estimate: require 1 <= k <= 20");
    if (q < 2) throw parameter_error("capacity_estimate: q must be at least 2");
    if (k == 1) return CapacityEstimate{k, q, std::log2(double(q - 1))};
    std::vector<double> v(k, 1.0), w(k, 0.0);
    double lambda = 0.0, prev = -1.0;
    for (int it = 0; it < 100000; ++it) {
        double sum = 0.0;
        for (double x : v) sum += x;
        w[0] = (q - 1) * sum;
        for (std::size_t r = 1; r < k; ++r) w[r] = v[r - 1];
        double norm = 0.0;
        for (double x : w) norm = std::max(norm, x);
        for (double& x : w) x /= norm;
        lambda = norm;
        std::swap(v, w);
        if (prev > 0 && std::abs(lambda - prev) <= 1e-14 * lambda) break;
        prev = lambda;
    }
    return CapacityEstimate{k, q, std::log2(lambda)};
}

// ---------------------------------------------------------------------------
// Zero run-length encoding. Removes every zeros run of length L+1 (where
// L = ceil(log_q cap) is the pointer width) and appends the run's 1-based
// start index as an L-digit pointer followed by a 0. One appended separator
// symbol 1 marks the boundary between the shortened data and the pointer
// list, so the output is exactly one symbol longer than the input.
// ---------------------------------------------------------------------------

inline Word rll_encode(const Word& x, std::size_t cap) {
    if (cap < 2) throw parameter_error("rll_encode: capacity must be at least 2");
    if (x.size() > cap) throw parameter_error("rll_encode: input longer than capacity");
    const unsigned q = x.q();
    const std::size_t L = ceil_log(q, cap);
    std::vector<Symbol> y(x.symbols());
    y.push_back(1);
    std::size_t i = 1, i_end = x.size();
    std::vector<Symbol> pointers;
    while (i + L <= i_end) {
        bool all_zero = true;
        for (std::size_t j = i - 1; j < i + L; ++j)
            if (y[j] != 0) {
                all_zero = false;
                break;
            }
        if (all_zero) {
            y.erase(y.begin() + (i - 1), y.begin() + (i + L));
            Word p = word_from_value(i, q, L);
            pointers.insert(pointers.end(), p.symbols().begin(), p.symbols().end());
            pointers.push_back(0);
            i_end -= L + 1;
        } else {
            ++i;
        }
    }
    y.insert(y.end(), pointers.begin(), pointers.end());
    return Word(std::move(y), q);
}

inline Word rll_decode(const Word& y, std::size_t cap) {
    if (cap < 2) throw parameter_error("rll_decode: capacity must be at least 2");
    if (y.empty()) throw corruption_error("rll_decode: empty input");
    const unsigned q = y.q();
    const std::size_t L = ceil_log(q, cap);
    const std::size_t n_data = y.size() - 1;
    std::vector<Symbol> data(y.symbols());
    std::vector<unsigned long long> runs;  // last removed first
    while (!data.empty() && data.back() == 0) {
        if (data.size() < L + 1) throw corruption_error("rll_decode: truncated pointer");
        data.pop_back();
        Word p(std::vector<Symbol>(data.end() - L, data.end()), q);
        data.erase(data.end() - L, data.end());
        runs.push_back(value_of_word(p));
    }
    if (data.empty() || data.back() != 1)
        throw corruption_error("rll_decode: separator not found");
    data.pop_back();
    for (unsigned long long idx : runs) {
        if (idx == 0) throw corruption_error("rll_decode: pointer index 0");
        if (idx + L > n_data) throw corruption_error("rll_decode: pointer index out of range");
        if (idx > data.size() + 1) throw corruption_error("rll_decode: pointer index out of range");
        data.insert(data.begin() + (idx - 1), L + 1, 0);
    }
    return Word(std::move(data), q);
}

/// Block-split extension: encode blocks of length 2^(target_k - 1) and append
/// a 1 to each encoded block, so the output never has a zeros run of length
/// target_k and the redundancy is exactly two symbols per block.
inline Word rll_encode_blocked(const Word& x, std::size_t target_k) {
    if (x.q() != 2) throw parameter_error("rll_encode_blocked: binary input required");
    if (target_k < 4) throw parameter_error("rll_encode_blocked: require target_k >= 4");
    const std::size_t block = std::size_t(1) << (target_k - 1);
    std::vector<Symbol> out;
    std::size_t off = 0;
    do {
        const std::size_t len = std::min(block, x.size() - off);
        Word enc = rll_encode(x.sub(off + 1, off + len), block);
        out.insert(out.end(), enc.symbols().begin(), enc.symbols().end());
        out.push_back(1);
        off += len;
    } while (off < x.size());
    return Word(std::move(out), 2);
}

inline Word rll_decode_blocked(const Word& y, std::size_t target_k) {
    if (y.q() != 2) throw parameter_error("rll_decode_blocked: binary input required");
    if (target_k < 4) throw parameter_error("rll_decode_blocked: require target_k >= 4");
    const std::size_t block = std::size_t(1) << (target_k - 1);
    const std::size_t chunk = block + 2;
    std::vector<Symbol> out;
    std::size_t off = 0;
    while (off < y.size()) {
        const std::size_t len = std::min(chunk, y.size() - off);
        if (len < 2) throw corruption_error("rll_decode_blocked: truncated chunk");
        Word piece = y.sub(off + 1, off + len);
        if (piece[len - 1] != 1) throw corruption_error("rll_decode_blocked: missing block joiner");
        Word dec = rll_decode(piece.prefix(len - 1), block);
        out.insert(out.end(), dec.symbols().begin(), dec.symbols().end());
        off += len;
    }
    return Word(std::move(out), 2);
}

// ---------------------------------------------------------------------------
// Window weight limited encoding, Eq. (5) widths.
// ---------------------------------------------------------------------------

/// Field widths of the WWL pointer blocks. F(n,d) is the window length the
/// encoder guarantees; c is the minimum integer making the position fields
/// wide enough to hold any in-window index, found by fixed-point iteration.
struct WwlWidths {
    std::size_t f;               // F(n,d)
    std::size_t c;               // the constant C of Eq. (5)
    std::size_t index_width;     // ceil(log_q n), digits of p(i)
    std::size_t position_width;  // ceil(log_q ceil(log_q n)) + c, digits of each t(j)
};

inline WwlWidths wwl_widths(std::size_t n, unsigned q, std::size_t d) {
    if (n < 2) throw parameter_error("wwl_widths: require n >= 2");
    if (d < 1) throw parameter_error("wwl_widths: require d >= 1");
    if (q < 2) throw parameter_error("wwl_widths: q must be at least 2");
    const std::size_t logn = ceil_log(q, n);
    const std::size_t loglogn = ceil_log(q, std::max<std::size_t>(logn, 1));
    std::size_t c = 0;
    std::size_t f = 0;
    for (;; ++c) {
        f = logn + (d - 1) * (loglogn + c) + 2;
        if (loglogn + c >= ceil_log(q, f + 2)) break;
    }
    return WwlWidths{f, c, logn, loglogn + c};
}

inline std::size_t wwl_f(std::size_t n, unsigned q, std::size_t d) {
    return wwl_widths(n, q, d).f;
}

// Window weight limited encoding. Every length-F window of weight < d is
// removed and replaced, at the right end, by a pointer block
// p(i) t(1) ... t(d-1) 0 1 of the same length F: p(i) is the window's
// 1-based start index, t(j) the in-window position of its j-th one (the
// all-ones sentinel when fewer than j ones exist). The scan index rewinds by
// F-1 after each removal. The separator is 1^d, so the output is d symbols
// longer than the input.
//
// Binary input only: the position fields record where the ones sit but not
// symbol values, and the all-ones sentinel is only distinguishable from real
// positions when q = 2.
inline Word wwl_encode(const Word& x, std::size_t cap, std::size_t d) {
    if (x.q() != 2) throw parameter_error("wwl_encode: binary input required");
    if (d < 2) throw parameter_error("wwl_encode: require d >= 2 (use rll_encode for d = 1)");
    if (cap < 2) throw parameter_error("wwl_encode: capacity must be at least 2");
    if (x.size() > cap) throw parameter_error("wwl_encode: input longer than capacity");
    const unsigned q = 2;
    const WwlWidths widths = wwl_widths(cap, q, d);
    const std::size_t F = widths.f;
    const unsigned long long sentinel = (1ULL << widths.position_width) - 1;

    std::vector<Symbol> y(x.symbols());
    y.insert(y.end(), d, 1);
    std::size_t i = 1, i_end = x.size();
    std::vector<Symbol> pointers;
    while (i + F <= i_end + 1) {
        std::size_t w = 0;
        for (std::size_t j = i - 1; j < i + F - 1; ++j) w += y[j] != 0;
        if (w < d) {
            std::vector<std::size_t> ones;
            for (std::size_t j = 0; j < F; ++j)
                if (y[i - 1 + j] != 0) ones.push_back(j + 1);
            y.erase(y.begin() + (i - 1), y.begin() + (i + F - 1));
            Word p = word_from_value(i, q, widths.index_width);
            pointers.insert(pointers.end(), p.symbols().begin(), p.symbols().end());
            for (std::size_t j = 1; j < d; ++j) {
                const unsigned long long v = j <= ones.size() ? ones[j - 1] : sentinel;
                Word t = word_from_value(v, q, widths.position_width);
                pointers.insert(pointers.end(), t.symbols().begin(), t.symbols().end());
            }
            pointers.push_back(0);
            pointers.push_back(1);
            i_end -= F;
            i = (i > F - 1) ? i - F + 1 : 1;
        } else {
            ++i;
        }
    }
    y.insert(y.end(), pointers.begin(), pointers.end());
    return Word(std::move(y), q);
}

inline Word wwl_decode(const Word& y, std::size_t cap, std::size_t d) {
    if (y.q() != 2) throw parameter_error("wwl_decode: binary input required");
    if (d < 2) throw parameter_error("wwl_decode: require d >= 2");
    if (cap < 2) throw parameter_error("wwl_decode: capacity must be at least 2");
    const WwlWidths widths = wwl_widths(cap, 2, d);
    const std::size_t F = widths.f;
    const unsigned long long sentinel = (1ULL << widths.position_width) - 1;
    if (y.size() < d) throw corruption_error("wwl_decode: input shorter than the separator");

    struct Removed {
        unsigned long long index;
        std::vector<std::size_t> ones;
    };
    std::vector<Symbol> data(y.symbols());
    std::vector<Removed> removed;  // last removed first
    while (data.size() >= F && data[data.size() - 2] == 0 && data.back() == 1) {
        std::vector<Symbol> block(data.end() - F, data.end());
        data.erase(data.end() - F, data.end());
        std::size_t off = 0;
        Word p(std::vector<Symbol>(block.begin(), block.begin() + widths.index_width), 2);
        off += widths.index_width;
        Removed r;
        r.index = value_of_word(p);
        if (r.index == 0) throw corruption_error("wwl_decode: pointer index 0");
        bool sentinel_seen = false;
        for (std::size_t j = 1; j < d; ++j) {
            Word t(std::vector<Symbol>(block.begin() + off, block.begin() + off + widths.position_width), 2);
            off += widths.position_width;
            const unsigned long long v = value_of_word(t);
            if (v == sentinel) {
                sentinel_seen = true;
            } else {
                if (sentinel_seen) throw corruption_error("wwl_decode: position after sentinel");
                if (v < 1 || v > F) throw corruption_error("wwl_decode: position out of window");
                if (!r.ones.empty() && v <= r.ones.back())
                    throw corruption_error("wwl_decode: positions not increasing");
                r.ones.push_back(static_cast<std::size_t>(v));
            }
        }
        removed.push_back(std::move(r));
    }
    if (data.size() < d) throw corruption_error("wwl_decode: separator not found");
    for (std::size_t j = 0; j < d; ++j)
        if (data[data.size() - 1 - j] != 1) throw corruption_error("wwl_decode: separator not found");
    data.erase(data.end() - d, data.end());

    for (const Removed& r : removed) {
        if (r.index > data.size() + 1)
            throw corruption_error("wwl_decode: pointer index out of range");
        std::vector<Symbol> window(F, 0);
        for (std::size_t pos : r.ones) window[pos - 1] = 1;
        data.insert(data.begin() + (r.index - 1), window.begin(), window.end());
    }
    return Word(std::move(data), 2);
}

/// Largest block capacity whose F lands within target_k. F(m,d) depends on m
/// only through ceil(log m), so the maximum is a power of two.
inline std::size_t wwl_block_capacity(std::size_t target_k, std::size_t d) {
    std::size_t best = 0;
    for (std::size_t L = 1; L < 48; ++L) {
        const std::size_t m = std::size_t(1) << L;
        if (wwl_f(m, 2, d) <= target_k)
            best = m;
        else if (best != 0)
            break;
    }
    if (best == 0)
        throw parameter_error("wwl_encode_blocked: target_k too small for any block size");
    return best;
}

inline Word wwl_encode_blocked(const Word& x, std::size_t target_k, std::size_t d) {
    if (x.q() != 2) throw parameter_error("wwl_encode_blocked: binary input required");
    if (d < 2) throw parameter_error("wwl_encode_blocked: require d >= 2");
    const std::size_t block = wwl_block_capacity(target_k, d);
    std::vector<Symbol> out;
    std::size_t off = 0;
    do {
        const std::size_t len = std::min(block, x.size() - off);
        Word enc = wwl_encode(x.sub(off + 1, off + len), block, d);
        out.insert(out.end(), enc.symbols().begin(), enc.symbols().end());
        out.insert(out.end(), d, 1);
        off += len;
    } while (off < x.size());
    return Word(std::move(out), 2);
}

inline Word wwl_decode_blocked(const Word& y, std::size_t target_k, std::size_t d) {
    if (y.q() != 2) throw parameter_error("wwl_decode_blocked: binary input required");
    if (d < 2) throw parameter_error("wwl_decode_blocked: require d >= 2");
    const std::size_t block = wwl_block_capacity(target_k, d);
    const std::size_t chunk = block + 2 * d;
    std::vector<Symbol> out;
    std::size_t off = 0;
    while (off < y.size()) {
        const std::size_t len = std::min(chunk, y.size() - off);
        if (len < 2 * d) throw corruption_error("wwl_decode_blocked: truncated chunk");
        Word piece = y.sub(off + 1, off + len);
        for (std::size_t j = 0; j < d; ++j)
            if (piece[len - 1 - j] != 1)
                throw corruption_error("wwl_decode_blocked: missing block joiner");
        Word dec = wwl_decode(piece.prefix(len - d), block, d);
        out.insert(out.end(), dec.symbols().begin(), dec.symbols().end());
        off += len;
    }
    return Word(std::move(out), 2);
}

}  // namespace mucode
