#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "mucode/constrained.hpp"
#include "mucode/errors.hpp"
#include "mucode/numeric.hpp"
#include "mucode/word.hpp"

namespace mucode {

/// Binary: weight n/2. q-ary (q even): exactly n/2 symbols in the lower half
/// of the alphabet.
inline bool is_balanced(const Word& a) {
    if (a.size() % 2 != 0) throw parameter_error("is_balanced: length must be even");
    if (a.q() % 2 != 0) throw parameter_error("is_balanced: alphabet size must be even");
    const unsigned half = a.q() / 2;
    std::size_t lower = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < half) ++lower;
    return lower == a.size() / 2;
}

/// Construction 4 membership: 0^k 1 c 1 with w_H(c) = n/2 - 2 and no zeros
/// run of length k inside c. Balance is re-verified explicitly rather than
/// inferred from the weight target.
inline bool c4_membership(const Word& a, std::size_t k) {
    if (a.q() != 2) throw parameter_error("c4_membership: binary input required");
    const std::size_t n = a.size();
    if (n % 2 != 0 || k < 1 || k + 2 > n) return false;
    for (std::size_t i = 0; i < k; ++i)
        if (a[i] != 0) return false;
    if (a[k] != 1 || a[n - 1] != 1) return false;
    const Word c = a.sub(k + 2, n - 1);
    if (c.weight() != n / 2 - 2) return false;
    if (!is_rll(c, k)) return false;
    return is_balanced(a);
}

inline Codebook c4_enumerate(std::size_t n, std::size_t k) {
    if (n % 2 != 0) throw parameter_error("c4_enumerate: n must be even");
    if (k < 1 || k + 2 > n) throw parameter_error("c4_enumerate: require 1 <= k < n-1");
    if (n / 2 < 2) throw parameter_error("c4_enumerate: n too small");
    Codebook out;
    const Word head = Word::zeros(k, 2) + Word::ones(1, 2);
    for (const Word& c : enumerate_rll(n - k - 2, 2, k))
        if (c.weight() == n / 2 - 2) out.push_back(head + c + Word::ones(1, 2));
    return out;
}

/// Exact |C4(n,k)| by DP over (weight, trailing zero run). Rolling run rings
/// keep it at two big-integer operations per position and weight.
inline BigInt c4_count(std::size_t n, std::size_t k) {
    if (n % 2 != 0) throw parameter_error("c4_count: n must be even");
    if (k < 1 || k + 2 > n) throw parameter_error("c4_count: require 1 <= k < n-1");
    const std::size_t m = n - k - 2;
    const std::size_t target = n / 2 - 2;
    if (target > m) return 0;
    // ring[w] holds the last k per-age counts for weight w; S[w] their sum
    std::vector<std::vector<BigInt>> ring(target + 1, std::vector<BigInt>(k, 0));
    std::vector<BigInt> S(target + 1, 0);
    std::size_t head = 0;
    ring[0][0] = 1;
    S[0] = 1;
    for (std::size_t pos = 0; pos < m; ++pos) {
        const std::size_t new_head = (head + k - 1) % k;
        for (std::size_t w = target + 1; w-- > 0;) {
            BigInt dying = ring[w][new_head];  // run reached length k
            BigInt born = (w > 0) ? S[w - 1] : BigInt(0);
            ring[w][new_head] = born;
            S[w] += born - dying;
        }
        head = new_head;
    }
    return S[target];
}

/// Exact cardinality bound binom(n, n/2) (q/2)^n / n and its Stirling form
/// 2 q^n / (n sqrt(2 pi n)).
inline BoundReport bmu_upper_bound(std::size_t n, unsigned q) {
    if (n % 2 != 0 || n < 2) throw parameter_error("bmu_upper_bound: n must be even");
    if (q % 2 != 0) throw parameter_error("bmu_upper_bound: q must be even");
    BigInt num = binomial(n, n / 2) * big_pow(q / 2, n);
    const double bound_log2 = log2_big(num) - std::log2(double(n));
    const double asym_log2 = 1.0 + double(n) * std::log2(double(q)) - std::log2(double(n)) -
                             0.5 * std::log2(2.0 * M_PI * double(n));
    BoundReport rep;
    rep.op = "bmu_upper_bound";
    rep.inputs = {{"n", double(n)}, {"q", double(q)}};
    rep.values = {{"bound", std::exp2(bound_log2)},
                  {"bound_log2", bound_log2},
                  {"asymptotic_log2", asym_log2}};
    rep.exact = {{"bound_numerator", num}, {"bound_denominator", BigInt(n)}};
    return rep;
}

/// Construction 4 cardinality lower bound C 2^n/(n sqrt(n)) at k = log n + a,
/// C = (2^a - 1)/(2^(2a+1) sqrt(2 pi)), with the exact DP count alongside
/// when requested.
inline BoundReport c4_lower_bound(std::size_t n, std::size_t a, bool with_exact_count = true) {
    if (n < 2 || (n & (n - 1)) != 0)
        throw parameter_error("c4_lower_bound: n must be a power of two");
    if (a < 1) throw parameter_error("c4_lower_bound: require a >= 1");
    const std::size_t logn = ceil_log(2, n);
    const std::size_t k = logn + a;
    const double C = (std::exp2(double(a)) - 1.0) /
                     (std::exp2(2.0 * double(a) + 1.0) * std::sqrt(2.0 * M_PI));
    const double bound_log2 = std::log2(C) + double(n) - 1.5 * std::log2(double(n));

    std::size_t argmax_a = 1;
    double best = 0.0;
    for (std::size_t cand = 1; cand <= 8; ++cand) {
        const double v = (std::exp2(double(cand)) - 1.0) / std::exp2(2.0 * double(cand) + 1.0);
        if (v > best) {
            best = v;
            argmax_a = cand;
        }
    }

    BoundReport rep;
    rep.op = "c4_lower_bound";
    rep.inputs = {{"n", double(n)}, {"a", double(a)}};
    rep.values = {{"C", C},
                  {"bound_log2", bound_log2},
                  {"k", double(k)},
                  {"argmax_a", double(argmax_a)}};
    if (with_exact_count && k + 2 <= n) {
        BigInt exact = c4_count(n, k);
        rep.values.emplace_back("exact_log2", exact > 0 ? log2_big(exact) : -1.0);
        rep.exact.emplace_back("exact_count", exact);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Extended Knuth encoding for balanced MU codes.
//
// Field widths are pinned by the redundancy identity
//   n - n' = 2 log n + log log n + 2 logloglog n + 14
// against the layout
//   |y| = |encoded payload| + |0^(log n + 3) 1| + 2 + { 2 + W + 4  (branch A)
//                                                     { l + |z| + 2 (branch B)
// which forces the index field width W = log n + loglog n + 2 logloglog n + 1.
// Admissible n are powers of two with log n a power of two and
// log n + loglog n odd; the parity condition is what makes the Knuth index
// exist (the tail-flip walk must be able to hit an even balance target) and
// makes W even so the index field can be balanced. logloglog n is taken with
// a floor, which is what the preamble count works out to at n = 256.
// ---------------------------------------------------------------------------

struct BmuLayout {
    std::size_t n;
    std::size_t logn, loglogn, logloglogn;
    std::size_t redundancy;
    std::size_t payload_len;  // n'
    std::size_t v_len;        // n' + log n + 5
    std::size_t w_len;        // v_len + 2
    std::size_t index_width;  // W
    std::size_t base_width;   // W - 2, the balanced word the 10-insertion extends
};

inline bool bmu_admissible(std::size_t n) {
    if (n < 256 || (n & (n - 1)) != 0) return false;
    const std::size_t m = ceil_log(2, n);
    if ((m & (m - 1)) != 0) return false;
    const std::size_t j = ceil_log(2, m);
    return (m + j) % 2 == 1;
}

inline BmuLayout bmu_layout(std::size_t n) {
    if (!bmu_admissible(n))
        throw parameter_error(
            "bmu_layout: admissible n are powers of two with log n a power of two and "
            "log n + loglog n odd (smallest: 256)");
    BmuLayout lay;
    lay.n = n;
    lay.logn = ceil_log(2, n);
    lay.loglogn = ceil_log(2, lay.logn);
    lay.logloglogn = static_cast<std::size_t>(std::floor(std::log2(double(lay.loglogn))));
    lay.redundancy = 2 * lay.logn + lay.loglogn + 2 * lay.logloglogn + 14;
    if (n <= lay.redundancy) throw parameter_error("bmu_layout: n too small");
    lay.payload_len = n - lay.redundancy;
    lay.v_len = lay.payload_len + lay.logn + 5;
    lay.w_len = lay.v_len + 2;
    lay.index_width = lay.logn + lay.loglogn + 2 * lay.logloglogn + 1;
    lay.base_width = lay.index_width - 2;
    if (lay.v_len % 2 != 0 || lay.index_width % 2 != 0)
        throw corruption_error("bmu_layout: parity bookkeeping violated");
    return lay;
}

namespace detail {

inline unsigned long long balanced_count(std::size_t width) {
    BigInt b = binomial(width, width / 2);
    if (!b.fits_ulong_p()) throw capacity_error("balanced ranking width too large");
    return b.get_ui();
}

/// r-th balanced word of the given (even) width in lexicographic order.
inline Word balanced_unrank(unsigned long long r, std::size_t width) {
    std::size_t ones = width / 2;
    std::vector<Symbol> out;
    out.reserve(width);
    for (std::size_t pos = 0; pos < width; ++pos) {
        const std::size_t rest = width - pos - 1;
        const unsigned long long with_zero =
            ones <= rest ? binomial(rest, ones).get_ui() : 0;
        if (r < with_zero) {
            out.push_back(0);
        } else {
            r -= with_zero;
            out.push_back(1);
            if (ones == 0) throw corruption_error("balanced_unrank: rank out of range");
            --ones;
        }
    }
    if (ones != 0) throw corruption_error("balanced_unrank: rank out of range");
    return Word(std::move(out), 2);
}

inline unsigned long long balanced_rank(const Word& w) {
    std::size_t ones = w.size() / 2;
    unsigned long long r = 0;
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
        const std::size_t rest = w.size() - pos - 1;
        if (w[pos] == 1) {
            if (ones <= rest) r += binomial(rest, ones).get_ui();
            if (ones == 0) throw corruption_error("balanced_rank: not balanced");
            --ones;
        }
    }
    return r;
}

inline Word prefix_xor(const Word& x) {
    std::vector<Symbol> v(x.symbols());
    for (std::size_t i = 1; i < v.size(); ++i) v[i] ^= v[i - 1];
    return Word(std::move(v), 2);
}

inline Word prefix_xor_inverse(const Word& v) {
    std::vector<Symbol> x(v.symbols());
    for (std::size_t i = x.size(); i-- > 1;) x[i] ^= x[i - 1];
    return Word(std::move(x), 2);
}

/// Least i in [0, |v|] with v_1^i complement(v)_(i+1)^|v| balanced. Exists
/// whenever |v| is even: un-flipping position i changes the weight by
/// 2 v_i - 1, so the walk moves by one per step and sweeps from the
/// complement's weight to the word's own weight.
inline std::size_t knuth_index(const Word& v) {
    const std::size_t len = v.size();
    long long w = static_cast<long long>(len - v.weight());
    const long long target = static_cast<long long>(len / 2);
    if (w == target) return 0;
    for (std::size_t i = 1; i <= len; ++i) {
        w += v[i - 1] == 1 ? 1 : -1;
        if (w == target) return i;
    }
    throw corruption_error("knuth_index: no balancing index (odd length?)");
}

inline Word tail_flip(const Word& v, std::size_t i) {
    return v.prefix(i) + v.sub(i + 1, v.size()).complemented();
}

/// Deterministic filler: 0 (01)^((m-2)/2) 0, weight m/2 - 1, runs at most 2.
inline Word bmu_filler(std::size_t m) {
    if (m < 2 || m % 2 != 0) throw corruption_error("bmu_filler: infeasible length");
    std::vector<Symbol> z;
    z.reserve(m);
    z.push_back(0);
    for (std::size_t t = 0; t < (m - 2) / 2; ++t) {
        z.push_back(0);
        z.push_back(1);
    }
    z.push_back(0);
    return Word(std::move(z), 2);
}

}  // namespace detail

/// Fixed-width balanced representation of an index: the rank-i balanced word
/// of width W-2 with the pair 10 inserted after position log n. Balanced,
/// injective, and free of zeros runs of length log n.
inline Word balanced_index_repr(unsigned long long i, std::size_t n) {
    const BmuLayout lay = bmu_layout(n);
    if (i >= detail::balanced_count(lay.base_width))
        throw parameter_error("balanced_index_repr: index out of range for the width");
    Word base = detail::balanced_unrank(i, lay.base_width);
    return base.prefix(lay.logn) + Word({1, 0}, 2) + base.sub(lay.logn + 1, base.size());
}

inline unsigned long long balanced_index_unrepr(const Word& p, std::size_t n) {
    const BmuLayout lay = bmu_layout(n);
    if (p.size() != lay.index_width)
        throw corruption_error("balanced_index_unrepr: wrong field width");
    if (p[lay.logn] != 1 || p[lay.logn + 1] != 0)
        throw corruption_error("balanced_index_unrepr: missing 10 insertion");
    Word base = p.prefix(lay.logn) + p.sub(lay.logn + 3, p.size());
    return detail::balanced_rank(base);
}

/// Extended Knuth encoder. The output is balanced, begins 0^(log n + 3) 1,
/// ends in 1, and its body avoids zeros runs of length log n + 3; the first
/// pass is the zero run-length encoder, the second the prefix-sum transform
/// that also caps ones runs, then Knuth balancing with the three-branch
/// suffix bookkeeping.
inline Word bmu_encode(const Word& x, std::size_t n) {
    if (x.q() != 2) throw parameter_error("bmu_encode: binary input required");
    const BmuLayout lay = bmu_layout(n);
    if (x.size() != lay.payload_len)
        throw parameter_error("bmu_encode: payload must have length " +
                              std::to_string(lay.payload_len));
    const std::size_t Ln = lay.logn;

    const Word e = rll_encode(x, n);  // runs <= log n
    const Word v = Word::zeros(Ln + 3, 2) + Word::ones(1, 2) + detail::prefix_xor(e);
    if (v.size() != lay.v_len) throw corruption_error("bmu_encode: length bookkeeping");

    const std::size_t i1 = detail::knuth_index(v);
    Word w = (2 * i1 > Ln + 4 && i1 <= Ln + 4)
                 ? detail::tail_flip(v, Ln + 4) + Word({0, 1}, 2)
                 : v + Word({1, 0}, 2);
    const std::size_t i2 = detail::knuth_index(w);

    if (i2 > Ln + 4) {
        // branch A: store the index in a balanced field
        Word flipped = detail::tail_flip(w, i2);
        Word y = flipped.prefix(i2) + Word::ones(1, 2) + flipped.sub(i2 + 1, flipped.size()) +
                 Word::ones(1, 2) + balanced_index_repr(i2, n) + Word({0, 0, 0, 1}, 2);
        if (y.size() != n) throw corruption_error("bmu_encode: branch A length bookkeeping");
        return y;
    }
    // branch B: the imbalance is small enough to absorb with a ones run
    const std::size_t zeros = w.size() - w.weight();
    if (zeros < w.weight()) throw corruption_error("bmu_encode: negative imbalance in branch B");
    const std::size_t ell = zeros - w.weight();
    const std::size_t fill = lay.index_width + 4 - ell;
    Word y = w + Word::ones(ell, 2) + detail::bmu_filler(fill) + Word::ones(2, 2);
    if (y.size() != n) throw corruption_error("bmu_encode: branch B length bookkeeping");
    return y;
}

inline Word bmu_decode(const Word& y, std::size_t n) {
    if (y.q() != 2) throw parameter_error("bmu_decode: binary input required");
    const BmuLayout lay = bmu_layout(n);
    if (y.size() != n) throw parameter_error("bmu_decode: length mismatch");
    const std::size_t Ln = lay.logn;
    for (std::size_t t = 0; t < Ln + 3; ++t)
        if (y[t] != 0) throw corruption_error("bmu_decode: frame prefix mismatch");
    if (y[Ln + 3] != 1) throw corruption_error("bmu_decode: frame prefix mismatch");

    Word w = Word({}, 2);
    if (y[n - 2] == 0 && y[n - 1] == 1) {
        // branch A, tail 0001
        if (y[n - 4] != 0 || y[n - 3] != 0)
            throw corruption_error("bmu_decode: branch A tail mismatch");
        const Word p = y.sub(n - 3 - lay.index_width, n - 4);
        const unsigned long long i2 = balanced_index_unrepr(p, n);
        if (i2 <= Ln + 4 || i2 > lay.w_len)
            throw corruption_error("bmu_decode: index out of range");
        if (y[i2] != 1 || y[lay.w_len + 1] != 1)
            throw corruption_error("bmu_decode: separator mismatch");
        w = y.prefix(i2) +
            y.sub(i2 + 2, lay.w_len + 1).complemented();
    } else if (y[n - 2] == 1 && y[n - 1] == 1) {
        // branch B
        w = y.prefix(lay.w_len);
        std::size_t ell = 0;
        while (lay.w_len + ell < n && y[lay.w_len + ell] == 1) ++ell;
        const std::size_t fill = lay.index_width + 4 >= ell ? lay.index_width + 4 - ell : 0;
        if (ell + fill + 2 != n - lay.w_len)
            throw corruption_error("bmu_decode: branch B tail mismatch");
        const Word z = y.sub(lay.w_len + ell + 1, n - 2);
        if (z != detail::bmu_filler(fill)) throw corruption_error("bmu_decode: filler mismatch");
    } else {
        throw corruption_error("bmu_decode: unrecognized tail");
    }

    Word v = Word({}, 2);
    if (w[w.size() - 2] == 1 && w[w.size() - 1] == 0) {
        v = w.prefix(w.size() - 2);
    } else if (w[w.size() - 2] == 0 && w[w.size() - 1] == 1) {
        v = w.prefix(Ln + 4) + w.sub(Ln + 5, w.size() - 2).complemented();
    } else {
        throw corruption_error("bmu_decode: unrecognized inner tail");
    }
    if (v.size() != lay.v_len) throw corruption_error("bmu_decode: length bookkeeping");
    for (std::size_t t = 0; t < Ln + 3; ++t)
        if (v[t] != 0) throw corruption_error("bmu_decode: inner prefix mismatch");
    if (v[Ln + 3] != 1) throw corruption_error("bmu_decode: inner prefix mismatch");
    const Word e = detail::prefix_xor_inverse(v.sub(Ln + 5, v.size()));
    return rll_decode(e, n);
}

/// Half-alphabet lift of the q-ary remark: each binary symbol picks the
/// alphabet half, the extra word picks the value within the half. Projection
/// back to the binary word is exact, so balance and mutual uncorrelatedness
/// transfer from the binary core.
inline Word bmu_lift(const Word& binary, const Word& extra, unsigned q) {
    if (binary.q() != 2) throw parameter_error("bmu_lift: binary core required");
    if (q % 2 != 0 || q < 2) throw parameter_error("bmu_lift: q must be even");
    if (extra.size() != binary.size() || extra.q() != q / 2)
        throw parameter_error("bmu_lift: extra word must match length over alphabet q/2");
    std::vector<Symbol> s(binary.size());
    for (std::size_t i = 0; i < binary.size(); ++i)
        s[i] = static_cast<Symbol>(binary[i] * (q / 2) + extra[i]);
    return Word(std::move(s), q);
}

inline std::pair<Word, Word> bmu_unlift(const Word& w) {
    if (w.q() % 2 != 0) throw parameter_error("bmu_unlift: q must be even");
    const unsigned half = w.q() / 2;
    std::vector<Symbol> b(w.size()), e(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        b[i] = w[i] >= half;
        e[i] = static_cast<Symbol>(w[i] % half);
    }
    return {Word(std::move(b), 2), Word(std::move(e), half)};
}

}  // namespace mucode
