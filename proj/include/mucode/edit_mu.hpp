#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "mucode/constrained.hpp"
#include "mucode/errors.hpp"
#include "mucode/numeric.hpp"
#include "mucode/search.hpp"
#include "mucode/word.hpp"

namespace mucode {

/// VT syndrome: sum of i*a_i over 1-based positions, modulo n+1.
inline unsigned long vt_syndrome(const Word& a) {
    if (a.q() != 2) throw parameter_error("vt_syndrome: binary input required");
    unsigned long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i]) s += i + 1;
    return static_cast<unsigned long>(s % (a.size() + 1));
}

inline std::size_t vt_parity_count(std::size_t n) { return ceil_log(2, n + 1); }

inline std::size_t vt_message_length(std::size_t n) {
    const std::size_t t = vt_parity_count(n);
    if (n < t) throw parameter_error("vt_message_length: n too small");
    return n - t;
}

/// Recovers the unique length-n word of VT(b) whose single-deletion or
/// single-insertion ball contains the received word.
///
/// Deletion: with D = (b - syndrome(received)) mod (n+1) and w the received
/// weight, the deleted bit was 0 iff D <= w; a 0 is reinserted with exactly
/// D ones to its right, a 1 with exactly D - w - 1 zeros to its left.
/// Insertion: each of the n+1 single-symbol deletions of the received word
/// is tested against the syndrome; the survivor must be unique.
inline Word vt_correct(const Word& received, std::size_t n, unsigned long b) {
    if (received.q() != 2) throw parameter_error("vt_correct: binary input required");
    if (b > n) throw parameter_error("vt_correct: residue out of range");
    if (received.size() + 1 == n) {
        unsigned long long s = 0;
        for (std::size_t i = 0; i < received.size(); ++i)
            if (received[i]) s += i + 1;
        const unsigned long long mod = n + 1;
        const unsigned long long D = ((b % mod) + mod - (s % mod)) % mod;
        const std::size_t w = received.weight();
        std::vector<Symbol> c(received.symbols());
        if (D <= w) {
            // insert 0 with D ones to its right
            std::size_t ones = 0, pos = c.size();
            while (ones < D) {
                if (pos == 0) throw decode_failure("vt_correct: inconsistent syndrome");
                --pos;
                ones += c[pos] == 1;
            }
            c.insert(c.begin() + pos, 0);
        } else {
            // insert 1 with D - w - 1 zeros to its left
            const unsigned long long zl = D - w - 1;
            std::size_t zeros = 0, pos = 0;
            while (zeros < zl) {
                if (pos == c.size()) throw decode_failure("vt_correct: inconsistent syndrome");
                zeros += c[pos] == 0;
                ++pos;
            }
            c.insert(c.begin() + pos, 1);
        }
        Word out(std::move(c), 2);
        if (vt_syndrome(out) != b) throw decode_failure("vt_correct: reconstruction failed");
        return out;
    }
    if (received.size() == n + 1) {
        std::set<Word> candidates;
        for (std::size_t i = 0; i < received.size(); ++i) {
            if (i + 1 < received.size() && received[i] == received[i + 1]) continue;
            std::vector<Symbol> c(received.symbols());
            c.erase(c.begin() + i);
            Word cand(std::move(c), 2);
            if (vt_syndrome(cand) == b) candidates.insert(std::move(cand));
        }
        if (candidates.empty()) throw decode_failure("vt_correct: no candidate codeword");
        if (candidates.size() > 1)
            throw decode_failure("vt_correct: ambiguous correction (beyond the error model)");
        return *candidates.begin();
    }
    throw parameter_error("vt_correct: received length must be n-1 or n+1");
}

/// Systematic VT encoding: message bits fill the non-power-of-two positions
/// in order, and the bits at positions 1, 2, 4, ... are the binary
/// decomposition of the residue that brings the syndrome to 0.
inline Word vt_systematic_encode(const Word& x, std::size_t n) {
    if (x.q() != 2) throw parameter_error("vt_systematic_encode: binary input required");
    if (x.size() != vt_message_length(n))
        throw parameter_error("vt_systematic_encode: payload must have length n - ceil(log(n+1))");
    std::vector<Symbol> c(n, 0);
    std::size_t mi = 0;
    unsigned long long s = 0;
    for (std::size_t p = 1; p <= n; ++p) {
        if ((p & (p - 1)) != 0) {
            c[p - 1] = x[mi++];
            if (c[p - 1]) s += p;
        }
    }
    const unsigned long long mod = n + 1;
    unsigned long long need = (mod - (s % mod)) % mod;  // residue the parities must add
    for (std::size_t bit = 0; (std::size_t(1) << bit) <= n; ++bit)
        if ((need >> bit) & 1) c[(std::size_t(1) << bit) - 1] = 1;
    Word out(std::move(c), 2);
    if (vt_syndrome(out) != 0)
        throw corruption_error("vt_systematic_encode: residue decomposition failed");
    return out;
}

inline Word vt_systematic_decode(const Word& y) {
    if (y.q() != 2) throw parameter_error("vt_systematic_decode: binary input required");
    if (vt_syndrome(y) != 0)
        throw corruption_error("vt_systematic_decode: nonzero syndrome (run vt_correct first)");
    std::vector<Symbol> m;
    for (std::size_t p = 1; p <= y.size(); ++p)
        if ((p & (p - 1)) != 0) m.push_back(y[p - 1]);
    return Word(std::move(m), 2);
}

struct EmuWitness {
    enum class Kind { distance, prefix_suffix } kind = Kind::distance;
    std::size_t a_index = 0;
    std::size_t b_index = 0;
    std::size_t i = 0;  // prefix length
    std::size_t j = 0;  // suffix length
};

struct EmuCheck {
    bool ok = true;
    EmuWitness witness{};
    explicit operator bool() const { return ok; }
};

/// (d_e, d_m)-EMU check. Condition (2) compares every prefix length i with
/// every suffix length j; one LCS table per suffix covers all prefixes at
/// once, so a pair costs O(n^3).
inline EmuCheck is_emu_code(const Codebook& code, std::size_t de, std::size_t dm) {
    validate_codebook(code);
    if (code.empty()) return {};
    const std::size_t n = code[0].size();
    for (std::size_t a = 0; a < code.size(); ++a)
        for (std::size_t b = a + 1; b < code.size(); ++b)
            if (edit_distance(code[a], code[b]) < de)
                return {false, {EmuWitness::Kind::distance, a, b, 0, 0}};
    std::vector<std::size_t> prev(n + 1), cur(n + 1);
    for (std::size_t a = 0; a < code.size(); ++a)
        for (std::size_t b = 0; b < code.size(); ++b) {
            const Word& wa = code[a];
            const Word& wb = code[b];
            for (std::size_t j = 1; j < n; ++j) {
                // lcs(wa.prefix(i), wb.suffix(j)) for all i in one sweep
                std::fill(prev.begin(), prev.end(), 0);
                for (std::size_t i = 1; i < n; ++i) {
                    cur[0] = 0;
                    for (std::size_t t = 1; t <= j; ++t) {
                        if (wa[i - 1] == wb[n - j + t - 1])
                            cur[t] = prev[t - 1] + 1;
                        else
                            cur[t] = std::max(prev[t], cur[t - 1]);
                    }
                    std::swap(prev, cur);
                    const std::size_t lcs = prev[j];
                    const std::size_t dist = i + j - 2 * lcs;
                    const bool interior = i >= dm && i + dm <= n && j >= dm && j + dm <= n;
                    const std::size_t need =
                        interior ? dm : std::min(std::min(i, j), std::min(n - i, n - j));
                    if (dist < need)
                        return {false, {EmuWitness::Kind::prefix_suffix, a, b, i, j}};
                }
            }
        }
    return {};
}

// ---------------------------------------------------------------------------
// Construction 3: outer frame 0^k 1^(d_m) c 1^(d_m) with k = F(n, d_m) + 1,
// inner code c = systematic VT over the window-weight-limited payload with
// two 1^(d_m) blocks pinned near positions ceil(log n) and 2 ceil(log n) to
// cover the parity-dense prefix.
// ---------------------------------------------------------------------------

struct C3Layout {
    std::size_t n, dm;
    std::size_t k;          // F(n, d_m) + 1
    std::size_t inner_len;  // |c| = n - k - 2 d_m
    std::size_t msg_len;    // inner_len - ceil(log(inner_len + 1))
    std::size_t payload_len;
    std::size_t block1;  // 1-based start of the first pinned block in c
    std::size_t block2;  // 1-based start of the second pinned block in c
    std::size_t i1;      // payload symbols before block 1
    std::size_t i2;      // payload symbols before block 2
};

inline C3Layout c3_layout(std::size_t n, std::size_t dm) {
    if (dm < 1) throw parameter_error("c3_layout: require d_m >= 1");
    C3Layout lay;
    lay.n = n;
    lay.dm = dm;
    lay.k = wwl_f(n, 2, dm) + 1;
    if (n < lay.k + 2 * dm + 4) throw parameter_error("c3_layout: n too small for the frame");
    lay.inner_len = n - lay.k - 2 * dm;
    const std::size_t t = vt_parity_count(lay.inner_len);
    if (lay.inner_len < t + 2 * dm + 1 + dm)
        throw parameter_error("c3_layout: n too small for the inner code");
    lay.msg_len = lay.inner_len - t;
    lay.payload_len = lay.msg_len - 2 * dm - dm;

    auto is_power = [](std::size_t p) { return p != 0 && (p & (p - 1)) == 0; };
    auto place_block = [&](std::size_t target_end) -> std::size_t {
        // smallest start >= target_end - dm + 1 whose d_m-window avoids the
        // VT parity positions
        std::size_t start = target_end >= dm ? target_end - dm + 1 : 1;
        for (;; ++start) {
            if (start + dm - 1 > lay.inner_len)
                throw parameter_error("c3_layout: no room for the pinned ones blocks");
            bool clear = true;
            for (std::size_t j = 0; j < dm; ++j)
                if (is_power(start + j)) {
                    clear = false;
                    break;
                }
            if (clear) return start;
        }
    };
    const std::size_t L = ceil_log(2, n);
    lay.block1 = place_block(L);
    std::size_t b2 = place_block(2 * L);
    if (b2 <= lay.block1 + dm - 1) b2 = place_block(lay.block1 + 2 * dm);
    lay.block2 = b2;
    if (lay.block2 + dm - 1 > lay.inner_len)
        throw parameter_error("c3_layout: no room for the pinned ones blocks");

    auto ewwl_index = [&](std::size_t c_pos) {  // message symbols before c_pos
        std::size_t count = 0;
        for (std::size_t p = 1; p < c_pos; ++p)
            if (!is_power(p)) ++count;
        return count;
    };
    lay.i1 = ewwl_index(lay.block1);
    lay.i2 = ewwl_index(lay.block2) - dm;
    if (lay.i2 < lay.i1 || lay.i2 > lay.payload_len + dm)
        throw parameter_error("c3_layout: pinned blocks do not fit the payload");
    return lay;
}

inline std::size_t c3_payload_length(std::size_t n, std::size_t dm) {
    return c3_layout(n, dm).payload_len;
}

namespace detail {

inline Word c3_assemble(const Word& x, const C3Layout& lay) {
    const std::size_t dm = lay.dm;
    const Word w = dm == 1 ? rll_encode(x, lay.n) : wwl_encode(x, lay.n, dm);
    Word ewwl = w.prefix(lay.i1) + Word::ones(dm, 2) + w.sub(lay.i1 + 1, lay.i2) +
                Word::ones(dm, 2) + w.sub(lay.i2 + 1, w.size());
    Word c = vt_systematic_encode(ewwl, lay.inner_len);
    for (std::size_t j = 0; j < dm; ++j)
        if (c[lay.block1 - 1 + j] != 1 || c[lay.block2 - 1 + j] != 1)
            throw corruption_error("c3_encode: pinned block landed on a parity position");
    if (!is_wwl(c, lay.k, dm))
        throw parameter_error("c3_encode: inner code misses the window-weight bound at this n");
    return Word::zeros(lay.k, 2) + Word::ones(dm, 2) + c + Word::ones(dm, 2);
}

inline Word c3_strict_decode(const Word& y, const C3Layout& lay) {
    const std::size_t n = lay.n;
    const std::size_t dm = lay.dm;
    if (y.size() != n) throw corruption_error("c3_decode: length mismatch");
    for (std::size_t t = 0; t < lay.k; ++t)
        if (y[t] != 0) throw corruption_error("c3_decode: frame prefix mismatch");
    for (std::size_t t = 0; t < dm; ++t) {
        if (y[lay.k + t] != 1) throw corruption_error("c3_decode: separator mismatch");
        if (y[n - 1 - t] != 1) throw corruption_error("c3_decode: separator mismatch");
    }
    const Word c = y.sub(lay.k + dm + 1, n - dm);
    const Word ewwl = vt_systematic_decode(c);  // validates the syndrome
    for (std::size_t j = 0; j < dm; ++j) {
        if (ewwl[lay.i1 + j] != 1) throw corruption_error("c3_decode: missing ones block");
        if (ewwl[lay.i2 + dm + j] != 1) throw corruption_error("c3_decode: missing ones block");
    }
    Word w = ewwl.prefix(lay.i1) + ewwl.sub(lay.i1 + dm + 1, lay.i2 + dm) +
             ewwl.sub(lay.i2 + 2 * dm + 1, ewwl.size());
    return dm == 1 ? rll_decode(w, n) : wwl_decode(w, n, dm);
}

}  // namespace detail

inline Word c3_encode(const Word& x, std::size_t n, std::size_t dm) {
    if (x.q() != 2) throw parameter_error("c3_encode: binary input required");
    const C3Layout lay = c3_layout(n, dm);
    if (x.size() != lay.payload_len)
        throw parameter_error("c3_encode: payload must have length " +
                              std::to_string(lay.payload_len));
    return detail::c3_assemble(x, lay);
}

/// Decodes a Construction 3 word. With allow_one_indel set, a received word
/// whose length is off by one is repaired by trying every single-symbol
/// reinsertion (or deletion) and strict-parsing the candidate; the codeword
/// set has minimum edit distance 4, so at most one codeword is within edit
/// distance 1 of the received word and any parse that succeeds recovers it.
inline Word c3_decode(const Word& y, std::size_t n, std::size_t dm, bool allow_one_indel = false) {
    if (y.q() != 2) throw parameter_error("c3_decode: binary input required");
    const C3Layout lay = c3_layout(n, dm);
    if (y.size() == n) return detail::c3_strict_decode(y, lay);
    if (!allow_one_indel)
        throw decode_failure("c3_decode: length mismatch (indel correction not enabled)");
    if (y.size() + 1 == n) {
        for (std::size_t pos = 0; pos <= y.size(); ++pos)
            for (Symbol s = 0; s <= 1; ++s) {
                if (pos < y.size() && y[pos] == s) continue;  // same word as inserting after
                std::vector<Symbol> cand(y.symbols());
                cand.insert(cand.begin() + pos, s);
                try {
                    return detail::c3_strict_decode(Word(std::move(cand), 2), lay);
                } catch (const corruption_error&) {
                }
            }
        throw decode_failure("c3_decode: no single reinsertion parses");
    }
    if (y.size() == n + 1) {
        for (std::size_t pos = 0; pos < y.size(); ++pos) {
            if (pos + 1 < y.size() && y[pos] == y[pos + 1]) continue;
            std::vector<Symbol> cand(y.symbols());
            cand.erase(cand.begin() + pos);
            try {
                return detail::c3_strict_decode(Word(std::move(cand), 2), lay);
            } catch (const corruption_error&) {
            }
        }
        throw decode_failure("c3_decode: no single deletion parses");
    }
    throw decode_failure("c3_decode: length deviates by more than one");
}

/// Cyclic-shift counting bound A_EMU(n,q,d_e,d_m) <= E(n,q,d)/floor(n/d_m) with
/// d = min(d_e, d_m). E is instantiated by the closed form for d in {3,4}
/// (asymptotic; small n can exceed it), by q^n for d <= 2, and by exact
/// search within the exhaustive budget.
inline BoundReport emu_upper_bound(std::size_t n, unsigned q, std::size_t de, std::size_t dm,
                                   std::size_t exact_budget = 4096) {
    if (dm < 1 || dm > n) throw parameter_error("emu_upper_bound: require 1 <= d_m <= n");
    if (q < 2) throw parameter_error("emu_upper_bound: q must be at least 2");
    const std::size_t d = std::min(de, dm);
    const double divisor = double(n / dm);
    BoundReport rep;
    rep.op = "emu_upper_bound";
    rep.inputs = {{"n", double(n)}, {"q", double(q)}, {"de", double(de)}, {"dm", double(dm)}};
    rep.values = {{"d", double(d)}, {"divisor", divisor}};

    const double qn = std::pow(double(q), double(n));
    if (d <= 2) {
        rep.values.emplace_back("e_closed_form", qn);
        rep.values.emplace_back("bound_closed_form", qn / divisor);
        rep.commentary = "minimum edit distance 2 is automatic for distinct equal-length words";
    } else if (d <= 4) {
        const double e4 = (qn - q) / ((q - 1.0) * n);
        rep.values.emplace_back("e_closed_form", e4);
        rep.values.emplace_back("bound_closed_form", e4 / divisor);
        rep.commentary =
            "closed form (q^n - q)/((q-1)n) is asymptotic; exact maxima can exceed it at "
            "small n";
    } else {
        rep.commentary = "no closed form for minimum edit distance above 4";
    }

    if (qn <= double(exact_budget)) {
        const std::size_t count = static_cast<std::size_t>(qn + 0.5);
        Codebook words;
        for (std::size_t v = 0; v < count; ++v) words.push_back(word_from_value(v, q, n));
        CompatGraph g(count);
        for (std::size_t a = 0; a < count; ++a)
            for (std::size_t b = a + 1; b < count; ++b)
                if (edit_distance(words[a], words[b]) >= d) g.add_edge(a, b);
        try {
            const std::size_t e_exact = max_clique(g).size();
            rep.values.emplace_back("e_exact", double(e_exact));
            rep.values.emplace_back("bound_exact", double(e_exact) / divisor);
        } catch (const capacity_error&) {
            if (!rep.commentary.empty()) rep.commentary += "; ";
            rep.commentary += "exact E omitted: search budget exceeded";
        }
    }
    return rep;
}

}  // namespace mucode
