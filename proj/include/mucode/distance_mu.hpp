#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "mucode/constrained.hpp"
#include "mucode/errors.hpp"
#include "mucode/numeric.hpp"
#include "mucode/search.hpp"
#include "mucode/word.hpp"

namespace mucode {

/// d-auto-cyclic marker vector of length d*ceil(log d) + d: u = 1^d u_0 ...
/// u_(ceil(log d)-1) where u_i is the length-d prefix of (1^(2^i) 0^(2^i))
/// repeated.
struct AutoCyclicSeed {
    std::size_t d;
    Word u;
};

inline bool is_auto_cyclic(const Word& u, std::size_t d) {
    if (u.size() < d) throw parameter_error("is_auto_cyclic: word shorter than d");
    const std::size_t len = u.size();
    for (std::size_t i = 1; i <= d; ++i) {
        Word shifted = Word::zeros(i, u.q()) + u.prefix(len - i);
        if (hamming_distance(u, shifted) < d) return false;
    }
    return true;
}

inline AutoCyclicSeed auto_cyclic_vector(std::size_t d) {
    if (d < 1) throw parameter_error("auto_cyclic_vector: require d >= 1");
    const std::size_t stages = ceil_log(2, d);
    std::vector<Symbol> u(d, 1);
    for (std::size_t s = 0; s < stages; ++s) {
        const std::size_t period = std::size_t(1) << s;
        for (std::size_t j = 0; j < d; ++j) u.push_back(((j / period) % 2 == 0) ? 1 : 0);
    }
    AutoCyclicSeed seed{d, Word(std::move(u), 2)};
    if (!is_auto_cyclic(seed.u, d))
        throw corruption_error("auto_cyclic_vector: construction failed its invariant");
    return seed;
}

struct DmuWitness {
    enum class Kind { distance, prefix_suffix } kind = Kind::distance;
    std::size_t a_index = 0;
    std::size_t b_index = 0;
    std::size_t overlap = 0;  // i for prefix/suffix violations
};

struct DmuCheck {
    bool ok = true;
    DmuWitness witness{};
    explicit operator bool() const { return ok; }
};

/// (d_h, d_m)-MU check: pairwise Hamming distance >= d_h over distinct pairs,
/// and d_H(a_1^i, b_(n-i+1)^n) >= min(i, d_m) over all ordered pairs
/// including self-pairs.
inline DmuCheck is_dmu_code(const Codebook& code, std::size_t dh, std::size_t dm) {
    validate_codebook(code);
    if (code.empty()) return {};
    const std::size_t n = code[0].size();
    for (std::size_t a = 0; a < code.size(); ++a)
        for (std::size_t b = a + 1; b < code.size(); ++b)
            if (hamming_distance(code[a], code[b]) < dh)
                return {false, {DmuWitness::Kind::distance, a, b, 0}};
    for (std::size_t a = 0; a < code.size(); ++a)
        for (std::size_t b = 0; b < code.size(); ++b)
            for (std::size_t i = 1; i < n; ++i) {
                std::size_t dist = 0;
                const std::size_t need = std::min(i, dm);
                for (std::size_t j = 0; j < i && dist < need; ++j)
                    if (code[a][j] != code[b][n - i + j]) ++dist;
                if (dist < need)
                    return {false, {DmuWitness::Kind::prefix_suffix, a, b, i}};
            }
    return {};
}

// ---------------------------------------------------------------------------
// Systematic error-correcting layer. Construction 2 interleaves the parity
// symbols of one of these codes into its payload; the canonical codeword
// layout (which positions carry parity) is what the interleaver remaps.
// ---------------------------------------------------------------------------

class SystematicEcc {
  public:
    virtual ~SystematicEcc() = default;
    virtual std::string name() const = 0;
    virtual std::size_t min_distance() const = 0;
    /// Number of parity symbols in a codeword of the given total length.
    virtual std::size_t parity_count_for_total(std::size_t total) const = 0;
    /// Shortest codeword that can carry the message.
    virtual std::size_t minimal_total(std::size_t message_length) const = 0;
    /// 0-based parity positions within the canonical codeword.
    virtual std::vector<std::size_t> parity_positions(std::size_t total) const = 0;
    /// Canonical codeword of the given total length; message symbols appear
    /// unchanged on the non-parity positions, in order. Requires
    /// |message| + parity_count_for_total(total) == total.
    virtual std::vector<Symbol> encode_to(const std::vector<Symbol>& message,
                                          std::size_t total) const = 0;
    /// Corrects up to floor((d-1)/2) substitutions in place; throws
    /// decode_failure when the syndrome is uncorrectable.
    virtual void correct(std::vector<Symbol>& codeword) const = 0;

    std::vector<Symbol> encode(const std::vector<Symbol>& message) const {
        return encode_to(message, minimal_total(message.size()));
    }
};

class IdentityEcc final : public SystematicEcc {
  public:
    std::string name() const override { return "identity"; }
    std::size_t min_distance() const override { return 1; }
    std::size_t parity_count_for_total(std::size_t) const override { return 0; }
    std::size_t minimal_total(std::size_t m) const override { return m; }
    std::vector<std::size_t> parity_positions(std::size_t) const override { return {}; }
    std::vector<Symbol> encode_to(const std::vector<Symbol>& m, std::size_t total) const override {
        if (total != m.size()) throw parameter_error("identity code: length mismatch");
        return m;
    }
    void correct(std::vector<Symbol>&) const override {}
};

class ParityEcc final : public SystematicEcc {
  public:
    std::string name() const override { return "parity"; }
    std::size_t min_distance() const override { return 2; }
    std::size_t parity_count_for_total(std::size_t total) const override {
        if (total < 2) throw parameter_error("parity code: total length too small");
        return 1;
    }
    std::size_t minimal_total(std::size_t m) const override { return m + 1; }
    std::vector<std::size_t> parity_positions(std::size_t total) const override {
        return {total - 1};
    }
    std::vector<Symbol> encode_to(const std::vector<Symbol>& m, std::size_t total) const override {
        if (total != m.size() + 1) throw parameter_error("parity code: length mismatch");
        std::vector<Symbol> cw(m);
        Symbol x = 0;
        for (Symbol b : m) x ^= b;
        cw.push_back(x);
        return cw;
    }
    void correct(std::vector<Symbol>& cw) const override {
        Symbol x = 0;
        for (Symbol b : cw) x ^= b;
        if (x != 0) throw decode_failure("parity code: parity mismatch (detect-only)");
    }
};

/// Hamming code over an arbitrary total length (shortened when the length is
/// not 2^r - 1), parity symbols at the power-of-two positions.
class HammingEcc : public SystematicEcc {
  public:
    std::string name() const override { return "hamming"; }
    std::size_t min_distance() const override { return 3; }

    std::size_t parity_count_for_total(std::size_t total) const override {
        if (total < 3) throw parameter_error("hamming code: total length too small");
        std::size_t r = 0;
        while ((std::size_t(1) << r) < total + 1) ++r;
        return r;
    }

    std::size_t minimal_total(std::size_t m) const override {
        std::size_t r = 0;
        while ((std::size_t(1) << r) < m + r + 1) ++r;
        return m + r;
    }

    std::vector<std::size_t> parity_positions(std::size_t total) const override {
        std::vector<std::size_t> pos;
        for (std::size_t p = 1; p <= total; p <<= 1) pos.push_back(p - 1);
        return pos;
    }

    std::vector<Symbol> encode_to(const std::vector<Symbol>& m, std::size_t total) const override {
        if (m.size() + parity_count_for_total(total) != total)
            throw parameter_error("hamming code: length mismatch");
        std::vector<Symbol> cw(total, 0);
        std::size_t mi = 0;
        for (std::size_t p = 1; p <= total; ++p)
            if ((p & (p - 1)) != 0) cw[p - 1] = m[mi++];
        for (std::size_t bit = 0; (std::size_t(1) << bit) <= total; ++bit) {
            Symbol x = 0;
            for (std::size_t p = 1; p <= total; ++p)
                if ((p >> bit) & 1) x ^= cw[p - 1];
            cw[(std::size_t(1) << bit) - 1] ^= x;
        }
        return cw;
    }

    void correct(std::vector<Symbol>& cw) const override {
        const std::size_t total = cw.size();
        std::size_t syn = 0;
        for (std::size_t p = 1; p <= total; ++p)
            if (cw[p - 1]) syn ^= p;
        if (syn == 0) return;
        if (syn > total) throw decode_failure("hamming code: uncorrectable syndrome");
        cw[syn - 1] ^= 1;
    }
};

/// Hamming code on the first total-1 positions plus one overall parity bit.
class ExtendedHammingEcc final : public SystematicEcc {
  public:
    std::string name() const override { return "extended-hamming"; }
    std::size_t min_distance() const override { return 4; }

    std::size_t parity_count_for_total(std::size_t total) const override {
        if (total < 4) throw parameter_error("extended hamming code: total length too small");
        return HammingEcc().parity_count_for_total(total - 1) + 1;
    }

    std::size_t minimal_total(std::size_t m) const override {
        return HammingEcc().minimal_total(m) + 1;
    }

    std::vector<std::size_t> parity_positions(std::size_t total) const override {
        std::vector<std::size_t> pos = HammingEcc().parity_positions(total - 1);
        pos.push_back(total - 1);
        return pos;
    }

    std::vector<Symbol> encode_to(const std::vector<Symbol>& m, std::size_t total) const override {
        std::vector<Symbol> cw = HammingEcc().encode_to(m, total - 1);
        Symbol x = 0;
        for (Symbol b : cw) x ^= b;
        cw.push_back(x);
        return cw;
    }

    void correct(std::vector<Symbol>& cw) const override {
        const std::size_t total = cw.size();
        Symbol overall = 0;
        for (Symbol b : cw) overall ^= b;
        std::size_t syn = 0;
        for (std::size_t p = 1; p <= total - 1; ++p)
            if (cw[p - 1]) syn ^= p;
        if (syn == 0 && overall == 0) return;
        if (overall == 1) {
            if (syn == 0) {
                cw[total - 1] ^= 1;  // error on the overall parity bit
            } else {
                if (syn > total - 1)
                    throw decode_failure("extended hamming code: uncorrectable syndrome");
                cw[syn - 1] ^= 1;
            }
            return;
        }
        throw decode_failure("extended hamming code: double error detected");
    }
};

inline std::unique_ptr<SystematicEcc> make_systematic_ecc(std::size_t dh) {
    switch (dh) {
        case 1: return std::make_unique<IdentityEcc>();
        case 2: return std::make_unique<ParityEcc>();
        case 3: return std::make_unique<HammingEcc>();
        case 4: return std::make_unique<ExtendedHammingEcc>();
        default:
            throw parameter_error(
                "make_systematic_ecc: shipped instances cover d_h in {1,2,3,4}; plug an "
                "external SystematicEcc for larger distances");
    }
}

/// Raw Construction 2 framing 0^k u 1^(d_m) c 1^(d_m) over an explicit inner
/// codebook; the c2_encode pipeline below instantiates it with k = F(n,d_m)+1
/// and the interleaved systematic code.
inline Codebook c2_frame(const Codebook& inner, std::size_t k, std::size_t dm) {
    validate_codebook(inner);
    if (dm < 1) throw parameter_error("c2_frame: require d_m >= 1");
    const Word u = auto_cyclic_vector(dm).u;
    if (k < u.size()) throw parameter_error("c2_frame: require k >= l(d_m)");
    Codebook out;
    out.reserve(inner.size());
    for (const Word& c : inner)
        out.push_back(Word::zeros(k, 2) + u + Word::ones(dm, 2) + c + Word::ones(dm, 2));
    return out;
}

// ---------------------------------------------------------------------------
// Construction 2 with the Eq. (5) window length, k = F(n, d_m) + 1, and
// parity interleaving.
// ---------------------------------------------------------------------------

/// Resolved positions of one Construction 2 instance. Parity symbols sit at
/// `parity_local` (1-based within the payload section c); in the dense
/// fallback each parity travels behind forced 1 marker bits at
/// `marker_local`.
///
/// Spacing rule: the sparse layout spaces lone parities k+2 apart, so every
/// k-window sees at most one interleaved symbol and still spans F = k-1
/// consecutive payload symbols, whose window weight carries the bound. When
/// that does not fit, each parity instead travels behind a full 1^(d_m)
/// marker run; any k-window then either contains a whole marker run, or its
/// payload content is long enough for the window-weight bound to make up the
/// difference, independent of how the chunks are spread.
struct C2Layout {
    std::size_t n, dh, dm;
    std::size_t k;            // F(n, d_m) + 1
    std::size_t seed_len;     // l(d_m)
    std::size_t c_len;        // n' = n - k - l(d_m) - 2 d_m
    std::size_t parities;     // p
    std::size_t payload_len;  // information bits accepted by c2_encode
    std::vector<std::size_t> parity_local;
    std::vector<std::size_t> marker_local;  // empty when d_m = 1
};

inline C2Layout c2_layout(std::size_t n, std::size_t dh, std::size_t dm) {
    if (dm < 1) throw parameter_error("c2_layout: require d_m >= 1");
    C2Layout lay;
    lay.n = n;
    lay.dh = dh;
    lay.dm = dm;
    lay.k = wwl_f(n, 2, dm) + 1;
    lay.seed_len = dm * ceil_log(2, dm) + dm;
    if (n < lay.k + lay.seed_len + 2 * dm + 1)
        throw parameter_error("c2_layout: n too small for the frame");
    lay.c_len = n - lay.k - lay.seed_len - 2 * dm;

    auto ecc = make_systematic_ecc(dh);
    lay.parities = ecc->parity_count_for_total(n);
    const std::size_t p = lay.parities;
    const bool marker = dm >= 2;

    if (p == 0) {
        if (lay.c_len < dm + 1) throw parameter_error("c2_layout: n too small for any payload");
        lay.payload_len = lay.c_len - dm;
        return lay;
    }

    if (p * (lay.k + 2) <= lay.c_len && lay.c_len >= p + dm + 1) {
        // sparse: lone parity at every position j(k+2)
        lay.payload_len = lay.c_len - p - dm;
        for (std::size_t j = 1; j <= p; ++j) lay.parity_local.push_back(j * (lay.k + 2));
        return lay;
    }

    // dense fallback
    const std::size_t span = marker ? dm + 1 : 1;
    const std::size_t stride = marker ? lay.c_len / p : (lay.k + 1) / 2;
    if (stride < span || p * stride > lay.c_len || lay.c_len < p * span + dm + 1)
        throw parameter_error("c2_layout: n too small for a safe parity layout");
    lay.payload_len = lay.c_len - p * span - dm;
    for (std::size_t j = 1; j <= p; ++j) {
        lay.parity_local.push_back(j * stride);
        if (marker)
            for (std::size_t t = 1; t <= dm; ++t) lay.marker_local.push_back(j * stride - t);
    }
    return lay;
}

inline std::size_t c2_payload_length(std::size_t n, std::size_t dh, std::size_t dm) {
    return c2_layout(n, dh, dm).payload_len;
}

/// Construction 2 encoder: y = 0^k u 1^(d_m) c 1^(d_m) where c interleaves
/// the WWL-encoded payload with the systematic parities of the chosen
/// distance-d_h code. The ECC spans the whole codeword (frame included), so
/// decode-time correction may repair hits anywhere in y.
inline Word c2_encode(const Word& x, std::size_t n, std::size_t dh, std::size_t dm) {
    if (x.q() != 2) throw parameter_error("c2_encode: binary input required");
    const C2Layout lay = c2_layout(n, dh, dm);
    if (x.size() != lay.payload_len)
        throw parameter_error("c2_encode: payload must have length " +
                              std::to_string(lay.payload_len));
    const Word w = dm == 1 ? rll_encode(x, n) : wwl_encode(x, n, dm);

    std::vector<Symbol> c(lay.c_len, 0);
    std::vector<bool> slot(lay.c_len, false);
    for (std::size_t pos : lay.parity_local) slot[pos - 1] = true;
    for (std::size_t pos : lay.marker_local) {
        slot[pos - 1] = true;
        c[pos - 1] = 1;
    }
    std::size_t wi = 0;
    for (std::size_t t = 0; t < lay.c_len; ++t)
        if (!slot[t]) c[t] = w[wi++];
    if (wi != w.size()) throw corruption_error("c2_encode: payload placement mismatch");

    const Word u = auto_cyclic_vector(dm).u;
    Word y = Word::zeros(lay.k, 2) + u + Word::ones(dm, 2) + Word(std::move(c), 2) +
             Word::ones(dm, 2);

    // parity positions in y, 0-based
    const std::size_t c_off = lay.k + lay.seed_len + dm;
    std::vector<bool> is_parity(n, false);
    for (std::size_t pos : lay.parity_local) is_parity[c_off + pos - 1] = true;
    std::vector<Symbol> message;
    message.reserve(n - lay.parities);
    for (std::size_t t = 0; t < n; ++t)
        if (!is_parity[t]) message.push_back(y[t]);
    auto ecc = make_systematic_ecc(dh);
    const std::vector<Symbol> cw = ecc->encode_to(message, n);
    const std::vector<std::size_t> ppos = ecc->parity_positions(n);
    std::vector<Symbol> out(y.symbols());
    std::size_t j = 0;
    for (std::size_t t = 0; t < n; ++t)
        if (is_parity[t]) out[t] = cw[ppos[j++]];
    return Word(std::move(out), 2);
}

inline Word c2_decode(const Word& y, std::size_t n, std::size_t dh, std::size_t dm) {
    if (y.q() != 2) throw parameter_error("c2_decode: binary input required");
    if (y.size() != n) throw parameter_error("c2_decode: length mismatch");
    const C2Layout lay = c2_layout(n, dh, dm);
    const std::size_t c_off = lay.k + lay.seed_len + dm;
    std::vector<bool> is_parity(n, false);
    for (std::size_t pos : lay.parity_local) is_parity[c_off + pos - 1] = true;

    // Rebuild the canonical codeword and correct before trusting the frame.
    auto ecc = make_systematic_ecc(dh);
    const std::size_t total = n;  // message + parities == n by construction
    std::vector<std::size_t> ppos = ecc->parity_positions(total);
    std::vector<bool> canon_is_parity(total, false);
    for (std::size_t p : ppos) canon_is_parity[p] = true;
    std::vector<Symbol> canon(total, 0);
    {
        std::vector<Symbol> msg, par;
        for (std::size_t t = 0; t < n; ++t) (is_parity[t] ? par : msg).push_back(y[t]);
        std::size_t mi = 0, pi = 0;
        for (std::size_t t = 0; t < total; ++t)
            canon[t] = canon_is_parity[t] ? par[pi++] : msg[mi++];
    }
    std::vector<Symbol> corrected(canon);
    ecc->correct(corrected);
    std::vector<Symbol> fixed(y.symbols());
    {
        // map corrected canonical symbols back onto y positions
        std::vector<std::size_t> msg_pos, par_pos;
        for (std::size_t t = 0; t < n; ++t) (is_parity[t] ? par_pos : msg_pos).push_back(t);
        std::size_t mi = 0, pi = 0;
        for (std::size_t t = 0; t < total; ++t) {
            const std::size_t ypos = canon_is_parity[t] ? par_pos[pi++] : msg_pos[mi++];
            fixed[ypos] = corrected[t];
        }
    }

    const Word u = auto_cyclic_vector(dm).u;
    for (std::size_t t = 0; t < lay.k; ++t)
        if (fixed[t] != 0) throw corruption_error("c2_decode: frame prefix mismatch");
    for (std::size_t t = 0; t < lay.seed_len; ++t)
        if (fixed[lay.k + t] != u[t]) throw corruption_error("c2_decode: marker seed mismatch");
    for (std::size_t t = 0; t < dm; ++t) {
        if (fixed[lay.k + lay.seed_len + t] != 1)
            throw corruption_error("c2_decode: separator mismatch");
        if (fixed[n - 1 - t] != 1) throw corruption_error("c2_decode: separator mismatch");
    }
    std::vector<bool> skip(lay.c_len, false);
    for (std::size_t pos : lay.parity_local) skip[pos - 1] = true;
    for (std::size_t pos : lay.marker_local) {
        if (fixed[c_off + pos - 1] != 1) throw corruption_error("c2_decode: marker bit mismatch");
        skip[pos - 1] = true;
    }
    std::vector<Symbol> w;
    for (std::size_t t = 0; t < lay.c_len; ++t)
        if (!skip[t]) w.push_back(fixed[c_off + t]);
    const Word wl(std::move(w), 2);
    return dm == 1 ? rll_decode(wl, n) : wwl_decode(wl, n, dm);
}

/// Extracts the interleaved payload section c of a Construction 2 codeword;
/// test hook for the WWL-preservation property.
inline Word c2_extract_c(const Word& y, std::size_t n, std::size_t dh, std::size_t dm) {
    const C2Layout lay = c2_layout(n, dh, dm);
    const std::size_t c_off = lay.k + lay.seed_len + dm;
    return y.sub(c_off + 1, c_off + lay.c_len);
}

/// Cyclic-shift counting bound A_MU(n,q,d_h,d_m) <= M(n,q,d)/floor(n/d_m) with
/// d = min(d_h, 2 d_m); M is instantiated by the sphere-packing bound and,
/// within the exhaustive budget, by exact search.
inline BoundReport dmu_upper_bound(std::size_t n, unsigned q, std::size_t dh, std::size_t dm,
                                   std::size_t exact_budget = 1024) {
    if (dm < 1 || dm > n) throw parameter_error("dmu_upper_bound: require 1 <= d_m <= n");
    if (q < 2) throw parameter_error("dmu_upper_bound: q must be at least 2");
    const std::size_t d = std::min(dh, 2 * dm);
    const double divisor = double(n / dm);

    const std::size_t t = (d - 1) / 2;
    BigInt vol = 0;
    for (std::size_t i = 0; i <= t; ++i) vol += binomial(n, i) * big_pow(q - 1, i);
    const double m_sphere_log2 = double(n) * std::log2(double(q)) - log2_big(vol);

    BoundReport rep;
    rep.op = "dmu_upper_bound";
    rep.inputs = {{"n", double(n)}, {"q", double(q)}, {"dh", double(dh)}, {"dm", double(dm)}};
    rep.values = {{"d", double(d)},
                  {"divisor", divisor},
                  {"m_sphere_log2", m_sphere_log2},
                  {"bound_sphere", std::exp2(m_sphere_log2) / divisor}};

    double total = std::pow(double(q), double(n));
    if (d <= 1) {
        rep.values.emplace_back("m_exact", total);
        rep.values.emplace_back("bound_exact", total / divisor);
    } else if (d == 2) {
        rep.values.emplace_back("m_exact", std::pow(double(q), double(n) - 1));
        rep.values.emplace_back("bound_exact", std::pow(double(q), double(n) - 1) / divisor);
    } else if (total <= double(exact_budget)) {
        const std::size_t count = static_cast<std::size_t>(total + 0.5);
        Codebook words;
        for (std::size_t v = 0; v < count; ++v) words.push_back(word_from_value(v, q, n));
        CompatGraph g(count);
        for (std::size_t a = 0; a < count; ++a)
            for (std::size_t b = a + 1; b < count; ++b)
                if (hamming_distance(words[a], words[b]) >= d) g.add_edge(a, b);
        const std::size_t m_exact = max_clique(g).size();
        rep.values.emplace_back("m_exact", double(m_exact));
        rep.values.emplace_back("bound_exact", double(m_exact) / divisor);
    } else {
        rep.commentary = "exact M omitted: q^n exceeds the exhaustive budget";
    }
    return rep;
}

}  // namespace mucode
