#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mucode/errors.hpp"

namespace mucode {

using Symbol = std::uint8_t;

/// Finite sequence over the alphabet {0, ..., q-1}. The carrier type for
/// every code and constraint in this library. Subvector indexing in the
/// public interface is 1-based; `sub(i, j)` with j < i is the empty word.
class Word {
  public:
    Word() = default;

    Word(std::vector<Symbol> symbols, unsigned q) : symbols_(std::move(symbols)), q_(q) {
        if (q_ < 2) throw parameter_error("alphabet size must be at least 2");
        for (Symbol s : symbols_)
            if (s >= q_) throw parameter_error("symbol out of alphabet range");
    }

    static Word zeros(std::size_t n, unsigned q = 2) { return Word(std::vector<Symbol>(n, 0), q); }

    static Word ones(std::size_t n, unsigned q = 2) { return Word(std::vector<Symbol>(n, 1), q); }

    /// Parses a digit string. With q = 0 the alphabet is inferred as
    /// max(digit) + 1, but never less than 2.
    static Word parse(std::string_view digits, unsigned q = 0) {
        std::vector<Symbol> s;
        s.reserve(digits.size());
        unsigned seen = 2;
        for (char c : digits) {
            if (c < '0' || c > '9') throw parameter_error(std::string("invalid digit '") + c + "'");
            s.push_back(static_cast<Symbol>(c - '0'));
            seen = std::max(seen, static_cast<unsigned>(c - '0') + 1);
        }
        return Word(std::move(s), q == 0 ? seen : q);
    }

    unsigned q() const { return q_; }
    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }  // 0-based
    const std::vector<Symbol>& symbols() const { return symbols_; }

    /// 1-based subvector a_i^j, inclusive. Empty for j < i.
    Word sub(std::size_t i, std::size_t j) const {
        if (j < i) return Word({}, q_);
        if (i < 1 || j > size()) throw parameter_error("subvector index out of range");
        return Word(std::vector<Symbol>(symbols_.begin() + (i - 1), symbols_.begin() + j), q_);
    }

    Word prefix(std::size_t len) const { return sub(1, len); }
    Word suffix(std::size_t len) const { return sub(size() - len + 1, size()); }

    Word operator+(const Word& other) const {
        if (q_ != other.q_) throw parameter_error("alphabet mismatch in concatenation");
        std::vector<Symbol> s(symbols_);
        s.insert(s.end(), other.symbols_.begin(), other.symbols_.end());
        return Word(std::move(s), q_);
    }

    Word repeated(std::size_t times) const {
        std::vector<Symbol> s;
        s.reserve(size() * times);
        for (std::size_t t = 0; t < times; ++t) s.insert(s.end(), symbols_.begin(), symbols_.end());
        return Word(std::move(s), q_);
    }

    /// Binary complement; defined for q = 2 only.
    Word complemented() const {
        if (q_ != 2) throw parameter_error("complement requires a binary word");
        std::vector<Symbol> s(symbols_);
        for (Symbol& b : s) b ^= 1;
        return Word(std::move(s), 2);
    }

    std::size_t weight() const {
        return static_cast<std::size_t>(std::count_if(symbols_.begin(), symbols_.end(),
                                                      [](Symbol s) { return s != 0; }));
    }

    std::string str() const {
        std::string out;
        out.reserve(size());
        for (Symbol s : symbols_) out.push_back(static_cast<char>('0' + s));
        return out;
    }

    // Element-wise equality.
    bool operator==(const Word& other) const { return symbols_ == other.symbols_; }
    bool operator!=(const Word& other) const { return !(*this == other); }
    bool operator<(const Word& other) const { return symbols_ < other.symbols_; }

  private:
    std::vector<Symbol> symbols_;
    unsigned q_ = 2;
};

using Codebook = std::vector<Word>;

/// An explicit codebook must hold equal-length words over one alphabet.
inline void validate_codebook(const Codebook& code) {
    for (std::size_t i = 1; i < code.size(); ++i) {
        if (code[i].size() != code[0].size()) throw parameter_error("ragged codebook");
        if (code[i].q() != code[0].q()) throw parameter_error("mixed alphabets in codebook");
    }
}

inline std::size_t hamming_distance(const Word& a, const Word& b) {
    if (a.q() != b.q()) throw parameter_error("hamming_distance: alphabet mismatch");
    if (a.size() != b.size()) throw parameter_error("hamming_distance: length mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) ++d;
    return d;
}

inline std::size_t longest_zero_run(const Word& a) {
    std::size_t best = 0, run = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        run = (a[i] == 0) ? run + 1 : 0;
        best = std::max(best, run);
    }
    return best;
}

/// Length of a longest common subsequence, by the standard quadratic DP.
inline std::size_t lcs_length(const Word& a, const Word& b) {
    if (a.q() != b.q()) throw parameter_error("lcs_length: alphabet mismatch");
    const std::size_t n = a.size(), m = b.size();
    std::vector<std::size_t> prev(m + 1, 0), cur(m + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= m; ++j) {
            if (a[i - 1] == b[j - 1])
                cur[j] = prev[j - 1] + 1;
            else
                cur[j] = std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

/// Insertion/deletion edit distance: |a| + |b| - 2*lcs(a, b). No
/// substitutions; a substitution counts as one deletion plus one insertion.
inline std::size_t edit_distance(const Word& a, const Word& b) {
    return a.size() + b.size() - 2 * lcs_length(a, b);
}

/// Word over {A, C, G, T}, the DNA-facing image of an even-length binary word.
struct DnaWord {
    std::string bases;

    static DnaWord parse(std::string_view text) {
        for (char c : text)
            if (c != 'A' && c != 'C' && c != 'G' && c != 'T')
                throw parameter_error(std::string("invalid DNA base '") + c + "'");
        return DnaWord{std::string(text)};
    }

    bool operator==(const DnaWord& other) const { return bases == other.bases; }
};

// Fixed 2-bit mapping: 00->A, 01->C, 10->G, 11->T.
inline DnaWord to_dna(const Word& a) {
    if (a.q() != 2) throw parameter_error("to_dna requires a binary word");
    if (a.size() % 2 != 0) throw parameter_error("to_dna requires even length");
    static constexpr char table[4] = {'A', 'C', 'G', 'T'};
    std::string out;
    out.reserve(a.size() / 2);
    for (std::size_t i = 0; i < a.size(); i += 2) out.push_back(table[2 * a[i] + a[i + 1]]);
    return DnaWord{std::move(out)};
}

inline Word from_dna(const DnaWord& d) {
    std::vector<Symbol> s;
    s.reserve(2 * d.bases.size());
    for (char c : d.bases) {
        unsigned v = 0;
        switch (c) {
            case 'A': v = 0; break;
            case 'C': v = 1; break;
            case 'G': v = 2; break;
            case 'T': v = 3; break;
            default: throw parameter_error(std::string("invalid DNA base '") + c + "'");
        }
        s.push_back(static_cast<Symbol>(v >> 1));
        s.push_back(static_cast<Symbol>(v & 1));
    }
    return Word(std::move(s), 2);
}

/// Fixed-width base-q representation of a value, most significant digit first.
inline Word word_from_value(unsigned long long value, unsigned q, std::size_t width) {
    std::vector<Symbol> digits(width, 0);
    for (std::size_t i = width; i-- > 0;) {
        digits[i] = static_cast<Symbol>(value % q);
        value /= q;
    }
    if (value != 0) throw parameter_error("value does not fit in the requested width");
    return Word(std::move(digits), q);
}

inline unsigned long long value_of_word(const Word& w) {
    unsigned long long v = 0;
    for (std::size_t i = 0; i < w.size(); ++i) v = v * w.q() + w[i];
    return v;
}

/// Smallest L with q^L >= n, i.e. the ceiling of log_q(n). Requires n >= 1.
inline std::size_t ceil_log(unsigned q, unsigned long long n) {
    if (n == 0) throw parameter_error("ceil_log of zero");
    std::size_t L = 0;
    unsigned long long p = 1;
    while (p < n) {
        p *= q;
        ++L;
    }
    return L;
}

}  // namespace mucode
