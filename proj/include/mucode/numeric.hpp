#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mucode/errors.hpp"

namespace mucode {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt big_pow(unsigned long base, unsigned long exp) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// log2 of a positive big integer, accurate to double precision.
inline double log2_big(const BigInt& v) {
    if (v <= 0) throw parameter_error("log2_big of non-positive value");
    signed long exp = 0;
    double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log2(mant) + static_cast<double>(exp);
}

/// Named real- and integer-valued outputs of a bound or cardinality formula,
/// together with the inputs that produced them. Real values whose linear
/// magnitude can overflow a double are reported in the log domain; the field
/// name carries a _log2 or _logq suffix in that case.
struct BoundReport {
    std::string op;
    std::vector<std::pair<std::string, double>> inputs;
    std::vector<std::pair<std::string, double>> values;
    std::vector<std::pair<std::string, BigInt>> exact;
    std::string commentary;

    bool has_value(std::string_view name) const {
        for (const auto& [k, v] : values)
            if (k == name) return true;
        return false;
    }

    double value(std::string_view name) const {
        for (const auto& [k, v] : values)
            if (k == name) return v;
        throw parameter_error("BoundReport: no value named '" + std::string(name) + "'");
    }

    const BigInt& exact_value(std::string_view name) const {
        for (const auto& [k, v] : exact)
            if (k == name) return v;
        throw parameter_error("BoundReport: no exact value named '" + std::string(name) + "'");
    }
};

}  // namespace mucode
