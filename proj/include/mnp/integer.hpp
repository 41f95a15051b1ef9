#pragma once

#include <gmpxx.h>

#include <string>

namespace mnp {

using Integer = mpz_class;

/// Generalized binomial coefficient C(n, m) for any integer n and m >= 0.
inline Integer binomial(const Integer& n, unsigned m) {
    Integer num = 1;
    Integer den = 1;
    for (unsigned i = 0; i < m; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

inline std::string to_string(const Integer& x) { return x.get_str(); }

}  // namespace mnp
