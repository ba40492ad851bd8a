#pragma once

#include <boost/multiprecision/mpfr.hpp>

namespace drabi::hp {

/// Arbitrary-precision real (MPFR backend, dynamic precision, plain value
/// semantics). Precision is per-thread: construct a PrecisionGuard in every
/// thread before touching Real.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

inline int bits_to_digits10(int bits) {
    return static_cast<int>(bits * 0.3010299956639812) + 4;
}

struct PrecisionGuard {
    explicit PrecisionGuard(int bits) { Real::default_precision(bits_to_digits10(bits)); }
};

/// Relative epsilon at the given bit width.
inline Real hp_epsilon(int bits) {
    return ldexp(Real(1), 1 - bits);
}

}  // namespace drabi::hp
