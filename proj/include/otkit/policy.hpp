#pragma once

#include "otkit/bigfloat.hpp"

namespace otkit {

/// Working precision and certification tolerance. The default tolerance is
/// 2^(-working_bits/2), which leaves half the mantissa as certification
/// headroom.
struct PrecisionPolicy {
    long working_bits = 128;
    /// Tolerance exponent: tolerance = 2^(-tolerance_exp). Kept as an
    /// exponent so very small tolerances stay exact.
    long tolerance_exp = 64;

    static PrecisionPolicy with_bits(long bits) { return {bits, bits / 2}; }

    mpfr_prec_t prec() const { return static_cast<mpfr_prec_t>(working_bits); }
    BigFloat tolerance() const { return BigFloat::pow2(-tolerance_exp); }
    PrecisionPolicy doubled() const { return {2 * working_bits, 2 * tolerance_exp}; }

    void check() const {
        if (working_bits < 16) throw input_error("working_bits must be at least 16");
        if (tolerance_exp < 1) throw input_error("tolerance must be below 1");
    }
};

}  // namespace otkit
