#pragma once

#include "otkit/ot_manifold.hpp"

namespace otkit {

/// Signature (s, t) of the ambient H^s x C^t.
struct Domain {
    int s = 0, t = 0;
    int m() const { return s + t; }
    static Domain of(const NumberField& f) { return {f.real_embeddings(), f.complex_pairs()}; }
};

/// log phi(z) = -sum_{i<s} ln(Im z_i), the potential of the form.
Interval log_phi(const Domain& d, const Point& z);

/// Coefficient matrix of the form in the dz_i (x) dz_j-bar basis: diagonal,
/// h[i][i] = 1/(4 Im(z_i)^2) for i < s and zero beyond.
struct FormMatrix {
    std::vector<std::vector<CInterval>> h;  // m x m
};

FormMatrix omega_at(const Domain& d, const Point& z);

struct TangentVector {
    std::vector<CInterval> v;  // m components
};

/// omega(v, Iv) = 2 * v^H h v = sum_{i<s} |v_i|^2 / (2 Im(z_i)^2); the factor
/// 2 is the pairing normalization used consistently by verify_ddc.
Interval eval_form(const Domain& d, const Point& z, const TangentVector& v);

struct DdcReport {
    BigFloat max_rel_err;
    BigFloat max_abs_err;
    BigFloat trunc_term;   // estimated finite-difference truncation error
    BigFloat round_term;   // estimated rounding error through the stencil
    bool truncation_dominates = false;
};

/// Central finite differences of log phi in the 2m real coordinates at
/// step 2^(-step_exp), assembled into the complex Hessian and compared with
/// the closed form in max-norm relative error.
DdcReport verify_ddc(const Domain& d, const Point& z, long step_exp, const PrecisionPolicy& policy);

struct InvarianceReport {
    int trials = 0;
    BigFloat max_dev;
    bool pass = false;
    std::uint64_t seed = 0;
};

/// Pullback test h'(z) = J^H h(gz) J against h(z) for every generator of
/// Gamma and `trials` random words of length <= 5.
InvarianceReport verify_invariance(const OTData& ot, int trials, std::uint64_t seed);

/// Basis of the zero-foliation kernel at z: the t coordinate directions of
/// the C^t factor.
std::vector<TangentVector> zero_foliation_kernel(const Domain& d, const Point& z);

}  // namespace otkit
