#pragma once

#include "otkit/ot_manifold.hpp"

#include <array>

namespace otkit {

struct IntMatrix3 {
    std::array<std::array<Int, 3>, 3> a{};

    static IntMatrix3 from_row_major(const std::vector<Int>& v);
    static IntMatrix3 identity();
    IntMatrix3 transposed() const;
    Int det() const;
    Int trace() const;
    /// Monic characteristic polynomial, exact.
    Poly char_poly() const;
    std::string str() const;
};

/// Inoue S^0 surface data from an SL(3,Z) matrix: real eigenvalue c != 1,
/// complex pair alpha (Im > 0), and the eigenvectors spanning the lattice.
/// Eigenvectors are row (left) eigenvectors, so x -> (<x, alpha_vec>, <x, c_vec>)
/// carries the column action x -> Mx to multiplication by the eigenvalues.
struct InoueData {
    IntMatrix3 matrix;
    Poly char_polynomial;
    FieldPtr eigen_field;  // Q[t]/(char), signature (1, 1)
    Interval c;            // real eigenvalue
    CInterval alpha;       // complex eigenvalue, Im > 0
    std::array<Interval, 3> real_eigvec;     // (c_1, c_2, c_3)
    std::array<CInterval, 3> complex_eigvec; // (alpha_1, alpha_2, alpha_3)

    /// |alpha|^2 * c - 1 as an interval; certified tiny for det = 1.
    Interval alpha2c_minus_1() const;
    /// "g_0: ... / g_i: ..." generator summary for certificates.
    std::string generators_description(int digits = 12) const;
};

/// Rejects det != 1, an eigenvalue 1, repeated eigenvalues and an all-real
/// spectrum; otherwise certifies eigen data at the policy precision.
InoueData inoue_from_matrix(const IntMatrix3& m, PrecisionPolicy policy = {});

/// Multiplication-by-u matrix on the power basis (1, theta, theta^2);
/// columns are the images of the basis vectors. Requires u in Z[theta].
IntMatrix3 multiplication_matrix(const AlgebraicNumber& u);

/// Builds the Inoue surface attached to a signature-(1,1) cubic field and a
/// totally positive unit u of norm +1 (norm -1 surfaces need u^2 instead; the
/// error says so). The eigenvalues are cross-checked against the embeddings
/// of u.
InoueData inoue_from_cubic(const FieldPtr& field, const AlgebraicNumber& u);

enum class Check { True, False, Inconclusive };

/// Certifies that the rows (Re alpha_i, Im alpha_i, c_i) span R^3, i.e. the
/// lattice Z^3 -> C x R is genuine.
Check verify_lattice_rank(const InoueData& d, const BigFloat& tol);

/// Compares the OT action of (u^e, a) on H x C with the matching word in the
/// Inoue generators g_0, g_1..g_3 through the coordinate intertwiner
/// (z1, z2) -> (alpha_1 * z2, c_1 * z1), on random elements and points.
CompatReport verify_ot_agreement(const InoueData& d, const OTData& ot, int trials,
                                 std::uint64_t seed);

}  // namespace otkit
