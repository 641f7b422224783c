#include "otkit/inoue.hpp"

#include <sstream>

namespace otkit {

IntMatrix3 IntMatrix3::from_row_major(const std::vector<Int>& v) {
    if (v.size() != 9) throw input_error("matrix needs 9 integers, row-major");
    IntMatrix3 m;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            m.a[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                v[static_cast<size_t>(3 * r + c)];
    return m;
}

IntMatrix3 IntMatrix3::identity() {
    IntMatrix3 m;
    for (int i = 0; i < 3; ++i) m.a[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    return m;
}

IntMatrix3 IntMatrix3::transposed() const {
    IntMatrix3 m;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            m.a[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                a[static_cast<size_t>(c)][static_cast<size_t>(r)];
    return m;
}

Int IntMatrix3::det() const {
    const auto& m = a;
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Int IntMatrix3::trace() const { return a[0][0] + a[1][1] + a[2][2]; }

Poly IntMatrix3::char_poly() const {
    const auto& m = a;
    Int minors = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) +
                 (m[0][0] * m[2][2] - m[0][2] * m[2][0]) +
                 (m[0][0] * m[1][1] - m[0][1] * m[1][0]);
    return Poly(std::vector<Rat>{Rat(-det()), Rat(minors), Rat(-trace()), Rat(1)});
}

std::string IntMatrix3::str() const {
    std::ostringstream os;
    for (int r = 0; r < 3; ++r) {
        os << (r ? "; " : "[");
        for (int c = 0; c < 3; ++c)
            os << (c ? ", " : "") << a[static_cast<size_t>(r)][static_cast<size_t>(c)].get_str();
    }
    os << "]";
    return os.str();
}

Interval InoueData::alpha2c_minus_1() const {
    return alpha.abs2() * c - Interval::from_long(1, c.prec());
}

std::string InoueData::generators_description(int digits) const {
    std::ostringstream os;
    os << "g_0: (z1, z2) -> (alpha*z1, c*z2), alpha = " << alpha.decimal(digits)
       << ", c = " << c.decimal(digits);
    for (int i = 0; i < 3; ++i)
        os << " | g_" << i + 1 << ": (z1, z2) -> (z1 + "
           << complex_eigvec[static_cast<size_t>(i)].decimal(digits) << ", z2 + "
           << real_eigvec[static_cast<size_t>(i)].decimal(digits) << ")";
    return os.str();
}

namespace {

// Kernel vector of a singular 3x3 matrix over the field, exact Gaussian
// elimination; the eigenvalues here are simple so the kernel is a line.
std::array<AlgebraicNumber, 3> kernel_vector(std::array<std::array<AlgebraicNumber, 3>, 3> m,
                                             const FieldPtr& field) {
    int pivot_col[3] = {-1, -1, -1};
    int row = 0;
    for (int col = 0; col < 3 && row < 3; ++col) {
        int pr = -1;
        for (int r = row; r < 3; ++r) {
            if (!m[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) {
                pr = r;
                break;
            }
        }
        if (pr < 0) continue;
        std::swap(m[static_cast<size_t>(pr)], m[static_cast<size_t>(row)]);
        AlgebraicNumber inv = m[static_cast<size_t>(row)][static_cast<size_t>(col)].inverse();
        for (int c = 0; c < 3; ++c)
            m[static_cast<size_t>(row)][static_cast<size_t>(c)] =
                m[static_cast<size_t>(row)][static_cast<size_t>(c)] * inv;
        for (int r = 0; r < 3; ++r) {
            if (r == row) continue;
            AlgebraicNumber f = m[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (f.is_zero()) continue;
            for (int c = 0; c < 3; ++c)
                m[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                    m[static_cast<size_t>(r)][static_cast<size_t>(c)] -
                    f * m[static_cast<size_t>(row)][static_cast<size_t>(c)];
        }
        pivot_col[row] = col;
        ++row;
    }
    if (row != 2) throw error("eigen kernel is not one-dimensional");
    int free_col = 3 - pivot_col[0] - pivot_col[1];
    std::array<AlgebraicNumber, 3> v{field->zero(), field->zero(), field->zero()};
    v[static_cast<size_t>(free_col)] = field->one();
    for (int r = 0; r < 2; ++r)
        v[static_cast<size_t>(pivot_col[r])] =
            -m[static_cast<size_t>(r)][static_cast<size_t>(free_col)];
    return v;
}

}  // namespace

InoueData inoue_from_matrix(const IntMatrix3& m, PrecisionPolicy policy) {
    if (m.det() != 1) throw input_error("matrix determinant is " + m.det().get_str() +
                                        ", not 1 (not in SL(3,Z))");
    Poly chi = m.char_poly();
    if (chi.eval(Rat(1)) == 0)
        throw input_error("matrix has eigenvalue 1 (reducible case c = 1)");
    if (Poly::gcd(chi, chi.derivative()).degree() > 0)
        throw input_error("matrix has repeated eigenvalues");
    Rat bound = cauchy_root_bound(chi);
    long s = sturm_count(chi, -bound, bound);
    if (s == 3)
        throw input_error("matrix has three real eigenvalues, not the Inoue S^0 spectrum");
    // here the characteristic polynomial is an irreducible (1,1)-cubic:
    // a rational eigenvalue would divide det = 1, and +-1 are excluded above
    FieldPtr kc = NumberField::build(chi, policy);
    if (kc->real_embeddings() != 1 || kc->complex_pairs() != 1)
        throw error("eigen field signature is not (1,1)");

    InoueData d;
    d.matrix = m;
    d.char_polynomial = chi;
    d.eigen_field = kc;
    d.c = kc->root(0).re;
    d.alpha = kc->root(1);

    // left eigenvectors: kernel of (M^T - lambda I) over Q[lambda]
    AlgebraicNumber lambda = kc->generator();
    IntMatrix3 mt = m.transposed();
    std::array<std::array<AlgebraicNumber, 3>, 3> sys{{
        {kc->zero(), kc->zero(), kc->zero()},
        {kc->zero(), kc->zero(), kc->zero()},
        {kc->zero(), kc->zero(), kc->zero()},
    }};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            AlgebraicNumber e = kc->from_rat(Rat(mt.a[static_cast<size_t>(r)][static_cast<size_t>(c)]));
            if (r == c) e = e - lambda;
            sys[static_cast<size_t>(r)][static_cast<size_t>(c)] = e;
        }
    std::array<AlgebraicNumber, 3> v = kernel_vector(sys, kc);

    // scale so the largest-magnitude entry is exactly 1, per embedding
    auto scaled_embedding = [&](int emb) {
        std::array<CInterval, 3> out{CInterval(), CInterval(), CInterval()};
        int best = -1;
        BigFloat best_mag;
        for (int k = 0; k < 3; ++k) {
            if (v[static_cast<size_t>(k)].is_zero()) continue;
            BigFloat mag = v[static_cast<size_t>(k)].embed(emb).abs().mid();
            if (best < 0 || mag > best_mag) {
                best = k;
                best_mag = mag;
            }
        }
        if (best < 0) throw error("zero eigenvector");
        AlgebraicNumber inv = v[static_cast<size_t>(best)].inverse();
        for (int k = 0; k < 3; ++k)
            out[static_cast<size_t>(k)] = (v[static_cast<size_t>(k)] * inv).embed(emb);
        return out;
    };
    std::array<CInterval, 3> real_vec = scaled_embedding(0);
    std::array<CInterval, 3> cplx_vec = scaled_embedding(1);
    for (int k = 0; k < 3; ++k) {
        if (!real_vec[static_cast<size_t>(k)].is_exact_real())
            throw error("real eigenvector has a nonreal component");
        d.real_eigvec[static_cast<size_t>(k)] = real_vec[static_cast<size_t>(k)].re;
        d.complex_eigvec[static_cast<size_t>(k)] = cplx_vec[static_cast<size_t>(k)];
    }
    return d;
}

IntMatrix3 multiplication_matrix(const AlgebraicNumber& u) {
    const NumberField& f = *u.field();
    if (f.degree() != 3) throw input_error("multiplication matrix path needs a cubic field");
    if (!u.residue().has_integer_coeffs())
        throw input_error("unit is outside Z[theta]; its multiplication matrix is not integral");
    IntMatrix3 m;
    for (int j = 0; j < 3; ++j) {
        AlgebraicNumber img = u * f.generator().pow(j);
        for (int i = 0; i < 3; ++i) {
            const Rat& c = img.residue().coeff(i);
            m.a[static_cast<size_t>(i)][static_cast<size_t>(j)] = c.get_num();
        }
    }
    return m;
}

InoueData inoue_from_cubic(const FieldPtr& field, const AlgebraicNumber& u) {
    if (field->degree() != 3 || field->real_embeddings() != 1)
        throw input_error("Inoue construction needs a cubic field of signature (1,1)");
    if (!is_unit(u)) throw input_error("u is not a unit");
    if (u.is_one()) throw input_error("u = 1 gives c = 1; rejected");
    if (u.norm() == -1)
        throw input_error("norm(u) = -1, so det != 1; pass u^2 instead");
    if (u.embed(0).re.sign() <= 0)
        throw input_error("u must have a positive real embedding");

    IntMatrix3 m = multiplication_matrix(u);
    InoueData d = inoue_from_matrix(m, field->policy());

    // eigenvalues must match the embeddings of u as a multiset
    if (!d.c.intersects(u.embed(0).re))
        throw error("real eigenvalue does not match sigma_1(u)");
    CInterval s2 = u.embed(1);
    bool hit = d.alpha.re.intersects(s2.re) &&
               (d.alpha.im.intersects(s2.im) || d.alpha.im.intersects(-s2.im));
    if (!hit) throw error("complex eigenvalue does not match sigma_2(u)");
    return d;
}

Check verify_lattice_rank(const InoueData& d, const BigFloat& tol) {
    std::vector<std::vector<Interval>> rows;
    for (int i = 0; i < 3; ++i)
        rows.push_back({d.complex_eigvec[static_cast<size_t>(i)].re,
                        d.complex_eigvec[static_cast<size_t>(i)].im,
                        d.real_eigvec[static_cast<size_t>(i)]});
    Interval det = interval_det(rows).abs();
    if (det.lower() > tol) return Check::True;
    if (det.upper() < tol) return Check::False;
    return Check::Inconclusive;
}

CompatReport verify_ot_agreement(const InoueData& d, const OTData& ot, int trials,
                                 std::uint64_t seed) {
    const NumberField& f = *ot.field;
    if (f.degree() != 3 || f.real_embeddings() != 1 || ot.units.generators.size() != 1)
        throw input_error("agreement check needs s = 1, t = 1 data with one unit generator");
    const AlgebraicNumber& u = ot.units.generators.front();

    CompatReport rep;
    rep.trials = trials;
    rep.seed = seed;
    mpfr_prec_t prec = f.policy().prec();
    rep.max_dev = BigFloat(prec);
    Rng rng(seed);

    // The eigen-pair member acting on the C coordinate must be the one equal
    // to sigma_2(u); when sigma_2(u) = conj(alpha), use the conjugate pair
    // (conj(alpha), conj(A)) -- an equally valid orientation of the data.
    bool flip = !(d.alpha.re.intersects(u.embed(1).re) && d.alpha.im.intersects(u.embed(1).im));
    CInterval alpha_eff = flip ? d.alpha.conj() : d.alpha;
    std::array<CInterval, 3> A;
    for (int k = 0; k < 3; ++k)
        A[static_cast<size_t>(k)] = flip ? d.complex_eigvec[static_cast<size_t>(k)].conj()
                                         : d.complex_eigvec[static_cast<size_t>(k)];

    // intertwiner T(z1, z2) = (A_1 * z2, c_1 * z1) from H x C to the
    // Inoue C x H model; translations by theta^k then match g_{k+1} exactly
    const CInterval& A1 = A[0];
    CInterval C1 = CInterval::from_real(d.real_eigvec[0]);

    auto powi = [&](const CInterval& base, long e) {
        CInterval acc = CInterval::from_rat(Rat(1), prec);
        CInterval b = base;
        long n = e < 0 ? -e : e;
        for (long k = 0; k < n; ++k) acc = acc * b;
        if (e < 0) acc = CInterval::from_rat(Rat(1), prec) / acc;
        return acc;
    };

    for (int t = 0; t < trials; ++t) {
        long e = rng.next_in(-3, 3);
        std::vector<Rat> coeffs;
        for (int k = 0; k < 3; ++k) coeffs.emplace_back(rng.next_in(-5, 5));
        AlgebraicNumber a = f.element(Poly(coeffs));
        GroupElement g(u.pow(e), a);
        Point z = random_point(f, rng);

        // path 1: act on H x C, then map over
        Point gz = act(g, z);
        CInterval p1_w1 = A1 * gz.z[1];
        CInterval p1_w2 = C1 * CInterval(gz.z[0].re, gz.z[0].im);

        // path 2: map over, then use the Inoue generator data
        CInterval w1 = A1 * z.z[1];
        CInterval w2 = C1 * z.z[0];
        CInterval alpha_e = powi(alpha_eff, e);
        CInterval c_e = powi(CInterval::from_real(d.c), e);
        CInterval tr1(prec), tr2(prec);
        for (int k = 0; k < 3; ++k) {
            Interval xk = Interval::from_rat(coeffs[static_cast<size_t>(k)], prec);
            tr1 = tr1 + xk * A[static_cast<size_t>(k)];
            tr2 = tr2 + xk * CInterval::from_real(d.real_eigvec[static_cast<size_t>(k)]);
        }
        CInterval p2_w1 = alpha_e * w1 + tr1;
        CInterval p2_w2 = c_e * w2 + tr2;

        BigFloat dev = BigFloat::max(CInterval::dist_upper(p1_w1, p2_w1),
                                     CInterval::dist_upper(p1_w2, p2_w2));
        if (dev > rep.max_dev) rep.max_dev = dev;
    }
    rep.pass = !(rep.max_dev > f.policy().tolerance());
    return rep;
}

}  // namespace otkit
