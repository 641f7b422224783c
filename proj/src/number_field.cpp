#include "otkit/number_field.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace otkit {

// ---------------------------------------------------------------------------
// Irreducibility certificates.

namespace {

// Trial division; returns prime factors, or nullopt when a composite cofactor
// beyond the trial bound survives (proof would be unsound then).
std::optional<std::vector<Int>> prime_factors(Int a) {
    if (a < 0) a = -a;
    std::vector<Int> out;
    if (a <= 1) return out;
    for (Int d(2); d * d <= a && d <= 1000000; ++d) {
        if (a % d == 0) {
            out.push_back(d);
            while (a % d == 0) a /= d;
        }
    }
    if (a > 1) {
        if (mpz_probab_prime_p(a.get_mpz_t(), 40) == 0) return std::nullopt;
        out.push_back(a);
    }
    return out;
}

// All positive divisors, or nullopt when the factorization is unavailable.
std::optional<std::vector<Int>> positive_divisors(const Int& a) {
    auto primes = prime_factors(a);
    if (!primes) return std::nullopt;
    Int n = a < 0 ? Int(-a) : a;
    std::vector<Int> divs{Int(1)};
    for (const Int& p : *primes) {
        size_t base = divs.size();
        Int pk = p;
        while (n % pk == 0) {
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
            pk *= p;
        }
    }
    return divs;
}

// Rational (hence integer) roots of a monic integer polynomial.
// Returns nullopt when completeness cannot be guaranteed.
std::optional<std::vector<Int>> integer_roots(const Poly& f) {
    std::vector<Int> roots;
    Rat c0 = f.coeff(0);
    if (c0 == 0) {
        roots.push_back(Int(0));
        return roots;
    }
    auto divs = positive_divisors(c0.get_num());
    if (!divs) return std::nullopt;
    for (const Int& d : *divs) {
        if (f.eval(Rat(d)) == 0) roots.push_back(d);
        if (f.eval(Rat(-d)) == 0) roots.push_back(-d);
    }
    return roots;
}

bool eisenstein_at(const Poly& f, const Int& p) {
    int n = f.degree();
    for (int i = 0; i < n; ++i) {
        if (f.coeff(i).get_num() % p != 0) return false;
    }
    return f.coeff(0).get_num() % (p * p) != 0;
}

// --- F_p[x] arithmetic for factor degree patterns ---

using FpVec = std::vector<long>;  // ascending, entries in [0, p)

void fp_norm(FpVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

long fp_inv(long a, long p) {
    long t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return ((t % p) + p) % p;
}

FpVec fp_from_poly(const Poly& f, long p) {
    FpVec v(static_cast<size_t>(f.degree()) + 1);
    for (int i = 0; i <= f.degree(); ++i) {
        Int num = f.coeff(i).get_num();
        long r = static_cast<long>(mpz_fdiv_ui(num.get_mpz_t(), static_cast<unsigned long>(p)));
        v[static_cast<size_t>(i)] = r;
    }
    fp_norm(v);
    return v;
}

FpVec fp_mul(const FpVec& a, const FpVec& b, long p) {
    if (a.empty() || b.empty()) return {};
    FpVec r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    fp_norm(r);
    return r;
}

FpVec fp_mod(FpVec a, const FpVec& b, long p) {
    long inv = fp_inv(b.back(), p);
    while (a.size() >= b.size()) {
        long f = a.back() * inv % p;
        size_t shift = a.size() - b.size();
        for (size_t j = 0; j < b.size(); ++j)
            a[shift + j] = ((a[shift + j] - f * b[j]) % p + p) % p;
        fp_norm(a);
        if (a.size() < b.size()) break;
    }
    return a;
}

std::pair<FpVec, FpVec> fp_divmod(FpVec a, const FpVec& b, long p) {
    if (a.size() < b.size()) return {{}, a};
    FpVec q(a.size() - b.size() + 1, 0);
    long inv = fp_inv(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
        long f = a.back() * inv % p;
        size_t shift = a.size() - b.size();
        q[shift] = f;
        for (size_t j = 0; j < b.size(); ++j)
            a[shift + j] = ((a[shift + j] - f * b[j]) % p + p) % p;
        fp_norm(a);
    }
    fp_norm(q);
    return {q, a};
}

FpVec fp_gcd(FpVec a, FpVec b, long p) {
    while (!b.empty()) {
        FpVec r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        long inv = fp_inv(a.back(), p);
        for (long& c : a) c = c * inv % p;
    }
    return a;
}

FpVec fp_deriv(const FpVec& a, long p) {
    if (a.size() <= 1) return {};
    FpVec r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = (a[i] * static_cast<long>(i % p)) % p;
    fp_norm(r);
    return r;
}

// r^p mod g (p small)
FpVec fp_pow_p(const FpVec& r, const FpVec& g, long p) {
    FpVec acc{1};
    FpVec base = r;
    long e = p;
    while (e > 0) {
        if (e & 1) acc = fp_mod(fp_mul(acc, base, p), g, p);
        base = fp_mod(fp_mul(base, base, p), g, p);
        e >>= 1;
    }
    return acc;
}

// Distinct-degree factorization: degrees (with multiplicity of factor count)
// of the irreducible factors of a squarefree f mod p.
std::vector<int> fp_factor_degrees(const FpVec& f, long p) {
    std::vector<int> degrees;
    FpVec g = f;
    FpVec x{0, 1};
    FpVec r = fp_mod(x, g, p);
    int d = 0;
    while (static_cast<int>(g.size()) - 1 > 0) {
        ++d;
        if (2 * d > static_cast<int>(g.size()) - 1) {
            degrees.insert(degrees.end(), 1, static_cast<int>(g.size()) - 1);
            break;
        }
        r = fp_pow_p(r, g, p);
        // gcd(g, r - x)
        FpVec rx = r;
        rx.resize(std::max(rx.size(), size_t(2)), 0);
        rx[1] = ((rx[1] - 1) % p + p) % p;
        fp_norm(rx);
        // r - x = 0 mod g means every remaining factor has degree d
        FpVec h = rx.empty() ? g : fp_gcd(g, rx, p);
        if (!h.empty() && h.size() > 1) {
            int total = static_cast<int>(h.size()) - 1;
            for (int k = 0; k < total / d; ++k) degrees.push_back(d);
            g = fp_divmod(g, h, p).first;
            if (g.size() > 1) r = fp_mod(r, g, p);
        }
    }
    return degrees;
}

}  // namespace

IrreducibilityStatus check_irreducible(const Poly& defining) {
    if (!defining.is_monic() || !defining.has_integer_coeffs())
        throw input_error("irreducibility check requires a monic integer polynomial");
    int n = defining.degree();
    if (n <= 0) throw input_error("constant polynomial");
    if (n == 1) return {Proof::Proven, "linear"};

    auto roots = integer_roots(defining);
    if (roots && !roots->empty())
        return {Proof::Unknown, "reducible: rational root " + roots->front().get_str()};
    if (roots && n <= 3)
        return {Proof::Proven, "rational-root test, degree <= 3"};

    if (defining.coeff(0) != 0) {
        auto primes = prime_factors(defining.coeff(0).get_num());
        if (primes) {
            for (const Int& p : *primes) {
                if (eisenstein_at(defining, p))
                    return {Proof::Proven, "Eisenstein at " + p.get_str()};
            }
        }
    }

    // mod-p factor degree patterns: a rational factor of degree k forces k to
    // be a sum of factor degrees modulo every prime of good reduction.
    static const long kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43};
    std::uint64_t possible = ~0ULL;
    int used = 0;
    std::ostringstream used_primes;
    for (long p : kPrimes) {
        FpVec f = fp_from_poly(defining, p);
        if (static_cast<int>(f.size()) - 1 != n) continue;  // leading drop (never: monic)
        FpVec d = fp_deriv(f, p);
        if (d.empty()) continue;
        if (fp_gcd(f, d, p).size() != 1) continue;  // not squarefree mod p
        std::vector<int> degs = fp_factor_degrees(f, p);
        std::uint64_t mask = 1;
        for (int dg : degs) mask |= mask << dg;
        possible &= mask;
        used_primes << (used ? "," : "") << p;
        ++used;
        std::uint64_t proper = possible & ~((1ULL << n) | 1ULL);
        if (proper == 0 && used >= 1)
            return {Proof::Proven, "mod-p factor degree patterns at p in {" + used_primes.str() + "}"};
        if (used >= 8) break;
    }
    return {Proof::Unknown, "no sufficient criterion applied"};
}

// ---------------------------------------------------------------------------
// Root isolation and certification.

namespace {

std::vector<BigFloat> coeffs_to_bf(const Poly& p, mpfr_prec_t prec) {
    std::vector<BigFloat> v;
    v.reserve(static_cast<size_t>(p.degree()) + 1);
    for (int i = 0; i <= p.degree(); ++i) v.push_back(BigFloat::from_rat(p.coeff(i), prec));
    return v;
}

CFloat eval_cf(const std::vector<BigFloat>& c, const CFloat& z) {
    CFloat acc(z.re.prec());
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * z;
        CFloat term(z.re.prec());
        term.re = *it;
        acc = acc + term;
    }
    return acc;
}

CInterval eval_ci(const Poly& p, const CInterval& z, mpfr_prec_t prec) {
    CInterval acc(prec);
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * z;
        acc.re = acc.re + Interval::from_rat(p.coeff(i), prec);
    }
    return acc;
}

// Ehrlich-Aberth simultaneous iteration from perturbed unit-circle starters.
// Deterministic; returns whatever it converged to (certification judges it).
std::vector<CFloat> aberth(const Poly& p, mpfr_prec_t prec) {
    int n = p.degree();
    std::vector<BigFloat> pc = coeffs_to_bf(p, prec);
    std::vector<BigFloat> dc = coeffs_to_bf(p.derivative(), prec);

    BigFloat two_pi(prec);
    mpfr_const_pi(two_pi.raw(), MPFR_RNDN);
    mpfr_mul_2ui(two_pi.raw(), two_pi.raw(), 1, MPFR_RNDN);

    std::vector<CFloat> z;
    z.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        BigFloat theta = two_pi * BigFloat::from_double(k + 0.25, prec) /
                             BigFloat::from_long(n, prec) +
                         BigFloat::from_double(0.4, prec) / BigFloat::from_long(n, prec);
        BigFloat radius = BigFloat::from_double(1.0 + static_cast<double>(k) / (8.0 * n), prec);
        CFloat pt(prec);
        mpfr_cos(pt.re.raw(), theta.raw(), MPFR_RNDN);
        mpfr_sin(pt.im.raw(), theta.raw(), MPFR_RNDN);
        pt.re = pt.re * radius;
        pt.im = pt.im * radius;
        z.push_back(pt);
    }

    BigFloat eps = BigFloat::pow2(-static_cast<long>(prec - 24));
    int calm = 0;
    for (int iter = 0; iter < 600 && calm < 2; ++iter) {
        BigFloat worst(prec);
        for (int i = 0; i < n; ++i) {
            CFloat pv = eval_cf(pc, z[static_cast<size_t>(i)]);
            CFloat dv = eval_cf(dc, z[static_cast<size_t>(i)]);
            if (!pv.re.is_finite() || !pv.im.is_finite()) return {};
            if (dv.re.is_zero() && dv.im.is_zero()) {
                // stalled on a critical point; shove deterministically
                z[static_cast<size_t>(i)].re =
                    z[static_cast<size_t>(i)].re + BigFloat::from_double(1e-3 * (i + 1), prec);
                continue;
            }
            CFloat newton = pv / dv;
            CFloat s(prec);
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                CFloat diff = z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
                if (diff.re.is_zero() && diff.im.is_zero()) return {};
                CFloat one(prec);
                one.re = BigFloat::from_long(1, prec);
                s = s + one / diff;
            }
            CFloat one(prec);
            one.re = BigFloat::from_long(1, prec);
            CFloat w = newton / (one - newton * s);
            z[static_cast<size_t>(i)] = z[static_cast<size_t>(i)] - w;
            BigFloat mag = w.abs();
            if (mag > worst) worst = mag;
        }
        if (worst < eps)
            ++calm;
        else
            calm = 0;
    }
    return z;
}

struct CertifiedRoots {
    std::vector<CInterval> roots;  // ordered per convention
    BigFloat sep_lower;
};

// Certifies a full root system at the given precision or reports failure.
// Real roots come in as exact rational enclosures, complex representatives as
// floating approximations with positive imaginary part.
std::optional<CertifiedRoots> certify_roots(const Poly& p,
                                            const std::vector<std::pair<Rat, Rat>>& real_encl,
                                            std::vector<CFloat> reps, mpfr_prec_t prec) {
    int n = p.degree();
    int s = static_cast<int>(real_encl.size());
    int t = static_cast<int>(reps.size());
    if (s + 2 * t != n) return std::nullopt;

    // deterministic representative order: ascending (Re, Im)
    std::sort(reps.begin(), reps.end(), [](const CFloat& a, const CFloat& b) {
        int c = a.re.cmp(b.re);
        if (c != 0) return c < 0;
        return a.im.cmp(b.im) < 0;
    });

    // the certified point set: real midpoints, then reps, then conjugates
    std::vector<CInterval> pts;
    pts.reserve(static_cast<size_t>(n));
    for (const auto& [lo, hi] : real_encl) {
        Rat mid = (lo + hi) / 2;
        pts.push_back(CInterval::from_rat(mid, prec));
    }
    for (const CFloat& r : reps)
        pts.push_back(CInterval(Interval::point(r.re), Interval::point(r.im)));
    for (const CFloat& r : reps)
        pts.push_back(CInterval(Interval::point(r.re), Interval::point(-r.im)));

    // Weierstrass corrections W_i = p(z_i) / prod_{j != i} (z_i - z_j);
    // all roots of the monic p lie in the union of disks D(z_i, n|W_i|), and
    // a disk disjoint from all others contains exactly one root.
    std::vector<BigFloat> radius;
    radius.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        CInterval num = eval_ci(p, pts[static_cast<size_t>(i)], prec);
        CInterval den(prec);
        den.re = Interval::from_long(1, prec);
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            CInterval diff = pts[static_cast<size_t>(i)] - pts[static_cast<size_t>(j)];
            if (diff.abs2().contains_zero()) return std::nullopt;  // coincident points
            den = den * diff;
        }
        CInterval w = num / den;
        BigFloat r = w.abs().upper() * BigFloat::from_long(n, 32);
        if (!r.is_finite()) return std::nullopt;
        radius.push_back(r);
    }

    // pairwise disjointness and a separation lower bound
    BigFloat sep_lower(prec);
    bool first = true;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            BigFloat d = CInterval::dist_lower(pts[static_cast<size_t>(i)], pts[static_cast<size_t>(j)]);
            BigFloat gap = d - radius[static_cast<size_t>(i)] - radius[static_cast<size_t>(j)];
            if (gap.sign() <= 0) return std::nullopt;
            if (first || gap < sep_lower) sep_lower = gap;
            first = false;
        }
    for (const BigFloat& r : radius) {
        BigFloat twice = r + r;
        if (!(twice < sep_lower)) return std::nullopt;  // radius < half separation
    }

    // representatives must be certified off the real axis, above it
    for (int k = 0; k < t; ++k) {
        const CInterval& z = pts[static_cast<size_t>(s + k)];
        BigFloat im_low = z.im.lower() - radius[static_cast<size_t>(s + k)];
        if (im_low.sign() <= 0) return std::nullopt;
    }

    CertifiedRoots out;
    out.sep_lower = sep_lower;
    out.roots.reserve(static_cast<size_t>(n));
    for (int i = 0; i < s; ++i) {
        const auto& [lo, hi] = real_encl[static_cast<size_t>(i)];
        out.roots.push_back(
            CInterval(Interval::from_rat_pair(lo, hi, prec), Interval::exact_zero(prec)));
    }
    for (int i = s; i < n; ++i) {
        const CInterval& z = pts[static_cast<size_t>(i)];
        const BigFloat& r = radius[static_cast<size_t>(i)];
        out.roots.push_back(
            CInterval(Interval::ball(z.re.mid(), r), Interval::ball(z.im.mid(), r)));
    }
    return out;
}

}  // namespace

FieldPtr NumberField::build(const Poly& defining, PrecisionPolicy policy) {
    policy.check();
    if (!defining.is_monic()) throw input_error("defining polynomial must be monic");
    if (!defining.has_integer_coeffs())
        throw input_error("defining polynomial must have integer coefficients");
    if (defining.degree() < 2) throw input_error("defining polynomial must have degree >= 2");
    {
        Poly g = Poly::gcd(defining, defining.derivative());
        if (g.degree() > 0)
            throw input_error("defining polynomial is not squarefree");
    }
    if (auto roots = integer_roots(defining); roots && !roots->empty())
        throw input_error("defining polynomial has the rational root " + roots->front().get_str());

    int n = defining.degree();
    Rat bound = cauchy_root_bound(defining);
    long s = sturm_count(defining, -bound, bound);
    if ((n - s) % 2 != 0) throw error("signature parity failure");  // cannot happen
    int t = static_cast<int>(n - s) / 2;

    auto field = std::shared_ptr<NumberField>(new NumberField());
    field->defining_ = defining;
    field->policy_ = policy;
    field->irred_ = check_irreducible(defining);
    field->degree_ = n;
    field->s_ = static_cast<int>(s);
    field->t_ = t;

    auto iso = isolate_real_roots(defining);
    if (static_cast<long>(iso.size()) != s) throw error("isolation disagrees with Sturm count");

    for (int attempt = 0; attempt < 3; ++attempt) {
        long bits = policy.working_bits << attempt;
        mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits + 64);
        Rat width(Int(1), Int(1) << static_cast<unsigned long>(bits + 32));

        std::vector<std::pair<Rat, Rat>> refined;
        refined.reserve(iso.size());
        for (const auto& [lo, hi] : iso) refined.push_back(bisect_root(defining, lo, hi, width));

        std::vector<CFloat> reps;
        if (t > 0) {
            std::vector<CFloat> approx = aberth(defining, prec);
            if (approx.empty()) continue;
            // drop the points that track real roots, keep Im > 0 representatives
            std::vector<bool> used(approx.size(), false);
            for (const auto& [lo, hi] : refined) {
                BigFloat mid = BigFloat::from_rat((lo + hi) / 2, prec);
                int best = -1;
                BigFloat best_d(prec);
                for (size_t j = 0; j < approx.size(); ++j) {
                    if (used[j]) continue;
                    CFloat diff = approx[j];
                    diff.re = diff.re - mid;
                    BigFloat d = diff.abs();
                    if (best < 0 || d < best_d) {
                        best = static_cast<int>(j);
                        best_d = d;
                    }
                }
                if (best < 0) break;
                used[static_cast<size_t>(best)] = true;
            }
            for (size_t j = 0; j < approx.size(); ++j) {
                if (used[j]) continue;
                if (approx[j].im.sign() > 0) reps.push_back(approx[j]);
            }
            if (static_cast<int>(reps.size()) != t) continue;
        }

        auto cert = certify_roots(defining, refined, std::move(reps), prec);
        if (!cert) continue;
        field->roots_ = std::move(cert->roots);
        field->sep_lower_ = std::move(cert->sep_lower);
        return field;
    }
    throw precision_error("root certification failed at 4x the precision budget for " +
                          defining.str());
}

AlgebraicNumber NumberField::element(Poly residue) const {
    Poly r = Poly::divmod(residue, defining_).second;
    return AlgebraicNumber(shared_from_this(), std::move(r));
}

AlgebraicNumber NumberField::element(std::vector<Rat> coeffs) const {
    return element(Poly(std::move(coeffs)));
}

AlgebraicNumber NumberField::from_rat(const Rat& r) const {
    return AlgebraicNumber(shared_from_this(), Poly::constant(r));
}

AlgebraicNumber NumberField::generator() const {
    return AlgebraicNumber(shared_from_this(), Poly({0, 1}));
}

// ---------------------------------------------------------------------------
// AlgebraicNumber.

namespace {
void require_same_field(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (!a.field()->same_field(*b.field()))
        throw error("operands live in different number fields");
}
}  // namespace

AlgebraicNumber::AlgebraicNumber(FieldPtr field, Poly residue)
    : field_(std::move(field)), residue_(std::move(residue)) {
    if (residue_.degree() >= field_->degree())
        residue_ = Poly::divmod(residue_, field_->defining()).second;
}

Rat AlgebraicNumber::rational_value() const {
    if (!is_rational()) throw error("element is not rational");
    return residue_.coeff(0);
}

bool AlgebraicNumber::operator==(const AlgebraicNumber& o) const {
    return field_->same_field(*o.field_) && residue_ == o.residue_;
}

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    require_same_field(a, b);
    return AlgebraicNumber(a.field_, a.residue_ + b.residue_);
}

AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    require_same_field(a, b);
    return AlgebraicNumber(a.field_, a.residue_ - b.residue_);
}

AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    require_same_field(a, b);
    return AlgebraicNumber(a.field_, mod_mul(a.residue_, b.residue_, a.field_->defining()));
}

AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    require_same_field(a, b);
    return a * b.inverse();
}

AlgebraicNumber AlgebraicNumber::operator-() const {
    return AlgebraicNumber(field_, -residue_);
}

AlgebraicNumber AlgebraicNumber::inverse() const {
    if (is_zero()) throw error("inverse of zero");
    return AlgebraicNumber(field_, mod_inverse(residue_, field_->defining()));
}

AlgebraicNumber AlgebraicNumber::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    AlgebraicNumber acc = field_->one();
    AlgebraicNumber base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Poly AlgebraicNumber::char_poly() const { return char_poly_mod(residue_, field_->defining()); }

Poly AlgebraicNumber::min_poly() const { return minimal_polynomial(residue_, field_->defining()); }

Rat AlgebraicNumber::norm() const {
    if (is_zero()) return Rat(0);
    return resultant(field_->defining(), residue_);
}

Rat AlgebraicNumber::trace() const {
    Poly cp = char_poly();
    return -cp.coeff(cp.degree() - 1);
}

bool AlgebraicNumber::is_algebraic_integer() const {
    if (is_zero()) return true;
    return min_poly().has_integer_coeffs();
}

CInterval AlgebraicNumber::embed(int i) const {
    if (i < 0 || i >= field_->degree()) throw error("embedding index out of range");
    const CInterval& root = field_->root(i);
    mpfr_prec_t prec = root.prec();
    CInterval acc(prec);
    for (int k = residue_.degree(); k >= 0; --k) {
        acc = acc * root;
        acc.re = acc.re + Interval::from_rat(residue_.coeff(k), prec);
    }
    return acc;
}

}  // namespace otkit
