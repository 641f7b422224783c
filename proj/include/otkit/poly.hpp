#pragma once

#include "otkit/rational.hpp"

#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

namespace otkit {

/// Exact univariate polynomial with rational coefficients, stored in
/// ascending degree order with the trailing zeros stripped.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }
    Poly(std::initializer_list<long> ints) {
        c_.reserve(ints.size());
        for (long v : ints) c_.emplace_back(v);
        normalize();
    }

    static Poly zero() { return Poly(); }
    static Poly constant(const Rat& v) { return Poly(std::vector<Rat>{v}); }
    /// c * x^k
    static Poly monomial(const Rat& c, int k) {
        std::vector<Rat> v(static_cast<size_t>(k) + 1, Rat(0));
        v.back() = c;
        return Poly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    /// Coefficient of x^k (zero beyond the degree).
    const Rat& coeff(int k) const {
        static const Rat kZero(0);
        if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
        return c_[static_cast<size_t>(k)];
    }
    const Rat& lc() const {
        if (is_zero()) throw error("leading coefficient of zero polynomial");
        return c_.back();
    }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_monic() const { return !is_zero() && lc() == 1; }
    bool is_constant() const { return degree() <= 0; }
    bool has_integer_coeffs() const {
        for (const Rat& r : c_)
            if (!is_integer(r)) return false;
        return true;
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const {
        std::vector<Rat> v(c_);
        for (Rat& r : v) r = -r;
        return Poly(std::move(v));
    }
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator*(const Rat& s) const;

    /// Exact quotient and remainder over the rationals; q must be nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& p, const Poly& q);
    /// gcd over the rationals, normalized primitive with positive leading
    /// coefficient (constant 1 when coprime).
    static Poly gcd(const Poly& a, const Poly& b);

    Poly derivative() const;
    Rat eval(const Rat& x) const;
    /// p(x^k) composition is not needed; substitution of another polynomial is.
    Poly compose(const Poly& inner) const;

    /// Largest squarefree divisor, p / gcd(p, p'), normalized like gcd().
    Poly squarefree_part() const;
    /// Scales by the inverse leading coefficient.
    Poly monic() const;
    /// Content (gcd of coefficients as a positive rational times the sign of
    /// the leading coefficient); primitive_part() = p / content().
    Rat content() const;
    Poly primitive_part() const;

    std::vector<std::string> coeff_strings() const;
    static Poly from_coeff_strings(const std::vector<std::string>& v);
    /// Human-readable form like "x^3 - x - 1".
    std::string str(const std::string& var = "x") const;

  private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

/// Resultant under the Sylvester convention
/// Res(p, q) = lc(p)^{deg q} * prod_i q(alpha_i) over the roots of p,
/// computed exactly by the subresultant remainder sequence.
Rat resultant(const Poly& p, const Poly& q);

/// Exact number of real roots of p in the open interval (lo, hi).
/// p is replaced by its squarefree part; endpoints must not be roots.
long sturm_count(const Poly& p, const Rat& lo, const Rat& hi);

/// All real roots lie strictly inside (-bound, bound).
Rat cauchy_root_bound(const Poly& p);

/// Disjoint open rational intervals isolating every real root of the
/// squarefree part of p, in ascending order.
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const Poly& p);

/// Shrinks an isolating interval (sign change guaranteed) by bisection until
/// hi - lo <= width. Exact arithmetic throughout.
std::pair<Rat, Rat> bisect_root(const Poly& p, Rat lo, Rat hi, const Rat& width);

/// Characteristic polynomial of the element with the given residue in
/// Q[t]/(defining): Res_t(defining(t), y - residue(t)), monic of degree n.
Poly char_poly_mod(const Poly& residue, const Poly& defining);

/// Monic minimal polynomial over Q of the element with the given residue;
/// the squarefree part of char_poly_mod.
Poly minimal_polynomial(const Poly& residue, const Poly& defining);

/// Inverse of a modulo m in Q[x]/(m); requires gcd(a, m) = 1.
Poly mod_inverse(const Poly& a, const Poly& m);

/// a * b reduced modulo m.
Poly mod_mul(const Poly& a, const Poly& b, const Poly& m);

}  // namespace otkit
