#pragma once

#include "otkit/interval.hpp"
#include "otkit/policy.hpp"
#include "otkit/poly.hpp"

#include <memory>
#include <string>
#include <vector>

namespace otkit {

enum class Proof { Proven, Unknown };

struct IrreducibilityStatus {
    Proof status = Proof::Unknown;
    std::string method;  // sound sufficient criterion that fired, or a caveat
};

/// Tries, in order: linear degree, rational-root test (conclusive through
/// degree 3), Eisenstein, and mod-p factorization degree patterns over a
/// fixed prime set. Returns Unknown (with the reason) when no criterion
/// applies; a definitely reducible input also comes back Unknown.
IrreducibilityStatus check_irreducible(const Poly& defining);

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of Q[t]/(defining), stored as its exact residue polynomial.
class AlgebraicNumber {
  public:
    AlgebraicNumber(FieldPtr field, Poly residue);

    const FieldPtr& field() const { return field_; }
    const Poly& residue() const { return residue_; }

    bool is_zero() const { return residue_.is_zero(); }
    bool is_rational() const { return residue_.degree() <= 0; }
    Rat rational_value() const;
    bool is_one() const { return residue_ == Poly({1}); }

    bool operator==(const AlgebraicNumber& o) const;
    bool operator!=(const AlgebraicNumber& o) const { return !(*this == o); }

    friend AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b);
    AlgebraicNumber operator-() const;
    AlgebraicNumber inverse() const;
    AlgebraicNumber pow(long e) const;

    Poly char_poly() const;
    Poly min_poly() const;
    /// N(x) = prod_i sigma_i(x), exact.
    Rat norm() const;
    /// Tr(x) = sum_i sigma_i(x), exact.
    Rat trace() const;
    bool is_algebraic_integer() const;

    /// Value under the i-th embedding (0-based, field ordering convention),
    /// with a certified enclosure. Exactly real for i < s.
    CInterval embed(int i) const;

    std::string str(const std::string& var = "t") const { return residue_.str(var); }

  private:
    FieldPtr field_;
    Poly residue_;
};

/// A number field presented by a monic integer defining polynomial, with
/// certified embeddings. Embedding order: indices 0..s-1 are the real roots
/// ascending; s..s+t-1 are one representative per conjugate pair with
/// positive imaginary part, sorted by (Re, Im); s+t..n-1 are the conjugates,
/// aligned so that index s+t+i is the conjugate of s+i.
class NumberField : public std::enable_shared_from_this<NumberField> {
  public:
    /// Certifies the signature by Sturm counting and isolates all roots:
    /// real roots by exact bisection, complex roots by simultaneous (Aberth)
    /// iteration followed by a Weierstrass-disk inclusion certificate. On
    /// certification failure the precision doubles, up to 4x the initial
    /// budget, before a precision_error escapes.
    static FieldPtr build(const Poly& defining, PrecisionPolicy policy = {});

    int degree() const { return degree_; }
    int real_embeddings() const { return s_; }   // s
    int complex_pairs() const { return t_; }     // t
    int places() const { return s_ + t_; }       // m = s + t
    bool ot_eligible() const { return s_ > 0 && t_ > 0; }

    const Poly& defining() const { return defining_; }
    const PrecisionPolicy& policy() const { return policy_; }
    const IrreducibilityStatus& irreducibility() const { return irred_; }

    const CInterval& root(int i) const { return roots_.at(static_cast<size_t>(i)); }
    const std::vector<CInterval>& roots() const { return roots_; }
    /// Certified lower bound on the pairwise distance between distinct roots.
    const BigFloat& separation_lower() const { return sep_lower_; }

    AlgebraicNumber element(Poly residue) const;
    AlgebraicNumber element(std::vector<Rat> coeffs) const;
    AlgebraicNumber from_rat(const Rat& r) const;
    /// The class of t, the root of the defining polynomial.
    AlgebraicNumber generator() const;
    AlgebraicNumber zero() const { return from_rat(Rat(0)); }
    AlgebraicNumber one() const { return from_rat(Rat(1)); }

    bool same_field(const NumberField& o) const { return defining_ == o.defining_; }

  private:
    NumberField() = default;

    Poly defining_;
    PrecisionPolicy policy_;
    IrreducibilityStatus irred_;
    int degree_ = 0, s_ = 0, t_ = 0;
    std::vector<CInterval> roots_;
    BigFloat sep_lower_;
};

}  // namespace otkit
