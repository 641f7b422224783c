#pragma once

#include "otkit/rational.hpp"

#include <mpfr.h>

#include <algorithm>
#include <string>

namespace otkit {

/// Arbitrary-precision float (RAII over mpfr_t). Arithmetic operators round
/// to nearest at the larger precision of the operands.
class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t prec = 64) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    static BigFloat from_rat(const Rat& r, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) {
        BigFloat x(prec);
        mpfr_set_q(x.v_, r.get_mpq_t(), rnd);
        return x;
    }
    static BigFloat from_long(long v, mpfr_prec_t prec) {
        BigFloat x(prec);
        mpfr_set_si(x.v_, v, MPFR_RNDN);
        return x;
    }
    static BigFloat from_double(double v, mpfr_prec_t prec) {
        BigFloat x(prec);
        mpfr_set_d(x.v_, v, MPFR_RNDN);
        return x;
    }
    /// 2^e, exact.
    static BigFloat pow2(long e, mpfr_prec_t prec = 32) {
        BigFloat x(prec);
        mpfr_set_ui_2exp(x.v_, 1, e, MPFR_RNDN);
        return x;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    bool operator<(const BigFloat& o) const { return cmp(o) < 0; }
    bool operator>(const BigFloat& o) const { return cmp(o) > 0; }
    bool operator<=(const BigFloat& o) const { return cmp(o) <= 0; }
    bool operator>=(const BigFloat& o) const { return cmp(o) >= 0; }
    bool operator==(const BigFloat& o) const { return cmp(o) == 0; }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    BigFloat operator-() const {
        BigFloat r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat abs() const {
        BigFloat r(prec());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat log() const {
        BigFloat r(prec());
        mpfr_log(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat sqrt() const {
        BigFloat r(prec());
        mpfr_sqrt(r.v_, v_, MPFR_RNDN);
        return r;
    }

    static BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }
    static BigFloat min(const BigFloat& a, const BigFloat& b) { return a < b ? a : b; }

    /// Deterministic scientific-notation decimal, round-to-nearest.
    std::string str(int digits = 20) const {
        char* s = nullptr;
        if (mpfr_asprintf(&s, "%.*Re", digits, v_) < 0) throw error("mpfr format failure");
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

  private:
    static mpfr_prec_t join(const BigFloat& a, const BigFloat& b) {
        return std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_));
    }
    mpfr_t v_;
};

/// Complex float at working precision; used by the simultaneous root
/// iteration where certified error bounds are not yet needed.
struct CFloat {
    BigFloat re, im;

    explicit CFloat(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
    CFloat(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    friend CFloat operator+(const CFloat& a, const CFloat& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend CFloat operator-(const CFloat& a, const CFloat& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend CFloat operator*(const CFloat& a, const CFloat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend CFloat operator/(const CFloat& a, const CFloat& b) {
        BigFloat d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    CFloat operator-() const { return {-re, -im}; }
    CFloat conj() const { return {re, -im}; }
    BigFloat abs() const {
        BigFloat r(std::max(re.prec(), im.prec()));
        mpfr_hypot(r.raw(), re.raw(), im.raw(), MPFR_RNDN);
        return r;
    }
};

}  // namespace otkit
