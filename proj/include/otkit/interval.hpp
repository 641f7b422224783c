#pragma once

#include "otkit/bigfloat.hpp"

#include <array>
#include <string>

namespace otkit {

/// Certified real interval [lo, hi] with outward-rounded endpoint arithmetic.
/// Every operation returns an interval containing the exact image of the
/// operand intervals, so a chain of operations carries a rigorous error
/// radius with it.
class Interval {
  public:
    explicit Interval(mpfr_prec_t prec = 64) : lo_(prec), hi_(prec) {}
    Interval(BigFloat lo, BigFloat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (mpfr_cmp(lo_.raw(), hi_.raw()) > 0) throw error("interval endpoints out of order");
    }

    static Interval exact_zero(mpfr_prec_t prec) { return Interval(prec); }
    static Interval from_long(long v, mpfr_prec_t prec) {
        Interval x(prec);
        mpfr_set_si(x.lo_.raw(), v, MPFR_RNDD);
        mpfr_set_si(x.hi_.raw(), v, MPFR_RNDU);
        return x;
    }
    static Interval from_rat(const Rat& r, mpfr_prec_t prec) {
        Interval x(prec);
        mpfr_set_q(x.lo_.raw(), r.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(x.hi_.raw(), r.get_mpq_t(), MPFR_RNDU);
        return x;
    }
    /// Exact rational enclosure [a, b].
    static Interval from_rat_pair(const Rat& a, const Rat& b, mpfr_prec_t prec) {
        Interval x(prec);
        mpfr_set_q(x.lo_.raw(), a.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(x.hi_.raw(), b.get_mpq_t(), MPFR_RNDU);
        if (mpfr_cmp(x.lo_.raw(), x.hi_.raw()) > 0) throw error("interval endpoints out of order");
        return x;
    }
    /// Point interval (exact).
    static Interval point(const BigFloat& v) { return Interval(v, v); }
    /// mid +/- rad ball.
    static Interval ball(const BigFloat& mid, const BigFloat& rad) {
        mpfr_prec_t p = mid.prec();
        Interval x(p);
        mpfr_sub(x.lo_.raw(), mid.raw(), rad.raw(), MPFR_RNDD);
        mpfr_add(x.hi_.raw(), mid.raw(), rad.raw(), MPFR_RNDU);
        return x;
    }

    const BigFloat& lower() const { return lo_; }
    const BigFloat& upper() const { return hi_; }
    mpfr_prec_t prec() const { return std::max(lo_.prec(), hi_.prec()); }

    BigFloat mid() const {
        BigFloat m(prec());
        mpfr_add(m.raw(), lo_.raw(), hi_.raw(), MPFR_RNDN);
        mpfr_div_2ui(m.raw(), m.raw(), 1, MPFR_RNDN);
        return m;
    }
    /// Rigorous radius: max(hi - mid, mid - lo), rounded up.
    BigFloat rad() const {
        BigFloat m = mid(), a(prec()), b(prec());
        mpfr_sub(a.raw(), hi_.raw(), m.raw(), MPFR_RNDU);
        mpfr_sub(b.raw(), m.raw(), lo_.raw(), MPFR_RNDU);
        return BigFloat::max(a, b);
    }
    /// Width hi - lo, rounded up.
    BigFloat width() const {
        BigFloat w(prec());
        mpfr_sub(w.raw(), hi_.raw(), lo_.raw(), MPFR_RNDU);
        return w;
    }
    /// max(|lo|, |hi|), an upper bound for |x| over the interval.
    BigFloat abs_upper() const { return BigFloat::max(lo_.abs(), hi_.abs()); }
    /// Lower bound for |x| over the interval (0 if it contains 0).
    BigFloat abs_lower() const {
        if (contains_zero()) return BigFloat(prec());
        return sign() > 0 ? lo_ : hi_.abs();
    }

    bool is_point() const { return lo_ == hi_; }
    bool is_exact_zero() const { return lo_.is_zero() && hi_.is_zero(); }
    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
    bool contains(const Rat& r) const {
        return mpfr_cmp_q(lo_.raw(), r.get_mpq_t()) <= 0 &&
               mpfr_cmp_q(hi_.raw(), r.get_mpq_t()) >= 0;
    }
    bool intersects(const Interval& o) const {
        return !(hi_ < o.lo_ || o.hi_ < lo_);
    }
    /// Certified sign: +1 / -1 when the interval excludes 0, else 0 (undecided).
    int sign() const {
        if (lo_.sign() > 0) return 1;
        if (hi_.sign() < 0) return -1;
        return 0;
    }
    bool certified_lt(const Interval& o) const { return hi_ < o.lo_; }
    bool certified_gt(const Interval& o) const { return lo_ > o.hi_; }

    friend Interval operator+(const Interval& a, const Interval& b) {
        Interval r(join(a, b));
        mpfr_add(r.lo_.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
        mpfr_add(r.hi_.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
        return r;
    }
    friend Interval operator-(const Interval& a, const Interval& b) {
        Interval r(join(a, b));
        mpfr_sub(r.lo_.raw(), a.lo_.raw(), b.hi_.raw(), MPFR_RNDD);
        mpfr_sub(r.hi_.raw(), a.hi_.raw(), b.lo_.raw(), MPFR_RNDU);
        return r;
    }
    friend Interval operator*(const Interval& a, const Interval& b) {
        mpfr_prec_t p = join(a, b);
        // min/max over the four endpoint products, each outward rounded
        std::array<mpfr_srcptr, 2> as{a.lo_.raw(), a.hi_.raw()};
        std::array<mpfr_srcptr, 2> bs{b.lo_.raw(), b.hi_.raw()};
        Interval r(p);
        BigFloat t(p);
        bool first = true;
        for (auto x : as)
            for (auto y : bs) {
                mpfr_mul(t.raw(), x, y, MPFR_RNDD);
                if (first || t < r.lo_) mpfr_set(r.lo_.raw(), t.raw(), MPFR_RNDD);
                mpfr_mul(t.raw(), x, y, MPFR_RNDU);
                if (first || t > r.hi_) mpfr_set(r.hi_.raw(), t.raw(), MPFR_RNDU);
                first = false;
            }
        return r;
    }
    friend Interval operator/(const Interval& a, const Interval& b) {
        if (b.contains_zero()) throw precision_error("interval division by zero-containing interval");
        mpfr_prec_t p = join(a, b);
        std::array<mpfr_srcptr, 2> as{a.lo_.raw(), a.hi_.raw()};
        std::array<mpfr_srcptr, 2> bs{b.lo_.raw(), b.hi_.raw()};
        Interval r(p);
        BigFloat t(p);
        bool first = true;
        for (auto x : as)
            for (auto y : bs) {
                mpfr_div(t.raw(), x, y, MPFR_RNDD);
                if (first || t < r.lo_) mpfr_set(r.lo_.raw(), t.raw(), MPFR_RNDD);
                mpfr_div(t.raw(), x, y, MPFR_RNDU);
                if (first || t > r.hi_) mpfr_set(r.hi_.raw(), t.raw(), MPFR_RNDU);
                first = false;
            }
        return r;
    }
    Interval operator-() const { return Interval(-hi_, -lo_); }

    Interval abs() const {
        if (lo_.sign() >= 0) return *this;
        if (hi_.sign() <= 0) return Interval(-hi_, -lo_);
        return Interval(BigFloat(prec()), BigFloat::max(-lo_, hi_));
    }
    Interval square() const {
        Interval a = abs();
        Interval r(prec());
        mpfr_mul(r.lo_.raw(), a.lo_.raw(), a.lo_.raw(), MPFR_RNDD);
        mpfr_mul(r.hi_.raw(), a.hi_.raw(), a.hi_.raw(), MPFR_RNDU);
        return r;
    }
    Interval sqrt() const {
        if (lo_.sign() < 0) throw precision_error("interval sqrt of negative-reaching interval");
        Interval r(prec());
        mpfr_sqrt(r.lo_.raw(), lo_.raw(), MPFR_RNDD);
        mpfr_sqrt(r.hi_.raw(), hi_.raw(), MPFR_RNDU);
        return r;
    }
    Interval log() const {
        if (lo_.sign() <= 0) throw precision_error("interval log needs a positive lower bound");
        Interval r(prec());
        mpfr_log(r.lo_.raw(), lo_.raw(), MPFR_RNDD);
        mpfr_log(r.hi_.raw(), hi_.raw(), MPFR_RNDU);
        return r;
    }
    Interval mul_pow2(long e) const {
        Interval r(prec());
        mpfr_mul_2si(r.lo_.raw(), lo_.raw(), e, MPFR_RNDD);
        mpfr_mul_2si(r.hi_.raw(), hi_.raw(), e, MPFR_RNDU);
        return r;
    }
    /// Smallest interval containing both.
    static Interval hull(const Interval& a, const Interval& b) {
        return Interval(BigFloat::min(a.lo_, b.lo_), BigFloat::max(a.hi_, b.hi_));
    }

    /// Deterministic lexicographic order on (lo, hi); used for stable sorts.
    static int cmp_total(const Interval& a, const Interval& b) {
        int c = a.lo_.cmp(b.lo_);
        if (c != 0) return c;
        return a.hi_.cmp(b.hi_);
    }

    /// Outward decimal rendering "[lo, hi]".
    std::string decimal(int digits = 25) const {
        char* s = nullptr;
        if (mpfr_asprintf(&s, "[%.*RDe, %.*RUe]", digits, lo_.raw(), digits, hi_.raw()) < 0)
            throw error("mpfr format failure");
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

  private:
    static mpfr_prec_t join(const Interval& a, const Interval& b) {
        return std::max(a.prec(), b.prec());
    }
    BigFloat lo_, hi_;
};

/// Rectangular complex interval; the imaginary part of values constructed
/// from real data stays exactly [0, 0], which is what "certified real" means
/// downstream.
struct CInterval {
    Interval re, im;

    explicit CInterval(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
    CInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}

    static CInterval from_real(const Interval& r) { return {r, Interval(r.prec())}; }
    static CInterval from_rat(const Rat& r, mpfr_prec_t prec) {
        return {Interval::from_rat(r, prec), Interval(prec)};
    }

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
    bool is_exact_real() const { return im.is_exact_zero(); }
    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }

    friend CInterval operator+(const CInterval& a, const CInterval& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend CInterval operator-(const CInterval& a, const CInterval& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend CInterval operator*(const CInterval& a, const CInterval& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend CInterval operator*(const Interval& s, const CInterval& a) {
        return {s * a.re, s * a.im};
    }
    friend CInterval operator/(const CInterval& a, const CInterval& b) {
        Interval d = b.abs2();
        CInterval num = a * b.conj();
        return {num.re / d, num.im / d};
    }
    CInterval operator-() const { return {-re, -im}; }
    CInterval conj() const { return {re, -im}; }

    Interval abs2() const { return re.square() + im.square(); }
    Interval abs() const { return abs2().sqrt(); }

    /// Upper bound of |z - w| over both rectangles.
    static BigFloat dist_upper(const CInterval& a, const CInterval& b) {
        return (a - b).abs().upper();
    }
    /// Lower bound of |z - w|.
    static BigFloat dist_lower(const CInterval& a, const CInterval& b) {
        return (a - b).abs().lower();
    }

    std::string decimal(int digits = 25) const {
        return re.decimal(digits) + " + " + im.decimal(digits) + "*I";
    }
};

}  // namespace otkit
