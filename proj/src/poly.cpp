#include "otkit/poly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace otkit {

namespace {

Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int int_lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Int int_pow(const Int& a, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

Rat rat_pow(const Rat& a, long e) {
    if (e == 0) return Rat(1);
    Rat base = e > 0 ? a : Rat(1) / a;
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    Rat num(int_pow(base.get_num(), k));
    Rat den(int_pow(base.get_den(), k));
    return num / den;
}

}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
    return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(v));
}

Poly Poly::operator*(const Rat& s) const {
    std::vector<Rat> v(c_);
    for (Rat& r : v) r *= s;
    return Poly(std::move(v));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& p, const Poly& q) {
    if (q.is_zero()) throw error("polynomial division by zero");
    if (p.degree() < q.degree()) return {Poly(), p};
    std::vector<Rat> rem(p.c_);
    std::vector<Rat> quo(static_cast<size_t>(p.degree() - q.degree()) + 1, Rat(0));
    const Rat& qlc = q.lc();
    for (int k = p.degree() - q.degree(); k >= 0; --k) {
        Rat f = rem[static_cast<size_t>(k + q.degree())] / qlc;
        quo[static_cast<size_t>(k)] = f;
        if (f == 0) continue;
        for (int j = 0; j <= q.degree(); ++j)
            rem[static_cast<size_t>(k + j)] -= f * q.c_[static_cast<size_t>(j)];
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Rat Poly::content() const {
    if (is_zero()) return Rat(0);
    Int num_gcd(0), den_lcm(1);
    for (const Rat& r : c_) {
        num_gcd = int_gcd(num_gcd, r.get_num());
        den_lcm = int_lcm(den_lcm, r.get_den());
    }
    Rat c(num_gcd, den_lcm);
    c.canonicalize();
    return c;
}

Poly Poly::primitive_part() const {
    if (is_zero()) return Poly();
    Rat c = content();
    return *this * (Rat(1) / c);
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw error("gcd with zero polynomial");
    Poly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Poly r2 = divmod(r0, r1).second;
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    if (r0.is_zero()) throw error("gcd(0, 0) undefined");
    // primitive with positive leading coefficient
    Poly g = r0.primitive_part();
    if (g.lc() < 0) g = -g;
    return g;
}

Poly Poly::derivative() const {
    if (degree() < 1) return Poly();
    std::vector<Rat> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return Poly(std::move(v));
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::compose(const Poly& inner) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * inner + Poly::constant(*it);
    return acc;
}

Poly Poly::squarefree_part() const {
    if (degree() < 1) return *this;
    Poly g = gcd(*this, derivative());
    if (g.degree() == 0) return *this;
    return divmod(*this, g).first;
}

Poly Poly::monic() const {
    if (is_zero()) throw error("monic() of zero polynomial");
    return *this * (Rat(1) / lc());
}

std::vector<std::string> Poly::coeff_strings() const {
    std::vector<std::string> v;
    v.reserve(c_.size());
    for (const Rat& r : c_) v.push_back(r.get_str());
    return v;
}

Poly Poly::from_coeff_strings(const std::vector<std::string>& v) {
    std::vector<Rat> c;
    c.reserve(v.size());
    for (const std::string& s : v) c.push_back(rat_from_string(s));
    return Poly(std::move(c));
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rat& ck = coeff(k);
        if (ck == 0) continue;
        Rat a = ck;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (k == 0 || a != 1) os << a.get_str();
        if (k > 0) {
            if (a != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Resultant via the subresultant remainder sequence over Z[x].

namespace {

using ZVec = std::vector<Int>;  // ascending, normalized

void znormalize(ZVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

int zdeg(const ZVec& v) { return static_cast<int>(v.size()) - 1; }

// lc(b)^(deg a - deg b + 1) * a = q*b + r, deg r < deg b
ZVec pseudo_rem(const ZVec& a, const ZVec& b) {
    ZVec r = a;
    int db = zdeg(b);
    const Int& lb = b.back();
    int steps = zdeg(a) - db + 1;
    int done = 0;
    while (zdeg(r) >= db && done < steps) {
        Int lr = r.back();
        int shift = zdeg(r) - db;
        for (size_t i = 0; i < r.size(); ++i) r[i] *= lb;
        for (int j = 0; j <= db; ++j)
            r[static_cast<size_t>(j + shift)] -= lr * b[static_cast<size_t>(j)];
        znormalize(r);
        ++done;
    }
    // account for skipped multiplications when the degree dropped early
    if (done < steps) {
        Int f = int_pow(lb, static_cast<unsigned long>(steps - done));
        for (Int& c : r) c *= f;
    }
    return r;
}

// Resultant of primitive integer polynomials, deg a >= deg b >= 1.
Int subresultant_res(ZVec a, ZVec b) {
    Int g(1), h(1);
    int sign = 1;
    while (true) {
        int da = zdeg(a), db = zdeg(b);
        int delta = da - db;
        if ((da & 1) && (db & 1)) sign = -sign;
        ZVec r = pseudo_rem(a, b);
        a = std::move(b);
        // b = r / (g * h^delta), exact
        Int denom = g * int_pow(h, static_cast<unsigned long>(delta));
        b = std::move(r);
        for (Int& c : b) {
            Int q;
            mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), denom.get_mpz_t());
            c = q;
        }
        g = a.back();
        if (delta >= 1) {
            // h = g^delta / h^(delta-1), exact
            Int num = int_pow(g, static_cast<unsigned long>(delta));
            Int den = int_pow(h, static_cast<unsigned long>(delta - 1));
            Int q;
            mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            h = q;
        }
        if (zdeg(b) <= 0) {
            if (b.empty()) return Int(0);
            // h' = lc(b)^(deg a) / h^(deg a - 1)
            int dA = zdeg(a);
            Int num = int_pow(b.back(), static_cast<unsigned long>(dA));
            Int den = int_pow(h, static_cast<unsigned long>(dA - 1));
            Int q;
            mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            return sign > 0 ? q : Int(-q);
        }
    }
}

}  // namespace

Rat resultant(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) throw error("resultant of zero polynomial");
    int dp = p.degree(), dq = q.degree();
    if (dp == 0) return rat_pow(p.lc(), dq);
    if (dq == 0) return rat_pow(q.lc(), dp);
    int swap_sign = 1;
    const Poly* A = &p;
    const Poly* B = &q;
    if (dp < dq) {
        std::swap(A, B);
        if ((dp & 1) && (dq & 1)) swap_sign = -1;
    }
    Rat ca = A->content(), cb = B->content();
    Poly PA = A->primitive_part(), PB = B->primitive_part();
    ZVec za, zb;
    for (const Rat& r : PA.coeffs()) za.push_back(r.get_num());
    for (const Rat& r : PB.coeffs()) zb.push_back(r.get_num());
    Int res = subresultant_res(std::move(za), std::move(zb));
    Rat scale = rat_pow(ca, B->degree()) * rat_pow(cb, A->degree());
    return Rat(res) * scale * Rat(swap_sign);
}

// ---------------------------------------------------------------------------
// Sturm sequences.

namespace {

struct SturmChain {
    std::vector<Poly> seq;

    explicit SturmChain(const Poly& squarefree) {
        seq.push_back(squarefree.primitive_part());
        Poly d = squarefree.derivative();
        if (d.is_zero()) return;
        seq.push_back(d.primitive_part());
        while (true) {
            const Poly& s0 = seq[seq.size() - 2];
            const Poly& s1 = seq[seq.size() - 1];
            Poly r = Poly::divmod(s0, s1).second;
            if (r.is_zero()) break;
            // scaling by a positive rational preserves all signs
            r = -r;
            Poly pr = r.primitive_part();
            if (pr.lc() * r.lc() < 0) pr = -pr;
            seq.push_back(pr);
            if (seq.back().degree() == 0) break;
        }
    }

    long sign_changes(const Rat& x) const {
        long changes = 0;
        int prev = 0;
        for (const Poly& s : seq) {
            Rat v = s.eval(x);
            int sg = v == 0 ? 0 : (v > 0 ? 1 : -1);
            if (sg == 0) continue;
            if (prev != 0 && sg != prev) ++changes;
            prev = sg;
        }
        return changes;
    }

    long count(const Rat& lo, const Rat& hi) const {
        return sign_changes(lo) - sign_changes(hi);
    }
};

}  // namespace

long sturm_count(const Poly& p, const Rat& lo, const Rat& hi) {
    if (p.is_zero()) throw error("sturm_count of zero polynomial");
    if (!(lo < hi)) throw error("sturm_count needs lo < hi");
    Poly sf = p.squarefree_part();
    if (sf.eval(lo) == 0 || sf.eval(hi) == 0)
        throw error("sturm_count endpoint is a root; perturb the endpoint");
    if (sf.degree() < 1) return 0;
    SturmChain chain(sf);
    return chain.count(lo, hi);
}

Rat cauchy_root_bound(const Poly& p) {
    if (p.is_zero() || p.degree() < 1) return Rat(1);
    Rat m(0);
    for (int k = 0; k < p.degree(); ++k) {
        Rat a = p.coeff(k) / p.lc();
        if (a < 0) a = -a;
        if (a > m) m = a;
    }
    return m + 1;
}

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const Poly& p) {
    Poly sf = p.squarefree_part();
    std::vector<std::pair<Rat, Rat>> out;
    if (sf.degree() < 1) return out;
    SturmChain chain(sf);
    Rat bound = cauchy_root_bound(sf);
    // all roots lie strictly inside (-bound, bound)
    struct Seg {
        Rat lo, hi;
        long vlo, vhi;
    };
    std::vector<Seg> stack;
    stack.push_back({-bound, bound, chain.sign_changes(-bound), chain.sign_changes(bound)});
    while (!stack.empty()) {
        Seg seg = stack.back();
        stack.pop_back();
        long cnt = seg.vlo - seg.vhi;
        if (cnt <= 0) continue;
        if (cnt == 1) {
            out.push_back({seg.lo, seg.hi});
            continue;
        }
        Rat mid = (seg.lo + seg.hi) / 2;
        // nudge off a root if we landed on one
        Rat width = seg.hi - seg.lo;
        Rat delta = width / 1024;
        while (sf.eval(mid) == 0) {
            mid += delta;
            delta /= 2;
        }
        long vmid = chain.sign_changes(mid);
        stack.push_back({seg.lo, mid, seg.vlo, vmid});
        stack.push_back({mid, seg.hi, vmid, seg.vhi});
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::pair<Rat, Rat> bisect_root(const Poly& p, Rat lo, Rat hi, const Rat& width) {
    Rat flo = p.eval(lo), fhi = p.eval(hi);
    if (flo == 0) return {lo, lo};
    if (fhi == 0) return {hi, hi};
    if ((flo > 0) == (fhi > 0)) throw error("bisect_root: no sign change on interval");
    bool lo_neg = flo < 0;
    while (hi - lo > width) {
        Rat mid = (lo + hi) / 2;
        Rat fm = p.eval(mid);
        if (fm == 0) return {mid, mid};
        if ((fm < 0) == lo_neg)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

// ---------------------------------------------------------------------------
// Characteristic and minimal polynomials of residues mod a defining polynomial.

Poly char_poly_mod(const Poly& residue, const Poly& defining) {
    int n = defining.degree();
    if (n < 1) throw error("defining polynomial must have degree >= 1");
    if (!defining.is_monic()) throw error("defining polynomial must be monic");
    if (residue.degree() >= n) throw error("residue degree must be < field degree");
    // char(y) = Res_t(defining(t), y - residue(t)); evaluate at y = 0..n and
    // interpolate, staying exact throughout.
    std::vector<Rat> xs, ys;
    for (int k = 0; k <= n; ++k) {
        Rat yk(k);
        Poly shifted = Poly::constant(yk) - residue;
        Rat val = shifted.is_zero() ? Rat(0) : resultant(defining, shifted);
        xs.push_back(yk);
        ys.push_back(val);
    }
    // Lagrange interpolation
    Poly acc;
    for (int i = 0; i <= n; ++i) {
        Poly term = Poly::constant(ys[static_cast<size_t>(i)]);
        if (term.is_zero()) continue;
        for (int j = 0; j <= n; ++j) {
            if (j == i) continue;
            // (y - x_j) / (x_i - x_j)
            Poly lin(std::vector<Rat>{-xs[static_cast<size_t>(j)], Rat(1)});
            term = term * lin *
                   (Rat(1) / (xs[static_cast<size_t>(i)] - xs[static_cast<size_t>(j)]));
        }
        acc = acc + term;
    }
    if (acc.degree() != n || !acc.is_monic())
        throw error("characteristic polynomial not monic of full degree");
    return acc;
}

Poly minimal_polynomial(const Poly& residue, const Poly& defining) {
    Poly cp = char_poly_mod(residue, defining);
    Poly mp = cp.squarefree_part().monic();
    // exact confirmation: mp(residue) reduces to zero mod defining
    Poly check = Poly::divmod(mp.compose(residue), defining).second;
    if (!check.is_zero()) throw error("minimal polynomial failed residue confirmation");
    return mp;
}

Poly mod_inverse(const Poly& a, const Poly& m) {
    if (a.is_zero()) throw error("inverse of zero residue");
    Poly old_r = a, r = m;
    Poly old_u = Poly::constant(Rat(1)), u;
    while (!r.is_zero()) {
        auto [q, rem] = Poly::divmod(old_r, r);
        old_r = std::move(r);
        r = std::move(rem);
        Poly nu = old_u - q * u;
        old_u = std::move(u);
        u = std::move(nu);
    }
    if (old_r.degree() != 0)
        throw error("residue not invertible: gcd with modulus is nonconstant");
    Poly inv = old_u * (Rat(1) / old_r.lc());
    return Poly::divmod(inv, m).second;
}

Poly mod_mul(const Poly& a, const Poly& b, const Poly& m) {
    return Poly::divmod(a * b, m).second;
}

}  // namespace otkit
