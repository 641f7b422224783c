#include "otkit/kernel_form.hpp"

namespace otkit {

Interval log_phi(const Domain& d, const Point& z) {
    if (static_cast<int>(z.z.size()) != d.m()) throw error("point size mismatch");
    mpfr_prec_t prec = z.z.empty() ? 64 : z.z.front().prec();
    Interval acc(prec);
    for (int i = 0; i < d.s; ++i) {
        const Interval& im = z.z[static_cast<size_t>(i)].im;
        if (im.lower().sign() <= 0) throw error("point is not certified inside H");
        acc = acc - im.log();
    }
    return acc;
}

FormMatrix omega_at(const Domain& d, const Point& z) {
    if (static_cast<int>(z.z.size()) != d.m()) throw error("point size mismatch");
    mpfr_prec_t prec = z.z.empty() ? 64 : z.z.front().prec();
    FormMatrix fm;
    fm.h.assign(static_cast<size_t>(d.m()),
                std::vector<CInterval>(static_cast<size_t>(d.m()), CInterval(prec)));
    Interval quarter = Interval::from_long(1, prec).mul_pow2(-2);
    for (int i = 0; i < d.s; ++i) {
        const Interval& im = z.z[static_cast<size_t>(i)].im;
        if (im.lower().sign() <= 0) throw error("point is not certified inside H");
        fm.h[static_cast<size_t>(i)][static_cast<size_t>(i)] =
            CInterval::from_real(quarter / im.square());
    }
    return fm;
}

Interval eval_form(const Domain& d, const Point& z, const TangentVector& v) {
    if (static_cast<int>(v.v.size()) != d.m()) throw error("tangent vector size mismatch");
    FormMatrix fm = omega_at(d, z);
    mpfr_prec_t prec = z.z.empty() ? 64 : z.z.front().prec();
    CInterval acc(prec);
    for (int i = 0; i < d.m(); ++i)
        for (int j = 0; j < d.m(); ++j) {
            const CInterval& hij = fm.h[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (hij.re.is_exact_zero() && hij.im.is_exact_zero()) continue;
            acc = acc + v.v[static_cast<size_t>(i)].conj() * hij * v.v[static_cast<size_t>(j)];
        }
    return acc.re.mul_pow2(1);  // pairing normalization: omega(v, Iv) = 2 v^H h v
}

namespace {

// log phi as a plain float function of the 2m real coordinates
// (x_0..x_{m-1}, y_0..y_{m-1}); only y_0..y_{s-1} enter.
BigFloat logphi_mid(const Domain& d, const std::vector<BigFloat>& xy) {
    mpfr_prec_t prec = xy.front().prec();
    BigFloat acc(prec);
    for (int i = 0; i < d.s; ++i)
        acc = acc - xy[static_cast<size_t>(d.m() + i)].log();
    return acc;
}

}  // namespace

DdcReport verify_ddc(const Domain& d, const Point& z, long step_exp,
                     const PrecisionPolicy& policy) {
    int m = d.m();
    mpfr_prec_t prec = policy.prec();
    BigFloat h = BigFloat::pow2(-step_exp, prec);
    BigFloat h2 = h * h;

    std::vector<BigFloat> base;
    base.reserve(static_cast<size_t>(2 * m));
    for (int i = 0; i < m; ++i) {
        BigFloat x(prec);
        mpfr_set(x.raw(), z.z[static_cast<size_t>(i)].re.mid().raw(), MPFR_RNDN);
        base.push_back(x);
    }
    for (int i = 0; i < m; ++i) {
        BigFloat y(prec);
        mpfr_set(y.raw(), z.z[static_cast<size_t>(i)].im.mid().raw(), MPFR_RNDN);
        base.push_back(y);
        if (i < d.s && !(y > h))
            throw error("interior margin smaller than the finite-difference step");
    }

    auto feval = [&](const std::vector<BigFloat>& xy) { return logphi_mid(d, xy); };
    BigFloat f0 = feval(base);

    int dim = 2 * m;
    std::vector<std::vector<BigFloat>> d2(static_cast<size_t>(dim),
                                          std::vector<BigFloat>(static_cast<size_t>(dim),
                                                                BigFloat(prec)));
    for (int a = 0; a < dim; ++a) {
        for (int b = a; b < dim; ++b) {
            BigFloat val(prec);
            if (a == b) {
                auto p = base, q = base;
                p[static_cast<size_t>(a)] = p[static_cast<size_t>(a)] + h;
                q[static_cast<size_t>(a)] = q[static_cast<size_t>(a)] - h;
                val = (feval(p) - f0 - f0 + feval(q)) / h2;
            } else {
                auto pp = base, pm = base, mp = base, mm = base;
                pp[static_cast<size_t>(a)] = pp[static_cast<size_t>(a)] + h;
                pp[static_cast<size_t>(b)] = pp[static_cast<size_t>(b)] + h;
                pm[static_cast<size_t>(a)] = pm[static_cast<size_t>(a)] + h;
                pm[static_cast<size_t>(b)] = pm[static_cast<size_t>(b)] - h;
                mp[static_cast<size_t>(a)] = mp[static_cast<size_t>(a)] - h;
                mp[static_cast<size_t>(b)] = mp[static_cast<size_t>(b)] + h;
                mm[static_cast<size_t>(a)] = mm[static_cast<size_t>(a)] - h;
                mm[static_cast<size_t>(b)] = mm[static_cast<size_t>(b)] - h;
                val = (feval(pp) - feval(pm) - feval(mp) + feval(mm)) / (h2 + h2 + h2 + h2);
            }
            d2[static_cast<size_t>(a)][static_cast<size_t>(b)] = val;
            d2[static_cast<size_t>(b)][static_cast<size_t>(a)] = std::move(val);
        }
    }

    // complex Hessian: H_jk = ((Dxx + Dyy) + i (Dxy - Dyx)) / 4
    FormMatrix closed = omega_at(d, z);
    DdcReport rep{BigFloat(prec), BigFloat(prec), BigFloat(prec), BigFloat(prec), false};
    BigFloat scale(prec);
    for (int j = 0; j < m; ++j) {
        BigFloat cj = closed.h[static_cast<size_t>(j)][static_cast<size_t>(j)].re.mid().abs();
        if (cj > scale) scale = cj;
    }
    BigFloat quarter = BigFloat::pow2(-2, prec);
    for (int j = 0; j < m; ++j) {
        for (int k = 0; k < m; ++k) {
            BigFloat re = (d2[static_cast<size_t>(j)][static_cast<size_t>(k)] +
                           d2[static_cast<size_t>(m + j)][static_cast<size_t>(m + k)]) *
                          quarter;
            BigFloat im = (d2[static_cast<size_t>(j)][static_cast<size_t>(m + k)] -
                           d2[static_cast<size_t>(m + j)][static_cast<size_t>(k)]) *
                          quarter;
            const CInterval& c = closed.h[static_cast<size_t>(j)][static_cast<size_t>(k)];
            BigFloat dre = re - c.re.mid();
            BigFloat dim_ = im - c.im.mid();
            BigFloat err(prec);
            mpfr_hypot(err.raw(), dre.raw(), dim_.raw(), MPFR_RNDN);
            if (err > rep.max_abs_err) rep.max_abs_err = err;
        }
    }
    rep.max_rel_err = scale.is_zero() ? rep.max_abs_err : rep.max_abs_err / scale;
    // error model: truncation ~ h^2 * scale of the 4th derivatives,
    // rounding ~ ulp(f) amplified by the 1/h^2 stencil
    rep.trunc_term = h2 * scale * BigFloat::from_long(8, prec);
    rep.round_term =
        (f0.abs() + BigFloat::from_long(1, prec)) * BigFloat::pow2(2 - policy.working_bits, prec) / h2;
    rep.truncation_dominates = rep.trunc_term > rep.round_term;
    return rep;
}

InvarianceReport verify_invariance(const OTData& ot, int trials, std::uint64_t seed) {
    InvarianceReport rep;
    rep.trials = trials;
    rep.seed = seed;
    const NumberField& f = *ot.field;
    Domain d = Domain::of(f);
    rep.max_dev = BigFloat(f.policy().prec());
    Rng rng(seed);

    std::vector<GroupElement> gamma_generators;
    for (const auto& u : ot.units.generators)
        gamma_generators.emplace_back(u, f.zero());
    for (const auto& b : ot.translation_basis)
        gamma_generators.emplace_back(f.one(), b);

    auto check = [&](const GroupElement& g, const Point& z) {
        Point gz = act(g, z);
        FormMatrix at_gz = omega_at(d, gz);
        FormMatrix at_z = omega_at(d, z);
        for (int i = 0; i < d.m(); ++i) {
            CInterval ji = g.u.embed(i).conj();
            for (int j = 0; j < d.m(); ++j) {
                CInterval pulled = ji * at_gz.h[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                                   g.u.embed(j);
                BigFloat dev = CInterval::dist_upper(
                    pulled, at_z.h[static_cast<size_t>(i)][static_cast<size_t>(j)]);
                if (dev > rep.max_dev) rep.max_dev = dev;
            }
        }
    };

    for (const auto& g : gamma_generators) check(g, random_point(f, rng));
    for (int t = 0; t < trials; ++t) {
        int len = static_cast<int>(rng.next_in(1, 5));
        GroupElement w(f.one(), f.zero());
        for (int k = 0; k < len; ++k) {
            const GroupElement& letter =
                gamma_generators[static_cast<size_t>(rng.next_in(
                    0, static_cast<long>(gamma_generators.size()) - 1))];
            w = rng.next_in(0, 1) ? group_mul(w, letter) : group_mul(w, group_inverse(letter));
        }
        check(w, random_point(f, rng));
    }
    rep.pass = !(rep.max_dev > f.policy().tolerance());
    return rep;
}

std::vector<TangentVector> zero_foliation_kernel(const Domain& d, const Point& z) {
    mpfr_prec_t prec = z.z.empty() ? 64 : z.z.front().prec();
    std::vector<TangentVector> basis;
    basis.reserve(static_cast<size_t>(d.t));
    for (int k = 0; k < d.t; ++k) {
        TangentVector tv;
        tv.v.assign(static_cast<size_t>(d.m()), CInterval(prec));
        tv.v[static_cast<size_t>(d.s + k)] = CInterval::from_rat(Rat(1), prec);
        basis.push_back(std::move(tv));
    }
    return basis;
}

}  // namespace otkit
