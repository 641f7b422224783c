#include "otkit/kernel_form.hpp"

#include <doctest.h>

using namespace otkit;

namespace {

FieldPtr plastic() { return NumberField::build(Poly{-1, -1, 0, 1}); }

OTData plastic_ot() {
    FieldPtr f = plastic();
    return assemble_ot(f, UnitSystem::build(f, {f->generator()}));
}

Point point_with_im(const NumberField& f, const std::vector<Rat>& ims) {
    mpfr_prec_t prec = f.policy().prec();
    std::vector<CInterval> coords;
    for (int i = 0; i < f.places(); ++i) {
        Rat im = i < static_cast<int>(ims.size()) ? ims[static_cast<size_t>(i)] : Rat(0);
        coords.push_back(CInterval(Interval::exact_zero(prec), Interval::from_rat(im, prec)));
    }
    return make_point(f, std::move(coords));
}

}  // namespace

TEST_CASE("log_phi examples") {
    FieldPtr f = plastic();
    Domain d = Domain::of(*f);

    // all first-s imaginary parts 1: log phi = 0
    CHECK(log_phi(d, point_with_im(*f, {Rat(1)})).contains(Rat(0)));

    // s = 1, Im z_1 = 2: -ln 2
    Interval v = log_phi(d, point_with_im(*f, {Rat(2)}));
    Interval expect = -Interval::from_long(2, f->policy().prec()).log();
    CHECK(v.intersects(expect));

    // additivity over two real places: Im = (2, 3) gives -ln 6
    FieldPtr q = NumberField::build(Poly{-1, -1, 0, 0, 1});  // s = 2
    Domain dq = Domain::of(*q);
    Interval v6 = log_phi(dq, point_with_im(*q, {Rat(2), Rat(3)}));
    Interval l6 = -Interval::from_long(6, q->policy().prec()).log();
    CHECK(v6.intersects(l6));
}

TEST_CASE("omega_at closed form") {
    FieldPtr f = plastic();
    Domain d = Domain::of(*f);

    FormMatrix h1 = omega_at(d, point_with_im(*f, {Rat(1)}));
    CHECK(h1.h[0][0].re.contains(Rat(1, 4)));
    CHECK(h1.h[0][0].im.is_exact_zero());
    CHECK(h1.h[1][1].re.is_exact_zero());  // zero beyond index s
    CHECK(h1.h[0][1].re.is_exact_zero());

    FormMatrix h2 = omega_at(d, point_with_im(*f, {Rat(2)}));
    CHECK(h2.h[0][0].re.contains(Rat(1, 16)));
}

TEST_CASE("eval_form examples") {
    FieldPtr f = plastic();
    Domain d = Domain::of(*f);
    Point z = point_with_im(*f, {Rat(1)});
    mpfr_prec_t prec = f->policy().prec();

    // vector supported on the C^t directions only: exactly zero
    TangentVector fiber;
    fiber.v = {CInterval(prec), CInterval::from_rat(Rat(1), prec)};
    CHECK(eval_form(d, z, fiber).is_exact_zero());

    // v = e_1 at Im z_1 = 1: 2 * h_11 = 1/2
    TangentVector e1;
    e1.v = {CInterval::from_rat(Rat(1), prec), CInterval(prec)};
    CHECK(eval_form(d, z, e1).contains(Rat(1, 2)));

    // |v_1|^2 / (2 Im^2) for a complex v_1 = 1 + i at Im = 2
    TangentVector v;
    v.v = {CInterval(Interval::from_long(1, prec), Interval::from_long(1, prec)),
           CInterval::from_rat(Rat(3), prec)};
    Interval got = eval_form(d, point_with_im(*f, {Rat(2)}), v);
    CHECK(got.contains(Rat(2, 8)));  // |1+i|^2 = 2, 2/(2*4) = 1/4
    CHECK(got.lower().sign() > 0);   // strictly positive off the kernel
}

TEST_CASE("semipositivity on random tangent vectors") {
    OTData ot = plastic_ot();
    Domain d = Domain::of(*ot.field);
    mpfr_prec_t prec = ot.field->policy().prec();
    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        Point z = random_point(*ot.field, rng);
        TangentVector v;
        for (int i = 0; i < d.m(); ++i)
            v.v.push_back(CInterval(Interval::from_rat(rng.next_rat(Rat(-2), Rat(2)), prec),
                                    Interval::from_rat(rng.next_rat(Rat(-2), Rat(2)), prec)));
        BigFloat low = eval_form(d, z, v).lower();
        CHECK(!(low < -ot.field->policy().tolerance()));
    }
}

TEST_CASE("verify_ddc matches the closed form") {
    FieldPtr f = NumberField::build(Poly{-1, -1, 0, 1}, PrecisionPolicy::with_bits(256));
    Domain d = Domain::of(*f);
    mpfr_prec_t prec = f->policy().prec();
    std::vector<CInterval> coords{
        CInterval(Interval::exact_zero(prec), Interval::from_long(1, prec)),
        CInterval(prec)};
    Point z = make_point(*f, std::move(coords));

    DdcReport rep = verify_ddc(d, z, 40, f->policy());
    CHECK(rep.max_rel_err < BigFloat::pow2(-30));
    // at 256 bits the rounding term 2^(2-bits)/h^2 is far below the h^2
    // truncation term, and the report says so
    CHECK(rep.truncation_dominates);

    // doubling precision with the same step does not increase the error
    FieldPtr f2 = NumberField::build(Poly{-1, -1, 0, 1}, PrecisionPolicy::with_bits(512));
    DdcReport rep2 = verify_ddc(d, z, 40, f2->policy());
    CHECK(!(rep2.max_rel_err > rep.max_rel_err));

    // a tiny step flips the balance: rounding dominates
    DdcReport fine = verify_ddc(d, z, 100, f->policy());
    CHECK(!fine.truncation_dominates);
}

TEST_CASE("verify_ddc at off-axis sample points") {
    FieldPtr f = NumberField::build(Poly{-1, -1, 0, 1}, PrecisionPolicy::with_bits(256));
    Domain d = Domain::of(*f);
    Rng rng(17);
    for (int k = 0; k < 3; ++k) {
        Point z = random_point(*f, rng);
        DdcReport rep = verify_ddc(d, z, 40, f->policy());
        CHECK(rep.max_rel_err < BigFloat::pow2(-30));
    }
}

TEST_CASE("verify_invariance: generators and random words") {
    OTData ot = plastic_ot();
    InvarianceReport rep = verify_invariance(ot, 100, 0);
    CHECK(rep.pass);
    CHECK(rep.max_dev < BigFloat::pow2(-60));
}

TEST_CASE("invariance deviation is zero-ish for pure translations") {
    OTData ot = plastic_ot();
    const NumberField& f = *ot.field;
    Domain d = Domain::of(f);
    Rng rng(19);
    GroupElement tr(f.one(), f.generator());
    Point z = random_point(f, rng);
    Point gz = act(tr, z);
    FormMatrix a = omega_at(d, z), b = omega_at(d, gz);
    // Im is unchanged by real translation, so the matrices agree
    for (int i = 0; i < d.m(); ++i)
        for (int j = 0; j < d.m(); ++j) {
            CHECK(CInterval::dist_upper(a.h[static_cast<size_t>(i)][static_cast<size_t>(j)],
                                        b.h[static_cast<size_t>(i)][static_cast<size_t>(j)]) <
                  BigFloat::pow2(-100));
        }
}

TEST_CASE("zero_foliation_kernel") {
    FieldPtr f = NumberField::build(Poly{-1, -1, 0, 0, 0, 1});  // s=1, t=2
    Domain d = Domain::of(*f);
    Point z = point_with_im(*f, {Rat(1)});
    auto basis = zero_foliation_kernel(d, z);
    CHECK(basis.size() == 2);  // kernel dimension t
    for (const auto& v : basis) CHECK(eval_form(d, z, v).is_exact_zero());

    FieldPtr p = plastic();
    auto basis1 = zero_foliation_kernel(Domain::of(*p), point_with_im(*p, {Rat(1)}));
    CHECK(basis1.size() == 1);
}
