#include "otkit/unit_lattice.hpp"

#include "otkit/rng.hpp"

#include <doctest.h>

using namespace otkit;

namespace {
FieldPtr plastic() { return NumberField::build(Poly{-1, -1, 0, 1}); }
FieldPtr cbrt2() { return NumberField::build(Poly{-2, 0, 0, 1}); }
}  // namespace

TEST_CASE("is_unit examples") {
    FieldPtr f = plastic();
    CHECK(is_unit(f->generator()));           // norm 1
    CHECK(!is_unit(f->from_rat(Rat(2))));     // norm 8
    CHECK(!is_unit(f->from_rat(Rat(1, 2))));  // not an algebraic integer
    CHECK(is_unit(f->one()));
    CHECK(!is_unit(f->zero()));

    FieldPtr g = cbrt2();
    CHECK(is_unit(g->generator() - g->one()));  // norm -p(1) = 1
    CHECK(!is_unit(g->generator()));            // norm 2
}

TEST_CASE("log_map examples and invariants") {
    FieldPtr f = plastic();
    // log_map(1) is the exact zero vector
    for (const Interval& x : log_map(f->one())) CHECK(x.is_exact_zero());

    // log_map(theta) = (ln c, -ln c) and the components sum to zero
    std::vector<Interval> row = log_map(f->generator());
    REQUIRE(row.size() == 2);
    CHECK(row[0].contains(Rat(0)) == false);
    CHECK(row[0].mid().to_double() == doctest::Approx(0.2811995743).epsilon(1e-8));
    Interval sum = row[0] + row[1];
    CHECK(sum.abs().upper() < BigFloat::pow2(-60));

    CHECK_THROWS_AS(log_map(f->from_rat(Rat(2))), error);
}

TEST_CASE("log_map is multiplicative and respects inverses") {
    FieldPtr f = plastic();
    AlgebraicNumber theta = f->generator();
    std::vector<AlgebraicNumber> units{theta, theta * theta, theta.inverse(),
                                       theta * theta - f->one()};
    for (const auto& u : units) {
        auto lu = log_map(u);
        auto linv = log_map(u.inverse());
        for (size_t i = 0; i < lu.size(); ++i) CHECK((lu[i] + linv[i]).contains(Rat(0)));
        for (const auto& v : units) {
            auto luv = log_map(u * v);
            auto lv = log_map(v);
            for (size_t i = 0; i < lu.size(); ++i)
                CHECK(luv[i].intersects(lu[i] + lv[i]));
        }
    }
}

TEST_CASE("dirichlet_rank_check examples") {
    FieldPtr f = plastic();
    AlgebraicNumber theta = f->generator();

    UnitSystem single = UnitSystem::build(f, {theta});
    RankReport r1 = dirichlet_rank_check(single);
    CHECK(r1.rank == 1);
    CHECK(r1.expected == 1);  // s + t - 1
    CHECK(r1.pass);

    UnitSystem trivial = UnitSystem::build(f, {f->one()});
    RankReport r0 = dirichlet_rank_check(trivial);
    CHECK(r0.rank == 0);
    CHECK(!r0.pass);

    UnitSystem dependent = UnitSystem::build(f, {theta, theta * theta});
    RankReport rd = dirichlet_rank_check(dependent);
    CHECK(rd.rank == 1);  // multiplicative dependence
    CHECK(rd.pass);       // rank = min(2, s+t-1) = 1

    // never reports rank above s + t - 1
    UnitSystem many = UnitSystem::build(f, {theta, theta.inverse(), theta * theta});
    CHECK(dirichlet_rank_check(many).rank <= 1);
}

TEST_CASE("positivity_enforce") {
    // x^3 - x + 1 has one negative real root ~ -1.3247: its generator has a
    // negative real embedding and must come back squared
    FieldPtr f = NumberField::build(Poly{1, -1, 0, 1});
    AlgebraicNumber theta = f->generator();
    CHECK(is_unit(theta));
    CHECK(theta.embed(0).re.sign() < 0);
    auto fixed = positivity_enforce({theta});
    CHECK(fixed[0] == theta * theta);
    CHECK(fixed[0].embed(0).re.sign() > 0);

    // already positive stays put; 1 stays put
    FieldPtr p = plastic();
    auto kept = positivity_enforce({p->generator(), p->one()});
    CHECK(kept[0] == p->generator());
    CHECK(kept[1] == p->one());
}

TEST_CASE("admissibility_check examples") {
    FieldPtr f = plastic();
    UnitSystem good = UnitSystem::build(f, {f->generator()});
    AdmissibilityCertificate cert = admissibility_check(good);
    CHECK(cert.verdict == Admissibility::Admissible);
    CHECK(cert.det_abs_lower.to_double() == doctest::Approx(0.2811995743).epsilon(1e-8));

    UnitSystem trivial = UnitSystem::build(f, {f->one()});
    CHECK(admissibility_check(trivial).verdict == Admissibility::NotAdmissible);

    UnitSystem wrong_count = UnitSystem::build(f, {f->generator(), f->generator() * f->generator()});
    CHECK(admissibility_check(wrong_count).verdict == Admissibility::NotAdmissible);
}

TEST_CASE("admissibility is invariant under permutation and inversion") {
    FieldPtr f = NumberField::build(Poly{-1, -1, 0, 0, 1});  // x^4 - x - 1, s = 2
    auto found = unit_search(f, 3, 8);
    REQUIRE(found.size() >= 2);
    auto pos = positivity_enforce(found);
    UnitSystem pool = UnitSystem::build(f, pos);
    CompletionResult comp = complete_basis(UnitSystem::build(f, {}), pool);
    REQUIRE(comp.ok);
    const auto& gens = comp.system.generators;
    REQUIRE(gens.size() == 2);

    auto det_of = [&](std::vector<AlgebraicNumber> gs) {
        return admissibility_check(UnitSystem::build(f, gs)).det.abs();
    };
    Interval d0 = det_of({gens[0], gens[1]});
    Interval d1 = det_of({gens[1], gens[0]});
    Interval d2 = det_of({gens[0].inverse(), gens[1]});  // |det| unchanged by g -> g^-1
    CHECK(d0.intersects(d1));
    CHECK(d0.intersects(d2));

    auto v0 = admissibility_check(UnitSystem::build(f, {gens[0], gens[1]})).verdict;
    auto v1 = admissibility_check(UnitSystem::build(f, {gens[1], gens[0]})).verdict;
    CHECK(v0 == v1);
    CHECK(v0 == Admissibility::Admissible);
}

TEST_CASE("unit_search examples") {
    FieldPtr f = plastic();
    auto found = unit_search(f, 3, 16);
    REQUIRE(!found.empty());
    // the smallest unit is theta itself (canonical representative)
    CHECK(found.front() == f->generator());
    // log heights ascend
    for (size_t i = 1; i < found.size(); ++i) {
        CHECK(!(log_height(found[i]).mid() < log_height(found[i - 1]).mid()));
    }

    FieldPtr g = cbrt2();
    auto g_found = unit_search(g, 3, 16);
    AlgebraicNumber tm1 = g->generator() - g->one();
    bool has_class = false;
    for (const auto& u : g_found) has_class = has_class || u == canonical_unit_rep(tm1);
    CHECK(has_class);

    CHECK(unit_search(f, 0, 16).empty());
}

TEST_CASE("unit_search results are closed under the class normalization") {
    FieldPtr f = NumberField::build(Poly{-1, -1, 0, 0, 1});
    auto found = unit_search(f, 2, 32);
    for (size_t i = 0; i < found.size(); ++i) {
        // every result is its own canonical representative
        CHECK(found[i] == canonical_unit_rep(found[i]));
        for (size_t j = i + 1; j < found.size(); ++j) {
            CHECK(!(found[i] == found[j]));
            CHECK(!(found[i] == -found[j]));
            CHECK(!(found[i] == found[j].inverse()));
            CHECK(!(found[i] == -found[j].inverse()));
        }
    }
}

TEST_CASE("complete_basis examples") {
    // s = 1: the seed alone suffices
    FieldPtr f = plastic();
    UnitSystem seed = UnitSystem::build(f, {f->generator()});
    UnitSystem empty_pool = UnitSystem::build(f, {});
    CompletionResult r = complete_basis(seed, empty_pool);
    CHECK(r.ok);
    CHECK(r.system.size() == 1);

    // a zero-log seed cannot be extended to full rank
    UnitSystem bad_seed = UnitSystem::build(f, {f->one()});
    CompletionResult rb = complete_basis(bad_seed, empty_pool);
    CHECK(!rb.ok);

    // rank-deficient pool surfaces a completion failure
    FieldPtr q = NumberField::build(Poly{-1, -1, 0, 0, 1});  // s = 2
    UnitSystem thin_pool = UnitSystem::build(q, {});
    CompletionResult rq = complete_basis(UnitSystem::build(q, {}), thin_pool);
    CHECK(!rq.ok);
}
