#include "otkit/subfield_embedder.hpp"

#include "otkit/inoue.hpp"

#include <doctest.h>

using namespace otkit;

namespace {

FieldPtr sextic() { return NumberField::build(Poly{-2, 0, 0, 0, 0, 0, 1}); }  // x^6 - 2

}  // namespace

TEST_CASE("verify_subfield examples over Q(2^(1/6))") {
    FieldPtr K = sextic();

    // eta = theta^2 generates Q(2^(1/3)): signature (1,1)
    SubfieldWitness w = verify_subfield(K, K->element(Poly{0, 0, 1}));
    CHECK(w.flag == WitnessFlag::Ok);
    CHECK(w.k1_defining == Poly{-2, 0, 0, 1});
    CHECK(w.k1_s == 1);
    CHECK(w.k1_t == 1);
    REQUIRE(w.k1);
    CHECK(w.k1->degree() == 3);

    // eta = theta^3 generates Q(sqrt 2): signature (2,0), flagged
    SubfieldWitness w2 = verify_subfield(K, K->element(Poly{0, 0, 0, 1}));
    CHECK(w2.flag == WitnessFlag::WrongSignature);
    CHECK(w2.k1_defining == Poly{-2, 0, 1});
    CHECK(w2.k1_s == 2);
    CHECK(w2.k1_t == 0);
    CHECK(!w2.usable_for_embedding());

    // eta = theta generates K itself: not proper
    SubfieldWitness w3 = verify_subfield(K, K->generator());
    CHECK(w3.flag == WitnessFlag::NotProper);

    // rational eta
    SubfieldWitness w4 = verify_subfield(K, K->from_rat(Rat(7)));
    CHECK(w4.flag == WitnessFlag::Rational);
}

TEST_CASE("inclusion is an exact ring homomorphism") {
    FieldPtr K = sextic();
    SubfieldWitness w = verify_subfield(K, K->element(Poly{0, 0, 1}));
    REQUIRE(w.flag == WitnessFlag::Ok);

    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Rat> xc, yc;
        for (int k = 0; k < 3; ++k) {
            xc.emplace_back(rng.next_in(-9, 9));
            yc.emplace_back(rng.next_in(-9, 9));
        }
        AlgebraicNumber x = w.k1->element(Poly(xc));
        AlgebraicNumber y = w.k1->element(Poly(yc));
        AlgebraicNumber ix = include_element(w, K, x);
        AlgebraicNumber iy = include_element(w, K, y);
        CHECK(include_element(w, K, x * y) == ix * iy);
        CHECK(include_element(w, K, x + y) == ix + iy);
    }
    // 1 maps to 1, 0 to 0
    CHECK(include_element(w, K, w.k1->one()) == K->one());
    CHECK(include_element(w, K, w.k1->zero()) == K->zero());
}

TEST_CASE("match_restrictions over the sextic") {
    FieldPtr K = sextic();
    SubfieldWitness w = verify_subfield(K, K->element(Poly{0, 0, 1}));
    RestrictionMap rm = match_restrictions(K, w);
    REQUIRE(rm.r.size() == 6);

    // real embeddings of K restrict to the real embedding of K1
    CHECK(rm.r[0] == 0);
    CHECK(rm.r[1] == 0);
    // after swaps, both representatives restrict to tau_2 itself or the real
    // place, never the conjugate
    for (int i = 2; i < 4; ++i) CHECK(rm.r[static_cast<size_t>(i)] != 2);
    // place counting: tau_2 and its conjugate together receive [K:K1] = 2
    // complex embeddings of K, and the real place of K1 receives the rest
    int to_real = 0, to_cplx = 0;
    for (int i = 0; i < 6; ++i) {
        if (rm.r[static_cast<size_t>(i)] == 0)
            ++to_real;
        else
            ++to_cplx;
    }
    CHECK(to_real == 2);
    CHECK(to_cplx == 4);

    // embedding-value coherence after swaps, on random elements of K1
    Rng rng(9);
    int s = K->real_embeddings(), t = K->complex_pairs();
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Rat> xc;
        for (int k = 0; k < 3; ++k) xc.emplace_back(rng.next_in(-5, 5));
        AlgebraicNumber x = w.k1->element(Poly(xc));
        AlgebraicNumber ix = include_element(w, K, x);
        for (int i = 0; i < K->places(); ++i) {
            int eff = rm.effective(i, s, t);
            CInterval lhs = ix.embed(eff);
            CInterval rhs = x.embed(rm.r[static_cast<size_t>(i)]);
            CHECK(lhs.re.intersects(rhs.re));
            CHECK(lhs.im.intersects(rhs.im));
        }
    }
}

TEST_CASE("build_embedding over Q(2^(1/6)) / Q(2^(1/3))") {
    FieldPtr K = sextic();
    SubfieldWitness w = verify_subfield(K, K->element(Poly{0, 0, 1}));
    UnitSystem pool = UnitSystem::build(K, positivity_enforce(unit_search(K, 5, 32)));
    EmbeddedSurface e = build_embedding(K, w, pool);

    // the seed unit: u = canonical rep of the theta-1 class of Q(2^(1/3)),
    // squared, then included; norm_K(image) = norm_K1(u1)^2 = 1
    CHECK(is_unit(e.u1_in_K));
    CHECK(e.u1_in_K.norm() == Rat(1));
    CHECK(e.u1_in_k1.norm() == Rat(1));
    CHECK(include_element(w, K, e.u1_in_k1) == e.u1_in_K);

    // the admissible system leads with the seed
    CHECK(e.big_units.generators.front() == e.u1_in_K);
    CHECK(static_cast<int>(e.big_units.size()) == K->real_embeddings());
    CHECK(e.cert.verdict == Admissibility::Admissible);

    // map_spec sends w1 to real-restriction places and w2 to the rest
    REQUIRE(e.map_spec.size() == 4);
    for (int i = 0; i < K->places(); ++i) {
        int expect = e.restriction.r[static_cast<size_t>(i)] == 0 ? 0 : 1;
        CHECK(e.map_spec[static_cast<size_t>(i)] == expect);
    }
    // the H coordinates always carry w1
    for (int i = 0; i < K->real_embeddings(); ++i) CHECK(e.map_spec[static_cast<size_t>(i)] == 0);
}

TEST_CASE("embedding equivariance on random group elements") {
    FieldPtr K = sextic();
    SubfieldWitness w = verify_subfield(K, K->element(Poly{0, 0, 1}));
    UnitSystem pool = UnitSystem::build(K, positivity_enforce(unit_search(K, 5, 32)));
    EmbeddedSurface e = build_embedding(K, w, pool);
    OTData ot = assemble_ot(K, e.big_units);

    CompatReport rep = verify_embedding_compat(e, ot, 100, 0);
    CHECK(rep.pass);
    CHECK(rep.max_dev < BigFloat::pow2(-60));

    // the wrong unit system is rejected
    OTData other = assemble_ot(K, pool);
    CHECK_THROWS_AS(verify_embedding_compat(e, other, 10, 0), input_error);
}

TEST_CASE("the embedded source reproduces an Inoue surface") {
    FieldPtr K = sextic();
    SubfieldWitness w = verify_subfield(K, K->element(Poly{0, 0, 1}));
    UnitSystem pool = UnitSystem::build(K, positivity_enforce(unit_search(K, 5, 32)));
    EmbeddedSurface e = build_embedding(K, w, pool);
    InoueData d = inoue_from_cubic(w.k1, e.u1_in_k1);
    CHECK(d.alpha2c_minus_1().abs().upper() < BigFloat::pow2(-60));
    CHECK(verify_lattice_rank(d, BigFloat::pow2(-64)) == Check::True);
}

TEST_CASE("conjecture_probe aggregates candidate signatures") {
    FieldPtr K = sextic();
    std::vector<AlgebraicNumber> candidates{
        K->element(Poly{0, 0, 1}),  // (1,1) hit
        K->element(Poly{0, 0, 0, 1}),  // (2,0) miss
        K->from_rat(Rat(3)),  // rational: skipped
    };
    ProbeReport rep = conjecture_probe(K, candidates);
    REQUIRE(rep.entries.size() == 3);
    CHECK(rep.hits == 1);
    CHECK(rep.entries[0].hit_11);
    CHECK(rep.entries[1].flag == WitnessFlag::WrongSignature);
    CHECK(rep.entries[1].s == 2);
    CHECK(rep.entries[2].flag == WitnessFlag::Rational);
    CHECK(rep.entries[2].note.find("skipped") != std::string::npos);

    CHECK(conjecture_probe(K, {}).entries.empty());
}
