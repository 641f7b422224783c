// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned in code, next to each criterion.

#include "otkit/inoue.hpp"
#include "otkit/kernel_form.hpp"
#include "otkit/pipelines.hpp"
#include "otkit/subfield_embedder.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace otkit;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::printf("criterion %d (%s): %s%s%s\n", number, name.c_str(), pass ? "PASS" : "FAIL",
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct SuiteField {
    const char* name;
    Poly defining;
    int s, t;
};

std::vector<SuiteField> suite_fields() {
    return {
        {"t^3-t-1", Poly{-1, -1, 0, 1}, 1, 1},
        {"t^4-t-1", Poly{-1, -1, 0, 0, 1}, 2, 1},
        {"t^5-t-1", Poly{-1, -1, 0, 0, 0, 1}, 1, 2},
        {"t^6-2", Poly{-2, 0, 0, 0, 0, 0, 1}, 2, 2},
    };
}

// criterion 1: exact signatures, under a second each
void criterion_signature() {
    bool pass = true;
    std::string detail;
    for (const SuiteField& sf : suite_fields()) {
        auto t0 = std::chrono::steady_clock::now();
        FieldPtr f = NumberField::build(sf.defining);
        double dt = seconds_since(t0);
        bool ok = f->real_embeddings() == sf.s && f->complex_pairs() == sf.t && dt < 1.0;
        pass = pass && ok;
        detail += std::string(sf.name) + " -> (" + std::to_string(f->real_embeddings()) + "," +
                  std::to_string(f->complex_pairs()) + ") in " + std::to_string(dt).substr(0, 5) +
                  "s; ";
    }
    report(1, "signature suite", pass, detail);
}

// criterion 2: log sums vanish below 2^-60 at 128 bits; Dirichlet rank never
// exceeds s+t-1 and reaches it for the cubic field; under 30 s per field
void criterion_units() {
    bool pass = true;
    std::string detail;
    BigFloat bound = BigFloat::pow2(-60);
    for (const SuiteField& sf : suite_fields()) {
        auto t0 = std::chrono::steady_clock::now();
        FieldPtr f = NumberField::build(sf.defining);
        auto found = unit_search(f, 5, 64);
        UnitSystem us = UnitSystem::build(f, found);
        bool sums_ok = true;
        for (const auto& row : us.log_rows) {
            Interval sum(f->policy().prec());
            for (const Interval& x : row) sum = sum + x;
            sums_ok = sums_ok && !(sum.abs().upper() > bound);
        }
        RankReport rank = dirichlet_rank_check(us);
        double dt = seconds_since(t0);
        bool rank_ok = !rank.inconclusive && rank.rank <= rank.expected;
        if (sf.defining.degree() == 3) rank_ok = rank_ok && rank.rank == rank.expected;
        bool ok = sums_ok && rank_ok && dt < 30.0;
        pass = pass && ok;
        detail += std::string(sf.name) + ": " + std::to_string(found.size()) + " units, rank " +
                  std::to_string(rank.rank) + "/" + std::to_string(rank.expected) + ", " +
                  std::to_string(dt).substr(0, 5) + "s; ";
    }
    report(2, "unit-lattice suite", pass, detail);
}

// criterion 3: admissibility of {theta} for the plastic field and of a
// completed rank-2 system for t^4-t-1, |det| lower bound above 1e-6
void criterion_admissibility() {
    BigFloat floor = BigFloat::from_double(1e-6, 64);

    FieldPtr plastic = NumberField::build(Poly{-1, -1, 0, 1});
    AdmissibilityCertificate a =
        admissibility_check(UnitSystem::build(plastic, {plastic->generator()}));
    bool ok1 = a.verdict == Admissibility::Admissible && a.det_abs_lower > floor;

    FieldPtr quartic = NumberField::build(Poly{-1, -1, 0, 0, 1});
    UnitSystem pool =
        UnitSystem::build(quartic, positivity_enforce(unit_search(quartic, 5, 32)));
    CompletionResult comp = complete_basis(UnitSystem::build(quartic, {}), pool);
    bool ok2 = comp.ok;
    std::string d2 = "completion failed";
    if (comp.ok) {
        AdmissibilityCertificate b = admissibility_check(comp.system);
        ok2 = b.verdict == Admissibility::Admissible && b.det_abs_lower > floor;
        d2 = "quartic |det| >= " + b.det_abs_lower.str(6);
    }
    report(3, "admissibility", ok1 && ok2,
           "plastic |det| >= " + a.det_abs_lower.str(6) + "; " + d2);
}

OTData make_suite_ot(const Poly& defining) {
    FieldPtr f = NumberField::build(defining);
    auto found = unit_search(f, 5, 8);
    std::vector<AlgebraicNumber> gens(found.begin(),
                                      found.begin() + std::min<size_t>(found.size(), 1));
    return assemble_ot(f, UnitSystem::build(f, positivity_enforce(gens)));
}

// criterion 4: action compatibility below 2^-60 on 1000 random triples per
// datum; group_mul associativity exact on 1000 triples
void criterion_action() {
    bool pass = true;
    std::string detail;
    BigFloat bound = BigFloat::pow2(-60);
    for (const Poly& p : {Poly{-1, -1, 0, 1}, Poly{-1, -1, 0, 0, 0, 1}}) {
        OTData ot = make_suite_ot(p);
        CompatReport rep = verify_action_compat(ot, 1000, 0);
        bool ok = !(rep.max_dev > bound);
        Rng rng(99);
        for (int k = 0; k < 1000; ++k) {
            GroupElement g1 = random_group_element(ot, rng);
            GroupElement g2 = random_group_element(ot, rng);
            GroupElement g3 = random_group_element(ot, rng);
            GroupElement l = group_mul(group_mul(g1, g2), g3);
            GroupElement r = group_mul(g1, group_mul(g2, g3));
            ok = ok && l.u == r.u && l.a == r.a;
        }
        pass = pass && ok;
        detail += ot.field->defining().str() + ": max dev " + rep.max_dev.str(4) + "; ";
    }
    report(4, "action compatibility", pass, detail);
}

// criterion 5: leaf disjointness with certified-real candidates on 200
// deterministic nontrivial elements per datum, zero failures
void criterion_leaves() {
    bool pass = true;
    std::string detail;
    for (const Poly& p : {Poly{-1, -1, 0, 1}, Poly{-1, -1, 0, 0, 0, 1}}) {
        OTData ot = make_suite_ot(p);
        auto elements = deterministic_group_elements(ot, 200);
        int ok_count = 0;
        for (const GroupElement& g : elements) {
            LeafReport rep = leaf_intersection_solve(ot, g);
            bool all_real = rep.no_fixed_leaf;
            for (const auto& c : rep.coords) all_real = all_real && c.value.is_exact_real();
            if (all_real) ++ok_count;
        }
        pass = pass && ok_count == 200 && elements.size() == 200;
        detail += ot.field->defining().str() + ": " + std::to_string(ok_count) + "/200; ";
    }
    report(5, "leaf disjointness", pass, detail);
}

// criterion 6: dd^c at 10 points (256 bits, step 2^-40) below 2^-30 relative;
// invariance over generators + 100 words below 2^-60; semipositivity over
// 1000 samples above -2^-60; kernel dimension t at every sample
void criterion_form() {
    bool pass = true;
    std::string detail;
    for (const Poly& p : {Poly{-1, -1, 0, 1}, Poly{-1, -1, 0, 0, 0, 1}}) {
        FieldPtr f256 = NumberField::build(p, PrecisionPolicy::with_bits(256));
        Domain d = Domain::of(*f256);
        Rng rng(7);
        BigFloat worst(256);
        bool kernel_ok = true;
        for (int k = 0; k < 10; ++k) {
            Point z = random_point(*f256, rng);
            DdcReport rep = verify_ddc(d, z, 40, f256->policy());
            if (rep.max_rel_err > worst) worst = rep.max_rel_err;
            auto basis = zero_foliation_kernel(d, z);
            kernel_ok = kernel_ok && static_cast<int>(basis.size()) == d.t;
            for (const auto& v : basis)
                kernel_ok = kernel_ok && eval_form(d, z, v).is_exact_zero();
        }
        bool ddc_ok = !(worst > BigFloat::pow2(-30));

        OTData ot = make_suite_ot(p);
        InvarianceReport inv = verify_invariance(ot, 100, 0);
        bool inv_ok = !(inv.max_dev > BigFloat::pow2(-60));

        Rng rng2(8);
        mpfr_prec_t prec = ot.field->policy().prec();
        BigFloat min_val(prec);
        bool first = true;
        for (int k = 0; k < 1000; ++k) {
            Point z = random_point(*ot.field, rng2);
            TangentVector v;
            for (int i = 0; i < d.m(); ++i)
                v.v.push_back(CInterval(Interval::from_rat(rng2.next_rat(Rat(-2), Rat(2)), prec),
                                        Interval::from_rat(rng2.next_rat(Rat(-2), Rat(2)), prec)));
            BigFloat low = eval_form(d, z, v).lower();
            if (first || low < min_val) min_val = low;
            first = false;
        }
        bool semi_ok = !(min_val < -BigFloat::pow2(-60));

        pass = pass && ddc_ok && inv_ok && semi_ok && kernel_ok;
        detail += p.str() + ": ddc " + worst.str(4) + ", inv " + inv.max_dev.str(4) + ", min " +
                  min_val.str(4) + "; ";
    }
    report(6, "form suite", pass, detail);
}

// criterion 7: the companion matrix of t^3-t-1 is accepted with certified
// identities; the identity matrix and an all-real-spectrum matrix are not
void criterion_inoue() {
    bool pass = true;
    std::string detail;

    IntMatrix3 companion = IntMatrix3::from_row_major(
        {Int(0), Int(0), Int(1), Int(1), Int(0), Int(1), Int(0), Int(1), Int(0)});
    InoueData d = inoue_from_matrix(companion);
    bool id_ok = !(d.alpha2c_minus_1().abs().upper() > BigFloat::pow2(-60));

    // independently bisected real root
    std::pair<Rat, Rat> encl{Rat(1), Rat(2)};
    Poly p{-1, -1, 0, 1};
    for (int k = 0; k < 60; ++k) {
        Rat mid = (encl.first + encl.second) / 2;
        if (p.eval(mid) < 0)
            encl.first = mid;
        else
            encl.second = mid;
    }
    double oracle = Rat((encl.first + encl.second) / 2).get_d();
    bool c_ok = std::abs(d.c.mid().to_double() - oracle) < 1e-9 &&
                std::abs(oracle - 1.324717957) < 1e-8;
    bool rank_ok = verify_lattice_rank(d, BigFloat::pow2(-64)) == Check::True;

    bool ident_rejected = false;
    try {
        inoue_from_matrix(IntMatrix3::identity());
    } catch (const input_error&) {
        ident_rejected = true;
    }
    bool allreal_rejected = false;
    try {
        inoue_from_matrix(IntMatrix3::from_row_major(
            {Int(0), Int(0), Int(1), Int(1), Int(0), Int(3), Int(0), Int(1), Int(0)}));
    } catch (const input_error&) {
        allreal_rejected = true;
    }

    pass = id_ok && c_ok && rank_ok && ident_rejected && allreal_rejected;
    detail = "|alpha^2 c - 1| <= " + d.alpha2c_minus_1().abs().upper().str(4) + ", c mid " +
             d.c.mid().str(12);
    report(7, "Inoue suite", pass, detail);
}

// criterion 8: the sextic/cubic embedder pipeline end to end, under 2 minutes
void criterion_embedder() {
    auto t0 = std::chrono::steady_clock::now();
    FieldPtr K = NumberField::build(Poly{-2, 0, 0, 0, 0, 0, 1});

    SubfieldWitness w = verify_subfield(K, K->element(Poly{0, 0, 1}));
    bool sig_ok = w.flag == WitnessFlag::Ok && w.k1_s == 1 && w.k1_t == 1;

    bool hom_ok = true;
    Rng rng(21);
    for (int trial = 0; trial < 200 && sig_ok; ++trial) {
        std::vector<Rat> xc, yc;
        for (int k = 0; k < 3; ++k) {
            xc.emplace_back(rng.next_in(-9, 9));
            yc.emplace_back(rng.next_in(-9, 9));
        }
        AlgebraicNumber x = w.k1->element(Poly(xc));
        AlgebraicNumber y = w.k1->element(Poly(yc));
        hom_ok = hom_ok &&
                 include_element(w, K, x * y) == include_element(w, K, x) * include_element(w, K, y) &&
                 include_element(w, K, x + y) == include_element(w, K, x) + include_element(w, K, y);
    }

    bool compat_ok = false;
    std::string dev = "n/a";
    if (sig_ok) {
        UnitSystem pool = UnitSystem::build(K, positivity_enforce(unit_search(K, 5, 32)));
        EmbeddedSurface e = build_embedding(K, w, pool);
        OTData ot = assemble_ot(K, e.big_units);
        CompatReport rep = verify_embedding_compat(e, ot, 100, 0);
        compat_ok = !(rep.max_dev > BigFloat::pow2(-60));
        dev = rep.max_dev.str(4);
    }

    SubfieldWitness w2 = verify_subfield(K, K->element(Poly{0, 0, 0, 1}));
    bool flag_ok = w2.flag == WitnessFlag::WrongSignature && w2.k1_s == 2 && w2.k1_t == 0;

    double dt = seconds_since(t0);
    bool pass = sig_ok && hom_ok && compat_ok && flag_ok && dt < 120.0;
    report(8, "embedder suite", pass,
           "max dev " + dev + ", theta^3 flagged (2,0): " + (flag_ok ? "yes" : "no") + ", " +
               std::to_string(dt).substr(0, 5) + "s");
}

// criterion 9: byte-identical certificates on a re-run with the same seed
void criterion_determinism() {
    std::vector<std::pair<std::string, std::string>> jobs = {
        {"signature", R"({"defining": ["-1","-1","0","1"], "label": "plastic"})"},
        {"units", R"({"defining": ["-1","-1","0","1"]})"},
        {"admissible", R"({"field": {"defining": ["-1","-1","0","1"]}, "units": [["0","1","0"]]})"},
        {"build-ot", R"({"field": {"defining": ["-1","-1","0","1"]}, "units": [["0","1","0"]]})"},
        {"check-form", R"({"field": {"defining": ["-1","-1","0","1"]}, "units": [["0","1","0"]]})"},
        {"inoue", R"({"matrix": [0,0,1, 1,0,1, 0,1,0]})"},
        {"embed", R"({"field": {"defining": ["-2","0","0","0","0","0","1"]}, "eta": ["0","0","1"]})"},
        {"probe",
         R"({"field": {"defining": ["-2","0","0","0","0","0","1"]}, "candidates": [["0","0","1"],["0","0","0","1"]]})"},
    };
    RunOptions opt;
    opt.trials = 100;
    opt.seed = 7;
    bool pass = true;
    std::string detail;
    for (const auto& [cmd, spec] : jobs) {
        std::string a = run_command(cmd, spec, opt).to_text();
        std::string b = run_command(cmd, spec, opt).to_text();
        if (a != b) {
            pass = false;
            detail += cmd + " differs; ";
        }
    }
    report(9, "determinism", pass, detail.empty() ? "8 commands byte-identical" : detail);
}

}  // namespace

int main() {
    std::printf("otkit acceptance suite\n");
    try {
        criterion_signature();
        criterion_units();
        criterion_admissibility();
        criterion_action();
        criterion_leaves();
        criterion_form();
        criterion_inoue();
        criterion_embedder();
        criterion_determinism();
    } catch (const std::exception& e) {
        std::printf("unexpected exception: %s\n", e.what());
        return 1;
    }
    std::printf("%s\n", failures == 0 ? "all criteria passed" : "FAILURES present");
    return failures == 0 ? 0 : 1;
}
