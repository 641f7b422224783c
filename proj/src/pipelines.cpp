#include "otkit/pipelines.hpp"

#include <algorithm>

namespace otkit {

namespace {

Certificate base_certificate(const std::string& command, ojson inputs, const RunOptions& opt) {
    Certificate c;
    c.command = command;
    c.inputs = std::move(inputs);
    c.bits = opt.bits;
    c.tolerance_exp = opt.policy().tolerance_exp;
    c.seed = opt.seed;
    c.caveats.push_back(
        "field arithmetic runs in the power-basis order Z[theta]; translations span "
        "Z[theta], a finite-index subgroup of O_K");
    return c;
}

ojson signature_evidence(const NumberField& f) {
    return ojson{{"degree", f.degree()},
                 {"s", f.real_embeddings()},
                 {"t", f.complex_pairs()},
                 {"ot_eligible", f.ot_eligible()}};
}

ojson roots_evidence(const NumberField& f, int digits = 30) {
    ojson roots = ojson::array();
    for (int i = 0; i < f.degree(); ++i) roots.push_back(evidence_cinterval(f.root(i), digits));
    return ojson{{"roots", roots},
                 {"pairwise_separation_lower", evidence_value(f.separation_lower(), 10)}};
}

ojson unit_evidence(const AlgebraicNumber& u) {
    ojson row = ojson::array();
    for (const Interval& x : log_map(u)) row.push_back(evidence_interval(x, 25));
    return ojson{{"residue", u.residue().coeff_strings()},
                 {"element", u.str()},
                 {"log", row},
                 {"log_height", evidence_interval(log_height(u), 15)}};
}

std::string admissibility_name(Admissibility a) {
    switch (a) {
        case Admissibility::Admissible: return "pass";
        case Admissibility::NotAdmissible: return "fail";
        case Admissibility::Inconclusive: return "inconclusive";
    }
    return "fail";
}

ojson admissibility_evidence(const AdmissibilityCertificate& cert) {
    ojson proj = ojson::array();
    for (const auto& row : cert.projected) {
        ojson r = ojson::array();
        for (const Interval& x : row) r.push_back(evidence_interval(x, 25));
        proj.push_back(r);
    }
    ojson j{{"projected_log_matrix", proj},
            {"det", evidence_interval(cert.det, 25)},
            {"det_abs_lower", evidence_value(cert.det_abs_lower, 15)}};
    if (!cert.reason.empty()) j["reason"] = cert.reason;
    return j;
}

// Units for the OT-style commands: taken from the spec file when present,
// otherwise searched, made positive and completed to s generators.
UnitSystem resolve_units(const FieldPtr& field, const OTSpec& spec, const RunOptions& opt,
                         ojson& inputs) {
    if (spec.units) {
        std::vector<AlgebraicNumber> gens;
        for (const Poly& p : *spec.units) gens.push_back(field->element(p));
        ojson echo = ojson::array();
        for (const auto& g : gens) echo.push_back(g.residue().coeff_strings());
        inputs["units"] = echo;
        try {
            return UnitSystem::build(field, gens);
        } catch (const precision_error&) {
            throw;
        } catch (const error& e) {
            throw input_error(std::string("spec 'units': ") + e.what());
        }
    }
    std::vector<AlgebraicNumber> pool_gens =
        positivity_enforce(unit_search(field, opt.bound, 64));
    UnitSystem pool = UnitSystem::build(field, pool_gens);
    CompletionResult comp = complete_basis(UnitSystem::build(field, {}), pool);
    inputs["units"] = "searched (bound " + std::to_string(opt.bound) + ")";
    if (!comp.ok && comp.system.generators.empty()) return pool;
    return comp.system;
}

}  // namespace

Certificate run_signature(const FieldSpec& spec, const RunOptions& opt) {
    Certificate cert = base_certificate("signature", spec.echo, opt);
    FieldPtr f = NumberField::build(spec.defining, opt.policy());
    cert.add("signature", true, signature_evidence(*f));
    ojson irr{{"status", f->irreducibility().status == Proof::Proven ? "Proven" : "Unknown"},
              {"method", f->irreducibility().method}};
    cert.add("irreducibility", true, irr);
    cert.add("roots-certified", true, roots_evidence(*f));
    cert.finalize();
    return cert;
}

Certificate run_units(const FieldSpec& spec, const RunOptions& opt) {
    Certificate cert = base_certificate("units", spec.echo, opt);
    FieldPtr f = NumberField::build(spec.defining, opt.policy());
    cert.add("signature", true, signature_evidence(*f));

    std::vector<AlgebraicNumber> units = unit_search(f, opt.bound, 64);
    UnitSystem us = UnitSystem::build(f, units);

    // every unit's log row must sum to zero within 10x tolerance
    BigFloat thresh = f->policy().tolerance() * BigFloat::from_long(10, 32);
    bool sums_ok = true;
    ojson unit_list = ojson::array();
    for (size_t i = 0; i < us.size(); ++i) {
        Interval sum(f->policy().prec());
        for (const Interval& x : us.log_rows[i]) sum = sum + x;
        bool ok = !(sum.abs().upper() > thresh);
        sums_ok = sums_ok && ok;
        ojson e = unit_evidence(us.generators[i]);
        e["log_sum"] = evidence_interval(sum, 20);
        e["log_sum_zero"] = ok;
        unit_list.push_back(e);
    }
    cert.add("unit-search", true,
             ojson{{"bound", opt.bound}, {"count", unit_list.size()}, {"units", unit_list}});
    cert.add("log-sums-vanish", sums_ok);

    RankReport rank = dirichlet_rank_check(us);
    ojson re{{"rank", rank.rank}, {"expected", rank.expected}};
    if (!rank.detail.empty()) re["detail"] = rank.detail;
    cert.add_verdict("dirichlet-rank", rank.inconclusive ? "inconclusive" : (rank.pass ? "pass" : "fail"),
                     re);
    cert.finalize();
    return cert;
}

// the OT spec's optional policy member takes precedence over --bits
RunOptions with_spec_policy(RunOptions opt, const OTSpec& spec) {
    if (spec.working_bits) opt.bits = *spec.working_bits;
    return opt;
}

Certificate run_admissible(const OTSpec& spec, const RunOptions& opt_in) {
    RunOptions opt = with_spec_policy(opt_in, spec);
    Certificate cert = base_certificate("admissible", spec.field.echo, opt);
    FieldPtr f = NumberField::build(spec.field.defining, opt.policy());
    cert.add("signature", true, signature_evidence(*f));
    UnitSystem us = resolve_units(f, spec, opt, cert.inputs);
    AdmissibilityCertificate ac = admissibility_check(us);
    cert.add_verdict("admissibility", admissibility_name(ac.verdict), admissibility_evidence(ac));
    cert.finalize();
    return cert;
}

Certificate run_build_ot(const OTSpec& spec, const RunOptions& opt_in) {
    RunOptions opt = with_spec_policy(opt_in, spec);
    Certificate cert = base_certificate("build-ot", spec.field.echo, opt);
    FieldPtr f = NumberField::build(spec.field.defining, opt.policy());
    cert.add("signature", true, signature_evidence(*f));
    if (!f->ot_eligible()) {
        cert.add("ot-eligibility", false,
                 ojson{{"reason", "field needs s > 0 and t > 0 for the OT construction"}});
        cert.finalize();
        return cert;
    }
    UnitSystem us = resolve_units(f, spec, opt, cert.inputs);
    OTData ot = assemble_ot(f, us);

    ValidationOptions vopt;
    vopt.compat_trials = opt.trials;
    vopt.leaf_elements = 200;
    vopt.seed = opt.seed;
    ValidationBundle b = validate(ot, vopt);

    cert.add_verdict("admissibility", admissibility_name(b.admissibility.verdict),
                     admissibility_evidence(b.admissibility));
    cert.add("positivity", b.positivity_ok);
    ojson re{{"rank", b.rank.rank}, {"expected", b.rank.expected}};
    cert.add_verdict("dirichlet-rank",
                     b.rank.inconclusive ? "inconclusive" : (b.rank.pass ? "pass" : "fail"), re);
    cert.add("action-compatibility", b.compat.pass,
             ojson{{"trials", b.compat.trials},
                   {"max_deviation", evidence_value(b.compat.max_dev, 15)},
                   {"seed", b.compat.seed}});
    cert.add("leaf-disjointness", b.leaf_ok && b.leaf_checked > 0,
             ojson{{"elements_checked", b.leaf_checked}});
    cert.finalize();
    if (b.overall == BundleVerdict::Inconclusive && cert.overall == "pass")
        cert.overall = "inconclusive";
    return cert;
}

Certificate run_check_form(const OTSpec& spec, const RunOptions& opt_in) {
    RunOptions opt = with_spec_policy(opt_in, spec);
    Certificate cert = base_certificate("check-form", spec.field.echo, opt);
    FieldPtr f = NumberField::build(spec.field.defining, opt.policy());
    if (!f->ot_eligible()) {
        cert.add("ot-eligibility", false,
                 ojson{{"reason", "field needs s > 0 and t > 0 for the OT construction"}});
        cert.finalize();
        return cert;
    }
    UnitSystem us = resolve_units(f, spec, opt, cert.inputs);
    OTData ot = assemble_ot(f, us);
    Domain d = Domain::of(*f);

    // finite-difference check of the closed form at sampled points
    long step_exp = std::max<long>(opt.bits / 6, 20);
    Rng rng(opt.seed);
    BigFloat ddc_worst(f->policy().prec());
    bool kernel_ok = true;
    for (int k = 0; k < 10; ++k) {
        Point z = random_point(*f, rng);
        DdcReport rep = verify_ddc(d, z, step_exp, f->policy());
        if (rep.max_rel_err > ddc_worst) ddc_worst = rep.max_rel_err;
        auto kernel = zero_foliation_kernel(d, z);
        kernel_ok = kernel_ok && static_cast<int>(kernel.size()) == d.t;
        for (const auto& v : kernel)
            kernel_ok = kernel_ok && eval_form(d, z, v).is_exact_zero();
    }
    bool ddc_ok = !(ddc_worst > BigFloat::pow2(-30));
    cert.add("ddc-matches-closed-form", ddc_ok,
             ojson{{"samples", 10},
                   {"step", "2^-" + std::to_string(step_exp)},
                   {"max_rel_err", evidence_value(ddc_worst, 15)}});

    try {
        InvarianceReport inv = verify_invariance(ot, opt.trials, opt.seed + 1);
        cert.add("gamma-invariance", inv.pass,
                 ojson{{"trials", inv.trials},
                       {"max_deviation", evidence_value(inv.max_dev, 15)},
                       {"seed", inv.seed}});
    } catch (const error& e) {
        cert.add("gamma-invariance", false, ojson{{"reason", e.what()}});
    }

    // semipositivity on random tangent vectors
    Rng rng2(opt.seed + 2);
    BigFloat min_val(f->policy().prec());
    bool first = true;
    for (int k = 0; k < opt.trials; ++k) {
        Point z = random_point(*f, rng2);
        TangentVector v;
        for (int i = 0; i < d.m(); ++i) {
            Rat re = rng2.next_rat(Rat(-2), Rat(2));
            Rat im = rng2.next_rat(Rat(-2), Rat(2));
            v.v.push_back(CInterval(Interval::from_rat(re, f->policy().prec()),
                                    Interval::from_rat(im, f->policy().prec())));
        }
        BigFloat low = eval_form(d, z, v).lower();
        if (first || low < min_val) min_val = low;
        first = false;
    }
    BigFloat neg_tol = -f->policy().tolerance();
    cert.add("semipositivity", !(min_val < neg_tol),
             ojson{{"trials", opt.trials}, {"min_value", evidence_value(min_val, 15)}});

    cert.add("kernel-dimension", kernel_ok, ojson{{"expected", d.t}});
    cert.finalize();
    return cert;
}

namespace {

ojson inoue_evidence(const InoueData& d) {
    ojson cvec = ojson::array(), rvec = ojson::array();
    for (int i = 0; i < 3; ++i) {
        cvec.push_back(evidence_cinterval(d.complex_eigvec[static_cast<size_t>(i)], 25));
        rvec.push_back(evidence_interval(d.real_eigvec[static_cast<size_t>(i)], 25));
    }
    return ojson{{"matrix", d.matrix.str()},
                 {"char_poly", d.char_polynomial.str()},
                 {"c", evidence_interval(d.c, 30)},
                 {"alpha", evidence_cinterval(d.alpha, 30)},
                 {"alpha2c_minus_1", evidence_interval(d.alpha2c_minus_1(), 15)},
                 {"complex_eigvec", cvec},
                 {"real_eigvec", rvec},
                 {"generators", d.generators_description()}};
}

void add_inoue_verdicts(Certificate& cert, const InoueData& d, const PrecisionPolicy& policy) {
    cert.add("inoue-structure", true, inoue_evidence(d));
    BigFloat thresh = policy.tolerance() * BigFloat::from_long(10, 32);
    cert.add("unimodularity-identity", !(d.alpha2c_minus_1().abs().upper() > thresh),
             ojson{{"value", evidence_interval(d.alpha2c_minus_1(), 15)}});
    Check rank = verify_lattice_rank(d, policy.tolerance());
    cert.add_verdict("lattice-rank",
                     rank == Check::True ? "pass" : (rank == Check::False ? "fail" : "inconclusive"),
                     ojson::object());
}

}  // namespace

Certificate run_inoue(const InoueSpec& spec, const RunOptions& opt) {
    ojson inputs;
    if (spec.matrix) {
        ojson m = ojson::array();
        for (const Int& v : *spec.matrix) m.push_back(v.get_str());
        inputs["matrix"] = m;
    } else {
        inputs["field"] = spec.field->echo;
        inputs["unit"] = spec.unit->coeff_strings();
    }
    Certificate cert = base_certificate("inoue", inputs, opt);

    try {
        if (spec.matrix) {
            InoueData d = inoue_from_matrix(IntMatrix3::from_row_major(*spec.matrix), opt.policy());
            add_inoue_verdicts(cert, d, opt.policy());
        } else {
            FieldPtr f = NumberField::build(spec.field->defining, opt.policy());
            AlgebraicNumber u = f->element(*spec.unit);
            InoueData d = inoue_from_cubic(f, u);
            add_inoue_verdicts(cert, d, opt.policy());
            cert.add("eigenvalues-match-embeddings", true, ojson::object());
            UnitSystem us = UnitSystem::build(f, {u});
            OTData ot = assemble_ot(f, us);
            CompatReport agree = verify_ot_agreement(d, ot, std::min(opt.trials, 200), opt.seed);
            cert.add("ot-action-agreement", agree.pass,
                     ojson{{"trials", agree.trials},
                           {"max_deviation", evidence_value(agree.max_dev, 15)},
                           {"seed", agree.seed}});
        }
    } catch (const input_error& e) {
        cert.add("inoue-structure", false, ojson{{"reason", e.what()}});
    }
    cert.finalize();
    return cert;
}

Certificate run_embed(const EmbedSpec& spec, const RunOptions& opt) {
    ojson inputs = spec.field.echo;
    inputs["eta"] = spec.eta.coeff_strings();
    Certificate cert = base_certificate("embed", inputs, opt);

    FieldPtr K = NumberField::build(spec.field.defining, opt.policy());
    AlgebraicNumber eta = K->element(spec.eta);
    SubfieldWitness w = verify_subfield(K, eta);
    ojson we{{"flag", witness_flag_name(w.flag)},
             {"k1_signature", ojson::array({w.k1_s, w.k1_t})}};
    if (!w.k1_defining.is_zero()) we["k1_defining"] = w.k1_defining.str();
    cert.add("subfield-witness", w.usable_for_embedding(), we);
    if (!w.usable_for_embedding()) {
        cert.finalize();
        return cert;
    }

    RestrictionMap rm = match_restrictions(K, w);
    ojson rme{{"restriction", rm.r}, {"swaps", rm.swaps}};
    cert.add("restriction-map", true, rme);

    UnitSystem pool;
    if (spec.pool) {
        std::vector<AlgebraicNumber> gens;
        for (const Poly& p : *spec.pool) gens.push_back(K->element(p));
        pool = UnitSystem::build(K, positivity_enforce(gens));
    } else {
        pool = UnitSystem::build(K, positivity_enforce(unit_search(K, opt.bound, 64)));
    }

    try {
        EmbeddedSurface e = build_embedding(K, w, pool, opt.bound);
        ojson be{{"u1_in_k1", e.u1_in_k1.str()},
                 {"u1_in_K", e.u1_in_K.str()},
                 {"map_spec", e.map_spec}};
        ojson gens = ojson::array();
        for (const auto& g : e.big_units.generators) gens.push_back(g.str());
        be["big_units"] = gens;
        cert.add("embedding-built", true, be);
        cert.add_verdict("admissibility", admissibility_name(e.cert.verdict),
                         admissibility_evidence(e.cert));

        OTData ot = assemble_ot(K, e.big_units);
        CompatReport compat = verify_embedding_compat(e, ot, std::min(opt.trials, 200), opt.seed);
        cert.add("embedding-equivariance", compat.pass,
                 ojson{{"trials", compat.trials},
                       {"max_deviation", evidence_value(compat.max_dev, 15)},
                       {"seed", compat.seed}});

        InoueData surf = inoue_from_cubic(w.k1, e.u1_in_k1);
        cert.add("inoue-surface-reproduced", true,
                 ojson{{"char_poly", surf.char_polynomial.str()}});
    } catch (const error& e) {
        cert.add("embedding-built", false, ojson{{"reason", e.what()}});
    }
    cert.finalize();
    return cert;
}

Certificate run_probe(const ProbeSpec& spec, const RunOptions& opt) {
    ojson inputs = spec.field.echo;
    ojson cands = ojson::array();
    for (const Poly& p : spec.candidates) cands.push_back(p.coeff_strings());
    inputs["candidates"] = cands;
    Certificate cert = base_certificate("probe", inputs, opt);

    FieldPtr K = NumberField::build(spec.field.defining, opt.policy());
    std::vector<AlgebraicNumber> etas;
    for (const Poly& p : spec.candidates) etas.push_back(K->element(p));
    ProbeReport rep = conjecture_probe(K, etas);

    ojson entries = ojson::array();
    for (const auto& e : rep.entries) {
        entries.push_back(ojson{{"eta", e.eta},
                                {"signature", ojson::array({e.s, e.t})},
                                {"flag", witness_flag_name(e.flag)},
                                {"hit_11", e.hit_11},
                                {"note", e.note}});
    }
    cert.add("conjecture-probe", true,
             ojson{{"exploration_aid_only", true}, {"hits", rep.hits}, {"entries", entries}});
    cert.finalize();
    return cert;
}

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> kNames{"signature", "units",      "admissible",
                                                 "build-ot",  "check-form", "inoue",
                                                 "embed",     "probe"};
    return kNames;
}

Certificate run_command(const std::string& command, const std::string& spec_text,
                        const RunOptions& opt) {
    ojson j = parse_json_text(spec_text);
    if (command == "signature") return run_signature(parse_field_spec(j), opt);
    if (command == "units") return run_units(parse_field_spec(j), opt);
    if (command == "admissible") return run_admissible(parse_ot_spec(j), opt);
    if (command == "build-ot") return run_build_ot(parse_ot_spec(j), opt);
    if (command == "check-form") return run_check_form(parse_ot_spec(j), opt);
    if (command == "inoue") return run_inoue(parse_inoue_spec(j), opt);
    if (command == "embed") return run_embed(parse_embed_spec(j), opt);
    if (command == "probe") return run_probe(parse_probe_spec(j), opt);
    throw input_error("unknown command '" + command + "'");
}

}  // namespace otkit
