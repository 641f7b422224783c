#include "otkit/ot_manifold.hpp"

namespace otkit {

GroupElement::GroupElement(AlgebraicNumber mult, AlgebraicNumber add)
    : u(std::move(mult)), a(std::move(add)) {
    if (!u.field()->same_field(*a.field())) throw error("group element parts from different fields");
    if (!is_unit(u)) throw error("multiplicative part is not a unit: " + u.str());
    if (!(a.residue().has_integer_coeffs() || a.is_algebraic_integer()))
        throw error("additive part is not an algebraic integer: " + a.str());
}

GroupElement group_mul(const GroupElement& g1, const GroupElement& g2) {
    return GroupElement(g1.u * g2.u, g1.a + g1.u * g2.a);
}

GroupElement group_inverse(const GroupElement& g) {
    AlgebraicNumber ui = g.u.inverse();
    return GroupElement(ui, -(ui * g.a));
}

Point make_point(const NumberField& field, std::vector<CInterval> coords) {
    if (static_cast<int>(coords.size()) != field.places())
        throw error("point needs m = s + t coordinates");
    for (int i = 0; i < field.real_embeddings(); ++i) {
        if (coords[static_cast<size_t>(i)].im.lower().sign() <= 0)
            throw error("coordinate " + std::to_string(i) + " is not certified inside H");
    }
    return Point{std::move(coords)};
}

bool OTData::valid() const {
    if (cert.verdict != Admissibility::Admissible) return false;
    for (bool p : units.positivity)
        if (!p) return false;
    return field->ot_eligible();
}

OTData assemble_ot(FieldPtr field, UnitSystem units) {
    OTData ot;
    ot.cert = admissibility_check(units);
    ot.field = std::move(field);
    ot.units = std::move(units);
    for (int k = 0; k < ot.field->degree(); ++k)
        ot.translation_basis.push_back(ot.field->generator().pow(k));
    return ot;
}

Point act(const GroupElement& g, const Point& z) {
    const NumberField& f = *g.u.field();
    if (static_cast<int>(z.z.size()) != f.places()) throw error("point/field size mismatch");
    Point out;
    out.z.reserve(z.z.size());
    for (int i = 0; i < f.places(); ++i) {
        CInterval uz = g.u.embed(i) * z.z[static_cast<size_t>(i)] + g.a.embed(i);
        if (i < f.real_embeddings() && uz.im.lower().sign() <= 0)
            throw error("action left H in coordinate " + std::to_string(i) +
                        ": non-positive unit image (data corruption)");
        out.z.push_back(std::move(uz));
    }
    return out;
}

GroupElement random_group_element(const OTData& ot, Rng& rng) {
    AlgebraicNumber u = ot.field->one();
    for (const auto& g : ot.units.generators) u = u * g.pow(rng.next_in(-3, 3));
    std::vector<Rat> coeffs;
    coeffs.reserve(static_cast<size_t>(ot.field->degree()));
    for (int k = 0; k < ot.field->degree(); ++k) coeffs.emplace_back(rng.next_in(-5, 5));
    AlgebraicNumber a = ot.field->element(Poly(std::move(coeffs)));
    return GroupElement(u, a);
}

Point random_point(const NumberField& field, Rng& rng) {
    mpfr_prec_t prec = field.policy().prec();
    std::vector<CInterval> coords;
    coords.reserve(static_cast<size_t>(field.places()));
    for (int i = 0; i < field.places(); ++i) {
        Rat re = rng.next_rat(Rat(-2), Rat(2));
        Rat im = i < field.real_embeddings() ? rng.next_rat(Rat(1, 2), Rat(3))
                                             : rng.next_rat(Rat(-2), Rat(2));
        coords.push_back(CInterval(Interval::from_rat(re, prec), Interval::from_rat(im, prec)));
    }
    return make_point(field, std::move(coords));
}

CompatReport verify_action_compat(const OTData& ot, int trials, std::uint64_t seed) {
    CompatReport rep;
    rep.trials = trials;
    rep.seed = seed;
    rep.max_dev = BigFloat(ot.field->policy().prec());
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        GroupElement g1 = random_group_element(ot, rng);
        GroupElement g2 = random_group_element(ot, rng);
        Point z = random_point(*ot.field, rng);
        Point two_step = act(g1, act(g2, z));
        Point one_step = act(group_mul(g1, g2), z);
        for (size_t i = 0; i < z.z.size(); ++i) {
            BigFloat dev = CInterval::dist_upper(two_step.z[i], one_step.z[i]);
            if (dev > rep.max_dev) rep.max_dev = dev;
        }
    }
    rep.pass = !(rep.max_dev > ot.field->policy().tolerance());
    return rep;
}

LeafReport leaf_intersection_solve(const OTData& ot, const GroupElement& g) {
    if (g.is_identity()) throw error("leaf analysis needs a nontrivial group element");
    const NumberField& f = *ot.field;
    LeafReport rep;
    bool translation = g.u.is_one();
    bool all_ok = true;
    for (int i = 0; i < f.real_embeddings(); ++i) {
        LeafCoord lc;
        lc.index = i;
        lc.translation_case = translation;
        if (translation) {
            // u = 1, a != 0: the translation moves every leaf iff sigma_i(a) != 0
            lc.value = g.a.embed(i);
            lc.certified = !lc.value.re.contains_zero() && lc.value.is_exact_real();
            if (!lc.certified)
                throw precision_error("sigma_i(a) indistinguishable from 0 at coordinate " +
                                      std::to_string(i));
        } else {
            CInterval su = g.u.embed(i);
            CInterval one = CInterval::from_rat(Rat(1), su.prec());
            CInterval denom = one - su;
            if (denom.re.contains_zero())
                throw precision_error(
                    "sigma_i(u) indistinguishable from 1 for a nontrivial unit at coordinate " +
                    std::to_string(i));
            // the candidate fixed-leaf coordinate; real by construction, and H
            // has no real points
            lc.value = g.a.embed(i) / denom;
            lc.certified = lc.value.is_exact_real();
        }
        all_ok = all_ok && lc.certified;
        rep.coords.push_back(std::move(lc));
    }
    rep.no_fixed_leaf = all_ok;
    return rep;
}

std::vector<GroupElement> deterministic_group_elements(const OTData& ot, int count) {
    std::vector<GroupElement> out;
    if (ot.units.generators.empty()) return out;
    // units u^k for k in a fixed window, translations over the power basis,
    // and their combinations, in a fixed order
    std::vector<AlgebraicNumber> mults;
    for (long k = -2; k <= 2; ++k) {
        AlgebraicNumber u = ot.field->one();
        for (const auto& g : ot.units.generators) u = u * g.pow(k);
        mults.push_back(u);
    }
    for (const auto& g : ot.units.generators) mults.push_back(g * g);
    std::vector<AlgebraicNumber> adds;
    adds.push_back(ot.field->zero());
    for (const auto& b : ot.translation_basis) {
        adds.push_back(b);
        adds.push_back(-b);
        adds.push_back(b + b);
    }
    for (long stamp = 1; static_cast<int>(out.size()) < count && stamp < 1000; ++stamp) {
        for (const auto& u : mults) {
            for (const auto& a : adds) {
                if (stamp > 1 && a.is_zero()) continue;  // (u, 0) already emitted
                GroupElement g(u, a * ot.field->from_rat(Rat(stamp)));
                if (g.is_identity()) continue;
                out.push_back(g);
                if (static_cast<int>(out.size()) >= count) return out;
            }
        }
    }
    return out;
}

ValidationBundle validate(const OTData& ot, const ValidationOptions& opt) {
    ValidationBundle b;
    b.admissibility = ot.cert;
    b.positivity_ok = true;
    for (bool p : ot.units.positivity) b.positivity_ok = b.positivity_ok && p;
    b.rank = dirichlet_rank_check(ot.units);
    bool incon = false;
    try {
        b.compat = verify_action_compat(ot, opt.compat_trials, opt.seed);
    } catch (const error&) {
        b.compat.pass = false;  // the action left H: broken unit data
    }
    b.leaf_ok = true;
    try {
        for (const GroupElement& g : deterministic_group_elements(ot, opt.leaf_elements)) {
            LeafReport rep = leaf_intersection_solve(ot, g);
            b.leaf_ok = b.leaf_ok && rep.no_fixed_leaf;
            ++b.leaf_checked;
        }
    } catch (const precision_error&) {
        b.leaf_ok = false;
        incon = true;
    }
    incon = incon || b.admissibility.verdict == Admissibility::Inconclusive ||
            b.rank.inconclusive;
    bool pass = b.admissibility.verdict == Admissibility::Admissible && b.positivity_ok &&
                b.rank.pass && b.compat.pass && b.leaf_ok && b.leaf_checked > 0;
    b.overall = incon ? BundleVerdict::Inconclusive
                      : (pass ? BundleVerdict::Pass : BundleVerdict::Fail);
    return b;
}

}  // namespace otkit
