#include "otkit/subfield_embedder.hpp"

#include <algorithm>
#include <sstream>

namespace otkit {

std::string witness_flag_name(WitnessFlag f) {
    switch (f) {
        case WitnessFlag::Ok: return "ok";
        case WitnessFlag::Rational: return "rational";
        case WitnessFlag::NotProper: return "not-proper";
        case WitnessFlag::DegreeNotDividing: return "degree-not-dividing";
        case WitnessFlag::NotIntegral: return "not-integral";
        case WitnessFlag::WrongSignature: return "wrong-signature";
    }
    return "?";
}

SubfieldWitness verify_subfield(const FieldPtr& K, const AlgebraicNumber& eta) {
    if (!eta.field()->same_field(*K)) throw error("eta does not live in K");
    SubfieldWitness w{eta, Poly(), nullptr, 0, 0, WitnessFlag::Rational};
    if (eta.is_rational()) return w;

    w.k1_defining = eta.min_poly();
    int d = w.k1_defining.degree();
    int n = K->degree();
    if (d == n) {
        w.flag = WitnessFlag::NotProper;
    } else if (n % d != 0) {
        w.flag = WitnessFlag::DegreeNotDividing;
    } else {
        w.flag = WitnessFlag::Ok;  // provisional; refined below
    }

    // the signature of Q(eta) is exact Sturm data either way
    Rat bound = cauchy_root_bound(w.k1_defining);
    long s1 = sturm_count(w.k1_defining, -bound, bound);
    w.k1_s = static_cast<int>(s1);
    w.k1_t = (d - w.k1_s) / 2;

    if (w.flag != WitnessFlag::Ok) return w;
    if (!w.k1_defining.has_integer_coeffs()) {
        w.flag = WitnessFlag::NotIntegral;
        return w;
    }
    if (w.k1_s != 1 || w.k1_t != 1) {
        w.flag = WitnessFlag::WrongSignature;
        return w;
    }
    w.k1 = NumberField::build(w.k1_defining, K->policy());
    return w;
}

bool RestrictionMap::swapped(int pair_index) const {
    return std::find(swaps.begin(), swaps.end(), pair_index) != swaps.end();
}

int RestrictionMap::effective(int i, int s, int t) const {
    if (i >= s && i < s + t && swapped(i - s)) return i + t;
    if (i >= s + t && swapped(i - s - t)) return i - t;
    return i;
}

RestrictionMap match_restrictions(const FieldPtr& K, const SubfieldWitness& w) {
    if (!w.usable_for_embedding())
        throw input_error("restriction matching needs a usable (1,1) subfield witness");
    const NumberField& k1 = *w.k1;
    int n = K->degree();
    int s = K->real_embeddings();
    int t = K->complex_pairs();

    RestrictionMap map;
    map.r.assign(static_cast<size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        CInterval v = w.eta.embed(i);
        int hit = -1;
        for (int j = 0; j < k1.degree(); ++j) {
            const CInterval& root = k1.root(j);
            bool overlap = v.re.intersects(root.re) && v.im.intersects(root.im);
            if (!overlap) continue;
            if (hit >= 0)
                throw precision_error("ambiguous restriction match for embedding " +
                                      std::to_string(i));
            hit = j;
        }
        if (hit < 0) throw precision_error("no restriction match for embedding " + std::to_string(i));
        map.r[static_cast<size_t>(i)] = hit;
    }

    for (int i = 0; i < s; ++i) {
        if (map.r[static_cast<size_t>(i)] != 0)
            throw error("a real embedding of K restricted to a nonreal place of K1");
    }
    // K1 has signature (1,1): index 0 is real, 1 the chosen representative
    // tau_2, 2 its conjugate. A representative of K that restricts to the
    // conjugate gets swapped with its own conjugate.
    for (int k = 0; k < t; ++k) {
        int rep = s + k;
        int conj = s + t + k;
        if (map.r[static_cast<size_t>(rep)] == 2) {
            std::swap(map.r[static_cast<size_t>(rep)], map.r[static_cast<size_t>(conj)]);
            map.swaps.push_back(k);
        }
        if (map.r[static_cast<size_t>(rep)] == 2)
            throw error("conjugate swap failed to align the restriction");
    }
    return map;
}

AlgebraicNumber include_element(const SubfieldWitness& w, const FieldPtr& K,
                                const AlgebraicNumber& x_in_k1) {
    const Poly& rho = x_in_k1.residue();
    AlgebraicNumber acc = K->zero();
    for (int k = rho.degree(); k >= 0; --k)
        acc = acc * w.eta + K->from_rat(rho.coeff(k));
    return acc;
}

EmbeddedSurface build_embedding(const FieldPtr& K, const SubfieldWitness& w,
                                const UnitSystem& pool, long k1_search_bound) {
    if (!w.usable_for_embedding())
        throw input_error("embedding needs a proper integral subfield of signature (1,1)");

    EmbeddedSurface e{w, match_restrictions(K, w), K->zero(), K->zero(), UnitSystem{}, {}, {}};

    std::vector<AlgebraicNumber> found = unit_search(w.k1, k1_search_bound, 1);
    if (found.empty())
        throw error("no unit of K1 found within the search bound " +
                    std::to_string(k1_search_bound));
    AlgebraicNumber u = found.front();
    e.u1_in_k1 = u * u;  // the group U_1 is generated by the square
    e.u1_in_K = include_element(w, K, e.u1_in_k1);
    if (!is_unit(e.u1_in_K)) throw error("image of u1 is not a unit in K: inclusion bug");

    UnitSystem seed = UnitSystem::build(K, positivity_enforce({e.u1_in_K}));
    if (!(seed.generators.front() == e.u1_in_K))
        throw error("u1 image was not totally positive; the square of a subfield unit must be");
    CompletionResult comp = complete_basis(seed, pool);
    if (!comp.ok) throw error("unit basis completion failed: " + comp.note);
    e.big_units = comp.system;
    e.cert = admissibility_check(e.big_units);

    int m = K->places();
    e.map_spec.assign(static_cast<size_t>(m), 0);
    for (int i = 0; i < m; ++i) {
        int ri = e.restriction.r[static_cast<size_t>(i)];
        if (ri == 2) throw error("holomorphy guard: a representative coordinate needs conj(w2)");
        e.map_spec[static_cast<size_t>(i)] = ri == 0 ? 0 : 1;
    }
    return e;
}

namespace {

// Include a point of H x C into H^s x C^t along the map_spec.
std::vector<CInterval> include_point(const EmbeddedSurface& e, const CInterval& w1,
                                     const CInterval& w2, int m) {
    std::vector<CInterval> out;
    out.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
        out.push_back(e.map_spec[static_cast<size_t>(i)] == 0 ? w1 : w2);
    return out;
}

}  // namespace

CompatReport verify_embedding_compat(const EmbeddedSurface& e, const OTData& K_ot, int trials,
                                     std::uint64_t seed) {
    const NumberField& K = *K_ot.field;
    const NumberField& k1 = *e.witness.k1;
    if (K_ot.units.size() != e.big_units.size())
        throw input_error("K_ot must carry the embedded surface's unit system");
    for (size_t i = 0; i < K_ot.units.size(); ++i)
        if (!(K_ot.units.generators[i] == e.big_units.generators[i]))
            throw input_error("K_ot must carry the embedded surface's unit system");

    int s = K.real_embeddings();
    int t = K.complex_pairs();
    int m = K.places();
    mpfr_prec_t prec = K.policy().prec();

    CompatReport rep;
    rep.trials = trials;
    rep.seed = seed;
    rep.max_dev = BigFloat(prec);
    Rng rng(seed);

    for (int trial = 0; trial < trials; ++trial) {
        long k = rng.next_in(-3, 3);
        std::vector<Rat> coeffs;
        for (int j = 0; j < k1.degree(); ++j) coeffs.emplace_back(rng.next_in(-5, 5));
        AlgebraicNumber a1 = k1.element(Poly(coeffs));
        AlgebraicNumber g_u = e.u1_in_k1.pow(k);

        Rat re1 = rng.next_rat(Rat(-2), Rat(2));
        Rat im1 = rng.next_rat(Rat(1, 2), Rat(3));
        Rat re2 = rng.next_rat(Rat(-2), Rat(2));
        Rat im2 = rng.next_rat(Rat(-2), Rat(2));
        CInterval w1(Interval::from_rat(re1, prec), Interval::from_rat(im1, prec));
        CInterval w2(Interval::from_rat(re2, prec), Interval::from_rat(im2, prec));

        // path 1: act on H x C by the K1 element, then include
        CInterval z1 = g_u.embed(0) * w1 + a1.embed(0);
        CInterval z2 = g_u.embed(1) * w2 + a1.embed(1);
        std::vector<CInterval> p1 = include_point(e, z1, z2, m);

        // path 2: include first, then act by the corresponding K element
        // through the swap-adjusted embeddings
        AlgebraicNumber gu_K = include_element(e.witness, K_ot.field, g_u);
        AlgebraicNumber a_K = include_element(e.witness, K_ot.field, a1);
        std::vector<CInterval> base = include_point(e, w1, w2, m);
        for (int i = 0; i < m; ++i) {
            int eff = e.restriction.effective(i, s, t);
            CInterval acted = gu_K.embed(eff) * base[static_cast<size_t>(i)] + a_K.embed(eff);
            BigFloat dev = CInterval::dist_upper(acted, p1[static_cast<size_t>(i)]);
            if (dev > rep.max_dev) rep.max_dev = dev;
        }
    }
    rep.pass = !(rep.max_dev > K.policy().tolerance());
    return rep;
}

ProbeReport conjecture_probe(const FieldPtr& K, const std::vector<AlgebraicNumber>& candidates) {
    ProbeReport rep;
    for (const AlgebraicNumber& eta : candidates) {
        ProbeEntry entry;
        entry.eta = eta.str();
        if (eta.is_rational()) {
            entry.flag = WitnessFlag::Rational;
            entry.note = "rational candidate skipped";
            rep.entries.push_back(std::move(entry));
            continue;
        }
        SubfieldWitness w = verify_subfield(K, eta);
        entry.s = w.k1_s;
        entry.t = w.k1_t;
        entry.flag = w.flag;
        entry.hit_11 = w.k1_s == 1 && w.k1_t == 1 && w.flag != WitnessFlag::NotProper;
        if (entry.hit_11) ++rep.hits;
        std::ostringstream os;
        os << "Q(eta) defined by " << w.k1_defining.str() << " has signature (" << w.k1_s << ", "
           << w.k1_t << ")";
        entry.note = os.str();
        rep.entries.push_back(std::move(entry));
    }
    return rep;
}

}  // namespace otkit
