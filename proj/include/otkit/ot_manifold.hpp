#pragma once

#include "otkit/rng.hpp"
#include "otkit/unit_lattice.hpp"

#include <cstdint>

namespace otkit {

/// Element (u, a) of U x| O_K: multiplicative part u (a unit) and additive
/// part a (an algebraic integer).
struct GroupElement {
    AlgebraicNumber u, a;

    GroupElement(AlgebraicNumber mult, AlgebraicNumber add);
    bool is_identity() const { return u.is_one() && a.is_zero(); }
};

/// (u1, a1) * (u2, a2) = (u1*u2, a1 + u1*a2), exact; the order matches
/// act(g1) o act(g2).
GroupElement group_mul(const GroupElement& g1, const GroupElement& g2);
GroupElement group_inverse(const GroupElement& g);

/// Point of H^s x C^t: m = s + t certified complex coordinates with
/// Im(z_i) > 0 certified for i < s.
struct Point {
    std::vector<CInterval> z;
};

Point make_point(const NumberField& field, std::vector<CInterval> coords);

/// OT manifold data. Assembly computes the admissibility certificate; use
/// valid() or validate() to learn whether the datum is a genuine OT manifold.
struct OTData {
    FieldPtr field;
    UnitSystem units;
    AdmissibilityCertificate cert;
    std::vector<AlgebraicNumber> translation_basis;  // 1, theta, ..., theta^{n-1}

    bool valid() const;
};

OTData assemble_ot(FieldPtr field, UnitSystem units);

/// Coordinate i maps to sigma_i(u) * z_i + sigma_i(a). Throws if a first-s
/// coordinate leaves H beyond its radius (impossible for valid data).
Point act(const GroupElement& g, const Point& z);

struct CompatReport {
    int trials = 0;
    BigFloat max_dev;
    bool pass = false;
    std::uint64_t seed = 0;
};

/// Compares act(g1, act(g2, z)) with act(g1*g2, z) on seeded random data.
CompatReport verify_action_compat(const OTData& ot, int trials, std::uint64_t seed);

struct LeafCoord {
    int index = 0;            // 0-based coordinate, < s
    bool translation_case = false;
    CInterval value;          // fixed-leaf candidate z_i, or sigma_i(a)
    bool certified = false;
};

struct LeafReport {
    bool no_fixed_leaf = false;
    std::vector<LeafCoord> coords;
};

/// Fixed-leaf analysis of a nontrivial g = (u, a). For u != 1 the candidate
/// coordinates z_i = sigma_i(a) / (1 - sigma_i(u)) are produced and certified
/// real (so they lie outside H); for u = 1 each sigma_i(a) is certified
/// nonzero (the translation moves every leaf).
LeafReport leaf_intersection_solve(const OTData& ot, const GroupElement& g);

/// Deterministic sample of nontrivial group elements: generator powers
/// combined with power-basis translations, identity skipped.
std::vector<GroupElement> deterministic_group_elements(const OTData& ot, int count);

/// Random data for the verification harnesses (all draws from Rng, exact).
GroupElement random_group_element(const OTData& ot, Rng& rng);
Point random_point(const NumberField& field, Rng& rng);

enum class BundleVerdict { Pass, Fail, Inconclusive };

struct ValidationOptions {
    int compat_trials = 1000;
    int leaf_elements = 200;
    std::uint64_t seed = 0;
};

struct ValidationBundle {
    AdmissibilityCertificate admissibility;
    RankReport rank;
    CompatReport compat;
    int leaf_checked = 0;
    bool leaf_ok = false;
    bool positivity_ok = false;
    BundleVerdict overall = BundleVerdict::Fail;
};

/// Runs the admissibility, Dirichlet-rank, action-compatibility and
/// leaf-disjointness checks and aggregates one verdict.
ValidationBundle validate(const OTData& ot, const ValidationOptions& opt);

}  // namespace otkit
