#pragma once

#include "otkit/ot_manifold.hpp"

namespace otkit {

enum class WitnessFlag {
    Ok,                // proper subfield, integral generator, signature (1,1)
    Rational,          // eta is rational: no subfield to speak of
    NotProper,         // eta generates all of K
    DegreeNotDividing, // defensive; cannot occur for a genuine element
    NotIntegral,       // min poly not integral: signature known, field not built
    WrongSignature,    // genuine subfield, but not (1,1)
};

std::string witness_flag_name(WitnessFlag f);

/// A candidate subfield K1 = Q(eta) inside K, with its defining polynomial
/// and signature. k1 is built only for integral generators.
struct SubfieldWitness {
    AlgebraicNumber eta;
    Poly k1_defining;
    FieldPtr k1;  // null unless integral and proper
    int k1_s = 0, k1_t = 0;
    WitnessFlag flag = WitnessFlag::Rational;

    bool usable_for_embedding() const { return flag == WitnessFlag::Ok; }
};

/// min_poly(eta), degree bookkeeping, signature of K1 (computed by Sturm
/// even when the subfield is only probe-usable).
SubfieldWitness verify_subfield(const FieldPtr& K, const AlgebraicNumber& eta);

/// For each embedding of K, the index of the K1 embedding it restricts to,
/// after swapping conjugate representatives of K so that every complex
/// restriction hits K1's chosen representative tau_2 itself (never its
/// conjugate) -- that is what makes the induced coordinate map holomorphic.
struct RestrictionMap {
    std::vector<int> r;      // size n = [K:Q]
    std::vector<int> swaps;  // 0-based conjugate-pair indices of K that were swapped

    bool swapped(int pair_index) const;
    /// Effective embedding index for place i of K under the swaps.
    int effective(int i, int s, int t) const;
};

RestrictionMap match_restrictions(const FieldPtr& K, const SubfieldWitness& w);

/// The embedded Inoue surface data: H x C -> H^s x C^t together with the
/// admissible unit system of K containing the image of u1 = u^2.
struct EmbeddedSurface {
    SubfieldWitness witness;
    RestrictionMap restriction;
    AlgebraicNumber u1_in_k1;  // the squared fundamental-candidate unit of K1
    AlgebraicNumber u1_in_K;   // its image under the inclusion
    UnitSystem big_units;      // first generator is u1_in_K
    AdmissibilityCertificate cert;
    std::vector<int> map_spec;  // per K place: 0 carries w1, 1 carries w2
};

/// Ring inclusion K1 -> K by eta-substitution of the residue.
AlgebraicNumber include_element(const SubfieldWitness& w, const FieldPtr& K,
                                const AlgebraicNumber& x_in_k1);

/// Runs the whole Claim pipeline: fundamental-candidate unit of K1 from the
/// bounded search, u1 = u^2, inclusion into K, positivity enforcement and
/// greedy basis completion from the pool.
EmbeddedSurface build_embedding(const FieldPtr& K, const SubfieldWitness& w,
                                const UnitSystem& pool, long k1_search_bound = 5);

/// Equivariance check: acting by (u1^k, a1) on H x C and including must equal
/// including first and acting by the corresponding element of U x| O_K (with
/// the swapped embeddings on the swapped coordinates).
CompatReport verify_embedding_compat(const EmbeddedSurface& e, const OTData& K_ot, int trials,
                                     std::uint64_t seed);

struct ProbeEntry {
    std::string eta;
    int s = 0, t = 0;
    WitnessFlag flag = WitnessFlag::Rational;
    bool hit_11 = false;
    std::string note;
};

/// Exploration aid for the subfield conjecture: reports the signature of
/// Q(eta) for each candidate. No subfield enumeration or decision procedure
/// is claimed.
struct ProbeReport {
    std::vector<ProbeEntry> entries;
    int hits = 0;
};

ProbeReport conjecture_probe(const FieldPtr& K, const std::vector<AlgebraicNumber>& candidates);

}  // namespace otkit
