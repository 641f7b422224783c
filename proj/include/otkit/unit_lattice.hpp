#pragma once

#include "otkit/number_field.hpp"

#include <string>
#include <vector>

namespace otkit {

/// true iff x is an algebraic integer of norm +-1. Elements whose residue has
/// integer coefficients are integers of Z[theta] already; only non-integral
/// residues need the minimal-polynomial test.
bool is_unit(const AlgebraicNumber& x);

/// l(u) = (ln|s_1(u)|, ..., ln|s_s(u)|, 2ln|s_{s+1}(u)|, ..., 2ln|s_m(u)|).
/// Requires is_unit(u); components carry certified radii and sum to zero
/// within them.
std::vector<Interval> log_map(const AlgebraicNumber& u);

/// Euclidean norm of the full log vector; the deterministic "smallest unit"
/// order key.
Interval log_height(const AlgebraicNumber& u);

/// Deterministic representative of the class {u, -u, u^-1, -u^-1}: prefer the
/// element whose log vector is lexicographically positive, then the sign
/// making the first real embedding positive. Falls back to exact
/// coefficient-lexicographic choice when a sign cannot be certified.
AlgebraicNumber canonical_unit_rep(const AlgebraicNumber& u);

/// Generators with their certified log rows and real-positivity flags.
struct UnitSystem {
    FieldPtr field;
    std::vector<AlgebraicNumber> generators;
    std::vector<std::vector<Interval>> log_rows;  // one row per generator, m entries
    std::vector<bool> positivity;                 // all real embeddings positive

    static UnitSystem build(FieldPtr field, std::vector<AlgebraicNumber> gens);
    size_t size() const { return generators.size(); }
};

struct RankReport {
    int rank = 0;
    int expected = 0;  // s + t - 1
    bool pass = false;
    bool inconclusive = false;
    std::string detail;
};

/// Numerical rank of the log matrix by a Gram-determinant cascade; pass iff
/// rank = min(#generators, s+t-1) and rank never exceeds s+t-1.
RankReport dirichlet_rank_check(const UnitSystem& us);

/// Replaces any generator with a negative real embedding by its square, so
/// every output lies in O_K^{*,+}.
std::vector<AlgebraicNumber> positivity_enforce(std::vector<AlgebraicNumber> gens);

enum class Admissibility { Admissible, NotAdmissible, Inconclusive };

struct AdmissibilityCertificate {
    Admissibility verdict = Admissibility::NotAdmissible;
    std::vector<std::vector<Interval>> projected;  // s x s log projection
    Interval det;
    BigFloat det_abs_lower;
    std::string reason;
};

/// Full-rank test of the s x s projection of the log rows to the first s
/// coordinates: |det| certified above tolerance means the projected image is
/// a lattice.
AdmissibilityCertificate admissibility_check(const UnitSystem& us);

/// Brute-force oracle: enumerates residues with integer coefficients in
/// [-coeff_bound, coeff_bound]^n, keeps units (excluding the roots of unity
/// +-1), deduplicates by u ~ +-u^{+-1}, and returns canonical representatives
/// sorted by ascending log height (exact coefficient order breaks ties).
std::vector<AlgebraicNumber> unit_search(const FieldPtr& field, long coeff_bound,
                                         size_t max_results);

struct CompletionResult {
    bool ok = false;
    UnitSystem system;  // seed generators first, then the chosen completions
    std::string note;
};

/// Greedy basis completion: starting from the seed rows, appends the pool
/// generator maximizing |det Gram| of the projected rows until s rows are
/// selected, then requires the admissibility check to pass.
CompletionResult complete_basis(const UnitSystem& seed, const UnitSystem& pool);

/// Laplace-expansion determinant of a small interval matrix.
Interval interval_det(const std::vector<std::vector<Interval>>& m);

}  // namespace otkit
