#include "otkit/unit_lattice.hpp"

#include <algorithm>
#include <complex>
#include <map>
#include <sstream>

namespace otkit {

bool is_unit(const AlgebraicNumber& x) {
    if (x.is_zero()) return false;
    Rat n = x.norm();
    if (n != 1 && n != -1) return false;
    if (x.residue().has_integer_coeffs()) return true;  // already in Z[theta]
    return x.is_algebraic_integer();
}

std::vector<Interval> log_map(const AlgebraicNumber& u) {
    if (!is_unit(u)) throw error("log_map requires a unit");
    const NumberField& f = *u.field();
    std::vector<Interval> row;
    row.reserve(static_cast<size_t>(f.places()));
    for (int i = 0; i < f.places(); ++i) {
        Interval a = u.embed(i).abs();
        if (a.lower().sign() <= 0)
            throw precision_error("|sigma_i(u)| indistinguishable from 0 for a unit");
        Interval lg = a.log();
        if (i >= f.real_embeddings()) lg = lg.mul_pow2(1);  // factor 2 on complex places
        row.push_back(lg);
    }
    return row;
}

Interval log_height(const AlgebraicNumber& u) {
    std::vector<Interval> row = log_map(u);
    Interval acc(row.front().prec());
    for (const Interval& x : row) acc = acc + x.square();
    return acc.sqrt();
}

namespace {

// exact lexicographic order on residue coefficient vectors
bool coeff_lex_less(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    int n = a.field()->degree();
    for (int k = 0; k < n; ++k) {
        const Rat& x = a.residue().coeff(k);
        const Rat& y = b.residue().coeff(k);
        if (x != y) return x < y;
    }
    return false;
}

AlgebraicNumber exact_lex_min(std::vector<AlgebraicNumber> cands) {
    AlgebraicNumber best = cands.front();
    for (const auto& c : cands)
        if (coeff_lex_less(c, best)) best = c;
    return best;
}

}  // namespace

AlgebraicNumber canonical_unit_rep(const AlgebraicNumber& u) {
    AlgebraicNumber v = u.inverse();
    // direction: log vector lexicographically positive
    std::vector<Interval> lu = log_map(u);
    int dir = 0;
    for (const Interval& x : lu) {
        dir = x.sign();
        if (dir != 0) break;
    }
    if (dir == 0) return exact_lex_min({u, -u, v, -v});
    AlgebraicNumber w = dir > 0 ? u : v;
    if (u.field()->real_embeddings() > 0) {
        int sg = w.embed(0).re.sign();
        if (sg == 0) return exact_lex_min({u, -u, v, -v});
        return sg > 0 ? w : -w;
    }
    return exact_lex_min({w, -w});
}

UnitSystem UnitSystem::build(FieldPtr field, std::vector<AlgebraicNumber> gens) {
    UnitSystem us;
    us.field = std::move(field);
    for (const auto& g : gens) {
        if (!g.field()->same_field(*us.field)) throw error("generator from a different field");
        if (!is_unit(g)) throw error("generator is not a unit: " + g.str());
        us.log_rows.push_back(log_map(g));
        bool pos = true;
        for (int i = 0; i < us.field->real_embeddings(); ++i) {
            int sg = g.embed(i).re.sign();
            if (sg == 0) throw precision_error("real embedding sign undecided for " + g.str());
            pos = pos && sg > 0;
        }
        us.positivity.push_back(pos);
        us.generators.push_back(g);
    }
    return us;
}

Interval interval_det(const std::vector<std::vector<Interval>>& m) {
    size_t n = m.size();
    if (n == 0) return Interval::from_long(1, 64);
    if (n == 1) return m[0][0];
    mpfr_prec_t prec = m[0][0].prec();
    Interval acc(prec);
    // Laplace expansion along the first row; fine for the small sizes here
    std::vector<std::vector<Interval>> minor(n - 1, std::vector<Interval>(n - 1, Interval(prec)));
    for (size_t j = 0; j < n; ++j) {
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[r - 1][cc++] = m[r][c];
            }
        }
        Interval term = m[0][j] * interval_det(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

namespace {

std::vector<std::vector<Interval>> gram(const std::vector<std::vector<Interval>>& rows) {
    size_t k = rows.size();
    mpfr_prec_t prec = k ? rows[0][0].prec() : 64;
    std::vector<std::vector<Interval>> g(k, std::vector<Interval>(k, Interval(prec)));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            Interval acc(prec);
            for (size_t c = 0; c < rows[i].size(); ++c) acc = acc + rows[i][c] * rows[j][c];
            g[i][j] = acc;
        }
    return g;
}

}  // namespace

RankReport dirichlet_rank_check(const UnitSystem& us) {
    RankReport rep;
    const NumberField& f = *us.field;
    rep.expected = f.places() - 1;
    BigFloat tol = f.policy().tolerance();

    std::vector<std::vector<Interval>> selected;
    std::vector<bool> used(us.size(), false);
    std::ostringstream detail;
    while (true) {
        int best = -1;
        Interval best_abs(64);
        for (size_t i = 0; i < us.size(); ++i) {
            if (used[i]) continue;
            std::vector<std::vector<Interval>> rows = selected;
            rows.push_back(us.log_rows[i]);
            Interval d = interval_det(gram(rows)).abs();
            if (best < 0 || d.mid() > best_abs.mid()) {
                best = static_cast<int>(i);
                best_abs = d;
            }
        }
        if (best < 0) break;  // all rows used
        if (best_abs.lower() > tol) {
            used[static_cast<size_t>(best)] = true;
            selected.push_back(us.log_rows[static_cast<size_t>(best)]);
            ++rep.rank;
            continue;
        }
        if (best_abs.upper() < tol) break;  // certified: no further independent row
        rep.inconclusive = true;
        detail << "Gram determinant " << best_abs.decimal(10) << " straddles the tolerance";
        break;
    }
    int count = static_cast<int>(us.size());
    rep.pass = !rep.inconclusive && rep.rank <= rep.expected &&
               rep.rank == std::min(count, rep.expected);
    rep.detail = detail.str();
    return rep;
}

std::vector<AlgebraicNumber> positivity_enforce(std::vector<AlgebraicNumber> gens) {
    for (auto& g : gens) {
        if (!is_unit(g)) throw error("positivity_enforce requires units");
        bool negative = false;
        for (int i = 0; i < g.field()->real_embeddings(); ++i) {
            int sg = g.embed(i).re.sign();
            if (sg == 0) throw precision_error("real embedding sign undecided");
            if (sg < 0) negative = true;
        }
        if (negative) g = g * g;
    }
    return gens;
}

AdmissibilityCertificate admissibility_check(const UnitSystem& us) {
    AdmissibilityCertificate cert;
    const NumberField& f = *us.field;
    int s = f.real_embeddings();
    mpfr_prec_t prec = f.policy().prec();
    cert.det = Interval(prec);
    cert.det_abs_lower = BigFloat(prec);

    if (static_cast<int>(us.size()) != s) {
        cert.reason = "generator count " + std::to_string(us.size()) +
                      " differs from s = " + std::to_string(s);
        return cert;
    }
    for (bool p : us.positivity) {
        if (!p) {
            cert.reason = "a generator lies outside O_K^{*,+}";
            return cert;
        }
    }
    cert.projected.assign(static_cast<size_t>(s), {});
    for (int i = 0; i < s; ++i)
        cert.projected[static_cast<size_t>(i)] =
            std::vector<Interval>(us.log_rows[static_cast<size_t>(i)].begin(),
                                  us.log_rows[static_cast<size_t>(i)].begin() + s);
    cert.det = interval_det(cert.projected);
    Interval abs = cert.det.abs();
    cert.det_abs_lower = abs.lower();
    BigFloat tol = f.policy().tolerance();
    if (abs.lower() > tol) {
        cert.verdict = Admissibility::Admissible;
    } else if (abs.upper() < tol) {
        cert.verdict = Admissibility::NotAdmissible;
        cert.reason = "projected determinant below tolerance";
    } else {
        cert.verdict = Admissibility::Inconclusive;
        cert.reason = "projected determinant straddles the tolerance";
    }
    return cert;
}

// ---------------------------------------------------------------------------
// Brute-force unit search.

std::vector<AlgebraicNumber> unit_search(const FieldPtr& field, long coeff_bound,
                                         size_t max_results) {
    std::vector<AlgebraicNumber> found;
    if (coeff_bound < 1 || max_results == 0) return found;
    int n = field->degree();

    // double-precision root approximations for the norm prefilter
    std::vector<std::complex<double>> roots;
    roots.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const CInterval& r = field->root(i);
        roots.emplace_back(r.re.mid().to_double(), r.im.mid().to_double());
    }

    std::map<std::vector<std::string>, bool> seen;
    std::vector<long> c(static_cast<size_t>(n), -coeff_bound);
    std::vector<double> cd(static_cast<size_t>(n));
    bool done = false;
    while (!done) {
        for (size_t k = 0; k < c.size(); ++k) cd[k] = static_cast<double>(c[k]);
        bool constant = true;
        for (size_t k = 1; k < c.size(); ++k) constant = constant && c[k] == 0;
        if (!constant) {
            // |N(x)| = prod |x(root_i)|; integer for these candidates, so a
            // loose window around 1 loses nothing
            double prod = 1.0;
            for (const auto& z : roots) {
                std::complex<double> acc(0.0, 0.0);
                for (size_t k = c.size(); k-- > 0;) acc = acc * z + cd[k];
                prod *= std::abs(acc);
            }
            if (prod > 0.5 && prod < 1.5) {
                std::vector<Rat> rc;
                rc.reserve(c.size());
                for (long v : c) rc.emplace_back(v);
                AlgebraicNumber x = field->element(Poly(std::move(rc)));
                Rat nm = x.norm();
                if (nm == 1 || nm == -1) {
                    AlgebraicNumber rep = canonical_unit_rep(x);
                    auto key = rep.residue().coeff_strings();
                    key.resize(static_cast<size_t>(n));
                    if (!seen.count(key)) {
                        seen[key] = true;
                        found.push_back(rep);
                    }
                }
            }
        }
        // odometer over the coefficient box
        size_t k = 0;
        while (k < c.size()) {
            if (c[k] < coeff_bound) {
                ++c[k];
                break;
            }
            c[k] = -coeff_bound;
            ++k;
        }
        done = k == c.size();
    }

    std::sort(found.begin(), found.end(), [](const AlgebraicNumber& a, const AlgebraicNumber& b) {
        Interval ha = log_height(a), hb = log_height(b);
        int cmp = ha.mid().cmp(hb.mid());
        if (cmp != 0) return cmp < 0;
        return coeff_lex_less(a, b);
    });
    if (found.size() > max_results)
        found.erase(found.begin() + static_cast<long>(max_results), found.end());
    return found;
}

CompletionResult complete_basis(const UnitSystem& seed, const UnitSystem& pool) {
    CompletionResult res;
    const NumberField& f = *seed.field;
    int s = f.real_embeddings();
    BigFloat tol = f.policy().tolerance();

    if (static_cast<int>(seed.size()) > s) {
        res.note = "seed already has more generators than s";
        return res;
    }
    auto proj = [&](const std::vector<Interval>& row) {
        return std::vector<Interval>(row.begin(), row.begin() + s);
    };

    std::vector<AlgebraicNumber> gens = seed.generators;
    std::vector<std::vector<Interval>> rows;
    for (const auto& r : seed.log_rows) rows.push_back(proj(r));

    // the seed itself must contribute rank
    if (!rows.empty()) {
        Interval d = interval_det(gram(rows)).abs();
        if (!(d.lower() > tol)) {
            res.note = "seed rows are rank deficient";
            return res;
        }
    }

    std::vector<bool> used(pool.size(), false);
    while (static_cast<int>(gens.size()) < s) {
        int best = -1;
        Interval best_abs(64);
        for (size_t i = 0; i < pool.size(); ++i) {
            if (used[i]) continue;
            bool dup = false;
            for (const auto& g : gens) dup = dup || g == pool.generators[i];
            if (dup) continue;
            auto trial = rows;
            trial.push_back(proj(pool.log_rows[i]));
            Interval d = interval_det(gram(trial)).abs();
            if (best < 0 || d.mid() > best_abs.mid()) {
                best = static_cast<int>(i);
                best_abs = d;
            }
        }
        if (best < 0 || !(best_abs.lower() > tol)) {
            std::ostringstream os;
            os << "completion stalled at " << gens.size() << " of " << s << " generators";
            if (best >= 0) os << "; best Gram determinant " << best_abs.decimal(10);
            res.note = os.str();
            res.system = UnitSystem::build(seed.field, gens);  // partial selection
            return res;
        }
        used[static_cast<size_t>(best)] = true;
        gens.push_back(pool.generators[static_cast<size_t>(best)]);
        rows.push_back(proj(pool.log_rows[static_cast<size_t>(best)]));
    }

    res.system = UnitSystem::build(seed.field, gens);
    AdmissibilityCertificate cert = admissibility_check(res.system);
    if (cert.verdict != Admissibility::Admissible) {
        res.note = "completed system failed admissibility: " + cert.reason;
        return res;
    }
    res.ok = true;
    return res;
}

}  // namespace otkit
