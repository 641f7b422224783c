#include "otkit/poly.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace otkit;

namespace {
Rat rr(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}
}  // namespace

TEST_CASE("polynomial arithmetic basics") {
    Poly p{-1, -1, 0, 1};  // x^3 - x - 1
    CHECK(p.degree() == 3);
    CHECK(p.is_monic());
    CHECK(p.str() == "x^3 - x - 1");
    CHECK(p.eval(rr(2)) == rr(5));

    Poly q{-2, 1};  // x - 2
    auto [quo, rem] = Poly::divmod(p, q);
    CHECK(rem.degree() == 0);
    CHECK(rem.coeff(0) == rr(5));  // remainder theorem: p(2)
    CHECK(quo * q + rem == p);

    CHECK_THROWS_AS(Poly::divmod(p, Poly::zero()), error);
}

TEST_CASE("divmod remainder equals evaluation at random rational points") {
    Poly p{3, -7, 0, 2, 5};
    for (long num = -6; num <= 6; ++num) {
        for (long den = 1; den <= 3; ++den) {
            Rat c(num, den);
            c.canonicalize();
            Poly lin(std::vector<Rat>{-c, Rat(1)});
            auto [q, r] = Poly::divmod(p, lin);
            CHECK(r.coeff(0) == p.eval(c));
        }
    }
}

TEST_CASE("gcd examples") {
    // gcd(x^2-1, x-1) = x-1
    Poly a{-1, 0, 1}, b{-1, 1};
    CHECK(Poly::gcd(a, b) == b);

    // gcd(x^6-2, x^3-2) = 1 in Q[x]
    Poly c{-2, 0, 0, 0, 0, 0, 1}, d{-2, 0, 0, 1};
    Poly g = Poly::gcd(c, d);
    CHECK(g.degree() == 0);
    CHECK(g.coeff(0) == rr(1));

    // primitive, positive leading coefficient
    Poly e{0, -2, 0, 2};  // 2x(x-1)(x+1) sign-flipped
    Poly f{0, 2};
    Poly gg = Poly::gcd(e, f);
    CHECK(gg == Poly{0, 1});
}

TEST_CASE("resultant: frozen examples under the Sylvester convention") {
    // Res(x-a, x-b) = a-b with a=5, b=3
    CHECK(resultant(Poly{-5, 1}, Poly{-3, 1}) == rr(2));
    // Res(x^3-x-1, x) = +1 under this convention (product of the roots)
    CHECK(resultant(Poly{-1, -1, 0, 1}, Poly{0, 1}) == rr(1));
    // Res(x^2-2, x^2-3) = (2-3)(2-3) = 1
    CHECK(resultant(Poly{-2, 0, 1}, Poly{-3, 0, 1}) == rr(1));
    // degree-0 cases
    CHECK(resultant(Poly{7}, Poly{-1, 0, 1}) == rr(49));
    CHECK(resultant(Poly{-1, 0, 1}, Poly{7}) == rr(49));
    CHECK_THROWS_AS(resultant(Poly::zero(), Poly{1, 1}), error);
}

TEST_CASE("resultant agrees with the Sylvester determinant oracle") {
    // deterministic pseudo-random coefficient sweep, including rationals
    std::uint64_t state = 12345;
    auto next = [&]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<long>((state >> 33) % 13) - 6;
    };
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int dp = 1 + static_cast<int>((state >> 7) % 5);
        int dq = 1 + static_cast<int>((state >> 11) % 5);
        std::vector<Rat> pc, qc;
        for (int i = 0; i <= dp; ++i) pc.emplace_back(next());
        for (int i = 0; i <= dq; ++i) {
            Rat c(next(), 1 + ((i * 7) % 3));
            c.canonicalize();
            qc.push_back(c);
        }
        Poly p(pc), q(qc);
        if (p.is_zero() || q.is_zero()) continue;
        CHECK(resultant(p, q) == oracles::sylvester_resultant(p, q));
        ++checked;
    }
    CHECK(checked > 150);
}

TEST_CASE("resultant vanishes exactly when a common factor exists") {
    Poly common{1, 1};  // x + 1
    Poly p = common * Poly{-2, 0, 1};
    Poly q = common * Poly{3, 1, 1};
    CHECK(resultant(p, q) == rr(0));
    CHECK(Poly::gcd(p, q).degree() > 0);

    Poly p2{-2, 0, 1}, q2{3, 1, 1};
    CHECK(resultant(p2, q2) != rr(0));
    CHECK(Poly::gcd(p2, q2).degree() == 0);
}

TEST_CASE("sturm_count: frozen examples") {
    CHECK(sturm_count(Poly{1, 0, 1}, rr(-10), rr(10)) == 0);       // x^2+1
    CHECK(sturm_count(Poly{-1, -1, 0, 1}, rr(-10), rr(10)) == 1);  // x^3-x-1
    CHECK(sturm_count(Poly{-1, -1, 0, 0, 1}, rr(-10), rr(10)) == 2);  // x^4-x-1

    // the grid oracle agrees on these squarefree polynomials
    CHECK(oracles::grid_sign_crossings(Poly{-1, -1, 0, 1}, -10, 10, 100000) == 1);
    CHECK(oracles::grid_sign_crossings(Poly{-1, -1, 0, 0, 1}, -10, 10, 100000) == 2);

    // endpoint on a root must be rejected
    CHECK_THROWS_AS(sturm_count(Poly{-1, 0, 1}, rr(1), rr(10)), error);
}

TEST_CASE("sturm_count is stable beyond the Cauchy bound") {
    Poly p{-1, -1, 0, 0, 1};
    Rat b = cauchy_root_bound(p);
    long base = sturm_count(p, -b, b);
    CHECK(base == 2);
    CHECK(sturm_count(p, -(b + 10), b + 10) == base);
    CHECK(sturm_count(p, -(b * 100), b * 100) == base);
}

TEST_CASE("squarefree reduction happens before counting") {
    // (x-1)^2 (x+2): three roots with multiplicity, two distinct
    Poly p = Poly{-1, 1} * Poly{-1, 1} * Poly{2, 1};
    CHECK(sturm_count(p, rr(-10), rr(10)) == 2);
}

TEST_CASE("real root isolation and bisection") {
    Poly p{-1, -1, 0, 1};
    auto iso = isolate_real_roots(p);
    REQUIRE(iso.size() == 1);
    auto [lo, hi] = bisect_root(p, iso[0].first, iso[0].second, rr(1, 1000000000));
    // bisection on (1, 2) to 1e-9: the plastic number
    Rat oracle = oracles::bisect_oracle(p, rr(1), rr(2), 60);
    Rat mid = (lo + hi) / 2;
    Rat diff = mid - oracle;
    if (diff < 0) diff = -diff;
    CHECK(diff < rr(1, 100000000));

    Poly q{-1, -1, 0, 0, 1};
    CHECK(isolate_real_roots(q).size() == 2);
}

TEST_CASE("char_poly_mod and minimal_polynomial") {
    Poly plastic{-1, -1, 0, 1};
    // generator of the field: min poly is the defining polynomial
    CHECK(minimal_polynomial(Poly{0, 1}, plastic) == plastic);
    // rational element
    CHECK(minimal_polynomial(Poly{1}, plastic) == Poly{-1, 1});
    CHECK(char_poly_mod(Poly{1}, plastic) == Poly{-1, 1} * Poly{-1, 1} * Poly{-1, 1});

    // theta^2 in Q[t]/(t^6-2) has min poly t^3-2
    Poly sextic{-2, 0, 0, 0, 0, 0, 1};
    CHECK(minimal_polynomial(Poly{0, 0, 1}, sextic) == Poly{-2, 0, 0, 1});
    // theta^3 there has min poly t^2-2
    CHECK(minimal_polynomial(Poly{0, 0, 0, 1}, sextic) == Poly{-2, 0, 1});

    // min_poly degree divides the field degree
    CHECK(sextic.degree() % minimal_polynomial(Poly{0, 0, 1}, sextic).degree() == 0);
}

TEST_CASE("min_poly evaluated at its element reduces to zero exactly") {
    Poly defining{-1, -1, 0, 1};
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b) {
            Poly residue(std::vector<Rat>{Rat(a), Rat(b), Rat(1)});
            Poly mp = minimal_polynomial(residue, defining);
            Poly back = Poly::divmod(mp.compose(residue), defining).second;
            CHECK(back.is_zero());
        }
}

TEST_CASE("mod_inverse round trips") {
    Poly m{-1, -1, 0, 1};
    Poly a{2, 1, -1};
    Poly inv = mod_inverse(a, m);
    CHECK(mod_mul(a, inv, m) == Poly{1});
    CHECK_THROWS_AS(mod_inverse(Poly::zero(), m), error);
}

TEST_CASE("coefficient serialization round trip") {
    Poly p(std::vector<Rat>{rr(-1), rr(1, 2), rr(0), rr(3)});
    auto strs = p.coeff_strings();
    CHECK(strs == std::vector<std::string>{"-1", "1/2", "0", "3"});
    CHECK(Poly::from_coeff_strings(strs) == p);
    CHECK_THROWS_AS(Poly::from_coeff_strings({"zebra"}), input_error);
}
