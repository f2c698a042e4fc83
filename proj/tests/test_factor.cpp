#include <doctest.h>

#include <algorithm>
#include <map>

#include "oracles.hpp"
#include "wreathcount/factor.hpp"
#include "wreathcount/modpoly.hpp"
#include "wreathcount/numeric.hpp"

using namespace wreathcount;

namespace {

std::vector<int> degree_multiset(const ModFactorization& mf) {
    std::vector<int> out;
    for (const auto& f : mf.factors)
        for (int i = 0; i < f.multiplicity; ++i) out.push_back(f.poly.degree());
    std::sort(out.rbegin(), out.rend());
    return out;
}

IntPoly random_poly(Rng& rng, int deg, long long maxcoeff, bool monic) {
    std::vector<BigInt> c(static_cast<size_t>(deg + 1));
    for (auto& a : c) a = rng.range(-maxcoeff, maxcoeff);
    if (monic)
        c.back() = 1;
    else if (c.back() == 0)
        c.back() = 1;
    return IntPoly::from_coeffs(std::move(c));
}

} // namespace

TEST_CASE("factor_mod_p on the pinned examples") {
    // x^2 - 1 mod 5 -> (x-1)(x+1)
    auto f1 = factor_mod_p(IntPoly{-1, 0, 1}, 5);
    CHECK(f1.factors.size() == 2);
    CHECK(degree_multiset(f1) == std::vector<int>{1, 1});

    // x^4 - 2 mod 7 -> degrees {2,1,1}: (x-2)(x+2)(x^2-3) checked by expansion
    auto f2 = factor_mod_p(IntPoly{-2, 0, 0, 0, 1}, 7);
    CHECK(degree_multiset(f2) == std::vector<int>{2, 1, 1});
    {
        ModPoly prod = ModPoly::constant(7, f2.lc);
        for (const auto& fac : f2.factors)
            for (int i = 0; i < fac.multiplicity; ++i) prod = prod * fac.poly;
        CHECK(prod == ModPoly::reduce(IntPoly{-2, 0, 0, 0, 1}, 7));
    }

    // x^4 - 2 mod 3 -> degrees {2,2}
    auto f3 = factor_mod_p(IntPoly{-2, 0, 0, 0, 1}, 3);
    CHECK(degree_multiset(f3) == std::vector<int>{2, 2});

    CHECK_THROWS_AS(factor_mod_p(IntPoly{1, 1}, 6), error);       // NotPrime
    CHECK_THROWS_AS(factor_mod_p(IntPoly{1, 5}, 5), error);       // LeadingCoeffVanishes
    CHECK_THROWS_AS(factor_mod_p(IntPoly{}, 5), error);           // ZeroPolynomial
}

TEST_CASE("factor_mod_p reassembles random inputs, including p = 2") {
    Rng rng(606);
    for (std::uint64_t p : {2ull, 3ull, 5ull, 13ull, 101ull}) {
        for (int trial = 0; trial < 40; ++trial) {
            IntPoly f = random_poly(rng, 2 + static_cast<int>(rng.below(7)), 40, false);
            if (f.lc() % BigInt(p) == 0) continue;
            auto mf = factor_mod_p(f, p);
            ModPoly prod = ModPoly::constant(p, mf.lc);
            for (const auto& fac : mf.factors) {
                CHECK(fac.poly.lc() == 1);
                for (int i = 0; i < fac.multiplicity; ++i) prod = prod * fac.poly;
            }
            CHECK(prod == ModPoly::reduce(f, p));
        }
    }
}

TEST_CASE("factor_over_Q pinned examples") {
    auto r1 = factor_over_Q(IntPoly{-1, 0, 1});
    CHECK(r1.factors.size() == 2);
    CHECK(r1.content == 1);

    // x^4 - 4 = (x^2-2)(x^2+2)
    auto r2 = factor_over_Q(IntPoly{-4, 0, 0, 0, 1});
    REQUIRE(r2.factors.size() == 2);
    CHECK(r2.factors[0].poly == IntPoly{-2, 0, 1});
    CHECK(r2.factors[1].poly == IntPoly{2, 0, 1});

    // Sophie Germain: x^4 + 4 = (x^2-2x+2)(x^2+2x+2)
    auto r3 = factor_over_Q(IntPoly{4, 0, 0, 0, 1});
    REQUIRE(r3.factors.size() == 2);
    CHECK(r3.factors[0].poly == IntPoly{2, -2, 1});
    CHECK(r3.factors[1].poly == IntPoly{2, 2, 1});

    // irreducibles stay whole
    CHECK(is_irreducible_over_Q(IntPoly{-2, 0, 0, 0, 1}));
    CHECK(is_irreducible_over_Q(IntPoly{1, 0, 0, 0, 1}));
    CHECK(is_irreducible_over_Q(IntPoly{2, 2, 0, 1}));  // Eisenstein at 2
    CHECK(!is_irreducible_over_Q(IntPoly{1, 2, 1}));

    // constants factor as units
    auto rc = factor_over_Q(IntPoly{BigInt(-6)});
    CHECK(rc.content == -6);
    CHECK(rc.factors.empty());

    CHECK_THROWS_AS(factor_over_Q(IntPoly{}), error);
}

TEST_CASE("factor_over_Q round-trips on random polynomials") {
    Rng rng(707);
    for (int trial = 0; trial < 1000; ++trial) {
        int deg = 1 + static_cast<int>(rng.below(12));
        IntPoly f = random_poly(rng, deg, 1000000, false);
        auto qf = factor_over_Q(f);
        IntPoly prod{qf.content};
        for (const auto& fac : qf.factors) {
            CHECK(fac.poly.lc() > 0);
            CHECK(fac.poly.content() == 1);
            for (int i = 0; i < fac.multiplicity; ++i) prod = prod * fac.poly;
        }
        CHECK(prod == f);
    }
}

TEST_CASE("factor_over_Q handles structured products and multiplicities") {
    Rng rng(808);
    for (int trial = 0; trial < 60; ++trial) {
        IntPoly a = random_poly(rng, 3, 20, false);
        IntPoly b = random_poly(rng, 2, 20, false);
        IntPoly f = a * a * b;
        auto qf = factor_over_Q(f);
        IntPoly prod{qf.content};
        for (const auto& fac : qf.factors)
            for (int i = 0; i < fac.multiplicity; ++i) prod = prod * fac.poly;
        CHECK(prod == f);
        bool has_mult2 = false;
        for (const auto& fac : qf.factors) has_mult2 |= fac.multiplicity >= 2;
        CHECK((a.degree() < 1 || has_mult2));
    }
}

TEST_CASE("mod-p degree multisets refine the rational factorization") {
    Rng rng(909);
    int checked = 0;
    for (int trial = 0; trial < 40 && checked < 20; ++trial) {
        IntPoly f = random_poly(rng, 3 + static_cast<int>(rng.below(6)), 500, false);
        if (!is_squarefree(f)) continue;
        auto qf = factor_over_Q(f);
        for (std::uint64_t p : good_primes_for(f, 20)) {
            std::vector<int> whole = factor_degrees_mod_p(f, p);
            std::vector<int> pieces;
            for (const auto& fac : qf.factors) {
                auto d = factor_degrees_mod_p(fac.poly, p);
                pieces.insert(pieces.end(), d.begin(), d.end());
            }
            std::sort(pieces.rbegin(), pieces.rend());
            CHECK(whole == pieces);
        }
        ++checked;
    }
    CHECK(checked == 20);
}

TEST_CASE("squarefree decomposition (Yun)") {
    IntPoly a{-1, 1};          // x-1
    IntPoly b{2, 1};           // x+2
    IntPoly f = a * a * b * b * b;
    auto sd = squarefree_decomposition(f);
    REQUIRE(sd.size() == 2);
    CHECK(sd[0] == std::pair<IntPoly, int>{a, 2});
    CHECK(sd[1] == std::pair<IntPoly, int>{b, 3});
    CHECK(is_squarefree(IntPoly{-2, 0, 0, 0, 1}));
    CHECK(!is_squarefree(f));
}
