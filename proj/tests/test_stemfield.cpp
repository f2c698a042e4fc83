#include <doctest.h>

#include "wreathcount/stemfield.hpp"

using namespace wreathcount;

namespace {

/// multiply a stem factorization back together
StemPoly reassemble(const StemField& L, const StemFactorization& sf, const StemPoly& like) {
    StemPoly prod(std::vector<RatPoly>{sf.unit});
    for (const auto& fac : sf.factors)
        for (int i = 0; i < fac.multiplicity; ++i) prod = mul(L, prod, fac.poly);
    (void)like;
    return prod;
}

bool has_linear_root_y(const StemFactorization& sf, int sign) {
    // looks for the factor x -+ y
    for (const auto& fac : sf.factors) {
        if (fac.poly.degree() != 1) continue;
        const RatPoly& c0 = fac.poly.coeff(0);
        if (c0.den() == 1 && c0.num() == IntPoly{0, sign}) return true;
    }
    return false;
}

} // namespace

TEST_CASE("stem element arithmetic and inverse") {
    StemField L = StemField::make(IntPoly{-2, 0, 1});  // Q(sqrt 2)
    RatPoly y = L.generator();
    RatPoly a = L.mul(y, y);  // y^2 = 2
    CHECK(a.num() == IntPoly{BigInt(2)});
    RatPoly inv = L.inv(y + StemField::constant(BigRat(1)));  // 1/(1+sqrt2) = sqrt2 - 1
    CHECK(L.mul(inv, y + StemField::constant(BigRat(1))).num() == IntPoly{BigInt(1)});
    CHECK(inv.num() == IntPoly{-1, 1});
    CHECK_THROWS_AS(L.inv(RatPoly{}), error);
    // reducible modulus rejected
    CHECK_THROWS_AS(StemField::make(IntPoly{-1, 0, 1}), error);
}

TEST_CASE("adjoined root splits its own polynomial") {
    StemField L = StemField::make(IntPoly{1, 0, 1});  // Q(i)
    auto sf = factor_over_stem(IntPoly{1, 0, 1}, L);
    REQUIRE(sf.factors.size() == 2);
    CHECK(has_linear_root_y(sf, -1));  // x - y
    CHECK(has_linear_root_y(sf, 1));   // x + y
    StemPoly back = reassemble(L, sf, {});
    CHECK(back == StemPoly::from_intpoly(IntPoly{1, 0, 1}));
}

TEST_CASE("x^4 - 2 over Q(sqrt 2) splits into quadratics x^2 -+ y") {
    StemField L = StemField::make(IntPoly{-2, 0, 1});
    auto sf = factor_over_stem(IntPoly{-2, 0, 0, 0, 1}, L);
    REQUIRE(sf.factors.size() == 2);
    for (const auto& fac : sf.factors) {
        CHECK(fac.poly.degree() == 2);
        CHECK(fac.multiplicity == 1);
    }
    CHECK(reassemble(L, sf, {}) == StemPoly::from_intpoly(IntPoly{-2, 0, 0, 0, 1}));
    // verify (x^2-y)(x^2+y) shape: constant coefficients are -+y
    int seen = 0;
    for (const auto& fac : sf.factors) {
        const RatPoly& c0 = fac.poly.coeff(0);
        if (c0.den() == 1 && (c0.num() == IntPoly{0, 1} || c0.num() == IntPoly{0, -1})) ++seen;
    }
    CHECK(seen == 2);
}

TEST_CASE("sqrt 5 does not live in Q(sqrt 2)") {
    StemField L = StemField::make(IntPoly{-2, 0, 1});
    auto sf = factor_over_stem(IntPoly{-5, 0, 1}, L);
    REQUIRE(sf.factors.size() == 1);
    CHECK(sf.factors[0].poly.degree() == 2);
    CHECK(count_roots_in(IntPoly{-5, 0, 1}, L) == 0);
    CHECK(count_roots_in(IntPoly{-8, 0, 1}, L) == 2);  // sqrt 8 = 2 sqrt 2
}

TEST_CASE("x^4 - 2 over its own stem field: two linears and a quadratic") {
    StemField L = StemField::make(IntPoly{-2, 0, 0, 0, 1});
    auto sf = factor_over_stem(IntPoly{-2, 0, 0, 0, 1}, L);
    std::vector<int> degs;
    for (const auto& fac : sf.factors) degs.push_back(fac.poly.degree());
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<int>{1, 1, 2});
    CHECK(reassemble(L, sf, {}) == StemPoly::from_intpoly(IntPoly{-2, 0, 0, 0, 1}));
}

TEST_CASE("cyclotomic x^4 + 1 splits completely over its stem field") {
    StemField L = StemField::make(IntPoly{1, 0, 0, 0, 1});
    auto sf = factor_over_stem(IntPoly{1, 0, 0, 0, 1}, L);
    CHECK(sf.factors.size() == 4);
    for (const auto& fac : sf.factors) CHECK(fac.poly.degree() == 1);
}

TEST_CASE("norm of a monic stem polynomial is monic of the right degree") {
    StemField L = StemField::make(IntPoly{-2, 0, 1});
    // x^2 - y over Q(sqrt 2): norm = (x^2)^2 - 2 = x^4 - 2
    StemPoly f(std::vector<RatPoly>{RatPoly(IntPoly{0, -1}), RatPoly{}, RatPoly(IntPoly{BigInt(1)})});
    RatPoly N = norm_poly(L, f);
    IntPoly Nz;
    REQUIRE(N.to_intpoly(Nz));
    CHECK(Nz == IntPoly{-2, 0, 0, 0, 1});
}

TEST_CASE("extension by a factor builds the degree-8 splitting field of x^4-2") {
    StemField L1 = StemField::make(IntPoly{-2, 0, 0, 0, 1});
    auto sf = factor_over_stem(IntPoly{-2, 0, 0, 0, 1}, L1);
    StemPoly quad;
    for (const auto& fac : sf.factors)
        if (fac.poly.degree() == 2) quad = fac.poly;
    REQUIRE(quad.degree() == 2);
    StemField L2 = extend_by_factor(L1, quad);
    CHECK(L2.degree() == 8);
    CHECK(L2.modulus().is_monic());
    // over the extension, x^4 - 2 splits completely
    auto sf2 = factor_over_stem(IntPoly{-2, 0, 0, 0, 1}, L2);
    for (const auto& fac : sf2.factors) CHECK(fac.poly.degree() == 1);
}

TEST_CASE("stem gcd and divrem consistency") {
    StemField L = StemField::make(IntPoly{-2, 0, 1});
    StemPoly f = StemPoly::from_intpoly(IntPoly{-2, 0, 0, 0, 1});
    StemPoly g = StemPoly::from_intpoly(IntPoly{1, 2, 1});
    auto dr = divrem(L, f, g);
    CHECK(add(L, mul(L, dr.quot, g), dr.rem) == f);
    CHECK(dr.rem.degree() < g.degree());
    // x^2 - y divides x^4 - 2 over Q(sqrt 2)
    StemPoly xxmy(std::vector<RatPoly>{RatPoly(IntPoly{0, -1}), RatPoly{}, RatPoly(IntPoly{BigInt(1)})});
    StemPoly h = gcd(L, f, mul(L, xxmy, xxmy));
    CHECK(h == xxmy);
}
