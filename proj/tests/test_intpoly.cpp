#include <doctest.h>

#include "oracles.hpp"
#include "wreathcount/intpoly.hpp"
#include "wreathcount/numeric.hpp"

using namespace wreathcount;

namespace {

IntPoly random_poly(Rng& rng, int maxdeg, long long maxcoeff) {
    int d = static_cast<int>(rng.below(static_cast<std::uint64_t>(maxdeg + 1)));
    std::vector<BigInt> c(static_cast<size_t>(d + 1));
    for (auto& a : c) a = rng.range(-maxcoeff, maxcoeff);
    if (c.back() == 0) c.back() = 1;
    return IntPoly::from_coeffs(std::move(c));
}

} // namespace

TEST_CASE("intpoly basics and canonical form") {
    IntPoly z;
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    IntPoly f = IntPoly::from_coeffs({BigInt(1), BigInt(2), BigInt(0), BigInt(0)});
    CHECK(f.degree() == 1);
    CHECK(f.to_string() == "1,2");
    CHECK(IntPoly::parse("1,2") == f);
    CHECK(IntPoly::parse("-2,0,0,0,1").degree() == 4);

    IntPoly g{3, 0, 1};  // x^2 + 3
    CHECK(g.eval(BigInt(2)) == 7);
    CHECK((g * g).degree() == 4);
    CHECK(g.shift_var(BigInt(1)) == IntPoly{4, 2, 1});
    CHECK(g.derivative() == IntPoly{0, 2});
}

TEST_CASE("division and pseudo-division identities") {
    Rng rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        IntPoly f = random_poly(rng, 8, 50);
        IntPoly g = random_poly(rng, 5, 50);
        if (g.is_zero()) continue;
        if (g.is_monic()) {
            auto [q, r] = divrem_monic(f, g);
            CHECK(q * g + r == f);
            CHECK(r.degree() < g.degree());
        }
        auto [q, r] = pseudo_divrem(f, g);
        int e = std::max(f.degree() - g.degree() + 1, 0);
        IntPoly lhs = f * bpow(g.lc(), static_cast<unsigned long>(f.degree() >= g.degree() ? e : 0));
        if (f.degree() >= g.degree()) {
            CHECK(q * g + r == lhs);
            CHECK(r.degree() < g.degree());
        }
    }
}

TEST_CASE("resultant matches the Sylvester determinant oracle") {
    // classical identities from the spec
    CHECK(discriminant(IntPoly{1, 3, 1}) == 5);       // x^2+3x+1 -> b^2-4c
    CHECK(discriminant(IntPoly{-1, -1, 0, 1}) == -23); // x^3 - x - 1
    // disc(x^n + a) = (-1)^{n(n-1)/2} n^n a^{n-1}; signature (2,1) makes it negative
    CHECK(discriminant(IntPoly{-2, 0, 0, 0, 1}) == -2048);
    CHECK(discriminant(IntPoly{1, 0, 0, 0, 1}) == 256);  // x^4+1, totally imaginary

    Rng rng(202);
    for (int trial = 0; trial < 300; ++trial) {
        IntPoly f = random_poly(rng, 6, 20);
        IntPoly g = random_poly(rng, 6, 20);
        if (f.degree() < 1 || g.degree() < 1) continue;
        CHECK(resultant(f, g) == oracles::sylvester_resultant(f, g));
    }
}

TEST_CASE("discriminant against the Sylvester oracle") {
    Rng rng(303);
    for (int trial = 0; trial < 100; ++trial) {
        IntPoly f = random_poly(rng, 6, 30);
        if (f.degree() < 2) continue;
        BigInt r = oracles::sylvester_resultant(f, f.derivative());
        BigInt expect = r / f.lc();
        long long n = f.degree();
        if (((n * (n - 1)) / 2) % 2 == 1) expect = -expect;
        CHECK(discriminant(f) == expect);
    }
}

TEST_CASE("resultant is zero iff gcd is nonconstant") {
    Rng rng(404);
    int zero_seen = 0, nonzero_seen = 0;
    for (int trial = 0; trial < 200; ++trial) {
        IntPoly a = random_poly(rng, 4, 10);
        IntPoly b = random_poly(rng, 4, 10);
        IntPoly c = random_poly(rng, 3, 10);
        if (a.degree() < 1 || b.degree() < 1 || c.degree() < 1) continue;
        // share the factor c
        IntPoly f = a * c, g = b * c;
        CHECK(resultant(f, g) == 0);
        CHECK(gcd(f, g).degree() > 0);
        ++zero_seen;
        if (gcd(a, b).degree() == 0) {
            CHECK(resultant(a, b) != 0);
            ++nonzero_seen;
        }
    }
    CHECK(zero_seen > 50);
    CHECK(nonzero_seen > 50);
}

TEST_CASE("compose basics and associativity") {
    IntPoly f{-2, 0, 1};  // x^2 - 2
    IntPoly g{0, 0, 1};   // x^2
    CHECK(compose(f, g) == IntPoly{-2, 0, 0, 0, 1});
    IntPoly f2{1, 3, 1};
    CHECK(compose(f2, f) == IntPoly{-1, 0, -1, 0, 1});  // x^4 - x^2 - 1
    CHECK(compose(IntPoly::x(), g) == g);

    Rng rng(505);
    for (int trial = 0; trial < 60; ++trial) {
        IntPoly a = random_poly(rng, 3, 8);
        IntPoly b = random_poly(rng, 3, 8);
        IntPoly c = random_poly(rng, 3, 8);
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
    // degree law for nonconstant inputs
    for (int trial = 0; trial < 40; ++trial) {
        IntPoly a = random_poly(rng, 4, 8);
        IntPoly b = random_poly(rng, 4, 8);
        if (a.degree() < 1 || b.degree() < 1) continue;
        CHECK(compose(a, b).degree() == a.degree() * b.degree());
    }
}

TEST_CASE("zero polynomial rejections") {
    CHECK_THROWS_AS(resultant(IntPoly{}, IntPoly::x()), error);
    CHECK_THROWS_AS(discriminant(IntPoly{}), error);
    try {
        resultant(IntPoly{}, IntPoly::x());
    } catch (const error& e) {
        CHECK(e.code() == errc::zero_polynomial);
    }
}

TEST_CASE("ratpoly normalization") {
    RatPoly a(IntPoly{2, 4}, BigInt(6));  // (2+4x)/6 -> (1+2x)/3
    CHECK(a.den() == 3);
    CHECK(a.num() == IntPoly{1, 2});
    RatPoly b = a * a;
    CHECK(b.coeff(0) == BigRat(1, 9));
    IntPoly m{1, 0, 1};  // y^2 + 1
    RatPoly r = mod_monic(RatPoly(IntPoly{0, 0, 0, 1}), m);  // y^3 mod y^2+1 = -y
    CHECK(r.num() == IntPoly{0, -1});
}
