#include <doctest.h>

#include <cmath>
#include <set>

#include "wreathcount/heights.hpp"
#include "wreathcount/numeric.hpp"

using namespace wreathcount;

TEST_CASE("poly_height definition cases") {
    CHECK(poly_height(IntPoly::monomial(5)).value == 0.0);
    Height h = poly_height(IntPoly{4, 3, 1});  // x^2+3x+4: max(3, sqrt 4) = 3
    CHECK(h.index == 1);
    CHECK(h.coeff_abs == 3);
    CHECK(h.value == doctest::Approx(3.0));
    Height h2 = poly_height(IntPoly{-2, 0, 0, 0, 1});
    CHECK(h2.index == 4);
    CHECK(h2.value == doctest::Approx(std::pow(2.0, 0.25)));
    CHECK_THROWS_AS(poly_height(IntPoly{1, 0, 2}), error);
    // exact tie-breaking: x^2 + 2x + 4 -> 2 vs 4^(1/2), equal
    Height h3 = poly_height(IntPoly{4, 2, 1});
    CHECK(Height::cmp(1, BigInt(2), 2, BigInt(4)) == 0);
    CHECK(h3.value == doctest::Approx(2.0));
}

TEST_CASE("root bound check on pinned cases") {
    RootBoundCheck a = root_bound_check(IntPoly{-4, 0, 1});  // roots +-2, height 2
    CHECK(a.max_modulus == doctest::Approx(2.0));
    CHECK(a.bound == doctest::Approx(4.0));
    CHECK(a.pass);

    RootBoundCheck b = root_bound_check(IntPoly::monomial(6));
    CHECK(b.max_modulus == doctest::Approx(0.0));
    CHECK(b.bound == 0.0);
    CHECK(b.pass);

    RootBoundCheck c = root_bound_check(IntPoly{-2, 0, 0, 0, 1});
    CHECK(c.max_modulus == doctest::Approx(std::pow(2.0, 0.25)));
    CHECK(c.pass);

    // near-extremal: x^2 - x - 1 has |root| = golden ratio < 2 = 2*height
    RootBoundCheck d = root_bound_check(IntPoly{-1, -1, 1});
    CHECK(d.max_modulus == doctest::Approx(1.6180339887));
    CHECK(d.pass);
}

TEST_CASE("root bound holds for 1000 random monic polynomials") {
    Rng rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        int deg = 1 + static_cast<int>(rng.below(8));
        std::vector<BigInt> c(static_cast<size_t>(deg) + 1);
        for (int i = 0; i < deg; ++i) c[static_cast<size_t>(i)] = rng.range(-1000000, 1000000);
        c.back() = 1;
        IntPoly f = IntPoly::from_coeffs(std::move(c));
        RootBoundCheck r = root_bound_check(f);
        CHECK(r.pass);
    }
}

TEST_CASE("roots reproduce the polynomial (spot residual check)") {
    Rng rng(2025);
    for (int trial = 0; trial < 50; ++trial) {
        int deg = 2 + static_cast<int>(rng.below(6));
        std::vector<BigInt> c(static_cast<size_t>(deg) + 1);
        for (int i = 0; i < deg; ++i) c[static_cast<size_t>(i)] = rng.range(-500, 500);
        c.back() = 1;
        IntPoly f = IntPoly::from_coeffs(std::move(c));
        auto roots = complex_roots(f);
        REQUIRE(static_cast<int>(roots.size()) == deg);
        std::complex<double> prodsum(0, 0);
        std::complex<double> sum(0, 0);
        for (auto z : roots) sum += z;
        // sum of roots = -a_{n-1}
        CHECK(std::abs(sum - std::complex<double>(-to_double(f.coeff(static_cast<size_t>(deg - 1))), 0)) <
              1e-6 * (1 + std::abs(to_double(f.coeff(static_cast<size_t>(deg - 1))))));
        (void)prodsum;
    }
}

TEST_CASE("box bounds, counts, and point decoding") {
    BoxSpec b = make_box(Shape::parse("2,2"), BigRat(2));
    REQUIRE(b.bounds.size() == 4);
    CHECK(b.exps == std::vector<long long>{1, 2, 2, 4});
    CHECK(b.bounds == std::vector<BigInt>{BigInt(2), BigInt(4), BigInt(4), BigInt(16)});
    CHECK(b.count() == 5 * 9 * 9 * 33);
    CHECK(b.count() == 13365);

    CHECK(make_box(Shape::parse("2"), BigRat(1)).count() == 9);
    CHECK(make_box(Shape::parse("2,2"), BigRat(1)).count() == 81);

    // rational Y: floor((3/2)^e)
    BoxSpec br = make_box(Shape::parse("2"), BigRat(3, 2));
    CHECK(br.bounds == std::vector<BigInt>{BigInt(1), BigInt(2)});

    // decode round trip
    BigInt total = b.count();
    std::set<std::vector<BigInt>> seen;
    for (BigInt i = 0; i < 200; ++i) seen.insert(b.point_at(i));
    CHECK(seen.size() == 200);
    auto first = b.point_at(BigInt(0));
    CHECK(first == std::vector<BigInt>{BigInt(-2), BigInt(-4), BigInt(-4), BigInt(-16)});
    auto last = b.point_at(total - 1);
    CHECK(last == std::vector<BigInt>{BigInt(2), BigInt(4), BigInt(4), BigInt(16)});

    // iterator agrees with decoding
    BoxIterator it(b);
    std::vector<long long> p;
    BigInt idx = 0;
    while (it.next(p)) {
        if (idx < 50 || idx > total - 50) {
            auto q = b.point_at(idx);
            for (size_t i = 0; i < p.size(); ++i) CHECK(BigInt(p[i]) == q[i]);
        }
        ++idx;
    }
    CHECK(idx == total);
}

TEST_CASE("exponent formulas, exact") {
    CHECK(exponent_A(Shape::parse("2,2")) == BigRat(9));
    CHECK(exponent_B(Shape::parse("2,2")) == BigRat(7));
    CHECK(theorem_A_exponent(Shape::parse("2,2")) == BigRat(3, 8));
    CHECK(theorem_A_exponent(Shape::parse("2,3")) == BigRat(14, 45));
    CHECK(theorem_A_exponent(Shape::parse("3,2")) == BigRat(4, 15));
    // single-block shapes use the first branch
    CHECK(theorem_A_exponent(Shape::parse("2")) == BigRat(1));

    CHECK(delta_nk(2, 2) == BigRat(3, 8));
    CHECK(delta_nk(2, 3) == BigRat(5, 32));
    CHECK(ptw_beta(2, 2) == BigRat(1, 16));

    for (int n = 2; n <= 4; ++n) {
        for (int k = 2; k <= 4; ++k) {
            Shape s(std::vector<int>(static_cast<size_t>(k), n));
            CHECK(theorem_A_exponent(s) == delta_nk(n, k));
            CHECK(delta_nk(n, k) >= BigRat(1, 2 * bpow(BigInt(n), static_cast<unsigned long>(k - 1))));
            CHECK(delta_nk(n, k) > ptw_beta(n, k));
        }
    }
}

TEST_CASE("branch continuity of the two-branch exponent at B = N^2/4 + N") {
    for (long long N = 3; N <= 20; ++N) {
        BigRat boundary = BigRat(N * N, 4) + N;
        BigRat left = (boundary - BigRat(N, 2)) / BigRat(N * N - N);
        BigRat right = (boundary - N) * BigRat(N + 2) / BigRat(N * N * N - N * N);
        CHECK(left == right);
        CHECK(theorem_A_exponent_from(boundary, N) == left);
    }
}

TEST_CASE("box-count slope approaches A") {
    Shape s = Shape::parse("2,2");
    double a = to_double(exponent_A(s));
    double c32 = to_double(BigRat(make_box(s, BigRat(32)).count()));
    double c64 = to_double(BigRat(make_box(s, BigRat(64)).count()));
    double slope = (std::log(c64) - std::log(c32)) / (std::log(64.0) - std::log(32.0));
    CHECK(std::abs(slope - a) / a < 0.05);
}

TEST_CASE("measured box constants stabilize between Y = 16 and Y = 32") {
    Shape s = Shape::parse("2,2");
    BoxConstants a = measure_box_constants(s, BigRat(16), 200, 7);
    BoxConstants b = measure_box_constants(s, BigRat(32), 200, 7);
    CHECK(a.C1 > 0);
    CHECK(b.C1 > 0);
    CHECK(std::abs(b.C1 - a.C1) / a.C1 < 0.10);
    CHECK(std::abs(b.C2 - a.C2) / a.C2 < 0.10);
}
