#include <doctest.h>

#include "wreathcount/harness.hpp"
#include "wreathcount/heights.hpp"
#include "wreathcount/numeric.hpp"

using namespace wreathcount;

TEST_CASE("scan polynomials match the direct discriminant on random towers") {
    Rng rng(4040);
    for (const char* sh : {"2,2", "2,3", "3,2", "2,2,2", "3,3"}) {
        Shape s = Shape::parse(sh);
        int k = s.k();
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<BigInt> alpha(static_cast<size_t>(s.coord_count()));
            for (auto& v : alpha) v = rng.range(-9, 9);
            CompositeTower t = tower_from_alpha(s, alpha);
            BigInt direct = discriminant(t.F());

            // assembled from the shifted-disc and resultant polynomials
            BigInt assembled;
            int nk = s.entry(k);
            std::vector<BigInt> base_c(static_cast<size_t>(nk + 1));
            base_c[static_cast<size_t>(nk)] = 1;
            for (int v = 1; v < nk; ++v)
                base_c[static_cast<size_t>(nk - v)] = alpha[static_cast<size_t>(s.coord_index(k, v))];
            IntPoly base = IntPoly::from_coeffs(std::move(base_c));
            BigInt d = alpha[static_cast<size_t>(s.coord_index(k, nk))];
            if (k == 1) {
                assembled = big_abs(disc_const_poly(base).eval(d));
            } else {
                IntPoly dH = disc_shift_poly(t.F_lower(k - 1));
                BigInt v1 = disc_const_poly(base).eval(d);
                BigInt v2 = res_with_const_poly(base, dH).eval(d);
                assembled = big_abs(bpow(big_abs(v1), static_cast<unsigned long>(s.N(k - 1))) * big_abs(v2));
            }
            CHECK(big_abs(direct) == assembled);
        }
    }
}

TEST_CASE("disc_shift_poly on the quadratic tower: 4y + (a^2 - 4b)") {
    IntPoly H{-2, 0, 1};  // x^2 - 2
    IntPoly dh = disc_shift_poly(H);
    CHECK(dh == IntPoly{8, 4});  // disc(x^2 - (2 + y)) = 4(2 + y) = 4y + 8
}

TEST_CASE("reduced_form collapses translates and mirrors") {
    Rng rng(4141);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<BigInt> c(5);
        for (int i = 0; i < 4; ++i) c[static_cast<size_t>(i)] = rng.range(-50, 50);
        c[4] = 1;
        IntPoly f = IntPoly::from_coeffs(std::move(c));
        BigInt t = rng.range(-20, 20);
        CHECK(reduced_form(f) == reduced_form(f.shift_var(t)));
        // mirror
        std::vector<BigInt> mc = f.coeffs();
        for (int i = 0; i <= 4; ++i)
            if ((4 - i) % 2 == 1) mc[static_cast<size_t>(i)] = -mc[static_cast<size_t>(i)];
        CHECK(reduced_form(f) == reduced_form(IntPoly::from_coeffs(std::move(mc))));
    }
}

TEST_CASE("fields_isomorphic basics") {
    CHECK(fields_isomorphic(IntPoly{-2, 0, 1}, IntPoly{-8, 0, 1}));
    CHECK(!fields_isomorphic(IntPoly{-2, 0, 1}, IntPoly{-3, 0, 1}));
    CHECK(fields_isomorphic(IntPoly{-2, 0, 0, 0, 1}, IntPoly{-2, 0, 0, 0, 1}));
    CHECK(fields_isomorphic(IntPoly{-8, 0, 1}, IntPoly{-2, 0, 1}));  // symmetric
    CHECK(!fields_isomorphic(IntPoly{-2, 0, 0, 0, 1}, IntPoly{1, 0, 0, 0, 1}));
    // x^4 - 2 vs its translate
    IntPoly f{-2, 0, 0, 0, 1};
    CHECK(fields_isomorphic(f, f.shift_var(BigInt(3))));
    CHECK_THROWS_AS(fields_isomorphic(IntPoly{-2, 0, 1}, IntPoly{-2, 0, 0, 1}), error);
    CHECK_THROWS_AS(fields_isomorphic(IntPoly{-2, 0, 2}, IntPoly{-2, 0, 2}), error);
    // transitivity spot-check on sqrt(2) triple
    IntPoly a{-2, 0, 1}, b{-8, 0, 1}, c{-18, 0, 1};
    CHECK(fields_isomorphic(a, b));
    CHECK(fields_isomorphic(b, c));
    CHECK(fields_isomorphic(a, c));
}

TEST_CASE("run_count on the Y=1 box of shape (2,2)") {
    Shape s = Shape::parse("2,2");
    std::vector<BigInt> grid = {BigInt(100), BigInt(1000), BigInt(10000), BigInt(100000), BigInt(1000000)};
    CountOptions opt;
    opt.workers = 1;
    CountResult r = run_count(s, 1, grid, opt);
    CHECK(r.box_points == 81);
    CHECK(r.survivors > 0);
    CHECK(r.certified_classes > 0);
    // monotone counts
    for (size_t i = 1; i < r.curve.points.size(); ++i)
        CHECK(r.curve.points[i].n_fields >= r.curve.points[i - 1].n_fields);
    // X below the smallest disc -> zero
    CountResult r0 = run_count(s, 1, {BigInt(1)}, opt);
    CHECK(r0.curve.points[0].n_fields == 0);
    // every counted field is certified and min_disc <= X
    for (const auto& f : r.fields) {
        CHECK(f.verdict == Verdict::CertifiedEqual);
        CHECK(f.min_abs_disc > 0);
    }
    // pairwise non-isomorphic representatives
    for (size_t i = 0; i < r.fields.size(); ++i)
        for (size_t j = i + 1; j < r.fields.size(); ++j)
            CHECK(!fields_isomorphic(r.fields[i].poly, r.fields[j].poly));
}

TEST_CASE("run_count is worker-count independent (order independence)") {
    Shape s = Shape::parse("2,2");
    std::vector<BigInt> grid = {BigInt(1000), BigInt(100000), BigInt(10000000)};
    CountOptions o1;
    o1.workers = 1;
    CountOptions o2;
    o2.workers = 3;
    CountResult a = run_count(s, 2, grid, o1);
    CountResult b = run_count(s, 2, grid, o2);
    CHECK(a.survivors == b.survivors);
    CHECK(a.classes == b.classes);
    CHECK(a.certified_classes == b.certified_classes);
    REQUIRE(a.curve.points.size() == b.curve.points.size());
    for (size_t i = 0; i < a.curve.points.size(); ++i) {
        CHECK(a.curve.points[i].n_fields == b.curve.points[i].n_fields);
        CHECK(a.curve.points[i].min_disc == b.curve.points[i].min_disc);
        CHECK(a.curve.points[i].max_disc == b.curve.points[i].max_disc);
    }
}

TEST_CASE("run_count box cap") {
    CountOptions opt;
    opt.box_cap = 10;
    CHECK_THROWS_AS(run_count(Shape::parse("2,2"), 1, {BigInt(1000)}, opt), error);
}

TEST_CASE("slope report on synthetic curves") {
    Shape s = Shape::parse("2,2");
    CountCurve linear;  // count = X -> slope 1
    for (long long X : {1000, 10000, 100000, 1000000, 10000000})
        linear.points.push_back({BigInt(X), X, BigInt(1), BigInt(X)});
    SlopeReport rep = run_slope_report(linear, s);
    CHECK(rep.slope == doctest::Approx(1.0));
    CHECK(rep.pass);
    CHECK(rep.exponent == BigRat(3, 8));
    CHECK(rep.has_power_form);
    CHECK(rep.delta == BigRat(3, 8));
    CHECK(rep.beta == BigRat(1, 16));

    CountCurve flat;
    for (long long X : {1000, 10000, 100000, 1000000, 10000000})
        flat.points.push_back({BigInt(X), 7, BigInt(1), BigInt(1)});
    SlopeReport frep = run_slope_report(flat, s);
    CHECK(frep.slope == doctest::Approx(0.0));
    CHECK(!frep.pass);

    CountCurve tiny;
    tiny.points.push_back({BigInt(10), 1, BigInt(1), BigInt(1)});
    CHECK_THROWS_AS(run_slope_report(tiny, s), error);

    CountCurve zeros;
    for (long long X : {1000, 10000, 100000, 1000000, 10000000})
        zeros.points.push_back({BigInt(X), 0, BigInt(0), BigInt(0)});
    CHECK_THROWS_AS(run_slope_report(zeros, s), error);
}

TEST_CASE("run_density trend rows") {
    Shape s = Shape::parse("2");
    DensityOptions opt;
    opt.workers = 1;
    auto rows = run_density(s, {BigRat(1), BigRat(2)}, CertMode::Exact, opt);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].res.exhaustive);
    CHECK(rows[0].res.box_size == 9);
    CHECK(rows[1].res.box_size == 45);  // bounds 2, 4 -> 5*9
    for (const auto& r : rows) {
        CHECK(r.res.fraction >= 0.0);
        CHECK(r.res.fraction <= 1.0);
    }
}
