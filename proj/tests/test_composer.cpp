#include <doctest.h>

#include <set>

#include "wreathcount/composer.hpp"
#include "wreathcount/numeric.hpp"

using namespace wreathcount;

namespace {

std::vector<BigInt> random_alpha(Rng& rng, const Shape& s, long long bound) {
    std::vector<BigInt> a(static_cast<size_t>(s.coord_count()));
    for (auto& v : a) v = rng.range(-bound, bound);
    return a;
}

} // namespace

TEST_CASE("generic composite of shape (2) is x^2 + T11 x + T12") {
    GenericComposite g = build_generic(Shape::parse("2"), 1000);
    REQUIRE(g.F.size() == 1);
    CHECK(g.F[0].term_count() == 3);
    CHECK(g.F[0].degree_in(0) == 2);
    CHECK(g.F[0].substitute({BigInt(5), BigInt(7)}) == IntPoly{7, 5, 1});
}

TEST_CASE("degree lemma on the shape grid, exact symbolic check") {
    for (const char* sh : {"2,2", "2,3", "3,2", "3,3", "2,2,2"}) {
        Shape s = Shape::parse(sh);
        GenericComposite g = build_generic(s, 1000000);
        for (int j = 1; j <= s.k(); ++j) {
            const MultiPoly& Fj = g.F[static_cast<size_t>(j - 1)];
            CHECK(Fj.degree_in(0) == s.N(j));
            CHECK(Fj.total_degree_coeff_vars() <= s.D(j));
        }
    }
}

TEST_CASE("specialization examples from the tower definition") {
    Shape s = Shape::parse("2,2");
    GenericComposite g = build_generic(s, 1000000);

    CompositeTower t1 = specialize(g, Specialization(s, {BigInt(0), BigInt(0), BigInt(0), BigInt(-2)}));
    CHECK(t1.F() == IntPoly{-2, 0, 0, 0, 1});
    CHECK(t1.Q(1) == IntPoly{-2, 0, 1});
    CHECK(t1.psi2 == std::vector<BigInt>{BigInt(0)});

    CompositeTower t2 = specialize(g, Specialization(s, {BigInt(0), BigInt(-2), BigInt(3), BigInt(1)}));
    CHECK(t2.F() == IntPoly{-1, 0, -1, 0, 1});  // x^4 - x^2 - 1
    CHECK(t2.F_lower(1) == IntPoly{-2, 0, 1});
    CHECK(t2.psi2 == std::vector<BigInt>{BigInt(-2)});

    CompositeTower t3 = specialize(g, Specialization(s, {BigInt(0), BigInt(0), BigInt(0), BigInt(0)}));
    CHECK(t3.F() == IntPoly::monomial(4));

    CHECK_THROWS_AS(Specialization(s, {BigInt(1)}), error);
}

TEST_CASE("tower identities F = Q_j o F_j for random specializations") {
    Rng rng(1212);
    for (const char* sh : {"2,2", "2,3", "3,2", "2,2,2"}) {
        Shape s = Shape::parse(sh);
        for (int trial = 0; trial < 250; ++trial) {
            CompositeTower t = tower_from_alpha(s, random_alpha(rng, s, 1000));
            for (int j = 0; j <= s.k(); ++j) {
                CHECK(compose(t.Q(j), t.F_lower(j)) == t.F());
                CHECK(t.F_lower(j).degree() == s.N(j));
            }
            for (int j = 1; j <= s.k(); ++j)
                CHECK(compose(t.Q(j), t.blocks[static_cast<size_t>(j - 1)]) == t.Q(j - 1));
        }
    }
}

TEST_CASE("iterate matches repeated-block specialization") {
    CompositeTower t = iterate(IntPoly{0, 0, 1}, 2, BigInt(2));
    CHECK(t.F() == IntPoly{-2, 0, 0, 0, 1});

    CompositeTower t2 = iterate(IntPoly{1, 0, 1}, 2, BigInt(0));
    CHECK(t2.F() == IntPoly{2, 0, 2, 0, 1});  // (x^2+1)^2 + 1

    CompositeTower t3 = iterate(IntPoly{0, 0, 1}, 3, BigInt(0));
    CHECK(t3.F() == IntPoly::monomial(8));

    // coefficientwise equality with an explicit specialization
    Rng rng(1313);
    for (int trial = 0; trial < 50; ++trial) {
        IntPoly f = IntPoly::from_coeffs({rng.range(-9, 9), rng.range(-9, 9), BigInt(1)});
        BigInt c = rng.range(-9, 9);
        CompositeTower a = iterate(f, 3, c);
        IntPoly direct = compose(f, compose(f, f)) - IntPoly(c);
        CHECK(a.F() == direct);
        CHECK(a.shape == Shape::parse("2,2,2"));
    }
    CHECK_THROWS_AS(iterate(IntPoly{1, 1}, 2, BigInt(0)), error);
    CHECK_THROWS_AS(iterate(IntPoly{1, 0, 2}, 2, BigInt(0)), error);
}

TEST_CASE("recover_alpha round-trips, pinned cases first") {
    // (x^2-2, x^4-x^2-1) -> alpha = (0,-2,3,1)
    Specialization a = recover_alpha({IntPoly{-2, 0, 1}, IntPoly{-1, 0, -1, 0, 1}});
    CHECK(a.values == std::vector<BigInt>{BigInt(0), BigInt(-2), BigInt(3), BigInt(1)});

    Specialization b = recover_alpha({IntPoly{0, 0, 1}, IntPoly{-2, 0, 0, 0, 1}});
    CHECK(b.values == std::vector<BigInt>{BigInt(0), BigInt(0), BigInt(0), BigInt(-2)});

    Specialization c = recover_alpha({IntPoly{7, 5, 1}});
    CHECK(c.values == std::vector<BigInt>{BigInt(5), BigInt(7)});

    // inconsistent tower: degree fine but not a composition
    CHECK_THROWS_AS(recover_alpha({IntPoly{-2, 0, 1}, IntPoly{1, 1, 1, 1, 1}}), error);
}

TEST_CASE("recover_alpha round-trips on 1000 random specializations per shape") {
    Rng rng(1414);
    for (const char* sh : {"2,2", "2,3", "3,2", "3,3", "2,2,2"}) {
        Shape s = Shape::parse(sh);
        for (int trial = 0; trial < 1000; ++trial) {
            std::vector<BigInt> alpha = random_alpha(rng, s, 1000000);
            CompositeTower t = tower_from_alpha(s, alpha);
            std::vector<IntPoly> lowers(t.lower.begin() + 1, t.lower.end());
            Specialization rec = recover_alpha(lowers);
            CHECK(rec.shape == s);
            CHECK(rec.values == alpha);
        }
    }
}

TEST_CASE("psi_prime examples and small-box injectivity") {
    Shape s = Shape::parse("2,2");
    CompositeTower t1 = tower_from_alpha(s, {BigInt(0), BigInt(0), BigInt(0), BigInt(-2)});
    PsiImage i1 = psi_prime(t1);
    CHECK(i1.psi2 == std::vector<BigInt>{BigInt(0)});
    CompositeTower t2 = tower_from_alpha(s, {BigInt(0), BigInt(-2), BigInt(3), BigInt(1)});
    CHECK(psi_prime(t2).psi2 == std::vector<BigInt>{BigInt(-2)});

    // distinct alpha -> distinct images on a small grid (pairwise via a set)
    std::set<std::string> images;
    long long count = 0;
    for (int a = -1; a <= 1; ++a)
        for (int b = -1; b <= 1; ++b)
            for (int c = -1; c <= 1; ++c)
                for (int d = -1; d <= 1; ++d) {
                    CompositeTower t = tower_from_alpha(s, {BigInt(a), BigInt(b), BigInt(c), BigInt(d)});
                    images.insert(psi_prime(t).canonical());
                    ++count;
                }
    CHECK(static_cast<long long>(images.size()) == count);
}

TEST_CASE("min_poly_over_level") {
    Shape s = Shape::parse("2,2");
    CompositeTower t = tower_from_alpha(s, {BigInt(0), BigInt(0), BigInt(0), BigInt(-2)});
    LevelMinPoly top = min_poly_over_level(t, s.k());
    CHECK(top.base == t.F());
    CHECK(top.with_constant(BigInt(0)) == t.F());  // z_k = 0
    LevelMinPoly bottom = min_poly_over_level(t, 0);
    CHECK(bottom.base == IntPoly::x());
    LevelMinPoly mid = min_poly_over_level(t, 1);
    CHECK(mid.base == IntPoly{0, 0, 1});  // x^2 - Z
    CHECK(mid.base.degree() == s.N(1));
    CHECK_THROWS_AS(min_poly_over_level(t, 5), error);
}
