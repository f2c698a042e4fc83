#include <doctest.h>

#include <set>

#include "wreathcount/galois.hpp"
#include "wreathcount/numeric.hpp"

using namespace wreathcount;

namespace {

CompositeTower tower22(long long a, long long b, long long c, long long d) {
    return tower_from_alpha(Shape::parse("2,2"), {BigInt(a), BigInt(b), BigInt(c), BigInt(d)});
}

} // namespace

TEST_CASE("frobenius records for x^4 - 2") {
    CompositeTower t = tower22(0, 0, 0, -2);
    FrobeniusSample s = frobenius_sample(t, {2, 3, 5, 7, 11, 13});
    CHECK(s.skipped == std::vector<long long>{2});  // 2 | disc
    REQUIRE(s.records.size() == 5);

    // p = 7: leaf {2,1,1}, level Q1 = x^2 - 2 splits since 2 = 3^2 mod 7
    const FrobeniusRecord* p7 = nullptr;
    const FrobeniusRecord* p3 = nullptr;
    for (const auto& r : s.records) {
        if (r.p == 7) p7 = &r;
        if (r.p == 3) p3 = &r;
    }
    REQUIRE(p7 != nullptr);
    CHECK(p7->leaf.parts == std::vector<int>{2, 1, 1});
    REQUIRE(p7->levels.size() == 1);
    CHECK(p7->levels[0].parts == std::vector<int>{1, 1});
    REQUIRE(p3 != nullptr);
    CHECK(p3->leaf.parts == std::vector<int>{2, 2});

    CHECK_THROWS_AS(frobenius_sample(t, {2}), error);  // AllPrimesBad
}

TEST_CASE("refinement law holds at the first 25 good primes of x^4 - 2") {
    CompositeTower t = tower22(0, 0, 0, -2);
    for (long long p : good_primes_for_tower(t, 25)) CHECK(refinement_law_holds(t, p));
}

TEST_CASE("containment for x^4-2 and a corrupted record") {
    CompositeTower t = tower22(0, 0, 0, -2);
    FrobeniusSample s = frobenius_sample(t, {3, 5, 7, 11, 13});
    auto rep = containment_check(s.records, t.shape, 1000000);
    CHECK(rep.pass);

    FrobeniusRecord bad;
    bad.p = 97;
    bad.leaf.parts = {3, 1};  // D4 has no 3-cycle
    auto records = s.records;
    records.push_back(bad);
    auto rep2 = containment_check(records, t.shape, 1000000);
    CHECK(!rep2.pass);
    REQUIRE(rep2.offenders.size() == 1);
    CHECK(rep2.offenders[0] == records.size() - 1);
}

TEST_CASE("splitting degrees of the classical examples") {
    CHECK(splitting_degree(IntPoly{-2, 0, 0, 0, 1}) == 8);   // D4
    CHECK(splitting_degree(IntPoly{1, 0, 0, 0, 1}) == 4);    // Q(zeta_8)
    CHECK(splitting_degree(IntPoly{2, 0, -4, 0, 1}) == 4);   // C4, real part of Q(zeta_16)
    CHECK(splitting_degree(IntPoly{-2, 0, 0, 1}) == 6);      // S3
    CHECK(splitting_degree(IntPoly{1, 0, 1}) == 2);
    CHECK(splitting_degree(IntPoly{-1, 1}) == 1);
    CHECK(splitting_degree(IntPoly{-2, 0, 1}) == 2);
    CHECK(splitting_degree(IntPoly{-1, 0, 0, 0, 1}) == 2);   // x^4-1 reducible squarefree: Q(i)
    CHECK(splitting_degree(IntPoly{-1, -1, 1}) == 2);

    CHECK_THROWS_AS(splitting_degree(IntPoly{1, 2, 1}), error);        // NotSquarefree
    CHECK_THROWS_AS(splitting_degree(IntPoly{-2, 0, 0, 0, 1}, 4), error);  // CapExceeded
}

TEST_CASE("splitting degree divisibility invariants") {
    // irreducible f of degree N: N | degree | N!
    std::vector<IntPoly> irred = {
        IntPoly{-2, 0, 0, 0, 1}, IntPoly{1, 0, 0, 0, 1}, IntPoly{-2, 0, 0, 1},
        IntPoly{1, 1, 1}, IntPoly{-3, 1, 0, 1}, IntPoly{1, 3, 0, 0, 1},
    };
    for (const auto& f : irred) {
        long long sd = splitting_degree(f, 200);
        long long n = f.degree();
        BigInt nfact = factorial(static_cast<unsigned>(n));
        CHECK(sd % n == 0);
        CHECK(nfact % BigInt(sd) == 0);
    }
}

TEST_CASE("exact certification of the pinned towers") {
    CertifyOptions opt;
    auto r1 = certify_exact(tower22(0, 0, 0, -2), opt);
    CHECK(r1.verdict == Verdict::CertifiedEqual);
    CHECK(r1.splitting_degree == 8);
    CHECK(r1.expected_order == 8);
    CHECK(r1.irreducible);

    auto r2 = certify_exact(tower22(0, 0, 0, -1), opt);  // x^4 - 1 reducible
    CHECK(r2.verdict == Verdict::CertifiedProper);
    CHECK(r2.stage == "reducible");

    auto r3 = certify_exact(tower22(0, 0, -4, 2), opt);  // x^4 - 4x^2 + 2, C4
    CHECK(r3.verdict == Verdict::CertifiedProper);
    CHECK(r3.splitting_degree == 4);

    auto r4 = certify_exact(tower22(0, 0, 0, 0), opt);  // x^4, not squarefree
    CHECK(r4.verdict == Verdict::CertifiedProper);
    CHECK(r4.stage == "not_squarefree");

    // V4 composite: (x^2)^2 - 4: x^4 - 4 = (x^2-2)(x^2+2) reducible
    auto r5 = certify_exact(tower22(0, 0, 0, -4), opt);
    CHECK(r5.verdict == Verdict::CertifiedProper);

    // splitting degree divides the group order for composite towers
    for (long long d : {-2, -3, 5, 7}) {
        auto r = certify_exact(tower22(0, 0, 0, d), opt);
        if (r.splitting_degree > 0) CHECK(BigInt(8) % BigInt(r.splitting_degree) == 0);
    }
}

TEST_CASE("statistical certification is consistent with exact on the (2,2) battery") {
    CertifyOptions opt;
    Rng rng(3030);
    int certified_pairs = 0;
    for (int trial = 0; trial < 40; ++trial) {
        CompositeTower t = tower22(rng.range(-3, 3), rng.range(-6, 6), rng.range(-6, 6), rng.range(-20, 20));
        auto ex = certify_exact(t, opt);
        if (ex.verdict != Verdict::CertifiedEqual) continue;
        auto st = certify_statistical(t, opt);
        CHECK(st.verdict == Verdict::ConsistentWithW);
        CHECK(st.sample_size >= 64);
        CHECK(st.tv_distance < 0.25);
        ++certified_pairs;
    }
    CHECK(certified_pairs > 5);
}

TEST_CASE("statistical mode separates C4 from the full group") {
    // x^4 - 4x^2 + 2 as a tower: C4 inside D4; types {1^4, 2^2, 4} only
    auto st = certify_statistical(tower22(0, 0, -4, 2), {});
    CHECK(st.verdict == Verdict::Inconclusive);
    CHECK(st.tv_distance >= 0.25);
}

TEST_CASE("density estimate, exhaustive shape (2) box") {
    // quadratics x^2 + a x + b: the group is S2 iff the discriminant is not
    // a perfect square (exhaustive oracle inline)
    Shape s = Shape::parse("2");
    DensityOptions opt;
    opt.workers = 1;
    DensityResult r = density_estimate(s, BigRat(3), CertMode::Exact, opt);
    CHECK(r.exhaustive);
    CHECK(r.box_size == 7 * 19);
    long long expect = 0;
    for (long long a = -3; a <= 3; ++a)
        for (long long b = -9; b <= 9; ++b) {
            BigInt d = a * a - 4 * b;
            if (d < 0) { ++expect; continue; }
            BigInt r2 = boost::multiprecision::sqrt(d);
            if (r2 * r2 != d) ++expect;
        }
    CHECK(r.certified == expect);
    CHECK(r.fraction == doctest::Approx(static_cast<double>(expect) / 133.0));
    CHECK(r.wilson_lo < r.fraction);
    CHECK(r.fraction < r.wilson_hi);
}

TEST_CASE("density estimate sampling is worker-count independent") {
    Shape s = Shape::parse("2,2");
    DensityOptions a;
    a.exhaustive_threshold = 50;  // force sampling
    a.sample = 60;
    a.workers = 1;
    DensityOptions b = a;
    b.workers = 4;
    DensityResult ra = density_estimate(s, BigRat(2), CertMode::Exact, a);
    DensityResult rb = density_estimate(s, BigRat(2), CertMode::Exact, b);
    CHECK(!ra.exhaustive);
    CHECK(ra.certified == rb.certified);
    CHECK(ra.examined == rb.examined);
    CHECK(ra.fraction == rb.fraction);
}
