#include "wreathcount/selftest.hpp"

#include <set>

#include "wreathcount/composer.hpp"
#include "wreathcount/heights.hpp"

namespace wreathcount {

namespace {

using Check = SelftestCheck;

IntPoly random_poly(Rng& rng, int maxdeg, long long maxcoeff) {
    int d = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(maxdeg)));
    std::vector<BigInt> c(static_cast<size_t>(d + 1));
    for (auto& a : c) a = rng.range(-maxcoeff, maxcoeff);
    if (c.back() == 0) c.back() = 1;
    return IntPoly::from_coeffs(std::move(c));
}

Check algebra_roundtrip(Rng& rng, int n) {
    for (int i = 0; i < n; ++i) {
        IntPoly f = random_poly(rng, 8, 10000);
        QFactorization qf = factor_over_Q(f);
        IntPoly prod{qf.content};
        for (const auto& fac : qf.factors)
            for (int j = 0; j < fac.multiplicity; ++j) prod = prod * fac.poly;
        if (prod != f) return {"algebra_roundtrip", false, "mismatch at trial " + std::to_string(i)};
    }
    return {"algebra_roundtrip", true, std::to_string(n) + " factorizations"};
}

Check algebra_resultant(Rng& rng, int n) {
    for (int i = 0; i < n; ++i) {
        IntPoly a = random_poly(rng, 4, 30);
        IntPoly b = random_poly(rng, 4, 30);
        IntPoly c = random_poly(rng, 3, 30);
        if (a.degree() < 1 || b.degree() < 1 || c.degree() < 1) continue;
        if (resultant(a * c, b * c) != 0) return {"algebra_resultant", false, "shared factor, nonzero resultant"};
        bool coprime = gcd(a, b).degree() == 0;
        if (coprime && resultant(a, b) == 0) return {"algebra_resultant", false, "coprime pair, zero resultant"};
    }
    return {"algebra_resultant", true, ""};
}

Check algebra_compose(Rng& rng, int n) {
    for (int i = 0; i < n; ++i) {
        IntPoly a = random_poly(rng, 3, 9), b = random_poly(rng, 3, 9), c = random_poly(rng, 3, 9);
        if (compose(compose(a, b), c) != compose(a, compose(b, c)))
            return {"algebra_compose_assoc", false, "associativity"};
    }
    return {"algebra_compose_assoc", true, ""};
}

Check algebra_modp(Rng& rng, int n) {
    for (int i = 0; i < n; ++i) {
        IntPoly f = random_poly(rng, 6, 200);
        if (f.degree() < 2 || !is_squarefree(f)) continue;
        QFactorization qf = factor_over_Q(f);
        for (std::uint64_t p : good_primes_for(f, 5)) {
            std::vector<int> whole = factor_degrees_mod_p(f, p);
            std::vector<int> pieces;
            for (const auto& fac : qf.factors) {
                auto d = factor_degrees_mod_p(fac.poly, p);
                pieces.insert(pieces.end(), d.begin(), d.end());
            }
            std::sort(pieces.rbegin(), pieces.rend());
            if (whole != pieces) return {"algebra_modp_refinement", false, "degree mismatch"};
        }
    }
    return {"algebra_modp_refinement", true, ""};
}

Check wreath_orders(bool quick, long long cap) {
    std::vector<std::string> shapes = {"2,2", "2,3"};
    if (!quick) {
        shapes.push_back("3,2");
        shapes.push_back("2,2,2");
    }
    for (const auto& sh : shapes) {
        Shape s = Shape::parse(sh);
        auto all = enumerate_all(s, cap);
        if (BigInt(all.size()) != s.group_order())
            return {"wreath_order_enumeration", false, sh};
        auto a = a_invariant(s, true, cap);
        if (a.value != BigRat(1)) return {"wreath_order_enumeration", false, "a != 1 for " + sh};
    }
    return {"wreath_order_enumeration", true, ""};
}

Check wreath_distribution(const std::string& inject_fault, long long cap) {
    std::map<CycleType, long long> dist = cycle_type_distribution(Shape::parse("2,2"), cap);
    if (inject_fault == "distribution") dist[CycleType{{4}}] += 1;  // deliberate corruption
    std::map<CycleType, long long> expected = {
        {CycleType{{1, 1, 1, 1}}, 1}, {CycleType{{2, 1, 1}}, 2}, {CycleType{{2, 2}}, 3}, {CycleType{{4}}, 2}};
    if (dist != expected) return {"wreath_distribution_22", false, "census differs from the pinned table"};
    return {"wreath_distribution_22", true, ""};
}

Check composer_roundtrip(Rng& rng, int n) {
    for (const char* sh : {"2,2", "2,3"}) {
        Shape s = Shape::parse(sh);
        for (int i = 0; i < n; ++i) {
            std::vector<BigInt> alpha(static_cast<size_t>(s.coord_count()));
            for (auto& v : alpha) v = rng.range(-1000000, 1000000);
            CompositeTower t = tower_from_alpha(s, alpha);
            std::vector<IntPoly> lowers(t.lower.begin() + 1, t.lower.end());
            Specialization rec = recover_alpha(lowers);
            if (rec.values != alpha) return {"composer_roundtrip", false, sh};
            for (int j = 0; j <= s.k(); ++j)
                if (compose(t.Q(j), t.F_lower(j)) != t.F())
                    return {"composer_roundtrip", false, "tower identity"};
        }
    }
    return {"composer_roundtrip", true, ""};
}

Check composer_degree_lemma(bool quick, std::size_t term_cap) {
    std::vector<std::string> shapes = {"2,2", "2,3"};
    if (!quick) {
        shapes.push_back("3,3");
        shapes.push_back("2,2,2");
    }
    for (const auto& sh : shapes) {
        Shape s = Shape::parse(sh);
        GenericComposite g = build_generic(s, term_cap);
        for (int j = 1; j <= s.k(); ++j) {
            if (g.F[static_cast<size_t>(j - 1)].degree_in(0) != s.N(j))
                return {"composer_degree_lemma", false, sh};
            if (g.F[static_cast<size_t>(j - 1)].total_degree_coeff_vars() > s.D(j))
                return {"composer_degree_lemma", false, sh + " T-degree"};
        }
    }
    return {"composer_degree_lemma", true, ""};
}

Check heights_exponents() {
    bool ok = theorem_A_exponent(Shape::parse("2,2")) == BigRat(3, 8) && delta_nk(2, 2) == BigRat(3, 8) &&
              delta_nk(2, 3) == BigRat(5, 32) && ptw_beta(2, 2) == BigRat(1, 16);
    for (int n = 2; n <= 3 && ok; ++n)
        for (int k = 2; k <= 3 && ok; ++k) {
            Shape s(std::vector<int>(static_cast<size_t>(k), n));
            ok = theorem_A_exponent(s) == delta_nk(n, k) && delta_nk(n, k) > ptw_beta(n, k);
        }
    return {"heights_exponents", ok, ""};
}

Check heights_root_bound(Rng& rng, int n) {
    for (int i = 0; i < n; ++i) {
        int deg = 1 + static_cast<int>(rng.below(8));
        std::vector<BigInt> c(static_cast<size_t>(deg + 1));
        for (int j = 0; j < deg; ++j) c[static_cast<size_t>(j)] = rng.range(-1000000, 1000000);
        c.back() = 1;
        if (!root_bound_check(IntPoly::from_coeffs(std::move(c))).pass)
            return {"heights_root_bound", false, "bound violated"};
    }
    return {"heights_root_bound", true, ""};
}

Check galois_splitting(bool quick, long long cap) {
    if (splitting_degree(IntPoly{-2, 0, 0, 0, 1}, cap) != 8) return {"galois_splitting", false, "x^4-2"};
    if (splitting_degree(IntPoly{1, 0, 1}, cap) != 2) return {"galois_splitting", false, "x^2+1"};
    if (splitting_degree(IntPoly{-2, 0, 0, 1}, cap) != 6) return {"galois_splitting", false, "x^3-2"};
    if (!quick) {
        if (splitting_degree(IntPoly{1, 0, 0, 0, 1}, cap) != 4) return {"galois_splitting", false, "x^4+1"};
        if (splitting_degree(IntPoly{2, 0, -4, 0, 1}, cap) != 4) return {"galois_splitting", false, "x^4-4x^2+2"};
    }
    return {"galois_splitting", true, ""};
}

Check galois_refinement(bool quick) {
    CompositeTower t = tower_from_alpha(Shape::parse("2,2"), {BigInt(0), BigInt(0), BigInt(0), BigInt(-2)});
    for (long long p : good_primes_for_tower(t, quick ? 10 : 25))
        if (!refinement_law_holds(t, p)) return {"galois_refinement", false, "p=" + std::to_string(p)};
    FrobeniusSample fs = frobenius_sample(t, good_primes_for_tower(t, 20));
    if (!containment_check(fs.records, t.shape, 1000000).pass)
        return {"galois_refinement", false, "containment"};
    return {"galois_refinement", true, ""};
}

Check harness_dedup() {
    if (!fields_isomorphic(IntPoly{-2, 0, 1}, IntPoly{-8, 0, 1})) return {"harness_dedup", false, "sqrt2 ~ sqrt8"};
    if (fields_isomorphic(IntPoly{-2, 0, 1}, IntPoly{-3, 0, 1})) return {"harness_dedup", false, "sqrt2 != sqrt3"};
    if (!fields_isomorphic(IntPoly{-2, 0, 0, 0, 1}, IntPoly{-2, 0, 0, 0, 1})) return {"harness_dedup", false, "reflexive"};
    bool ab = fields_isomorphic(IntPoly{-8, 0, 1}, IntPoly{-2, 0, 1});
    if (!ab) return {"harness_dedup", false, "symmetry"};
    return {"harness_dedup", true, ""};
}

Check harness_count_tiny(const Config& cfg, bool quick) {
    Shape s = Shape::parse("2,2");
    std::vector<BigInt> grid = {BigInt(100), BigInt(1000), BigInt(10000), BigInt(1000000)};
    CountOptions opt = cfg.count_options();
    CountResult r = run_count(s, 1, grid, opt);
    long long prev = -1;
    for (const auto& p : r.curve.points) {
        if (p.n_fields < prev) return {"harness_count_tiny", false, "counts not monotone"};
        prev = p.n_fields;
    }
    if (r.certified_classes <= 0) return {"harness_count_tiny", false, "no certified fields at Y=1"};
    if (!quick) {
        CountOptions o1 = opt;
        o1.workers = 1;
        CountOptions o2 = opt;
        o2.workers = 2;
        CountResult a = run_count(s, 1, grid, o1);
        CountResult b = run_count(s, 1, grid, o2);
        for (size_t i = 0; i < a.curve.points.size(); ++i)
            if (a.curve.points[i].n_fields != b.curve.points[i].n_fields)
                return {"harness_count_tiny", false, "worker-count dependence"};
    }
    return {"harness_count_tiny", true, ""};
}

} // namespace

SelftestResult run_selftest(bool quick, const Config& cfg, const std::string& inject_fault) {
    SelftestResult out;
    Rng rng(cfg.seed);
    int n = quick ? 25 : 100;
    out.checks.push_back(algebra_roundtrip(rng, n));
    out.checks.push_back(algebra_resultant(rng, n));
    out.checks.push_back(algebra_compose(rng, quick ? 20 : 60));
    out.checks.push_back(algebra_modp(rng, quick ? 4 : 10));
    out.checks.push_back(wreath_orders(quick, cfg.enumeration_cap));
    out.checks.push_back(wreath_distribution(inject_fault, cfg.enumeration_cap));
    out.checks.push_back(composer_roundtrip(rng, n));
    out.checks.push_back(composer_degree_lemma(quick, cfg.term_cap));
    out.checks.push_back(heights_exponents());
    out.checks.push_back(heights_root_bound(rng, n));
    out.checks.push_back(galois_splitting(quick, cfg.splitting_cap));
    out.checks.push_back(galois_refinement(quick));
    out.checks.push_back(harness_dedup());
    out.checks.push_back(harness_count_tiny(cfg, quick));
    for (const auto& c : out.checks) out.all_pass = out.all_pass && c.pass;
    return out;
}

} // namespace wreathcount
