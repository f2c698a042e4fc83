#include "wreathcount/composer.hpp"

namespace wreathcount {

Specialization::Specialization(Shape s, std::vector<BigInt> vals) : shape(std::move(s)), values(std::move(vals)) {
    if (values.size() != static_cast<size_t>(shape.coord_count()))
        fail(errc::shape_mismatch, "specialization has " + std::to_string(values.size()) + " coordinates, shape needs " +
                                       std::to_string(shape.coord_count()));
}

GenericComposite build_generic(const Shape& s, size_t term_cap) {
    int nv = 1 + s.coord_count();
    GenericComposite g{s, {}, {}};
    for (int u = 1; u <= s.k(); ++u) {
        int n = s.entry(u);
        MultiPoly block = MultiPoly::term(nv, [&] {
            MultiPoly::Exponents e(static_cast<size_t>(nv), 0);
            e[0] = static_cast<unsigned short>(n);
            return e;
        }(), BigInt(1));
        for (int v = 1; v <= n; ++v) {
            MultiPoly::Exponents e(static_cast<size_t>(nv), 0);
            e[0] = static_cast<unsigned short>(n - v);
            e[static_cast<size_t>(1 + s.coord_index(u, v))] = 1;
            block = block + MultiPoly::term(nv, std::move(e), BigInt(1));
        }
        g.blocks.push_back(std::move(block));
    }
    for (int j = 1; j <= s.k(); ++j) {
        if (j == 1)
            g.F.push_back(g.blocks[0]);
        else
            g.F.push_back(multi_compose(g.blocks[static_cast<size_t>(j - 1)], g.F.back(), term_cap));
    }
    return g;
}

CompositeTower tower_from_alpha(const Shape& s, std::vector<BigInt> alpha) {
    if (alpha.size() != static_cast<size_t>(s.coord_count()))
        fail(errc::shape_mismatch, "alpha has wrong coordinate count");
    CompositeTower t{s, std::move(alpha), {}, {}, {}, {}};
    for (int u = 1; u <= s.k(); ++u) {
        int n = s.entry(u);
        std::vector<BigInt> c(static_cast<size_t>(n + 1));
        c[static_cast<size_t>(n)] = 1;
        for (int v = 1; v <= n; ++v) c[static_cast<size_t>(n - v)] = t.alpha[static_cast<size_t>(s.coord_index(u, v))];
        t.blocks.push_back(IntPoly::from_coeffs(std::move(c)));
    }
    t.lower.resize(static_cast<size_t>(s.k()) + 1);
    t.lower[0] = IntPoly::x();
    for (int j = 1; j <= s.k(); ++j)
        t.lower[static_cast<size_t>(j)] = compose(t.blocks[static_cast<size_t>(j - 1)], t.lower[static_cast<size_t>(j - 1)]);
    t.upper.resize(static_cast<size_t>(s.k()) + 1);
    t.upper[static_cast<size_t>(s.k())] = IntPoly::x();
    for (int j = s.k() - 1; j >= 0; --j)
        t.upper[static_cast<size_t>(j)] = compose(t.upper[static_cast<size_t>(j + 1)], t.blocks[static_cast<size_t>(j)]);
    for (int j = 1; j < s.k(); ++j) t.psi2.push_back(t.lower[static_cast<size_t>(j)].constant_term());
    return t;
}

CompositeTower specialize(const GenericComposite& g, const Specialization& a) {
    if (!(g.shape == a.shape)) fail(errc::shape_mismatch, "specialization shape differs from composite shape");
    CompositeTower t = tower_from_alpha(g.shape, a.values);
    // symbolic and direct routes must agree exactly
    for (int j = 1; j <= g.shape.k(); ++j) {
        if (g.F[static_cast<size_t>(j - 1)].substitute(a.values) != t.lower[static_cast<size_t>(j)])
            fail(errc::inconsistent_tower, "symbolic specialization mismatch at level " + std::to_string(j));
    }
    return t;
}

CompositeTower iterate(const IntPoly& f, int k, const BigInt& t) {
    if (f.degree() < 2) fail(errc::precondition_failed, "iterate needs deg f >= 2");
    if (!f.is_monic()) fail(errc::not_monic, "iterate needs monic f");
    if (k < 1) fail(errc::precondition_failed, "iterate needs k >= 1");
    int n = f.degree();
    Shape s(std::vector<int>(static_cast<size_t>(k), n));
    std::vector<BigInt> alpha(static_cast<size_t>(s.coord_count()));
    for (int u = 1; u <= k; ++u)
        for (int v = 1; v <= n; ++v)
            alpha[static_cast<size_t>(s.coord_index(u, v))] = f.coeff(static_cast<size_t>(n - v));
    // absorb the translate into the top block: (f - t) o f^(k-1) = f^(o k) - t
    alpha[static_cast<size_t>(s.coord_index(k, n))] -= t;
    return tower_from_alpha(s, std::move(alpha));
}

Specialization recover_alpha(const std::vector<IntPoly>& lowers) {
    if (lowers.empty()) fail(errc::inconsistent_tower, "empty tower");
    // derive the shape from the degree ladder
    std::vector<int> entries;
    long long prev = 1;
    for (const auto& f : lowers) {
        if (f.degree() < 1 || !f.is_monic()) fail(errc::inconsistent_tower, "tower polynomials must be monic nonconstant");
        if (f.degree() % prev != 0) fail(errc::inconsistent_tower, "degree ladder not multiplicative");
        long long n = f.degree() / prev;
        if (n < 2) fail(errc::inconsistent_tower, "tower branching must be >= 2");
        entries.push_back(static_cast<int>(n));
        prev = f.degree();
    }
    Shape s(entries);
    std::vector<BigInt> alpha(static_cast<size_t>(s.coord_count()));
    for (int j = 1; j <= s.k(); ++j) {
        int n = s.entry(j);
        const IntPoly& Fj = lowers[static_cast<size_t>(j - 1)];
        if (j == 1) {
            for (int v = 1; v <= n; ++v)
                alpha[static_cast<size_t>(s.coord_index(1, v))] = Fj.coeff(static_cast<size_t>(n - v));
            continue;
        }
        // base-H expansion, H = F_{j-1}: digits must be the block constants
        const IntPoly& H = lowers[static_cast<size_t>(j - 2)];
        IntPoly r = Fj;
        std::vector<BigInt> digits;
        for (int v = 0; v <= n; ++v) {
            DivRem qr = divrem_monic(r, H);
            if (qr.rem.degree() > 0)
                fail(errc::inconsistent_tower, "nonconstant digit in base-F expansion at level " + std::to_string(j));
            digits.push_back(qr.rem.constant_term());
            r = qr.quot;
        }
        if (!r.is_zero()) fail(errc::inconsistent_tower, "base-F expansion leaves a remainder");
        if (digits.back() != 1) fail(errc::inconsistent_tower, "leading digit not 1");
        for (int v = 1; v <= n; ++v)
            alpha[static_cast<size_t>(s.coord_index(j, v))] = digits[static_cast<size_t>(n - v)];
    }
    return Specialization(s, std::move(alpha));
}

std::string PsiImage::canonical() const {
    std::string out = "F:" + F.to_string();
    for (const auto& q : levels) out += ";Q:" + q.to_string();
    out += ";c:";
    for (size_t i = 0; i < psi2.size(); ++i) {
        if (i) out += ',';
        out += psi2[i].str();
    }
    return out;
}

PsiImage psi_prime(const CompositeTower& t) {
    PsiImage img;
    img.F = t.F();
    for (int j = 1; j < t.shape.k(); ++j) img.levels.push_back(t.Q(j));
    img.psi2 = t.psi2;
    return img;
}

LevelMinPoly min_poly_over_level(const CompositeTower& t, int j) {
    if (j < 0 || j > t.shape.k()) fail(errc::precondition_failed, "level out of range");
    return LevelMinPoly{j, t.F_lower(j)};
}

} // namespace wreathcount
