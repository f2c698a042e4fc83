#include "wreathcount/modpoly.hpp"

#include <algorithm>
#include <map>

namespace wreathcount {

namespace {

std::uint64_t mulp(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powp(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulp(r, a, p);
        a = mulp(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invp(std::uint64_t a, std::uint64_t p) { return powp(a, p - 2, p); }

} // namespace

ModPoly ModPoly::reduce(const IntPoly& f, std::uint64_t p) {
    std::vector<std::uint64_t> c(f.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) {
        BigInt r = f.coeffs()[i] % BigInt(p);
        if (r < 0) r += p;
        c[i] = r.convert_to<std::uint64_t>();
    }
    return ModPoly(p, std::move(c));
}

ModPoly ModPoly::operator+(const ModPoly& o) const {
    std::vector<std::uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = (r[i] + o.c_[i]) % p_;
    return ModPoly(p_, std::move(r));
}

ModPoly ModPoly::operator-(const ModPoly& o) const {
    std::vector<std::uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = (r[i] + p_ - o.c_[i]) % p_;
    return ModPoly(p_, std::move(r));
}

ModPoly ModPoly::operator*(const ModPoly& o) const {
    if (is_zero() || o.is_zero()) return ModPoly(p_);
    std::vector<std::uint64_t> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = (r[i + j] + static_cast<unsigned __int128>(c_[i]) * o.c_[j]) % p_;
    }
    return ModPoly(p_, std::move(r));
}

ModPoly ModPoly::scaled(std::uint64_t s) const {
    s %= p_;
    std::vector<std::uint64_t> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = mulp(c_[i], s, p_);
    return ModPoly(p_, std::move(r));
}

ModPoly ModPoly::monic() const {
    if (is_zero() || lc() == 1) return *this;
    return scaled(invp(lc(), p_));
}

ModPoly ModPoly::derivative() const {
    if (c_.size() <= 1) return ModPoly(p_);
    std::vector<std::uint64_t> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = mulp(c_[i], i % p_, p_);
    return ModPoly(p_, std::move(r));
}

IntPoly ModPoly::lift() const {
    std::vector<BigInt> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    return IntPoly::from_coeffs(std::move(r));
}

IntPoly ModPoly::lift_symmetric() const {
    std::vector<BigInt> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i)
        r[i] = c_[i] > p_ / 2 ? BigInt(c_[i]) - BigInt(p_) : BigInt(c_[i]);
    return IntPoly::from_coeffs(std::move(r));
}

ModDivRem divrem(const ModPoly& f, const ModPoly& g) {
    if (g.is_zero()) fail(errc::zero_polynomial, "mod-p division by zero");
    std::uint64_t p = f.p();
    if (f.degree() < g.degree()) return {ModPoly(p), f};
    std::uint64_t binv = invp(g.lc(), p);
    std::vector<std::uint64_t> rem(f.coeffs());
    std::vector<std::uint64_t> quot(f.degree() - g.degree() + 1, 0);
    int dg = g.degree();
    for (int i = f.degree(); i >= dg; --i) {
        if (rem[i] == 0) continue;
        std::uint64_t q = mulp(rem[i], binv, p);
        quot[i - dg] = q;
        for (int j = 0; j <= dg; ++j) {
            std::uint64_t t = mulp(q, g.coeff(j), p);
            rem[i - dg + j] = (rem[i - dg + j] + p - t) % p;
        }
    }
    return {ModPoly(p, std::move(quot)), ModPoly(p, std::move(rem))};
}

ModPoly gcd(const ModPoly& f, const ModPoly& g) {
    ModPoly a = f, b = g;
    while (!b.is_zero()) {
        ModPoly r = divrem(a, b).rem;
        a = b;
        b = r;
    }
    return a.is_zero() ? a : a.monic();
}

ModPoly mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& mod) { return divrem(a * b, mod).rem; }

ModPoly powmod(const ModPoly& base, const BigInt& e, const ModPoly& mod) {
    ModPoly r = ModPoly::constant(base.p(), 1);
    ModPoly b = divrem(base, mod).rem;
    BigInt k = e;
    while (k > 0) {
        if ((k & 1) != 0) r = mulmod(r, b, mod);
        b = mulmod(b, b, mod);
        k >>= 1;
    }
    return r;
}

ModPoly compose_mod(const ModPoly& f, const ModPoly& g, const ModPoly& mod) {
    ModPoly r(f.p());
    for (size_t i = f.coeffs().size(); i-- > 0;)
        r = divrem(r * g + ModPoly::constant(f.p(), f.coeffs()[i]), mod).rem;
    return r;
}

namespace {

/// squarefree decomposition in characteristic p (handles p-th powers)
void squarefree_mod(const ModPoly& f, int mult, std::map<ModPoly, int>& out) {
    std::uint64_t p = f.p();
    if (f.degree() <= 0) return;
    ModPoly d = f.derivative();
    if (d.is_zero()) {
        // f = g(x^p); p-th root via Frobenius fixpoint on coefficients
        std::vector<std::uint64_t> r(f.degree() / static_cast<int>(p) + 1);
        for (size_t i = 0; i < r.size(); ++i) r[i] = f.coeff(i * p);
        squarefree_mod(ModPoly(p, std::move(r)), mult * static_cast<int>(p), out);
        return;
    }
    ModPoly g = gcd(f, d);
    ModPoly w = divrem(f, g).quot;  // product of squarefree part
    int i = 1;
    while (w.degree() > 0) {
        ModPoly y = gcd(w, g);
        ModPoly part = divrem(w, y).quot;
        if (part.degree() > 0) out[part.monic()] += mult * i;
        w = y;
        g = divrem(g, y).quot;
        ++i;
    }
    if (g.degree() > 0) squarefree_mod(g, mult, out);
}

/// distinct-degree split of squarefree monic f: list of (product, degree)
std::vector<std::pair<ModPoly, int>> distinct_degree(const ModPoly& f) {
    std::uint64_t p = f.p();
    std::vector<std::pair<ModPoly, int>> out;
    ModPoly rest = f;
    ModPoly h = divrem(ModPoly::x(p), rest).rem;  // x^(p^i) mod rest, i = 0
    int d = 0;
    while (rest.degree() > 0) {
        ++d;
        if (2 * d > rest.degree()) {
            out.emplace_back(rest, rest.degree());
            break;
        }
        h = powmod(h, BigInt(p), rest);
        ModPoly g = gcd(h - ModPoly::x(p), rest);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            rest = divrem(rest, g).quot;
            h = divrem(h, rest).rem;
        }
    }
    return out;
}

/// deterministic-seeded equal-degree splitting (Cantor-Zassenhaus)
void equal_degree(const ModPoly& f, int d, Rng& rng, std::vector<ModPoly>& out) {
    std::uint64_t p = f.p();
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    int n = f.degree();
    ModPoly splitter(p);
    while (true) {
        std::vector<std::uint64_t> rc(static_cast<size_t>(n), 0);
        for (auto& c : rc) c = rng.below(p);
        ModPoly a(p, std::move(rc));
        if (a.degree() < 1) continue;
        ModPoly g = gcd(a, f);
        if (g.degree() > 0 && g.degree() < n) {
            splitter = g;
            break;
        }
        if (p > 2) {
            BigInt e = (bpow(BigInt(p), static_cast<unsigned long>(d)) - 1) / 2;
            ModPoly b = powmod(a, e, f) - ModPoly::constant(p, 1);
            g = gcd(b, f);
        } else {
            // trace map over F_2
            ModPoly t(p), u = divrem(a, f).rem;
            for (int i = 0; i < d; ++i) {
                t = t + u;
                u = mulmod(u, u, f);
            }
            g = gcd(t, f);
        }
        if (g.degree() > 0 && g.degree() < n) {
            splitter = g;
            break;
        }
    }
    equal_degree(splitter, d, rng, out);
    equal_degree(divrem(f, splitter).quot, d, rng, out);
}

} // namespace

ModFactorization factor_mod_p(const IntPoly& f, std::uint64_t p) {
    if (!is_prime_u64(p)) fail(errc::not_prime, "p = " + std::to_string(p));
    if (f.is_zero()) fail(errc::zero_polynomial, "factor_mod_p of zero polynomial");
    if (f.lc() % BigInt(p) == 0) fail(errc::leading_coeff_vanishes, "p divides lc(f)");
    ModPoly fp = ModPoly::reduce(f, p);
    ModFactorization out;
    out.lc = fp.lc();
    if (fp.degree() <= 0) return out;
    fp = fp.monic();

    std::map<ModPoly, int> sqf;
    squarefree_mod(fp, 1, sqf);

    // seed from (p, f) so repeated runs split identically
    std::uint64_t seed = 0x9e3779b97f4a7c15ull ^ p;
    for (const auto& c : fp.coeffs()) seed = seed * 0x100000001b3ull + c;
    Rng rng(seed);

    std::vector<ModFactor> factors;
    for (const auto& [part, mult] : sqf) {
        for (const auto& [prod, d] : distinct_degree(part)) {
            std::vector<ModPoly> irr;
            equal_degree(prod, d, rng, irr);
            std::sort(irr.begin(), irr.end());
            for (auto& h : irr) factors.push_back({std::move(h), mult});
        }
    }
    std::sort(factors.begin(), factors.end(),
              [](const ModFactor& a, const ModFactor& b) { return a.poly < b.poly; });
    out.factors = std::move(factors);
    return out;
}

std::vector<int> factor_degrees_mod_p(const IntPoly& f, std::uint64_t p) {
    ModPoly fp = ModPoly::reduce(f, p).monic();
    std::vector<int> degs;
    for (const auto& [prod, d] : distinct_degree(fp)) {
        int count = prod.degree() / d;
        for (int i = 0; i < count; ++i) degs.push_back(d);
    }
    std::sort(degs.rbegin(), degs.rend());
    return degs;
}

bool good_prime(const IntPoly& f, std::uint64_t p) {
    if (f.lc() % BigInt(p) == 0) return false;
    ModPoly fp = ModPoly::reduce(f, p);
    if (fp.degree() != f.degree()) return false;
    return gcd(fp, fp.derivative()).degree() == 0;
}

} // namespace wreathcount
