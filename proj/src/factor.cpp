#include "wreathcount/factor.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace wreathcount {

namespace {

// ---------------------------------------------------------------- mod-m helpers
// polynomials mod m represented as IntPoly with coefficients in [0, m)

IntPoly mod_reduce(const IntPoly& f, const BigInt& m) {
    std::vector<BigInt> c = f.coeffs();
    for (auto& a : c) {
        a %= m;
        if (a < 0) a += m;
    }
    return IntPoly::from_coeffs(std::move(c));
}

IntPoly mod_mul(const IntPoly& a, const IntPoly& b, const BigInt& m) { return mod_reduce(a * b, m); }

IntPoly mod_sub(const IntPoly& a, const IntPoly& b, const BigInt& m) { return mod_reduce(a - b, m); }

/// division by a monic divisor with reduction mod m at each step
DivRem mod_divrem_monic(const IntPoly& f, const IntPoly& g, const BigInt& m) {
    int dg = g.degree();
    if (f.degree() < dg) return {IntPoly{}, f};
    std::vector<BigInt> rem = f.coeffs();
    std::vector<BigInt> quot(f.degree() - dg + 1, BigInt(0));
    for (int i = f.degree(); i >= dg; --i) {
        BigInt c = rem[i] % m;
        if (c < 0) c += m;
        if (c == 0) continue;
        quot[i - dg] = c;
        for (int j = 0; j <= dg; ++j) {
            rem[i - dg + j] = (rem[i - dg + j] - c * g.coeff(j)) % m;
        }
    }
    for (auto& a : rem)
        if ((a %= m) < 0) a += m;
    return {IntPoly::from_coeffs(std::move(quot)), IntPoly::from_coeffs(std::move(rem))};
}

IntPoly symmetric_lift(const IntPoly& f, const BigInt& m) {
    std::vector<BigInt> c = f.coeffs();
    BigInt half = m / 2;
    for (auto& a : c)
        if (a > half) a -= m;
    return IntPoly::from_coeffs(std::move(c));
}

/// extended Euclid over F_p: s*a + t*b = 1 for coprime a, b
void xgcd_mod_p(const ModPoly& a, const ModPoly& b, ModPoly& s, ModPoly& t) {
    std::uint64_t p = a.p();
    ModPoly r0 = a, r1 = b;
    ModPoly s0 = ModPoly::constant(p, 1), s1(p);
    ModPoly t0(p), t1 = ModPoly::constant(p, 1);
    while (!r1.is_zero()) {
        ModDivRem qr = divrem(r0, r1);
        ModPoly r2 = qr.rem;
        ModPoly s2 = s0 - qr.quot * s1;
        ModPoly t2 = t0 - qr.quot * t1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    // r0 = gcd = nonzero constant for coprime inputs
    std::uint64_t c = r0.lc();
    // scale by c^{-1}
    std::uint64_t inv = 1;
    {
        std::uint64_t e = p - 2, base = c, acc = 1;
        while (e) {
            if (e & 1) acc = static_cast<std::uint64_t>((static_cast<unsigned __int128>(acc) * base) % p);
            base = static_cast<std::uint64_t>((static_cast<unsigned __int128>(base) * base) % p);
            e >>= 1;
        }
        inv = acc;
    }
    s = s0.scaled(inv);
    t = t0.scaled(inv);
}

/// Quadratic lift of the split f = g*h from mod m to mod m^2.
/// g, h monic; s*g + t*h = 1 mod m. All in/out reduced mod the new modulus.
void hensel_step(const IntPoly& f, const BigInt& m, IntPoly& g, IntPoly& h, IntPoly& s, IntPoly& t) {
    BigInt m2 = m * m;
    IntPoly fm = mod_reduce(f, m2);
    IntPoly e = mod_sub(fm, mod_mul(g, h, m2), m2);
    DivRem qr = mod_divrem_monic(mod_mul(s, e, m2), h, m2);
    IntPoly h2 = mod_reduce(h + qr.rem, m2);
    // g2 as the exact quotient of f by the lifted monic cofactor
    DivRem fq = mod_divrem_monic(fm, h2, m2);
    IntPoly g2 = fq.quot;

    // lift the Bezout pair
    IntPoly b = mod_sub(mod_mul(s, g2, m2) + mod_mul(t, h2, m2), IntPoly{BigInt(1)}, m2);
    DivRem cd = mod_divrem_monic(mod_mul(s, b, m2), h2, m2);
    IntPoly s2 = mod_sub(s, cd.rem, m2);
    IntPoly t2 = mod_sub(t, mod_reduce(mod_mul(t, b, m2) + mod_mul(cd.quot, g2, m2), m2), m2);

    g = g2; h = h2; s = s2; t = t2;
}

/// Lift the modular factorization of monic f to factors mod m >= target.
/// Returns monic factors mod the final modulus (also reported).
void hensel_lift_tree(const IntPoly& f, const std::vector<ModPoly>& facs, size_t lo, size_t hi,
                      std::uint64_t p, const BigInt& target, const BigInt& final_modulus,
                      std::vector<IntPoly>& out) {
    if (hi - lo == 1) {
        out.push_back(mod_reduce(f, final_modulus));
        return;
    }
    size_t mid = lo + (hi - lo) / 2;
    ModPoly g0 = ModPoly::constant(p, 1), h0 = ModPoly::constant(p, 1);
    for (size_t i = lo; i < mid; ++i) g0 = g0 * facs[i];
    for (size_t i = mid; i < hi; ++i) h0 = h0 * facs[i];
    ModPoly s0(p), t0(p);
    xgcd_mod_p(g0, h0, s0, t0);

    BigInt m(p);
    IntPoly g = g0.lift(), h = h0.lift(), s = s0.lift(), t = t0.lift();
    while (m < target) {
        hensel_step(f, m, g, h, s, t);
        m *= m;
    }
    // pad up to the common final modulus so subset products are uniform
    IntPoly gf = mod_reduce(g, final_modulus), hf = mod_reduce(h, final_modulus);
    hensel_lift_tree(gf, facs, lo, mid, p, target, final_modulus, out);
    hensel_lift_tree(hf, facs, mid, hi, p, target, final_modulus, out);
}

/// next k-combination of indices into [0, n); returns false at the end
bool next_combination(std::vector<size_t>& idx, size_t n) {
    size_t k = idx.size();
    for (size_t i = k; i-- > 0;) {
        if (idx[i] + (k - i) < n) {
            ++idx[i];
            for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

/// factor a primitive squarefree polynomial with positive lc, deg >= 1
std::vector<IntPoly> factor_squarefree_primitive(const IntPoly& g) {
    if (g.degree() == 1) return {g};

    // monicize: ghat(x) = lc^(d-1) g(x/lc) is monic over Z; coefficient of
    // x^i picks up lc^(d-1-i)
    const BigInt& l = g.lc();
    IntPoly ghat;
    {
        std::vector<BigInt> c = g.coeffs();
        int d = g.degree();
        BigInt mul = 1;
        for (int i = d - 1; i >= 0; --i) {
            c[i] *= mul;
            mul *= l;
        }
        c[d] = 1;
        ghat = IntPoly::from_coeffs(std::move(c));
    }

    // good prime: smallest primes p > 2 deg with squarefree reduction;
    // probe factor counts with the distinct-degree stage only, then run the
    // full equal-degree split at the best prime
    int d = ghat.degree();
    std::vector<std::uint64_t> primes = good_primes_for(ghat, 3);
    std::uint64_t best_p = 0;
    size_t best_count = 0;
    for (std::uint64_t p : primes) {
        size_t cnt = factor_degrees_mod_p(ghat, p).size();
        if (cnt == 1) return {g};  // irreducible mod p
        if (best_p == 0 || cnt < best_count) {
            best_p = p;
            best_count = cnt;
        }
        if (best_count <= 2) break;
    }
    std::uint64_t p = best_p;
    ModFactorization best = factor_mod_p(ghat, p);

    // Mignotte-type bound on any monic divisor's coefficients
    BigInt norm2sq = 0;
    for (const auto& c : ghat.coeffs()) norm2sq += c * c;
    BigInt norm2 = boost::multiprecision::sqrt(norm2sq) + 1;
    BigInt bound = (BigInt(1) << d) * norm2;
    BigInt target = 2 * bound + 1;

    BigInt modulus(p);
    while (modulus < target) modulus *= modulus;

    std::vector<ModPoly> modular;
    for (const auto& mf : best.factors) modular.push_back(mf.poly);
    std::vector<IntPoly> lifted;
    hensel_lift_tree(mod_reduce(ghat, modulus), modular, 0, modular.size(), p, target, modulus, lifted);

    // subset recombination over the lifted factors
    std::vector<IntPoly> found_hat;
    std::vector<size_t> active(lifted.size());
    for (size_t i = 0; i < active.size(); ++i) active[i] = i;
    IntPoly frem = ghat;

    size_t card = 1;
    while (2 * card <= active.size()) {
        std::vector<size_t> idx(card);
        for (size_t i = 0; i < card; ++i) idx[i] = i;
        bool restart = false;
        do {
            IntPoly cand = IntPoly{BigInt(1)};
            for (size_t i : idx) cand = mod_mul(cand, lifted[active[i]], modulus);
            cand = symmetric_lift(cand, modulus);
            // trailing-coefficient quick test
            BigInt c0 = cand.constant_term();
            BigInt f0 = frem.constant_term();
            if (f0 != 0 && (c0 == 0 || f0 % c0 != 0)) continue;
            if (cand.max_abs_coeff() > bound) continue;
            DivRem dr = divrem_monic(frem, cand);
            if (!dr.rem.is_zero()) continue;
            // found an irreducible factor of ghat
            found_hat.push_back(cand);
            frem = dr.quot;
            std::vector<size_t> rest;
            for (size_t i = 0, j = 0; i < active.size(); ++i) {
                if (j < idx.size() && idx[j] == i) { ++j; continue; }
                rest.push_back(active[i]);
            }
            active = std::move(rest);
            restart = true;
            break;
        } while (next_combination(idx, active.size()));
        if (!restart) ++card;
        if (active.empty()) break;
    }
    if (frem.degree() > 0) found_hat.push_back(frem);

    // undo the monicization: factor of g = primitive part of hhat(lc x)
    std::vector<IntPoly> out;
    for (const auto& hhat : found_hat) {
        IntPoly h = hhat.scale_var(l).primitive_part();
        if (h.lc() < 0) h = -h;
        out.push_back(std::move(h));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<std::uint64_t> good_primes_for(const IntPoly& f, int count, std::uint64_t start) {
    std::vector<std::uint64_t> out;
    std::uint64_t p = start > 0 ? start : 2 * static_cast<std::uint64_t>(std::max(f.degree(), 1));
    while (static_cast<int>(out.size()) < count) {
        p = next_prime_above(p);
        if (good_prime(f, p)) out.push_back(p);
    }
    return out;
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f) {
    if (f.is_zero()) fail(errc::zero_polynomial, "squarefree decomposition of zero");
    std::vector<std::pair<IntPoly, int>> out;
    IntPoly v = f.primitive_part();
    if (v.lc() < 0) v = -v;
    if (v.degree() < 1) return out;

    // Yun's algorithm
    IntPoly fp = v.derivative();
    IntPoly u = gcd(v, fp);
    IntPoly w = exact_div(fp, u);
    v = exact_div(v, u);
    int i = 1;
    while (v.degree() > 0) {
        IntPoly z = w - v.derivative();
        if (z.is_zero()) {
            out.emplace_back(v, i);
            break;
        }
        IntPoly gi = gcd(v, z);
        if (gi.degree() > 0) out.emplace_back(gi, i);
        v = exact_div(v, gi);
        w = exact_div(z, gi);
        ++i;
    }
    return out;
}

bool is_squarefree(const IntPoly& f) {
    if (f.is_zero()) fail(errc::zero_polynomial, "squarefree test of zero");
    if (f.degree() < 2) return true;
    return gcd(f, f.derivative()).degree() == 0;
}

QFactorization factor_over_Q(const IntPoly& f) {
    if (f.is_zero()) fail(errc::zero_polynomial, "factorization of zero polynomial");
    QFactorization out;
    out.content = f.content();
    if (f.is_constant()) return out;

    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        IntPoly g = part;
        // pull out the factor x so constant-term tests apply
        if (g.constant_term() == 0 && g.degree() > 0) {
            out.factors.push_back({IntPoly::x(), mult});
            std::vector<BigInt> c(g.coeffs().begin() + 1, g.coeffs().end());
            g = IntPoly::from_coeffs(std::move(c));
        }
        if (g.degree() < 1) continue;
        for (auto& h : factor_squarefree_primitive(g)) out.factors.push_back({std::move(h), mult});
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const QFactor& a, const QFactor& b) { return a.poly < b.poly; });
    return out;
}

namespace {

/// all partitions of n into parts >= 1, as descending vectors
void partitions_of(int n, int maxpart, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_of(n - p, p, cur, out);
        cur.pop_back();
    }
}

/// can `pattern` (descending) be grouped into sums matching `partition`?
bool refines_into(const std::vector<int>& pattern, const std::vector<int>& partition) {
    // backtracking over assignments of pattern parts to partition bins
    std::vector<int> remaining = partition;
    std::function<bool(size_t)> place = [&](size_t i) -> bool {
        if (i == pattern.size()) return true;
        for (size_t b = 0; b < remaining.size(); ++b) {
            if (remaining[b] < pattern[i]) continue;
            if (b > 0 && remaining[b] == remaining[b - 1]) continue;  // symmetry skip
            remaining[b] -= pattern[i];
            if (place(i + 1)) {
                remaining[b] += pattern[i];
                return true;
            }
            remaining[b] += pattern[i];
        }
        return false;
    };
    std::sort(remaining.rbegin(), remaining.rend());
    return place(0);
}

} // namespace

bool irreducible_probe(const IntPoly& f, int nprimes) {
    int n = f.degree();
    if (n <= 1) return n == 1;
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions_of(n, n, cur, parts);
    std::vector<char> alive(parts.size(), 1);
    std::uint64_t p = 2 * static_cast<std::uint64_t>(n);
    for (int t = 0; t < nprimes; ++t) {
        p = next_prime_above(p);
        while (!good_prime(f, p)) p = next_prime_above(p);
        std::vector<int> pattern = factor_degrees_mod_p(f, p);
        if (pattern.size() == 1) return true;
        size_t live = 0;
        for (size_t i = 0; i < parts.size(); ++i) {
            if (alive[i] && !refines_into(pattern, parts[i])) alive[i] = 0;
            live += alive[i];
        }
        if (live == 1) return true;  // only the trivial partition {n} survives
    }
    return false;
}

bool is_irreducible_over_Q(const IntPoly& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    if (!is_squarefree(f)) return false;
    QFactorization qf = factor_over_Q(f);
    return qf.factors.size() == 1 && qf.factors[0].multiplicity == 1;
}

} // namespace wreathcount
