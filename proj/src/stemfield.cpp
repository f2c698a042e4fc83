#include "wreathcount/stemfield.hpp"

#include <algorithm>

namespace wreathcount {

namespace {

// ------------------------------------------------------------ Q[y] helpers
// dense rational polynomials for the extended-Euclid inverse

using QVec = std::vector<BigRat>;

QVec qv_from(const RatPoly& f) {
    QVec v(static_cast<size_t>(f.degree() + 1));
    for (size_t i = 0; i < v.size(); ++i) v[i] = f.coeff(i);
    return v;
}

QVec qv_from(const IntPoly& f) {
    QVec v(static_cast<size_t>(f.degree() + 1));
    for (size_t i = 0; i < v.size(); ++i) v[i] = BigRat(f.coeff(i));
    return v;
}

void qv_trim(QVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

QVec qv_mul(const QVec& a, const QVec& b) {
    if (a.empty() || b.empty()) return {};
    QVec r(a.size() + b.size() - 1, BigRat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qv_trim(r);
    return r;
}

QVec qv_sub(QVec a, const QVec& b) {
    if (b.size() > a.size()) a.resize(b.size(), BigRat(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    qv_trim(a);
    return a;
}

// quotient/remainder over Q[y]; g nonzero
void qv_divrem(const QVec& f, const QVec& g, QVec& q, QVec& r) {
    r = f;
    qv_trim(r);
    q.assign(r.size() >= g.size() ? r.size() - g.size() + 1 : 0, BigRat(0));
    while (r.size() >= g.size()) {
        BigRat c = r.back() / g.back();
        size_t off = r.size() - g.size();
        q[off] = c;
        for (size_t j = 0; j < g.size(); ++j) r[off + j] -= c * g[j];
        r.pop_back();  // leading term cancels exactly
        qv_trim(r);
    }
    qv_trim(q);
}

RatPoly qv_to_ratpoly(const QVec& v) { return RatPoly::from_rationals(v); }

BigRat bpow2(BigRat base, unsigned long e) {
    BigRat r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

} // namespace

StemField StemField::make(IntPoly m) {
    if (!m.is_monic() || m.degree() < 1) fail(errc::precondition_failed, "stem modulus must be monic, degree >= 1");
    if (m.degree() > 1 && !is_irreducible_over_Q(m))
        fail(errc::precondition_failed, "stem modulus reducible over Q");
    return StemField(std::move(m));
}

StemField StemField::make_trusted(IntPoly m) {
    if (!m.is_monic() || m.degree() < 1) fail(errc::precondition_failed, "stem modulus must be monic, degree >= 1");
    return StemField(std::move(m));
}

RatPoly StemField::constant(const BigRat& q) {
    return RatPoly(IntPoly(boost::multiprecision::numerator(q)),
                   boost::multiprecision::denominator(q));
}

RatPoly StemField::inv(const RatPoly& a) const {
    RatPoly ar = reduce(a);
    if (ar.is_zero()) fail(errc::zero_polynomial, "inverse of zero stem element");
    // extended Euclid in Q[y] against the modulus
    QVec r0 = qv_from(m_), r1 = qv_from(ar);
    QVec t0, t1 = {BigRat(1)};
    while (!r1.empty()) {
        QVec q, r2;
        qv_divrem(r0, r1, q, r2);
        QVec t2 = qv_sub(t0, qv_mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 = gcd (a constant since m irreducible and a nonzero mod m)
    if (r0.size() != 1) fail(errc::precondition_failed, "stem inverse: modulus not irreducible?");
    BigRat c = r0[0];
    for (auto& x : t0) x /= c;
    return reduce(qv_to_ratpoly(t0));
}

// ------------------------------------------------------------- StemPoly ops

StemPoly StemPoly::from_intpoly(const IntPoly& f) {
    std::vector<RatPoly> c(static_cast<size_t>(f.degree() + 1));
    for (size_t i = 0; i < c.size(); ++i) c[i] = RatPoly(IntPoly(f.coeff(i)));
    return StemPoly(std::move(c));
}

StemPoly StemPoly::from_ratpoly(const RatPoly& f) {
    std::vector<RatPoly> c(static_cast<size_t>(f.degree() + 1));
    for (size_t i = 0; i < c.size(); ++i) c[i] = RatPoly(IntPoly(f.num().coeff(i)), f.den());
    return StemPoly(std::move(c));
}

bool StemPoly::is_monic() const {
    if (c_.empty()) return false;
    const RatPoly& l = c_.back();
    return l.degree() == 0 && l.num().coeff(0) == 1 && l.den() == 1;
}

bool StemPoly::operator<(const StemPoly& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    for (size_t i = c_.size(); i-- > 0;) {
        const RatPoly &a = c_[i], &b = o.c_[i];
        if (a == b) continue;
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int j = a.degree(); j >= 0; --j) {
            BigRat x = a.coeff(static_cast<size_t>(j)), y = b.coeff(static_cast<size_t>(j));
            if (x != y) return x < y;
        }
        if (a.den() != b.den()) return a.den() < b.den();
    }
    return false;
}

std::string StemPoly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) s += " | ";
        s += c_[i].num().to_string() + "/" + c_[i].den().str();
    }
    return s;
}

StemPoly add(const StemField& L, const StemPoly& a, const StemPoly& b) {
    std::vector<RatPoly> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = L.reduce(a.coeff(i) + b.coeff(i));
    return StemPoly(std::move(c));
}

StemPoly sub(const StemField& L, const StemPoly& a, const StemPoly& b) {
    std::vector<RatPoly> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = L.reduce(a.coeff(i) - b.coeff(i));
    return StemPoly(std::move(c));
}

StemPoly mul(const StemField& L, const StemPoly& a, const StemPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<RatPoly> c(a.coeffs().size() + b.coeffs().size() - 1);
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] = c[i + j] + a.coeff(i) * b.coeff(j);
    }
    for (auto& e : c) e = L.reduce(e);
    return StemPoly(std::move(c));
}

StemPoly scale(const StemField& L, const StemPoly& a, const RatPoly& s) {
    std::vector<RatPoly> c(a.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = L.mul(a.coeff(i), s);
    return StemPoly(std::move(c));
}

StemPoly monic(const StemField& L, const StemPoly& a) {
    if (a.is_zero() || a.is_monic()) return a;
    return scale(L, a, L.inv(a.lc()));
}

StemPoly derivative(const StemField& L, const StemPoly& a) {
    (void)L;
    if (a.coeffs().size() <= 1) return {};
    std::vector<RatPoly> c(a.coeffs().size() - 1);
    for (size_t i = 1; i < a.coeffs().size(); ++i) c[i - 1] = a.coeff(i) * BigRat(i);
    return StemPoly(std::move(c));
}

StemDivRem divrem(const StemField& L, const StemPoly& f, const StemPoly& g) {
    if (g.is_zero()) fail(errc::zero_polynomial, "stem division by zero");
    if (f.degree() < g.degree()) return {StemPoly{}, f};
    RatPoly linv = L.inv(g.lc());
    std::vector<RatPoly> rem(f.coeffs());
    std::vector<RatPoly> quot(static_cast<size_t>(f.degree() - g.degree() + 1));
    int dg = g.degree();
    for (int i = f.degree(); i >= dg; --i) {
        RatPoly c = L.reduce(rem[static_cast<size_t>(i)]);
        if (c.is_zero()) continue;
        RatPoly q = L.mul(c, linv);
        quot[static_cast<size_t>(i - dg)] = q;
        for (int j = 0; j <= dg; ++j) {
            size_t k = static_cast<size_t>(i - dg + j);
            rem[k] = L.reduce(rem[k] - q * g.coeff(static_cast<size_t>(j)));
        }
    }
    return {StemPoly(std::move(quot)), StemPoly(std::move(rem))};
}

StemPoly gcd(const StemField& L, const StemPoly& f, const StemPoly& g) {
    StemPoly a = f, b = g;
    while (!b.is_zero()) {
        b = monic(L, b);
        StemPoly r = divrem(L, a, b).rem;
        a = b;
        b = r;
    }
    return a.is_zero() ? a : monic(L, a);
}

StemPoly shift_var(const StemField& L, const StemPoly& f, const RatPoly& t) {
    // synthetic-division cascade with element arithmetic
    std::vector<RatPoly> c(f.coeffs());
    for (size_t i = 1; i < c.size(); ++i)
        for (size_t j = c.size() - 1; j >= i; --j)
            c[j - 1] = L.reduce(c[j - 1] + t * c[j]);
    return StemPoly(std::move(c));
}

RatPoly norm_poly(const StemField& L, const StemPoly& f) {
    if (f.is_zero()) fail(errc::zero_polynomial, "norm of zero");
    int D = L.degree() * f.degree();
    // evaluate Res_y(m, f(x0, y)) at D+1 integer points, then interpolate
    std::vector<BigRat> xs, vs;
    BigInt x0 = 0;
    while (static_cast<int>(xs.size()) < D + 1) {
        // f(x0) as an element of L before reduction is already reduced per-coeff
        RatPoly val{};
        for (size_t i = f.coeffs().size(); i-- > 0;) {
            val = val * BigRat(x0) + f.coeff(i);
        }
        BigRat resv;
        if (val.is_zero()) {
            resv = 0;
        } else if (val.degree() == 0) {
            resv = bpow2(val.coeff(0), static_cast<unsigned long>(L.degree()));
        } else {
            BigInt r = resultant(L.modulus(), val.num());
            resv = BigRat(r) / BigRat(bpow(val.den(), static_cast<unsigned long>(L.degree())));
        }
        xs.emplace_back(x0);
        vs.push_back(std::move(resv));
        if (x0 <= 0) x0 = 1 - x0; else x0 = -x0;  // 0, 1, -1, 2, -2, ...
    }
    // Lagrange interpolation in Q[x]
    QVec acc;  // result
    for (size_t i = 0; i < xs.size(); ++i) {
        QVec li = {BigRat(1)};
        BigRat denom = 1;
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            li = qv_mul(li, QVec{-xs[j], BigRat(1)});
            denom *= xs[i] - xs[j];
        }
        BigRat w = vs[i] / denom;
        if (acc.size() < li.size()) acc.resize(li.size(), BigRat(0));
        for (size_t j = 0; j < li.size(); ++j) acc[j] += li[j] * w;
    }
    qv_trim(acc);
    return qv_to_ratpoly(acc);
}

namespace {

/// squarefree decomposition over L (Yun, characteristic 0)
std::vector<std::pair<StemPoly, int>> stem_squarefree(const StemField& L, const StemPoly& f) {
    std::vector<std::pair<StemPoly, int>> out;
    StemPoly v = monic(L, f);
    if (v.degree() < 1) return out;
    StemPoly fp = derivative(L, v);
    StemPoly u = gcd(L, v, fp);
    StemPoly w = divrem(L, fp, u).quot;
    v = divrem(L, v, u).quot;
    int i = 1;
    while (v.degree() > 0) {
        StemPoly z = sub(L, w, derivative(L, v));
        if (z.is_zero()) {
            out.emplace_back(monic(L, v), i);
            break;
        }
        StemPoly gi = gcd(L, v, z);
        if (gi.degree() > 0) out.emplace_back(gi, i);
        v = divrem(L, v, gi).quot;
        w = divrem(L, z, gi).quot;
        ++i;
    }
    return out;
}

IntPoly primitive_of(const RatPoly& f) {
    IntPoly p = f.num().primitive_part();
    if (!p.is_zero() && p.lc() < 0) p = -p;
    return p;
}

/// Trager factorization of a *squarefree monic* W over L
std::vector<StemPoly> trager_squarefree(const StemField& L, const StemPoly& W) {
    if (W.degree() == 1) return {W};
    RatPoly y = L.generator();
    for (long long s = 0; s <= 4096; ++s) {
        RatPoly shift_elem = y * BigRat(-s);  // W_s(x) = W(x - s*y)
        StemPoly Ws = s == 0 ? W : shift_var(L, W, shift_elem);
        RatPoly N = norm_poly(L, Ws);
        IntPoly Nz = primitive_of(N);
        if (Nz.degree() != L.degree() * W.degree()) continue;  // degenerate evaluation
        if (!is_squarefree(Nz)) continue;
        QFactorization qf = factor_over_Q(Nz);
        std::vector<StemPoly> out;
        if (qf.factors.size() == 1) {
            out.push_back(W);
            return out;
        }
        RatPoly shift_back = y * BigRat(s);
        for (const auto& [G, mult] : qf.factors) {
            (void)mult;  // squarefree norm: all multiplicities 1
            StemPoly Gi = StemPoly::from_intpoly(G);
            StemPoly Hi = gcd(L, Ws, Gi);
            if (Hi.degree() < 1) continue;
            out.push_back(s == 0 ? Hi : shift_var(L, Hi, shift_back));
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    fail(errc::precondition_failed, "Trager shift search exhausted");
}

} // namespace

StemFactorization factor_stem_poly(const StemPoly& f, const StemField& L) {
    if (f.is_zero()) fail(errc::zero_polynomial, "stem factorization of zero");
    StemFactorization out;
    out.unit = L.reduce(f.lc());
    if (f.degree() < 1) return out;
    for (const auto& [part, mult] : stem_squarefree(L, f)) {
        for (auto& h : trager_squarefree(L, part)) out.factors.push_back({monic(L, h), mult});
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const StemFactor& a, const StemFactor& b) { return a.poly < b.poly; });
    return out;
}

StemFactorization factor_over_stem(const IntPoly& f, const StemField& L) {
    if (f.is_zero()) fail(errc::zero_polynomial, "stem factorization of zero");
    if (f.degree() >= 1 && is_squarefree(f)) {
        // squarefree over Z stays squarefree over L: skip the stem Yun pass
        StemFactorization out;
        out.unit = RatPoly(IntPoly(f.lc()));
        StemPoly W = monic(L, StemPoly::from_intpoly(f));
        for (auto& h : trager_squarefree(L, W)) out.factors.push_back({monic(L, h), 1});
        std::sort(out.factors.begin(), out.factors.end(),
                  [](const StemFactor& a, const StemFactor& b) { return a.poly < b.poly; });
        return out;
    }
    return factor_stem_poly(StemPoly::from_intpoly(f), L);
}

StemField extend_by_factor(const StemField& L, const StemPoly& g) {
    if (g.degree() < 2) fail(errc::precondition_failed, "extension factor must have degree >= 2");
    RatPoly y = L.generator();
    for (long long s = 0; s <= 4096; ++s) {
        StemPoly gs = s == 0 ? g : shift_var(L, g, y * BigRat(-s));
        RatPoly N = norm_poly(L, gs);
        // N monic rational; check squarefree on its primitive integer image
        IntPoly Nz = primitive_of(N);
        if (Nz.degree() != L.degree() * g.degree()) continue;
        if (!is_squarefree(Nz)) continue;
        // rescale the primitive element by the denominator lcm so the new
        // modulus is monic over Z: w = lambda*(x + s*y)
        std::vector<BigRat> cs(static_cast<size_t>(N.degree() + 1));
        for (size_t i = 0; i < cs.size(); ++i) cs[i] = N.coeff(i);
        BigInt lambda = 1;
        for (const auto& q : cs) lambda = boost::multiprecision::lcm(lambda, boost::multiprecision::denominator(q));
        int D = N.degree();
        std::vector<BigInt> mi(static_cast<size_t>(D + 1));
        for (int i = 0; i <= D; ++i) {
            BigRat v = cs[static_cast<size_t>(i)] * BigRat(bpow(lambda, static_cast<unsigned long>(D - i)));
            if (boost::multiprecision::denominator(v) != 1)
                fail(errc::precondition_failed, "extension rescale not integral");
            mi[static_cast<size_t>(i)] = boost::multiprecision::numerator(v);
        }
        return StemField::make_trusted(IntPoly::from_coeffs(std::move(mi)));
    }
    fail(errc::precondition_failed, "extension shift search exhausted");
}

int count_roots_in(const IntPoly& g, const StemField& L) {
    StemFactorization sf = factor_over_stem(g, L);
    int n = 0;
    for (const auto& fac : sf.factors)
        if (fac.poly.degree() == 1) n += fac.multiplicity;
    return n;
}

namespace {

/// bivariate image of f(x - s*y) with y-parts reduced mod m: entry i is the
/// coefficient of x^i as an integer polynomial in y of degree < deg m
std::vector<IntPoly> shifted_bivariate(const IntPoly& f, long long s, const IntPoly& m) {
    std::vector<IntPoly> acc;  // Horner: acc = acc*(x - s y) + f_i
    IntPoly sy = IntPoly::from_coeffs({BigInt(0), BigInt(-s)});  // -s*y
    for (size_t i = f.coeffs().size(); i-- > 0;) {
        std::vector<IntPoly> next(acc.size() + 1);
        for (size_t j = 0; j < acc.size(); ++j) {
            next[j + 1] = next[j + 1] + acc[j];                            // * x
            next[j] = next[j] + divrem_monic(acc[j] * sy, m).rem;          // * (-s y)
        }
        if (next.empty()) next.resize(1);
        next[0] = next[0] + IntPoly(f.coeffs()[i]);
        acc = std::move(next);
        while (!acc.empty() && acc.back().is_zero() && acc.size() > 1) acc.pop_back();
    }
    return acc;
}

/// sufficient squarefreeness test: squarefree mod any prime not dividing lc
/// implies squarefree over Z; fall back to the exact gcd
bool squarefree_quick(const IntPoly& f) {
    if (f.degree() < 2) return true;
    for (std::uint64_t p : {101ull, 257ull, 1031ull}) {
        if (f.lc() % BigInt(p) == 0) continue;
        ModPoly fp = ModPoly::reduce(f, p);
        if (fp.degree() == f.degree() && gcd(fp, fp.derivative()).degree() == 0) return true;
    }
    return is_squarefree(f);
}

/// integer norm Res_y(m, f(x - s y)) by evaluation/interpolation
IntPoly integer_norm(const IntPoly& f, long long s, const IntPoly& m) {
    std::vector<IntPoly> biv = shifted_bivariate(f, s, m);
    int D = m.degree() * f.degree();
    std::vector<BigInt> values;
    values.reserve(static_cast<size_t>(D + 1));
    for (long long x0 = 0; x0 <= D; ++x0) {
        IntPoly v;  // f(x0 - s y) as a poly in y
        BigInt xp = 1;
        for (size_t i = 0; i < biv.size(); ++i) {
            v = v + biv[i] * xp;
            xp *= x0;
        }
        if (v.is_zero())
            values.emplace_back(0);
        else if (v.is_constant())
            values.push_back(bpow(v.lc(), static_cast<unsigned long>(m.degree())));
        else
            values.push_back(resultant(m, v));
    }
    return interpolate_integer(values);
}

} // namespace

NormFactorization norm_factorization(const IntPoly& f, const IntPoly& modulus) {
    if (f.degree() < 1) fail(errc::precondition_failed, "norm factorization needs deg f >= 1");
    if (!modulus.is_monic()) fail(errc::not_monic, "stem modulus must be monic");
    for (long long s = 0; s <= 4096; ++s) {
        // the unshifted norm of a y-free polynomial is f^deg(m): never squarefree
        if (s == 0 && modulus.degree() > 1) continue;
        IntPoly N = integer_norm(f, s, modulus);
        if (N.degree() != modulus.degree() * f.degree()) continue;
        if (!squarefree_quick(N)) continue;
        NormFactorization out;
        out.shift = s;
        out.norm = N;
        QFactorization qf = factor_over_Q(N);
        for (auto& fac : qf.factors) out.factors.push_back(std::move(fac.poly));
        std::sort(out.factors.begin(), out.factors.end());
        return out;
    }
    fail(errc::precondition_failed, "norm shift search exhausted");
}

std::vector<int> stem_factor_degrees(const IntPoly& f, const IntPoly& modulus) {
    NormFactorization nf = norm_factorization(f, modulus);
    std::vector<int> degs;
    for (const auto& G : nf.factors) {
        if (G.degree() % modulus.degree() != 0)
            fail(errc::precondition_failed, "norm factor degree not divisible by the field degree");
        degs.push_back(G.degree() / modulus.degree());
    }
    std::sort(degs.rbegin(), degs.rend());
    return degs;
}

bool has_root_in(const IntPoly& g, const IntPoly& modulus) {
    NormFactorization nf = norm_factorization(g, modulus);
    for (const auto& G : nf.factors)
        if (G.degree() == modulus.degree()) return true;
    return false;
}

} // namespace wreathcount
