#include "wreathcount/heights.hpp"

#include <algorithm>
#include <cmath>

#include "wreathcount/composer.hpp"

namespace wreathcount {

int Height::cmp(int i, const BigInt& a, int j, const BigInt& b) {
    // |a|^(1/i) vs |b|^(1/j)  <=>  |a|^j vs |b|^i
    if (i == 0 && j == 0) return 0;
    if (i == 0) return b == 0 ? 0 : -1;
    if (j == 0) return a == 0 ? 0 : 1;
    BigInt lhs = bpow(big_abs(a), static_cast<unsigned long>(j));
    BigInt rhs = bpow(big_abs(b), static_cast<unsigned long>(i));
    return lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
}

Height poly_height(const IntPoly& f) {
    if (!f.is_monic()) fail(errc::not_monic, "height is defined for monic polynomials");
    int n = f.degree();
    Height h;
    for (int i = 1; i <= n; ++i) {
        BigInt ai = big_abs(f.coeff(static_cast<size_t>(n - i)));
        if (ai == 0) continue;
        if (h.index == 0 || Height::cmp(i, ai, h.index, h.coeff_abs) > 0) {
            h.index = i;
            h.coeff_abs = ai;
        }
    }
    if (h.index > 0) h.value = std::pow(to_double(h.coeff_abs), 1.0 / h.index);
    return h;
}

std::vector<std::complex<double>> complex_roots(const IntPoly& f) {
    if (f.degree() < 1) return {};
    using C = std::complex<double>;
    // strip roots at the origin
    size_t vz = 0;
    while (vz < f.coeffs().size() && f.coeffs()[vz] == 0) ++vz;
    std::vector<double> c;
    for (size_t i = vz; i < f.coeffs().size(); ++i) c.push_back(to_double(f.coeffs()[i]));
    std::vector<C> roots(vz, C(0.0, 0.0));
    int n = static_cast<int>(c.size()) - 1;
    if (n == 0) return roots;
    for (auto& x : c) x /= c.back();
    if (n == 1) {
        roots.push_back(C(-c[0], 0.0));
        return roots;
    }

    double radius = 0.0;
    for (int i = 0; i < n; ++i) radius = std::max(radius, std::pow(std::abs(c[static_cast<size_t>(i)]), 1.0 / (n - i)));
    radius = 2.0 * radius + 1.0;

    std::vector<C> z(static_cast<size_t>(n));
    const double pi = 3.14159265358979323846;
    for (int i = 0; i < n; ++i) {
        double ang = 2.0 * pi * (i + 0.353) / n + 0.618;
        z[static_cast<size_t>(i)] = std::polar(radius * (1.0 + 0.05 * i / n), ang);
    }

    auto eval = [&](C x, C& fx, C& fpx) {
        fx = C(0.0, 0.0);
        fpx = C(0.0, 0.0);
        for (int i = n; i >= 0; --i) {
            fpx = fpx * x + fx;
            fx = fx * x + c[static_cast<size_t>(i)];
        }
    };

    bool converged = false;
    for (int iter = 0; iter < 600 && !converged; ++iter) {
        converged = true;
        for (int i = 0; i < n; ++i) {
            C fx, fpx;
            eval(z[static_cast<size_t>(i)], fx, fpx);
            if (std::abs(fx) == 0.0) continue;
            C w = fpx == C(0.0, 0.0) ? C(1e-12, 1e-12) : fx / fpx;
            C sum(0.0, 0.0);
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                C d = z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
                if (std::abs(d) < 1e-300) d = C(1e-300, 0.0);
                sum += 1.0 / d;
            }
            C corr = w / (1.0 - w * sum);
            z[static_cast<size_t>(i)] -= corr;
            double scale = std::max(1.0, std::abs(z[static_cast<size_t>(i)]));
            if (std::abs(corr) > 1e-13 * scale) converged = false;
        }
    }
    if (!converged) {
        // accept if residuals are tiny relative to the leading scale
        for (int i = 0; i < n; ++i) {
            C fx, fpx;
            eval(z[static_cast<size_t>(i)], fx, fpx);
            double zs = std::max(1.0, std::abs(z[static_cast<size_t>(i)]));
            if (std::abs(fx) > 1e-6 * std::pow(zs, n)) fail(errc::root_find_failure, "Aberth did not converge");
        }
    }
    roots.insert(roots.end(), z.begin(), z.end());
    return roots;
}

RootBoundCheck root_bound_check(const IntPoly& f) {
    if (!f.is_monic() || f.degree() < 1) fail(errc::not_monic, "root bound needs a monic nonconstant polynomial");
    Height h = poly_height(f);
    double maxmod = 0.0;
    for (const auto& z : complex_roots(f)) maxmod = std::max(maxmod, std::abs(z));
    RootBoundCheck r;
    r.max_modulus = maxmod;
    r.bound = 2.0 * h.value;
    r.pass = maxmod <= r.bound + 1e-8;
    return r;
}

BoxSpec make_box(const Shape& s, const BigRat& Y) {
    if (Y <= 0) fail(errc::precondition_failed, "box needs Y > 0");
    BoxSpec b{s, Y, {}, {}};
    const BigInt num = boost::multiprecision::numerator(Y);
    const BigInt den = boost::multiprecision::denominator(Y);
    for (int u = 1; u <= s.k(); ++u) {
        for (int v = 1; v <= s.entry(u); ++v) {
            long long e = static_cast<long long>(v) * s.N(u - 1);
            b.exps.push_back(e);
            BigInt bound = bpow(num, static_cast<unsigned long>(e)) / bpow(den, static_cast<unsigned long>(e));
            b.bounds.push_back(bound);
        }
    }
    return b;
}

BigInt BoxSpec::count() const {
    BigInt c = 1;
    for (const auto& b : bounds) c *= 2 * b + 1;
    return c;
}

std::vector<BigInt> BoxSpec::point_at(const BigInt& index) const {
    std::vector<BigInt> p(bounds.size());
    BigInt rest = index;
    for (size_t i = bounds.size(); i-- > 0;) {
        BigInt radix = 2 * bounds[i] + 1;
        p[i] = rest % radix - bounds[i];
        rest /= radix;
    }
    return p;
}

BoxIterator::BoxIterator(const BoxSpec& box) {
    for (const auto& b : box.bounds) {
        if (b > BigInt(std::numeric_limits<long long>::max() / 4))
            fail(errc::cap_exceeded, "box bound beyond the fast iterator range");
        bounds_.push_back(b.convert_to<long long>());
    }
    cur_.assign(bounds_.size(), 0);
    for (size_t i = 0; i < bounds_.size(); ++i) cur_[i] = -bounds_[i];
}

bool BoxIterator::next(std::vector<long long>& out) {
    if (done_) return false;
    if (first_) {
        first_ = false;
        out = cur_;
        return true;
    }
    for (size_t i = cur_.size(); i-- > 0;) {
        if (cur_[i] < bounds_[i]) {
            ++cur_[i];
            for (size_t j = i + 1; j < cur_.size(); ++j) cur_[j] = -bounds_[j];
            out = cur_;
            return true;
        }
    }
    done_ = true;
    return false;
}

BigRat exponent_A(const Shape& s) { return s.A(); }
BigRat exponent_B(const Shape& s) { return s.B(); }

BigRat theorem_A_exponent_from(const BigRat& B, long long N) {
    BigRat nn(N);
    if (B >= nn * nn / 4 + nn) return (B - nn / 2) / (nn * nn - nn);
    return (B - nn) * (nn + 2) / (nn * nn * nn - nn * nn);
}

BigRat theorem_A_exponent(const Shape& s) {
    BigRat B = s.B();
    long long N = s.leaf_count();
    if (B <= BigRat(N)) fail(errc::precondition_failed, "exponent needs B > N");
    return theorem_A_exponent_from(B, N);
}

BigRat delta_nk(int n, int k) {
    if (n < 2 || k < 2) fail(errc::precondition_failed, "delta needs n, k >= 2");
    BigInt nk = bpow(BigInt(n), static_cast<unsigned long>(k));
    BigInt n2k = nk * nk;
    BigInt n3k1 = n2k * nk / n;
    BigInt n2k1 = n2k / n;
    return BigRat(n2k + nk - 2) / BigRat(2 * (n3k1 - n2k1));
}

BigRat ptw_beta(int n, int k) {
    if (n < 2 || k < 2) fail(errc::precondition_failed, "beta needs n, k >= 2");
    BigInt nf = factorial(static_cast<unsigned>(n));
    BigRat one_minus = 1 - BigRat(1, bpow(nf, static_cast<unsigned long>(k)));
    BigInt nk = bpow(BigInt(n), static_cast<unsigned long>(k));
    BigInt nk1 = bpow(BigInt(n), static_cast<unsigned long>(k - 1));
    return one_minus / BigRat(nk1 * (2 * nk - 2));
}

BoxConstants measure_box_constants(const Shape& s, const BigRat& Y, int nrandom, std::uint64_t seed) {
    BoxSpec box = make_box(s, Y);
    int m = s.coord_count();
    std::vector<std::vector<BigInt>> points;

    // sign corners at full magnitude dominate the sup (all coefficient
    // polynomials have nonnegative integer coefficients)
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        std::vector<BigInt> p(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i)
            p[static_cast<size_t>(i)] = (mask >> i) & 1 ? box.bounds[static_cast<size_t>(i)] : -box.bounds[static_cast<size_t>(i)];
        points.push_back(std::move(p));
    }
    Rng rng(seed);
    for (int t = 0; t < nrandom; ++t) {
        std::vector<BigInt> p(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) p[static_cast<size_t>(i)] = rng.signed_bigint(box.bounds[static_cast<size_t>(i)]);
        points.push_back(std::move(p));
    }

    double yd = to_double(Y);
    BoxConstants out{0.0, 0.0};
    for (const auto& p : points) {
        CompositeTower t = tower_from_alpha(s, p);
        for (int j = 1; j <= s.k(); ++j) {
            double hj = poly_height(t.F_lower(j)).value;
            out.C1 = std::max(out.C1, hj / yd);
            double c0 = std::abs(to_double(t.F_lower(j).constant_term()));
            out.C2 = std::max(out.C2, c0 / std::pow(yd, static_cast<double>(s.N(j))));
        }
    }
    return out;
}

} // namespace wreathcount
