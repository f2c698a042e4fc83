#include "wreathcount/intpoly.hpp"

#include <sstream>

namespace wreathcount {

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return from_coeffs(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return from_coeffs(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<BigInt> r(c_.size() + o.c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return from_coeffs(std::move(r));
}

IntPoly IntPoly::operator*(const BigInt& s) const {
    if (s == 0) return {};
    IntPoly r = *this;
    for (auto& a : r.c_) a *= s;
    return r;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigInt> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * BigInt(i);
    return from_coeffs(std::move(r));
}

BigInt IntPoly::eval(const BigInt& t) const {
    BigInt r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * t + c_[i];
    return r;
}

BigRat IntPoly::eval(const BigRat& t) const {
    BigRat r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * t + BigRat(c_[i]);
    return r;
}

double IntPoly::eval_double(double t) const {
    double r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * t + to_double(c_[i]);
    return r;
}

IntPoly IntPoly::shift_var(const BigInt& t) const {
    // synthetic division cascade: O(n^2)
    if (t == 0) return *this;
    std::vector<BigInt> r = c_;
    for (size_t i = 1; i < r.size(); ++i)
        for (size_t j = r.size() - 1; j >= i; --j) r[j - 1] += t * r[j];
    return from_coeffs(std::move(r));
}

IntPoly IntPoly::scale_var(const BigInt& s) const {
    std::vector<BigInt> r = c_;
    BigInt p = 1;
    for (size_t i = 1; i < r.size(); ++i) {
        p *= s;
        r[i] *= p;
    }
    return from_coeffs(std::move(r));
}

IntPoly IntPoly::reverse() const {
    std::vector<BigInt> r(c_.rbegin(), c_.rend());
    return from_coeffs(std::move(r));
}

BigInt IntPoly::content() const {
    BigInt g = 0;
    for (const auto& a : c_) g = boost::multiprecision::gcd(g, a);
    if (!c_.empty() && c_.back() < 0) g = -g;
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    BigInt g = content();
    IntPoly r = *this;
    for (auto& a : r.c_) a /= g;
    return r;
}

BigInt IntPoly::max_abs_coeff() const {
    BigInt m = 0;
    for (const auto& a : c_) {
        BigInt v = big_abs(a);
        if (v > m) m = v;
    }
    return m;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ',';
        s += c_[i].str();
    }
    return s;
}

IntPoly IntPoly::parse(const std::string& s) {
    std::vector<BigInt> r;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        // strip blanks
        size_t a = part.find_first_not_of(" \t");
        size_t b = part.find_last_not_of(" \t");
        if (a == std::string::npos) fail(errc::usage_error, "empty coefficient in '" + s + "'");
        r.emplace_back(part.substr(a, b - a + 1));
    }
    return from_coeffs(std::move(r));
}

IntPoly compose(const IntPoly& f, const IntPoly& g) {
    // Horner in g
    IntPoly r;
    for (size_t i = f.coeffs().size(); i-- > 0;) r = r * g + IntPoly(f.coeffs()[i]);
    return r;
}

DivRem divrem_monic(const IntPoly& f, const IntPoly& g) {
    if (!g.is_monic()) fail(errc::not_monic, "divrem_monic requires a monic divisor");
    int dg = g.degree();
    if (f.degree() < dg) return {IntPoly{}, f};
    std::vector<BigInt> rem = f.coeffs();
    std::vector<BigInt> quot(f.degree() - dg + 1, BigInt(0));
    for (int i = f.degree(); i >= dg; --i) {
        BigInt c = rem[i];
        if (c == 0) continue;
        quot[i - dg] = c;
        for (int j = 0; j <= dg; ++j) rem[i - dg + j] -= c * g.coeff(j);
    }
    return {IntPoly::from_coeffs(std::move(quot)), IntPoly::from_coeffs(std::move(rem))};
}

DivRem pseudo_divrem(const IntPoly& f, const IntPoly& g) {
    // lc(g)^(df-dg+1) f = q g + r, even when the remainder degree drops early
    if (g.is_zero()) fail(errc::zero_polynomial, "pseudo-division by zero");
    int df = f.degree(), dg = g.degree();
    if (df < dg) return {IntPoly{}, f};
    const BigInt& b = g.lc();
    IntPoly q;
    IntPoly r = f;
    int e = df - dg + 1;
    while (!r.is_zero() && r.degree() >= dg) {
        IntPoly s = IntPoly::monomial(r.degree() - dg, r.lc());
        q = q * b + s;
        r = r * b - s * g;
        --e;
    }
    BigInt be = bpow(b, static_cast<unsigned long>(e));
    return {q * be, r * be};
}

IntPoly exact_div(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) fail(errc::zero_polynomial, "division by zero polynomial");
    if (f.is_zero()) return {};
    int dg = g.degree();
    std::vector<BigInt> rem = f.coeffs();
    if (f.degree() < dg) fail(errc::precondition_failed, "exact_div: degree underflow");
    std::vector<BigInt> quot(f.degree() - dg + 1, BigInt(0));
    for (int i = f.degree(); i >= dg; --i) {
        if (rem[i] == 0) continue;
        BigInt q = rem[i] / g.lc();
        if (q * g.lc() != rem[i]) fail(errc::precondition_failed, "exact_div: inexact leading step");
        quot[i - dg] = q;
        for (int j = 0; j <= dg; ++j) rem[i - dg + j] -= q * g.coeff(j);
    }
    for (const auto& a : rem)
        if (a != 0) fail(errc::precondition_failed, "exact_div: nonzero remainder");
    return IntPoly::from_coeffs(std::move(quot));
}

bool divides(const IntPoly& g, const IntPoly& f) {
    // divisibility in Q[x] (for primitive operands this matches Z[x] by Gauss)
    if (g.is_zero()) return f.is_zero();
    if (f.is_zero()) return true;
    if (f.degree() < g.degree()) return false;
    if (g.is_monic()) return divrem_monic(f, g).rem.is_zero();
    return pseudo_divrem(f, g).rem.is_zero();
}

IntPoly gcd(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero()) return g.is_zero() ? IntPoly{} : g.primitive_part();
    if (g.is_zero()) return f.primitive_part();
    IntPoly a = f.primitive_part(), b = g.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    // subresultant PRS keeps coefficients tame
    BigInt h = 1, gg = 1;
    while (!b.is_zero() && b.degree() > 0) {
        int d = a.degree() - b.degree();
        IntPoly r = pseudo_divrem(a, b).rem;
        a = b;
        BigInt divisor = gg * bpow(h, static_cast<unsigned long>(d));
        if (r.is_zero()) {
            b = IntPoly{};
        } else {
            std::vector<BigInt> cs = r.coeffs();
            for (auto& c : cs) c /= divisor;
            b = IntPoly::from_coeffs(std::move(cs));
        }
        gg = a.lc();
        // h = g^d h^{1-d}
        if (d == 0) {
            // h unchanged
        } else if (d == 1) {
            h = gg;
        } else {
            h = bpow(gg, static_cast<unsigned long>(d)) / bpow(h, static_cast<unsigned long>(d - 1));
        }
    }
    if (!b.is_zero()) return IntPoly{BigInt(1)};  // nontrivial constant remainder => coprime
    IntPoly r = a.primitive_part();
    if (r.lc() < 0) r = -r;
    return r;
}

BigInt resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) fail(errc::zero_polynomial, "resultant of zero polynomial");
    if (f.is_constant() && g.is_constant()) return 1;
    if (f.is_constant()) return bpow(f.lc(), static_cast<unsigned long>(g.degree()));
    if (g.is_constant()) return bpow(g.lc(), static_cast<unsigned long>(f.degree()));

    // subresultant PRS (Cohen, Alg. 3.3.7)
    IntPoly a = f, b = g;
    int sign = 1;
    if (a.degree() < b.degree()) {
        if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
        std::swap(a, b);
    }
    // pull out contents: Res(ca*A, cb*B) = ca^degB cb^degA Res(A,B)
    BigInt ca = big_abs(a.content()), cb = big_abs(b.content());
    BigInt scale = bpow(ca, static_cast<unsigned long>(b.degree())) *
                   bpow(cb, static_cast<unsigned long>(a.degree()));
    {
        std::vector<BigInt> cs = a.coeffs();
        for (auto& c : cs) c /= ca;
        a = IntPoly::from_coeffs(std::move(cs));
        cs = b.coeffs();
        for (auto& c : cs) c /= cb;
        b = IntPoly::from_coeffs(std::move(cs));
    }

    BigInt g_ = 1, h_ = 1;
    while (true) {
        int da = a.degree(), db = b.degree();
        int d = da - db;
        if ((da & 1) && (db & 1)) sign = -sign;
        IntPoly r = pseudo_divrem(a, b).rem;
        a = b;
        if (r.is_zero()) {
            b = IntPoly{};
        } else {
            BigInt divisor = g_ * bpow(h_, static_cast<unsigned long>(d));
            std::vector<BigInt> cs = r.coeffs();
            for (auto& c : cs) c /= divisor;
            b = IntPoly::from_coeffs(std::move(cs));
        }
        g_ = a.lc();
        if (d == 1) {
            h_ = g_;
        } else if (d > 1) {
            h_ = bpow(g_, static_cast<unsigned long>(d)) / bpow(h_, static_cast<unsigned long>(d - 1));
        }
        if (b.is_zero()) return 0;  // nonconstant common factor
        if (b.degree() == 0) {
            int dA = a.degree();
            BigInt res = bpow(b.lc(), static_cast<unsigned long>(dA));
            if (dA > 1) res /= bpow(h_, static_cast<unsigned long>(dA - 1));
            return BigInt(sign) * scale * res;
        }
    }
}

BigInt discriminant(const IntPoly& f) {
    if (f.is_zero()) fail(errc::zero_polynomial, "discriminant of zero polynomial");
    int n = f.degree();
    if (n < 1) fail(errc::precondition_failed, "discriminant needs degree >= 1");
    if (n == 1) return 1;
    BigInt r = resultant(f, f.derivative());
    BigInt d = r / f.lc();
    if (((static_cast<long long>(n) * (n - 1)) / 2) % 2 == 1) d = -d;
    return d;
}

RatPoly::RatPoly(IntPoly num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) fail(errc::zero_polynomial, "RatPoly with zero denominator");
    normalize();
}

void RatPoly::normalize() {
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt c = num_.content();
    if (c < 0) c = -c;
    BigInt g = boost::multiprecision::gcd(c, den_);
    if (g > 1) {
        std::vector<BigInt> cs = num_.coeffs();
        for (auto& a : cs) a /= g;
        num_ = IntPoly::from_coeffs(std::move(cs));
        den_ /= g;
    }
}

RatPoly RatPoly::from_rationals(const std::vector<BigRat>& coeffs) {
    BigInt den = 1;
    for (const auto& q : coeffs) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(q));
    std::vector<BigInt> cs(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i)
        cs[i] = boost::multiprecision::numerator(coeffs[i]) * (den / boost::multiprecision::denominator(coeffs[i]));
    return RatPoly(IntPoly::from_coeffs(std::move(cs)), den);
}

std::vector<BigRat> RatPoly::rationals() const {
    std::vector<BigRat> r(static_cast<size_t>(num_.degree() + 1));
    for (size_t i = 0; i < r.size(); ++i) r[i] = BigRat(num_.coeff(i), den_);
    return r;
}

bool RatPoly::to_intpoly(IntPoly& out) const {
    if (den_ == 1) {
        out = num_;
        return true;
    }
    return false;
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    return RatPoly(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
RatPoly RatPoly::operator-(const RatPoly& o) const {
    return RatPoly(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
RatPoly RatPoly::operator*(const RatPoly& o) const { return RatPoly(num_ * o.num_, den_ * o.den_); }
RatPoly RatPoly::operator*(const BigRat& s) const {
    return RatPoly(num_ * boost::multiprecision::numerator(s), den_ * boost::multiprecision::denominator(s));
}

BigRat RatPoly::eval(const BigRat& t) const { return num_.eval(t) / BigRat(den_); }

RatPoly mod_monic(const RatPoly& f, const IntPoly& m) {
    if (!m.is_monic()) fail(errc::not_monic, "mod_monic requires monic modulus");
    if (f.degree() < m.degree()) return f;
    return RatPoly(divrem_monic(f.num(), m).rem, f.den());
}

/// Newton interpolation at nodes 0..D of integer values; result integral.
/// All-integer: accumulate D! * P(y) in the falling-factorial basis, then
/// divide out D! (exact because the target polynomial is integral).
IntPoly interpolate_integer(const std::vector<BigInt>& values) {
    size_t n = values.size();
    size_t D = n - 1;
    // forward differences at consecutive nodes are integers
    std::vector<BigInt> delta = values;
    std::vector<BigInt> diffs(n);
    diffs[0] = delta[0];
    for (size_t level = 1; level < n; ++level) {
        for (size_t i = 0; i + level < n; ++i) delta[i] = delta[i + 1] - delta[i];
        diffs[level] = delta[0];
    }
    BigInt dfact = factorial(static_cast<unsigned>(D));
    // D! * P = sum_j (D!/j!) * diff_j * y(y-1)...(y-j+1)
    std::vector<BigInt> acc(n, BigInt(0));
    std::vector<BigInt> basis = {BigInt(1)};
    BigInt scale = dfact;  // D!/j!
    for (size_t j = 0; j < n; ++j) {
        if (j > 0) {
            std::vector<BigInt> nb(basis.size() + 1, BigInt(0));
            BigInt node(static_cast<long long>(j - 1));
            for (size_t t = 0; t < basis.size(); ++t) {
                nb[t + 1] += basis[t];
                nb[t] -= node * basis[t];
            }
            basis = std::move(nb);
            scale /= static_cast<long long>(j);
        }
        if (diffs[j] != 0) {
            BigInt w = scale * diffs[j];
            for (size_t t = 0; t < basis.size(); ++t) acc[t] += w * basis[t];
        }
    }
    for (auto& c : acc) {
        BigInt q = c / dfact;
        if (q * dfact != c) fail(errc::precondition_failed, "integer interpolation produced a fraction");
        c = q;
    }
    return IntPoly::from_coeffs(std::move(acc));
}


} // namespace wreathcount
