#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "wreathcount/errors.hpp"
#include "wreathcount/numeric.hpp"

namespace wreathcount {

/// Dense univariate polynomial over Z, constant term first.
/// Canonical form: no stored trailing zeros; the zero polynomial has an
/// empty coefficient vector and degree -1.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<BigInt> coeffs) : c_(coeffs) { trim(); }
    explicit IntPoly(BigInt constant) {
        if (constant != 0) c_.push_back(std::move(constant));
    }

    static IntPoly from_coeffs(std::vector<BigInt> coeffs) {
        IntPoly f;
        f.c_ = std::move(coeffs);
        f.trim();
        return f;
    }
    static IntPoly x() { return IntPoly{0, 1}; }
    static IntPoly monomial(int deg, BigInt a = BigInt(1)) {
        IntPoly f;
        if (a != 0) {
            f.c_.assign(static_cast<size_t>(deg) + 1, BigInt(0));
            f.c_.back() = std::move(a);
        }
        return f;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    const BigInt& lc() const { return c_.back(); }
    BigInt constant_term() const { return c_.empty() ? BigInt(0) : c_.front(); }

    /// coefficient of x^i (0 beyond the degree)
    const BigInt& coeff(size_t i) const {
        static const BigInt zero{0};
        return i < c_.size() ? c_[i] : zero;
    }
    const std::vector<BigInt>& coeffs() const { return c_; }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }
    bool operator<(const IntPoly& o) const {  // total order for deterministic containers
        if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
        for (size_t i = c_.size(); i-- > 0;)
            if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
        return false;
    }

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const BigInt& s) const;

    IntPoly derivative() const;
    BigInt eval(const BigInt& t) const;
    BigRat eval(const BigRat& t) const;
    double eval_double(double t) const;

    /// x -> x + t
    IntPoly shift_var(const BigInt& t) const;
    /// x -> s*x
    IntPoly scale_var(const BigInt& s) const;
    /// reverse coefficients: x^n f(1/x)
    IntPoly reverse() const;

    BigInt content() const;        // gcd of coefficients, sign of lc
    IntPoly primitive_part() const;
    BigInt max_abs_coeff() const;

    std::string to_string() const;  // canonical ASCII "c0,c1,...,cn"
    static IntPoly parse(const std::string& s);

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigInt> c_;
};

/// f(g(x)); matches the paper's wreath composition when called as compose(g_outer? ...)
/// -- the library convention everywhere is compose(f, g) = f(g(x)).
IntPoly compose(const IntPoly& f, const IntPoly& g);

/// quotient/remainder by a monic divisor; exact over Z
struct DivRem {
    IntPoly quot, rem;
};
DivRem divrem_monic(const IntPoly& f, const IntPoly& g);

/// pseudo-division: lc(g)^(deg f - deg g + 1) f = q g + r, deg r < deg g
DivRem pseudo_divrem(const IntPoly& f, const IntPoly& g);

/// exact division, throws on nonzero remainder (internal misuse)
IntPoly exact_div(const IntPoly& f, const IntPoly& g);
bool divides(const IntPoly& g, const IntPoly& f);

IntPoly gcd(const IntPoly& f, const IntPoly& g);  // primitive, positive lc

/// Subresultant PRS resultant; errors on zero input.
BigInt resultant(const IntPoly& f, const IntPoly& g);
/// disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f)
BigInt discriminant(const IntPoly& f);

/// Univariate polynomial over Q in common-denominator form:
/// num/den with den > 0 and gcd(content(num), den) = 1.
class RatPoly {
public:
    RatPoly() : den_(1) {}
    RatPoly(IntPoly num, BigInt den);  // normalizes
    explicit RatPoly(const IntPoly& num) : num_(num), den_(1) {}
    static RatPoly from_rationals(const std::vector<BigRat>& coeffs);

    const IntPoly& num() const { return num_; }
    const BigInt& den() const { return den_; }
    int degree() const { return num_.degree(); }
    bool is_zero() const { return num_.is_zero(); }

    BigRat coeff(size_t i) const { return BigRat(num_.coeff(i), den_); }
    std::vector<BigRat> rationals() const;

    /// true and the integer image if every coefficient is integral
    bool to_intpoly(IntPoly& out) const;

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator*(const BigRat& s) const;
    bool operator==(const RatPoly& o) const { return num_ == o.num_ && den_ == o.den_; }

    BigRat eval(const BigRat& t) const;

private:
    IntPoly num_;
    BigInt den_;
    void normalize();
};

/// remainder of f by monic integer modulus, over Q
RatPoly mod_monic(const RatPoly& f, const IntPoly& m);

/// Newton interpolation at the nodes 0..D from integer values; the target
/// polynomial must be integral (errors otherwise). All-integer arithmetic.
IntPoly interpolate_integer(const std::vector<BigInt>& values);

} // namespace wreathcount
