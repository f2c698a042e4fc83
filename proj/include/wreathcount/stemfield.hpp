#pragma once

#include <vector>

#include "wreathcount/factor.hpp"
#include "wreathcount/intpoly.hpp"

namespace wreathcount {

/// Q[y]/(m(y)) for a monic irreducible integer m. Elements are RatPoly
/// reduced mod m; the field owns no element state, only the modulus.
class StemField {
public:
    /// certifies irreducibility of m (factor_over_Q)
    static StemField make(IntPoly m);
    /// caller has already proven m monic irreducible
    static StemField make_trusted(IntPoly m);

    const IntPoly& modulus() const { return m_; }
    int degree() const { return m_.degree(); }

    RatPoly reduce(const RatPoly& a) const { return mod_monic(a, m_); }
    RatPoly add(const RatPoly& a, const RatPoly& b) const { return a + b; }
    RatPoly sub(const RatPoly& a, const RatPoly& b) const { return a - b; }
    RatPoly mul(const RatPoly& a, const RatPoly& b) const { return reduce(a * b); }
    RatPoly inv(const RatPoly& a) const;  // errors on zero
    RatPoly generator() const { return RatPoly(IntPoly::x()); }
    static RatPoly constant(const BigRat& q);

    bool is_zero_elem(const RatPoly& a) const { return reduce(a).is_zero(); }

private:
    explicit StemField(IntPoly m) : m_(std::move(m)) {}
    IntPoly m_;
};

/// polynomial over a stem field, constant term first, canonical
class StemPoly {
public:
    StemPoly() = default;
    explicit StemPoly(std::vector<RatPoly> coeffs) : c_(std::move(coeffs)) { trim(); }
    static StemPoly from_intpoly(const IntPoly& f);
    static StemPoly from_ratpoly(const RatPoly& f);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const RatPoly& lc() const { return c_.back(); }
    const RatPoly& coeff(size_t i) const {
        static const RatPoly zero{};
        return i < c_.size() ? c_[i] : zero;
    }
    const std::vector<RatPoly>& coeffs() const { return c_; }
    bool is_monic() const;

    bool operator==(const StemPoly& o) const { return c_ == o.c_; }
    bool operator<(const StemPoly& o) const;  // deterministic ordering

    std::string to_string() const;  // coefficients as "p/q*y^i" polynomials, comma-joined

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<RatPoly> c_;
};

StemPoly add(const StemField& L, const StemPoly& a, const StemPoly& b);
StemPoly sub(const StemField& L, const StemPoly& a, const StemPoly& b);
StemPoly mul(const StemField& L, const StemPoly& a, const StemPoly& b);
StemPoly scale(const StemField& L, const StemPoly& a, const RatPoly& s);
StemPoly monic(const StemField& L, const StemPoly& a);
StemPoly derivative(const StemField& L, const StemPoly& a);
struct StemDivRem {
    StemPoly quot, rem;
};
StemDivRem divrem(const StemField& L, const StemPoly& f, const StemPoly& g);
StemPoly gcd(const StemField& L, const StemPoly& f, const StemPoly& g);  // monic
/// x -> x + t for an element t of L
StemPoly shift_var(const StemField& L, const StemPoly& f, const RatPoly& t);

/// Norm_{L/Q}(f) = Res_y(m(y), f(x,y)), degree deg(m)*deg(f) in x,
/// computed by interpolation; f monic over L gives a monic result.
RatPoly norm_poly(const StemField& L, const StemPoly& f);

struct StemFactor {
    StemPoly poly;  // monic irreducible over L
    int multiplicity;
};

struct StemFactorization {
    RatPoly unit;  // original lc as an element of L
    std::vector<StemFactor> factors;
};

/// Trager factorization over L: squarefree split, norm via resultant with
/// shift search s = 0, 1, 2, ..., factor the norm over Q, gcd pullback.
/// Errors: ZeroPolynomial.
StemFactorization factor_over_stem(const IntPoly& f, const StemField& L);
StemFactorization factor_stem_poly(const StemPoly& f, const StemField& L);

/// Build Q(z) for z = x + s*y, x a root of the (monic, irreducible over L,
/// degree >= 2) factor g, y the generator of L; returns the new stem field
/// with a monic *integer* modulus (the primitive element is rescaled by the
/// coefficient denominator lcm).
StemField extend_by_factor(const StemField& L, const StemPoly& g);

/// number of roots of g inside L (count of linear factors, with multiplicity)
int count_roots_in(const IntPoly& g, const StemField& L);

/// All-integer Trager data for f in Z[x] over Q[y]/(m): a shift s with
/// squarefree norm N_s = Res_y(m, f(x - s y)) and the rational factorization
/// of N_s. Each norm factor G corresponds to one irreducible factor of f
/// over the field, of degree deg(G)/deg(m); G is monic and is the minimal
/// polynomial of (root + s*generator), so it serves directly as the modulus
/// of the extended field.
struct NormFactorization {
    long long shift;
    IntPoly norm;                 // monic, squarefree, degree deg(m)*deg(f)
    std::vector<IntPoly> factors; // monic irreducible over Q, ascending
};

/// Requires f squarefree with deg >= 1, m monic with integer coefficients.
NormFactorization norm_factorization(const IntPoly& f, const IntPoly& modulus);

/// degrees of the irreducible factors of (squarefree) f over Q[y]/(m),
/// descending; by the norm correspondence, no stem arithmetic involved
std::vector<int> stem_factor_degrees(const IntPoly& f, const IntPoly& modulus);

/// true iff g (monic irreducible) has a root in Q[y]/(m)
bool has_root_in(const IntPoly& g, const IntPoly& modulus);

} // namespace wreathcount
