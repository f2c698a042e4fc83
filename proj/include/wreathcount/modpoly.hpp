#pragma once

#include <cstdint>
#include <vector>

#include "wreathcount/intpoly.hpp"

namespace wreathcount {

/// Dense polynomial over F_p, p an odd-sized prime < 2^62; constant term first.
class ModPoly {
public:
    ModPoly() : p_(2) {}
    explicit ModPoly(std::uint64_t p) : p_(p) {}
    ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) { trim(); }

    static ModPoly reduce(const IntPoly& f, std::uint64_t p);
    static ModPoly x(std::uint64_t p) { return ModPoly(p, {0, 1}); }
    static ModPoly constant(std::uint64_t p, std::uint64_t c) { return ModPoly(p, {c % p}); }

    std::uint64_t p() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    std::uint64_t lc() const { return c_.back(); }
    std::uint64_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }

    bool operator==(const ModPoly& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator<(const ModPoly& o) const {
        if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
        for (size_t i = c_.size(); i-- > 0;)
            if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
        return false;
    }

    ModPoly operator+(const ModPoly& o) const;
    ModPoly operator-(const ModPoly& o) const;
    ModPoly operator*(const ModPoly& o) const;
    ModPoly scaled(std::uint64_t s) const;
    ModPoly monic() const;
    ModPoly derivative() const;

    /// lifts to Z with coefficients in [0, p)
    IntPoly lift() const;
    /// symmetric lift, coefficients in (-p/2, p/2]
    IntPoly lift_symmetric() const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::uint64_t p_;
    std::vector<std::uint64_t> c_;

    friend ModPoly mulmod(const ModPoly&, const ModPoly&, const ModPoly&);
};

struct ModDivRem {
    ModPoly quot, rem;
};
ModDivRem divrem(const ModPoly& f, const ModPoly& g);
ModPoly gcd(const ModPoly& f, const ModPoly& g);  // monic
ModPoly powmod(const ModPoly& base, const BigInt& e, const ModPoly& mod);
ModPoly mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& mod);
ModPoly compose_mod(const ModPoly& f, const ModPoly& g, const ModPoly& mod);

struct ModFactor {
    ModPoly poly;  // monic irreducible
    int multiplicity;
};

struct ModFactorization {
    std::uint64_t lc;  // f = lc * prod poly^mult mod p
    std::vector<ModFactor> factors;
};

/// Full factorization over F_p: squarefree split, distinct-degree,
/// Cantor-Zassenhaus equal-degree (deterministically seeded).
/// Errors: NotPrime, LeadingCoeffVanishes.
ModFactorization factor_mod_p(const IntPoly& f, std::uint64_t p);

/// Degree multiset of the irreducible factors of (squarefree) f mod p,
/// sorted descending. Distinct-degree stage only -- no randomness.
std::vector<int> factor_degrees_mod_p(const IntPoly& f, std::uint64_t p);

/// true iff f mod p is squarefree and deg is preserved
bool good_prime(const IntPoly& f, std::uint64_t p);

} // namespace wreathcount
