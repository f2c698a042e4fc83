#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace wreathcount {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt bpow(BigInt base, unsigned long exp) {
    BigInt r = 1;
    while (exp) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

inline BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt big_abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

inline std::string rat_str(const BigRat& q) {
    // canonical "p/q", bare integer when the denominator is 1
    if (boost::multiprecision::denominator(q) == 1)
        return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" +
           boost::multiprecision::denominator(q).str();
}

inline double to_double(const BigInt& a) { return a.convert_to<double>(); }
inline double to_double(const BigRat& q) { return q.convert_to<double>(); }

/// shortest round-trip decimal form (deterministic across runs)
std::string fmt_double(double v);

/// Deterministic RNG wrapper. mt19937_64 output is pinned by the standard;
/// the bounded sampler below avoids std::uniform_int_distribution, whose
/// mapping is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    /// uniform in [0, n), n > 0 (rejection sampling, unbiased)
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do { v = eng_(); } while (v >= limit);
        return v % n;
    }

    /// uniform in [lo, hi] inclusive
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    /// uniform BigInt in [-bound, bound]
    BigInt signed_bigint(const BigInt& bound) {
        BigInt span = 2 * bound + 1;
        // sample below span by limbs of 32 bits
        BigInt v = 0;
        BigInt limit = 1;
        while (limit < span) {
            v = (v << 32) | static_cast<std::uint32_t>(next_u64());
            limit <<= 32;
        }
        return v % span - bound;
    }

private:
    std::mt19937_64 eng_;
};

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
        std::uint64_t r = 1;
        a %= m;
        while (e) {
            if (e & 1) r = mulmod(r, a, m);
            a = mulmod(a, a, m);
            e >>= 1;
        }
        return r;
    };
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // deterministic Miller-Rabin bases for 64-bit range
    for (std::uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        std::uint64_t x = powmod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

inline std::uint64_t next_prime_above(std::uint64_t n) {
    std::uint64_t p = n + 1;
    if (p <= 2) return 2;
    if (p % 2 == 0) ++p;
    while (!is_prime_u64(p)) p += 2;
    return p;
}

/// Squarefree kernel of |n| by trial division, Pollard rho fallback.
/// Returns 0 when the factorization gives up (callers treat that as
/// "unknown bucket"); never happens below 2^120 in practice.
BigInt squarefree_kernel(BigInt n);

} // namespace wreathcount
