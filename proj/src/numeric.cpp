#include "wreathcount/numeric.hpp"

#include <charconv>
#include <map>

namespace wreathcount {

std::string fmt_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pollard_rho(std::uint64_t n) {
    // Brent's cycle variant; n composite, odd, not a prime power of 2
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t x = 2, y = 2, d = 1;
        auto step = [&](std::uint64_t v) { return (mulmod_u64(v, v, n) + c) % n; };
        std::uint64_t count = 0;
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            std::uint64_t diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            d = std::gcd(diff, n);
            if (++count > (1u << 22)) break;
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_u64(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull}) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n == 1) return;
    if (is_prime_u64(n)) {
        ++out[n];
        return;
    }
    std::uint64_t d = pollard_rho(n);
    factor_u64(d, out);
    factor_u64(n / d, out);
}

} // namespace

BigInt squarefree_kernel(BigInt n) {
    if (n < 0) n = -n;
    if (n == 0 || n == 1) return n;
    BigInt kernel = 1;
    // trial division keeps the residual small enough for 64-bit rho
    for (std::uint64_t p = 2; p < 20000; p = (p == 2 ? 3 : p + 2)) {
        if (!is_prime_u64(p)) continue;
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) {
                ++e;
                n /= p;
            }
            if (e & 1) kernel *= p;
        }
        if (n == 1 || BigInt(p) * p > n) break;
    }
    if (n == 1) return kernel;
    if (n <= BigInt(UINT64_MAX)) {
        std::map<std::uint64_t, unsigned> fs;
        factor_u64(n.convert_to<std::uint64_t>(), fs);
        for (auto& [p, e] : fs)
            if (e & 1) kernel *= p;
        return kernel;
    }
    // residual has no factor < 20000; a perfect square contributes nothing
    BigInt r = boost::multiprecision::sqrt(n);
    if (r * r == n) return kernel;
    return 0;
}

} // namespace wreathcount
