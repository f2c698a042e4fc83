#pragma once

#include <vector>

#include "wreathcount/intpoly.hpp"
#include "wreathcount/modpoly.hpp"

namespace wreathcount {

struct QFactor {
    IntPoly poly;  // primitive irreducible, positive leading coefficient
    int multiplicity;
};

struct QFactorization {
    BigInt content;  // f = content * prod poly^mult
    std::vector<QFactor> factors;
};

/// Factor f over Q (Zassenhaus: good prime, Hensel past the Mignotte
/// bound, subset recombination). Errors: ZeroPolynomial.
QFactorization factor_over_Q(const IntPoly& f);

bool is_irreducible_over_Q(const IntPoly& f);

/// Fast sufficient irreducibility test for squarefree f: intersects the
/// rational factor-degree partitions compatible with the mod-p degree
/// patterns at a few good primes. true = proven irreducible; false = unknown
/// (caller falls back to the full factorization).
bool irreducible_probe(const IntPoly& f, int nprimes = 4);

/// Yun squarefree decomposition of the primitive part: pairs (g_i, i),
/// g_i primitive squarefree pairwise coprime, f = content * prod g_i^i.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f);

bool is_squarefree(const IntPoly& f);

/// First `count` primes p with p > 2*deg(f), p not dividing lc(f)*disc(f)
/// (tested as "f squarefree mod p"), ascending.
std::vector<std::uint64_t> good_primes_for(const IntPoly& f, int count, std::uint64_t start = 0);

} // namespace wreathcount
