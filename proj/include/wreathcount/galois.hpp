#pragma once

#include <string>
#include <vector>

#include "wreathcount/composer.hpp"
#include "wreathcount/stemfield.hpp"
#include "wreathcount/wreath.hpp"

namespace wreathcount {

/// Factorization shape of the tower polynomials at a good prime: the leaf
/// type is the factor-degree multiset of F mod p, one level type per upper
/// composite Q_j (j = 1..k-1).
struct FrobeniusRecord {
    long long p;
    CycleType leaf;
    std::vector<CycleType> levels;
};

struct FrobeniusSample {
    std::vector<FrobeniusRecord> records;
    std::vector<long long> skipped;  // bad primes (dividing disc(F))
};

/// Errors: AllPrimesBad when every requested prime is bad.
FrobeniusSample frobenius_sample(const CompositeTower& t, const std::vector<long long>& primes);

/// ascending good primes from 3, skipping divisors of disc(F)
std::vector<long long> good_primes_for_tower(const CompositeTower& t, int count);

/// Exact identity Q_{j-1} = Q_j o g_j reduced mod p: the factor degrees of
/// h(g_j) over the irreducible factors h of Q_j mod p refine Q_{j-1}'s.
bool refinement_law_holds(const CompositeTower& t, long long p);

struct ContainmentReport {
    bool pass;
    std::vector<size_t> offenders;  // indices of records outside the support
};

/// one-sided check: every sampled leaf type lies in the support of the
/// group's cycle-type distribution
ContainmentReport containment_check(const std::vector<FrobeniusRecord>& records, const Shape& s,
                                    long long enumeration_cap);

/// Degree of the splitting field over Q by iterated stem-field adjunction.
/// When a single nonlinear factor of degree 2 remains, adjoining its root
/// splits it, so the degree doubles without building the extension.
/// Errors: NotSquarefree, CapExceeded, ZeroPolynomial.
long long splitting_degree(const IntPoly& f, long long cap = 200);

enum class Verdict { CertifiedEqual, CertifiedProper, ConsistentWithW, Inconclusive };

const char* verdict_name(Verdict v);

struct CertifyOptions {
    long long splitting_cap = 200;
    int stat_primes = 64;
    double tau = 0.25;
    long long enumeration_cap = 1000000;
};

struct CertificationResult {
    Verdict verdict;
    bool irreducible = false;
    long long splitting_degree = -1;  // exact mode
    BigInt expected_order;
    int sample_size = 0;       // statistical mode
    double tv_distance = -1;   // statistical mode
    std::string stage;         // which test decided
};

/// Exact certification: irreducibility over Q, then splitting degree
/// compared against |S(n)|. CertifiedEqual only with both proofs.
CertificationResult certify_exact(const CompositeTower& t, const CertifyOptions& opt = {});

/// Statistical certification: >= S good primes sampled; ConsistentWithW iff
/// F is irreducible, containment passes, and the total-variation distance
/// between the empirical leaf-type frequencies and the class-size-weighted
/// distribution of S(n) stays below tau. Never returns CertifiedEqual;
/// reducible specializations are CertifiedProper in both modes.
CertificationResult certify_statistical(const CompositeTower& t, const CertifyOptions& opt = {});

enum class CertMode { Exact, Statistical };

CertificationResult certify(const CompositeTower& t, CertMode mode, const CertifyOptions& opt = {});

struct DensityOptions {
    long long exhaustive_threshold = 20000;
    int sample = 4000;
    std::uint64_t seed = 20240613;
    int workers = 0;  // 0 = hardware
    CertifyOptions cert;
};

struct DensityResult {
    BigInt box_size;
    long long examined = 0;
    long long certified = 0;
    double fraction = 0;
    double wilson_lo = 0, wilson_hi = 0;  // 95%
    bool exhaustive = false;
};

/// Fraction of box points whose verdict is CertifiedEqual (exact mode) or
/// ConsistentWithW (statistical mode); samples the box above the
/// exhaustive threshold, with a Wilson 95% interval.
/// Errors: CapExceeded when the box cannot be sampled.
DensityResult density_estimate(const Shape& s, const BigRat& Y, CertMode mode, const DensityOptions& opt = {});

/// Wilson score interval helper (z = 1.96)
void wilson_interval(long long successes, long long n, double& lo, double& hi);

} // namespace wreathcount
