#pragma once

#include <complex>
#include <vector>

#include "wreathcount/intpoly.hpp"
#include "wreathcount/wreath.hpp"

namespace wreathcount {

/// Height of a monic integer polynomial: max_i |a_i|^(1/i), a_i the
/// coefficient of x^(n-i). The maximizing pair is kept exactly so
/// comparisons need no floating point.
struct Height {
    int index = 0;        // 0 for the zero height (pure power x^n)
    BigInt coeff_abs = 0; // |a_index|
    double value = 0.0;   // |a_index|^(1/index), 0 when index == 0

    /// exact compare of |a|^(1/i) vs |b|^(1/j)
    static int cmp(int i, const BigInt& a, int j, const BigInt& b);
};

/// Errors: NotMonic.
Height poly_height(const IntPoly& f);

/// all complex roots by the Aberth-Ehrlich simultaneous iteration
/// Errors: RootFindFailure on non-convergence.
std::vector<std::complex<double>> complex_roots(const IntPoly& f);

struct RootBoundCheck {
    double max_modulus;
    double bound;  // 2*height
    bool pass;     // max_modulus <= bound + 1e-8
};

/// Errors: NotMonic (nonconstant monic required), RootFindFailure.
RootBoundCheck root_bound_check(const IntPoly& f);

/// Coefficient box: |alpha_{u,v}| <= floor(Y^(v*N_{u-1})).
struct BoxSpec {
    Shape shape;
    BigRat Y;
    std::vector<long long> exps;   // per flat coordinate
    std::vector<BigInt> bounds;    // floor(Y^e)

    BigInt count() const;  // prod (2*bound + 1)
    /// mixed-radix decode, index in [0, count)
    std::vector<BigInt> point_at(const BigInt& index) const;
};

BoxSpec make_box(const Shape& s, const BigRat& Y);

/// ascending odometer over the box, fast path for harness scans;
/// bounds must fit long long
class BoxIterator {
public:
    explicit BoxIterator(const BoxSpec& box);
    bool next(std::vector<long long>& out);  // false when exhausted

private:
    std::vector<long long> bounds_;
    std::vector<long long> cur_;
    bool first_ = true;
    bool done_ = false;
};

BigRat exponent_A(const Shape& s);
BigRat exponent_B(const Shape& s);

/// the two-branch exponent of the counting theorem, as a function of (B, N)
BigRat theorem_A_exponent_from(const BigRat& B, long long N);
/// Errors: PreconditionFailed when B <= N.
BigRat theorem_A_exponent(const Shape& s);

/// (n^{2k} + n^k - 2) / (2 (n^{3k-1} - n^{2k-1}))
BigRat delta_nk(int n, int k);
/// (1 - (n!)^{-k}) / (n^{k-1} (2 n^k - 2))
BigRat ptw_beta(int n, int k);

/// Empirical sup of ||F_j|| / Y and |F_j(0)| / Y^{N_j} over the box corner
/// points plus `nrandom` seeded points.
struct BoxConstants {
    double C1;
    double C2;
};
BoxConstants measure_box_constants(const Shape& s, const BigRat& Y, int nrandom, std::uint64_t seed);

} // namespace wreathcount
