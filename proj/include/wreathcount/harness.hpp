#pragma once

#include <string>
#include <vector>

#include "wreathcount/galois.hpp"

namespace wreathcount {

/// isomorphism class of counted fields
struct FieldRecord {
    IntPoly poly;         // first-seen defining polynomial (monic irreducible)
    BigInt kernel;        // squarefree kernel of |disc|, a field invariant
    BigInt min_abs_disc;  // least |disc(F_alpha)| over the class members
    long long members = 0;
    Verdict verdict = Verdict::Inconclusive;
};

struct CountPoint {
    BigInt X;
    long long n_fields = 0;
    BigInt min_disc = 0, max_disc = 0;  // over the counted classes
};

struct CountCurve {
    std::vector<CountPoint> points;
};

struct CountOptions {
    BigInt box_cap = BigInt(250000000);
    long long survivor_cap = 50000000;
    int workers = 0;
    CertifyOptions cert;
    bool subfield_count = false;
};

struct CountResult {
    CountCurve curve;
    BigInt box_points;
    long long survivors = 0;           // 0 < |disc| <= max X
    long long irreducible = 0;
    long long classes = 0;             // isomorphism classes among them
    long long certified_classes = 0;   // classes with the full group
    BigInt subfield_total = 0;         // conjugate-subfield count (optional)
    std::vector<FieldRecord> fields;   // certified classes
};

/// Desk-scale counting experiment: enumerate the coefficient box at Y_max,
/// keep points with 0 < |disc(F_alpha)| <= max(X_grid), drop reducible
/// specializations, dedupe the rest by field isomorphism, certify one
/// representative per class (the verdict is a field invariant), and count
/// certified classes with min |disc| <= X per grid point.
/// Errors: CapExceeded.
CountResult run_count(const Shape& s, long long Y_max, const std::vector<BigInt>& X_grid,
                      const CountOptions& opt = {});

struct DensityRow {
    BigRat Y;
    DensityResult res;
};

std::vector<DensityRow> run_density(const Shape& s, const std::vector<BigRat>& Y_grid, CertMode mode,
                                    const DensityOptions& opt = {});

/// true iff the two monic irreducible polynomials of equal degree define
/// isomorphic fields (root test through the norm factorization)
/// Errors: PreconditionFailed (monic/degree checks).
bool fields_isomorphic(const IntPoly& f, const IntPoly& g);

struct SlopeReport {
    double slope = 0;
    int points_used = 0;       // in the top decade
    BigRat exponent;           // two-branch theorem exponent
    bool has_power_form = false;
    BigRat delta;              // only for equal-entry shapes
    BigRat beta;
    double tolerance = 0.05;
    bool pass = false;
};

/// Fit log10(count) against log10(X) over the top decade of the grid and
/// compare against the theorem exponent. Errors: InsufficientData.
SlopeReport run_slope_report(const CountCurve& curve, const Shape& s, double tolerance = 0.05);

// ---- scan internals, exposed for the oracle tests ----

/// disc_x(H(x) - y) as a polynomial in y (degree deg H - 1); H monic, deg >= 2
IntPoly disc_shift_poly(const IntPoly& H);
/// disc(base + d) as a polynomial in d (degree deg base - 1); base monic, deg >= 2
IntPoly disc_const_poly(const IntPoly& base);
/// Res_y(base(y) + d, dH(y)) as a polynomial in d (degree deg dH)
IntPoly res_with_const_poly(const IntPoly& base, const IntPoly& dH);

/// translate- and mirror-normalized form of a monic polynomial (same field)
IntPoly reduced_form(const IntPoly& F);

/// canonical CSV renderings (shared by the CLI and the acceptance suite so
/// determinism checks compare the real output bytes)
std::string density_csv(const std::vector<DensityRow>& rows);
std::string count_csv(const CountCurve& curve);

} // namespace wreathcount
