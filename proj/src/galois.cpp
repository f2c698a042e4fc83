#include "wreathcount/galois.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "wreathcount/heights.hpp"
#include "wreathcount/parallel.hpp"

namespace wreathcount {

namespace {

CycleType degrees_to_type(std::vector<int> degs) {
    CycleType t;
    t.parts = std::move(degs);
    std::sort(t.parts.rbegin(), t.parts.rend());
    return t;
}

} // namespace

FrobeniusSample frobenius_sample(const CompositeTower& t, const std::vector<long long>& primes) {
    FrobeniusSample out;
    BigInt disc = discriminant(t.F());
    for (long long p : primes) {
        if (p < 2 || disc % BigInt(p) == 0) {
            out.skipped.push_back(p);
            continue;
        }
        FrobeniusRecord rec;
        rec.p = p;
        rec.leaf = degrees_to_type(factor_degrees_mod_p(t.F(), static_cast<std::uint64_t>(p)));
        for (int j = 1; j < t.shape.k(); ++j)
            rec.levels.push_back(degrees_to_type(factor_degrees_mod_p(t.Q(j), static_cast<std::uint64_t>(p))));
        out.records.push_back(std::move(rec));
    }
    if (out.records.empty()) fail(errc::all_primes_bad, "no good prime in the requested list");
    return out;
}

std::vector<long long> good_primes_for_tower(const CompositeTower& t, int count) {
    std::vector<long long> out;
    BigInt disc = discriminant(t.F());
    if (disc == 0) fail(errc::not_squarefree, "tower polynomial has repeated roots");
    std::uint64_t p = 2;
    while (static_cast<int>(out.size()) < count) {
        p = next_prime_above(p);
        if (disc % BigInt(p) == 0) continue;
        out.push_back(static_cast<long long>(p));
    }
    return out;
}

bool refinement_law_holds(const CompositeTower& t, long long p) {
    std::uint64_t up = static_cast<std::uint64_t>(p);
    for (int j = 1; j <= t.shape.k(); ++j) {
        std::vector<int> assembled;
        ModFactorization qf = factor_mod_p(t.Q(j), up);
        for (const auto& fac : qf.factors) {
            // factor degrees of h(g_j) mod p, counted with h's multiplicity
            IntPoly hg = compose(fac.poly.lift_symmetric(), t.blocks[static_cast<size_t>(j - 1)]);
            std::vector<int> degs = factor_degrees_mod_p(hg, up);
            for (int rep = 0; rep < fac.multiplicity; ++rep)
                assembled.insert(assembled.end(), degs.begin(), degs.end());
        }
        std::vector<int> direct = factor_degrees_mod_p(t.Q(j - 1), up);
        std::sort(assembled.rbegin(), assembled.rend());
        std::sort(direct.rbegin(), direct.rend());
        if (assembled != direct) return false;
    }
    return true;
}

ContainmentReport containment_check(const std::vector<FrobeniusRecord>& records, const Shape& s,
                                    long long enumeration_cap) {
    if (records.empty()) fail(errc::precondition_failed, "containment check needs records");
    std::set<CycleType> support;
    for (const auto& [type, cnt] : cycle_type_distribution(s, enumeration_cap)) support.insert(type);
    ContainmentReport rep;
    rep.pass = true;
    for (size_t i = 0; i < records.size(); ++i) {
        if (support.count(records[i].leaf) == 0) {
            rep.pass = false;
            rep.offenders.push_back(i);
        }
    }
    return rep;
}

namespace {

/// Adjoin roots through the norm correspondence: the factors of f over the
/// current field are mirrored by the rational factors of a squarefree
/// shifted norm (degrees divided by the field degree), and a norm factor is
/// itself the minimal polynomial of the shifted primitive element, hence
/// directly the next modulus.
long long splitting_core(const IntPoly& f, IntPoly modulus, long long cap) {
    if (modulus.degree() > cap) fail(errc::cap_exceeded, "splitting degree would exceed the cap");
    while (true) {
        long long degL = modulus.degree();
        NormFactorization nf = norm_factorization(f, modulus);
        std::vector<const IntPoly*> nl;
        for (const auto& G : nf.factors) {
            if (G.degree() % degL != 0) fail(errc::precondition_failed, "norm degree mismatch");
            if (G.degree() / degL >= 2) nl.push_back(&G);
        }
        if (nl.empty()) return degL;
        std::sort(nl.begin(), nl.end(), [](const IntPoly* a, const IntPoly* b) {
            if (a->degree() != b->degree()) return a->degree() < b->degree();
            return *a < *b;
        });
        if (nl.size() == 1 && nl[0]->degree() == 2 * degL) {
            // one quadratic factor left: its root splits it, degree doubles
            long long total = 2 * degL;
            if (total > cap) fail(errc::cap_exceeded, "splitting degree would exceed the cap");
            return total;
        }
        if (nl[0]->degree() > cap) fail(errc::cap_exceeded, "splitting degree would exceed the cap");
        modulus = *nl[0];
    }
}

/// entry for a polynomial already proven monic irreducible of degree >= 2
long long splitting_degree_irreducible(const IntPoly& f, long long cap) {
    if (f.degree() == 2) return 2;
    return splitting_core(f, f, cap);
}

} // namespace

long long splitting_degree(const IntPoly& f, long long cap) {
    if (f.is_zero()) fail(errc::zero_polynomial, "splitting degree of zero");
    if (!is_squarefree(f)) fail(errc::not_squarefree, "splitting degree needs a squarefree polynomial");
    if (f.degree() <= 1) return 1;

    QFactorization qf = factor_over_Q(f);
    std::vector<IntPoly> nonlin;
    for (const auto& fac : qf.factors)
        if (fac.poly.degree() >= 2) nonlin.push_back(fac.poly);
    if (nonlin.empty()) return 1;
    std::sort(nonlin.begin(), nonlin.end(), [](const IntPoly& a, const IntPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a < b;
    });
    if (nonlin.size() == 1 && nonlin[0].degree() == 2) return 2;

    // monicize the seed factor; same stem field
    IntPoly modulus = nonlin[0];
    {
        const BigInt& l = modulus.lc();
        if (l != 1) {
            std::vector<BigInt> c = modulus.coeffs();
            int d = modulus.degree();
            BigInt mul = 1;
            for (int i = d - 1; i >= 0; --i) {
                c[static_cast<size_t>(i)] *= mul;
                mul *= l;
            }
            c[static_cast<size_t>(d)] = 1;
            modulus = IntPoly::from_coeffs(std::move(c));
        }
    }
    return splitting_core(f, std::move(modulus), cap);
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::CertifiedEqual: return "CertifiedEqual";
        case Verdict::CertifiedProper: return "CertifiedProper";
        case Verdict::ConsistentWithW: return "ConsistentWithW";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

namespace {

/// shared preamble: squarefreeness and irreducibility screening
bool screen_reducible(const CompositeTower& t, CertificationResult& r) {
    const IntPoly& F = t.F();
    if (!is_squarefree(F)) {
        r.verdict = Verdict::CertifiedProper;
        r.irreducible = false;
        r.stage = "not_squarefree";
        return true;
    }
    r.irreducible = irreducible_probe(F);
    if (!r.irreducible) {
        QFactorization qf = factor_over_Q(F);
        r.irreducible = qf.factors.size() == 1 && qf.factors[0].multiplicity == 1;
    }
    if (!r.irreducible) {
        r.verdict = Verdict::CertifiedProper;
        r.stage = "reducible";
        return true;
    }
    return false;
}

} // namespace

CertificationResult certify_exact(const CompositeTower& t, const CertifyOptions& opt) {
    CertificationResult r;
    r.expected_order = t.shape.group_order();
    if (screen_reducible(t, r)) return r;
    r.splitting_degree = splitting_degree_irreducible(t.F(), opt.splitting_cap);
    r.verdict = BigInt(r.splitting_degree) == r.expected_order ? Verdict::CertifiedEqual : Verdict::CertifiedProper;
    r.stage = "splitting_degree";
    return r;
}

CertificationResult certify_statistical(const CompositeTower& t, const CertifyOptions& opt) {
    CertificationResult r;
    r.expected_order = t.shape.group_order();
    if (screen_reducible(t, r)) return r;

    std::vector<long long> primes = good_primes_for_tower(t, opt.stat_primes);
    FrobeniusSample sample = frobenius_sample(t, primes);
    r.sample_size = static_cast<int>(sample.records.size());

    ContainmentReport cont = containment_check(sample.records, t.shape, opt.enumeration_cap);

    // empirical vs class-size-weighted exact distribution
    std::map<CycleType, long long> dist = cycle_type_distribution(t.shape, opt.enumeration_cap);
    BigInt order = t.shape.group_order();
    std::map<CycleType, double> expected;
    for (const auto& [type, cnt] : dist) expected[type] = to_double(BigRat(BigInt(cnt), order));
    std::map<CycleType, double> empirical;
    for (const auto& rec : sample.records) empirical[rec.leaf] += 1.0 / r.sample_size;
    double tv = 0;
    std::set<CycleType> keys;
    for (const auto& [k, v] : expected) keys.insert(k);
    for (const auto& [k, v] : empirical) keys.insert(k);
    for (const auto& k : keys) {
        double e = expected.count(k) ? expected.at(k) : 0.0;
        double o = empirical.count(k) ? empirical.at(k) : 0.0;
        tv += std::abs(e - o);
    }
    r.tv_distance = tv / 2.0;
    r.verdict = (cont.pass && r.tv_distance < opt.tau) ? Verdict::ConsistentWithW : Verdict::Inconclusive;
    r.stage = "chebotarev";
    return r;
}

CertificationResult certify(const CompositeTower& t, CertMode mode, const CertifyOptions& opt) {
    return mode == CertMode::Exact ? certify_exact(t, opt) : certify_statistical(t, opt);
}

void wilson_interval(long long successes, long long n, double& lo, double& hi) {
    if (n == 0) {
        lo = hi = 0;
        return;
    }
    double z = 1.959963984540054;
    double phat = static_cast<double>(successes) / static_cast<double>(n);
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = phat + z2 / (2.0 * n);
    double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
    lo = (center - half) / denom;
    hi = (center + half) / denom;
}

DensityResult density_estimate(const Shape& s, const BigRat& Y, CertMode mode, const DensityOptions& opt) {
    BoxSpec box = make_box(s, Y);
    DensityResult out;
    out.box_size = box.count();
    out.exhaustive = out.box_size <= opt.exhaustive_threshold;

    std::vector<BigInt> indices;
    if (out.exhaustive) {
        long long n = out.box_size.convert_to<long long>();
        indices.reserve(static_cast<size_t>(n));
        for (long long i = 0; i < n; ++i) indices.emplace_back(i);
    } else {
        if (out.box_size > BigInt(1) << 62) fail(errc::cap_exceeded, "box too large to sample by index");
        std::uint64_t n = out.box_size.convert_to<std::uint64_t>();
        Rng rng(opt.seed);
        indices.reserve(static_cast<size_t>(opt.sample));
        for (int i = 0; i < opt.sample; ++i) indices.emplace_back(rng.below(n));
    }
    out.examined = static_cast<long long>(indices.size());

    size_t chunk = 256;
    std::vector<long long> counts((indices.size() + chunk - 1) / chunk, 0);
    parallel_chunks(indices.size(), chunk, opt.workers, [&](size_t ci, size_t lo, size_t hi) {
        long long local = 0;
        for (size_t i = lo; i < hi; ++i) {
            CompositeTower t = tower_from_alpha(s, box.point_at(indices[i]));
            CertificationResult r = certify(t, mode, opt.cert);
            Verdict want = mode == CertMode::Exact ? Verdict::CertifiedEqual : Verdict::ConsistentWithW;
            if (r.verdict == want) ++local;
        }
        counts[ci] = local;
    });
    for (long long c : counts) out.certified += c;
    out.fraction = out.examined ? static_cast<double>(out.certified) / static_cast<double>(out.examined) : 0.0;
    wilson_interval(out.certified, out.examined, out.wilson_lo, out.wilson_hi);
    return out;
}

} // namespace wreathcount
