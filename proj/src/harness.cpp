#include "wreathcount/harness.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "wreathcount/heights.hpp"
#include "wreathcount/parallel.hpp"

namespace wreathcount {

IntPoly disc_shift_poly(const IntPoly& H) {
    if (!H.is_monic() || H.degree() < 2) fail(errc::precondition_failed, "disc_shift_poly needs monic deg >= 2");
    int m = H.degree();
    std::vector<BigInt> values(static_cast<size_t>(m));
    for (int y0 = 0; y0 < m; ++y0) values[static_cast<size_t>(y0)] = discriminant(H - IntPoly(BigInt(y0)));
    return interpolate_integer(values);
}

IntPoly disc_const_poly(const IntPoly& base) {
    if (!base.is_monic() || base.degree() < 2) fail(errc::precondition_failed, "disc_const_poly needs monic deg >= 2");
    int n = base.degree();
    std::vector<BigInt> values(static_cast<size_t>(n));
    for (int d = 0; d < n; ++d) values[static_cast<size_t>(d)] = discriminant(base + IntPoly(BigInt(d)));
    return interpolate_integer(values);
}

IntPoly res_with_const_poly(const IntPoly& base, const IntPoly& dH) {
    int deg = dH.degree();
    std::vector<BigInt> values(static_cast<size_t>(deg + 1));
    for (int d = 0; d <= deg; ++d) values[static_cast<size_t>(d)] = resultant(base + IntPoly(BigInt(d)), dH);
    return interpolate_integer(values);
}

namespace {

/// translate so the x^(n-1) coefficient lands in (-n/2, n/2]; invariant
/// under integer translates of the input
IntPoly translate_norm(const IntPoly& F) {
    int n = F.degree();
    BigInt c = F.coeff(static_cast<size_t>(n - 1));
    BigInt r = c % n;
    if (r < 0) r += n;
    if (2 * r > n) r -= n;
    BigInt t = (c - r) / n;
    return F.shift_var(-t);
}

/// x -> -x kept monic (the minimal polynomial of the negated root)
IntPoly mirror_poly(const IntPoly& F) {
    int n = F.degree();
    std::vector<BigInt> mc = F.coeffs();
    for (int i = 0; i <= n; ++i)
        if ((n - i) % 2 == 1) mc[static_cast<size_t>(i)] = -mc[static_cast<size_t>(i)];
    return IntPoly::from_coeffs(std::move(mc));
}

} // namespace

IntPoly reduced_form(const IntPoly& F) {
    int n = F.degree();
    if (n < 1 || !F.is_monic()) fail(errc::precondition_failed, "reduced_form needs monic nonconstant");
    IntPoly f1 = translate_norm(F);
    IntPoly f2 = translate_norm(mirror_poly(f1));  // mirror may need its own translate
    return f1 < f2 ? f1 : f2;
}

bool fields_isomorphic(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) fail(errc::precondition_failed, "isomorphism test needs nonzero inputs");
    if (!f.is_monic() || !g.is_monic()) fail(errc::precondition_failed, "isomorphism test needs monic inputs");
    if (f.degree() != g.degree()) fail(errc::precondition_failed, "isomorphism test needs equal degrees");
    if (f.degree() < 1) fail(errc::precondition_failed, "isomorphism test needs degree >= 1");
    if (f == g) return true;
    if (f.degree() == 1) return true;
    return has_root_in(g, f);
}

namespace {

struct Survivor {
    std::uint64_t prefix;
    std::int32_t doff;
    std::int64_t absdisc;
};

struct ScanContext {
    Shape shape;
    std::vector<long long> bounds;  // per coordinate
    std::vector<long long> sizes;
    int m;       // coordinate count
    int nk;      // entries of the last block
    std::uint64_t prefix_count;
    long long last_bound;
};

std::vector<long long> decode_prefix(const ScanContext& ctx, std::uint64_t prefix) {
    std::vector<long long> coords(static_cast<size_t>(ctx.m - 1));
    for (size_t i = coords.size(); i-- > 0;) {
        std::uint64_t radix = static_cast<std::uint64_t>(ctx.sizes[i]);
        coords[i] = static_cast<long long>(prefix % radix) - ctx.bounds[i];
        prefix /= radix;
    }
    return coords;
}

std::vector<BigInt> survivor_alpha(const ScanContext& ctx, const Survivor& s) {
    std::vector<long long> coords = decode_prefix(ctx, s.prefix);
    std::vector<BigInt> alpha(static_cast<size_t>(ctx.m));
    for (size_t i = 0; i < coords.size(); ++i) alpha[i] = coords[i];
    alpha.back() = BigInt(s.doff - ctx.last_bound);
    return alpha;
}

/// |disc| of every point of one prefix row, appended to out when
/// 0 < |disc| <= xmax
void scan_prefix_row(const ScanContext& ctx, std::uint64_t prefix, const BigInt& xmax,
                     std::vector<Survivor>& out, std::vector<long long>& blockkey_cache,
                     IntPoly& dH_cache) {
    const Shape& s = ctx.shape;
    std::vector<long long> coords = decode_prefix(ctx, prefix);
    int k = s.k();
    long long m_exp = s.N(k - 1);  // exponent of |disc g_k|, = deg F_{k-1}

    // last block minus its constant term
    std::vector<BigInt> gk(static_cast<size_t>(ctx.nk + 1));
    gk[static_cast<size_t>(ctx.nk)] = 1;
    for (int v = 1; v < ctx.nk; ++v)
        gk[static_cast<size_t>(ctx.nk - v)] = coords[static_cast<size_t>(s.coord_index(k, v))];
    gk[0] = 0;
    IntPoly gk_base = IntPoly::from_coeffs(std::move(gk));

    IntPoly P1 = disc_const_poly(gk_base);
    IntPoly P2;
    if (k > 1) {
        // rebuild F_{k-1} and its shifted discriminant only when the block
        // prefix changes
        std::vector<long long> blockkey(coords.begin(), coords.begin() + (ctx.m - ctx.nk));
        if (blockkey != blockkey_cache) {
            blockkey_cache = blockkey;
            IntPoly Fprev = IntPoly::x();
            for (int u = 1; u < k; ++u) {
                int n = s.entry(u);
                std::vector<BigInt> c(static_cast<size_t>(n + 1));
                c[static_cast<size_t>(n)] = 1;
                for (int v = 1; v <= n; ++v)
                    c[static_cast<size_t>(n - v)] = coords[static_cast<size_t>(s.coord_index(u, v))];
                Fprev = compose(IntPoly::from_coeffs(std::move(c)), Fprev);
            }
            dH_cache = disc_shift_poly(Fprev);
        }
        P2 = res_with_const_poly(gk_base, dH_cache);
    }

    long long bd = ctx.last_bound;
    // int128 feasibility: bound each polynomial over |d| <= bd
    auto magnitude = [&](const IntPoly& P) {
        BigInt mag = 0, dp = 1;
        for (size_t i = 0; i < P.coeffs().size(); ++i) {
            mag += big_abs(P.coeffs()[i]) * dp;
            dp *= bd > 0 ? bd : 1;
        }
        return mag;
    };
    BigInt b1 = magnitude(P1);
    BigInt b2 = ctx.shape.k() > 1 ? magnitude(P2) : BigInt(1);
    BigInt lim62 = BigInt(1) << 62;
    bool fast = b1 < lim62 && b2 < lim62 &&
                bpow(b1, static_cast<unsigned long>(ctx.shape.k() > 1 ? m_exp : 1)) * b2 < (BigInt(1) << 119);

    if (fast) {
        using I = __int128;
        auto to128 = [](const BigInt& v) { return static_cast<I>(v.convert_to<long long>()); };
        std::vector<I> c1, c2;
        for (const auto& c : P1.coeffs()) c1.push_back(to128(c));
        if (ctx.shape.k() > 1)
            for (const auto& c : P2.coeffs()) c2.push_back(to128(c));
        I x128 = to128(xmax);
        for (long long d = -bd; d <= bd; ++d) {
            I v1 = 0;
            for (size_t i = c1.size(); i-- > 0;) v1 = v1 * d + c1[i];
            if (v1 < 0) v1 = -v1;
            if (v1 == 0) continue;
            I disc;
            if (ctx.shape.k() > 1) {
                I v2 = 0;
                for (size_t i = c2.size(); i-- > 0;) v2 = v2 * d + c2[i];
                if (v2 < 0) v2 = -v2;
                if (v2 == 0) continue;
                disc = v2;
                for (long long e = 0; e < m_exp; ++e) {
                    disc *= v1;
                    if (disc > x128) break;
                }
            } else {
                disc = v1;
            }
            if (disc > x128) continue;
            out.push_back({prefix, static_cast<std::int32_t>(d + bd), static_cast<std::int64_t>(disc)});
        }
    } else {
        for (long long d = -bd; d <= bd; ++d) {
            BigInt v1 = big_abs(P1.eval(BigInt(d)));
            if (v1 == 0) continue;
            BigInt disc;
            if (ctx.shape.k() > 1) {
                BigInt v2 = big_abs(P2.eval(BigInt(d)));
                if (v2 == 0) continue;
                disc = bpow(v1, static_cast<unsigned long>(m_exp)) * v2;
            } else {
                disc = v1;
            }
            if (disc == 0 || disc > xmax) continue;
            out.push_back({prefix, static_cast<std::int32_t>(d + bd), disc.convert_to<std::int64_t>()});
        }
    }
}

IntPoly poly_of_alpha(const Shape& s, const std::vector<BigInt>& alpha) {
    IntPoly F = IntPoly::x();
    for (int u = 1; u <= s.k(); ++u) {
        int n = s.entry(u);
        std::vector<BigInt> c(static_cast<size_t>(n + 1));
        c[static_cast<size_t>(n)] = 1;
        for (int v = 1; v <= n; ++v) c[static_cast<size_t>(n - v)] = alpha[static_cast<size_t>(s.coord_index(u, v))];
        F = compose(IntPoly::from_coeffs(std::move(c)), F);
    }
    return F;
}

/// mod-p factor patterns at the first `want` primes good for both inputs
bool patterns_match(const IntPoly& a, const BigInt& disc_a, std::map<long long, std::vector<int>>& cache_a,
                    const IntPoly& b, const BigInt& disc_b, std::map<long long, std::vector<int>>& cache_b,
                    int want) {
    int seen = 0;
    std::uint64_t p = 2;
    while (seen < want) {
        p = next_prime_above(p);
        if (disc_a % BigInt(p) == 0 || disc_b % BigInt(p) == 0) continue;
        auto ita = cache_a.find(static_cast<long long>(p));
        if (ita == cache_a.end())
            ita = cache_a.emplace(static_cast<long long>(p), factor_degrees_mod_p(a, p)).first;
        auto itb = cache_b.find(static_cast<long long>(p));
        if (itb == cache_b.end())
            itb = cache_b.emplace(static_cast<long long>(p), factor_degrees_mod_p(b, p)).first;
        if (ita->second != itb->second) return false;
        ++seen;
    }
    return true;
}

struct DedupClass {
    size_t first_index;  // survivor order
    IntPoly rep;
    IntPoly reduced;
    std::vector<BigInt> rep_alpha;
    BigInt disc_rep;      // |disc| of the representative (for prime goodness)
    BigInt min_disc;
    long long members = 0;
    std::map<long long, std::vector<int>> patterns;
};

} // namespace

CountResult run_count(const Shape& s, long long Y_max, const std::vector<BigInt>& X_grid,
                      const CountOptions& opt) {
    if (X_grid.empty()) fail(errc::precondition_failed, "empty X grid");
    BigInt xmax = *std::max_element(X_grid.begin(), X_grid.end());
    if (xmax >= BigInt(1) << 62) fail(errc::cap_exceeded, "X grid beyond the 62-bit scan range");

    BoxSpec box = make_box(s, BigRat(Y_max));
    CountResult result;
    result.box_points = box.count();
    if (result.box_points > opt.box_cap)
        fail(errc::cap_exceeded, "box size " + result.box_points.str() + " above cap " + opt.box_cap.str());

    ScanContext ctx{s, {}, {}, s.coord_count(), s.entry(s.k()), 0, 0};
    for (const auto& b : box.bounds) {
        ctx.bounds.push_back(b.convert_to<long long>());
        ctx.sizes.push_back(2 * ctx.bounds.back() + 1);
    }
    ctx.last_bound = ctx.bounds.back();
    std::uint64_t pc = 1;
    for (size_t i = 0; i + 1 < ctx.sizes.size(); ++i) pc *= static_cast<std::uint64_t>(ctx.sizes[i]);
    ctx.prefix_count = pc;

    // ---- phase 1: discriminant scan --------------------------------------
    size_t chunk_prefixes = 128;
    size_t nchunks = (pc + chunk_prefixes - 1) / chunk_prefixes;
    std::vector<std::vector<Survivor>> chunk_out(nchunks);
    parallel_chunks(pc, chunk_prefixes, opt.workers, [&](size_t ci, size_t lo, size_t hi) {
        std::vector<long long> blockkey_cache;
        IntPoly dH_cache;
        auto& out = chunk_out[ci];
        for (size_t p = lo; p < hi; ++p)
            scan_prefix_row(ctx, static_cast<std::uint64_t>(p), xmax, out, blockkey_cache, dH_cache);
    });
    std::vector<Survivor> survivors;
    for (auto& v : chunk_out) {
        survivors.insert(survivors.end(), v.begin(), v.end());
        v.clear();
        v.shrink_to_fit();
    }
    result.survivors = static_cast<long long>(survivors.size());
    if (result.survivors > opt.survivor_cap) fail(errc::cap_exceeded, "survivor count above cap");

    // ---- phase 2: drop reducible specializations -------------------------
    std::vector<std::uint8_t> irred(survivors.size(), 0);
    parallel_chunks(survivors.size(), 1024, opt.workers, [&](size_t, size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i) {
            IntPoly F = poly_of_alpha(s, survivor_alpha(ctx, survivors[i]));
            bool ok = irreducible_probe(F);
            if (!ok) {
                QFactorization qf = factor_over_Q(F);
                ok = qf.factors.size() == 1 && qf.factors[0].multiplicity == 1;
            }
            irred[i] = ok ? 1 : 0;
        }
    });
    std::vector<size_t> irred_idx;
    for (size_t i = 0; i < survivors.size(); ++i)
        if (irred[i]) irred_idx.push_back(i);
    result.irreducible = static_cast<long long>(irred_idx.size());

    // ---- phase 3: field-invariant kernels --------------------------------
    std::vector<BigInt> kernels(irred_idx.size());
    parallel_chunks(irred_idx.size(), 2048, opt.workers, [&](size_t, size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i) kernels[i] = squarefree_kernel(BigInt(survivors[irred_idx[i]].absdisc));
    });

    // ---- phase 4: isomorphism dedup inside kernel buckets ----------------
    std::map<BigInt, std::vector<size_t>> buckets;  // kernel -> positions into irred_idx
    for (size_t i = 0; i < irred_idx.size(); ++i) buckets[kernels[i]].push_back(i);
    std::vector<const std::vector<size_t>*> bucket_list;
    bucket_list.reserve(buckets.size());
    for (const auto& [key, vec] : buckets) bucket_list.push_back(&vec);

    std::vector<std::vector<DedupClass>> bucket_classes(bucket_list.size());
    parallel_chunks(bucket_list.size(), 16, opt.workers, [&](size_t, size_t lo, size_t hi) {
        for (size_t b = lo; b < hi; ++b) {
            auto& classes = bucket_classes[b];
            std::map<IntPoly, size_t> by_reduced;
            for (size_t pos : *bucket_list[b]) {
                const Survivor& sv = survivors[irred_idx[pos]];
                std::vector<BigInt> alpha = survivor_alpha(ctx, sv);
                IntPoly F = poly_of_alpha(s, alpha);
                BigInt disc(sv.absdisc);
                IntPoly red = reduced_form(F);
                auto hit = by_reduced.find(red);
                size_t home = SIZE_MAX;
                if (hit != by_reduced.end()) {
                    home = hit->second;
                } else {
                    std::map<long long, std::vector<int>> my_patterns;
                    for (size_t cidx = 0; cidx < classes.size(); ++cidx) {
                        DedupClass& c = classes[cidx];
                        if (!patterns_match(F, disc, my_patterns, c.rep, c.disc_rep, c.patterns, 5)) continue;
                        if (has_root_in(F, c.rep)) {
                            home = cidx;
                            break;
                        }
                    }
                }
                if (home == SIZE_MAX) {
                    DedupClass c;
                    c.first_index = irred_idx[pos];
                    c.rep = F;
                    c.reduced = red;
                    c.rep_alpha = std::move(alpha);
                    c.disc_rep = disc;
                    c.min_disc = disc;
                    c.members = 1;
                    by_reduced.emplace(std::move(red), classes.size());
                    classes.push_back(std::move(c));
                } else {
                    DedupClass& c = classes[home];
                    if (disc < c.min_disc) c.min_disc = disc;
                    ++c.members;
                    if (hit == by_reduced.end()) by_reduced.emplace(std::move(red), home);
                }
            }
        }
    });
    std::vector<DedupClass> classes;
    for (auto& v : bucket_classes) {
        for (auto& c : v) classes.push_back(std::move(c));
        v.clear();
    }
    result.classes = static_cast<long long>(classes.size());

    // ---- phase 5: certify one representative per class --------------------
    std::vector<std::uint8_t> keep(classes.size(), 0);
    parallel_chunks(classes.size(), 64, opt.workers, [&](size_t, size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i) {
            CompositeTower t = tower_from_alpha(s, classes[i].rep_alpha);
            CertificationResult r = certify_exact(t, opt.cert);
            keep[i] = r.verdict == Verdict::CertifiedEqual ? 1 : 0;
        }
    });

    std::map<BigInt, size_t> kernel_of_bucket;
    for (size_t i = 0; i < classes.size(); ++i) {
        if (!keep[i]) continue;
        FieldRecord rec;
        rec.poly = classes[i].rep;
        rec.kernel = squarefree_kernel(classes[i].min_disc);
        rec.min_abs_disc = classes[i].min_disc;
        rec.members = classes[i].members;
        rec.verdict = Verdict::CertifiedEqual;
        result.fields.push_back(std::move(rec));
    }
    result.certified_classes = static_cast<long long>(result.fields.size());

    if (opt.subfield_count) {
        std::vector<BigInt> partial(result.fields.size());
        parallel_chunks(result.fields.size(), 16, opt.workers, [&](size_t, size_t lo, size_t hi) {
            for (size_t i = lo; i < hi; ++i) {
                NormFactorization nf = norm_factorization(result.fields[i].poly, result.fields[i].poly);
                long long aut = 0;
                for (const auto& G : nf.factors)
                    if (G.degree() == result.fields[i].poly.degree()) ++aut;
                partial[i] = BigInt(s.leaf_count()) / aut;
            }
        });
        for (const auto& v : partial) result.subfield_total += v;
    }

    // ---- phase 6: the counting curve --------------------------------------
    std::vector<BigInt> sorted_x = X_grid;
    std::sort(sorted_x.begin(), sorted_x.end());
    for (const auto& X : sorted_x) {
        CountPoint pt;
        pt.X = X;
        bool first = true;
        for (const auto& f : result.fields) {
            if (f.min_abs_disc > X) continue;
            ++pt.n_fields;
            if (first || f.min_abs_disc < pt.min_disc) pt.min_disc = f.min_abs_disc;
            if (first || f.min_abs_disc > pt.max_disc) pt.max_disc = f.min_abs_disc;
            first = false;
        }
        result.curve.points.push_back(std::move(pt));
    }
    return result;
}

std::vector<DensityRow> run_density(const Shape& s, const std::vector<BigRat>& Y_grid, CertMode mode,
                                    const DensityOptions& opt) {
    std::vector<DensityRow> rows;
    for (const auto& Y : Y_grid) rows.push_back({Y, density_estimate(s, Y, mode, opt)});
    return rows;
}

std::string density_csv(const std::vector<DensityRow>& rows) {
    std::string out = "Y,box_size,n_certified,fraction,sample_size,wilson_lo,wilson_hi\n";
    for (const auto& row : rows) {
        out += rat_str(row.Y) + "," + row.res.box_size.str() + "," + std::to_string(row.res.certified) + "," +
               fmt_double(row.res.fraction) + "," + std::to_string(row.res.examined) + "," +
               fmt_double(row.res.wilson_lo) + "," + fmt_double(row.res.wilson_hi) + "\n";
    }
    return out;
}

std::string count_csv(const CountCurve& curve) {
    std::string out = "X,n_fields,min_disc,max_disc\n";
    for (const auto& p : curve.points)
        out += p.X.str() + "," + std::to_string(p.n_fields) + "," + p.min_disc.str() + "," +
               p.max_disc.str() + "\n";
    return out;
}

SlopeReport run_slope_report(const CountCurve& curve, const Shape& s, double tolerance) {
    std::vector<std::pair<double, double>> nonzero;  // (log10 X, log10 n)
    BigInt xmax = 0;
    for (const auto& p : curve.points) {
        if (p.n_fields <= 0) continue;
        nonzero.emplace_back(std::log10(to_double(p.X)), std::log10(static_cast<double>(p.n_fields)));
        if (p.X > xmax) xmax = p.X;
    }
    if (nonzero.size() < 5) fail(errc::insufficient_data, "need >= 5 grid points with nonzero counts");
    double span = nonzero.back().first - nonzero.front().first;
    if (span < 1.0) fail(errc::insufficient_data, "grid must span at least one decade");

    // least squares over the top decade
    double top = std::log10(to_double(xmax));
    std::vector<std::pair<double, double>> fitpts;
    for (const auto& q : nonzero)
        if (q.first >= top - 1.0 - 1e-12) fitpts.push_back(q);
    if (fitpts.size() < 2) fail(errc::insufficient_data, "top decade has fewer than 2 usable points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : fitpts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double n = static_cast<double>(fitpts.size());
    double denom = n * sxx - sx * sx;
    if (std::abs(denom) < 1e-12) fail(errc::insufficient_data, "degenerate abscissas in the top decade");

    SlopeReport rep;
    rep.slope = (n * sxy - sx * sy) / denom;
    rep.points_used = static_cast<int>(fitpts.size());
    rep.exponent = theorem_A_exponent(s);
    rep.tolerance = tolerance;
    if (s.all_equal() && s.k() >= 2) {
        rep.has_power_form = true;
        rep.delta = delta_nk(s.entry(1), s.k());
        rep.beta = ptw_beta(s.entry(1), s.k());
    }
    rep.pass = rep.slope >= to_double(rep.exponent) - tolerance;
    return rep;
}

} // namespace wreathcount
