// wreathcount: exact arithmetic for iterated wreath-composite polynomials,
// Galois certification, and desk-scale field-counting experiments.

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wreathcount/config.hpp"
#include "wreathcount/heights.hpp"
#include "wreathcount/selftest.hpp"

using json = nlohmann::json;
using namespace wreathcount;

namespace {

/// big integers render as JSON numbers while they are exactly representable
json big_json(const BigInt& v) {
    if (v >= 0 && v <= BigInt((std::uint64_t(1) << 53))) return json(v.convert_to<std::uint64_t>());
    if (v < 0 && -v <= BigInt((std::uint64_t(1) << 53))) return json(v.convert_to<std::int64_t>());
    return json(v.str());
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(part);
    return out;
}

std::vector<BigInt> parse_alpha(const std::string& s) {
    std::vector<BigInt> out;
    for (const auto& p : split_csv(s)) out.emplace_back(p);
    return out;
}

/// exact integer from "123", "1e3", "2.5e3" (must come out integral)
BigInt parse_grid_value(const std::string& s) {
    size_t epos = s.find_first_of("eE");
    std::string mant = epos == std::string::npos ? s : s.substr(0, epos);
    long long ex = epos == std::string::npos ? 0 : std::stoll(s.substr(epos + 1));
    size_t dot = mant.find('.');
    std::string digits = mant;
    if (dot != std::string::npos) {
        digits = mant.substr(0, dot) + mant.substr(dot + 1);
        ex -= static_cast<long long>(mant.size() - dot - 1);
    }
    if (digits.empty() || digits == "-" || digits == "+") fail(errc::usage_error, "bad grid value " + s);
    BigInt v(digits);
    if (ex > 0) v *= bpow(BigInt(10), static_cast<unsigned long>(ex));
    if (ex < 0) {
        BigInt d = bpow(BigInt(10), static_cast<unsigned long>(-ex));
        if (v % d != 0) fail(errc::usage_error, "grid value " + s + " is not an integer");
        v /= d;
    }
    return v;
}

BigRat parse_rational(const std::string& s) {
    size_t slash = s.find('/');
    if (slash == std::string::npos) return BigRat(parse_grid_value(s));
    return BigRat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

/// data sink: "-" streams to stdout
struct OutFile {
    explicit OutFile(const std::string& path) {
        if (path != "-") {
            file.open(path);
            if (!file) fail(errc::usage_error, "cannot open output file " + path);
        }
    }
    std::ostream& os() { return file.is_open() ? file : std::cout; }
    std::ofstream file;
};

json shape_json(const Shape& s) {
    json a = json::array();
    for (int v : s.entries()) a.push_back(v);
    return a;
}

std::string verdict_string(Verdict v) { return verdict_name(v); }

int cmd_invariants(const Shape& shape, const Config& cfg) {
    json out;
    out["shape"] = shape_json(shape);
    out["order"] = big_json(shape.group_order());
    AInvariantResult a = a_invariant(shape, shape.group_order() <= cfg.enumeration_cap, cfg.enumeration_cap);
    out["a"] = rat_str(a.value);
    out["min_index"] = a.min_index;
    out["a_by_enumeration"] = a.by_enumeration;
    BInvariantResult b = b_invariant_Q(shape, cfg.enumeration_cap);
    out["b_Q"] = b.b_q;
    out["class_count"] = b.class_count;
    json dist;
    for (const auto& [type, count] : cycle_type_distribution(shape, cfg.enumeration_cap))
        dist[type.to_string()] = count;
    out["cycle_type_distribution"] = dist;
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_exponents(const Shape& shape) {
    json out;
    out["shape"] = shape_json(shape);
    out["A"] = rat_str(exponent_A(shape));
    out["B"] = rat_str(exponent_B(shape));
    out["N"] = shape.leaf_count();
    out["thmA_exponent"] = rat_str(theorem_A_exponent(shape));
    if (shape.all_equal() && shape.k() >= 2) {
        out["delta"] = rat_str(delta_nk(shape.entry(1), shape.k()));
        out["ptw_beta"] = rat_str(ptw_beta(shape.entry(1), shape.k()));
    } else {
        out["delta"] = nullptr;
        out["ptw_beta"] = nullptr;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_compose(const Shape& shape, const std::string& alpha_csv, const Config& cfg) {
    Specialization a(shape, parse_alpha(alpha_csv));
    GenericComposite g = build_generic(shape, cfg.term_cap);
    CompositeTower t = specialize(g, a);
    json out;
    out["shape"] = shape_json(shape);
    json av = json::array();
    for (const auto& v : t.alpha) av.push_back(big_json(v));
    out["alpha"] = av;
    json blocks = json::array(), F = json::array(), Q = json::array(), psi2 = json::array();
    for (const auto& b : t.blocks) blocks.push_back(b.to_string());
    for (int j = 1; j <= shape.k(); ++j) F.push_back(t.F_lower(j).to_string());
    for (int j = 0; j <= shape.k(); ++j) Q.push_back(t.Q(j).to_string());
    for (const auto& c : t.psi2) psi2.push_back(big_json(c));
    out["blocks"] = blocks;
    out["F"] = F;
    out["Q"] = Q;
    out["psi2"] = psi2;
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_certify(const Shape& shape, const std::string& alpha_csv, const std::string& mode, const Config& cfg) {
    CompositeTower t = tower_from_alpha(shape, parse_alpha(alpha_csv));
    CertMode m = mode == "exact" ? CertMode::Exact : CertMode::Statistical;
    if (mode != "exact" && mode != "stat") fail(errc::usage_error, "mode must be exact or stat");
    CertificationResult r = certify(t, m, cfg.certify_options());
    json out;
    out["shape"] = shape_json(shape);
    out["F"] = t.F().to_string();
    out["mode"] = mode;
    out["verdict"] = verdict_string(r.verdict);
    out["irreducible"] = r.irreducible;
    out["expected_order"] = big_json(r.expected_order);
    out["stage"] = r.stage;
    if (r.splitting_degree >= 0)
        out["splitting_degree"] = r.splitting_degree;
    else
        out["splitting_degree"] = nullptr;
    if (m == CertMode::Statistical && r.stage == "chebotarev") {
        out["sample_size"] = r.sample_size;
        out["tv_distance"] = r.tv_distance;
    } else {
        out["sample_size"] = nullptr;
        out["tv_distance"] = nullptr;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_frobenius(const Shape& shape, const std::string& alpha_csv, long long primes_up_to,
                  const std::string& out_path) {
    CompositeTower t = tower_from_alpha(shape, parse_alpha(alpha_csv));
    std::vector<long long> primes;
    for (std::uint64_t p = 2; p <= static_cast<std::uint64_t>(primes_up_to); p = next_prime_above(p))
        primes.push_back(static_cast<long long>(p));
    FrobeniusSample fs = frobenius_sample(t, primes);
    OutFile out(out_path);
    out.os() << "p,leaf_type";
    for (int j = 1; j < shape.k(); ++j) out.os() << ",Q" << j << "_type";
    out.os() << "\n";
    for (const auto& rec : fs.records) {
        out.os() << rec.p << "," << rec.leaf.to_string();
        for (const auto& lvl : rec.levels) out.os() << "," << lvl.to_string();
        out.os() << "\n";
    }
    return 0;
}

int cmd_boxstats(const Shape& shape, const std::string& y_csv, int samples, const Config& cfg,
                 const std::string& out_path) {
    OutFile out(out_path);
    out.os() << "Y,count,measured_C1,measured_C2\n";
    for (const auto& ys : split_csv(y_csv)) {
        BigRat Y = parse_rational(ys);
        BoxSpec box = make_box(shape, Y);
        BoxConstants c = measure_box_constants(shape, Y, samples, cfg.seed);
        out.os() << rat_str(Y) << "," << box.count().str() << "," << fmt_double(c.C1) << ","
                 << fmt_double(c.C2) << "\n";
    }
    return 0;
}

int cmd_density(const Shape& shape, const std::string& y_csv, const std::string& mode, const Config& cfg,
                const std::string& out_path) {
    if (mode != "exact" && mode != "stat") fail(errc::usage_error, "mode must be exact or stat");
    std::vector<BigRat> ys;
    for (const auto& s : split_csv(y_csv)) ys.push_back(parse_rational(s));
    auto rows = run_density(shape, ys, mode == "exact" ? CertMode::Exact : CertMode::Statistical,
                            cfg.density_options());
    OutFile out(out_path);
    out.os() << density_csv(rows);
    return 0;
}

int cmd_count(const Shape& shape, long long ymax, const std::string& xgrid_csv, bool subfields,
              const Config& cfg, const std::string& out_path) {
    std::vector<BigInt> grid;
    for (const auto& s : split_csv(xgrid_csv)) grid.push_back(parse_grid_value(s));
    CountOptions opt = cfg.count_options();
    opt.subfield_count = subfields;
    CountResult r = run_count(shape, ymax, grid, opt);
    OutFile out(out_path);
    out.os() << count_csv(r.curve);
    json summary;
    summary["shape"] = shape_json(shape);
    summary["Y_max"] = ymax;
    summary["box_points"] = big_json(r.box_points);
    summary["survivors"] = r.survivors;
    summary["irreducible"] = r.irreducible;
    summary["classes"] = r.classes;
    summary["certified_classes"] = r.certified_classes;
    summary["subfield_count"] = subfields ? big_json(r.subfield_total) : json(nullptr);
    std::cout << summary.dump(2) << "\n";
    return 0;
}

int cmd_report(const std::string& in_path, const Shape& shape, double tolerance) {
    std::ifstream in(in_path);
    if (!in) fail(errc::usage_error, "cannot open " + in_path);
    std::string line;
    CountCurve curve;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        auto parts = split_csv(line);
        if (parts.size() < 2) fail(errc::usage_error, "bad CSV row: " + line);
        CountPoint p;
        p.X = parse_grid_value(parts[0]);
        p.n_fields = std::stoll(parts[1]);
        curve.points.push_back(std::move(p));
    }
    SlopeReport rep = run_slope_report(curve, shape, tolerance);
    json out;
    out["shape"] = shape_json(shape);
    out["slope"] = rep.slope;
    out["points_used"] = rep.points_used;
    out["thmA_exponent"] = rat_str(rep.exponent);
    out["thmA_exponent_float"] = to_double(rep.exponent);
    out["delta"] = rep.has_power_form ? json(rat_str(rep.delta)) : json(nullptr);
    out["ptw_beta"] = rep.has_power_form ? json(rat_str(rep.beta)) : json(nullptr);
    out["tolerance"] = rep.tolerance;
    out["verdict"] = rep.pass ? "pass" : "fail";
    std::cout << out.dump(2) << "\n";
    return rep.pass ? 0 : 1;
}

int cmd_selftest(bool quick, const std::string& inject, const Config& cfg) {
    SelftestResult r = run_selftest(quick, cfg, inject);
    for (const auto& c : r.checks)
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : "  [" + c.detail + "]")
                  << "\n";
    std::cout << (r.all_pass ? "selftest: all checks passed" : "selftest: FAILURES above") << "\n";
    return r.all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact wreath-composite polynomial machinery and counting experiments"};
    app.require_subcommand(1);

    std::string config_path, shape_str = "2,2", alpha_csv, mode = "exact", out_path = "-";
    std::string y_csv = "1,2,4", xgrid_csv = "1e3,1e4,1e5,1e6,1e7", in_path;
    long long primes_up_to = 100, ymax = 6;
    int samples = 200;
    double tolerance = 0.05;
    bool quick = false, subfields = false;
    std::string inject;

    // global knobs (every subcommand honors them)
    std::map<std::string, std::string> raw_cfg;
    app.add_option("--workers", raw_cfg["workers"], "worker threads (0 = hardware)");
    app.add_option("--seed", raw_cfg["seed"], "deterministic seed");
    app.add_option("--enumeration-cap", raw_cfg["enumeration_cap"], "group enumeration cap");
    app.add_option("--splitting-cap", raw_cfg["splitting_cap"], "splitting-degree cap");
    app.add_option("--box-cap", raw_cfg["box_cap"], "box enumeration cap");
    app.add_option("--term-cap", raw_cfg["term_cap"], "symbolic term cap");
    app.add_option("--stat-primes", raw_cfg["stat_primes"], "primes per statistical certification");
    app.add_option("--tau", raw_cfg["tau"], "total-variation threshold");
    app.add_option("--density-threshold", raw_cfg["density_threshold"], "exhaustive density threshold");
    app.add_option("--density-sample", raw_cfg["density_sample"], "density sample size");
    std::string config_file;
    app.add_option("--config-file", config_file, "flat key=value configuration file");

    auto* inv = app.add_subcommand("invariants", "group order, Malle a and b_Q, class data");
    inv->add_option("--shape", shape_str)->required();

    auto* exps = app.add_subcommand("exponents", "exact exponent formulas for a shape");
    exps->add_option("--shape", shape_str)->required();

    auto* comp = app.add_subcommand("compose", "specialize the generic composite");
    comp->add_option("--shape", shape_str)->required();
    comp->add_option("--alpha", alpha_csv)->required();

    auto* cert = app.add_subcommand("certify", "certify the Galois group of a specialization");
    cert->add_option("--shape", shape_str)->required();
    cert->add_option("--alpha", alpha_csv)->required();
    cert->add_option("--mode", mode, "exact|stat");

    auto* frob = app.add_subcommand("frobenius", "factorization types at good primes");
    frob->add_option("--shape", shape_str)->required();
    frob->add_option("--alpha", alpha_csv)->required();
    frob->add_option("--primes-up-to", primes_up_to);
    frob->add_option("--out", out_path);

    auto* bst = app.add_subcommand("boxstats", "coefficient box sizes and measured height constants");
    bst->add_option("--shape", shape_str)->required();
    bst->add_option("--Y", y_csv)->required();
    bst->add_option("--samples", samples);
    bst->add_option("--out", out_path);

    auto* dens = app.add_subcommand("density", "certified fraction over coefficient boxes");
    dens->add_option("--shape", shape_str)->required();
    dens->add_option("--ygrid", y_csv)->required();
    dens->add_option("--mode", mode, "exact|stat");
    dens->add_option("--out", out_path);

    auto* cnt = app.add_subcommand("count", "field counting with isomorphism dedup");
    cnt->add_option("--shape", shape_str)->required();
    cnt->add_option("--ymax", ymax)->required();
    cnt->add_option("--xgrid", xgrid_csv);
    cnt->add_flag("--subfield-count", subfields, "also count conjugate subfields");
    cnt->add_option("--out", out_path);

    auto* rep = app.add_subcommand("report", "slope fit against the theorem exponent");
    rep->add_option("--in", in_path)->required();
    rep->add_option("--shape", shape_str)->required();
    rep->add_option("--tolerance", tolerance);

    auto* st = app.add_subcommand("selftest", "module invariant battery");
    st->add_flag("--quick", quick);
    st->add_option("--inject-fault", inject)->group("");  // testing hook

    for (auto* sub : app.get_subcommands({})) sub->fallthrough(true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints to stderr/stdout per CLI11
        return code == 0 ? 0 : 2;
    }

    try {
        Config cfg;
        if (!config_file.empty()) cfg = load_config_file(config_file);
        for (const auto& [k, v] : raw_cfg)
            if (!v.empty()) apply_config_kv(cfg, k, v);

        Shape shape = Shape::parse(shape_str);
        if (inv->parsed()) return cmd_invariants(shape, cfg);
        if (exps->parsed()) return cmd_exponents(shape);
        if (comp->parsed()) return cmd_compose(shape, alpha_csv, cfg);
        if (cert->parsed()) return cmd_certify(shape, alpha_csv, mode, cfg);
        if (frob->parsed()) return cmd_frobenius(shape, alpha_csv, primes_up_to, out_path);
        if (bst->parsed()) return cmd_boxstats(shape, y_csv, samples, cfg, out_path);
        if (dens->parsed()) return cmd_density(shape, y_csv, mode, cfg, out_path);
        if (cnt->parsed()) return cmd_count(shape, ymax, xgrid_csv, subfields, cfg, out_path);
        if (rep->parsed()) return cmd_report(in_path, shape, tolerance);
        if (st->parsed()) return cmd_selftest(quick, inject, cfg);
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == errc::usage_error ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
