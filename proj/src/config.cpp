#include "wreathcount/config.hpp"

#include <fstream>

namespace wreathcount {

CertifyOptions Config::certify_options() const {
    CertifyOptions c;
    c.splitting_cap = splitting_cap;
    c.stat_primes = stat_primes;
    c.tau = tau;
    c.enumeration_cap = enumeration_cap;
    return c;
}

DensityOptions Config::density_options() const {
    DensityOptions d;
    d.exhaustive_threshold = density_threshold;
    d.sample = density_sample;
    d.seed = seed;
    d.workers = workers;
    d.cert = certify_options();
    return d;
}

CountOptions Config::count_options() const {
    CountOptions c;
    c.box_cap = box_cap;
    c.survivor_cap = survivor_cap;
    c.workers = workers;
    c.cert = certify_options();
    return c;
}

void apply_config_kv(Config& cfg, const std::string& key, const std::string& value) {
    try {
        if (key == "enumeration_cap") cfg.enumeration_cap = std::stoll(value);
        else if (key == "splitting_cap") cfg.splitting_cap = std::stoll(value);
        else if (key == "box_cap") cfg.box_cap = std::stoll(value);
        else if (key == "survivor_cap") cfg.survivor_cap = std::stoll(value);
        else if (key == "term_cap") cfg.term_cap = static_cast<std::size_t>(std::stoull(value));
        else if (key == "stat_primes") cfg.stat_primes = std::stoi(value);
        else if (key == "tau") cfg.tau = std::stod(value);
        else if (key == "density_threshold") cfg.density_threshold = std::stoll(value);
        else if (key == "density_sample") cfg.density_sample = std::stoi(value);
        else if (key == "seed") cfg.seed = std::stoull(value);
        else if (key == "workers") cfg.workers = std::stoi(value);
        else fail(errc::usage_error, "unknown config key '" + key + "'");
    } catch (const error&) {
        throw;
    } catch (const std::exception&) {
        fail(errc::usage_error, "bad value for config key '" + key + "': " + value);
    }
    if (cfg.tau <= 0 || cfg.tau >= 1) fail(errc::usage_error, "tau must lie in (0,1)");
    if (cfg.enumeration_cap <= 0 || cfg.splitting_cap <= 0 || cfg.box_cap <= 0)
        fail(errc::usage_error, "caps must be positive");
}

Config load_config_file(const std::string& path, Config base) {
    std::ifstream in(path);
    if (!in) fail(errc::usage_error, "cannot open config file " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t a = line.find_first_not_of(" \t");
        if (a == std::string::npos || line[a] == '#') continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            fail(errc::usage_error, "config line " + std::to_string(lineno) + " is not key=value");
        auto strip = [](std::string s) {
            size_t x = s.find_first_not_of(" \t");
            size_t y = s.find_last_not_of(" \t\r");
            return x == std::string::npos ? std::string{} : s.substr(x, y - x + 1);
        };
        apply_config_kv(base, strip(line.substr(0, eq)), strip(line.substr(eq + 1)));
    }
    return base;
}

} // namespace wreathcount
