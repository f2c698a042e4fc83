#pragma once

#include <cstdint>
#include <string>

#include "wreathcount/galois.hpp"
#include "wreathcount/harness.hpp"

namespace wreathcount {

/// Runtime caps and statistical parameters. Flat key=value config file;
/// command-line flags override file values.
struct Config {
    long long enumeration_cap = 1000000;
    long long splitting_cap = 200;
    long long box_cap = 250000000;
    long long survivor_cap = 50000000;
    std::size_t term_cap = 1000000;
    int stat_primes = 64;
    double tau = 0.25;
    long long density_threshold = 20000;  // exhaustive below, sampled above
    int density_sample = 4000;
    std::uint64_t seed = 20240613;
    int workers = 0;  // 0 = available parallelism

    CertifyOptions certify_options() const;
    DensityOptions density_options() const;
    CountOptions count_options() const;
};

/// Errors: UsageError on malformed lines or unknown keys.
Config load_config_file(const std::string& path, Config base = {});
void apply_config_kv(Config& cfg, const std::string& key, const std::string& value);

} // namespace wreathcount
