#pragma once

#include <stdexcept>
#include <string>

namespace wreathcount {

enum class errc {
    not_prime,
    leading_coeff_vanishes,
    zero_polynomial,
    not_monic,
    not_squarefree,
    cap_exceeded,
    size_cap_exceeded,
    shape_mismatch,
    inconsistent_tower,
    all_primes_bad,
    precondition_failed,
    root_find_failure,
    insufficient_data,
    usage_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::not_prime: return "NotPrime";
        case errc::leading_coeff_vanishes: return "LeadingCoeffVanishes";
        case errc::zero_polynomial: return "ZeroPolynomial";
        case errc::not_monic: return "NotMonic";
        case errc::not_squarefree: return "NotSquarefree";
        case errc::cap_exceeded: return "CapExceeded";
        case errc::size_cap_exceeded: return "SizeCapExceeded";
        case errc::shape_mismatch: return "ShapeMismatch";
        case errc::inconsistent_tower: return "InconsistentTower";
        case errc::all_primes_bad: return "AllPrimesBad";
        case errc::precondition_failed: return "PreconditionFailed";
        case errc::root_find_failure: return "RootFindFailure";
        case errc::insufficient_data: return "InsufficientData";
        case errc::usage_error: return "UsageError";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& detail) { throw error(code, detail); }

} // namespace wreathcount
