#pragma once

#include <map>
#include <vector>

#include "wreathcount/intpoly.hpp"

namespace wreathcount {

/// Sparse multivariate polynomial over Z. Variable 0 is x; variables
/// 1..nvars-1 are the generic coefficients in a fixed order. The variable
/// count is pinned at construction.
class MultiPoly {
public:
    using Exponents = std::vector<unsigned short>;

    explicit MultiPoly(int nvars) : nvars_(nvars) {}
    static MultiPoly constant(int nvars, const BigInt& c);
    static MultiPoly variable(int nvars, int var);
    static MultiPoly term(int nvars, Exponents e, const BigInt& c);

    int nvars() const { return nvars_; }
    size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, BigInt>& terms() const { return terms_; }

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    /// multiplication with a term-count cap; errors with SizeCapExceeded
    MultiPoly mul(const MultiPoly& o, size_t term_cap) const;
    MultiPoly pow(int e, size_t term_cap) const;

    int degree_in(int var) const;
    /// max total degree over the variables >= 1 (the generic coefficients)
    int total_degree_coeff_vars() const;

    /// substitute variables 1.. with integers; x survives
    IntPoly substitute(const std::vector<BigInt>& values) const;

    bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

private:
    void add_term(const Exponents& e, const BigInt& c);
    int nvars_;
    std::map<Exponents, BigInt> terms_;
};

/// f(x <- g): substitute g for variable 0 of f (Horner over the x-degree)
MultiPoly multi_compose(const MultiPoly& f, const MultiPoly& g, size_t term_cap);

} // namespace wreathcount
