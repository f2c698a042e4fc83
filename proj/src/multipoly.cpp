#include "wreathcount/multipoly.hpp"

namespace wreathcount {

MultiPoly MultiPoly::constant(int nvars, const BigInt& c) {
    MultiPoly r(nvars);
    if (c != 0) r.terms_[Exponents(static_cast<size_t>(nvars), 0)] = c;
    return r;
}

MultiPoly MultiPoly::variable(int nvars, int var) {
    MultiPoly r(nvars);
    Exponents e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(var)] = 1;
    r.terms_[std::move(e)] = 1;
    return r;
}

MultiPoly MultiPoly::term(int nvars, Exponents e, const BigInt& c) {
    MultiPoly r(nvars);
    if (c != 0) r.terms_[std::move(e)] = c;
    return r;
}

void MultiPoly::add_term(const Exponents& e, const BigInt& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::mul(const MultiPoly& o, size_t term_cap) const {
    MultiPoly r(nvars_);
    Exponents sum(static_cast<size_t>(nvars_));
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (size_t i = 0; i < sum.size(); ++i)
                sum[i] = static_cast<unsigned short>(ea[i] + eb[i]);
            r.add_term(sum, ca * cb);
            if (r.terms_.size() > term_cap)
                fail(errc::size_cap_exceeded,
                     "symbolic expansion above " + std::to_string(term_cap) + " terms");
        }
    }
    return r;
}

MultiPoly MultiPoly::pow(int e, size_t term_cap) const {
    MultiPoly r = constant(nvars_, 1);
    for (int i = 0; i < e; ++i) r = r.mul(*this, term_cap);
    return r;
}

int MultiPoly::degree_in(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[static_cast<size_t>(var)]));
    return d;
}

int MultiPoly::total_degree_coeff_vars() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (size_t i = 1; i < e.size(); ++i) t += e[i];
        d = std::max(d, t);
    }
    return d;
}

IntPoly MultiPoly::substitute(const std::vector<BigInt>& values) const {
    if (values.size() + 1 != static_cast<size_t>(nvars_))
        fail(errc::shape_mismatch, "substitution value count");
    std::vector<BigInt> out(static_cast<size_t>(degree_in(0)) + 1, BigInt(0));
    for (const auto& [e, c] : terms_) {
        BigInt v = c;
        for (size_t i = 1; i < e.size(); ++i)
            if (e[i] != 0) v *= bpow(values[i - 1], e[i]);
        out[e[0]] += v;
    }
    return IntPoly::from_coeffs(std::move(out));
}

MultiPoly multi_compose(const MultiPoly& f, const MultiPoly& g, size_t term_cap) {
    // stratify f by the x-exponent, then Horner in g
    int dx = f.degree_in(0);
    std::vector<MultiPoly> strata(static_cast<size_t>(dx) + 1, MultiPoly(f.nvars()));
    for (const auto& [e, c] : f.terms()) {
        MultiPoly::Exponents e0 = e;
        unsigned short d = e0[0];
        e0[0] = 0;
        strata[d] = strata[d] + MultiPoly::term(f.nvars(), std::move(e0), c);
    }
    MultiPoly acc(f.nvars());
    for (size_t i = strata.size(); i-- > 0;) acc = acc.mul(g, term_cap) + strata[i];
    return acc;
}

} // namespace wreathcount
