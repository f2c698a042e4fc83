#pragma once

#include <string>
#include <vector>

#include "wreathcount/intpoly.hpp"
#include "wreathcount/multipoly.hpp"
#include "wreathcount/wreath.hpp"

namespace wreathcount {

/// Integer point for the generic coefficients, indexed like the shape's
/// coordinates: (u, v) with u the level and v the position in block u.
struct Specialization {
    Shape shape;
    std::vector<BigInt> values;  // size = shape.coord_count()

    Specialization(Shape s, std::vector<BigInt> vals);
    const BigInt& at(int u, int v) const { return values[static_cast<size_t>(shape.coord_index(u, v))]; }
};

/// The symbolic composite F_j = g_1 wr ... wr g_j with generic blocks
/// g_u = x^{n_u} + sum_v T_{u,v} x^{n_u - v}. Variable 0 is x, variable
/// 1 + coord_index(u, v) is T_{u,v}.
struct GenericComposite {
    Shape shape;
    std::vector<MultiPoly> blocks;  // g_1..g_k
    std::vector<MultiPoly> F;      // F_1..F_k

    const MultiPoly& top() const { return F.back(); }
};

GenericComposite build_generic(const Shape& s, size_t term_cap);

/// Specialized tower: blocks, lower composites F_j = g_j o ... o g_1
/// (F_0 = x), upper composites Q_j = g_k o ... o g_{j+1} (Q_k = x, Q_0 = F),
/// and the constant vector (F_1(0), ..., F_{k-1}(0)).
struct CompositeTower {
    Shape shape;
    std::vector<BigInt> alpha;
    std::vector<IntPoly> blocks;  // g_1..g_k
    std::vector<IntPoly> lower;   // F_0..F_k
    std::vector<IntPoly> upper;   // Q_0..Q_k
    std::vector<BigInt> psi2;     // F_1(0)..F_{k-1}(0)

    const IntPoly& F() const { return lower.back(); }
    const IntPoly& Q(int j) const { return upper[static_cast<size_t>(j)]; }
    const IntPoly& F_lower(int j) const { return lower[static_cast<size_t>(j)]; }
};

/// direct tower construction from coefficients (no symbolic expansion)
CompositeTower tower_from_alpha(const Shape& s, std::vector<BigInt> alpha);

/// specialize T_{u,v} -> alpha_{u,v}; validates against the symbolic F_j
CompositeTower specialize(const GenericComposite& g, const Specialization& a);

/// Tower of the k-th iterate: blocks all equal to f, with the final block
/// shifted so the top polynomial is f^(o k)(x) - t. f monic, deg f >= 2.
CompositeTower iterate(const IntPoly& f, int k, const BigInt& t);

/// Constructive inverse of the tower map: recover alpha from the list
/// (F_1, ..., F_k) by repeated base-F_{j-1} expansion.
/// Errors: InconsistentTower.
Specialization recover_alpha(const std::vector<IntPoly>& lowers);

/// Injectivity surrogate of the paper's field-tower map: the defining
/// polynomial, the upper composites cutting out the level fields, and the
/// constant terms.
struct PsiImage {
    IntPoly F;
    std::vector<IntPoly> levels;  // Q_1..Q_{k-1}
    std::vector<BigInt> psi2;

    std::string canonical() const;  // injective serialization
};

PsiImage psi_prime(const CompositeTower& t);

/// F_j(x) - Z with Z a formal constant standing for the level element z_j;
/// the minimal polynomial of the tower root over the level-j field.
struct LevelMinPoly {
    int level;
    IntPoly base;  // meaning: base(x) - Z
    IntPoly with_constant(const BigInt& z) const { return base - IntPoly(z); }
};

LevelMinPoly min_poly_over_level(const CompositeTower& t, int j);

} // namespace wreathcount
