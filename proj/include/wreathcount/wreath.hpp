#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wreathcount/errors.hpp"
#include "wreathcount/numeric.hpp"

namespace wreathcount {

/// Branching vector (n_1, ..., n_k), entries >= 2, together with its
/// derived quantities. Level 1 is the leaf level: a node at height h has
/// n_h children, so the leaves sit in sibling blocks of size n_1.
class Shape {
public:
    explicit Shape(std::vector<int> entries);
    static Shape parse(const std::string& csv);  // "2,2"

    int k() const { return static_cast<int>(n_.size()); }
    int entry(int u) const { return n_[static_cast<size_t>(u - 1)]; }  // 1-based
    const std::vector<int>& entries() const { return n_; }

    /// N_j = n_1 ... n_j, N_0 = 1
    long long N(int j) const { return Nj_[static_cast<size_t>(j)]; }
    long long leaf_count() const { return Nj_.back(); }
    /// D_1 = 1, D_j = n_2 ... n_j
    long long D(int j) const;
    /// number of coefficient coordinates, sum n_u
    int coord_count() const { return m_; }
    /// flat index of the coordinate (u, v), u,v 1-based, v in [1, n_u]
    int coord_index(int u, int v) const;

    BigInt group_order() const;  // |S(n)| = prod (n_h!)^(N/N_h)
    BigRat A() const;            // sum_j ((n_j+1)/2) N_j
    BigRat B() const;            // A - sum_{j<k} N_j

    std::string to_string() const;
    bool operator==(const Shape& o) const { return n_ == o.n_; }
    bool all_equal() const;

private:
    std::vector<int> n_;
    std::vector<long long> Nj_;
    int m_ = 0;
};

/// partition of N: cycle lengths sorted descending
struct CycleType {
    std::vector<int> parts;
    bool operator==(const CycleType& o) const { return parts == o.parts; }
    bool operator<(const CycleType& o) const { return parts < o.parts; }
    std::string to_string() const;  // "2+1+1"
    long long sum() const;
};

/// Element of S(n) as a labeled-tree portrait: one child permutation per
/// internal node, plus the induced leaf permutation (computed eagerly, so
/// shared instances are immutable and thread-safe).
class TreeAutomorphism {
public:
    using Perm = std::vector<std::uint8_t>;

    static TreeAutomorphism identity(const Shape& s);
    static TreeAutomorphism from_portrait(const Shape& s, std::vector<std::vector<Perm>> portrait);

    const Shape& shape() const { return shape_; }
    /// portrait()[h-1][node] is the child permutation at height h
    const std::vector<std::vector<Perm>>& portrait() const { return portrait_; }
    const std::vector<std::uint32_t>& leaf_perm() const { return leaf_; }

    /// image of node `i` at height `h` (0 = leaves)
    std::uint32_t node_image(int h, std::uint32_t i) const;

    CycleType cycle_type() const;
    long long order() const;  // lcm of cycle lengths

    bool operator==(const TreeAutomorphism& o) const { return leaf_ == o.leaf_; }

private:
    TreeAutomorphism(const Shape& s) : shape_(s) {}
    void compute_leaf_perm();
    Shape shape_;
    std::vector<std::vector<Perm>> portrait_;
    std::vector<std::uint32_t> leaf_;
};

/// portrait composition: (a * b)(x) = a(b(x)); matches leaf permutation composition
TreeAutomorphism compose(const TreeAutomorphism& a, const TreeAutomorphism& b);

/// n - number of orbits of the leaf permutation (Malle's index)
long long ind(const TreeAutomorphism& g);

/// Single-consumer enumeration stream over all of S(n), odometer order.
class WreathEnumerator {
public:
    explicit WreathEnumerator(const Shape& s);
    /// emit the next element; false when exhausted
    bool next(TreeAutomorphism& out);

private:
    Shape shape_;
    std::vector<std::vector<TreeAutomorphism::Perm>> portrait_;
    bool done_ = false;
    bool first_ = true;
};

/// full element list; errors with CapExceeded when |S(n)| > cap
std::vector<TreeAutomorphism> enumerate_all(const Shape& s, long long cap);

struct AInvariantResult {
    BigRat value;             // always 1 for these groups
    long long min_index;      // 1
    bool by_enumeration;      // true when exhaustively verified
};

/// a(S(n)) via the structural witness (an innermost sibling transposition has
/// index 1); when `enumeration_cap` admits it and `cross_check` is set, the
/// minimum index is recomputed over every nonidentity element.
AInvariantResult a_invariant(const Shape& s, bool cross_check, long long enumeration_cap);

struct ConjugacyClass {
    TreeAutomorphism::Perm representative;  // leaf permutation
    long long size = 0;
    long long index = 0;  // ind of any member
    CycleType type;
};

/// conjugacy classes by orbit refinement under a generating set
std::vector<ConjugacyClass> conjugacy_classes(const Shape& s, long long cap);

struct BInvariantResult {
    long long b_q;                 // classes of minimal index mod the power action
    long long min_index;
    long long min_index_classes;   // before the action
    long long class_count;         // all conjugacy classes
};

/// b(S(n), Q): minimal-index conjugacy classes modulo C ~ C^m for all m
/// coprime to the group exponent (over Q the cyclotomic character is onto,
/// so every coprime power map acts). Using |G| instead of the exponent as
/// the coprimality modulus yields the same equivalence; both are computed
/// and compared in the test suite.
BInvariantResult b_invariant_Q(const Shape& s, long long cap);

/// census of leaf-permutation cycle types over the whole group
std::map<CycleType, long long> cycle_type_distribution(const Shape& s, long long cap);

} // namespace wreathcount
