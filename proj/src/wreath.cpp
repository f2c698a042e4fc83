#include "wreathcount/wreath.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace wreathcount {

Shape::Shape(std::vector<int> entries) : n_(std::move(entries)) {
    if (n_.empty()) fail(errc::shape_mismatch, "shape needs k >= 1");
    Nj_.resize(n_.size() + 1);
    Nj_[0] = 1;
    for (size_t i = 0; i < n_.size(); ++i) {
        if (n_[i] < 2) fail(errc::shape_mismatch, "shape entries must be >= 2");
        Nj_[i + 1] = Nj_[i] * n_[i];
        m_ += n_[i];
    }
}

Shape Shape::parse(const std::string& csv) {
    std::vector<int> e;
    std::stringstream ss(csv);
    std::string part;
    while (std::getline(ss, part, ',')) e.push_back(std::stoi(part));
    return Shape(e);
}

long long Shape::D(int j) const {
    long long d = 1;
    for (int i = 2; i <= j; ++i) d *= n_[static_cast<size_t>(i - 1)];
    return d;
}

int Shape::coord_index(int u, int v) const {
    int off = 0;
    for (int i = 1; i < u; ++i) off += n_[static_cast<size_t>(i - 1)];
    return off + (v - 1);
}

BigInt Shape::group_order() const {
    BigInt order = 1;
    for (int h = 1; h <= k(); ++h) {
        BigInt fact = factorial(static_cast<unsigned>(entry(h)));
        order *= bpow(fact, static_cast<unsigned long>(leaf_count() / N(h)));
    }
    return order;
}

BigRat Shape::A() const {
    BigRat a = 0;
    for (int j = 1; j <= k(); ++j) a += BigRat(entry(j) + 1, 2) * BigRat(N(j));
    return a;
}

BigRat Shape::B() const {
    BigRat b = A();
    for (int j = 1; j < k(); ++j) b -= BigRat(N(j));
    return b;
}

std::string Shape::to_string() const {
    std::string s;
    for (size_t i = 0; i < n_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(n_[i]);
    }
    return s;
}

bool Shape::all_equal() const {
    for (int v : n_)
        if (v != n_[0]) return false;
    return true;
}

std::string CycleType::to_string() const {
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += '+';
        s += std::to_string(parts[i]);
    }
    return s;
}

long long CycleType::sum() const {
    long long t = 0;
    for (int p : parts) t += p;
    return t;
}

TreeAutomorphism TreeAutomorphism::identity(const Shape& s) {
    std::vector<std::vector<Perm>> portrait(static_cast<size_t>(s.k()));
    for (int h = 1; h <= s.k(); ++h) {
        long long nodes = s.leaf_count() / s.N(h);
        Perm id(static_cast<size_t>(s.entry(h)));
        std::iota(id.begin(), id.end(), 0);
        portrait[static_cast<size_t>(h - 1)].assign(static_cast<size_t>(nodes), id);
    }
    return from_portrait(s, std::move(portrait));
}

TreeAutomorphism TreeAutomorphism::from_portrait(const Shape& s, std::vector<std::vector<Perm>> portrait) {
    TreeAutomorphism g(s);
    g.portrait_ = std::move(portrait);
    if (g.portrait_.size() != static_cast<size_t>(s.k()))
        fail(errc::shape_mismatch, "portrait level count");
    for (int h = 1; h <= s.k(); ++h) {
        const auto& level = g.portrait_[static_cast<size_t>(h - 1)];
        if (level.size() != static_cast<size_t>(s.leaf_count() / s.N(h)))
            fail(errc::shape_mismatch, "portrait node count at height " + std::to_string(h));
        for (const auto& p : level)
            if (p.size() != static_cast<size_t>(s.entry(h)))
                fail(errc::shape_mismatch, "portrait degree at height " + std::to_string(h));
    }
    g.compute_leaf_perm();
    return g;
}

std::uint32_t TreeAutomorphism::node_image(int h, std::uint32_t i) const {
    // walk from the root down along the source path; the permutation stored
    // at a source node sends its child slot to the image child slot
    int k = shape_.k();
    std::vector<int> digits(static_cast<size_t>(k - h));
    std::uint32_t rest = i;
    for (int level = h + 1; level <= k; ++level) {
        digits[static_cast<size_t>(level - h - 1)] = static_cast<int>(rest % shape_.entry(level));
        rest /= static_cast<std::uint32_t>(shape_.entry(level));
    }
    std::uint32_t src = 0, img = 0;
    for (int level = k; level > h; --level) {
        int d = digits[static_cast<size_t>(level - h - 1)];
        int e = portrait_[static_cast<size_t>(level - 1)][src][static_cast<size_t>(d)];
        src = src * static_cast<std::uint32_t>(shape_.entry(level)) + static_cast<std::uint32_t>(d);
        img = img * static_cast<std::uint32_t>(shape_.entry(level)) + static_cast<std::uint32_t>(e);
    }
    return img;
}

void TreeAutomorphism::compute_leaf_perm() {
    long long N = shape_.leaf_count();
    leaf_.resize(static_cast<size_t>(N));
    for (long long l = 0; l < N; ++l)
        leaf_[static_cast<size_t>(l)] = node_image(0, static_cast<std::uint32_t>(l));
}

CycleType TreeAutomorphism::cycle_type() const {
    std::vector<bool> seen(leaf_.size(), false);
    CycleType t;
    for (size_t i = 0; i < leaf_.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = leaf_[j];
            ++len;
        }
        t.parts.push_back(len);
    }
    std::sort(t.parts.rbegin(), t.parts.rend());
    return t;
}

long long TreeAutomorphism::order() const {
    long long o = 1;
    for (int p : cycle_type().parts) o = std::lcm(o, static_cast<long long>(p));
    return o;
}

TreeAutomorphism compose(const TreeAutomorphism& a, const TreeAutomorphism& b) {
    if (!(a.shape() == b.shape())) fail(errc::shape_mismatch, "composition across shapes");
    const Shape& s = a.shape();
    std::vector<std::vector<TreeAutomorphism::Perm>> portrait(static_cast<size_t>(s.k()));
    for (int h = 1; h <= s.k(); ++h) {
        long long nodes = s.leaf_count() / s.N(h);
        auto& level = portrait[static_cast<size_t>(h - 1)];
        level.resize(static_cast<size_t>(nodes));
        for (std::uint32_t i = 0; i < nodes; ++i) {
            // (a*b) at node i: first b's permutation, then a's at b's image node
            std::uint32_t bi = b.node_image(h, i);
            const auto& pa = a.portrait()[static_cast<size_t>(h - 1)][bi];
            const auto& pb = b.portrait()[static_cast<size_t>(h - 1)][i];
            TreeAutomorphism::Perm p(pb.size());
            for (size_t c = 0; c < p.size(); ++c) p[c] = pa[pb[c]];
            level[i] = std::move(p);
        }
    }
    return TreeAutomorphism::from_portrait(s, std::move(portrait));
}

long long ind(const TreeAutomorphism& g) {
    return g.shape().leaf_count() - static_cast<long long>(g.cycle_type().parts.size());
}

WreathEnumerator::WreathEnumerator(const Shape& s) : shape_(s) {
    portrait_.resize(static_cast<size_t>(s.k()));
    for (int h = 1; h <= s.k(); ++h) {
        long long nodes = s.leaf_count() / s.N(h);
        TreeAutomorphism::Perm id(static_cast<size_t>(s.entry(h)));
        std::iota(id.begin(), id.end(), 0);
        portrait_[static_cast<size_t>(h - 1)].assign(static_cast<size_t>(nodes), id);
    }
}

bool WreathEnumerator::next(TreeAutomorphism& out) {
    if (done_) return false;
    if (first_) {
        first_ = false;
        out = TreeAutomorphism::from_portrait(shape_, portrait_);
        return true;
    }
    // odometer over per-node permutations, lexicographic within a node
    for (auto& level : portrait_) {
        for (auto& p : level) {
            if (std::next_permutation(p.begin(), p.end())) {
                out = TreeAutomorphism::from_portrait(shape_, portrait_);
                return true;
            }
            // wrapped to identity; carry on to the next node
        }
    }
    done_ = true;
    return false;
}

std::vector<TreeAutomorphism> enumerate_all(const Shape& s, long long cap) {
    BigInt order = s.group_order();
    if (order > cap)
        fail(errc::cap_exceeded, "group order " + order.str() + " above enumeration cap " + std::to_string(cap));
    std::vector<TreeAutomorphism> out;
    out.reserve(order.convert_to<size_t>());
    WreathEnumerator en(s);
    TreeAutomorphism g = TreeAutomorphism::identity(s);
    while (en.next(g)) out.push_back(g);
    return out;
}

AInvariantResult a_invariant(const Shape& s, bool cross_check, long long enumeration_cap) {
    // witness: transposition of two sibling leaves (height-1 node 0), index 1
    AInvariantResult r;
    r.value = 1;
    r.min_index = 1;
    r.by_enumeration = false;
    if (cross_check) {
        if (s.group_order() > enumeration_cap)
            fail(errc::cap_exceeded, "a_invariant enumeration cross-check above cap");
        long long min_ind = -1;
        WreathEnumerator en(s);
        TreeAutomorphism g = TreeAutomorphism::identity(s);
        while (en.next(g)) {
            long long i = ind(g);
            if (i == 0) continue;  // identity
            if (min_ind < 0 || i < min_ind) min_ind = i;
        }
        r.min_index = min_ind;
        r.value = BigRat(1, min_ind);
        r.by_enumeration = true;
    }
    return r;
}

namespace {

using Perm = TreeAutomorphism::Perm;

Perm compose_perm(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

Perm invert_perm(const Perm& a) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint8_t>(i);
    return r;
}

Perm power_perm(const Perm& a, long long e) {
    Perm r(a.size());
    std::iota(r.begin(), r.end(), 0);
    Perm base = a;
    while (e > 0) {
        if (e & 1) r = compose_perm(base, r);
        base = compose_perm(base, base);
        e >>= 1;
    }
    return r;
}

CycleType type_of(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    CycleType t;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = p[j];
            ++len;
        }
        t.parts.push_back(len);
    }
    std::sort(t.parts.rbegin(), t.parts.rend());
    return t;
}

std::vector<std::vector<Perm>> identity_portrait(const Shape& s) {
    std::vector<std::vector<Perm>> portrait(static_cast<size_t>(s.k()));
    for (int h = 1; h <= s.k(); ++h) {
        long long nodes = s.leaf_count() / s.N(h);
        Perm id(static_cast<size_t>(s.entry(h)));
        std::iota(id.begin(), id.end(), 0);
        portrait[static_cast<size_t>(h - 1)].assign(static_cast<size_t>(nodes), id);
    }
    return portrait;
}

Perm leaf_perm_u8(const TreeAutomorphism& g) {
    Perm lp(g.leaf_perm().size());
    for (size_t i = 0; i < lp.size(); ++i) lp[i] = static_cast<std::uint8_t>(g.leaf_perm()[i]);
    return lp;
}

/// generating set: transposition + full cycle at node 0 of every height
/// (the top levels act transitively on the lower nodes, so conjugates of
/// these reach every node)
std::vector<Perm> generators(const Shape& s) {
    std::vector<Perm> gens;
    for (int h = 1; h <= s.k(); ++h) {
        for (int which = 0; which < 2; ++which) {
            if (which == 1 && s.entry(h) == 2) continue;  // cycle == transposition
            auto portrait = identity_portrait(s);
            Perm& p = portrait[static_cast<size_t>(h - 1)][0];
            if (which == 0)
                std::swap(p[0], p[1]);
            else
                std::rotate(p.begin(), p.begin() + 1, p.end());
            gens.push_back(leaf_perm_u8(TreeAutomorphism::from_portrait(s, std::move(portrait))));
        }
    }
    return gens;
}

} // namespace

std::vector<ConjugacyClass> conjugacy_classes(const Shape& s, long long cap) {
    std::vector<TreeAutomorphism> all = enumerate_all(s, cap);
    if (s.leaf_count() > 255) fail(errc::cap_exceeded, "leaf count above 255");

    std::map<Perm, size_t> index;
    std::vector<Perm> elems(all.size());
    for (size_t i = 0; i < all.size(); ++i) {
        Perm p(all[i].leaf_perm().size());
        for (size_t j = 0; j < p.size(); ++j) p[j] = static_cast<std::uint8_t>(all[i].leaf_perm()[j]);
        elems[i] = p;
        index[std::move(p)] = i;
    }

    std::vector<Perm> gens = generators(s);
    std::vector<std::pair<Perm, Perm>> conj;  // (g, g^{-1})
    for (const auto& g : gens) conj.emplace_back(g, invert_perm(g));

    std::vector<ConjugacyClass> classes;
    std::vector<bool> assigned(elems.size(), false);
    for (size_t i = 0; i < elems.size(); ++i) {
        if (assigned[i]) continue;
        // BFS orbit under conjugation
        std::vector<size_t> orbit = {i};
        assigned[i] = true;
        for (size_t head = 0; head < orbit.size(); ++head) {
            const Perm& x = elems[orbit[head]];
            for (const auto& [g, gi] : conj) {
                Perm y = compose_perm(compose_perm(g, x), gi);
                size_t yi = index.at(y);
                if (!assigned[yi]) {
                    assigned[yi] = true;
                    orbit.push_back(yi);
                }
            }
        }
        ConjugacyClass c;
        c.representative = elems[*std::min_element(orbit.begin(), orbit.end(), [&](size_t a, size_t b) {
            return elems[a] < elems[b];
        })];
        c.size = static_cast<long long>(orbit.size());
        c.type = type_of(c.representative);
        c.index = static_cast<long long>(c.representative.size()) - static_cast<long long>(c.type.parts.size());
        classes.push_back(std::move(c));
    }
    std::sort(classes.begin(), classes.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
        return a.representative < b.representative;
    });
    return classes;
}

BInvariantResult b_invariant_Q(const Shape& s, long long cap) {
    std::vector<ConjugacyClass> classes = conjugacy_classes(s, cap);

    // exponent = lcm of element orders (orders of class representatives suffice)
    long long exponent = 1;
    for (const auto& c : classes) {
        long long o = 1;
        for (int p : c.type.parts) o = std::lcm(o, static_cast<long long>(p));
        exponent = std::lcm(exponent, o);
    }

    long long min_index = -1;
    for (const auto& c : classes) {
        if (c.index == 0) continue;
        if (min_index < 0 || c.index < min_index) min_index = c.index;
    }

    // class lookup by representative-orbit membership: map each element to
    // its class id
    std::map<Perm, size_t> class_of;
    {
        std::vector<TreeAutomorphism> all = enumerate_all(s, cap);
        // recompute orbits the same way to label every element
        // (conjugacy_classes only kept representatives; redo cheap BFS)
        std::map<Perm, size_t> index;
        std::vector<Perm> elems(all.size());
        for (size_t i = 0; i < all.size(); ++i) {
            Perm p(all[i].leaf_perm().size());
            for (size_t j = 0; j < p.size(); ++j) p[j] = static_cast<std::uint8_t>(all[i].leaf_perm()[j]);
            elems[i] = p;
            index[p] = i;
        }
        std::vector<Perm> gens = generators(s);
        std::vector<std::pair<Perm, Perm>> conj;
        for (const auto& g : gens) conj.emplace_back(g, invert_perm(g));
        std::vector<int> label(elems.size(), -1);
        size_t next_label = 0;
        for (size_t i = 0; i < elems.size(); ++i) {
            if (label[i] >= 0) continue;
            std::vector<size_t> orbit = {i};
            label[i] = static_cast<int>(next_label);
            for (size_t head = 0; head < orbit.size(); ++head) {
                const Perm& x = elems[orbit[head]];
                for (const auto& [g, gi] : conj) {
                    Perm y = compose_perm(compose_perm(g, x), gi);
                    size_t yi = index.at(y);
                    if (label[yi] < 0) {
                        label[yi] = static_cast<int>(next_label);
                        orbit.push_back(yi);
                    }
                }
            }
            ++next_label;
        }
        for (size_t i = 0; i < elems.size(); ++i) class_of[elems[i]] = static_cast<size_t>(label[i]);
        // remap conjugacy_classes order onto labels via representatives
        std::vector<size_t> rep_label(classes.size());
        for (size_t ci = 0; ci < classes.size(); ++ci) rep_label[ci] = class_of.at(classes[ci].representative);
        // normalize: class_of values become indices into `classes`
        std::vector<size_t> to_class(next_label);
        for (size_t ci = 0; ci < classes.size(); ++ci) to_class[rep_label[ci]] = ci;
        for (auto& [p, l] : class_of) l = to_class[l];
    }

    // union-find over min-index classes under C -> C^m, gcd(m, exponent) = 1
    std::vector<size_t> parent(classes.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<size_t(size_t)> find = [&](size_t v) -> size_t {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    auto unite = [&](size_t a, size_t b) { parent[find(a)] = find(b); };
    for (size_t ci = 0; ci < classes.size(); ++ci) {
        if (classes[ci].index != min_index) continue;
        for (long long m = 1; m < exponent; ++m) {
            if (std::gcd(m, exponent) != 1) continue;
            Perm pm = power_perm(classes[ci].representative, m);
            unite(ci, class_of.at(pm));
        }
    }
    std::map<size_t, bool> roots;
    long long min_classes = 0;
    for (size_t ci = 0; ci < classes.size(); ++ci) {
        if (classes[ci].index != min_index) continue;
        ++min_classes;
        roots[find(ci)] = true;
    }

    BInvariantResult r;
    r.b_q = static_cast<long long>(roots.size());
    r.min_index = min_index;
    r.min_index_classes = min_classes;
    r.class_count = static_cast<long long>(classes.size());
    return r;
}

std::map<CycleType, long long> cycle_type_distribution(const Shape& s, long long cap) {
    BigInt order = s.group_order();
    if (order > cap)
        fail(errc::cap_exceeded, "group order " + order.str() + " above enumeration cap " + std::to_string(cap));
    std::map<CycleType, long long> out;
    WreathEnumerator en(s);
    TreeAutomorphism g = TreeAutomorphism::identity(s);
    while (en.next(g)) ++out[g.cycle_type()];
    return out;
}

} // namespace wreathcount
