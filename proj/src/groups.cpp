// Copyright (c) 2026 The nicebase authors
// SPDX-License-Identifier: Apache-2.0

#include "nicebase/groups.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace nicebase {

// ---- AbstractGroup ----

int AbstractGroup::inverse_of(int a) const {
    for (int b = 0; b < order; ++b)
        if (mul(a, b) == identity) return b;
    throw std::logic_error("element without inverse");
}

int AbstractGroup::power(int a, long e) const {
    if (e < 0) return power(inverse_of(a), -e);
    int r = identity;
    while (e-- > 0) r = mul(r, a);
    return r;
}

long AbstractGroup::element_order(int a) const {
    int x = a;
    long t = 1;
    while (x != identity) {
        x = mul(x, a);
        ++t;
        if (t > order) throw std::logic_error("element order exceeds group order");
    }
    return t;
}

long AbstractGroup::exponent() const {
    long e = 1;
    for (int a = 0; a < order; ++a) e = std::lcm(e, element_order(a));
    return e;
}

bool AbstractGroup::is_abelian() const {
    for (int a = 0; a < order; ++a)
        for (int b = a + 1; b < order; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::vector<int> AbstractGroup::center() const {
    std::vector<int> z;
    for (int a = 0; a < order; ++a) {
        bool central = true;
        for (int b = 0; b < order && central; ++b)
            if (mul(a, b) != mul(b, a)) central = false;
        if (central) z.push_back(a);
    }
    return z;
}

void AbstractGroup::validate() const {
    if (order <= 0 || table.size() != static_cast<size_t>(order))
        throw std::logic_error("malformed multiplication table");
    for (const auto& row : table) {
        if (row.size() != static_cast<size_t>(order)) throw std::logic_error("malformed multiplication table");
        for (int v : row)
            if (v < 0 || v >= order) throw std::logic_error("table entry out of range");
    }
    for (int a = 0; a < order; ++a)
        if (mul(identity, a) != a || mul(a, identity) != a)
            throw std::logic_error("identity axiom fails");
    for (int a = 0; a < order; ++a) inverse_of(a);  // throws if missing
    // Associativity: full check at small orders, deterministic sample beyond.
    if (order <= 64) {
        for (int a = 0; a < order; ++a)
            for (int b = 0; b < order; ++b)
                for (int c = 0; c < order; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw std::logic_error("associativity fails");
    } else {
        uint64_t s = 0x9e3779b97f4a7c15ull;
        for (int i = 0; i < 20000; ++i) {
            s = s * 6364136223846793005ull + 1442695040888963407ull;
            int a = static_cast<int>((s >> 33) % static_cast<uint64_t>(order));
            s = s * 6364136223846793005ull + 1442695040888963407ull;
            int b = static_cast<int>((s >> 33) % static_cast<uint64_t>(order));
            s = s * 6364136223846793005ull + 1442695040888963407ull;
            int c = static_cast<int>((s >> 33) % static_cast<uint64_t>(order));
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                throw std::logic_error("associativity fails");
        }
    }
}

std::vector<std::vector<int>> conjugacy_classes(const AbstractGroup& g) {
    std::vector<bool> seen(static_cast<size_t>(g.order), false);
    std::vector<std::vector<int>> classes;
    for (int a = 0; a < g.order; ++a) {
        if (seen[static_cast<size_t>(a)]) continue;
        std::set<int> cls;
        for (int x = 0; x < g.order; ++x) cls.insert(g.conjugate(x, a));
        std::vector<int> v(cls.begin(), cls.end());
        for (int e : v) seen[static_cast<size_t>(e)] = true;
        classes.push_back(std::move(v));
    }
    return classes;
}

// ---- standard groups ----

AbstractGroup cyclic_group(long n) {
    if (n < 1) throw std::invalid_argument("cyclic group order must be >= 1");
    AbstractGroup g;
    g.order = n;
    g.identity = 0;
    g.table.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) g.table[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<int>((i + j) % n);
    return g;
}

AbstractGroup dihedral_group(long order) {
    if (order < 2 || order % 2 != 0) throw std::invalid_argument("dihedral group order must be even and >= 2");
    long n = order / 2;
    // element (i, j) = r^i s^j at index i + n*j, with s r^i s = r^-i
    auto idx = [n](long i, long j) { return static_cast<int>(i + n * j); };
    AbstractGroup g;
    g.order = order;
    g.identity = 0;
    g.table.assign(static_cast<size_t>(order), std::vector<int>(static_cast<size_t>(order)));
    for (long i1 = 0; i1 < n; ++i1)
        for (long j1 = 0; j1 < 2; ++j1)
            for (long i2 = 0; i2 < n; ++i2)
                for (long j2 = 0; j2 < 2; ++j2) {
                    long i = (j1 == 0) ? (i1 + i2) % n : ((i1 - i2) % n + n) % n;
                    long j = (j1 + j2) % 2;
                    g.table[static_cast<size_t>(idx(i1, j1))][static_cast<size_t>(idx(i2, j2))] = idx(i, j);
                }
    return g;
}

AbstractGroup quaternion_group() {
    // elements 1,-1,i,-i,j,-j,k,-k at indices 0..7
    auto neg = [](int a) { return a ^ 1; };
    AbstractGroup g;
    g.order = 8;
    g.identity = 0;
    g.table.assign(8, std::vector<int>(8));
    // base products on {1=0, i=2, j=4, k=6} with sign tracking
    auto base_mul = [&](int a, int b, int& sign) {
        static const int prod[4][4] = {{0, 2, 4, 6}, {2, 0, 6, 4}, {4, 6, 0, 2}, {6, 4, 2, 0}};
        static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
        sign = sgn[a / 2][b / 2];
        return prod[a / 2][b / 2];
    };
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int sign;
            int p = base_mul(a & ~1, b & ~1, sign);
            int total = sign * ((a & 1) ? -1 : 1) * ((b & 1) ? -1 : 1);
            g.table[static_cast<size_t>(a)][static_cast<size_t>(b)] = (total == 1) ? p : neg(p);
        }
    g.validate();
    return g;
}

AbstractGroup symmetric3_group() { return dihedral_group(6); }

AbstractGroup direct_product(const AbstractGroup& a, const AbstractGroup& b) {
    AbstractGroup g;
    g.order = a.order * b.order;
    g.identity = a.identity * static_cast<int>(b.order) + b.identity;
    g.table.assign(static_cast<size_t>(g.order), std::vector<int>(static_cast<size_t>(g.order)));
    for (int a1 = 0; a1 < a.order; ++a1)
        for (int b1 = 0; b1 < b.order; ++b1)
            for (int a2 = 0; a2 < a.order; ++a2)
                for (int b2 = 0; b2 < b.order; ++b2) {
                    int x = a1 * static_cast<int>(b.order) + b1;
                    int y = a2 * static_cast<int>(b.order) + b2;
                    g.table[static_cast<size_t>(x)][static_cast<size_t>(y)] =
                        a.mul(a1, a2) * static_cast<int>(b.order) + b.mul(b1, b2);
                }
    return g;
}

// ---- isomorphism ----

namespace {

std::vector<long> order_profile(const AbstractGroup& g) {
    std::vector<long> p;
    p.reserve(static_cast<size_t>(g.order));
    for (int a = 0; a < g.order; ++a) p.push_back(g.element_order(a));
    std::sort(p.begin(), p.end());
    return p;
}

std::vector<size_t> class_size_profile(const AbstractGroup& g) {
    std::vector<size_t> p;
    for (const auto& c : conjugacy_classes(g)) p.push_back(c.size());
    std::sort(p.begin(), p.end());
    return p;
}

// Extends the partial map determined by generator images over the subgroup
// generated so far; returns false on inconsistency.
bool extend_map(const AbstractGroup& g1, const AbstractGroup& g2,
                const std::vector<int>& gens, const std::vector<int>& images,
                std::vector<int>& f, std::vector<int>& covered) {
    f.assign(static_cast<size_t>(g1.order), -1);
    f[static_cast<size_t>(g1.identity)] = g2.identity;
    covered.clear();
    covered.push_back(g1.identity);
    std::deque<int> queue{g1.identity};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (size_t k = 0; k < images.size(); ++k) {
            int y = g1.mul(x, gens[k]);
            int fy = g2.mul(f[static_cast<size_t>(x)], images[k]);
            if (f[static_cast<size_t>(y)] == -1) {
                f[static_cast<size_t>(y)] = fy;
                covered.push_back(y);
                queue.push_back(y);
            } else if (f[static_cast<size_t>(y)] != fy) {
                return false;
            }
        }
    }
    // homomorphism + injectivity on the covered subgroup
    std::set<int> image_set;
    for (int x : covered) {
        if (!image_set.insert(f[static_cast<size_t>(x)]).second) return false;
        for (int y : covered)
            if (f[static_cast<size_t>(g1.mul(x, y))] != g2.mul(f[static_cast<size_t>(x)], f[static_cast<size_t>(y)]))
                return false;
    }
    return true;
}

bool search_isomorphism(const AbstractGroup& g1, const AbstractGroup& g2,
                        const std::vector<int>& gens, std::vector<int>& images) {
    size_t k = images.size();
    if (k == gens.size()) {
        std::vector<int> f, covered;
        return extend_map(g1, g2, gens, images, f, covered) &&
               static_cast<long>(covered.size()) == g1.order;
    }
    long want_order = g1.element_order(gens[k]);
    for (int cand = 0; cand < g2.order; ++cand) {
        if (g2.element_order(cand) != want_order) continue;
        images.push_back(cand);
        std::vector<int> f, covered;
        if (extend_map(g1, g2, gens, images, f, covered) &&
            search_isomorphism(g1, g2, gens, images))
            return true;
        images.pop_back();
    }
    return false;
}

}  // namespace

std::vector<int> generated_subgroup(const AbstractGroup& g, const std::vector<int>& gens) {
    std::set<int> s{g.identity};
    std::deque<int> queue{g.identity};
    std::vector<int> use = gens;
    for (int x : gens)
        if (s.insert(x).second) queue.push_back(x);
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : use) {
            int p = g.mul(x, y);
            if (s.insert(p).second) queue.push_back(p);
            int q = g.mul(y, x);
            if (s.insert(q).second) queue.push_back(q);
        }
    }
    return {s.begin(), s.end()};
}

bool group_isomorphic(const AbstractGroup& g1, const AbstractGroup& g2) {
    if (g1.order != g2.order) return false;
    if (g1.order > 64) throw std::domain_error("group_isomorphic: order cap 64 exceeded");
    if (g1.is_abelian() != g2.is_abelian()) return false;
    if (order_profile(g1) != order_profile(g2)) return false;
    if (g1.center().size() != g2.center().size()) return false;
    if (class_size_profile(g1) != class_size_profile(g2)) return false;

    // small generating sequence of g1, greedily: lowest uncovered element
    std::vector<int> gens;
    std::vector<int> covered{g1.identity};
    while (static_cast<long>(covered.size()) < g1.order) {
        std::set<int> cov(covered.begin(), covered.end());
        int next = -1;
        for (int a = 0; a < g1.order; ++a)
            if (!cov.count(a)) { next = a; break; }
        gens.push_back(next);
        covered = generated_subgroup(g1, gens);
    }
    std::vector<int> images;
    return search_isomorphism(g1, g2, gens, images);
}

// ---- FiniteMatrixGroup ----

namespace {

// Value-canonical key: each entry re-expressed in its minimal cyclotomic
// subfield, so equal matrices key equally whatever order they carry.
std::string matrix_value_key(const CycMatrix& m) {
    std::string key;
    key.reserve(64);
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) {
            key += m.at(i, j).minimized().key();
            key += ';';
        }
    return key;
}

}  // namespace

void FiniteMatrixGroup::build_key_index() const {
    if (!key_index_.empty() || elements.empty()) return;
    for (size_t i = 0; i < elements.size(); ++i)
        key_index_.emplace(matrix_value_key(elements[i]), static_cast<int>(i));
}

int FiniteMatrixGroup::index_of(const CycMatrix& m) const {
    build_key_index();
    auto it = key_index_.find(matrix_value_key(m));
    return it == key_index_.end() ? -1 : it->second;
}

void FiniteMatrixGroup::validate_table() const {
    for (int i = 0; i < structure.order; ++i)
        for (int j = 0; j < structure.order; ++j)
            if (matrix(i) * matrix(j) != matrix(structure.mul(i, j)))
                throw std::logic_error("multiplication table inconsistent with matrices");
}

FiniteMatrixGroup close_generators(const std::vector<CycMatrix>& gens, long cap) {
    if (gens.empty()) throw std::invalid_argument("closure needs at least one generator");
    long d = gens[0].rows();
    long field_order = 1;
    for (const auto& g : gens) {
        if (!g.is_square() || g.rows() != d)
            throw std::invalid_argument("generators must be square matrices of equal dimension");
        if (g.det().is_zero()) throw std::invalid_argument("non-invertible generator");
        field_order = common_order(field_order, g.unified_order());
    }

    FiniteMatrixGroup grp;
    grp.field_order = field_order;
    std::unordered_map<std::string, int> seen;
    // first derivation of each element: parent index and generator number
    std::vector<std::pair<int, int>> deriv;
    auto push = [&](const CycMatrix& m, int parent, int gen) -> int {
        std::string key = matrix_value_key(m);
        auto it = seen.find(key);
        if (it != seen.end()) return it->second;
        int idx = static_cast<int>(grp.elements.size());
        grp.elements.push_back(m);
        deriv.push_back({parent, gen});
        seen.emplace(std::move(key), idx);
        return idx;
    };

    push(CycMatrix::identity(d), -1, -1);
    for (size_t k = 0; k < gens.size(); ++k) push(gens[k], 0, static_cast<int>(k));
    for (size_t head = 0; head < grp.elements.size(); ++head) {
        for (size_t k = 0; k < gens.size(); ++k) {
            CycMatrix prod = grp.elements[head] * gens[k];
            push(prod, static_cast<int>(head), static_cast<int>(k));
            if (static_cast<long>(grp.elements.size()) > cap)
                throw std::domain_error("group too large or infinite (closure cap " +
                                        std::to_string(cap) + " exceeded)");
        }
    }

    const long n = static_cast<long>(grp.elements.size());
    // right-multiplication columns for the generators, by matrix products
    std::vector<std::vector<int>> gcol(gens.size(), std::vector<int>(static_cast<size_t>(n), -1));
    for (size_t k = 0; k < gens.size(); ++k)
        for (long i = 0; i < n; ++i) {
            auto it = seen.find(matrix_value_key(grp.elements[static_cast<size_t>(i)] * gens[k]));
            if (it == seen.end()) throw std::logic_error("closure not closed");
            gcol[k][static_cast<size_t>(i)] = it->second;
        }
    // remaining columns follow from the derivations: i*(p*g) = (i*p)*g
    grp.structure.order = n;
    grp.structure.identity = 0;
    grp.structure.table.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
    for (long i = 0; i < n; ++i) grp.structure.table[static_cast<size_t>(i)][0] = static_cast<int>(i);
    for (long j = 1; j < n; ++j) {
        auto [parent, gen] = deriv[static_cast<size_t>(j)];
        for (long i = 0; i < n; ++i) {
            int ip = grp.structure.table[static_cast<size_t>(i)][static_cast<size_t>(parent)];
            grp.structure.table[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                gcol[static_cast<size_t>(gen)][static_cast<size_t>(ip)];
        }
    }
    grp.inverse_table.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) grp.inverse_table[static_cast<size_t>(i)] = grp.structure.inverse_of(i);
    return grp;
}

FiniteMatrixGroup group_from_element_set(const std::vector<CycMatrix>& elems) {
    if (elems.empty()) throw std::invalid_argument("empty element set");
    long field_order = 1;
    for (const auto& m : elems) field_order = common_order(field_order, m.unified_order());

    FiniteMatrixGroup grp;
    grp.field_order = field_order;
    std::unordered_map<std::string, int> seen;
    // identity first, then input order
    for (int pass = 0; pass < 2; ++pass)
        for (const auto& m : elems) {
            if ((pass == 0) != m.is_identity()) continue;
            std::string key = matrix_value_key(m);
            if (seen.count(key)) continue;
            seen.emplace(std::move(key), static_cast<int>(grp.elements.size()));
            grp.elements.push_back(m);
        }
    if (!grp.elements[0].is_identity()) throw std::invalid_argument("element set lacks the identity");

    long n = static_cast<long>(grp.elements.size());
    grp.structure.order = n;
    grp.structure.identity = 0;
    grp.structure.table.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            CycMatrix prod = grp.elements[static_cast<size_t>(i)] * grp.elements[static_cast<size_t>(j)];
            auto it = seen.find(matrix_value_key(prod));
            if (it == seen.end()) throw std::invalid_argument("element set not closed under multiplication");
            grp.structure.table[static_cast<size_t>(i)][static_cast<size_t>(j)] = it->second;
        }
    grp.inverse_table.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) grp.inverse_table[static_cast<size_t>(i)] = grp.structure.inverse_of(i);
    return grp;
}

std::vector<int> center_indices(const FiniteMatrixGroup& g) { return g.structure.center(); }

bool center_is_scalar(const FiniteMatrixGroup& g) {
    for (int z : center_indices(g))
        if (!g.matrix(z).scalar_of_identity()) return false;
    return true;
}

bool is_subgroup(const AbstractGroup& g, const std::vector<int>& s) {
    std::set<int> set(s.begin(), s.end());
    if (!set.count(g.identity)) return false;
    for (int a : s) {
        if (!set.count(g.inverse_of(a))) return false;
        for (int b : s)
            if (!set.count(g.mul(a, b))) return false;
    }
    return true;
}

bool is_normal(const AbstractGroup& g, const std::vector<int>& s) {
    if (!is_subgroup(g, s)) throw std::invalid_argument("is_normal: not a subgroup");
    std::set<int> set(s.begin(), s.end());
    for (int x = 0; x < g.order; ++x)
        for (int a : s)
            if (!set.count(g.conjugate(x, a))) return false;
    return true;
}

std::vector<int> normal_closure(const AbstractGroup& g, const std::vector<int>& s) {
    std::set<int> gens(s.begin(), s.end());
    for (;;) {
        std::set<int> next = gens;
        for (int x = 0; x < g.order; ++x)
            for (int a : gens) next.insert(g.conjugate(x, a));
        std::vector<int> closed = generated_subgroup(g, {next.begin(), next.end()});
        std::set<int> closed_set(closed.begin(), closed.end());
        if (closed_set == gens) return closed;
        gens = std::move(closed_set);
    }
}

Quotient quotient(const AbstractGroup& g, const std::vector<int>& n) {
    if (!is_normal(g, n)) throw std::invalid_argument("quotient: subgroup is not normal");
    Quotient q;
    q.coset_of.assign(static_cast<size_t>(g.order), -1);
    for (int a = 0; a < g.order; ++a) {
        if (q.coset_of[static_cast<size_t>(a)] != -1) continue;
        int coset = static_cast<int>(q.rep.size());
        bool has_identity = false;
        for (int h : n) {
            int m = g.mul(a, h);
            q.coset_of[static_cast<size_t>(m)] = coset;
            if (m == g.identity) has_identity = true;
        }
        q.rep.push_back(has_identity ? g.identity : a);
    }
    long k = static_cast<long>(q.rep.size());
    q.group.order = k;
    q.group.identity = q.coset_of[static_cast<size_t>(g.identity)];
    q.group.table.assign(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(k)));
    for (long a = 0; a < k; ++a)
        for (long b = 0; b < k; ++b)
            q.group.table[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                q.coset_of[static_cast<size_t>(g.mul(q.rep[static_cast<size_t>(a)], q.rep[static_cast<size_t>(b)]))];
    return q;
}

SubgroupView SubgroupView::from(const AbstractGroup& parent, std::vector<int> indices) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    if (!is_subgroup(parent, indices)) throw std::invalid_argument("SubgroupView: not a subgroup");
    SubgroupView v;
    v.elems = std::move(indices);
    for (size_t i = 0; i < v.elems.size(); ++i) v.local_of.emplace(v.elems[i], static_cast<int>(i));
    long k = static_cast<long>(v.elems.size());
    v.local.order = k;
    v.local.identity = v.local_of.at(parent.identity);
    v.local.table.assign(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(k)));
    for (long a = 0; a < k; ++a)
        for (long b = 0; b < k; ++b)
            v.local.table[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                v.local_of.at(parent.mul(v.elems[static_cast<size_t>(a)], v.elems[static_cast<size_t>(b)]));
    return v;
}

std::optional<std::vector<CycMatrix>> hom_from_generator_images(
    const FiniteMatrixGroup& domain, const std::vector<int>& gens,
    const std::vector<CycMatrix>& images) {
    if (gens.size() != images.size()) throw std::invalid_argument("generator/image count mismatch");
    if (images.empty()) throw std::invalid_argument("need at least one generator");
    long d = images[0].rows();
    std::vector<std::optional<CycMatrix>> f(static_cast<size_t>(domain.order()));
    f[static_cast<size_t>(domain.identity_index())] = CycMatrix::identity(d);
    std::deque<int> queue{domain.identity_index()};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (size_t k = 0; k < gens.size(); ++k) {
            int y = domain.mul(x, gens[k]);
            CycMatrix fy = *f[static_cast<size_t>(x)] * images[k];
            if (!f[static_cast<size_t>(y)]) {
                f[static_cast<size_t>(y)] = std::move(fy);
                queue.push_back(y);
            } else if (*f[static_cast<size_t>(y)] != fy) {
                return std::nullopt;
            }
        }
    }
    for (const auto& v : f)
        if (!v) return std::nullopt;  // generators do not generate the domain
    for (int a = 0; a < domain.order(); ++a)
        for (int b = 0; b < domain.order(); ++b)
            if (*f[static_cast<size_t>(domain.mul(a, b))] != *f[static_cast<size_t>(a)] * *f[static_cast<size_t>(b)])
                return std::nullopt;
    std::vector<CycMatrix> out;
    out.reserve(f.size());
    for (auto& v : f) out.push_back(std::move(*v));
    return out;
}

FiniteMatrixGroup regular_rep(const AbstractGroup& g) {
    FiniteMatrixGroup grp;
    grp.structure = g;
    grp.field_order = 1;
    grp.elements.reserve(static_cast<size_t>(g.order));
    for (int a = 0; a < g.order; ++a) {
        CycMatrix m(g.order, g.order);
        for (int x = 0; x < g.order; ++x) m.at(g.mul(a, x), x) = CycScalar::one();
        grp.elements.push_back(std::move(m));
    }
    grp.inverse_table.resize(static_cast<size_t>(g.order));
    for (int i = 0; i < g.order; ++i) grp.inverse_table[static_cast<size_t>(i)] = g.inverse_of(i);
    return grp;
}

}  // namespace nicebase
