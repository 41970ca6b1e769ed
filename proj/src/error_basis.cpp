// Copyright (c) 2026 The nicebase authors
// SPDX-License-Identifier: Apache-2.0

#include "nicebase/error_basis.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "nicebase/codes.hpp"
#include "nicebase/linalg.hpp"

namespace nicebase {

CycScalar NiceErrorBasis::cocycle(int g, int h) const {
    {
        std::lock_guard<std::mutex> lock(cache_mu_);
        auto it = cocycle_cache_.find({g, h});
        if (it != cocycle_cache_.end()) return it->second;
    }
    CycMatrix prod = op(g) * op(h);
    auto lambda = is_proportional(prod, op(index_group_.mul(g, h)));
    if (!lambda || lambda->is_zero())
        throw std::logic_error("error basis not closed: E_g E_h is not proportional to E_{g*h}");
    if (!lambda->root_of_unity_order())
        throw std::logic_error("cocycle value is not a root of unity");
    std::lock_guard<std::mutex> lock(cache_mu_);
    return cocycle_cache_.emplace(std::make_pair(g, h), *lambda).first->second;
}

ErrorGroup error_group_from_basis(const NiceErrorBasis& basis, long cap) {
    ErrorGroup eg;
    eg.group = close_generators(basis.ops(), cap);
    eg.center = center_indices(eg.group);
    eg.dim = basis.dim();
    eg.basis = std::make_shared<NiceErrorBasis>(basis);
    for (int z : eg.center)
        if (!eg.group.matrix(z).scalar_of_identity())
            throw std::logic_error("error group center contains a non-scalar element");
    return eg;
}

ErrorGroup error_group_from_generators(const std::vector<CycMatrix>& gens, long cap) {
    ErrorGroup eg;
    eg.group = close_generators(gens, cap);
    eg.center = center_indices(eg.group);
    eg.dim = eg.group.dim();
    for (int z : eg.center)
        if (!eg.group.matrix(z).scalar_of_identity())
            throw std::logic_error("error group center contains a non-scalar element");
    return eg;
}

// ---- shift/clock basis ----

NiceErrorBasis pauli_basis(long p) {
    static const std::set<long> small_primes{2, 3, 5, 7, 11, 13};
    if (!small_primes.count(p)) throw std::invalid_argument("pauli_basis needs a prime p <= 13");
    CycMatrix shift(p, p), clock(p, p);
    for (long x = 0; x < p; ++x) {
        shift.at((x + 1) % p, x) = CycScalar::one();
        clock.at(x, x) = CycScalar::zeta(p, x);
    }
    AbstractGroup idx = direct_product(cyclic_group(p), cyclic_group(p));
    std::vector<CycMatrix> ops;
    ops.reserve(static_cast<size_t>(p * p));
    for (long a = 0; a < p; ++a)
        for (long b = 0; b < p; ++b) ops.push_back(shift.pow(a) * clock.pow(b));
    return NiceErrorBasis(p, std::move(idx), std::move(ops));
}

NiceErrorBasis tensor_basis(const NiceErrorBasis& e1, const NiceErrorBasis& e2) {
    AbstractGroup idx = direct_product(e1.index_group(), e2.index_group());
    std::vector<CycMatrix> ops;
    ops.reserve(static_cast<size_t>(e1.size() * e2.size()));
    for (long i = 0; i < e1.size(); ++i)
        for (long j = 0; j < e2.size(); ++j) ops.push_back(e1.op(static_cast<int>(i)).kron(e2.op(static_cast<int>(j))));
    return NiceErrorBasis(e1.dim() * e2.dim(), std::move(idx), std::move(ops));
}

NiceErrorBasis tensor_power(const NiceErrorBasis& e, long n) {
    if (n < 1) throw std::invalid_argument("tensor_power needs n >= 1");
    NiceErrorBasis acc = e;
    for (long i = 1; i < n; ++i) acc = tensor_basis(acc, e);
    return acc;
}

// ---- semidirect construction ----

NiceErrorBasis semidirect_basis(const ErrorGroup& h1, const ErrorGroup& h2,
                                const std::vector<CycMatrix>& phi) {
    const long n1 = h1.dim, n2 = h2.dim;
    if (static_cast<long>(phi.size()) != h2.order())
        throw std::invalid_argument("phi must assign a matrix to every element of H2");
    for (const auto& m : phi)
        if (!m.is_square() || m.rows() != n1)
            throw std::invalid_argument("phi images must act on H1's space");

    for (int g = 0; g < h2.order(); ++g)
        for (int h = 0; h < h2.order(); ++h)
            if (phi[static_cast<size_t>(g)] * phi[static_cast<size_t>(h)] != phi[static_cast<size_t>(h2.group.mul(g, h))])
                throw std::invalid_argument("phi is not a homomorphism");

    for (int g = 0; g < h2.order(); ++g) {
        CycMatrix inv = phi[static_cast<size_t>(g)].inverse();
        for (int x = 0; x < h1.order(); ++x)
            if (h1.group.index_of(phi[static_cast<size_t>(g)] * h1.matrix(x) * inv) < 0)
                throw std::invalid_argument("phi image lies outside the normalizer of H1");
    }

    for (int z : h2.center)
        if (!phi[static_cast<size_t>(z)].scalar_of_identity())
            throw std::invalid_argument("phi does not map the center of H2 to scalar matrices");

    // image of (h, g) |-> h phi(g) (x) g; the image set is closed because
    // (h phi(g) (x) g)(h' phi(g') (x) g') = h phibar(g)(h') phi(gg') (x) gg'
    std::vector<CycMatrix> images;
    images.reserve(static_cast<size_t>(h1.order() * h2.order()));
    for (int h = 0; h < h1.order(); ++h)
        for (int g = 0; g < h2.order(); ++g)
            images.push_back((h1.matrix(h) * phi[static_cast<size_t>(g)]).kron(h2.matrix(g)));
    FiniteMatrixGroup image_group = group_from_element_set(images);

    std::vector<int> z = center_indices(image_group);
    for (int c : z)
        if (!image_group.matrix(c).scalar_of_identity())
            throw std::logic_error("semidirect image group has a non-scalar central element");
    Quotient q = quotient(image_group.structure, z);

    const long n = n1 * n2;
    if (q.group.order != n * n)
        throw std::logic_error("semidirect index group order is not n^2");
    std::vector<CycMatrix> ops;
    ops.reserve(static_cast<size_t>(q.group.order));
    for (int g = 0; g < q.group.order; ++g) ops.push_back(image_group.matrix(q.rep[static_cast<size_t>(g)]));

    NiceErrorBasis basis(n, q.group, std::move(ops));
    for (int g = 0; g < basis.size(); ++g) {
        CycScalar t = basis.op(g).trace();
        bool id = (g == basis.index_group().identity);
        if (t != (id ? CycScalar::from_int(n) : CycScalar::zero()))
            throw std::logic_error("semidirect basis violates the trace condition");
    }
    return basis;
}

namespace {

CycMatrix unitary_hadamard() {
    CycScalar inv_sqrt2 = (CycScalar::zeta(8, 1) + CycScalar::zeta(8, 7)) *
                          CycScalar::from_rational(Rat(1, 2));
    CycMatrix h(2, 2);
    h.at(0, 0) = inv_sqrt2;
    h.at(0, 1) = inv_sqrt2;
    h.at(1, 0) = inv_sqrt2;
    h.at(1, 1) = -inv_sqrt2;
    return h;
}

}  // namespace

NiceErrorBasis egner_like_basis() {
    NiceErrorBasis qubit = pauli_basis(2);
    ErrorGroup eg = error_group_from_basis(qubit);
    int ix = eg.group.index_of(qubit.op(1 * 2 + 0));  // N: bit flip
    int iz = eg.group.index_of(qubit.op(0 * 2 + 1));  // S: sign flip
    CycMatrix h = unitary_hadamard();
    auto phi = hom_from_generator_images(eg.group, {ix, iz}, {h, h});
    if (!phi) throw std::logic_error("Hadamard images do not define a homomorphism");
    return semidirect_basis(eg, eg, *phi);
}

EgnerGenerators egner_like_generators() {
    NiceErrorBasis qubit = pauli_basis(2);
    const CycMatrix& x = qubit.op(1 * 2 + 0);
    const CycMatrix& z = qubit.op(0 * 2 + 1);
    CycMatrix h = unitary_hadamard();
    CycMatrix eye = CycMatrix::identity(2);
    return EgnerGenerators{(x * h).kron(x), z.kron(eye), eye.kron(x * z)};
}

// ---- GF(p^k) basis ----

CycMatrix gfpk_shift(const FieldCtx& field, const FieldElem& y) {
    long n = field.size();
    CycMatrix c(n, n);
    for (long x = 0; x < n; ++x) {
        long tx = field.index_of(field.add(field.from_index(x), y));
        c.at(tx, x) = CycScalar::one();
    }
    return c;
}

CycMatrix gfpk_clock(const FieldCtx& field, const LinearForm& b, const FieldElem& y) {
    long n = field.size();
    CycMatrix d(n, n);
    for (long x = 0; x < n; ++x)
        d.at(x, x) = CycScalar::zeta(field.p(), b.pairing(field, y, field.from_index(x)));
    return d;
}

NiceErrorBasis gfpk_basis(const FieldCtx& field, const LinearForm& b) {
    const long n = field.size();
    const long order = n * n;
    // index group Z_p^(2k): pairs (x, y), index = idx(x) * n + idx(y)
    AbstractGroup idx;
    idx.order = order;
    idx.identity = 0;
    idx.table.assign(static_cast<size_t>(order), std::vector<int>(static_cast<size_t>(order)));
    for (long x1 = 0; x1 < n; ++x1)
        for (long y1 = 0; y1 < n; ++y1)
            for (long x2 = 0; x2 < n; ++x2)
                for (long y2 = 0; y2 < n; ++y2) {
                    long xs = field.index_of(field.add(field.from_index(x1), field.from_index(x2)));
                    long ys = field.index_of(field.add(field.from_index(y1), field.from_index(y2)));
                    idx.table[static_cast<size_t>(x1 * n + y1)][static_cast<size_t>(x2 * n + y2)] =
                        static_cast<int>(xs * n + ys);
                }
    std::vector<CycMatrix> ops;
    ops.reserve(static_cast<size_t>(order));
    for (long x = 0; x < n; ++x) {
        CycMatrix cx = gfpk_shift(field, field.from_index(x));
        for (long y = 0; y < n; ++y) ops.push_back(cx * gfpk_clock(field, b, field.from_index(y)));
    }
    return NiceErrorBasis(n, std::move(idx), std::move(ops));
}

// ---- verification ----

NiceBasisReport verify_nice(const NiceErrorBasis& basis) {
    NiceBasisReport rep;
    const long n = basis.dim();
    auto note = [&rep](const std::string& msg) {
        if (rep.failures.size() < 16) rep.failures.push_back(msg);
    };

    rep.unitary_ok = true;
    for (int g = 0; g < basis.size(); ++g)
        if (!basis.op(g).is_unitary()) {
            rep.unitary_ok = false;
            note("operator " + std::to_string(g) + " is not unitary");
        }

    rep.identity_ok = basis.op(basis.index_group().identity).is_identity();
    if (!rep.identity_ok) note("identity index does not carry the identity operator");

    rep.trace_ok = true;
    for (int g = 0; g < basis.size(); ++g) {
        CycScalar t = basis.op(g).trace();
        bool id = (g == basis.index_group().identity);
        if (t != (id ? CycScalar::from_int(n) : CycScalar::zero())) {
            rep.trace_ok = false;
            note("trace condition fails at operator " + std::to_string(g));
        }
    }

    rep.order_ok = (basis.size() == n * n) &&
                   (basis.index_group().order == n * n);
    if (!rep.order_ok) note("index group order differs from n^2");

    rep.cocycle_ok = true;
    rep.max_cocycle_order = 0;
    for (int g = 0; g < basis.size() && rep.cocycle_ok; ++g)
        for (int h = 0; h < basis.size(); ++h) {
            CycMatrix prod = basis.op(g) * basis.op(h);
            auto lam = is_proportional(prod, basis.op(basis.index_group().mul(g, h)));
            if (!lam || lam->is_zero()) {
                rep.cocycle_ok = false;
                note("closure fails at pair (" + std::to_string(g) + "," + std::to_string(h) + ")");
                break;
            }
            auto ord = lam->root_of_unity_order();
            if (!ord) {
                rep.cocycle_ok = false;
                note("cocycle at (" + std::to_string(g) + "," + std::to_string(h) + ") is not a root of unity");
                break;
            }
            rep.max_cocycle_order = std::max(rep.max_cocycle_order, *ord);
        }

    rep.trace_orthogonal_ok = true;
    for (int g = 0; g < basis.size(); ++g)
        for (int h = 0; h < basis.size(); ++h) {
            // tr(E_g^dagger E_h) as an entrywise sum
            CycScalar t = CycScalar::zero();
            const CycMatrix& a = basis.op(g);
            const CycMatrix& b = basis.op(h);
            for (long i = 0; i < a.rows(); ++i)
                for (long j = 0; j < a.cols(); ++j) {
                    if (a.at(i, j).is_zero() || b.at(i, j).is_zero()) continue;
                    t += a.at(i, j).conj() * b.at(i, j);
                }
            if (t != (g == h ? CycScalar::from_int(n) : CycScalar::zero())) {
                rep.trace_orthogonal_ok = false;
                note("trace orthogonality fails at (" + std::to_string(g) + "," + std::to_string(h) + ")");
            }
        }

    rep.span_ok = span_rank(basis.ops()) == n * n;
    if (!rep.span_ok) note("operators do not span the full matrix space");

    rep.very_nice = true;
    for (int g = 0; g < basis.size(); ++g)
        if (!basis.op(g).det().is_one()) { rep.very_nice = false; break; }
    return rep;
}

NiceErrorBasis renormalize_very_nice(const NiceErrorBasis& basis) {
    const long n = basis.dim();
    std::vector<CycMatrix> ops;
    ops.reserve(static_cast<size_t>(basis.size()));
    for (int g = 0; g < basis.size(); ++g) {
        CycScalar d = basis.op(g).det();
        if (d.is_one()) {
            ops.push_back(basis.op(g));
            continue;
        }
        auto ord = d.root_of_unity_order();
        if (!ord) throw std::logic_error("determinant is not a root of unity; cannot renormalize");
        long t = -1;
        for (long j = 0; j < *ord; ++j)
            if (CycScalar::zeta(*ord, j) == d) { t = j; break; }
        if (t < 0) throw std::logic_error("failed to express determinant as an explicit root of unity");
        CycScalar root = CycScalar::zeta(*ord * n, t);  // principal n-th root of det
        ops.push_back(basis.op(g).scaled(root.inverse()));
        if (!ops.back().det().is_one()) throw std::logic_error("renormalization did not reach det 1");
    }
    return NiceErrorBasis(n, basis.index_group(), std::move(ops));
}

// ---- abstract error group detection (center-supported characters) ----

namespace {

// Finishes the irrep extraction from a primitive Hermitian idempotent f of
// the regular representation: orthonormalizes the minimal left ideal (CG)f
// and conjugates the left action onto it.
std::optional<std::vector<CycMatrix>> irrep_from_primitive(const AbstractGroup& g,
                                                           const FiniteMatrixGroup& reg,
                                                           const CharacterTable& tbl, long chi,
                                                           const CycMatrix& f) {
    const long d = tbl.dims[static_cast<size_t>(chi)];
    CycMatrix a1 = column(f, g.identity);  // coefficient vector of f
    CycMatrix span(g.order, g.order);
    for (int x = 0; x < g.order; ++x) {
        CycMatrix v = reg.matrix(x) * a1;
        for (int r = 0; r < g.order; ++r) span.at(r, x) = v.at(r, 0);
    }
    CycMatrix ideal = column_space_basis(span);
    if (ideal.cols() != d) return std::nullopt;
    CycMatrix basis;
    try {
        basis = orthonormalize_columns(ideal);
    } catch (const std::domain_error&) {
        return std::nullopt;  // squared norms left the rational field
    }
    CycMatrix basis_dag = basis.dagger();
    std::vector<CycMatrix> rep;
    rep.reserve(static_cast<size_t>(g.order));
    for (int x = 0; x < g.order; ++x) rep.push_back(basis_dag * reg.matrix(x) * basis);
    for (int x = 0; x < g.order; ++x) {
        if (!rep[static_cast<size_t>(x)].is_unitary()) return std::nullopt;
        if (rep[static_cast<size_t>(x)].trace() != tbl.value(chi, x)) return std::nullopt;
        for (int y = 0; y < g.order; ++y)
            if (rep[static_cast<size_t>(x)] * rep[static_cast<size_t>(y)] !=
                rep[static_cast<size_t>(g.mul(x, y))])
                return std::nullopt;
    }
    return rep;
}

// Unitary irreducible representation affording character `chi`. A primitive
// idempotent of the chi-block is built as e_chi * f_psi, where psi is a
// character of an abelian subgroup K occurring exactly once in the
// restriction of chi; both factors are Hermitian and commute, so the product
// is an exact Hermitian projector with a d-dimensional minimal left ideal.
std::vector<CycMatrix> irrep_from_character(const AbstractGroup& g, const CharacterTable& tbl,
                                            long chi) {
    const long d = tbl.dims[static_cast<size_t>(chi)];
    if (d == 1) {
        std::vector<CycMatrix> rep;
        rep.reserve(static_cast<size_t>(g.order));
        for (int x = 0; x < g.order; ++x) {
            CycMatrix m(1, 1);
            m.at(0, 0) = tbl.value(chi, x);
            rep.push_back(std::move(m));
        }
        return rep;
    }
    FiniteMatrixGroup reg = regular_rep(g);
    CycMatrix chibar = char_projection(reg, tbl, chi);

    // candidate abelian subgroups: cyclic first, then two-generator
    std::vector<std::vector<int>> candidates;
    for (int a = 0; a < g.order; ++a) candidates.push_back(generated_subgroup(g, {a}));
    for (int a = 0; a < g.order; ++a)
        for (int b = a + 1; b < g.order; ++b) {
            if (g.mul(a, b) != g.mul(b, a)) continue;
            candidates.push_back(generated_subgroup(g, {a, b}));
        }

    for (const auto& elems : candidates) {
        SubgroupView k = SubgroupView::from(g, elems);
        if (!k.local.is_abelian()) continue;
        CharacterTable ktbl = character_table(k.local);
        for (long psi = 0; psi < static_cast<long>(ktbl.characters.size()); ++psi) {
            // multiplicity of psi in the restriction of chi, exactly
            CycScalar m = CycScalar::zero();
            for (int l = 0; l < k.order(); ++l)
                m += tbl.value(chi, k.to_parent(l)) * ktbl.value(psi, l).conj();
            if (m != CycScalar::from_int(static_cast<long>(k.order()))) continue;  // want mult 1

            CycMatrix fpsi = CycMatrix::zeros(g.order, g.order);
            for (int l = 0; l < k.order(); ++l)
                fpsi = fpsi + reg.matrix(k.to_parent(l)).scaled(ktbl.value(psi, l).conj());
            fpsi = fpsi.scaled(CycScalar::from_rational(Rat(1, k.order())));
            CycMatrix f = chibar * fpsi;
            if (!(f * f == f) || !f.is_hermitian()) continue;
            auto rep = irrep_from_primitive(g, reg, tbl, chi, f);
            if (rep) return *rep;
        }
    }
    throw std::runtime_error("irrep extraction found no multiplicity-one splitting subgroup");
}

}  // namespace

std::optional<AbstractErrorGroupEvidence> verify_abstract_error_group(const FiniteMatrixGroup& h) {
    const AbstractGroup& g = h.structure;
    CharacterTable tbl = character_table(g);
    std::vector<int> z = g.center();
    std::set<int> zset(z.begin(), z.end());

    for (long chi = 0; chi < static_cast<long>(tbl.characters.size()); ++chi) {
        bool supported_on_center = true;
        for (int x = 0; x < g.order && supported_on_center; ++x)
            if (!zset.count(x) && !tbl.value(chi, x).is_zero()) supported_on_center = false;
        if (!supported_on_center) continue;

        long d = tbl.dims[static_cast<size_t>(chi)];
        bool kernel_by_char = true;
        for (int x = 0; x < g.order && kernel_by_char; ++x)
            if (x != g.identity && tbl.value(chi, x) == CycScalar::from_int(d)) kernel_by_char = false;
        if (!kernel_by_char) continue;

        std::vector<CycMatrix> sigma = irrep_from_character(g, tbl, chi);
        bool kernel_by_rep = true;
        for (int x = 0; x < g.order && kernel_by_rep; ++x)
            if (x != g.identity && sigma[static_cast<size_t>(x)].is_identity()) kernel_by_rep = false;
        if (kernel_by_rep != kernel_by_char)
            throw std::logic_error("character kernel and representation kernel disagree");

        Quotient q = quotient(g, z);
        if (q.group.order != d * d)
            throw std::logic_error("quotient order is not the squared character degree");
        std::vector<CycMatrix> ops;
        ops.reserve(static_cast<size_t>(q.group.order));
        for (int c = 0; c < q.group.order; ++c) ops.push_back(sigma[static_cast<size_t>(q.rep[static_cast<size_t>(c)])]);
        NiceErrorBasis basis(d, q.group, std::move(ops));
        NiceBasisReport brep = verify_nice(basis);
        if (!brep.all_nice())
            throw std::logic_error("reconstructed basis fails the nice-basis axioms");

        AbstractErrorGroupEvidence ev{chi, d, tbl.characters[static_cast<size_t>(chi)],
                                      kernel_by_char, kernel_by_rep, std::move(basis), brep};
        return ev;
    }
    return std::nullopt;
}

}  // namespace nicebase
