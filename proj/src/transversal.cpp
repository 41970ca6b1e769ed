// Copyright (c) 2026 The nicebase authors
// SPDX-License-Identifier: Apache-2.0

#include "nicebase/transversal.hpp"

#include <set>
#include <stdexcept>

#include "nicebase/linalg.hpp"

namespace nicebase {

namespace {

// Phase convention: scale so the first nonzero entry of the first column is
// positive real, whenever the needed magnitude lies in the field.
CycMatrix normalize_phase(const CycMatrix& logical) {
    for (long i = 0; i < logical.rows(); ++i) {
        const CycScalar& v = logical.at(i, 0);
        if (v.is_zero()) continue;
        CycScalar mag_sq = v * v.conj();
        auto q = mag_sq.as_rational();
        if (!q) return logical;  // recorded as-is
        CycScalar phase = v.conj() * CycScalar::sqrt_of_rational(*q).inverse();
        return logical.scaled(phase);
    }
    return logical;
}

TransversalEntry make_entry(const CodeSpace& code, int element, std::string label,
                            const CycMatrix& op) {
    // g C = C exactly: Pi (g L) = g L, and the coordinate matrix is unitary
    CycMatrix moved = op * code.logical;
    if (code.projector * moved != moved)
        throw std::logic_error("transversal candidate does not preserve the code space");
    CycMatrix logical = code.logical.dagger() * moved;
    if (!logical.is_unitary())
        throw std::logic_error("logical action of a transversal candidate is not unitary");
    return TransversalEntry{element, std::move(label), op, normalize_phase(logical)};
}

bool normalizes(const std::vector<CycMatrix>& subgroup_mats, const CycMatrix& u,
                const CycMatrix& u_inv) {
    auto key = [](const CycMatrix& m) {
        std::string s;
        for (long i = 0; i < m.rows(); ++i)
            for (long j = 0; j < m.cols(); ++j) s += m.at(i, j).minimized().key() + ";";
        return s;
    };
    std::set<std::string> keys;
    for (const auto& m : subgroup_mats) keys.insert(key(m));
    for (const auto& m : subgroup_mats)
        if (!keys.count(key(u * m * u_inv))) return false;
    return true;
}

}  // namespace

TransversalReport transversal_ops(const ErrorGroup& eg, const NormalSubgroupCtx& n, long chi,
                                  const std::vector<FactoredUnitary>& extra) {
    TransversalReport rep;
    rep.code = build_character_code(eg, n, chi);
    InertiaData inertia = inertia_subgroup(eg, n, chi);
    const CycMatrix& proj = rep.code.projector;

    for (int g : inertia.subgroup) {
        const CycMatrix& m = eg.matrix(g);
        if (m * proj != proj * m)
            throw std::logic_error("inertia element does not commute with the isotypic projector");
        rep.entries.push_back(make_entry(rep.code, g, "E[" + std::to_string(g) + "]", m));
    }

    std::vector<CycMatrix> n_mats;
    for (int e : n.elems) n_mats.push_back(eg.matrix(e));

    for (size_t idx = 0; idx < extra.size(); ++idx) {
        const FactoredUnitary& cand = extra[idx];
        std::string label = cand.label.empty() ? "extra[" + std::to_string(idx) + "]" : cand.label;
        if (cand.factors.empty()) {
            rep.rejected.push_back(label + ": no tensor factorization given");
            continue;
        }
        CycMatrix op = CycMatrix::identity(1);
        for (const auto& f : cand.factors) op = op.kron(f);
        if (cand.full && *cand.full != op) {
            rep.rejected.push_back(label + ": Kronecker reconstruction mismatch");
            continue;
        }
        if (op.rows() != eg.dim) {
            rep.rejected.push_back(label + ": dimension mismatch");
            continue;
        }
        if (!op.is_unitary()) {
            rep.rejected.push_back(label + ": not unitary");
            continue;
        }
        CycMatrix op_inv = op.dagger();
        if (!normalizes(n_mats, op, op_inv)) {
            rep.rejected.push_back(label + ": does not normalize N");
            continue;
        }
        if (op * proj * op_inv != proj) {
            rep.rejected.push_back(label + ": does not fix the isotypic projector");
            continue;
        }
        rep.entries.push_back(make_entry(rep.code, -1, label, op));
    }
    return rep;
}

CycMatrix pairing_permutation(long dim, long num_pairs) {
    // source ordering: x_1 .. x_n y_1 .. y_n; target: x_1 y_1 .. x_n y_n
    long total = 1;
    for (long i = 0; i < 2 * num_pairs; ++i) total *= dim;
    CycMatrix p(total, total);
    for (long src = 0; src < total; ++src) {
        // digits of src, most significant first
        std::vector<long> digits(static_cast<size_t>(2 * num_pairs));
        long v = src;
        for (long i = 2 * num_pairs - 1; i >= 0; --i) {
            digits[static_cast<size_t>(i)] = v % dim;
            v /= dim;
        }
        long dst = 0;
        for (long k = 0; k < num_pairs; ++k) {
            dst = dst * dim + digits[static_cast<size_t>(k)];
            dst = dst * dim + digits[static_cast<size_t>(num_pairs + k)];
        }
        p.at(dst, src) = CycScalar::one();
    }
    return p;
}

TransversalReport two_block_transversal(const ErrorGroup& eg, const NormalSubgroupCtx& n, long chi,
                                        const std::vector<FactoredUnitary>& pair_gens,
                                        long num_pairs) {
    TransversalReport rep;
    CodeSpace base = build_character_code(eg, n, chi);

    // doubled code C(chi (x) chi) in the block ordering H^(x n) (x) H^(x n)
    rep.code.ambient = base.ambient * base.ambient;
    rep.code.projector = base.projector.kron(base.projector);
    rep.code.logical = base.logical.kron(base.logical);
    rep.code.kind = CodeSpace::Kind::character;
    rep.code.chi_index = chi;
    rep.code.normal_subgroup = base.normal_subgroup;

    // per-system dimension d with d^num_pairs = ambient of one block
    long factor_dim = -1;
    for (long d = 1; d <= eg.dim; ++d) {
        long pw = 1;
        for (long i = 0; i < num_pairs; ++i) pw *= d;
        if (pw == eg.dim) { factor_dim = d; break; }
    }
    if (factor_dim < 2)
        throw std::invalid_argument("ambient dimension is not a num_pairs-th power");

    CycMatrix pairing = pairing_permutation(factor_dim, num_pairs);
    CycMatrix pairing_t = pairing.transpose();

    // N x N as matrices on the doubled space
    std::vector<CycMatrix> nn_mats;
    for (int a : n.elems)
        for (int b : n.elems) nn_mats.push_back(eg.matrix(a).kron(eg.matrix(b)));

    for (size_t idx = 0; idx < pair_gens.size(); ++idx) {
        const FactoredUnitary& cand = pair_gens[idx];
        std::string label = cand.label.empty() ? "pair[" + std::to_string(idx) + "]" : cand.label;
        CycMatrix u_pair = CycMatrix::identity(1);
        for (const auto& f : cand.factors) u_pair = u_pair.kron(f);
        if (cand.full && *cand.full != u_pair) {
            rep.rejected.push_back(label + ": Kronecker reconstruction mismatch");
            continue;
        }
        if (u_pair.rows() != factor_dim * factor_dim) {
            rep.rejected.push_back(label + ": pair generator dimension mismatch");
            continue;
        }
        if (!u_pair.is_unitary()) {
            rep.rejected.push_back(label + ": not unitary");
            continue;
        }
        CycMatrix u_paired = CycMatrix::identity(1);
        for (long k = 0; k < num_pairs; ++k) u_paired = u_paired.kron(u_pair);
        CycMatrix u_full = pairing_t * u_paired * pairing;
        CycMatrix u_inv = u_full.dagger();
        if (!normalizes(nn_mats, u_full, u_inv)) {
            rep.rejected.push_back(label + ": does not normalize N x N");
            continue;
        }
        if (u_full * rep.code.projector * u_inv != rep.code.projector) {
            rep.rejected.push_back(label + ": not in the inertia subgroup of chi (x) chi");
            continue;
        }
        rep.entries.push_back(make_entry(rep.code, -1, label, u_full));
    }
    return rep;
}

}  // namespace nicebase
