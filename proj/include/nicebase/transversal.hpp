// Copyright (c) 2026 The nicebase authors
// SPDX-License-Identifier: Apache-2.0
//
// Transversally implementable operations from the inertia subgroup: every
// element of T(chi) within the error group preserves the code space exactly,
// and caller-supplied tensor-factored unitaries are admitted when they
// normalize N and commute with the isotypic projector. The two-block variant
// pairs up the supporting systems and works inside C(chi (x) chi).

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nicebase/codes.hpp"

namespace nicebase {

// A unitary with a declared tensor factorization (Kronecker order).
struct FactoredUnitary {
    std::vector<CycMatrix> factors;
    std::optional<CycMatrix> full;  // verified against the factors when given
    std::string label;
};

struct TransversalEntry {
    int element = -1;      // index in the error group, -1 for extra generators
    std::string label;
    CycMatrix op;
    CycMatrix logical;     // unitary action on the logical basis, phase-normalized
};

struct TransversalReport {
    CodeSpace code;
    std::vector<TransversalEntry> entries;
    std::vector<std::string> rejected;  // diagnostics for excluded candidates
};

// T(chi) within the error group, plus any extra candidates passing the
// normalizer and projector-commutation tests. Every reported element is
// verified to preserve the code space exactly, with a unitary logical action.
TransversalReport transversal_ops(const ErrorGroup& eg, const NormalSubgroupCtx& n, long chi,
                                  const std::vector<FactoredUnitary>& extra = {});

// Pairs up the supporting systems of two copies of the code and reports the
// per-pair candidates U^(x num_pairs) lying in the inertia subgroup of
// chi (x) chi, with their logical action on C (x) C. Candidates that fail to
// normalize N x N are excluded with a diagnostic.
TransversalReport two_block_transversal(const ErrorGroup& eg, const NormalSubgroupCtx& n, long chi,
                                        const std::vector<FactoredUnitary>& pair_gens,
                                        long num_pairs);

// Permutation matrix reordering (H^(x n)) (x) (H^(x n)) into (H (x) H)^(x n),
// for single-factor dimension `dim`.
CycMatrix pairing_permutation(long dim, long num_pairs);

}  // namespace nicebase
