// Copyright (c) 2026 The nicebase authors
// SPDX-License-Identifier: Apache-2.0
//
// Code spaces from irreducible characters of normal subgroups of an error
// group: character projections, inertia subgroups, detectable/correctable
// error classification, dimension counting for the span of detectable
// operators, syndrome frames and recovery simulation.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nicebase/chartable.hpp"
#include "nicebase/cyclo.hpp"
#include "nicebase/error_basis.hpp"
#include "nicebase/groups.hpp"

namespace nicebase {

// A normal subgroup N of an error group, with its local structure and
// exact character table.
struct NormalSubgroupCtx {
    std::vector<int> elems;  // parent indices, sorted
    SubgroupView view;
    CharacterTable table;

    long order() const { return view.order(); }
    // matrix of the local element l
    const CycMatrix& matrix(const ErrorGroup& eg, int local) const {
        return eg.matrix(view.to_parent(local));
    }
};

// Validates normality; throws std::invalid_argument otherwise.
NormalSubgroupCtx make_normal_subgroup(const ErrorGroup& eg, std::vector<int> elems);

struct CodeSpace {
    enum class Kind { character, idempotent };
    long ambient = 0;
    CycMatrix projector;      // Pi, exact Hermitian idempotent
    CycMatrix logical;        // ambient x dim orthonormal columns
    Kind kind = Kind::character;
    // provenance
    std::vector<int> normal_subgroup;
    long chi_index = -1;
    long idempotent_index = -1;

    long dim() const { return logical.cols(); }
};

// chi-isotypic projector (d_chi/|N|) sum_g conj(chi(g)) M_g for a matrix
// group N acting on its own space. Zero iff chi does not appear. Rejects
// non-irreducible chi (fails the exact norm-1 test).
CycMatrix char_projection(const FiniteMatrixGroup& n, const CharacterTable& table, long chi);

struct CharacterInstance {
    long chi_index = -1;    // row of N's character table
    long degree = 0;        // d_chi
    long multiplicity = 0;  // r, common by Lemma 3.3
    CycMatrix chi_bar;      // isotypic projector on the ambient space
};

// All irreducible characters of N appearing in the ambient representation.
// Checked postconditions: equal degrees, equal multiplicities,
// count * multiplicity * degree = n, and the chi_bar form a complete set of
// orthogonal projections.
std::vector<CharacterInstance> induced_characters(const ErrorGroup& eg,
                                                  const NormalSubgroupCtx& n);

struct InertiaData {
    std::vector<int> subgroup;    // T(chi) as parent indices, sorted
    std::vector<int> coset_reps;  // reps of E/T(chi); reps[0] identity unless biased
    long r = 0;                   // |E| / |T(chi)| = number of distinct induced characters
};

// T(chi) = { g : chi(g^-1 h g) = chi(h) for all h in N }, with deterministic
// lowest-index coset representatives and g_0 = identity. When the error
// group is commutative over its center and N is abelian, the result is
// cross-checked against the commutant of N (hard error on disagreement).
InertiaData inertia_subgroup(const ErrorGroup& eg, const NormalSubgroupCtx& n, long chi);

struct IdempotentSplit {
    std::vector<CycMatrix> parts;  // d Hermitian orthogonal idempotents, sum = chi_bar
    bool exact = false;            // false: numeric-only (reconstruction failed)
};

// Splits chi_bar into d_chi primitive Hermitian orthogonal idempotents of
// rank `multiplicity` inside the group algebra spanned by `algebra_gens`.
// Deterministic candidates are tried first, then seeded random rational
// combinations guided by a numeric eigensolver; results are reconstructed
// and re-verified exactly whenever the spectrum is rational.
IdempotentSplit split_primitive_idempotents(const std::vector<CycMatrix>& algebra_gens,
                                            const CycMatrix& chi_bar, long degree,
                                            long multiplicity, uint64_t seed);

IdempotentSplit primitive_idempotents(const ErrorGroup& eg, const NormalSubgroupCtx& n,
                                      const CharacterInstance& chi, uint64_t seed = 1);

CodeSpace build_character_code(const ErrorGroup& eg, const NormalSubgroupCtx& n, long chi);
CodeSpace build_idempotent_code(const ErrorGroup& eg, const NormalSubgroupCtx& n, long chi,
                                long which, uint64_t seed = 1);

// lambda with Pi E Pi = lambda Pi, if any: the exact detectability test.
std::optional<CycScalar> is_detectable(const CodeSpace& code, const CycMatrix& e);

struct CorrectableReport {
    bool correctable = true;
    // failing pairs (i, j): ops[i]^dagger ops[j] not detectable
    std::vector<std::pair<long, long>> failures;
};

// S is correctable iff S^dagger S is detectable: tests all |S|^2 products.
CorrectableReport is_correctable_set(const CodeSpace& code, const std::vector<CycMatrix>& ops);

enum class ErrClass {
    outside_inertia,  // detectable by both code kinds
    in_subgroup,      // in N: detectable by every C(e_i); by C(chi) iff in C
    inertia_other,    // in T(chi) \ N: no guarantee
};

struct ErrorClassification {
    std::vector<ErrClass> cls;          // per element of the error group
    std::vector<bool> in_rep_center;    // g in C = center of the chi-representation
    long outside_count = 0;
    long subgroup_count = 0;
    long other_count = 0;
};

// Partition of the error group per the detectability theorem; every
// membership claim is re-verified against is_detectable, and any
// disagreement raises std::logic_error.
ErrorClassification classify_errors(const ErrorGroup& eg, const NormalSubgroupCtx& n, long chi,
                                    uint64_t seed = 1);

struct DetectableSpanReport {
    long rank = 0;          // exact dimension of the span of detectable operators
    long formula = 0;       // n^2 - (n^2/r^2 - 1)
    long d_dim = 0;         // dim of the block-scalar family D
    long d_dim_formula = 0; // n^2/r - n^2/r^2 + 1
    long outside_rank = 0;  // rank of span of E \ T(chi)
};

// Exact rank of { E : Pi E Pi prop. Pi } against the closed-form count; also
// rebuilds the block-scalar family D and verifies that D together with
// E \ T(chi) spans exactly the detectable operators. Mismatches raise
// std::logic_error with diagnostics.
DetectableSpanReport detectable_span_dimension(const ErrorGroup& eg, const NormalSubgroupCtx& n,
                                               long chi);

struct Syndrome {
    int coset = 0;           // index into frame reps
    int idem = 0;            // idempotent index (0 for character frames)
    CycMatrix projector;     // onto g_i C(chi) resp. g_i C(e_j)
    CycMatrix recovery;      // unitary applied after projecting
};

struct SyndromeFrame {
    CodeSpace code;
    InertiaData inertia;
    std::vector<Syndrome> syndromes;
    std::vector<CycMatrix> idempotents;          // e_i (idempotent frames)
    std::vector<std::vector<CycMatrix>> units;   // e_{ij} matrix units
    bool exact_idempotents = true;
    // center C of the chi-representation, as parent indices
    std::vector<int> rep_center;
};

// Builds the syndrome decomposition H = sum g_i C. When `intended` is
// given, S^dagger S must be detectable and coset representatives are taken
// from S where possible (error if S meets one T(chi)-coset in different
// C-cosets). `bias` replaces the representative of T(chi) itself.
SyndromeFrame syndrome_frame(const ErrorGroup& eg, const NormalSubgroupCtx& n, long chi,
                             const std::optional<std::vector<int>>& intended = std::nullopt,
                             CodeSpace::Kind kind = CodeSpace::Kind::character,
                             uint64_t seed = 1,
                             std::optional<int> bias = std::nullopt);

struct RecoveryBranch {
    Rat probability;   // exact
    CycMatrix state;   // normalized post-recovery state
};

// Projective syndrome measurement followed by the frame's recovery unitary.
// The state must be exactly normalized; zero-probability branches are
// omitted and probabilities sum to one when the frame partitions the space.
std::vector<RecoveryBranch> recover(const SyndromeFrame& frame, const CycMatrix& state);

// Numeric shadow of recover() for states given as complex amplitudes.
struct NumericBranch {
    double probability;
    std::vector<std::complex<double>> state;
};
std::vector<NumericBranch> recover_numeric(const SyndromeFrame& frame,
                                           const std::vector<std::complex<double>>& state);

struct CorrectableSet {
    std::vector<int> predicted;  // union g_i C (character) or g_i N (idempotent)
    std::vector<int> verified;   // elements passing the recovery simulation
};

// Predicted correctable errors in the error group, each member verified by
// simulation on a logical basis plus one superposition (hard error if a
// predicted element fails). For idempotent frames the simulation-verified
// set is reported alongside the literal union g_i N.
CorrectableSet correctable_set(const ErrorGroup& eg, const SyndromeFrame& frame);

// g acts as a scalar in the chi-irrep: |chi(g)|^2 = d^2 exactly.
std::vector<int> representation_center(const NormalSubgroupCtx& n, long chi);

}  // namespace nicebase
