// Copyright (c) 2026 The nicebase authors
// SPDX-License-Identifier: Apache-2.0
//
// Nice unitary error bases: n^2 unitaries indexed by a group of order n^2,
// trace-orthogonal and closed under multiplication up to root-of-unity
// phases. Constructors for the shift/clock (Pauli) basis, tensor products,
// the semidirect-product construction with non-abelian index group, and the
// GF(p^k) basis; verification of the defining axioms and of the
// center-supported-character criterion for abstract error groups.

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "nicebase/chartable.hpp"
#include "nicebase/cyclo.hpp"
#include "nicebase/gfpk_field.hpp"
#include "nicebase/groups.hpp"

namespace nicebase {

class NiceErrorBasis {
  public:
    NiceErrorBasis(long dim, AbstractGroup index_group, std::vector<CycMatrix> ops)
        : dim_(dim), index_group_(std::move(index_group)), ops_(std::move(ops)) {}

    // copies drop the cocycle cache (it is derived data guarded by a mutex)
    NiceErrorBasis(const NiceErrorBasis& o)
        : dim_(o.dim_), index_group_(o.index_group_), ops_(o.ops_) {}
    NiceErrorBasis(NiceErrorBasis&& o) noexcept
        : dim_(o.dim_), index_group_(std::move(o.index_group_)), ops_(std::move(o.ops_)) {}
    NiceErrorBasis& operator=(const NiceErrorBasis& o) {
        if (this != &o) {
            dim_ = o.dim_;
            index_group_ = o.index_group_;
            ops_ = o.ops_;
            std::lock_guard<std::mutex> lock(cache_mu_);
            cocycle_cache_.clear();
        }
        return *this;
    }
    NiceErrorBasis& operator=(NiceErrorBasis&& o) noexcept {
        if (this != &o) {
            dim_ = o.dim_;
            index_group_ = std::move(o.index_group_);
            ops_ = std::move(o.ops_);
            std::lock_guard<std::mutex> lock(cache_mu_);
            cocycle_cache_.clear();
        }
        return *this;
    }

    long dim() const { return dim_; }
    const AbstractGroup& index_group() const { return index_group_; }
    const std::vector<CycMatrix>& ops() const { return ops_; }
    const CycMatrix& op(int g) const { return ops_[static_cast<size_t>(g)]; }
    long size() const { return static_cast<long>(ops_.size()); }

    // omega_{g,h} with E_g E_h = omega_{g,h} E_{g*h}. Derived from the
    // operators on first use and cached; throws if the basis is not closed.
    CycScalar cocycle(int g, int h) const;

  private:
    long dim_;
    AbstractGroup index_group_;
    std::vector<CycMatrix> ops_;
    mutable std::map<std::pair<int, int>, CycScalar> cocycle_cache_;
    mutable std::mutex cache_mu_;
};

// The finite unitary group generated by a nice error basis; its center
// consists of scalar matrices.
struct ErrorGroup {
    FiniteMatrixGroup group;
    std::vector<int> center;  // indices of central elements
    long dim = 0;
    std::shared_ptr<const NiceErrorBasis> basis;  // null when built from raw generators

    const CycMatrix& matrix(int i) const { return group.matrix(i); }
    long order() const { return group.order(); }
};

ErrorGroup error_group_from_basis(const NiceErrorBasis& basis, long cap = kDefaultClosureCap);
ErrorGroup error_group_from_generators(const std::vector<CycMatrix>& gens,
                                       long cap = kDefaultClosureCap);

// Shift/clock basis on a p-dimensional space, p prime <= 13: index group
// Z_p x Z_p, E_(a,b) = C^a D^b with C|x> = |x+1>, D|x> = w^x |x>, w = zeta_p.
NiceErrorBasis pauli_basis(long p);

// Tensor product: index group the direct product, operators the Kronecker
// products.
NiceErrorBasis tensor_basis(const NiceErrorBasis& e1, const NiceErrorBasis& e2);

NiceErrorBasis tensor_power(const NiceErrorBasis& e, long n);

// Semidirect-product construction. phi maps each element of h2 to a unitary
// on h1's space; it must be a homomorphism into the normalizer of h1 taking
// the center of h2 to scalar matrices (each violation gets its own
// diagnostic). The pair (h, g) is represented by h*phi(g) (x) g; the basis
// consists of images of coset representatives over the center, with the
// identity coset represented by the identity.
NiceErrorBasis semidirect_basis(const ErrorGroup& h1, const ErrorGroup& h2,
                                const std::vector<CycMatrix>& phi);

// The dim-4 basis with non-abelian index group generated by
// A = NH (x) N, B = S (x) I, C = I (x) NS over the qubit shift/clock pair,
// with phi(N) = phi(S) = the unitary Hadamard.
NiceErrorBasis egner_like_basis();

// Explicit generators of egner_like_basis for identity checks.
struct EgnerGenerators {
    CycMatrix a, b, c;
};
EgnerGenerators egner_like_generators();

// GF(p^k) basis on a p^k-dimensional space: C_y|x> = |x+y>,
// D_y|x> = w^{b(y*x)}|x>, index group Z_p^{2k}, E_(x,y) = C_x D_y.
NiceErrorBasis gfpk_basis(const FieldCtx& field, const LinearForm& b);

// C_u and D_v as matrices for a given field context (building blocks shared
// with the classical-code constructions).
CycMatrix gfpk_shift(const FieldCtx& field, const FieldElem& y);
CycMatrix gfpk_clock(const FieldCtx& field, const LinearForm& b, const FieldElem& y);

struct NiceBasisReport {
    bool unitary_ok = false;
    bool identity_ok = false;
    bool trace_ok = false;          // tr E_g = n delta_{g,1}
    bool cocycle_ok = false;        // closure up to root-of-unity phase
    bool order_ok = false;          // |G| = n^2
    bool trace_orthogonal_ok = false;
    bool span_ok = false;           // operators span all of M_n
    bool very_nice = false;         // all det E_g = 1
    long max_cocycle_order = 0;     // actual observed phase order
    std::vector<std::string> failures;

    bool all_nice() const {
        return unitary_ok && identity_ok && trace_ok && cocycle_ok && order_ok &&
               trace_orthogonal_ok && span_ok;
    }
};

NiceBasisReport verify_nice(const NiceErrorBasis& basis);

// Scales each operator to determinant one (n-th roots of unit-determinants
// stay cyclotomic). The raw basis is left untouched.
NiceErrorBasis renormalize_very_nice(const NiceErrorBasis& basis);

struct AbstractErrorGroupEvidence {
    long chi_index = -1;                  // row in the character table of H
    long degree = 0;
    std::vector<CycScalar> chi_by_class;
    bool kernel_trivial_by_character = false;
    bool kernel_trivial_by_representation = false;
    NiceErrorBasis reconstructed;
    NiceBasisReport basis_report;
};

// Searches the character table of H for an irreducible character supported
// on the center with trivial kernel; if found, reconstructs a nice error
// basis from coset representatives through an explicitly built irreducible
// representation. Absent result means H fails this test.
std::optional<AbstractErrorGroupEvidence> verify_abstract_error_group(
    const FiniteMatrixGroup& h);

}  // namespace nicebase
