// Copyright (c) 2026 The nicebase authors
// SPDX-License-Identifier: Apache-2.0
//
// Finite matrix groups built by closure, their abstract structure (center,
// normal subgroups, quotients, conjugacy classes) and isomorphism testing
// at desk scale.

#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "nicebase/cyclo.hpp"

namespace nicebase {

// A finite group given by its multiplication table on indices 0..order-1.
struct AbstractGroup {
    long order = 0;
    std::vector<std::vector<int>> table;  // table[i][j] = index of g_i * g_j
    int identity = 0;

    int mul(int a, int b) const { return table[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
    int inverse_of(int a) const;
    int power(int a, long e) const;
    long element_order(int a) const;
    long exponent() const;
    bool is_abelian() const;
    std::vector<int> center() const;
    int conjugate(int g, int x) const { return mul(mul(g, x), inverse_of(g)); }

    // Throws std::logic_error if the table violates the group axioms
    // (identity, inverses, full associativity).
    void validate() const;
};

std::vector<std::vector<int>> conjugacy_classes(const AbstractGroup& g);

AbstractGroup cyclic_group(long n);
AbstractGroup dihedral_group(long order);  // order = 2n, n >= 1
AbstractGroup quaternion_group();          // Q_8
AbstractGroup symmetric3_group();
AbstractGroup direct_product(const AbstractGroup& a, const AbstractGroup& b);

// Exhaustive isomorphism test with invariant pruning; intended for
// order <= 64 (rejects larger inputs).
bool group_isomorphic(const AbstractGroup& g1, const AbstractGroup& g2);

// A finite group of explicit matrices with consistent index tables.
struct FiniteMatrixGroup {
    std::vector<CycMatrix> elements;
    AbstractGroup structure;
    std::vector<int> inverse_table;

    long order() const { return structure.order; }
    long dim() const { return elements.empty() ? 0 : elements[0].rows(); }
    const CycMatrix& matrix(int i) const { return elements[static_cast<size_t>(i)]; }
    int mul(int a, int b) const { return structure.mul(a, b); }
    int identity_index() const { return structure.identity; }

    // Index of an exact matrix in the element list, or -1. Matrices are
    // compared at the group's common field order.
    int index_of(const CycMatrix& m) const;

    // Checks elements[table[i][j]] == elements[i]*elements[j] on all pairs.
    void validate_table() const;

    long field_order = 1;  // common cyclotomic order of all entries

  private:
    mutable std::unordered_map<std::string, int> key_index_;
    void build_key_index() const;
    friend FiniteMatrixGroup close_generators(const std::vector<CycMatrix>&, long);
    friend FiniteMatrixGroup group_from_element_set(const std::vector<CycMatrix>&);
};

inline constexpr long kDefaultClosureCap = 65536;

// Multiplicative closure of invertible generators. Deterministic element
// order: identity first, then breadth-first products in generator order.
// Throws std::domain_error when the closure exceeds `cap`.
FiniteMatrixGroup close_generators(const std::vector<CycMatrix>& gens,
                                   long cap = kDefaultClosureCap);

// Builds tables over a set already closed under multiplication
// (deduplicated; identity must be present). Order of `elems` is kept,
// except the identity is moved to index 0.
FiniteMatrixGroup group_from_element_set(const std::vector<CycMatrix>& elems);

std::vector<int> center_indices(const FiniteMatrixGroup& g);

// True iff every central element is a scalar multiple of the identity.
bool center_is_scalar(const FiniteMatrixGroup& g);

bool is_subgroup(const AbstractGroup& g, const std::vector<int>& s);
bool is_normal(const AbstractGroup& g, const std::vector<int>& s);
std::vector<int> normal_closure(const AbstractGroup& g, const std::vector<int>& s);
// Subgroup generated by `gens` inside g (table closure).
std::vector<int> generated_subgroup(const AbstractGroup& g, const std::vector<int>& gens);

struct Quotient {
    AbstractGroup group;           // cosets as elements
    std::vector<int> rep;          // coset -> representative element of parent
    std::vector<int> coset_of;     // parent element -> coset index
};

// G/N for N normal in G. The identity coset is represented by the identity;
// other cosets by their lowest element index.
Quotient quotient(const AbstractGroup& g, const std::vector<int>& n);

// Local group structure of a subgroup given by parent indices.
struct SubgroupView {
    std::vector<int> elems;                  // sorted parent indices
    AbstractGroup local;                     // table on local indices
    std::unordered_map<int, int> local_of;   // parent index -> local index

    static SubgroupView from(const AbstractGroup& parent, std::vector<int> indices);
    int to_local(int parent_index) const { return local_of.at(parent_index); }
    int to_parent(int local_index) const { return elems[static_cast<size_t>(local_index)]; }
    long order() const { return local.order; }
};

// Extends generator -> image assignments to a full homomorphism by closure,
// then verifies multiplicativity on all pairs. Returns one matrix per group
// element, or nullopt if the assignment is inconsistent.
std::optional<std::vector<CycMatrix>> hom_from_generator_images(
    const FiniteMatrixGroup& domain, const std::vector<int>& gens,
    const std::vector<CycMatrix>& images);

// Left regular representation as permutation matrices.
FiniteMatrixGroup regular_rep(const AbstractGroup& g);

}  // namespace nicebase
