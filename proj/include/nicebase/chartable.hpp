// Copyright (c) 2026 The nicebase authors
// SPDX-License-Identifier: Apache-2.0
//
// Exact character tables of small finite groups. Nonabelian groups go
// through the Burnside/Dixon class-sum method: central characters are
// eigenvectors of the class-sum matrices over a prime field F_l with
// l = 1 mod exp(G), and eigenvalues are lifted to exact cyclotomics by
// discrete-log matching of roots of unity. Abelian groups are handled by
// direct character extension along a generating chain. All results are
// verified against exact row orthogonality before being returned.

#pragma once

#include <vector>

#include "nicebase/cyclo.hpp"
#include "nicebase/groups.hpp"

namespace nicebase {

struct CharacterTable {
    std::vector<std::vector<int>> classes;            // conjugacy classes, sorted
    std::vector<int> class_of;                        // element -> class index
    std::vector<std::vector<CycScalar>> characters;   // row i = character i by class
    std::vector<long> dims;                           // d_chi per row

    long num_classes() const { return static_cast<long>(classes.size()); }
    const CycScalar& value(long chi, int element) const {
        return characters[static_cast<size_t>(chi)][static_cast<size_t>(class_of[static_cast<size_t>(element)])];
    }
    // <chi_i, chi_j> = (1/|G|) sum_g chi_i(g) conj(chi_j(g)), exact.
    CycScalar inner_product(long i, long j, long group_order) const;
};

inline constexpr long kDefaultCharTableCap = 1024;

CharacterTable character_table(const AbstractGroup& g, long cap = kDefaultCharTableCap);

}  // namespace nicebase
