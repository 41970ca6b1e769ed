// Copyright (c) 2026 The nicebase authors
// SPDX-License-Identifier: Apache-2.0
//
// Exact linear algebra over cyclotomic fields: rank, nullspace, solving,
// column-space bases and Gram-Schmidt. Dense and desk-scale by design.

#pragma once

#include <optional>
#include <vector>

#include "nicebase/cyclo.hpp"

namespace nicebase {

long mat_rank(const CycMatrix& a);

// Basis of { x : A x = 0 }, one column per basis vector (possibly 0 cols).
CycMatrix nullspace(const CycMatrix& a);

// One solution of A x = b, if any.
std::optional<CycMatrix> solve_linear(const CycMatrix& a, const CycMatrix& b);

// Columns of `a` forming a basis of its column space (pivot columns of the
// echelon form, in ascending column order — deterministic).
CycMatrix column_space_basis(const CycMatrix& a);

// <u, v> = u^dagger v for column vectors.
CycScalar inner(const CycMatrix& u, const CycMatrix& v);

// Squared norm of a column vector; always a real cyclotomic, returned as-is.
CycScalar norm_sq(const CycMatrix& v);

CycMatrix column(const CycMatrix& a, long j);

// Exact Gram-Schmidt on the columns (assumed independent). Normalization
// divides by sqrt of the squared norm; requires each squared norm to be
// rational, which holds for all code spaces this toolkit constructs.
// Throws std::domain_error otherwise.
CycMatrix orthonormalize_columns(const CycMatrix& a);

// vec(M): column-major flattening into an (rows*cols) x 1 vector.
CycMatrix vectorize(const CycMatrix& m);

// Rank of the span of a list of equally-shaped matrices (flattened).
long span_rank(const std::vector<CycMatrix>& mats);

// True iff `m` lies in the linear span of `basis` (flattened, exact).
bool in_span(const CycMatrix& m, const std::vector<CycMatrix>& basis);

}  // namespace nicebase
