// Copyright (c) 2026 The nicebase authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "nicebase/linalg.hpp"

using namespace nicebase;

namespace {

CycMatrix from_ints(long rows, long cols, std::vector<long> vals) {
    CycMatrix m(rows, cols);
    long k = 0;
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) m.at(i, j) = CycScalar::from_int(vals[static_cast<size_t>(k++)]);
    return m;
}

}  // namespace

TEST_SUITE("exact linear algebra") {
    TEST_CASE("rank and nullspace") {
        CycMatrix a = from_ints(2, 3, {1, 2, 3, 2, 4, 6});
        CHECK(mat_rank(a) == 1);
        CycMatrix ns = nullspace(a);
        CHECK(ns.cols() == 2);
        CHECK((a * ns).is_zero());
        CHECK(mat_rank(CycMatrix::identity(5)) == 5);
        CHECK(nullspace(CycMatrix::identity(3)).cols() == 0);
    }

    TEST_CASE("solving consistent and inconsistent systems") {
        CycMatrix a = from_ints(2, 2, {1, 1, 0, 1});
        CycMatrix b = from_ints(2, 1, {3, 1});
        auto x = solve_linear(a, b);
        REQUIRE(x.has_value());
        CHECK(a * *x == b);
        CycMatrix sing = from_ints(2, 2, {1, 1, 1, 1});
        CHECK(!solve_linear(sing, from_ints(2, 1, {0, 1})).has_value());
    }

    TEST_CASE("column space basis picks pivot columns deterministically") {
        CycMatrix a = from_ints(3, 3, {1, 2, 0, 1, 2, 1, 0, 0, 1});
        CycMatrix basis = column_space_basis(a);
        CHECK(basis.cols() == 2);
        CHECK(basis.at(0, 0) == CycScalar::one());  // column 0 first
    }

    TEST_CASE("orthonormalization is exact") {
        CycMatrix v = from_ints(4, 2, {1, 1, 1, 0, 0, 1, 0, 0});
        CycMatrix q = orthonormalize_columns(v);
        CHECK((q.dagger() * q).is_identity());
        // same span
        CHECK(mat_rank(q) == 2);
        for (long j = 0; j < 2; ++j) CHECK(norm_sq(column(q, j)).is_one());
    }

    TEST_CASE("span rank over flattened matrices") {
        CycMatrix a = from_ints(2, 2, {1, 0, 0, 0});
        CycMatrix b = from_ints(2, 2, {0, 0, 0, 1});
        CycMatrix c = from_ints(2, 2, {1, 0, 0, 1});
        CHECK(span_rank({a, b, c}) == 2);
        CHECK(in_span(c, {a, b}));
        CHECK(!in_span(from_ints(2, 2, {0, 1, 0, 0}), {a, b}));
    }
}
