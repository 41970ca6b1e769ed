// Copyright (c) 2026 The nicebase authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <set>

#include "nicebase/instances.hpp"
#include "nicebase/linalg.hpp"

using namespace nicebase;

namespace {

// diag(1, 0, 0, 0, 0, 0, 0, 1): the projector onto span{|000>, |111>}
CycMatrix bitflip_projector() {
    CycMatrix p(8, 8);
    p.at(0, 0) = CycScalar::one();
    p.at(7, 7) = CycScalar::one();
    return p;
}

CycMatrix pauli_op(char c) {
    CycMatrix m(2, 2);
    switch (c) {
        case 'I': return CycMatrix::identity(2);
        case 'X':
            m.at(0, 1) = CycScalar::one();
            m.at(1, 0) = CycScalar::one();
            return m;
        case 'Z':
            m.at(0, 0) = CycScalar::one();
            m.at(1, 1) = -CycScalar::one();
            return m;
        default: throw std::logic_error("unknown pauli");
    }
}

CycMatrix tensor3(const char* s) {
    return pauli_op(s[0]).kron(pauli_op(s[1])).kron(pauli_op(s[2]));
}

}  // namespace

TEST_SUITE("character projections") {
    TEST_CASE("trivial subgroup projects onto everything") {
        FiniteMatrixGroup n = close_generators({CycMatrix::identity(4)});
        CharacterTable t = character_table(n.structure);
        CHECK(char_projection(n, t, 0) == CycMatrix::identity(4));
    }

    TEST_CASE("the phase-type stabilizer cuts span{|000>, |111>}") {
        Instance inst = make_instance("bitflip3");
        NormalSubgroupCtx n = instance_subgroup(inst);
        CodeSpace code = build_character_code(inst.eg, n, inst.chi);
        CHECK(code.projector == bitflip_projector());
        CHECK(code.dim() == 2);
        CHECK(mat_rank(code.projector) == 2);
        // orthonormal logical basis spanning the same range
        CHECK((code.logical.dagger() * code.logical).is_identity());
        CHECK(code.projector * code.logical == code.logical);
    }

    TEST_CASE("the full qubit group has the whole space as one isotypic component") {
        NiceErrorBasis qubit = pauli_basis(2);
        FiniteMatrixGroup n = close_generators(qubit.ops());
        CharacterTable t = character_table(n.structure);
        long two = -1;
        for (size_t i = 0; i < t.dims.size(); ++i)
            if (t.dims[i] == 2) two = static_cast<long>(i);
        REQUIRE(two >= 0);
        CHECK(char_projection(n, t, two) == CycMatrix::identity(2));
        // non-appearing characters project to zero
        bool found_zero = false;
        for (size_t i = 0; i < t.dims.size(); ++i)
            if (t.dims[i] == 1 && char_projection(n, t, static_cast<long>(i)).is_zero())
                found_zero = true;
        CHECK(found_zero);
    }
}

TEST_SUITE("induced characters") {
    TEST_CASE("the center contributes exactly one character") {
        Instance inst = make_instance("bell2");
        NormalSubgroupCtx z = make_normal_subgroup(inst.eg, inst.eg.center);
        auto induced = induced_characters(inst.eg, z);
        CHECK(induced.size() == 1);
        CHECK(induced[0].chi_bar.is_identity());
    }

    TEST_CASE("phase-type stabilizer: four characters of common multiplicity two") {
        Instance inst = make_instance("bitflip3");
        NormalSubgroupCtx n = instance_subgroup(inst);
        auto induced = induced_characters(inst.eg, n);
        REQUIRE(induced.size() == 4);
        for (const auto& ci : induced) {
            CHECK(ci.degree == 1);
            CHECK(ci.multiplicity == 2);
            CHECK(mat_rank(ci.chi_bar) == 2);
        }
    }

    TEST_CASE("Bell stabilizer: the four isotypic projectors are the Bell projectors") {
        Instance inst = make_instance("bell2");
        NormalSubgroupCtx n = instance_subgroup(inst);
        auto induced = induced_characters(inst.eg, n);
        REQUIRE(induced.size() == 4);
        for (const auto& ci : induced) CHECK(ci.multiplicity == 1);
        // Bell vectors: |00> +- |11>, |01> +- |10>, unnormalized
        std::vector<std::vector<long>> bells{{1, 0, 0, 1}, {1, 0, 0, -1}, {0, 1, 1, 0}, {0, 1, -1, 0}};
        std::set<std::string> expected, got;
        for (const auto& v : bells) {
            CycMatrix b(4, 1);
            for (long i = 0; i < 4; ++i) b.at(i, 0) = CycScalar::from_rational(rat(v[static_cast<size_t>(i)], 2));
            // projector (1/2) v v^T with entries +-1/2
            CycMatrix proj = b * b.dagger();
            proj = proj.scaled(CycScalar::from_int(2));
            expected.insert(proj.key());
        }
        for (const auto& ci : induced) got.insert(ci.chi_bar.key());
        CHECK(expected == got);
    }
}

TEST_SUITE("inertia subgroups") {
    TEST_CASE("N equal to the whole group gives r = 1") {
        NiceErrorBasis qubit = pauli_basis(2);
        ErrorGroup eg = error_group_from_basis(qubit);
        std::vector<int> all(static_cast<size_t>(eg.order()));
        for (int i = 0; i < eg.order(); ++i) all[static_cast<size_t>(i)] = i;
        NormalSubgroupCtx n = make_normal_subgroup(eg, all);
        long chi = -1;
        for (long c = 0; c < static_cast<long>(n.table.characters.size()); ++c)
            if (n.table.dims[static_cast<size_t>(c)] == 2) chi = c;
        REQUIRE(chi >= 0);
        InertiaData t = inertia_subgroup(eg, n, chi);
        CHECK(t.r == 1);
        CHECK(static_cast<long>(t.subgroup.size()) == eg.order());
        CHECK(t.coset_reps == std::vector<int>{eg.group.identity_index()});
    }

    TEST_CASE("non-appearing characters are rejected") {
        Instance inst = make_instance("bitflip3");
        NormalSubgroupCtx n = instance_subgroup(inst);
        // the trivial character vanishes against -I, so it does not appear
        long trivial = -1;
        for (long c = 0; c < static_cast<long>(n.table.characters.size()); ++c) {
            bool all_one = true;
            for (const auto& v : n.table.characters[static_cast<size_t>(c)])
                if (!v.is_one()) all_one = false;
            if (all_one) trivial = c;
        }
        REQUIRE(trivial >= 0);
        CHECK_THROWS_AS(inertia_subgroup(inst.eg, n, trivial), std::invalid_argument);
    }

    TEST_CASE("bit-flip instance: Z-type tensors and XXX lie inside, X1 outside") {
        Instance inst = make_instance("bitflip3");
        NormalSubgroupCtx n = instance_subgroup(inst);
        InertiaData t = inertia_subgroup(inst.eg, n, inst.chi);
        CHECK(t.r == 4);
        CHECK(t.subgroup.size() == 64);
        std::set<int> ts(t.subgroup.begin(), t.subgroup.end());
        CHECK(ts.count(inst.eg.group.index_of(tensor3("XXX"))));
        CHECK(ts.count(inst.eg.group.index_of(tensor3("ZII"))));
        CHECK(ts.count(inst.eg.group.index_of(tensor3("ZZZ"))));
        CHECK(!ts.count(inst.eg.group.index_of(tensor3("XII"))));
        CHECK(t.coset_reps[0] == inst.eg.group.identity_index());
    }

    TEST_CASE("Bell instance: the inertia subgroup is the commutant, r = 4") {
        Instance inst = make_instance("bell2");
        NormalSubgroupCtx n = instance_subgroup(inst);
        InertiaData t = inertia_subgroup(inst.eg, n, inst.chi);
        CHECK(t.r == 4);
        CHECK(static_cast<long>(t.subgroup.size()) * t.r == inst.eg.order());
        // the cross-check against the commutant runs inside inertia_subgroup;
        // verify the commutant property directly as well
        for (int g : t.subgroup)
            for (int e : n.elems)
                CHECK(inst.eg.group.mul(g, e) == inst.eg.group.mul(e, g));
    }
}

TEST_SUITE("primitive idempotents") {
    TEST_CASE("abelian subgroups keep the isotypic projector whole") {
        Instance inst = make_instance("bitflip3");
        NormalSubgroupCtx n = instance_subgroup(inst);
        auto induced = induced_characters(inst.eg, n);
        for (const auto& ci : induced) {
            IdempotentSplit split = primitive_idempotents(inst.eg, n, ci);
            CHECK(split.exact);
            REQUIRE(split.parts.size() == 1);
            CHECK(split.parts[0] == ci.chi_bar);
        }
    }

    TEST_CASE("a non-abelian normal subgroup on dim 4 splits into two exact idempotents") {
        // two-qubit group, N = the first-factor qubit group (x) I
        NiceErrorBasis two = tensor_basis(pauli_basis(2), pauli_basis(2));
        ErrorGroup eg = error_group_from_basis(two);
        CycMatrix eye = CycMatrix::identity(2);
        std::vector<int> gens{eg.group.index_of(pauli_op('X').kron(eye)),
                              eg.group.index_of(pauli_op('Z').kron(eye))};
        NormalSubgroupCtx n = make_normal_subgroup(eg, normal_closure(eg.group.structure, gens));
        CHECK(n.order() == 8);
        CHECK(!n.view.local.is_abelian());
        auto induced = induced_characters(eg, n);
        REQUIRE(induced.size() == 1);  // the 2-dim character, multiplicity 2
        CHECK(induced[0].degree == 2);
        CHECK(induced[0].multiplicity == 2);
        CHECK(induced[0].chi_bar.is_identity());

        IdempotentSplit split = primitive_idempotents(eg, n, induced[0], 1);
        CHECK(split.exact);
        REQUIRE(split.parts.size() == 2);
        CycMatrix sum = CycMatrix::zeros(4, 4);
        for (const auto& e : split.parts) {
            CHECK(e.is_hermitian());
            CHECK(e * e == e);
            CHECK(mat_rank(e) == 2);
            sum = sum + e;
        }
        CHECK(sum == induced[0].chi_bar);
        CHECK((split.parts[0] * split.parts[1]).is_zero());

        // e_i g e_i proportional to e_i for every g in N, exhaustively
        for (const auto& e : split.parts)
            for (int l = 0; l < n.order(); ++l) {
                auto lam = is_proportional(e * n.matrix(eg, l) * e, e);
                CHECK(lam.has_value());
            }
    }

    TEST_CASE("idempotent splitting is deterministic in the seed") {
        NiceErrorBasis two = tensor_basis(pauli_basis(2), pauli_basis(2));
        ErrorGroup eg = error_group_from_basis(two);
        CycMatrix eye = CycMatrix::identity(2);
        std::vector<int> gens{eg.group.index_of(pauli_op('X').kron(eye)),
                              eg.group.index_of(pauli_op('Z').kron(eye))};
        NormalSubgroupCtx n = make_normal_subgroup(eg, normal_closure(eg.group.structure, gens));
        auto induced = induced_characters(eg, n);
        IdempotentSplit a = primitive_idempotents(eg, n, induced[0], 7);
        IdempotentSplit b = primitive_idempotents(eg, n, induced[0], 7);
        REQUIRE(a.parts.size() == b.parts.size());
        for (size_t i = 0; i < a.parts.size(); ++i) CHECK(a.parts[i] == b.parts[i]);
    }
}

TEST_SUITE("detectability") {
    TEST_CASE("identity is detectable with lambda = 1") {
        Instance inst = make_instance("bitflip3");
        NormalSubgroupCtx n = instance_subgroup(inst);
        CodeSpace code = build_character_code(inst.eg, n, inst.chi);
        auto lam = is_detectable(code, CycMatrix::identity(8));
        REQUIRE(lam.has_value());
        CHECK(lam->is_one());
    }

    TEST_CASE("single bit flips are detectable, single sign flips are not") {
        Instance inst = make_instance("bitflip3");
        NormalSubgroupCtx n = instance_subgroup(inst);
        CodeSpace code = build_character_code(inst.eg, n, inst.chi);
        auto x1 = is_detectable(code, tensor3("XII"));
        REQUIRE(x1.has_value());
        CHECK(x1->is_zero());
        CHECK(!is_detectable(code, tensor3("ZII")).has_value());
    }

    TEST_CASE("correctability through products") {
        Instance inst = make_instance("bitflip3");
        NormalSubgroupCtx n = instance_subgroup(inst);
        CodeSpace code = build_character_code(inst.eg, n, inst.chi);
        CHECK(is_correctable_set(code, {CycMatrix::identity(8)}).correctable);
        std::vector<CycMatrix> good{CycMatrix::identity(8), tensor3("XII"), tensor3("IXI"),
                                    tensor3("IIX")};
        CHECK(is_correctable_set(code, good).correctable);
        std::vector<CycMatrix> bad{CycMatrix::identity(8), tensor3("ZII")};
        CorrectableReport rep = is_correctable_set(code, bad);
        CHECK(!rep.correctable);
        bool has_01 = false;
        for (auto& [i, j] : rep.failures)
            if (i == 0 && j == 1) has_01 = true;
        CHECK(has_01);
    }
}

TEST_SUITE("error classification") {
    TEST_CASE("bit-flip instance classifies all 256 elements with zero disagreements") {
        Instance inst = make_instance("bitflip3");
        NormalSubgroupCtx n = instance_subgroup(inst);
        // classify_errors re-verifies every theorem claim against the direct
        // detectability test and throws on any disagreement
        ErrorClassification cls = classify_errors(inst.eg, n, inst.chi);
        CHECK(cls.outside_count == 192);
        CHECK(cls.subgroup_count == 8);
        CHECK(cls.other_count == 56);

        int x1 = inst.eg.group.index_of(tensor3("XII"));
        int zz = inst.eg.group.index_of(tensor3("ZZI"));
        int z1 = inst.eg.group.index_of(tensor3("ZII"));
        CHECK(cls.cls[static_cast<size_t>(x1)] == ErrClass::outside_inertia);
        CHECK(cls.cls[static_cast<size_t>(zz)] == ErrClass::in_subgroup);
        CHECK(cls.in_rep_center[static_cast<size_t>(zz)]);
        CHECK(cls.cls[static_cast<size_t>(z1)] == ErrClass::inertia_other);
        CodeSpace code = build_character_code(inst.eg, n, inst.chi);
        CHECK(!is_detectable(code, tensor3("ZII")).has_value());
    }

    TEST_CASE("with N the whole group, nothing lies outside the inertia subgroup") {
        NiceErrorBasis qubit = pauli_basis(2);
        ErrorGroup eg = error_group_from_basis(qubit);
        std::vector<int> all(static_cast<size_t>(eg.order()));
        for (int i = 0; i < eg.order(); ++i) all[static_cast<size_t>(i)] = i;
        NormalSubgroupCtx n = make_normal_subgroup(eg, all);
        long chi = -1;
        for (long c = 0; c < static_cast<long>(n.table.characters.size()); ++c)
            if (n.table.dims[static_cast<size_t>(c)] == 2) chi = c;
        ErrorClassification cls = classify_errors(eg, n, chi);
        CHECK(cls.outside_count == 0);
        CHECK(cls.subgroup_count == eg.order());
    }
}

TEST_SUITE("detectable span dimension") {
    TEST_CASE("bit-flip: rank 61 against the closed-form count") {
        Instance inst = make_instance("bitflip3");
        NormalSubgroupCtx n = instance_subgroup(inst);
        DetectableSpanReport rep = detectable_span_dimension(inst.eg, n, inst.chi);
        CHECK(rep.rank == 61);
        CHECK(rep.formula == 61);
        CHECK(rep.d_dim == 13);
        CHECK(rep.d_dim_formula == 13);
        CHECK(rep.outside_rank == 64 - 64 / 4);
    }

    TEST_CASE("Bell: every operator is detectable on a one-dimensional code") {
        Instance inst = make_instance("bell2");
        NormalSubgroupCtx n = instance_subgroup(inst);
        DetectableSpanReport rep = detectable_span_dimension(inst.eg, n, inst.chi);
        CHECK(rep.rank == 16);
        CHECK(rep.formula == 16);
        CHECK(rep.d_dim == 4);
    }

    TEST_CASE("central N: only scalars are detectable") {
        Instance inst = make_instance("bell2");
        NormalSubgroupCtx z = make_normal_subgroup(inst.eg, inst.eg.center);
        auto induced = induced_characters(inst.eg, z);
        REQUIRE(induced.size() == 1);
        DetectableSpanReport rep = detectable_span_dimension(inst.eg, z, induced[0].chi_index);
        CHECK(rep.rank == 1);
        CHECK(rep.formula == 1);
    }
}

TEST_SUITE("representation centers") {
    TEST_CASE("abelian N acts as scalars everywhere") {
        Instance inst = make_instance("bitflip3");
        NormalSubgroupCtx n = instance_subgroup(inst);
        std::vector<int> c = representation_center(n, inst.chi);
        CHECK(c == n.elems);
    }

    TEST_CASE("a non-abelian N has a proper representation center") {
        NiceErrorBasis two = tensor_basis(pauli_basis(2), pauli_basis(2));
        ErrorGroup eg = error_group_from_basis(two);
        CycMatrix eye = CycMatrix::identity(2);
        std::vector<int> gens{eg.group.index_of(pauli_op('X').kron(eye)),
                              eg.group.index_of(pauli_op('Z').kron(eye))};
        NormalSubgroupCtx n = make_normal_subgroup(eg, normal_closure(eg.group.structure, gens));
        auto induced = induced_characters(eg, n);
        std::vector<int> c = representation_center(n, induced[0].chi_index);
        CHECK(c.size() == 2);  // +-identity only
    }
}
