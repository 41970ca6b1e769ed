// Copyright (c) 2026 The nicebase authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <set>

#include "nicebase/instances.hpp"
#include "nicebase/linalg.hpp"
#include "nicebase/transversal.hpp"

using namespace nicebase;

namespace {

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

const TransversalEntry* find_element(const TransversalReport& rep, int idx) {
    for (const auto& e : rep.entries)
        if (e.element == idx) return &e;
    return nullptr;
}

}  // namespace

TEST_SUITE("transversal operations") {
    TEST_CASE("bit-flip instance: XXX acts as logical X, ZII as logical Z") {
        Instance inst = make_instance("bitflip3");
        NormalSubgroupCtx n = instance_subgroup(inst);
        TransversalReport rep = transversal_ops(inst.eg, n, inst.chi);
        CHECK(rep.entries.size() == 64);  // all of T(chi) within the error group

        int xxx = inst.eg.group.index_of(tensor3("XXX"));
        int zii = inst.eg.group.index_of(tensor3("ZII"));
        const TransversalEntry* ex = find_element(rep, xxx);
        const TransversalEntry* ez = find_element(rep, zii);
        REQUIRE(ex != nullptr);
        REQUIRE(ez != nullptr);

        CycMatrix logical_x(2, 2), logical_z(2, 2);
        logical_x.at(0, 1) = CycScalar::one();
        logical_x.at(1, 0) = CycScalar::one();
        logical_z.at(0, 0) = CycScalar::one();
        logical_z.at(1, 1) = -CycScalar::one();
        CHECK(ex->logical == logical_x);
        CHECK(ez->logical == logical_z);

        // elements of N act as scalars on the code
        for (int e : n.elems) {
            const TransversalEntry* en = find_element(rep, e);
            REQUIRE(en != nullptr);
            CHECK(en->logical.scalar_of_identity().has_value());
        }
    }

    TEST_CASE("logical actions close under composition up to a phase") {
        Instance inst = make_instance("bell2");
        NormalSubgroupCtx n = instance_subgroup(inst);
        TransversalReport rep = transversal_ops(inst.eg, n, inst.chi);
        // one-dimensional code: every logical action is a scalar
        for (const auto& e : rep.entries) CHECK(e.logical.rows() == 1);
        for (size_t i = 0; i < rep.entries.size() && i < 6; ++i)
            for (size_t j = 0; j < rep.entries.size() && j < 6; ++j) {
                CycMatrix prod = rep.entries[i].logical * rep.entries[j].logical;
                bool proportional_to_some = false;
                for (const auto& e : rep.entries)
                    if (is_proportional(prod, e.logical)) proportional_to_some = true;
                CHECK(proportional_to_some);
            }
    }

    TEST_CASE("the transversal Hadamard candidate fails to normalize a phase-type N") {
        Instance inst = make_instance("bitflip3");
        NormalSubgroupCtx n = instance_subgroup(inst);
        CycScalar inv_sqrt2 = (CycScalar::zeta(8, 1) + CycScalar::zeta(8, 7)) *
                              CycScalar::from_rational(rat(1, 2));
        CycMatrix had(2, 2);
        had.at(0, 0) = inv_sqrt2;
        had.at(0, 1) = inv_sqrt2;
        had.at(1, 0) = inv_sqrt2;
        had.at(1, 1) = -inv_sqrt2;
        FactoredUnitary fu;
        fu.label = "HHH";
        fu.factors = {had, had, had};
        TransversalReport rep = transversal_ops(inst.eg, n, inst.chi, {fu});
        bool rejected = false;
        for (const auto& r : rep.rejected)
            if (r.find("HHH") != std::string::npos && r.find("normalize") != std::string::npos)
                rejected = true;
        CHECK(rejected);
    }

    TEST_CASE("a Kronecker mismatch between claimed factors and the full matrix is caught") {
        Instance inst = make_instance("bitflip3");
        NormalSubgroupCtx n = instance_subgroup(inst);
        FactoredUnitary fu;
        fu.label = "bogus";
        fu.factors = {pauli_op('Z'), pauli_op('I'), pauli_op('I')};
        fu.full = tensor3("IIZ");  // disagrees with Z(x)I(x)I
        TransversalReport rep = transversal_ops(inst.eg, n, inst.chi, {fu});
        bool rejected = false;
        for (const auto& r : rep.rejected)
            if (r.find("Kronecker") != std::string::npos) rejected = true;
        CHECK(rejected);
    }

    TEST_CASE("a declared tensor-factored ZZZ candidate is admitted") {
        Instance inst = make_instance("bitflip3");
        NormalSubgroupCtx n = instance_subgroup(inst);
        FactoredUnitary fu;
        fu.label = "ZZZ";
        fu.factors = {pauli_op('Z'), pauli_op('Z'), pauli_op('Z')};
        fu.full = tensor3("ZZZ");
        TransversalReport rep = transversal_ops(inst.eg, n, inst.chi, {fu});
        bool admitted = false;
        for (const auto& e : rep.entries)
            if (e.label == "ZZZ") admitted = true;
        CHECK(admitted);
    }
}

TEST_SUITE("two-block transversal operations") {
    TEST_CASE("the pairing permutation is a unitary reordering") {
        CycMatrix p = pairing_permutation(2, 2);
        CHECK(p.is_unitary());
        // source digits (x1 x2 y1 y2), destination digits (x1 y1 x2 y2):
        // |0 0 1 0> moves to |0 1 0 0>
        CycMatrix v(16, 1);
        v.at(0b0010, 0) = CycScalar::one();
        CycMatrix moved = p * v;
        long target = -1;
        for (long i = 0; i < 16; ++i)
            if (!moved.at(i, 0).is_zero()) target = i;
        CHECK(target == 0b0100);
    }

    TEST_CASE("per-pair SWAP gives the logical SWAP on the doubled code") {
        Instance inst = make_instance("bitflip3");
        NormalSubgroupCtx n = instance_subgroup(inst);
        CycMatrix swap(4, 4);
        swap.at(0, 0) = CycScalar::one();
        swap.at(1, 2) = CycScalar::one();
        swap.at(2, 1) = CycScalar::one();
        swap.at(3, 3) = CycScalar::one();
        FactoredUnitary fu;
        fu.label = "swap";
        fu.factors = {swap};
        TransversalReport rep = two_block_transversal(inst.eg, n, inst.chi, {fu}, 3);
        REQUIRE(rep.entries.size() == 1);
        const CycMatrix& l = rep.entries[0].logical;
        REQUIRE(l.rows() == 4);
        CycMatrix expect(4, 4);
        expect.at(0, 0) = CycScalar::one();
        expect.at(1, 2) = CycScalar::one();
        expect.at(2, 1) = CycScalar::one();
        expect.at(3, 3) = CycScalar::one();
        CHECK(l == expect);
    }

    TEST_CASE("per-pair identity acts as the logical identity") {
        Instance inst = make_instance("bell2");
        NormalSubgroupCtx n = instance_subgroup(inst);
        FactoredUnitary fu;
        fu.label = "id";
        fu.factors = {CycMatrix::identity(4)};
        TransversalReport rep = two_block_transversal(inst.eg, n, inst.chi, {fu}, 2);
        REQUIRE(rep.entries.size() == 1);
        CHECK(rep.entries[0].logical.is_identity());
    }

    TEST_CASE("per-pair controlled-X gives the logical controlled-X") {
        Instance inst = make_instance("bitflip3");
        NormalSubgroupCtx n = instance_subgroup(inst);
        CycMatrix cx(4, 4);
        cx.at(0, 0) = CycScalar::one();
        cx.at(1, 1) = CycScalar::one();
        cx.at(2, 3) = CycScalar::one();
        cx.at(3, 2) = CycScalar::one();
        FactoredUnitary fu;
        fu.label = "cnot";
        fu.factors = {cx};
        TransversalReport rep = two_block_transversal(inst.eg, n, inst.chi, {fu}, 3);
        REQUIRE(rep.entries.size() == 1);
        CycMatrix expect(4, 4);
        expect.at(0, 0) = CycScalar::one();
        expect.at(1, 1) = CycScalar::one();
        expect.at(2, 3) = CycScalar::one();
        expect.at(3, 2) = CycScalar::one();
        CHECK(rep.entries[0].logical == expect);
    }

    TEST_CASE("a candidate failing to normalize N x N is excluded with a diagnostic") {
        Instance inst = make_instance("bell2");
        NormalSubgroupCtx n = instance_subgroup(inst);
        // controlled-phase by zeta_8 does not normalize the Pauli pairs
        CycMatrix cs(4, 4);
        cs.at(0, 0) = CycScalar::one();
        cs.at(1, 1) = CycScalar::one();
        cs.at(2, 2) = CycScalar::one();
        cs.at(3, 3) = CycScalar::zeta(8);
        FactoredUnitary fu;
        fu.label = "cphase8";
        fu.factors = {cs};
        TransversalReport rep = two_block_transversal(inst.eg, n, inst.chi, {fu}, 2);
        CHECK(rep.entries.empty());
        REQUIRE(rep.rejected.size() == 1);
        CHECK(rep.rejected[0].find("normalize") != std::string::npos);
    }
}
