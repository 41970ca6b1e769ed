// Copyright (c) 2026 The nicebase authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <filesystem>

#include "nicebase/instances.hpp"
#include "nicebase/json_io.hpp"

using namespace nicebase;

TEST_SUITE("canonical JSON") {
    TEST_CASE("scalars round trip through their minimal order") {
        CycScalar s = CycScalar::zeta(8) + CycScalar::from_rational(rat(3, 7));
        Json j = to_json(s);
        CHECK(cyc_from_json(j) == s);
        // a value stored at a wasteful order serializes at its minimal order
        CycScalar wasteful = CycScalar::zeta(12, 6);  // = -1
        CHECK(to_json(wasteful)["order"] == 1);
        CHECK(cyc_from_json(to_json(wasteful)) == CycScalar::from_int(-1));
    }

    TEST_CASE("matrices share one field order") {
        CycMatrix m(2, 2);
        m.at(0, 0) = CycScalar::zeta(8);
        m.at(1, 1) = CycScalar::zeta(3);
        Json j = to_json(m);
        CHECK(j["order"] == 24);
        CHECK(mat_from_json(j) == m);
    }

    TEST_CASE("serialization is byte-deterministic") {
        NiceErrorBasis b = pauli_basis(3);
        std::string once = canonical_dump(to_json(b));
        std::string twice = canonical_dump(to_json(pauli_basis(3)));
        CHECK(once == twice);
        CHECK(content_hash(once) == content_hash(twice));
        NiceErrorBasis back = basis_from_json(Json::parse(once));
        CHECK(canonical_dump(to_json(back)) == once);
    }

    TEST_CASE("groups and code spaces round trip") {
        AbstractGroup q8 = quaternion_group();
        CHECK(group_from_json(to_json(q8)).table == q8.table);

        NiceErrorBasis qubit = pauli_basis(2);
        FiniteMatrixGroup g = close_generators(qubit.ops());
        FiniteMatrixGroup back = matrix_group_from_json(to_json(g));
        CHECK(back.order() == g.order());
        for (int i = 0; i < g.order(); ++i) CHECK(back.matrix(i) == g.matrix(i));

        Instance inst = make_instance("bell2");
        NormalSubgroupCtx n = instance_subgroup(inst);
        CodeSpace code = build_character_code(inst.eg, n, inst.chi);
        CodeSpace code_back = code_from_json(to_json(code));
        CHECK(code_back.projector == code.projector);
        CHECK(code_back.logical == code.logical);
        CHECK(code_back.chi_index == code.chi_index);
    }

    TEST_CASE("workspace saves and loads byte-identical objects") {
        std::string dir = (std::filesystem::temp_directory_path() / "nicebase_ws_test").string();
        std::filesystem::remove_all(dir);
        Workspace ws(dir);
        Json obj = to_json(pauli_basis(2));
        ws.save("qubit", "basis", obj);
        CHECK(ws.has("qubit"));
        CHECK(ws.kind_of("qubit") == "basis");
        CHECK(canonical_dump(ws.load("qubit")) == canonical_dump(obj));
        // reopening reads the manifest back
        Workspace again(dir);
        CHECK(again.has("qubit"));
        CHECK(canonical_dump(again.load("qubit")) == canonical_dump(obj));
        std::filesystem::remove_all(dir);
    }
}
