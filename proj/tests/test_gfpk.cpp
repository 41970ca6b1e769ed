// Copyright (c) 2026 The nicebase authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <set>

#include "nicebase/gfpk.hpp"
#include "nicebase/instances.hpp"
#include "nicebase/linalg.hpp"

using namespace nicebase;

namespace {

Codeword cw(const FieldCtx& f, std::vector<long> indices) {
    Codeword w;
    for (long i : indices) w.push_back(f.from_index(i));
    return w;
}

std::set<long> word_set(const FieldCtx& f, const std::vector<Codeword>& words) {
    std::set<long> s;
    for (const auto& w : words) s.insert(word_state_index(f, w));
    return s;
}

uint64_t mix(uint64_t& s) {
    s += 0x9e3779b97f4a7c15ull;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace

TEST_SUITE("field arithmetic") {
    TEST_CASE("GF(2) and GF(4) basics") {
        FieldCtx f2(2, 1);
        CHECK(f2.add(f2.one(), f2.one()).is_zero());

        FieldCtx f4(2, 2);  // x^2 + x + 1
        FieldElem theta = f4.theta();
        FieldElem theta_sq = f4.mul(theta, theta);
        CHECK(theta_sq == f4.add(theta, f4.one()));
        // every nonzero element has multiplicative order dividing 3
        for (long i = 1; i < 4; ++i)
            CHECK(f4.pow(f4.from_index(i), 3) == f4.one());
    }

    TEST_CASE("reducible polynomials are rejected") {
        CHECK_THROWS_AS(FieldCtx(2, 2, std::vector<int>{1, 0, 1}), std::invalid_argument);  // (x+1)^2
        CHECK_THROWS_AS(FieldCtx(4, 1), std::invalid_argument);                             // 4 not prime
        CHECK_NOTHROW(FieldCtx(3, 2));
        CHECK_NOTHROW(FieldCtx(3, 3));
        CHECK_NOTHROW(FieldCtx(5, 2));
    }

    TEST_CASE("GF(9): field axioms verified exhaustively at construction") {
        FieldCtx f9(3, 2);
        CHECK(f9.size() == 9);
        for (long i = 1; i < 9; ++i)
            CHECK(f9.pow(f9.from_index(i), 8) == f9.one());
    }
}

TEST_SUITE("duals relative to b") {
    TEST_CASE("trivial and full codes swap under the dual") {
        FieldCtx f4(2, 2);
        LinearForm b = LinearForm::coefficient_form(f4);
        LinearCode zero{2, {}};
        LinearCode full = make_linear_code(f4, 2, {cw(f4, {1, 0}), cw(f4, {0, 1})});
        CHECK(dual_b(f4, zero, b).dim() == 2);
        CHECK(dual_b(f4, full, b).dim() == 0);
    }

    TEST_CASE("dual of span{(1, theta)} in GF(4)^2 against exhaustive search") {
        FieldCtx f4(2, 2);
        LinearForm b = LinearForm::coefficient_form(f4);
        LinearCode code = make_linear_code(f4, 2, {{f4.one(), f4.theta()}});
        std::vector<Codeword> members = enumerate_codewords(f4, to_zp_code(f4, code));
        // brute-force oracle over all 16 vectors
        std::set<long> expect;
        for (long xi = 0; xi < 16; ++xi) {
            Codeword x = word_of_state_index(f4, 2, xi);
            bool in_dual = true;
            for (const auto& y : members) {
                int acc = 0;
                for (size_t t = 0; t < 2; ++t) acc = (acc + b.pairing(f4, x[t], y[t])) % 2;
                if (acc != 0) in_dual = false;
            }
            if (in_dual) expect.insert(xi);
        }
        ZpCode dual = dual_b_zp(f4, to_zp_code(f4, code), b);
        CHECK(dual.zp_dim() == 2);
        CHECK(word_set(f4, enumerate_codewords(f4, dual)) == expect);
        CHECK(expect.size() == 4);
    }

    TEST_CASE("the b-dual equals the ordinary dual for every line in GF(4)^2") {
        FieldCtx f4(2, 2);
        LinearForm b = LinearForm::coefficient_form(f4);
        // all five 1-dimensional subspaces: spans of (1,0),(0,1),(1,1),(1,th),(1,th^2)
        std::vector<Codeword> reps{cw(f4, {1, 0}), cw(f4, {0, 1}), cw(f4, {1, 1}),
                                   cw(f4, {1, 2}), cw(f4, {1, 3})};
        for (const auto& r : reps) {
            LinearCode code = make_linear_code(f4, 2, {r});
            CHECK(check_dual_equality(f4, code, b));
        }
        // a different nonzero form gives the same statement
        LinearForm b2(f4, {0, 1});
        for (const auto& r : reps) {
            LinearCode code = make_linear_code(f4, 2, {r});
            CHECK(check_dual_equality(f4, code, b2));
        }
    }

    TEST_CASE("the dual is an involution and dimensions add up over Z_p") {
        FieldCtx f4(2, 2);
        LinearForm b = LinearForm::coefficient_form(f4);
        for (long rep = 0; rep < 5; ++rep) {
            std::vector<Codeword> reps{cw(f4, {1, 0}), cw(f4, {0, 1}), cw(f4, {1, 1}),
                                       cw(f4, {1, 2}), cw(f4, {1, 3})};
            LinearCode code = make_linear_code(f4, 2, {reps[static_cast<size_t>(rep)]});
            LinearCode dd = dual_b(f4, dual_b(f4, code, b), b);
            CHECK(dd.dim() == code.dim());
            for (const auto& row : code.gen) CHECK(linear_contains(f4, dd, row));
            ZpCode z = to_zp_code(f4, code);
            ZpCode dz = dual_b_zp(f4, z, b);
            CHECK(z.zp_dim() + dz.zp_dim() == 2 * 2);
        }
    }

    TEST_CASE("random GF(9) codes satisfy dual equality") {
        FieldCtx f9(3, 2);
        LinearForm b = LinearForm::coefficient_form(f9);
        uint64_t s = 99;
        int tested = 0;
        while (tested < 8) {
            Codeword r = cw(f9, {static_cast<long>(mix(s) % 9), static_cast<long>(mix(s) % 9)});
            if (r[0].is_zero() && r[1].is_zero()) continue;
            LinearCode code = make_linear_code(f9, 2, {r});
            CHECK(check_dual_equality(f9, code, b));
            ++tested;
        }
    }
}

TEST_SUITE("minimum weight") {
    TEST_CASE("repetition, full space and a line") {
        FieldCtx f4(2, 2);
        LinearCode rep3 = make_linear_code(f4, 3, {cw(f4, {1, 1, 1})});
        CHECK(min_weight(f4, rep3) == 3);
        LinearCode full = make_linear_code(f4, 2, {cw(f4, {1, 0}), cw(f4, {0, 1})});
        CHECK(min_weight(f4, full) == 1);
        LinearCode line = make_linear_code(f4, 2, {{f4.one(), f4.theta()}});
        CHECK(min_weight(f4, line) == 2);  // three nonzero words, all weight 2
        std::vector<Codeword> words = enumerate_codewords(f4, to_zp_code(f4, line));
        long nonzero = 0;
        for (const auto& w : words) {
            long weight = 0;
            for (const auto& sym : w)
                if (!sym.is_zero()) ++weight;
            if (weight > 0) {
                ++nonzero;
                CHECK(weight == 2);
            }
        }
        CHECK(nonzero == 3);
        LinearCode zero{2, {}};
        CHECK_THROWS_AS(min_weight(f4, zero), std::invalid_argument);
    }
}

TEST_SUITE("quantum codes from nested pairs") {
    TEST_CASE("the binary three-bit pair reproduces the phase-type stabilizer code") {
        FieldCtx f2(2, 1);
        LinearForm b = LinearForm::coefficient_form(f2);
        LinearCode c = make_linear_code(f2, 3, {cw(f2, {1, 1, 1}), cw(f2, {1, 0, 0})});
        ZpCode c0 = make_zp_code(f2, 3, {cw(f2, {1, 1, 1})});
        QuantumCodePair pair = quantum_code_from_pair(f2, c, c0, b);
        CHECK(pair.logicals.size() == 2);
        CHECK(pair.code.dim() == 2);
        CHECK(pair.stabilizer_chi >= 0);
        // the code equals the joint fixed space of C_111 and D_011: it
        // contains |000>+|111> and |100>+|011>
        CycMatrix v(8, 1);
        CycScalar amp = CycScalar::sqrt_of_rational(rat(1, 2));
        v.at(0, 0) = amp;
        v.at(7, 0) = amp;
        CHECK(pair.code.projector * v == v);
        CycMatrix w(8, 1);
        w.at(4, 0) = amp;
        w.at(3, 0) = amp;
        CHECK(pair.code.projector * w == w);
        // stabilizer contains the expected displacement operators
        CHECK(pair.stabilizer.index_of(code_displacement(f2, b, cw(f2, {1, 1, 1}), cw(f2, {0, 0, 0}))) >= 0);
        CHECK(pair.stabilizer.index_of(code_displacement(f2, b, cw(f2, {0, 0, 0}), cw(f2, {0, 1, 1}))) >= 0);
    }

    TEST_CASE("GF(4) demo pair: logical states are the subfield coset sums") {
        FieldCtx f4(2, 2);
        LinearForm b = LinearForm::coefficient_form(f4);
        LinearCode c = make_linear_code(f4, 1, {{f4.one()}});
        ZpCode c0 = make_zp_code(f4, 1, {{f4.one()}});
        QuantumCodePair pair = quantum_code_from_pair(f4, c, c0, b, Codeword{f4.theta()});
        REQUIRE(pair.logicals.size() == 2);
        CycScalar amp = CycScalar::sqrt_of_rational(rat(1, 2));
        CycMatrix zero_l(4, 1), one_l(4, 1);
        zero_l.at(0, 0) = amp;  // |0>
        zero_l.at(1, 0) = amp;  // |1>
        one_l.at(2, 0) = amp;   // |theta>
        one_l.at(3, 0) = amp;   // |theta + 1>
        CHECK(pair.logicals[0] == zero_l);
        CHECK(pair.logicals[1] == one_l);
        // fixing set: u in {0, 1}, v = 0, phase exponent always zero
        REQUIRE(pair.fixing.size() == 2);
        for (const auto& [u, vv, j] : pair.fixing) {
            CHECK(j == 0);
            CHECK(vv[0].is_zero());
            CHECK((u[0].is_zero() || u[0] == f4.one()));
        }
    }

    TEST_CASE("leaders must be fresh and inside C") {
        FieldCtx f4(2, 2);
        LinearForm b = LinearForm::coefficient_form(f4);
        LinearCode c = make_linear_code(f4, 1, {{f4.one()}});
        ZpCode c0 = make_zp_code(f4, 1, {{f4.one()}});
        CHECK_THROWS_AS(quantum_code_from_pair(f4, c, c0, b, Codeword{f4.one()}),
                        std::invalid_argument);  // leader in C0
        ZpCode not_sub = make_zp_code(f4, 1, {{f4.theta()}});
        LinearCode small = make_linear_code(f4, 1, {});
        CHECK_THROWS_AS(quantum_code_from_pair(f4, small, not_sub, b), std::invalid_argument);
    }

    TEST_CASE("higher codimension produces one logical state per coset") {
        FieldCtx f2(2, 1);
        LinearForm b = LinearForm::coefficient_form(f2);
        LinearCode c = make_linear_code(f2, 2, {cw(f2, {1, 0}), cw(f2, {0, 1})});
        ZpCode c0 = make_zp_code(f2, 2, {});  // trivial subcode, codimension 2
        QuantumCodePair pair = quantum_code_from_pair(f2, c, c0, b);
        CHECK(pair.logicals.size() == 4);
        CHECK(pair.code.dim() == 4);
    }
}

TEST_SUITE("code reports") {
    TEST_CASE("three-bit repetition pair: weight-1 sign errors are exhibited") {
        FieldCtx f2(2, 1);
        LinearForm b = LinearForm::coefficient_form(f2);
        LinearCode c = make_linear_code(f2, 3, {cw(f2, {1, 1, 1})});
        ZpCode c0 = make_zp_code(f2, 3, {});
        GfpkCodeReport rep = gfpk_code_report(f2, c, c0, b);
        CHECK(rep.min_weight_c == 3);
        CHECK(rep.min_weight_dual_c0 == 1);  // the dual of {0} is everything
        CHECK(rep.e == 0);
        CHECK(rep.direct_checked);
        CHECK(rep.detect_verified);   // support <= 0 is just the identity
        CHECK(rep.correct_verified);
        REQUIRE(rep.weight1_undetectable.has_value());
        // the exhibited operator really is undetectable
        QuantumCodePair pair = quantum_code_from_pair(f2, c, c0, b);
        CycMatrix op = code_displacement(f2, b, rep.weight1_undetectable->first,
                                         rep.weight1_undetectable->second);
        CHECK(!is_detectable(pair.code, op).has_value());
    }

    TEST_CASE("GF(4) demo pair report") {
        FieldCtx f4(2, 2);
        LinearForm b = LinearForm::coefficient_form(f4);
        LinearCode c = make_linear_code(f4, 1, {{f4.one()}});
        ZpCode c0 = make_zp_code(f4, 1, {{f4.one()}});
        GfpkCodeReport rep = gfpk_code_report(f4, c, c0, b);
        CHECK(rep.min_weight_c == 1);
        CHECK(rep.e == 0);
        CHECK(rep.direct_checked);
    }
}

TEST_SUITE("gf4-demo instance") {
    TEST_CASE("the stabilizer embeds into the error group as a normal subgroup") {
        Instance inst = make_instance("gf4-demo");
        REQUIRE(inst.pair.has_value());
        CHECK(inst.eg.order() == 32);
        CHECK(inst.normal.size() == 4);
        CHECK(is_normal(inst.eg.group.structure, inst.normal));
        NormalSubgroupCtx n = instance_subgroup(inst);
        CodeSpace code = build_character_code(inst.eg, n, inst.chi);
        CHECK(code.projector == inst.pair->code.projector);
    }

    TEST_CASE("the inertia subgroup is generated by C_u D_v with u in C, v in the dual of C0") {
        Instance inst = make_instance("gf4-demo");
        NormalSubgroupCtx n = instance_subgroup(inst);
        InertiaData t = inertia_subgroup(inst.eg, n, inst.chi);
        const FieldCtx& f4 = *inst.field;
        LinearForm b = LinearForm::coefficient_form(f4);
        LinearCode c = make_linear_code(f4, 1, {{f4.one()}});
        ZpCode c0 = make_zp_code(f4, 1, {{f4.one()}});
        ZpCode c0perp = dual_b_zp(f4, c0, b);
        // collect all phased C_u D_v with u in C, v in C0-perp
        std::set<int> expect;
        for (const auto& u : enumerate_codewords(f4, to_zp_code(f4, c)))
            for (const auto& v : enumerate_codewords(f4, c0perp)) {
                CycMatrix op = code_displacement(f4, b, u, v);
                int idx = inst.eg.group.index_of(op);
                REQUIRE(idx >= 0);
                expect.insert(idx);
                expect.insert(inst.eg.group.index_of(-op));
            }
        std::set<int> got(t.subgroup.begin(), t.subgroup.end());
        CHECK(got == expect);
    }
}
