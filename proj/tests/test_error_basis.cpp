// Copyright (c) 2026 The nicebase authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <set>

#include "nicebase/error_basis.hpp"
#include "nicebase/linalg.hpp"

using namespace nicebase;

namespace {

const CycMatrix& op_of(const NiceErrorBasis& b, long a, long bb) {
    long p = b.dim();
    return b.op(static_cast<int>(a * p + bb));
}

}  // namespace

TEST_SUITE("shift/clock bases") {
    TEST_CASE("qubit basis is {I, X, Z, XZ} with the right traces") {
        NiceErrorBasis b = pauli_basis(2);
        REQUIRE(b.size() == 4);
        CHECK(op_of(b, 0, 0).is_identity());
        CycMatrix x(2, 2), z(2, 2);
        x.at(0, 1) = CycScalar::one();
        x.at(1, 0) = CycScalar::one();
        z.at(0, 0) = CycScalar::one();
        z.at(1, 1) = -CycScalar::one();
        CHECK(op_of(b, 1, 0) == x);
        CHECK(op_of(b, 0, 1) == z);
        CHECK(op_of(b, 1, 1) == x * z);
        for (int g = 0; g < 4; ++g)
            CHECK(b.op(g).trace() ==
                  (g == b.index_group().identity ? CycScalar::from_int(2) : CycScalar::zero()));
        CHECK_THROWS_AS(pauli_basis(4), std::invalid_argument);
        CHECK_THROWS_AS(pauli_basis(17), std::invalid_argument);
    }

    TEST_CASE("X and Z anticommute through the cocycle") {
        NiceErrorBasis b = pauli_basis(2);
        // E_(0,1) E_(1,0) = omega E_(1,1) with omega = -1 (Z X = -X Z)
        CHECK(b.cocycle(0 * 2 + 1, 1 * 2 + 0) == CycScalar::from_int(-1));
        CHECK(b.cocycle(1 * 2 + 0, 0 * 2 + 1) == CycScalar::one());
    }

    TEST_CASE("qutrit basis is exactly trace-orthogonal on all 81 pairs") {
        NiceErrorBasis b = pauli_basis(3);
        REQUIRE(b.size() == 9);
        for (int g = 0; g < 9; ++g)
            for (int h = 0; h < 9; ++h)
                CHECK((b.op(g).dagger() * b.op(h)).trace() ==
                      (g == h ? CycScalar::from_int(3) : CycScalar::zero()));
    }
}

TEST_SUITE("tensor products") {
    TEST_CASE("two qubits give sixteen operators over Z_2^4") {
        NiceErrorBasis b = tensor_basis(pauli_basis(2), pauli_basis(2));
        CHECK(b.size() == 16);
        CHECK(b.dim() == 4);
        AbstractGroup z2_4 = direct_product(direct_product(cyclic_group(2), cyclic_group(2)),
                                            direct_product(cyclic_group(2), cyclic_group(2)));
        CHECK(group_isomorphic(b.index_group(), z2_4));
    }

    TEST_CASE("tensoring with the trivial basis changes nothing") {
        NiceErrorBasis triv(1, cyclic_group(1), {CycMatrix::identity(1)});
        NiceErrorBasis b = tensor_basis(pauli_basis(2), triv);
        REQUIRE(b.size() == 4);
        for (int g = 0; g < 4; ++g) CHECK(b.op(g) == pauli_basis(2).op(g));
    }

    TEST_CASE("three qubits stay nice") {
        NiceErrorBasis b = tensor_power(pauli_basis(2), 3);
        CHECK(b.size() == 64);
        NiceBasisReport rep = verify_nice(b);
        CHECK(rep.all_nice());
    }
}

TEST_SUITE("semidirect construction") {
    TEST_CASE("generator relations of the dim-4 basis") {
        EgnerGenerators g = egner_like_generators();
        CycMatrix eye = CycMatrix::identity(4);
        CHECK(g.a.pow(4) == -eye);
        CHECK(g.b.pow(2) == eye);
        CHECK(g.c.pow(2) == -eye);
        CHECK(g.a * g.c == -(g.c * g.a));
        CHECK(g.b * g.c == g.c * g.b);
        // the sixth relation: A B A = B, equivalently A B = B A^-1; since
        // A^4 = -I forces A^-1 = -A^3, this is the same as A B = -B A^3
        CHECK(g.a * g.b == g.b * g.a.inverse());
        CHECK(g.a * g.b == -(g.b * g.a.pow(3)));
        CHECK(g.a.inverse() == -g.a.pow(3));
    }

    TEST_CASE("the constructed basis is nice; its operators lie over <A, B, C>") {
        NiceErrorBasis basis = egner_like_basis();
        CHECK(basis.dim() == 4);
        CHECK(basis.size() == 16);
        NiceBasisReport rep = verify_nice(basis);
        CHECK(rep.all_nice());
        EgnerGenerators g = egner_like_generators();
        FiniteMatrixGroup closure = close_generators({g.a, g.b, g.c});
        for (int i = 0; i < basis.size(); ++i) {
            // each basis operator lies in the generated group up to a central sign
            bool found = closure.index_of(basis.op(i)) >= 0 ||
                         closure.index_of(-basis.op(i)) >= 0;
            CHECK(found);
        }
    }

    TEST_CASE("product law is realized on all pairs") {
        NiceErrorBasis qubit = pauli_basis(2);
        ErrorGroup h = error_group_from_basis(qubit);
        CycScalar inv_sqrt2 = (CycScalar::zeta(8, 1) + CycScalar::zeta(8, 7)) *
                              CycScalar::from_rational(rat(1, 2));
        CycMatrix had(2, 2);
        had.at(0, 0) = inv_sqrt2;
        had.at(0, 1) = inv_sqrt2;
        had.at(1, 0) = inv_sqrt2;
        had.at(1, 1) = -inv_sqrt2;
        int ix = h.group.index_of(qubit.op(2));
        int iz = h.group.index_of(qubit.op(1));
        auto phi = hom_from_generator_images(h.group, {ix, iz}, {had, had});
        REQUIRE(phi.has_value());
        // (h phi(g) (x) g)(h' phi(g') (x) g') = h phibar(g)(h') phi(gg') (x) gg'
        for (int h1 = 0; h1 < h.order(); ++h1)
            for (int g1 = 0; g1 < h.order(); ++g1)
                for (int h2 = 0; h2 < h.order(); ++h2)
                    for (int g2 = 0; g2 < h.order(); ++g2) {
                        CycMatrix lhs =
                            ((h.matrix(h1) * (*phi)[static_cast<size_t>(g1)]).kron(h.matrix(g1))) *
                            ((h.matrix(h2) * (*phi)[static_cast<size_t>(g2)]).kron(h.matrix(g2)));
                        CycMatrix conj = (*phi)[static_cast<size_t>(g1)] * h.matrix(h2) *
                                         (*phi)[static_cast<size_t>(g1)].inverse();
                        int gg = h.group.mul(g1, g2);
                        CycMatrix rhs =
                            (h.matrix(h1) * conj * (*phi)[static_cast<size_t>(gg)]).kron(h.matrix(gg));
                        CHECK(lhs == rhs);
                    }
    }

    TEST_CASE("a trivial twist reduces to the tensor product") {
        NiceErrorBasis qubit = pauli_basis(2);
        ErrorGroup h = error_group_from_basis(qubit);
        std::vector<CycMatrix> phi(static_cast<size_t>(h.order()), CycMatrix::identity(2));
        NiceErrorBasis twisted = semidirect_basis(h, h, phi);
        NiceErrorBasis plain = tensor_basis(qubit, qubit);
        CHECK(twisted.dim() == plain.dim());
        CHECK(twisted.size() == plain.size());
        // same operators up to central signs and reindexing
        FiniteMatrixGroup closure = close_generators(plain.ops());
        for (int i = 0; i < twisted.size(); ++i) {
            bool found = closure.index_of(twisted.op(i)) >= 0 ||
                         closure.index_of(-twisted.op(i)) >= 0;
            CHECK(found);
        }
        CHECK(group_isomorphic(twisted.index_group(), plain.index_group()));
    }

    TEST_CASE("violating phi preconditions gives distinct diagnostics") {
        NiceErrorBasis qubit = pauli_basis(2);
        ErrorGroup h = error_group_from_basis(qubit);
        // not a homomorphism: map everything to X
        std::vector<CycMatrix> bad1(static_cast<size_t>(h.order()), qubit.op(2));
        CHECK_THROWS_WITH_AS(semidirect_basis(h, h, bad1), doctest::Contains("not a homomorphism"),
                             std::invalid_argument);
        // an honest homomorphism whose image leaves the normalizer of H1:
        // conjugation by diag(1, zeta_8) sends X X-conjugates onto +-Y, which
        // the sign-free qubit group does not contain
        CycMatrix u(2, 2);
        u.at(0, 0) = CycScalar::one();
        u.at(1, 1) = CycScalar::zeta(8);
        CycMatrix u_inv = u.inverse();
        std::vector<CycMatrix> conj_rep;
        for (int g = 0; g < h.order(); ++g) conj_rep.push_back(u * h.matrix(g) * u_inv);
        CHECK_THROWS_WITH_AS(semidirect_basis(h, h, conj_rep), doctest::Contains("normalizer"),
                             std::invalid_argument);
    }
}

TEST_SUITE("GF(p^k) bases") {
    TEST_CASE("k = 1 coincides with the shift/clock basis") {
        FieldCtx f2(2, 1);
        LinearForm b = LinearForm::coefficient_form(f2);
        NiceErrorBasis gf = gfpk_basis(f2, b);
        NiceErrorBasis pauli = pauli_basis(2);
        REQUIRE(gf.size() == pauli.size());
        for (int i = 0; i < gf.size(); ++i) CHECK(gf.op(i) == pauli.op(i));
    }

    TEST_CASE("GF(4) basis: sixteen operators over Z_2^4, nice, commutation law") {
        FieldCtx f4(2, 2);
        LinearForm b = LinearForm::coefficient_form(f4);
        NiceErrorBasis gf = gfpk_basis(f4, b);
        CHECK(gf.dim() == 4);
        CHECK(gf.size() == 16);
        CHECK(verify_nice(gf).all_nice());
        AbstractGroup z2_4 = direct_product(direct_product(cyclic_group(2), cyclic_group(2)),
                                            direct_product(cyclic_group(2), cyclic_group(2)));
        CHECK(group_isomorphic(gf.index_group(), z2_4));
        // C_x D_y = w^{-b(x*y)} D_y C_x on all pairs
        for (long x = 0; x < 4; ++x)
            for (long y = 0; y < 4; ++y) {
                CycMatrix cx = gfpk_shift(f4, f4.from_index(x));
                CycMatrix dy = gfpk_clock(f4, b, f4.from_index(y));
                long e = b.pairing(f4, f4.from_index(x), f4.from_index(y));
                CHECK(cx * dy == (dy * cx).scaled(CycScalar::zeta(2, -e)));
            }
    }

    TEST_CASE("the pairing from b is non-degenerate over all sixteen pairs") {
        FieldCtx f4(2, 2);
        LinearForm b = LinearForm::coefficient_form(f4);
        for (long x = 1; x < 4; ++x) {
            bool hit = false;
            for (long y = 0; y < 4; ++y)
                if (b.pairing(f4, f4.from_index(x), f4.from_index(y)) != 0) hit = true;
            CHECK(hit);
        }
        CHECK_THROWS_AS(LinearForm(f4, {0, 0}), std::invalid_argument);
    }
}

TEST_SUITE("verification and renormalization") {
    TEST_CASE("the qubit basis becomes very nice after renormalization") {
        NiceErrorBasis raw = pauli_basis(2);
        NiceBasisReport raw_rep = verify_nice(raw);
        CHECK(raw_rep.all_nice());
        CHECK(!raw_rep.very_nice);  // det X = -1
        CHECK(raw.op(2).det() == CycScalar::from_int(-1));
        NiceErrorBasis renorm = renormalize_very_nice(raw);
        NiceBasisReport rep = verify_nice(renorm);
        CHECK(rep.all_nice());
        CHECK(rep.very_nice);
    }

    TEST_CASE("corrupting one operator fails the trace condition at that index") {
        NiceErrorBasis b = pauli_basis(2);
        std::vector<CycMatrix> ops = b.ops();
        ops[2] = CycMatrix::identity(2);  // duplicate identity
        NiceErrorBasis broken(2, b.index_group(), std::move(ops));
        NiceBasisReport rep = verify_nice(broken);
        CHECK(!rep.trace_ok);
        CHECK(!rep.all_nice());
        bool mentions_index = false;
        for (const auto& f : rep.failures)
            if (f.find("operator 2") != std::string::npos) mentions_index = true;
        CHECK(mentions_index);
    }

    TEST_CASE("every constructed basis spans the full operator space") {
        CHECK(verify_nice(pauli_basis(3)).span_ok);
        CHECK(verify_nice(egner_like_basis()).span_ok);
    }
}

TEST_SUITE("abstract error groups") {
    TEST_CASE("the qubit group passes and reconstructs a 4-element basis") {
        NiceErrorBasis qubit = pauli_basis(2);
        FiniteMatrixGroup h = close_generators(qubit.ops());
        auto ev = verify_abstract_error_group(h);
        REQUIRE(ev.has_value());
        CHECK(ev->degree == 2);
        CHECK(ev->reconstructed.size() == 4);
        CHECK(ev->basis_report.all_nice());
        CHECK(ev->kernel_trivial_by_character);
        CHECK(ev->kernel_trivial_by_representation);
    }

    TEST_CASE("the quaternion group is an abstract error group") {
        auto ev = verify_abstract_error_group(regular_rep(quaternion_group()));
        REQUIRE(ev.has_value());
        CHECK(ev->degree == 2);
        std::multiset<std::string> vals;
        for (const auto& v : ev->chi_by_class) vals.insert(v.str());
        CHECK(vals == std::multiset<std::string>{"2", "-2", "0", "0", "0"});
        CHECK(ev->reconstructed.size() == 4);
        CHECK(ev->basis_report.all_nice());
    }

    TEST_CASE("the symmetric group on three letters is not") {
        auto ev = verify_abstract_error_group(regular_rep(symmetric3_group()));
        CHECK(!ev.has_value());
    }

    TEST_CASE("round trip through the closure of every constructed basis") {
        for (const NiceErrorBasis& b : {pauli_basis(2), pauli_basis(3), egner_like_basis()}) {
            FiniteMatrixGroup h = close_generators(b.ops());
            auto ev = verify_abstract_error_group(h);
            REQUIRE(ev.has_value());
            CHECK(ev->degree == b.dim());
            CHECK(ev->basis_report.all_nice());
        }
    }
}
