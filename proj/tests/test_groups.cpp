// Copyright (c) 2026 The nicebase authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <set>

#include "nicebase/error_basis.hpp"
#include "nicebase/groups.hpp"

using namespace nicebase;

namespace {

CycMatrix pauli_x() {
    CycMatrix x(2, 2);
    x.at(0, 1) = CycScalar::one();
    x.at(1, 0) = CycScalar::one();
    return x;
}

CycMatrix pauli_z() {
    CycMatrix z(2, 2);
    z.at(0, 0) = CycScalar::one();
    z.at(1, 1) = -CycScalar::one();
    return z;
}

}  // namespace

TEST_SUITE("matrix group closure") {
    TEST_CASE("qubit shift/clock pair closes to order 8") {
        FiniteMatrixGroup g = close_generators({pauli_x(), pauli_z()});
        CHECK(g.order() == 8);
        // brute-force expectation: { +-I, +-X, +-Z, +-XZ }
        CycMatrix xz = pauli_x() * pauli_z();
        for (const CycMatrix& m : {CycMatrix::identity(2), pauli_x(), pauli_z(), xz}) {
            CHECK(g.index_of(m) >= 0);
            CHECK(g.index_of(-m) >= 0);
        }
        CHECK(g.index_of((xz * xz)) == g.index_of(-CycMatrix::identity(2)));
        g.validate_table();
        CHECK(g.identity_index() == 0);
        CHECK(g.matrix(0).is_identity());
    }

    TEST_CASE("identity generator closes to the trivial group") {
        FiniteMatrixGroup g = close_generators({CycMatrix::identity(2)});
        CHECK(g.order() == 1);
    }

    TEST_CASE("closure is deterministic") {
        FiniteMatrixGroup a = close_generators({pauli_x(), pauli_z()});
        FiniteMatrixGroup b = close_generators({pauli_x(), pauli_z()});
        CHECK(a.structure.table == b.structure.table);
        for (int i = 0; i < a.order(); ++i) CHECK(a.matrix(i) == b.matrix(i));
    }

    TEST_CASE("cap exceeded raises the closure error") {
        CHECK_THROWS_WITH_AS(close_generators({pauli_x(), pauli_z()}, 4),
                             doctest::Contains("group too large or infinite"),
                             std::domain_error);
        CycMatrix sing(2, 2);
        sing.at(0, 0) = CycScalar::one();
        CHECK_THROWS_AS(close_generators({sing}), std::invalid_argument);
    }

    TEST_CASE("the dim-4 basis generators close to 16 times the center") {
        EgnerGenerators gens = egner_like_generators();
        FiniteMatrixGroup g = close_generators({gens.a, gens.b, gens.c});
        std::vector<int> z = center_indices(g);
        CHECK(g.order() == 16 * static_cast<long>(z.size()));
        CHECK(8 % z.size() == 0);
        CHECK(center_is_scalar(g));
    }
}

TEST_SUITE("group structure") {
    TEST_CASE("centers") {
        FiniteMatrixGroup pauli = close_generators({pauli_x(), pauli_z()});
        std::vector<int> z = center_indices(pauli);
        CHECK(z.size() == 2);
        std::set<int> zs(z.begin(), z.end());
        CHECK(zs.count(pauli.index_of(CycMatrix::identity(2))));
        CHECK(zs.count(pauli.index_of(-CycMatrix::identity(2))));

        AbstractGroup c6 = cyclic_group(6);
        CHECK(c6.center().size() == 6);
        CHECK(quaternion_group().center().size() == 2);
    }

    TEST_CASE("normality") {
        FiniteMatrixGroup pauli = close_generators({pauli_x(), pauli_z()});
        CHECK(is_normal(pauli.structure, center_indices(pauli)));

        // phase-type stabilizers commute with every tensor factor up to a sign,
        // so they become normal inside the three-qubit group once the sign of
        // the identity is included
        CycMatrix eye = CycMatrix::identity(2);
        CycMatrix x = pauli_x(), z = pauli_z();
        FiniteMatrixGroup g3 = close_generators({x.kron(eye).kron(eye), z.kron(eye).kron(eye),
                                                 eye.kron(x).kron(eye), eye.kron(z).kron(eye),
                                                 eye.kron(eye).kron(x), eye.kron(eye).kron(z)});
        CHECK(g3.order() == 128);
        std::vector<int> gens{g3.index_of(z.kron(z).kron(eye)), g3.index_of(eye.kron(z).kron(z))};
        std::vector<int> bare = generated_subgroup(g3.structure, gens);
        CHECK(bare.size() == 4);
        CHECK(!is_normal(g3.structure, bare));  // conjugation by a bit flip lands on -Z(x)Z(x)I
        std::vector<int> stab = normal_closure(g3.structure, gens);
        CHECK(stab.size() == 8);
        CHECK(is_normal(g3.structure, stab));
        CHECK(std::binary_search(stab.begin(), stab.end(), g3.index_of(-CycMatrix::identity(8))));

        CHECK_THROWS_AS(is_normal(pauli.structure, std::vector<int>{pauli.index_of(pauli_x())}),
                        std::invalid_argument);
    }

    TEST_CASE("a reflection subgroup of the order-16 index group is not normal") {
        NiceErrorBasis basis = egner_like_basis();
        const AbstractGroup& idx = basis.index_group();
        CHECK(idx.order == 16);
        bool found_non_normal = false;
        for (int a = 0; a < idx.order && !found_non_normal; ++a) {
            if (idx.element_order(a) != 2) continue;
            std::vector<int> sub = generated_subgroup(idx, {a});
            if (!is_normal(idx, sub)) found_non_normal = true;
        }
        CHECK(found_non_normal);
    }

    TEST_CASE("normal closure grows a subgroup to normality") {
        AbstractGroup s3 = symmetric3_group();
        // a single reflection is not normal; its normal closure is the whole group
        int refl = -1;
        for (int a = 0; a < s3.order; ++a)
            if (s3.element_order(a) == 2) { refl = a; break; }
        std::vector<int> nc = normal_closure(s3, {refl});
        CHECK(is_normal(s3, nc));
        CHECK(nc.size() == 6);
    }

    TEST_CASE("quotients") {
        FiniteMatrixGroup pauli = close_generators({pauli_x(), pauli_z()});
        Quotient q = quotient(pauli.structure, center_indices(pauli));
        CHECK(q.group.order == 4);
        CHECK(q.group.is_abelian());
        CHECK(group_isomorphic(q.group, direct_product(cyclic_group(2), cyclic_group(2))));
        CHECK(q.rep[static_cast<size_t>(q.group.identity)] == pauli.identity_index());
        // representative composed with projection is the identity on cosets
        for (int c = 0; c < q.group.order; ++c)
            CHECK(q.coset_of[static_cast<size_t>(q.rep[static_cast<size_t>(c)])] == c);

        std::vector<int> all(static_cast<size_t>(pauli.order()));
        for (int i = 0; i < pauli.order(); ++i) all[static_cast<size_t>(i)] = i;
        CHECK(quotient(pauli.structure, all).group.order == 1);
    }

    TEST_CASE("conjugacy classes") {
        AbstractGroup c4 = cyclic_group(4);
        CHECK(conjugacy_classes(c4).size() == 4);

        FiniteMatrixGroup pauli = close_generators({pauli_x(), pauli_z()});
        auto classes = conjugacy_classes(pauli.structure);
        CHECK(classes.size() == 5);
        std::multiset<size_t> sizes;
        for (const auto& c : classes) sizes.insert(c.size());
        CHECK(sizes == std::multiset<size_t>{1, 1, 2, 2, 2});

        CHECK(conjugacy_classes(quaternion_group()).size() == 5);
    }

    TEST_CASE("table validation catches broken tables") {
        AbstractGroup bad = cyclic_group(3);
        bad.table[1][1] = 1;  // 1*1 = 1 breaks inverses/associativity
        CHECK_THROWS_AS(bad.validate(), std::logic_error);
    }
}

TEST_SUITE("isomorphism testing") {
    TEST_CASE("basic invariant separation") {
        CHECK(group_isomorphic(cyclic_group(4), cyclic_group(4)));
        CHECK(!group_isomorphic(cyclic_group(4), direct_product(cyclic_group(2), cyclic_group(2))));
        CHECK(group_isomorphic(symmetric3_group(), dihedral_group(6)));
        CHECK(!group_isomorphic(quaternion_group(), dihedral_group(8)));
        CHECK_THROWS_AS(group_isomorphic(cyclic_group(65), cyclic_group(65)), std::domain_error);
    }

    TEST_CASE("the semidirect index group is Z2 x D8") {
        NiceErrorBasis basis = egner_like_basis();
        AbstractGroup z2xd8 = direct_product(cyclic_group(2), dihedral_group(8));
        CHECK(group_isomorphic(basis.index_group(), z2xd8));
        CHECK(!group_isomorphic(basis.index_group(), direct_product(cyclic_group(2), quaternion_group())));
    }
}

TEST_SUITE("homomorphisms and representations") {
    TEST_CASE("generator images extend when the relations hold") {
        FiniteMatrixGroup pauli = close_generators({pauli_x(), pauli_z()});
        int ix = pauli.index_of(pauli_x()), iz = pauli.index_of(pauli_z());
        CycScalar inv_sqrt2 = (CycScalar::zeta(8, 1) + CycScalar::zeta(8, 7)) *
                              CycScalar::from_rational(rat(1, 2));
        CycMatrix h(2, 2);
        h.at(0, 0) = inv_sqrt2;
        h.at(0, 1) = inv_sqrt2;
        h.at(1, 0) = inv_sqrt2;
        h.at(1, 1) = -inv_sqrt2;
        auto phi = hom_from_generator_images(pauli, {ix, iz}, {h, h});
        REQUIRE(phi.has_value());
        CHECK((*phi)[static_cast<size_t>(pauli.identity_index())].is_identity());
        // i * H breaks X^2 = I, so no homomorphism exists
        auto bad = hom_from_generator_images(pauli, {ix, iz},
                                             {h.scaled(CycScalar::imag_unit()), h});
        CHECK(!bad.has_value());
    }

    TEST_CASE("regular representation is table-consistent") {
        FiniteMatrixGroup reg = regular_rep(quaternion_group());
        reg.validate_table();
        CHECK(reg.order() == 8);
        CHECK(reg.matrix(reg.identity_index()).is_identity());
    }
}
