// Copyright (c) 2026 The nicebase authors
// SPDX-License-Identifier: Apache-2.0

#include "nicebase/instances.hpp"

#include <algorithm>
#include <stdexcept>

namespace nicebase {

namespace {

// index of E_(a,b) = C^a D^b in the shift/clock basis on p dimensions
int pauli_op_index(long p, long a, long b) { return static_cast<int>(a * p + b); }

// The appearing character taking value one on each listed generator: the
// code space is then the joint fixed space of the generators.
long plus_one_character(const ErrorGroup& eg, const SubgroupView& view, const CharacterTable& t,
                        const std::vector<int>& gen_parent_indices) {
    for (long chi = 0; chi < static_cast<long>(t.characters.size()); ++chi) {
        CycScalar mult = CycScalar::zero();
        for (int l = 0; l < view.order(); ++l)
            mult += eg.matrix(view.to_parent(l)).trace() * t.value(chi, l).conj();
        if (mult.is_zero()) continue;
        bool fixes = true;
        for (int g : gen_parent_indices)
            if (!t.value(chi, view.to_local(g)).is_one()) { fixes = false; break; }
        if (fixes) return chi;
    }
    throw std::logic_error("no appearing character fixes the given generators");
}

Instance make_bitflip3() {
    Instance inst;
    inst.name = "bitflip3";
    NiceErrorBasis qubit = pauli_basis(2);
    inst.basis = std::make_shared<NiceErrorBasis>(tensor_power(qubit, 3));

    const CycMatrix& x = qubit.op(pauli_op_index(2, 1, 0));
    const CycMatrix& z = qubit.op(pauli_op_index(2, 0, 1));
    CycMatrix eye = CycMatrix::identity(2);
    CycMatrix i_scalar = CycMatrix::identity(8).scaled(CycScalar::imag_unit());
    // error group generated by the basis and i * identity
    std::vector<CycMatrix> gens{
        x.kron(eye).kron(eye), z.kron(eye).kron(eye), eye.kron(x).kron(eye),
        eye.kron(z).kron(eye), eye.kron(eye).kron(x), eye.kron(eye).kron(z), i_scalar};
    ErrorGroup eg = error_group_from_generators(gens);
    eg.basis = inst.basis;
    eg.dim = 8;
    inst.eg = std::move(eg);

    CycMatrix zz1 = z.kron(z).kron(eye);
    CycMatrix zz2 = eye.kron(z).kron(z);
    // normal closure: conjugation by bit flips adds the sign of the identity
    std::vector<int> ngens{inst.eg.group.index_of(zz1), inst.eg.group.index_of(zz2)};
    inst.normal = normal_closure(inst.eg.group.structure, ngens);

    SubgroupView view = SubgroupView::from(inst.eg.group.structure, inst.normal);
    inst.chi = plus_one_character(inst.eg, view, character_table(view.local), ngens);

    std::vector<int> s;
    s.push_back(inst.eg.group.structure.identity);
    s.push_back(inst.eg.group.index_of(x.kron(eye).kron(eye)));
    s.push_back(inst.eg.group.index_of(eye.kron(x).kron(eye)));
    s.push_back(inst.eg.group.index_of(eye.kron(eye).kron(x)));
    inst.intended = s;
    return inst;
}

Instance make_bell2() {
    Instance inst;
    inst.name = "bell2";
    NiceErrorBasis qubit = pauli_basis(2);
    inst.basis = std::make_shared<NiceErrorBasis>(tensor_power(qubit, 2));

    const CycMatrix& x = qubit.op(pauli_op_index(2, 1, 0));
    const CycMatrix& z = qubit.op(pauli_op_index(2, 0, 1));
    CycMatrix eye = CycMatrix::identity(2);
    CycMatrix i_scalar = CycMatrix::identity(4).scaled(CycScalar::imag_unit());
    std::vector<CycMatrix> gens{x.kron(eye), z.kron(eye), eye.kron(x), eye.kron(z), i_scalar};
    ErrorGroup eg = error_group_from_generators(gens);
    eg.basis = inst.basis;
    eg.dim = 4;
    inst.eg = std::move(eg);

    std::vector<int> ngens{inst.eg.group.index_of(x.kron(x)), inst.eg.group.index_of(z.kron(z))};
    inst.normal = normal_closure(inst.eg.group.structure, ngens);
    SubgroupView view = SubgroupView::from(inst.eg.group.structure, inst.normal);
    inst.chi = plus_one_character(inst.eg, view, character_table(view.local), ngens);
    return inst;
}

Instance make_egner() {
    Instance inst;
    inst.name = "egner";
    inst.basis = std::make_shared<NiceErrorBasis>(egner_like_basis());
    inst.eg = error_group_from_basis(*inst.basis);

    // N = <A^2> = <XZ (x) I>, cyclic of order 4, normal in the error group
    EgnerGenerators gens = egner_like_generators();
    CycMatrix a2 = gens.a * gens.a;
    int a2_idx = inst.eg.group.index_of(a2);
    if (a2_idx < 0) throw std::logic_error("A^2 missing from the egner error group");
    inst.normal = normal_closure(inst.eg.group.structure, {a2_idx});

    // first appearing character (canonical row order)
    NormalSubgroupCtx n;
    n.view = SubgroupView::from(inst.eg.group.structure, inst.normal);
    n.elems = n.view.elems;
    n.table = character_table(n.view.local);
    ErrorGroup& eg = inst.eg;
    for (long chi = 0; chi < static_cast<long>(n.table.characters.size()); ++chi) {
        CycScalar ip = CycScalar::zero();
        for (int l = 0; l < n.order(); ++l)
            ip += n.matrix(eg, l).trace() * n.table.value(chi, l).conj();
        ip = ip * CycScalar::from_rational(Rat(1, n.order()));
        if (!ip.is_zero()) { inst.chi = chi; break; }
    }
    if (inst.chi < 0) throw std::logic_error("no appearing character for the egner instance");
    return inst;
}

Instance make_gf4_demo() {
    Instance inst;
    inst.name = "gf4-demo";
    auto field = std::make_shared<FieldCtx>(2, 2);
    inst.field = field;
    LinearForm b = LinearForm::coefficient_form(*field);
    inst.basis = std::make_shared<NiceErrorBasis>(gfpk_basis(*field, b));
    inst.eg = error_group_from_basis(*inst.basis);

    // C = all of GF(4), C0 = {0, 1}, leader theta
    LinearCode c = make_linear_code(*field, 1, {{field->one()}});
    ZpCode c0 = make_zp_code(*field, 1, {{field->one()}});
    Codeword leader{field->theta()};
    inst.pair = quantum_code_from_pair(*field, c, c0, b, leader);

    // stabilizer elements as indices in the error group
    std::vector<int> stab;
    for (int g = 0; g < inst.pair->stabilizer.order(); ++g) {
        int idx = inst.eg.group.index_of(inst.pair->stabilizer.matrix(g));
        if (idx < 0) throw std::logic_error("stabilizer element missing from the error group");
        stab.push_back(idx);
    }
    inst.normal = stab;
    std::sort(inst.normal.begin(), inst.normal.end());

    // the character of the stabilizer whose projector is the code space
    NormalSubgroupCtx n;
    n.view = SubgroupView::from(inst.eg.group.structure, inst.normal);
    n.elems = n.view.elems;
    n.table = character_table(n.view.local);
    for (long chi = 0; chi < static_cast<long>(n.table.characters.size()); ++chi) {
        CycMatrix acc = CycMatrix::zeros(inst.eg.dim, inst.eg.dim);
        for (int l = 0; l < n.order(); ++l)
            acc = acc + n.matrix(inst.eg, l).scaled(n.table.value(chi, l).conj());
        acc = acc.scaled(CycScalar::from_rational(Rat(1, n.order())));
        if (acc == inst.pair->code.projector) { inst.chi = chi; break; }
    }
    if (inst.chi < 0) throw std::logic_error("gf4-demo code is not a character code of N");
    return inst;
}

}  // namespace

const std::vector<std::string>& instance_names() {
    static const std::vector<std::string> names{"bitflip3", "bell2", "egner", "gf4-demo"};
    return names;
}

Instance make_instance(const std::string& name) {
    if (name == "bitflip3") return make_bitflip3();
    if (name == "bell2") return make_bell2();
    if (name == "egner") return make_egner();
    if (name == "gf4-demo") return make_gf4_demo();
    throw std::invalid_argument("unknown instance: " + name);
}

NormalSubgroupCtx instance_subgroup(const Instance& inst) {
    return make_normal_subgroup(inst.eg, inst.normal);
}

}  // namespace nicebase
