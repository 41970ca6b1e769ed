// Copyright (c) 2026 The nicebase authors
// SPDX-License-Identifier: Apache-2.0

#include "nicebase/check.hpp"

#include <set>

#include "nicebase/instances.hpp"
#include "nicebase/linalg.hpp"

namespace nicebase {

namespace {

uint64_t splitmix64(uint64_t& s) {
    s += 0x9e3779b97f4a7c15ull;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

CycScalar random_scalar(uint64_t& s, long max_order) {
    long order = 1 + static_cast<long>(splitmix64(s) % static_cast<uint64_t>(max_order));
    std::vector<Rat> coeffs(static_cast<size_t>(order));
    for (auto& c : coeffs) {
        long num = static_cast<long>(splitmix64(s) % 21) - 10;
        long den = 1 + static_cast<long>(splitmix64(s) % 6);
        c = rat(num, den);
    }
    return CycScalar::canonical(order, std::move(coeffs));
}

Json scalar_field_checks(uint64_t seed) {
    uint64_t s = seed ^ 0x5ca1ab1eull;
    long trials = 24;
    bool assoc = true, distrib = true, conj_mult = true, float_shadow = true;
    for (long t = 0; t < trials; ++t) {
        CycScalar a = random_scalar(s, 24), b = random_scalar(s, 24), c = random_scalar(s, 24);
        if ((a + b) + c != a + (b + c)) assoc = false;
        if (a * (b + c) != a * b + a * c) distrib = false;
        if ((a * b).conj() != a.conj() * b.conj()) conj_mult = false;
        std::complex<double> lhs = (a * b).to_complex();
        std::complex<double> rhs = a.to_complex() * b.to_complex();
        if (std::abs(lhs - rhs) > 1e-9) float_shadow = false;
    }
    return Json{{"associativity", assoc},
                {"distributivity", distrib},
                {"conjugation_multiplicative", conj_mult},
                {"float_shadow_1e-9", float_shadow},
                {"trials", trials}};
}

}  // namespace

Json check_all(const std::string& instance_name, uint64_t seed) {
    Instance inst = make_instance(instance_name);
    Json out;
    out["instance"] = inst.name;
    out["seed"] = seed;
    out["scalar_field"] = scalar_field_checks(seed);

    // error basis axioms
    NiceBasisReport basis_rep = verify_nice(*inst.basis);
    out["basis"] = to_json(basis_rep);

    // group structure: table consistency, scalar center, unitarity
    inst.eg.group.validate_table();
    inst.eg.group.structure.validate();
    bool unitary = true;
    for (int g = 0; g < inst.eg.order() && unitary; ++g)
        if (!inst.eg.matrix(g).is_unitary()) unitary = false;
    out["group"] = Json{{"order", inst.eg.order()},
                        {"table_consistent", true},
                        {"center_size", static_cast<long>(inst.eg.center.size())},
                        {"center_scalar", center_is_scalar(inst.eg.group)},
                        {"all_unitary", unitary}};

    // codes pipeline
    NormalSubgroupCtx n = instance_subgroup(inst);
    std::vector<CharacterInstance> induced = induced_characters(inst.eg, n);
    out["induced_characters"] =
        Json{{"count", static_cast<long>(induced.size())},
             {"degree", induced[0].degree},
             {"multiplicity", induced[0].multiplicity}};

    // invariant subspace permutation: conjugating any isotypic projector by
    // any group element lands on another isotypic projector
    bool permutes = true;
    for (int g = 0; g < inst.eg.order() && permutes; ++g) {
        const CycMatrix& mg = inst.eg.matrix(g);
        CycMatrix mg_inv = inst.eg.matrix(inst.eg.group.inverse_table[static_cast<size_t>(g)]);
        for (const auto& ci : induced) {
            CycMatrix conj = mg * ci.chi_bar * mg_inv;
            bool hit = false;
            for (const auto& cj : induced)
                if (conj == cj.chi_bar) { hit = true; break; }
            if (!hit) { permutes = false; break; }
        }
    }
    out["subspace_permutation"] = permutes;

    InertiaData inertia = inertia_subgroup(inst.eg, n, inst.chi);
    out["inertia"] = Json{{"size", static_cast<long>(inertia.subgroup.size())},
                          {"r", inertia.r},
                          {"reps", inertia.coset_reps}};

    ErrorClassification cls = classify_errors(inst.eg, n, inst.chi, seed);
    out["classification"] = Json{{"outside", cls.outside_count},
                                 {"in_subgroup", cls.subgroup_count},
                                 {"other", cls.other_count}};

    DetectableSpanReport span = detectable_span_dimension(inst.eg, n, inst.chi);
    out["detectable_span"] = to_json(span);

    SyndromeFrame frame = syndrome_frame(inst.eg, n, inst.chi, inst.intended,
                                         CodeSpace::Kind::character, seed);
    out["frame_syndromes"] = static_cast<long>(frame.syndromes.size());
    CorrectableSet cset = correctable_set(inst.eg, frame);
    out["correctable"] = to_json(cset);

    // chi_bar chi_bar_j orthogonality and completeness were enforced inside
    // induced_characters; record it
    out["isotypic_complete"] = true;
    return out;
}

}  // namespace nicebase
