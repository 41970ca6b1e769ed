// Copyright (c) 2026 The nicebase authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line surface over the library: construct, verify, analyze,
// simulate and serialize. Every path is a thin shell over a library call;
// output is canonical JSON on stdout. Exit codes: 0 success, 1 domain error,
// 2 usage error.

#include <CLI11.hpp>
#include <functional>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "nicebase/check.hpp"
#include "nicebase/instances.hpp"
#include "nicebase/json_io.hpp"
#include "nicebase/linalg.hpp"
#include "nicebase/transversal.hpp"

using namespace nicebase;

namespace {

struct Options {
    std::string workspace = ".nicebase";
    std::string out;
    uint64_t seed = 1;
    long cap = kDefaultClosureCap;
};

Json read_input(const Options& opt, const std::string& ref) {
    if (std::filesystem::exists(ref)) {
        std::ifstream in(ref);
        Json j;
        in >> j;
        return j;
    }
    Workspace ws(opt.workspace);
    return ws.load(ref);
}

void emit(const Options& opt, const Json& j, const std::string& save_name = "",
          const std::string& kind = "") {
    std::string bytes = canonical_dump(j);
    std::cout << bytes << "\n";
    if (!opt.out.empty()) {
        std::ofstream f(opt.out);
        f << bytes << "\n";
    }
    if (!save_name.empty()) {
        Workspace ws(opt.workspace);
        ws.save(save_name, kind.empty() ? "object" : kind, j);
    }
}

AbstractGroup named_abstract_group(const std::string& name) {
    if (name == "z2xd8") return direct_product(cyclic_group(2), dihedral_group(8));
    if (name == "q8") return quaternion_group();
    if (name == "s3") return symmetric3_group();
    if (name.rfind("cyclic:", 0) == 0) return cyclic_group(std::stol(name.substr(7)));
    if (name.rfind("dihedral:", 0) == 0) return dihedral_group(std::stol(name.substr(9)));
    throw std::invalid_argument("unknown named group: " + name);
}

AbstractGroup abstract_from_ref(const Options& opt, const std::string& ref) {
    try {
        return named_abstract_group(ref);
    } catch (const std::invalid_argument&) {
    }
    Json j = read_input(opt, ref);
    return group_from_json(j.contains("elements") ? Json{{"order", j["order"]},
                                                         {"table", j["table"]},
                                                         {"identity", j["identity"]}}
                                                  : j);
}

FieldCtx field_from_json(const Json& j) {
    return FieldCtx(j.at("p").get<int>(), j.at("k").get<int>(),
                    j.contains("irreducible")
                        ? std::optional<std::vector<int>>(j.at("irreducible").get<std::vector<int>>())
                        : std::nullopt);
}

Codeword codeword_from_json(const FieldCtx& f, const Json& j) {
    Codeword w;
    for (const auto& sym : j) w.push_back(FieldElem{sym.get<std::vector<int>>()});
    for (auto& sym : w)
        if (static_cast<int>(sym.c.size()) != f.k())
            throw std::invalid_argument("field element coefficient count mismatch");
    return w;
}

LinearCode linear_code_from_json(const FieldCtx& f, const Json& j) {
    std::vector<Codeword> rows;
    for (const auto& r : j.at("generator")) rows.push_back(codeword_from_json(f, r));
    return make_linear_code(f, j.at("n").get<long>(), std::move(rows));
}

ZpCode zp_code_from_json(const FieldCtx& f, const Json& j) {
    const char* key = j.contains("zp_basis") ? "zp_basis" : "generator";
    std::vector<Codeword> rows;
    for (const auto& r : j.at(key)) rows.push_back(codeword_from_json(f, r));
    return make_zp_code(f, j.at("n").get<long>(), std::move(rows));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for nice unitary error bases and group-derived quantum codes"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    if (const char* env_cap = std::getenv("ERRGROUP_CAP")) opt.cap = std::stol(env_cap);
    app.add_option("--workspace", opt.workspace, "object store directory");
    app.add_option("--out", opt.out, "also write the JSON result to this file");
    app.add_option("--seed", opt.seed, "seed for randomized operations");
    app.add_option("--cap", opt.cap, "closure size cap");

    std::string save_name;
    app.add_option("--save", save_name, "store the result in the workspace under this name");

    // ---- basis ----
    auto* basis = app.add_subcommand("basis", "error basis constructors and verification");
    basis->require_subcommand(1);
    basis->fallthrough();

    long p_opt = 2;
    auto* b_pauli = basis->add_subcommand("pauli", "shift/clock basis on p dimensions");
    b_pauli->add_option("-p", p_opt, "prime dimension")->required();

    std::vector<std::string> tensor_in;
    auto* b_tensor = basis->add_subcommand("tensor", "tensor product of bases");
    b_tensor->add_option("--in", tensor_in, "basis inputs (files or workspace names)")
        ->expected(2, -1);

    std::string sd_h1, sd_h2, sd_phi;
    auto* b_semi = basis->add_subcommand("semidirect", "semidirect-product basis");
    b_semi->add_option("--h1", sd_h1)->required();
    b_semi->add_option("--h2", sd_h2)->required();
    b_semi->add_option("--phi", sd_phi, "JSON list of matrices indexed by H2 elements")->required();

    basis->add_subcommand("egner", "dim-4 basis with non-abelian index group");

    long gk_p = 2, gk_k = 2;
    std::vector<int> gk_b, gk_irred;
    auto* b_gfpk = basis->add_subcommand("gfpk", "GF(p^k) shift/clock basis");
    b_gfpk->add_option("-p", gk_p);
    b_gfpk->add_option("-k", gk_k);
    b_gfpk->add_option("--b", gk_b, "linear form coefficients");
    b_gfpk->add_option("--irreducible", gk_irred, "irreducible polynomial coefficients");

    std::string verify_in, verify_instance;
    auto* b_verify = basis->add_subcommand("verify", "check the nice-basis axioms");
    b_verify->add_option("--in", verify_in);
    b_verify->add_option("--instance", verify_instance);
    bool verify_renorm = false;
    b_verify->add_flag("--renormalize", verify_renorm, "renormalize to determinant one first");

    // ---- group ----
    auto* group = app.add_subcommand("group", "matrix group construction and structure");
    group->require_subcommand(1);
    group->fallthrough();

    std::string close_in;
    auto* g_close = group->add_subcommand("close", "closure of basis operators");
    g_close->add_option("--in", close_in, "basis (file or workspace name)")->required();

    std::string center_in;
    auto* g_center = group->add_subcommand("center", "central elements");
    g_center->add_option("--in", center_in)->required();

    std::string quot_in, quot_by;
    bool quot_center = false;
    auto* g_quot = group->add_subcommand("quotient", "quotient by a normal subgroup");
    g_quot->add_option("--in", quot_in)->required();
    g_quot->add_flag("--by-center", quot_center);
    g_quot->add_option("--by", quot_by, "JSON file with subgroup indices");

    std::string chart_in;
    auto* g_chart = group->add_subcommand("chartable", "exact character table");
    g_chart->add_option("--in", chart_in)->required();

    std::string iso_in, iso_with;
    auto* g_iso = group->add_subcommand("isomorphic", "exhaustive isomorphism test");
    g_iso->add_option("--in", iso_in)->required();
    g_iso->add_option("--with", iso_with, "file, workspace name, or z2xd8|q8|s3|cyclic:N|dihedral:N")
        ->required();

    // ---- code ----
    auto* code = app.add_subcommand("code", "code spaces from normal subgroups");
    code->require_subcommand(1);
    code->fallthrough();
    std::string code_instance;
    code->add_option("--instance", code_instance, "bitflip3|bell2|egner|gf4-demo");

    code->add_subcommand("build", "character code of the instance");
    code->add_subcommand("idempotents", "primitive idempotent decomposition");
    long detect_element = -1;
    auto* c_detect = code->add_subcommand("detect", "detectability of one group element");
    c_detect->add_option("--element", detect_element, "element index in the error group")->required();
    std::vector<long> correct_elements;
    auto* c_correct = code->add_subcommand("correct", "correctability of an element set");
    c_correct->add_option("--elements", correct_elements)->required();
    code->add_subcommand("classify", "detectability classification of the error group");
    code->add_subcommand("dims", "dimension of the span of detectable operators");

    // ---- syndrome ----
    auto* syndrome = app.add_subcommand("syndrome", "syndrome frames and recovery");
    syndrome->require_subcommand(1);
    syndrome->fallthrough();
    std::string syn_instance;
    syndrome->add_option("--instance", syn_instance)->required();
    std::string syn_kind = "character";
    syndrome->add_option("--kind", syn_kind, "character|idempotent");
    bool syn_default_reps = false;
    syndrome->add_flag("--default-reps", syn_default_reps,
                       "ignore the instance's intended set when picking representatives");

    syndrome->add_subcommand("frame", "build the syndrome frame");
    long rec_element = -1;
    auto* s_recover = syndrome->add_subcommand("recover", "apply an element, then recover");
    s_recover->add_option("--element", rec_element)->required();
    syndrome->add_subcommand("correctable", "predicted and simulation-verified correctable sets");

    // ---- classical ----
    auto* classical = app.add_subcommand("classical", "GF(p^k) linear codes");
    classical->require_subcommand(1);
    classical->fallthrough();
    std::string cl_code, cl_c0;
    std::vector<int> cl_b;
    classical->add_option("--code", cl_code, "linear code JSON (file or workspace name)");
    classical->add_option("--c0", cl_c0, "subcode JSON");
    classical->add_option("--b", cl_b, "linear form coefficients (default: constant coefficient)");

    classical->add_subcommand("dual", "b-dual (verified equal to the ordinary dual)");
    classical->add_subcommand("minweight", "minimum Hamming weight");
    std::vector<std::vector<int>> cl_leader;
    auto* cl_quant = classical->add_subcommand("quantum", "quantum code from a nested pair");
    cl_quant->add_option("--leader", cl_leader, "coset leader symbols");
    classical->add_subcommand("report", "minimum-weight criterion with direct verification");

    // ---- transversal ----
    auto* transversal = app.add_subcommand("transversal", "transversally implementable operations");
    transversal->require_subcommand(1);
    transversal->fallthrough();
    std::string tr_instance;
    transversal->add_option("--instance", tr_instance)->required();
    bool tr_extra_hadamard = false;
    auto* t_ops = transversal->add_subcommand("ops", "inertia subgroup within the error group");
    t_ops->add_flag("--extra-hadamard", tr_extra_hadamard,
                    "also test the transversal Hadamard candidate");
    std::string tb_gen = "swap";
    auto* t_two = transversal->add_subcommand("two-block", "paired two-block candidates");
    t_two->add_option("--gen", tb_gen, "swap|cnot");

    // ---- check ----
    auto* check = app.add_subcommand("check", "invariant suites");
    check->require_subcommand(1);
    check->fallthrough();
    std::string chk_instance;
    auto* chk_all = check->add_subcommand("all", "run every invariant on a named instance");
    chk_all->add_option("--instance", chk_instance)->required();

    // let options placed after a leaf subcommand reach their parent
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        a->fallthrough();
        for (CLI::App* s : a->get_subcommands([](const CLI::App*) { return true; }))
            enable_fallthrough(s);
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (b_pauli->parsed()) {
            emit(opt, to_json(pauli_basis(p_opt)), save_name, "basis");
        } else if (b_tensor->parsed()) {
            NiceErrorBasis acc = basis_from_json(read_input(opt, tensor_in[0]));
            for (size_t i = 1; i < tensor_in.size(); ++i)
                acc = tensor_basis(acc, basis_from_json(read_input(opt, tensor_in[i])));
            emit(opt, to_json(acc), save_name, "basis");
        } else if (b_semi->parsed()) {
            ErrorGroup h1 = error_group_from_generators(
                basis_from_json(read_input(opt, sd_h1)).ops(), opt.cap);
            ErrorGroup h2 = error_group_from_generators(
                basis_from_json(read_input(opt, sd_h2)).ops(), opt.cap);
            Json phi_json = read_input(opt, sd_phi);
            std::vector<CycMatrix> phi;
            for (const auto& m : phi_json) phi.push_back(mat_from_json(m));
            emit(opt, to_json(semidirect_basis(h1, h2, phi)), save_name, "basis");
        } else if (basis->get_subcommand("egner")->parsed()) {
            emit(opt, to_json(egner_like_basis()), save_name, "basis");
        } else if (b_gfpk->parsed()) {
            FieldCtx field(static_cast<int>(gk_p), static_cast<int>(gk_k),
                           gk_irred.empty() ? std::nullopt
                                            : std::optional<std::vector<int>>(gk_irred));
            LinearForm b = gk_b.empty() ? LinearForm::coefficient_form(field)
                                        : LinearForm(field, gk_b);
            emit(opt, to_json(gfpk_basis(field, b)), save_name, "basis");
        } else if (b_verify->parsed()) {
            NiceErrorBasis in = !verify_instance.empty()
                                    ? *make_instance(verify_instance).basis
                                    : basis_from_json(read_input(opt, verify_in));
            NiceErrorBasis checked = verify_renorm ? renormalize_very_nice(in) : in;
            emit(opt, to_json(verify_nice(checked)), save_name, "report");
        } else if (g_close->parsed()) {
            NiceErrorBasis in = basis_from_json(read_input(opt, close_in));
            emit(opt, to_json(close_generators(in.ops(), opt.cap)), save_name, "matrix_group");
        } else if (g_center->parsed()) {
            FiniteMatrixGroup g = matrix_group_from_json(read_input(opt, center_in));
            emit(opt, Json{{"center", center_indices(g)}, {"scalar", center_is_scalar(g)}},
                 save_name, "report");
        } else if (g_quot->parsed()) {
            FiniteMatrixGroup g = matrix_group_from_json(read_input(opt, quot_in));
            std::vector<int> sub;
            if (quot_center) {
                sub = center_indices(g);
            } else if (!quot_by.empty()) {
                for (const auto& v : read_input(opt, quot_by)) sub.push_back(v.get<int>());
            } else {
                throw std::invalid_argument("quotient needs --by-center or --by");
            }
            Quotient q = quotient(g.structure, sub);
            emit(opt,
                 Json{{"group", to_json(q.group)}, {"reps", q.rep}, {"coset_of", q.coset_of}},
                 save_name, "abstract_group");
        } else if (g_chart->parsed()) {
            AbstractGroup g = abstract_from_ref(opt, chart_in);
            emit(opt, to_json(character_table(g)), save_name, "character_table");
        } else if (g_iso->parsed()) {
            AbstractGroup g1 = abstract_from_ref(opt, iso_in);
            AbstractGroup g2 = abstract_from_ref(opt, iso_with);
            emit(opt, Json(group_isomorphic(g1, g2)), save_name, "bool");
        } else if (code->parsed()) {
            if (code_instance.empty()) throw std::invalid_argument("code commands need --instance");
            Instance inst = make_instance(code_instance);
            NormalSubgroupCtx n = instance_subgroup(inst);
            if (code->get_subcommand("build")->parsed()) {
                emit(opt, to_json(build_character_code(inst.eg, n, inst.chi)), save_name, "code");
            } else if (code->get_subcommand("idempotents")->parsed()) {
                CharacterInstance ci;
                for (auto& c : induced_characters(inst.eg, n))
                    if (c.chi_index == inst.chi) ci = c;
                IdempotentSplit split = primitive_idempotents(inst.eg, n, ci, opt.seed);
                Json parts = Json::array();
                for (const auto& e : split.parts) parts.push_back(to_json(e));
                emit(opt, Json{{"exact", split.exact}, {"idempotents", parts}}, save_name, "report");
            } else if (c_detect->parsed()) {
                CodeSpace cs = build_character_code(inst.eg, n, inst.chi);
                auto lam = is_detectable(cs, inst.eg.matrix(static_cast<int>(detect_element)));
                Json j{{"detectable", lam.has_value()}};
                if (lam) j["lambda"] = to_json(*lam);
                emit(opt, j, save_name, "report");
            } else if (c_correct->parsed()) {
                CodeSpace cs = build_character_code(inst.eg, n, inst.chi);
                std::vector<CycMatrix> ops;
                for (long e : correct_elements) ops.push_back(inst.eg.matrix(static_cast<int>(e)));
                CorrectableReport rep = is_correctable_set(cs, ops);
                Json fails = Json::array();
                for (auto& [i, j] : rep.failures) fails.push_back(Json::array({i, j}));
                emit(opt, Json{{"correctable", rep.correctable}, {"failures", fails}}, save_name,
                     "report");
            } else if (code->get_subcommand("classify")->parsed()) {
                emit(opt, to_json(classify_errors(inst.eg, n, inst.chi, opt.seed)), save_name,
                     "report");
            } else if (code->get_subcommand("dims")->parsed()) {
                DetectableSpanReport rep = detectable_span_dimension(inst.eg, n, inst.chi);
                emit(opt, Json{{"rank", rep.rank}, {"formula", rep.formula}, {"d_dim", rep.d_dim}},
                     save_name, "report");
            }
        } else if (syndrome->parsed()) {
            Instance inst = make_instance(syn_instance);
            NormalSubgroupCtx n = instance_subgroup(inst);
            auto kind = syn_kind == "idempotent" ? CodeSpace::Kind::idempotent
                                                 : CodeSpace::Kind::character;
            auto intended = syn_default_reps ? std::nullopt : inst.intended;
            SyndromeFrame frame = syndrome_frame(inst.eg, n, inst.chi, intended, kind, opt.seed);
            if (syndrome->get_subcommand("frame")->parsed()) {
                emit(opt, to_json(frame), save_name, "frame");
            } else if (s_recover->parsed()) {
                // corrupt the uniform logical superposition, then recover
                CycMatrix basis_cols = frame.code.logical;
                CycMatrix state(basis_cols.rows(), 1);
                for (long j = 0; j < basis_cols.cols(); ++j)
                    for (long i = 0; i < basis_cols.rows(); ++i)
                        state.at(i, 0) += basis_cols.at(i, j);
                auto q = norm_sq(state).as_rational();
                state = state.scaled(CycScalar::sqrt_of_rational(*q).inverse());
                CycMatrix corrupted = inst.eg.matrix(static_cast<int>(rec_element)) * state;
                Json branches = Json::array();
                for (const auto& br : recover(frame, corrupted))
                    branches.push_back(
                        Json{{"probability", to_json(br.probability)}, {"state", to_json(br.state)}});
                emit(opt, Json{{"branches", branches}, {"input", to_json(state)}}, save_name,
                     "report");
            } else {
                emit(opt, to_json(correctable_set(inst.eg, frame)), save_name, "report");
            }
        } else if (classical->parsed()) {
            Json code_json = read_input(opt, cl_code);
            FieldCtx field = field_from_json(code_json);
            LinearForm b = cl_b.empty() ? LinearForm::coefficient_form(field)
                                        : LinearForm(field, cl_b);
            if (classical->get_subcommand("dual")->parsed()) {
                LinearCode c = linear_code_from_json(field, code_json);
                check_dual_equality(field, c, b);
                emit(opt, to_json(field, dual_b(field, c, b)), save_name, "linear_code");
            } else if (classical->get_subcommand("minweight")->parsed()) {
                ZpCode c = zp_code_from_json(field, code_json);
                emit(opt, Json{{"min_weight", min_weight(field, c)}}, save_name, "report");
            } else if (cl_quant->parsed()) {
                LinearCode c = linear_code_from_json(field, code_json);
                ZpCode c0 = zp_code_from_json(field, read_input(opt, cl_c0));
                std::optional<Codeword> leader;
                if (!cl_leader.empty()) {
                    Codeword w;
                    for (const auto& sym : cl_leader) w.push_back(FieldElem{sym});
                    leader = w;
                }
                emit(opt, to_json(field, quantum_code_from_pair(field, c, c0, b, leader)),
                     save_name, "quantum_pair");
            } else {
                LinearCode c = linear_code_from_json(field, code_json);
                ZpCode c0 = zp_code_from_json(field, read_input(opt, cl_c0));
                emit(opt, to_json(gfpk_code_report(field, c, c0, b)), save_name, "report");
            }
        } else if (transversal->parsed()) {
            Instance inst = make_instance(tr_instance);
            NormalSubgroupCtx n = instance_subgroup(inst);
            if (t_ops->parsed()) {
                std::vector<FactoredUnitary> extra;
                if (tr_extra_hadamard) {
                    CycScalar inv_sqrt2 = (CycScalar::zeta(8, 1) + CycScalar::zeta(8, 7)) *
                                          CycScalar::from_rational(Rat(1, 2));
                    CycMatrix h(2, 2);
                    h.at(0, 0) = inv_sqrt2;
                    h.at(0, 1) = inv_sqrt2;
                    h.at(1, 0) = inv_sqrt2;
                    h.at(1, 1) = -inv_sqrt2;
                    long factors = 0;
                    for (long d = inst.eg.dim; d > 1; d /= 2) ++factors;
                    FactoredUnitary fu;
                    fu.label = "transversal-hadamard";
                    for (long i = 0; i < factors; ++i) fu.factors.push_back(h);
                    extra.push_back(std::move(fu));
                }
                emit(opt, to_json(transversal_ops(inst.eg, n, inst.chi, extra)), save_name,
                     "report");
            } else if (t_two->parsed()) {
                FactoredUnitary fu;
                fu.label = tb_gen;
                if (tb_gen == "swap") {
                    CycMatrix swap(4, 4);
                    swap.at(0, 0) = CycScalar::one();
                    swap.at(1, 2) = CycScalar::one();
                    swap.at(2, 1) = CycScalar::one();
                    swap.at(3, 3) = CycScalar::one();
                    fu.factors.push_back(swap);
                } else if (tb_gen == "cnot") {
                    CycMatrix cx(4, 4);
                    cx.at(0, 0) = CycScalar::one();
                    cx.at(1, 1) = CycScalar::one();
                    cx.at(2, 3) = CycScalar::one();
                    cx.at(3, 2) = CycScalar::one();
                    fu.factors.push_back(cx);
                } else {
                    Json j = read_input(opt, tb_gen);
                    for (const auto& m : j) fu.factors.push_back(mat_from_json(m));
                }
                long pairs = 0;
                for (long d = inst.eg.dim; d > 1; d /= 2) ++pairs;
                emit(opt, to_json(two_block_transversal(inst.eg, n, inst.chi, {fu}, pairs)),
                     save_name, "report");
            }
        } else if (chk_all->parsed()) {
            emit(opt, check_all(chk_instance, opt.seed), save_name, "report");
        }
    } catch (const std::exception& e) {
        std::cout << canonical_dump(Json{{"error", e.what()}}) << "\n";
        return 1;
    }
    return 0;
}
