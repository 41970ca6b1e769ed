// Copyright (c) 2026 The nicebase authors
// SPDX-License-Identifier: Apache-2.0

#include "nicebase/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace nicebase {

namespace fs = std::filesystem;

Json to_json(const Rat& q) { return Json::array({int_to_i64(q.get_num()), int_to_i64(q.get_den())}); }

Rat rat_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("rational must be [num, den]");
    Rat q(Int(j[0].get<int64_t>()), Int(j[1].get<int64_t>()));
    q.canonicalize();
    return q;
}

Json to_json(const CycScalar& s) {
    CycScalar m = s.minimized();
    Json coeffs = Json::array();
    for (const auto& c : m.coeffs()) coeffs.push_back(to_json(c));
    return Json{{"order", m.order()}, {"coeffs", coeffs}};
}

CycScalar cyc_from_json(const Json& j) {
    long order = j.at("order").get<long>();
    std::vector<Rat> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rat_from_json(c));
    return CycScalar::canonical(order, std::move(coeffs));
}

Json to_json(const CycMatrix& m) {
    long order = m.unified_order();
    Json entries = Json::array();
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) {
            CycScalar embedded = m.at(i, j).minimized().embedded(order);
            Json coeffs = Json::array();
            for (const auto& c : embedded.coeffs()) coeffs.push_back(to_json(c));
            entries.push_back(coeffs);
        }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"order", order}, {"entries", entries}};
}

CycMatrix mat_from_json(const Json& j) {
    long rows = j.at("rows").get<long>(), cols = j.at("cols").get<long>();
    long order = j.at("order").get<long>();
    const Json& entries = j.at("entries");
    if (static_cast<long>(entries.size()) != rows * cols)
        throw std::invalid_argument("matrix entry count mismatch");
    CycMatrix m(rows, cols);
    long k = 0;
    for (long i = 0; i < rows; ++i)
        for (long c = 0; c < cols; ++c) {
            std::vector<Rat> coeffs;
            for (const auto& x : entries[static_cast<size_t>(k)]) coeffs.push_back(rat_from_json(x));
            m.at(i, c) = CycScalar::canonical(order, std::move(coeffs));
            ++k;
        }
    return m;
}

Json to_json(const AbstractGroup& g) {
    return Json{{"order", g.order}, {"table", g.table}, {"identity", g.identity}};
}

AbstractGroup group_from_json(const Json& j) {
    AbstractGroup g;
    g.order = j.at("order").get<long>();
    g.identity = j.at("identity").get<int>();
    g.table = j.at("table").get<std::vector<std::vector<int>>>();
    g.validate();
    return g;
}

Json to_json(const FiniteMatrixGroup& g) {
    Json elems = Json::array();
    for (const auto& m : g.elements) elems.push_back(to_json(m));
    return Json{{"order", g.structure.order},
                {"table", g.structure.table},
                {"identity", g.structure.identity},
                {"elements", elems}};
}

FiniteMatrixGroup matrix_group_from_json(const Json& j) {
    std::vector<CycMatrix> elems;
    for (const auto& m : j.at("elements")) elems.push_back(mat_from_json(m));
    FiniteMatrixGroup g = group_from_element_set(elems);
    // the stored table must agree with the rebuilt one
    if (g.structure.table != j.at("table").get<std::vector<std::vector<int>>>())
        throw std::invalid_argument("stored multiplication table disagrees with the matrices");
    return g;
}

Json to_json(const CharacterTable& t) {
    Json classes = Json::array();
    for (const auto& c : t.classes) classes.push_back(c);
    Json chars = Json::array();
    for (const auto& row : t.characters) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(to_json(v));
        chars.push_back(r);
    }
    return Json{{"classes", classes}, {"characters", chars}, {"dims", t.dims}};
}

Json to_json(const NiceErrorBasis& b) {
    Json ops = Json::array();
    for (const auto& op : b.ops()) ops.push_back(to_json(op));
    return Json{{"dim", b.dim()}, {"index_group", to_json(b.index_group())}, {"ops", ops}};
}

NiceErrorBasis basis_from_json(const Json& j) {
    AbstractGroup g = group_from_json(j.at("index_group"));
    std::vector<CycMatrix> ops;
    for (const auto& m : j.at("ops")) ops.push_back(mat_from_json(m));
    return NiceErrorBasis(j.at("dim").get<long>(), std::move(g), std::move(ops));
}

Json to_json(const NiceBasisReport& r) {
    return Json{{"unitary", r.unitary_ok},
                {"identity", r.identity_ok},
                {"trace_condition", r.trace_ok},
                {"cocycle_closure", r.cocycle_ok},
                {"index_group_order", r.order_ok},
                {"trace_orthogonality", r.trace_orthogonal_ok},
                {"span", r.span_ok},
                {"very_nice", r.very_nice},
                {"max_cocycle_order", r.max_cocycle_order},
                {"all_nice", r.all_nice()},
                {"failures", r.failures}};
}

Json to_json(const CodeSpace& c) {
    return Json{{"n", c.ambient},
                {"projector", to_json(c.projector)},
                {"logical_basis", to_json(c.logical)},
                {"kind", c.kind == CodeSpace::Kind::character ? "character" : "idempotent"},
                {"provenance",
                 Json{{"normal_subgroup", c.normal_subgroup},
                      {"chi", c.chi_index},
                      {"idempotent", c.idempotent_index}}}};
}

CodeSpace code_from_json(const Json& j) {
    CodeSpace c;
    c.ambient = j.at("n").get<long>();
    c.projector = mat_from_json(j.at("projector"));
    c.logical = mat_from_json(j.at("logical_basis"));
    c.kind = j.at("kind").get<std::string>() == "character" ? CodeSpace::Kind::character
                                                            : CodeSpace::Kind::idempotent;
    const Json& prov = j.at("provenance");
    c.normal_subgroup = prov.at("normal_subgroup").get<std::vector<int>>();
    c.chi_index = prov.at("chi").get<long>();
    c.idempotent_index = prov.at("idempotent").get<long>();
    return c;
}

Json to_json(const InertiaData& d) {
    return Json{{"subgroup", d.subgroup}, {"coset_reps", d.coset_reps}, {"r", d.r}};
}

Json to_json(const SyndromeFrame& f) {
    Json syndromes = Json::array();
    for (const auto& s : f.syndromes)
        syndromes.push_back(Json{{"coset", s.coset},
                                 {"idempotent", s.idem},
                                 {"projector", to_json(s.projector)},
                                 {"recovery", to_json(s.recovery)}});
    return Json{{"code", to_json(f.code)},
                {"inertia", to_json(f.inertia)},
                {"syndromes", syndromes},
                {"rep_center", f.rep_center},
                {"exact_idempotents", f.exact_idempotents}};
}

Json to_json(const ErrorClassification& c) {
    Json cls = Json::array();
    for (auto v : c.cls)
        cls.push_back(v == ErrClass::outside_inertia ? "outside_inertia"
                      : v == ErrClass::in_subgroup   ? "in_subgroup"
                                                     : "inertia_other");
    return Json{{"classes", cls},
                {"in_rep_center", c.in_rep_center},
                {"outside_count", c.outside_count},
                {"subgroup_count", c.subgroup_count},
                {"other_count", c.other_count}};
}

Json to_json(const DetectableSpanReport& r) {
    return Json{{"rank", r.rank},
                {"formula", r.formula},
                {"d_dim", r.d_dim},
                {"d_dim_formula", r.d_dim_formula},
                {"outside_rank", r.outside_rank}};
}

Json to_json(const CorrectableSet& s) {
    return Json{{"predicted", s.predicted}, {"verified", s.verified}};
}

Json to_json(const TransversalReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries)
        entries.push_back(Json{{"element", e.element},
                               {"label", e.label},
                               {"logical", to_json(e.logical)}});
    return Json{{"code", to_json(r.code)}, {"entries", entries}, {"rejected", r.rejected}};
}

Json to_json(const GfpkCodeReport& r) {
    Json j{{"min_weight_c", r.min_weight_c},
           {"min_weight_dual_c0", r.min_weight_dual_c0},
           {"e", r.e},
           {"direct_checked", r.direct_checked},
           {"detect_verified", r.detect_verified},
           {"correct_verified", r.correct_verified}};
    if (r.weight1_undetectable) {
        Json u = Json::array(), v = Json::array();
        for (const auto& s : r.weight1_undetectable->first) u.push_back(s.c);
        for (const auto& s : r.weight1_undetectable->second) v.push_back(s.c);
        j["weight1_undetectable"] = Json{{"u", u}, {"v", v}};
    }
    return j;
}

Json to_json(const FieldCtx& f, const LinearCode& c) {
    Json gen = Json::array();
    for (const auto& row : c.gen) {
        Json r = Json::array();
        for (const auto& sym : row) r.push_back(sym.c);
        gen.push_back(r);
    }
    return Json{{"p", f.p()}, {"k", f.k()}, {"irreducible", f.irreducible()},
                {"n", c.n}, {"generator", gen}};
}

Json to_json(const FieldCtx& f, const ZpCode& c) {
    Json basis = Json::array();
    for (const auto& row : c.basis) {
        Json r = Json::array();
        for (const auto& sym : row) r.push_back(sym.c);
        basis.push_back(r);
    }
    return Json{{"p", f.p()}, {"k", f.k()}, {"irreducible", f.irreducible()},
                {"n", c.n}, {"zp_basis", basis}};
}

Json to_json(const FieldCtx& f, const QuantumCodePair& p) {
    Json logicals = Json::array();
    for (const auto& l : p.logicals) logicals.push_back(to_json(l));
    Json leaders = Json::array();
    for (const auto& l : p.coset_leaders) {
        Json r = Json::array();
        for (const auto& sym : l) r.push_back(sym.c);
        leaders.push_back(r);
    }
    Json fixing = Json::array();
    for (const auto& [u, v, j] : p.fixing) {
        Json uj = Json::array(), vj = Json::array();
        for (const auto& sym : u) uj.push_back(sym.c);
        for (const auto& sym : v) vj.push_back(sym.c);
        fixing.push_back(Json{{"u", uj}, {"v", vj}, {"phase_exponent", j}});
    }
    return Json{{"code", to_json(p.code)},
                {"logicals", logicals},
                {"coset_leaders", leaders},
                {"stabilizer", to_json(p.stabilizer)},
                {"stabilizer_chi", p.stabilizer_chi},
                {"fixing", fixing},
                {"p", f.p()},
                {"k", f.k()}};
}

std::string canonical_dump(const Json& j) { return j.dump(); }

std::string content_hash(const std::string& bytes) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

Workspace::Workspace(std::string dir) : dir_(std::move(dir)) {
    fs::create_directories(dir_);
    fs::path mpath = fs::path(dir_) / "manifest.json";
    if (fs::exists(mpath)) {
        std::ifstream in(mpath);
        in >> manifest_;
    } else {
        manifest_ = Json::object();
    }
}

void Workspace::write_manifest() const {
    std::ofstream out(fs::path(dir_) / "manifest.json");
    out << canonical_dump(manifest_) << "\n";
}

void Workspace::save(const std::string& name, const std::string& kind, const Json& value) {
    std::string bytes = canonical_dump(value);
    std::string file = name + ".json";
    std::ofstream out(fs::path(dir_) / file);
    out << bytes << "\n";
    manifest_[name] = Json{{"kind", kind}, {"hash", content_hash(bytes)}, {"file", file}};
    write_manifest();
}

Json Workspace::load(const std::string& name) const {
    if (!has(name)) throw std::invalid_argument("workspace has no object named " + name);
    std::ifstream in(fs::path(dir_) / manifest_.at(name).at("file").get<std::string>());
    Json j;
    in >> j;
    return j;
}

std::string Workspace::kind_of(const std::string& name) const {
    if (!has(name)) throw std::invalid_argument("workspace has no object named " + name);
    return manifest_.at(name).at("kind").get<std::string>();
}

bool Workspace::has(const std::string& name) const { return manifest_.contains(name); }

}  // namespace nicebase
