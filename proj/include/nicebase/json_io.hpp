// Copyright (c) 2026 The nicebase authors
// SPDX-License-Identifier: Apache-2.0
//
// Canonical JSON for every toolkit type: sorted keys, lowest-terms rationals,
// one shared cyclotomic order per matrix (the lcm of its minimized entries).
// Identical objects serialize to identical bytes, so fixtures are hashable.

#pragma once

#include <json.hpp>
#include <string>

#include "nicebase/chartable.hpp"
#include "nicebase/codes.hpp"
#include "nicebase/cyclo.hpp"
#include "nicebase/error_basis.hpp"
#include "nicebase/gfpk.hpp"
#include "nicebase/groups.hpp"
#include "nicebase/transversal.hpp"

namespace nicebase {

using Json = nlohmann::json;

Json to_json(const Rat& q);           // [num, den]
Rat rat_from_json(const Json& j);

Json to_json(const CycScalar& s);     // {"order": m, "coeffs": [[num,den],...]}
CycScalar cyc_from_json(const Json& j);

Json to_json(const CycMatrix& m);     // shared lcm order for all entries
CycMatrix mat_from_json(const Json& j);

Json to_json(const AbstractGroup& g);
AbstractGroup group_from_json(const Json& j);

Json to_json(const FiniteMatrixGroup& g);
FiniteMatrixGroup matrix_group_from_json(const Json& j);

Json to_json(const CharacterTable& t);

Json to_json(const NiceErrorBasis& b);
NiceErrorBasis basis_from_json(const Json& j);

Json to_json(const NiceBasisReport& r);

Json to_json(const CodeSpace& c);
CodeSpace code_from_json(const Json& j);

Json to_json(const InertiaData& d);
Json to_json(const SyndromeFrame& f);
Json to_json(const ErrorClassification& c);
Json to_json(const DetectableSpanReport& r);
Json to_json(const CorrectableSet& s);
Json to_json(const TransversalReport& r);
Json to_json(const GfpkCodeReport& r);
Json to_json(const FieldCtx& f, const LinearCode& c);
Json to_json(const FieldCtx& f, const ZpCode& c);
Json to_json(const FieldCtx& f, const QuantumCodePair& p);

// Canonical byte form: compact dump with sorted keys (nlohmann default).
std::string canonical_dump(const Json& j);

// Stable content hash of the canonical bytes (FNV-1a, hex).
std::string content_hash(const std::string& bytes);

// Named object store in a directory with a manifest of kinds and hashes.
class Workspace {
  public:
    explicit Workspace(std::string dir);
    void save(const std::string& name, const std::string& kind, const Json& value);
    Json load(const std::string& name) const;
    std::string kind_of(const std::string& name) const;
    bool has(const std::string& name) const;

  private:
    void write_manifest() const;
    std::string dir_;
    Json manifest_;
};

}  // namespace nicebase
