// Copyright (c) 2026 The nicebase authors
// SPDX-License-Identifier: Apache-2.0
//
// Named desk-scale instances wiring the whole pipeline together, so every
// analysis is reachable from one command: bitflip3 (three-qubit phase-type
// stabilizers), bell2 (two-qubit Bell frame), egner (dim-4 basis with
// non-abelian index group), gf4-demo (GF(4) classical pair).

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nicebase/codes.hpp"
#include "nicebase/error_basis.hpp"
#include "nicebase/gfpk.hpp"

namespace nicebase {

struct Instance {
    std::string name;
    std::shared_ptr<const NiceErrorBasis> basis;
    ErrorGroup eg;
    std::vector<int> normal;                    // N as indices in eg
    long chi = -1;                              // row of N's character table
    std::optional<std::vector<int>> intended;   // S for syndrome frames
    // set for gf4-demo only
    std::shared_ptr<const FieldCtx> field;
    std::optional<QuantumCodePair> pair;
};

const std::vector<std::string>& instance_names();

// Builds a named instance; throws std::invalid_argument for unknown names.
Instance make_instance(const std::string& name);

// Resolved normal-subgroup context for the instance.
NormalSubgroupCtx instance_subgroup(const Instance& inst);

}  // namespace nicebase
