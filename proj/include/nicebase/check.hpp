// Copyright (c) 2026 The nicebase authors
// SPDX-License-Identifier: Apache-2.0
//
// The `check all` invariant suite: one call runs every exact invariant the
// toolkit guarantees on a named instance and reports a deterministic JSON
// summary (identical bytes for identical seeds).

#pragma once

#include <cstdint>
#include <string>

#include "nicebase/json_io.hpp"

namespace nicebase {

Json check_all(const std::string& instance_name, uint64_t seed);

}  // namespace nicebase
