// Copyright 2026 The jbtk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "jbtk/maps.hpp"

namespace jbtk::cli {

const std::vector<std::string>& demo_names();
/// Walkthrough of a counterexample map. Throws std::invalid_argument on an unknown name.
void run_demo(const std::string& name, const SamplingOptions& opts, std::ostream& out);

}  // namespace jbtk::cli
