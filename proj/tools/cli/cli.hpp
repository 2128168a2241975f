// Copyright 2026 The jbtk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jbtk::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2, kConsistency = 3 };

/// Entry point behind the `jbtk` executable; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jbtk::cli
