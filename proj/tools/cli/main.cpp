// Copyright 2026 The jbtk Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::cout.precision(17);
  return jbtk::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
