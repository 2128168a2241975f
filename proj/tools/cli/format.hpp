// Copyright 2026 The jbtk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "jbtk/matcore.hpp"

namespace jbtk::cli {

/// Exact form when one is close: small fractions ("3/5") and square roots of
/// them ("1/sqrt(2)"); otherwise up to 12 significant digits.
std::string format_number(double x);
std::string format_complex(Complex z);
/// Scalar-block spaces print as a tuple "(2,1)"; others as nested rows,
/// blocks joined by " (+) ".
std::string format_element(const Element& x);
std::string format_space(const TripleSpace& s);
/// Scientific notation for residuals.
std::string format_residual(double r);

}  // namespace jbtk::cli
