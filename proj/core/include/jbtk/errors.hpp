// Copyright 2026 The jbtk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace jbtk {

/// Operands live in different triple spaces, or a block shape does not fit.
class SpaceMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A decomposition or self-validation failed; carries the offending block when known.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what, std::optional<std::size_t> block = std::nullopt)
      : std::runtime_error(block ? what + " (block " + std::to_string(*block) + ")" : what),
        block_(block) {}

  std::optional<std::size_t> block() const noexcept { return block_; }

 private:
  std::optional<std::size_t> block_;
};

class NotTripotent : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Jordan inverse requested for an element whose U-operator is singular.
class NotInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two characterizations of the same property disagreed. Never resolved silently.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class InfeasibleRecipe : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class FactorizationRefused : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace jbtk
