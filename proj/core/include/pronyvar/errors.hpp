// Copyright 2026 The pronyvar Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace pronyvar {

/// Raised when an input violates a documented precondition: malformed or
/// inconsistent measure descriptions, unsupported ring/filtration
/// combinations, missing moment coverage, domain violations. Maps to process
/// exit code 2.
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a computation fails numerically on valid input: quadrature
/// that cannot reach the requested accuracy, rank decisions without a usable
/// gap, factorizations losing positivity, stabilization that never settles.
/// Maps to process exit code 3.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pronyvar
