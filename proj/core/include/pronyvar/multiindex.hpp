// Copyright 2026 The pronyvar Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace pronyvar {

/// Exponent vector of a (Laurent) monomial x^a = x_1^{a_1} ... x_n^{a_n}.
/// Entries may be negative; the surrounding basis decides which signs are
/// admissible.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> exponents) : e_(std::move(exponents)) {}

  static MultiIndex zero(int n) { return MultiIndex(std::vector<int>(static_cast<std::size_t>(n), 0)); }
  /// Standard unit vector e_k (0-based coordinate k).
  static MultiIndex unit(int n, int k);

  int size() const { return static_cast<int>(e_.size()); }
  int operator[](int k) const { return e_[static_cast<std::size_t>(k)]; }
  const std::vector<int>& exponents() const { return e_; }

  /// Sum of entries. Only meaningful for non-negative indices; callers in
  /// polynomial-ring context check non-negativity first.
  int total_degree() const;
  /// max_k |a_k|; degree in the Laurent filtration by coordinate bound.
  int max_degree() const;
  bool is_nonnegative() const;

  MultiIndex operator+(const MultiIndex& o) const;
  MultiIndex operator-(const MultiIndex& o) const;
  MultiIndex operator-() const;

  bool operator==(const MultiIndex& o) const { return e_ == o.e_; }
  bool operator!=(const MultiIndex& o) const { return e_ != o.e_; }
  /// Plain lexicographic comparison, used as the tiebreak inside degree
  /// shells of a FiltrationBasis.
  bool operator<(const MultiIndex& o) const { return e_ < o.e_; }

  /// "x^(1,-2)" style rendering for diagnostics.
  std::string to_string() const;

 private:
  std::vector<int> e_;
};

struct MultiIndexHash {
  std::size_t operator()(const MultiIndex& a) const {
    std::uint64_t h = 1469598103934665603ull;
    for (int v : a.exponents()) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace pronyvar
