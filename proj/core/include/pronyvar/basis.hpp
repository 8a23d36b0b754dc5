// Copyright 2026 The pronyvar Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pronyvar/multiindex.hpp"

namespace pronyvar {

/// Coefficient ring of monomials: ordinary polynomials (exponents >= 0) or
/// Laurent polynomials (arbitrary integer exponents).
enum class RingKind { PolynomialR, LaurentL };

/// Degree function that grades the ring. TotalDegree sums the exponents and
/// is only defined for PolynomialR; MaxDegree bounds each |exponent| and
/// works for both rings.
enum class FiltrationKind { TotalDegree, MaxDegree };

std::string to_string(RingKind k);
std::string to_string(FiltrationKind k);

/// Degree of a single index under the given filtration.
int filtration_degree(const MultiIndex& a, FiltrationKind filtration);

/// Monomial basis of one filtration step: all admissible exponent vectors of
/// filtration degree <= degree, ordered by degree shell and ascending
/// lexicographically inside each shell. Bases of the same family are nested:
/// the degree-(d-1) basis is a prefix of the degree-d basis.
///
/// Copies share the underlying element table; the handle is cheap to pass by
/// value.
class FiltrationBasis {
 public:
  FiltrationBasis() = default;

  RingKind ring() const { return ring_; }
  FiltrationKind filtration() const { return filtration_; }
  /// Ambient number of variables.
  int ambient_dimension() const { return n_; }
  int degree() const { return degree_; }

  bool empty() const { return !data_; }
  std::size_t size() const { return data_ ? data_->elements.size() : 0; }
  const MultiIndex& operator[](std::size_t i) const { return data_->elements[i]; }
  const std::vector<MultiIndex>& elements() const { return data_->elements; }

  /// Position of an index in the basis, if admissible at this degree.
  std::optional<std::size_t> index_of(const MultiIndex& a) const;
  bool contains(const MultiIndex& a) const { return index_of(a).has_value(); }

  /// Number of leading elements of filtration degree <= delta. Because bases
  /// are nested this is exactly the size of the degree-delta basis.
  std::size_t prefix_size(int delta) const;

  /// Same family and same degree. Element order is deterministic, so this is
  /// full equality of the monomial lists.
  bool operator==(const FiltrationBasis& o) const {
    return ring_ == o.ring_ && filtration_ == o.filtration_ && n_ == o.n_ && degree_ == o.degree_;
  }
  bool operator!=(const FiltrationBasis& o) const { return !(*this == o); }

  /// True if every element of this basis lies in `larger` (same ambient
  /// dimension, compatible ring/filtration, smaller or equal degree).
  bool embeds_into(const FiltrationBasis& larger) const;

  std::string describe() const;

  friend FiltrationBasis build_basis(int n, int degree, RingKind ring, FiltrationKind filtration);

 private:
  struct Table {
    std::vector<MultiIndex> elements;
    std::unordered_map<MultiIndex, std::size_t, MultiIndexHash> index;
    std::vector<std::size_t> shell_offsets;  // shell_offsets[s] = first index of degree shell s
  };

  RingKind ring_ = RingKind::PolynomialR;
  FiltrationKind filtration_ = FiltrationKind::TotalDegree;
  int n_ = 0;
  int degree_ = -1;
  std::shared_ptr<const Table> data_;
};

/// Enumerates the basis. Rejects n < 1, degree < 0 and the Laurent ring with
/// the total-degree filtration (unbounded shells).
FiltrationBasis build_basis(int n, int degree, RingKind ring, FiltrationKind filtration);

}  // namespace pronyvar
