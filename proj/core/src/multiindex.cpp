// Copyright 2026 The pronyvar Authors
// SPDX-License-Identifier: Apache-2.0

#include "pronyvar/multiindex.hpp"

#include <cstdlib>
#include <sstream>

#include "pronyvar/errors.hpp"

namespace pronyvar {

MultiIndex MultiIndex::unit(int n, int k) {
  if (k < 0 || k >= n) throw validation_error("unit multi-index: coordinate out of range");
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(k)] = 1;
  return MultiIndex(std::move(e));
}

int MultiIndex::total_degree() const {
  int s = 0;
  for (int v : e_) s += v;
  return s;
}

int MultiIndex::max_degree() const {
  int m = 0;
  for (int v : e_) m = std::max(m, std::abs(v));
  return m;
}

bool MultiIndex::is_nonnegative() const {
  for (int v : e_)
    if (v < 0) return false;
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  if (e_.size() != o.e_.size()) throw validation_error("multi-index arithmetic: dimension mismatch");
  std::vector<int> r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] + o.e_[i];
  return MultiIndex(std::move(r));
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const { return *this + (-o); }

MultiIndex MultiIndex::operator-() const {
  std::vector<int> r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) r[i] = -e_[i];
  return MultiIndex(std::move(r));
}

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  os << "x^(";
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) os << ",";
    os << e_[i];
  }
  os << ")";
  return os.str();
}

}  // namespace pronyvar
