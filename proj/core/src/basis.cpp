// Copyright 2026 The pronyvar Authors
// SPDX-License-Identifier: Apache-2.0

#include "pronyvar/basis.hpp"

#include <algorithm>
#include <sstream>

#include "pronyvar/errors.hpp"

namespace pronyvar {

std::string to_string(RingKind k) { return k == RingKind::PolynomialR ? "R" : "L"; }

std::string to_string(FiltrationKind k) { return k == FiltrationKind::TotalDegree ? "total" : "max"; }

int filtration_degree(const MultiIndex& a, FiltrationKind filtration) {
  return filtration == FiltrationKind::TotalDegree ? a.total_degree() : a.max_degree();
}

namespace {

// All a >= 0 with sum == s, ascending lex.
void total_shell(int n, int s, std::vector<int>& prefix, std::vector<MultiIndex>& out) {
  if (n == 1) {
    prefix.push_back(s);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int a = 0; a <= s; ++a) {
    prefix.push_back(a);
    total_shell(n - 1, s - a, prefix, out);
    prefix.pop_back();
  }
}

// All a with lo <= a_k <= hi and max_k |a_k| == s, ascending lex.
void box_shell(int n, int lo, int hi, int s, std::vector<int>& prefix, std::vector<MultiIndex>& out) {
  if (n == 0) {
    MultiIndex a(prefix);
    if (a.max_degree() == s) out.push_back(std::move(a));
    return;
  }
  for (int v = lo; v <= hi; ++v) {
    prefix.push_back(v);
    box_shell(n - 1, lo, hi, s, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

FiltrationBasis build_basis(int n, int degree, RingKind ring, FiltrationKind filtration) {
  if (n < 1) throw validation_error("build_basis: need at least one variable");
  if (degree < 0) throw validation_error("build_basis: degree must be non-negative");
  if (ring == RingKind::LaurentL && filtration == FiltrationKind::TotalDegree)
    throw validation_error("build_basis: the total-degree filtration is not defined on Laurent polynomials");

  auto table = std::make_shared<FiltrationBasis::Table>();
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  for (int s = 0; s <= degree; ++s) {
    table->shell_offsets.push_back(table->elements.size());
    if (filtration == FiltrationKind::TotalDegree) {
      total_shell(n, s, prefix, table->elements);
    } else {
      int lo = ring == RingKind::LaurentL ? -s : 0;
      box_shell(n, lo, s, s, prefix, table->elements);
    }
  }
  table->shell_offsets.push_back(table->elements.size());
  table->index.reserve(table->elements.size());
  for (std::size_t i = 0; i < table->elements.size(); ++i) table->index.emplace(table->elements[i], i);

  FiltrationBasis b;
  b.ring_ = ring;
  b.filtration_ = filtration;
  b.n_ = n;
  b.degree_ = degree;
  b.data_ = std::move(table);
  return b;
}

std::optional<std::size_t> FiltrationBasis::index_of(const MultiIndex& a) const {
  if (!data_ || a.size() != n_) return std::nullopt;
  auto it = data_->index.find(a);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t FiltrationBasis::prefix_size(int delta) const {
  if (!data_ || delta < 0) return 0;
  int s = std::min(delta, degree_);
  return data_->shell_offsets[static_cast<std::size_t>(s) + 1];
}

bool FiltrationBasis::embeds_into(const FiltrationBasis& larger) const {
  if (empty() || larger.empty()) return false;
  if (n_ != larger.n_ || degree_ > larger.degree_) return false;
  if (ring_ == RingKind::LaurentL && larger.ring_ == RingKind::PolynomialR) return false;
  // A total-degree simplex of degree d sits inside the max-degree box of
  // degree d. The reverse direction would need degree n*d and is
  // conservatively rejected; callers embed element-wise when they need it.
  if (filtration_ == FiltrationKind::MaxDegree && larger.filtration_ == FiltrationKind::TotalDegree)
    return false;
  return true;
}

std::string FiltrationBasis::describe() const {
  std::ostringstream os;
  os << to_string(ring_) << "[" << to_string(filtration_) << ", n=" << n_ << ", degree<=" << degree_ << "]";
  return os.str();
}

}  // namespace pronyvar
