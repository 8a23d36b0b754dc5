#include <set>

#include "doctest.h"
#include "pronyvar/basis.hpp"
#include "pronyvar/errors.hpp"

using namespace pronyvar;

namespace {

long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long ipow(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

TEST_CASE("basis cardinalities match the closed forms") {
  CHECK(build_basis(1, 2, RingKind::PolynomialR, FiltrationKind::TotalDegree).size() == 3);
  CHECK(build_basis(2, 1, RingKind::PolynomialR, FiltrationKind::TotalDegree).size() == 3);
  CHECK(build_basis(2, 1, RingKind::LaurentL, FiltrationKind::MaxDegree).size() == 9);

  for (int n = 1; n <= 3; ++n) {
    for (int d = 0; d <= 5; ++d) {
      CHECK(build_basis(n, d, RingKind::PolynomialR, FiltrationKind::TotalDegree).size() ==
            static_cast<std::size_t>(binomial(n + d, n)));
      CHECK(build_basis(n, d, RingKind::PolynomialR, FiltrationKind::MaxDegree).size() ==
            static_cast<std::size_t>(ipow(d + 1, n)));
      CHECK(build_basis(n, d, RingKind::LaurentL, FiltrationKind::MaxDegree).size() ==
            static_cast<std::size_t>(ipow(2 * d + 1, n)));
    }
  }
}

TEST_CASE("laurent ring rejects the total-degree filtration") {
  CHECK_THROWS_AS(build_basis(2, 3, RingKind::LaurentL, FiltrationKind::TotalDegree), validation_error);
  CHECK_THROWS_AS(build_basis(0, 1, RingKind::PolynomialR, FiltrationKind::TotalDegree), validation_error);
  CHECK_THROWS_AS(build_basis(2, -1, RingKind::PolynomialR, FiltrationKind::TotalDegree), validation_error);
}

TEST_CASE("elements are ordered by degree shell then ascending lex") {
  FiltrationBasis b = build_basis(2, 2, RingKind::PolynomialR, FiltrationKind::TotalDegree);
  std::vector<std::vector<int>> expected = {{0, 0}, {0, 1}, {1, 0}, {0, 2}, {1, 1}, {2, 0}};
  REQUIRE(b.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(b[i].exponents() == expected[i]);

  // Generic order law: degree strictly grows between shells, lex inside.
  for (auto ring : {RingKind::PolynomialR, RingKind::LaurentL}) {
    FiltrationBasis m = build_basis(3, 3, ring, FiltrationKind::MaxDegree);
    std::set<std::vector<int>> seen;
    for (std::size_t i = 0; i < m.size(); ++i) {
      CHECK(seen.insert(m[i].exponents()).second);
      if (i > 0) {
        int da = filtration_degree(m[i - 1], FiltrationKind::MaxDegree);
        int db = filtration_degree(m[i], FiltrationKind::MaxDegree);
        CHECK(da <= db);
        if (da == db) CHECK(m[i - 1] < m[i]);
      }
    }
  }
}

TEST_CASE("bases of one family are nested prefixes") {
  for (auto [ring, filt] :
       {std::pair{RingKind::PolynomialR, FiltrationKind::TotalDegree},
        std::pair{RingKind::PolynomialR, FiltrationKind::MaxDegree},
        std::pair{RingKind::LaurentL, FiltrationKind::MaxDegree}}) {
    for (int n = 1; n <= 3; ++n) {
      FiltrationBasis big = build_basis(n, 4, ring, filt);
      for (int d = 0; d < 4; ++d) {
        FiltrationBasis small = build_basis(n, d, ring, filt);
        REQUIRE(small.size() == big.prefix_size(d));
        for (std::size_t i = 0; i < small.size(); ++i) CHECK(small[i] == big[i]);
      }
    }
  }
}

TEST_CASE("index lookup inverts enumeration and respects admissibility") {
  FiltrationBasis b = build_basis(2, 3, RingKind::LaurentL, FiltrationKind::MaxDegree);
  for (std::size_t i = 0; i < b.size(); ++i) {
    auto idx = b.index_of(b[i]);
    REQUIRE(idx.has_value());
    CHECK(*idx == i);
  }
  CHECK_FALSE(b.contains(MultiIndex({4, 0})));
  CHECK_FALSE(b.contains(MultiIndex({0, 0, 0})));

  FiltrationBasis r = build_basis(2, 3, RingKind::PolynomialR, FiltrationKind::TotalDegree);
  CHECK_FALSE(r.contains(MultiIndex({-1, 2})));
  CHECK(r.contains(MultiIndex({1, 2})));
  CHECK_FALSE(r.contains(MultiIndex({2, 2})));
}

TEST_CASE("embedding order reflects ring and filtration containment") {
  FiltrationBasis total2 = build_basis(2, 2, RingKind::PolynomialR, FiltrationKind::TotalDegree);
  FiltrationBasis max2 = build_basis(2, 2, RingKind::PolynomialR, FiltrationKind::MaxDegree);
  FiltrationBasis laurent2 = build_basis(2, 2, RingKind::LaurentL, FiltrationKind::MaxDegree);
  CHECK(total2.embeds_into(max2));
  CHECK(total2.embeds_into(laurent2));
  CHECK(max2.embeds_into(laurent2));
  CHECK_FALSE(laurent2.embeds_into(max2));
  CHECK_FALSE(max2.embeds_into(total2));
  CHECK(total2.embeds_into(build_basis(2, 3, RingKind::PolynomialR, FiltrationKind::TotalDegree)));
  CHECK_FALSE(build_basis(2, 3, RingKind::PolynomialR, FiltrationKind::TotalDegree).embeds_into(total2));
}
