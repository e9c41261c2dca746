#include <doctest.h>

#include <vector>

#include "hybrid/error.hpp"
#include "hybrid/oracle.hpp"

using namespace hybrid;
using namespace hybrid::oracle;
using Degrees = std::vector<std::int64_t>;

TEST_CASE("enumerate_monomials") {
  CHECK(enumerate_monomials(Degrees{2, 3}, 6, Regime::H0) ==
        std::vector<ExponentVector>{{3, 0}, {0, 2}});
  CHECK(enumerate_monomials(Degrees{2, 3}, -5, Regime::HTop) ==
        std::vector<ExponentVector>{{-1, -1}});
  CHECK(enumerate_monomials(Degrees{2, 3}, 1, Regime::H0).empty());
  CHECK(enumerate_monomials(Degrees{2, 3}, -11, Regime::HTop) ==
        std::vector<ExponentVector>{{-1, -3}, {-4, -1}});
  CHECK(enumerate_monomials(Degrees{3}, -6, Regime::H0) == std::vector<ExponentVector>{{-2}});
  CHECK_THROWS_AS(enumerate_monomials(Degrees{3}, -6, Regime::HTop), Error);
}

TEST_CASE("enumeration satisfies the degree constraint") {
  const Degrees degrees{2, 3, 5};
  for (std::int64_t j = -40; j <= 40; ++j) {
    for (auto regime : {Regime::H0, Regime::HTop}) {
      const auto list = enumerate_monomials(degrees, j, regime);
      for (std::size_t idx = 0; idx < list.size(); ++idx) {
        std::int64_t total = 0;
        for (std::size_t i = 0; i < degrees.size(); ++i) {
          total += list[idx][i] * degrees[i];
          CHECK((regime == Regime::H0 ? list[idx][i] >= 0 : list[idx][i] <= -1));
        }
        CHECK(total == j);
        if (idx > 0) CHECK(list[idx - 1] > list[idx]);
      }
    }
  }
}

TEST_CASE("brute_hom_table worked values") {
  const auto x = CompleteIntersectionModel::validate(5, Degrees{2, 3});
  CHECK(brute_hom_table(x, 0, 0) == GradedHomTable{{0, 1}, {2, 6}});
  CHECK(brute_hom_table(x, 0, 6) == GradedHomTable{{4, 1}, {5, 26}, {6, 32}});
  CHECK(brute_hom_table(x, 2, 8) == brute_hom_table(x, 0, 6));
}

TEST_CASE("oracle guard") {
  const auto x = CompleteIntersectionModel::validate(5, Degrees{2, 3});
  CHECK_THROWS_AS(brute_hom_table(x, 0, 61), Error);
  CHECK_NOTHROW(brute_hom_table(x, 0, -60));
  const auto big = CompleteIntersectionModel::validate(11, Degrees{2});
  try {
    brute_hom_table(big, 0, 0);
    FAIL("guard not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GuardExceeded);
  }
}
