#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "hybrid/error.hpp"
#include "hybrid/model.hpp"

using namespace hybrid;
using Degrees = std::vector<std::int64_t>;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("validate derives the invariants") {
  const auto m = CompleteIntersectionModel::validate(5, Degrees{2, 3});
  CHECK(m.d_total() == 5);
  CHECK(m.codim() == 2);
  CHECK(m.dim_x() == 3);
  CHECK(m.index() == 1);
  CHECK(m.dim_y_minus() == 7);
  CHECK(m.d_max() == 3);
  CHECK(m.d_min() == 2);
}

TEST_CASE("validate sorts degrees") {
  const auto m = CompleteIntersectionModel::validate(10, Degrees{4, 2, 3});
  CHECK(m.degrees() == Degrees{2, 3, 4});
  CHECK(m == CompleteIntersectionModel::validate(10, Degrees{3, 4, 2}));
}

TEST_CASE("validate rejects bad input") {
  CHECK(code_of([] { CompleteIntersectionModel::validate(5, Degrees{3, 3}); }) ==
        ErrorCode::NotFano);
  CHECK(code_of([] { CompleteIntersectionModel::validate(4, Degrees{1, 3}); }) ==
        ErrorCode::DegreeBelowTwo);
  CHECK(code_of([] { CompleteIntersectionModel::validate(4, Degrees{}); }) ==
        ErrorCode::EmptyDegrees);
  CHECK(code_of([] { CompleteIntersectionModel::validate(1, Degrees{2}); }) ==
        ErrorCode::AmbientTooSmall);
  // Calabi-Yau index 0 is out
  CHECK(code_of([] { CompleteIntersectionModel::validate(4, Degrees{5}); }) ==
        ErrorCode::NotFano);
}

TEST_CASE("index one is accepted") {
  const auto m = CompleteIntersectionModel::validate(4, Degrees{4});
  CHECK(m.index() == 1);
}

TEST_CASE("reduce_linear") {
  CHECK(reduce_linear(5, Degrees{1, 2, 3}) == std::pair{std::int64_t{4}, Degrees{2, 3}});
  CHECK(reduce_linear(5, Degrees{2, 3}) == std::pair{std::int64_t{5}, Degrees{2, 3}});
  CHECK(code_of([] { reduce_linear(4, Degrees{1, 1, 1}); }) == ErrorCode::AllLinear);
  CHECK(code_of([] { reduce_linear(4, Degrees{0, 2}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("model properties over random inputs") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> deg(1, 6), count(1, 4), amb(2, 30);
  int validated = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    Degrees raw(static_cast<std::size_t>(count(rng)));
    for (auto& x : raw) x = deg(rng);
    const std::int64_t n = amb(rng);
    if (std::all_of(raw.begin(), raw.end(), [](auto x) { return x == 1; })) continue;

    const auto once = reduce_linear(n, raw);
    CHECK(reduce_linear(once.first, once.second) == once);

    std::int64_t heavy = 0;
    for (auto x : raw) heavy += x >= 2 ? x : 0;
    const bool expect_ok = once.first >= 2 && heavy <= once.first;
    if (!expect_ok) continue;
    const auto m = CompleteIntersectionModel::validate(once.first, once.second);
    ++validated;
    CHECK(m.index() + m.d_total() == m.n() + 1);
    CHECK(m.dim_x() + m.codim() == m.n());
    Degrees shuffled = once.second;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(CompleteIntersectionModel::validate(once.first, shuffled) == m);
  }
  CHECK(validated > 100);
}
