#include <doctest.h>
#include <omp.h>

#include <algorithm>
#include <optional>
#include <vector>

#include "hybrid/error.hpp"
#include "hybrid/ext.hpp"
#include "hybrid/serredim.hpp"

using namespace hybrid;
using Degrees = std::vector<std::int64_t>;

namespace {

CompleteIntersectionModel model(std::int64_t n, Degrees degrees) {
  return CompleteIntersectionModel::validate(n, degrees);
}

// e_-(T, S^m T) and e_+ from the full d x d block of Hom(O(i), O(j + m ind)[m dim]).
DegreeSpan generator_block_extremes(const CompleteIntersectionModel& x, std::int64_t m) {
  std::optional<DegreeSpan> best;
  for (auto i : generator_twists(x)) {
    for (auto j : generator_twists(x)) {
      const auto span = e_extremes(hom_table(x, i, j + m * x.index()));
      if (!span) continue;
      const DegreeSpan shifted{span->e_minus - m * x.dim_x(), span->e_plus - m * x.dim_x()};
      if (!best) {
        best = shifted;
      } else {
        best->e_minus = std::min(best->e_minus, shifted.e_minus);
        best->e_plus = std::max(best->e_plus, shifted.e_plus);
      }
    }
  }
  REQUIRE(best.has_value());
  return *best;
}

}  // namespace

TEST_CASE("generator twists") {
  CHECK(generator_twists(model(5, {2, 3})) == Degrees{0, 1, 2, 3, 4});
  CHECK(generator_twists(model(4, {3})) == Degrees{0, 1, 2});
  CHECK(generator_twists(model(6, {2, 2})) == Degrees{0, 1, 2, 3});
}

TEST_CASE("closed forms") {
  auto check = [](const CompleteIntersectionModel& x, Rational upper, Rational lower) {
    const auto c = sdim_closed_form(x);
    CHECK(c.upper == upper);
    CHECK(c.lower == lower);
  };
  check(model(5, {2, 3}), make_rational(7, 3), Rational(2));
  check(model(4, {3}), make_rational(5, 3), make_rational(5, 3));
  check(model(9, {3, 4}), make_rational(11, 2), Rational(5));
}

TEST_CASE("orbit point at m = 30 for (2,3) in P^5") {
  const auto p = orbit_point(model(5, {2, 3}), 30);
  CHECK(p.m == 30);
  CHECK(p.e_minus == -72);
  CHECK(p.upper_sample == make_rational(12, 5));
  CHECK(p.lower_sample == make_rational(-p.e_plus, 30));
  CHECK(p.e_minus <= p.e_plus);
}

TEST_CASE("window reduction matches the full generator block") {
  for (const auto& x : {model(5, {2, 3}), model(4, {3}), model(6, {2, 2}), model(9, {3, 4})}) {
    for (std::int64_t m = 1; m <= 8; ++m) {
      CAPTURE(m);
      const auto p = orbit_point(x, m);
      const auto block = generator_block_extremes(x, m);
      CHECK(p.e_minus == block.e_minus);
      CHECK(p.e_plus == block.e_plus);
    }
  }
}

TEST_CASE("equal degrees keep both samples near the closed form") {
  const auto x = model(6, {2, 2});
  const auto p = orbit_point(x, 10);
  const Rational bound = make_rational(2 * x.d_total(), 10);
  CHECK(abs(p.upper_sample - 1) <= bound);
  CHECK(abs(p.lower_sample - 1) <= bound);
}

TEST_CASE("attainment floor when d_max divides m ind") {
  for (const auto& x : {model(5, {2, 3}), model(9, {3, 4}), model(10, {2, 3, 4})}) {
    const auto closed = sdim_closed_form(x);
    const auto calc = orbit_calculator(x, 1, 120);
    for (std::int64_t m = 1; m <= 120; ++m) {
      if ((m * x.index()) % x.d_max() != 0) continue;
      CHECK(orbit_point(calc, m).upper_sample >= closed.upper);
    }
  }
}

TEST_CASE("horizon precondition") {
  const auto x = model(5, {2, 3});
  CHECK(minimal_horizon(x) == 24);
  CHECK_THROWS_AS(sdim_estimates(x, 23), Error);
  CHECK_NOTHROW(sdim_estimates(x, 24));
  try {
    sdim_estimates(x, 5);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::HorizonTooSmall);
  }
}

TEST_CASE("serial and OpenMP kernels agree exactly") {
  omp_set_num_threads(4);
  for (const auto& x : {model(5, {2, 3}), model(10, {2, 3, 4}), model(5, {3})}) {
    const auto calc = orbit_calculator(x, 1, 150);
    CHECK(orbit_series_serial(calc, 1, 150) == orbit_series_parallel(calc, 1, 150));
  }
  CHECK(orbit_series_parallel(orbit_calculator(model(5, {2, 3}), 3, 3), 3, 2).empty());
}

TEST_CASE("estimates converge within the window envelope") {
  struct Case {
    CompleteIntersectionModel x;
    std::int64_t horizon;
  };
  for (const auto& [x, horizon] : {Case{model(5, {2, 3}), 600}, Case{model(4, {3}), 600},
                                   Case{model(7, {2, 2, 2}), 400}}) {
    const auto report = sdim_estimates(x, horizon);
    CHECK(report.series.size() == static_cast<std::size_t>(horizon - horizon / 2));
    CHECK(report.series.front().m == horizon / 2 + 1);
    CHECK(report.upper_estimate >= report.lower_estimate);
    const Rational tol = make_rational(2 * x.d_total(), horizon / 2);
    CHECK(abs(report.upper_estimate - report.closed.upper) <= tol);
    CHECK(abs(report.lower_estimate - report.closed.lower) <= tol);
    for (const auto& p : report.series) {
      const Rational env = make_rational(2 * x.d_total(), p.m);
      CHECK(p.upper_sample <= report.closed.upper + env);
      CHECK(p.lower_sample >= report.closed.lower - env);
    }
  }
}

TEST_CASE("doubling the horizon stays inside the envelope") {
  for (const auto& x : {model(5, {2, 3}), model(9, {3, 4})}) {
    for (std::int64_t horizon : {100, 200}) {
      const auto a = sdim_estimates(x, horizon);
      const auto b = sdim_estimates(x, 2 * horizon);
      const Rational env = make_rational(2 * x.d_total(), horizon / 2);
      CHECK(abs(b.upper_estimate - b.closed.upper) <= abs(a.upper_estimate - a.closed.upper) + env);
    }
  }
}
