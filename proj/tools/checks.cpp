#include "checks.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <utility>

#include "hybrid/error.hpp"
#include "hybrid/ext.hpp"
#include "hybrid/hilbert.hpp"
#include "hybrid/lattice.hpp"
#include "hybrid/oracle.hpp"
#include "hybrid/serredim.hpp"

namespace hybrid::cli {
namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
  bool skipped = false;

  void fail(std::string why) {
    if (passed) detail = std::move(why);
    passed = false;
  }
};

Outcome skip(std::string why) { return {true, std::move(why), true}; }

using Bivariate = std::map<std::pair<std::int64_t, std::int64_t>, Count>;  // (z, q) -> coeff

Outcome generating_function(const CompleteIntersectionModel& model) {
  if (model.codim() < 2) return skip("polynomial identity needs k >= 2");
  const std::int64_t order = 40;
  const HilbertTable table(model.degrees(), order);
  Bivariate series;
  for (std::int64_t j = 0; j <= order; ++j) {
    for (const auto& [r, c] : table.h0(j).entries()) series[{j, r}] += c;
  }
  for (auto di : model.degrees()) {
    Bivariate next = series;
    for (const auto& [key, c] : series) {
      if (key.first + di <= order) next[{key.first + di, key.second + 2}] -= c;
    }
    series = std::move(next);
  }
  Outcome out;
  for (const auto& [key, c] : series) {
    const bool is_one = key.first == 0 && key.second == 0;
    if (c != (is_one ? 1 : 0)) {
      out.fail("coefficient of z^" + std::to_string(key.first) + " q^" +
               std::to_string(key.second) + " is " + c.get_str());
    }
  }
  return out;
}

Outcome hilbert_oracle(const CompleteIntersectionModel& model) {
  const auto& degrees = model.degrees();
  const HilbertTable table(degrees, 60 + model.d_total());
  const KnapsackExtremes knap(degrees, 60);
  Outcome out;
  for (std::int64_t j = -60; j <= 60; ++j) {
    GradedCount h0;
    for (const auto& e : oracle::enumerate_monomials(degrees, j, oracle::Regime::H0)) {
      std::int64_t s = 0;
      for (auto x : e) s += x;
      h0.add(2 * s, 1);
    }
    if (!(table.h0(j) == h0)) out.fail("h0 mismatch at j = " + std::to_string(j));
    if (degrees.size() >= 2) {
      GradedCount top;
      for (const auto& e : oracle::enumerate_monomials(degrees, j, oracle::Regime::HTop)) {
        std::int64_t s = 0;
        for (auto x : e) s += x;
        top.add(2 * s, 1);
      }
      if (!(table.htop(j) == top)) out.fail("htop mismatch at j = " + std::to_string(j));
    }
    if (j >= 0 || degrees.size() == 1) {
      const auto bounds = h0.support_bounds();
      const auto range = knap.rcharge(j);
      const bool agree = bounds ? range && range->min_r == bounds->first &&
                                      range->max_r == bounds->second
                                : !range;
      if (!agree) out.fail("extremal R-charge mismatch at j = " + std::to_string(j));
    }
  }
  return out;
}

Outcome rcharge_bounds(const CompleteIntersectionModel& model) {
  const KnapsackExtremes knap(model.degrees(), 200);
  const std::int64_t dmax = model.d_max();
  const std::int64_t dmin = model.d_min();
  Outcome out;
  for (std::int64_t j = 0; j <= 200; ++j) {
    const auto range = knap.rcharge(j);
    if (!range) continue;
    // min_r >= 2j/dmax with equality iff dmax | j; dually for max_r
    if (range->min_r * dmax < 2 * j) out.fail("min_r below 2j/d_max at j = " + std::to_string(j));
    if ((range->min_r * dmax == 2 * j) != (j % dmax == 0)) {
      out.fail("min_r attainment mismatch at j = " + std::to_string(j));
    }
    if (range->max_r * dmin > 2 * j) out.fail("max_r above 2j/d_min at j = " + std::to_string(j));
    if ((range->max_r * dmin == 2 * j) != (j % dmin == 0)) {
      out.fail("max_r attainment mismatch at j = " + std::to_string(j));
    }
  }
  return out;
}

Outcome local_duality(const CompleteIntersectionModel& model) {
  if (model.codim() < 2) return skip("no top cohomology for k = 1");
  const HilbertTable table(model.degrees(), 60 + model.d_total());
  const std::int64_t d = model.d_total();
  const std::int64_t k = model.codim();
  Outcome out;
  for (std::int64_t j = -60; j <= 60; ++j) {
    GradedCount dual;
    for (const auto& [r, c] : table.h0(-d - j).entries()) dual.add(-r - 2 * k, c);
    if (!(table.htop(j) == dual)) out.fail("duality broken at j = " + std::to_string(j));
  }
  return out;
}

Outcome serre_duality(const CompleteIntersectionModel& model) {
  const HomCalculator calc(model, -20 - model.index(), 20 + model.index());
  Outcome out;
  for (std::int64_t a = -10; a <= 10; ++a) {
    for (std::int64_t b = -10; b <= 10; ++b) {
      const auto forward = calc.hom_table(b - a);
      const auto backward = calc.hom_table(a + model.index() - b);
      GradedHomTable mirrored;
      for (const auto& [t, c] : backward.entries()) mirrored.add(model.dim_x() - t, c);
      if (!(forward == mirrored)) {
        out.fail("a = " + std::to_string(a) + ", b = " + std::to_string(b));
      }
    }
  }
  return out;
}

Outcome translation(const CompleteIntersectionModel& model) {
  Outcome out;
  for (std::int64_t a = -3; a <= 3; ++a) {
    for (std::int64_t m = -6; m <= 6; ++m) {
      if (!(hom_table(model, a, a + m) == hom_table(model, 0, m))) {
        out.fail("a = " + std::to_string(a) + ", m = " + std::to_string(m));
      }
    }
  }
  return out;
}

Outcome stable_purity(const CompleteIntersectionModel& model) {
  const std::int64_t first = model.n() + 2 - model.d_total();
  const HilbertTable table(model.degrees(), first + 40);
  Outcome out;
  for (std::int64_t m = first; m <= first + 40; ++m) {
    for (std::int64_t i = 0; i <= model.n() + 1; ++i) {
      if (!table.htop_row(m - i).empty()) out.fail("top class at m = " + std::to_string(m));
    }
  }
  return out;
}

Outcome hom_bounds(const CompleteIntersectionModel& model) {
  const std::int64_t first = model.n() + 2 - model.d_total();
  const std::int64_t last = std::max<std::int64_t>(first, 0) + 200;
  const HomCalculator calc(model, first, last);
  const std::int64_t n1 = model.n() + 1;
  Outcome out;
  for (std::int64_t m = first; m <= last; ++m) {
    const auto span = e_extremes(calc.hom_table(m));
    if (!span) continue;
    // e_- >= 2m/dmax and e_+ <= 2(m - n - 1)/dmin + n + 1
    if (span->e_minus * model.d_max() < 2 * m) out.fail("e_- bound at m = " + std::to_string(m));
    if (span->e_plus * model.d_min() > 2 * (m - n1) + n1 * model.d_min()) {
      out.fail("e_+ bound at m = " + std::to_string(m));
    }
    if (m >= 0 && m % model.d_max() == 0 && span->e_minus * model.d_max() != 2 * m) {
      out.fail("e_- not attained at m = " + std::to_string(m));
    }
    if (!(calc.extremes(m) == span)) out.fail("fast extremes differ at m = " + std::to_string(m));
  }
  return out;
}

Outcome ext_oracle(const CompleteIntersectionModel& model) {
  if (model.n() > 10) return skip("oracle guard n <= 10");
  const HomCalculator calc(model, -30, 30);
  Outcome out;
  for (std::int64_t m = -30; m <= 30; ++m) {
    if (!(calc.hom_table(m) == oracle::brute_hom_table(model, 0, m))) {
      out.fail("m = " + std::to_string(m));
    }
  }
  return out;
}

Outcome koszul_sum(const CompleteIntersectionModel& model) {
  Count total = 0;
  for (const auto& piece : koszul_pieces(model, 0)) {
    total += piece.multiplicity;
    if (piece.twist + piece.shift != 0) return {false, "twist + shift != m"};
  }
  Count expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), 2, static_cast<unsigned long>(model.n() + 1));
  if (total != expected) return {false, "multiplicities sum to " + total.get_str()};
  return {};
}

Outcome lattice_laws(const CompleteIntersectionModel& model) {
  Outcome out;
  const auto sy = serre_functor(model, Side::YMinus);
  const auto sp = serre_functor(model, Side::YPlus);
  if (!(sy + sp == shift_by(2 * (model.n() - model.codim())) && sy.twist == -sp.twist)) {
    out.fail("Y_+/Y_- sign change");
  }
  if (!(canonical_bundle(model) + shift_by(model.dim_y_minus()) == sy)) {
    out.fail("canonical bundle + dim Y_- != Serre functor");
  }
  const LatticeFunctor a = sy, b = canonical_bundle(model), c{3, -1};
  if (!(a + b == b + a && (a + b) + c == a + (b + c) && a + LatticeFunctor{} == a &&
        3 * a == a + a + a)) {
    out.fail("group laws");
  }
  return out;
}

Outcome lattice_special(const CompleteIntersectionModel& model) {
  if (model.codim() >= 2) {
    Outcome out;
    for (std::size_t last = 0; last < model.degrees().size(); ++last) {
      if (!power_identity_report(model, last).passed()) {
        out.fail("slice position " + std::to_string(last));
      }
    }
    return out;
  }
  const auto cy = fractional_cy(model);
  const std::int64_t n = model.n(), d = model.d_total();
  if (cy.dimension() != make_rational((n + 1) * (d - 2), d)) {
    return {false, "q/p != (n+1)(d-2)/d"};
  }
  return {};
}

Outcome serredim_suite(const CompleteIntersectionModel& model, std::int64_t horizon) {
  const auto serial = sdim_estimates(model, horizon, Execution::Serial);
  const auto parallel = sdim_estimates(model, horizon, Execution::Parallel);
  Outcome out;
  if (serial.series != parallel.series) out.fail("serial and parallel series differ");
  if (serial.upper_estimate < serial.lower_estimate) out.fail("upper estimate below lower");

  const std::int64_t d = model.d_total();
  const std::int64_t n1 = model.n() + 1;
  // Lower-side slack: the i = n+1 Koszul piece can push e_+ up by
  // (n+1)(1 - 2/dmin) beyond the window contribution 2(d-1)/dmin.
  const Rational lower_slack =
      std::max(Rational(2 * d), make_rational(2 * (d - 1) + n1 * (model.d_min() - 2),
                                              model.d_min()));
  for (const auto& p : serial.series) {
    if (p.e_minus > p.e_plus || p.upper_sample < p.lower_sample) {
      out.fail("e_- > e_+ at m = " + std::to_string(p.m));
    }
    const Rational m(static_cast<long>(p.m));
    if (p.upper_sample > serial.closed.upper + Rational(2 * d) / m) {
      out.fail("upper envelope at m = " + std::to_string(p.m));
    }
    if (p.lower_sample < serial.closed.lower - lower_slack / m) {
      out.fail("lower envelope at m = " + std::to_string(p.m));
    }
    if ((p.m * model.index()) % model.d_max() == 0 && p.upper_sample < serial.closed.upper) {
      out.fail("attainment floor at m = " + std::to_string(p.m));
    }
  }
  return out;
}

}  // namespace

std::vector<CheckResult> run_checks(const CompleteIntersectionModel& model,
                                    std::span<const std::int64_t> raw_degrees,
                                    std::optional<std::int64_t> horizon) {
  std::vector<CheckResult> results;
  auto record = [&](std::string name, const std::function<Outcome()>& body) {
    try {
      Outcome o = body();
      results.push_back({std::move(name), o.passed, o.skipped, o.detail});
    } catch (const std::exception& e) {
      results.push_back({std::move(name), false, false, e.what()});
    }
  };

  record("model.index_identity", [&]() -> Outcome {
    if (model.index() + model.d_total() != model.n() + 1) return {false, "ind + d != n + 1"};
    if (model.dim_x() + model.codim() != model.n()) return {false, "dim + codim != n"};
    return {};
  });
  record("model.reduce_linear_idempotent", [&]() -> Outcome {
    const std::int64_t raw_n = model.n() + static_cast<std::int64_t>(std::count(
                                               raw_degrees.begin(), raw_degrees.end(), 1));
    const auto once = reduce_linear(raw_n, raw_degrees);
    const auto twice = reduce_linear(once.first, once.second);
    return once == twice ? Outcome{} : Outcome{false, "second reduction changed the input"};
  });
  record("model.permutation_invariance", [&]() -> Outcome {
    std::vector<std::int64_t> rev(model.degrees().rbegin(), model.degrees().rend());
    const auto other = CompleteIntersectionModel::validate(model.n(), rev);
    if (!(other == model)) return {false, "reordered degrees give a different model"};
    if (sdim_closed_form(other).upper != sdim_closed_form(model).upper) {
      return {false, "closed form depends on order"};
    }
    return {};
  });
  record("hilbert.generating_function", [&] { return generating_function(model); });
  record("hilbert.oracle_agreement", [&] { return hilbert_oracle(model); });
  record("hilbert.rcharge_bounds", [&] { return rcharge_bounds(model); });
  record("hilbert.local_cohomology_duality", [&] { return local_duality(model); });
  record("ext.koszul_multiplicities", [&] { return koszul_sum(model); });
  record("ext.serre_duality", [&] { return serre_duality(model); });
  record("ext.translation_invariance", [&] { return translation(model); });
  record("ext.stable_range_purity", [&] { return stable_purity(model); });
  record("ext.degree_bounds_and_attainment", [&] { return hom_bounds(model); });
  record("ext.oracle_agreement", [&] { return ext_oracle(model); });
  record("lattice.functor_laws", [&] { return lattice_laws(model); });
  record(model.codim() >= 2 ? "lattice.power_identities" : "lattice.fractional_cy",
         [&] { return lattice_special(model); });
  const std::int64_t h = horizon.value_or(std::max<std::int64_t>(minimal_horizon(model), 200));
  record("serredim.orbit_envelope", [&] { return serredim_suite(model, h); });
  return results;
}

}  // namespace hybrid::cli
