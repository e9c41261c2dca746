#include "hybrid/serredim.hpp"

#include <algorithm>
#include <exception>
#include <string>

#include "hybrid/error.hpp"

namespace hybrid {

std::vector<std::int64_t> generator_twists(const CompleteIntersectionModel& model) {
  std::vector<std::int64_t> twists(static_cast<std::size_t>(model.d_total()));
  for (std::size_t i = 0; i < twists.size(); ++i) twists[i] = static_cast<std::int64_t>(i);
  return twists;
}

HomCalculator orbit_calculator(const CompleteIntersectionModel& model, std::int64_t m_first,
                               std::int64_t m_last) {
  const std::int64_t reach = model.d_total() - 1;
  const std::int64_t ind = model.index();
  return HomCalculator(model, m_first * ind - reach, m_last * ind + reach);
}

SerreOrbitPoint orbit_point(const HomCalculator& calc, std::int64_t m) {
  if (m < 1) {
    throw Error(ErrorCode::InvalidArgument, "Serre power must be positive");
  }
  const auto& model = calc.model();
  const std::int64_t reach = model.d_total() - 1;
  const std::int64_t base = m * model.index();

  std::optional<DegreeSpan> best;
  for (std::int64_t j = -reach; j <= reach; ++j) {
    const auto span = calc.extremes(base + j);
    if (!span) continue;
    if (!best) {
      best = span;
    } else {
      best->e_minus = std::min(best->e_minus, span->e_minus);
      best->e_plus = std::max(best->e_plus, span->e_plus);
    }
  }
  if (!best) {
    throw Error(ErrorCode::EmptyHom,
                "Hom(T, S^" + std::to_string(m) + " T) vanishes in every degree");
  }
  const std::int64_t shift = m * model.dim_x();
  const std::int64_t e_minus = best->e_minus - shift;
  const std::int64_t e_plus = best->e_plus - shift;
  return {m, e_minus, e_plus, make_rational(-e_minus, m), make_rational(-e_plus, m)};
}

SerreOrbitPoint orbit_point(const CompleteIntersectionModel& model, std::int64_t m) {
  return orbit_point(orbit_calculator(model, m, m), m);
}

std::vector<SerreOrbitPoint> orbit_series_serial(const HomCalculator& calc, std::int64_t m_first,
                                                 std::int64_t m_last) {
  std::vector<SerreOrbitPoint> series;
  for (std::int64_t m = m_first; m <= m_last; ++m) series.push_back(orbit_point(calc, m));
  return series;
}

std::vector<SerreOrbitPoint> orbit_series_parallel(const HomCalculator& calc,
                                                   std::int64_t m_first, std::int64_t m_last) {
  if (m_last < m_first) return {};
  const std::int64_t count = m_last - m_first + 1;
  std::vector<SerreOrbitPoint> series(static_cast<std::size_t>(count));
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t idx = 0; idx < count; ++idx) {
    try {
      series[static_cast<std::size_t>(idx)] = orbit_point(calc, m_first + idx);
    } catch (...) {
#pragma omp critical(hybrid_orbit_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return series;
}

std::int64_t minimal_horizon(const CompleteIntersectionModel& model) {
  const std::int64_t need = 2 * (model.n() + model.d_total() + 2);
  const std::int64_t ind = std::max<std::int64_t>(model.index(), 1);
  return (need + ind - 1) / ind;
}

SdimReport sdim_estimates(const CompleteIntersectionModel& model, std::int64_t horizon,
                          Execution exec) {
  if (horizon < minimal_horizon(model)) {
    throw Error(ErrorCode::HorizonTooSmall,
                "horizon " + std::to_string(horizon) + " is below the stable-range minimum " +
                    std::to_string(minimal_horizon(model)));
  }
  const std::int64_t m_first = horizon / 2 + 1;
  const std::int64_t m_last = horizon;
  const HomCalculator calc = orbit_calculator(model, m_first, m_last);

  SdimReport report{horizon,
                    exec == Execution::Serial ? orbit_series_serial(calc, m_first, m_last)
                                              : orbit_series_parallel(calc, m_first, m_last),
                    Rational(0), Rational(0), sdim_closed_form(model)};
  report.upper_estimate = report.series.front().upper_sample;
  report.lower_estimate = report.series.front().lower_sample;
  for (const auto& point : report.series) {
    if (point.upper_sample > report.upper_estimate) report.upper_estimate = point.upper_sample;
    if (point.lower_sample < report.lower_estimate) report.lower_estimate = point.lower_sample;
  }
  return report;
}

SdimClosedForm sdim_closed_form(const CompleteIntersectionModel& model) {
  Rational upper = model.dim_x() - make_rational(2 * model.index(), model.d_max());
  Rational lower = model.dim_x() - make_rational(2 * model.index(), model.d_min());
  return {upper, lower};
}

}  // namespace hybrid
