#pragma once

// Upper and lower Serre dimensions of MF(Y_-, W).
//
// The generator is T = O(0) + ... + O(d-1) and S = O(ind X)[dim X], so
// Hom(T, S^m T) splits into Hom(O, O(j + m ind X))[m dim X] for
// j in [1-d, d-1]. Orbit points are independent of each other; the series
// kernel comes in a serial reference form and an OpenMP form that must
// agree exactly.

#include <cstdint>
#include <vector>

#include "hybrid/ext.hpp"
#include "hybrid/graded_count.hpp"
#include "hybrid/model.hpp"

namespace hybrid {

struct SerreOrbitPoint {
  std::int64_t m;
  std::int64_t e_minus;  // e_-(T, S^m T)
  std::int64_t e_plus;   // e_+(T, S^m T)
  Rational upper_sample;  // -e_minus / m
  Rational lower_sample;  // -e_plus / m

  friend bool operator==(const SerreOrbitPoint&, const SerreOrbitPoint&) = default;
};

struct SdimClosedForm {
  Rational upper;  // dim X - 2 ind X / d_max
  Rational lower;  // dim X - 2 ind X / d_min
};

/// Finite-horizon report. The estimates are extrema over the window
/// (M/2, M] and are not a certificate of the limit; the closed forms are
/// carried alongside for comparison.
struct SdimReport {
  std::int64_t horizon;
  std::vector<SerreOrbitPoint> series;  // ordered by m
  Rational upper_estimate;
  Rational lower_estimate;
  SdimClosedForm closed;
};

enum class Execution { Serial, Parallel };

/// Twists 0, ..., d-1 of the split generator.
std::vector<std::int64_t> generator_twists(const CompleteIntersectionModel& model);

/// A calculator covering every twist difference needed by orbit points
/// m_first..m_last.
HomCalculator orbit_calculator(const CompleteIntersectionModel& model, std::int64_t m_first,
                               std::int64_t m_last);

/// Throws EmptyHom if no twist in the window has a nonzero Hom space.
SerreOrbitPoint orbit_point(const HomCalculator& calc, std::int64_t m);
SerreOrbitPoint orbit_point(const CompleteIntersectionModel& model, std::int64_t m);

/// Reference kernel: one orbit point after another.
std::vector<SerreOrbitPoint> orbit_series_serial(const HomCalculator& calc, std::int64_t m_first,
                                                 std::int64_t m_last);
/// OpenMP kernel; output identical to the serial one.
std::vector<SerreOrbitPoint> orbit_series_parallel(const HomCalculator& calc,
                                                   std::int64_t m_first, std::int64_t m_last);

/// Smallest horizon M accepted by sdim_estimates: M * max(ind, 1) >= 2(n + d + 2).
std::int64_t minimal_horizon(const CompleteIntersectionModel& model);

SdimReport sdim_estimates(const CompleteIntersectionModel& model, std::int64_t horizon,
                          Execution exec = Execution::Parallel);

SdimClosedForm sdim_closed_form(const CompleteIntersectionModel& model);

}  // namespace hybrid
