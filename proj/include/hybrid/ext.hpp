#pragma once

// Graded morphisms Hom^t(O(a), O(b)) between twists of the zero section
// P(d) inside the hybrid model (Y_-, W).
//
// The local RHom is the Koszul sum  (+)_{i=0}^{n+1} O(m-i)^{C(n+1,i)}[-i],
// m = b - a, with zero differential because every d_i >= 2. Taking
// cohomology on P(d) only H^0 and H^{k-1} survive, so a class of R-charge r
// from H^q of the i-th piece lands in total degree t = r + i + q.

#include <cstdint>
#include <optional>
#include <vector>

#include "hybrid/graded_count.hpp"
#include "hybrid/hilbert.hpp"
#include "hybrid/model.hpp"

namespace hybrid {

struct KoszulPiece {
  std::int64_t index;   // i in [0, n+1]
  std::int64_t twist;   // m - i
  Count multiplicity;   // C(n+1, i)
  std::int64_t shift;   // i
};

std::vector<KoszulPiece> koszul_pieces(const CompleteIntersectionModel& model, std::int64_t m);

struct DegreeSpan {
  std::int64_t e_minus;
  std::int64_t e_plus;

  friend bool operator==(const DegreeSpan&, const DegreeSpan&) = default;
};

/// Hom tables for every twist difference m = b - a in [m_lo, m_hi], sharing
/// one HilbertTable. Immutable once built; safe to query from many threads.
class HomCalculator {
 public:
  HomCalculator(const CompleteIntersectionModel& model, std::int64_t m_lo, std::int64_t m_hi);

  const CompleteIntersectionModel& model() const noexcept { return model_; }
  std::int64_t m_lo() const noexcept { return m_lo_; }
  std::int64_t m_hi() const noexcept { return m_hi_; }

  GradedHomTable hom_table(std::int64_t m) const;

  /// Same as e_extremes(hom_table(m)) without assembling counts.
  std::optional<DegreeSpan> extremes(std::int64_t m) const;

 private:
  void check_range(std::int64_t m) const;

  CompleteIntersectionModel model_;
  std::int64_t m_lo_;
  std::int64_t m_hi_;
  std::vector<Count> binomials_;
  HilbertTable table_;
};

/// Hom^*(O(a), O(b)); depends only on b - a.
GradedHomTable hom_table(const CompleteIntersectionModel& model, std::int64_t a, std::int64_t b);

/// (min, max) degree of a nonzero graded piece; nullopt for the zero space.
std::optional<DegreeSpan> e_extremes(const GradedHomTable& table);

}  // namespace hybrid
