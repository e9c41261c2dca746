#pragma once

// Bigraded dimension counts for line bundles O(j) on the weighted projective
// stack P(d_1, ..., d_k). A monomial p_1^{a_1}...p_k^{a_k} has weighted degree
// sum a_i d_i and R-charge 2 * sum a_i. Counts are indexed internally by the
// number of "coins" s = sum a_i; the R-charge is always 2s.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hybrid/graded_count.hpp"

namespace hybrid {

/// Monomial counts of one weighted degree, by coin count s in [lo, lo + size).
/// Interior entries may be zero.
struct CoinRowView {
  std::int64_t lo = 0;
  std::span<const Count> counts;

  bool empty() const noexcept { return counts.empty(); }
  std::int64_t hi() const noexcept { return lo + static_cast<std::int64_t>(counts.size()) - 1; }
};

/// H^0 and H^{k-1} counts of O(j) on P(degrees), tabulated once for all
/// weighted degrees 0..extent by a coin-by-coin recurrence.
///
/// Immutable after construction, so one table can be shared across threads.
/// For k = 1 no table is built: sections are the Laurent monomials p^a,
/// a in Z, because p is invertible away from the zero section.
class HilbertTable {
 public:
  HilbertTable(std::span<const std::int64_t> degrees, std::int64_t extent);

  std::span<const std::int64_t> degrees() const noexcept { return degrees_; }
  std::int64_t extent() const noexcept { return extent_; }

  /// Smallest j accepted by htop_row / htop.
  std::int64_t htop_floor() const noexcept { return -d_total_ - extent_; }

  /// Raw coin row of H^0(O(j)); throws InvalidArgument past the extent.
  CoinRowView h0_row(std::int64_t j) const;

  /// Raw row of H^{k-1}(O(j)), indexed by s = sum (a_i + 1) where the class
  /// is p_1^{-(a_1+1)}...p_k^{-(a_k+1)} with R-charge -2s. Empty for k = 1.
  CoinRowView htop_row(std::int64_t j) const;

  GradedCount h0(std::int64_t j) const;
  GradedCount htop(std::int64_t j) const;

 private:
  struct Row {
    std::int64_t lo = 0;
    std::vector<Count> counts;
  };

  void build();
  void check_extent(std::int64_t j) const;

  std::vector<std::int64_t> degrees_;
  std::int64_t extent_;
  std::int64_t d_total_;
  std::vector<Row> rows_;  // index j in [0, extent], only for k >= 2
  Count one_ = 1;
};

GradedCount h0_graded(std::span<const std::int64_t> degrees, std::int64_t j);
GradedCount htop_graded(std::span<const std::int64_t> degrees, std::int64_t j);

struct RChargeRange {
  std::int64_t min_r;
  std::int64_t max_r;

  friend bool operator==(const RChargeRange&, const RChargeRange&) = default;
};

/// Fewest/most coins per weighted degree 0..extent (unbounded knapsack).
class KnapsackExtremes {
 public:
  KnapsackExtremes(std::span<const std::int64_t> degrees, std::int64_t extent);

  /// nullopt when j is not a nonnegative combination of the degrees.
  std::optional<RChargeRange> rcharge(std::int64_t j) const;

 private:
  std::vector<std::int64_t> degrees_;
  std::int64_t extent_;
  std::vector<std::optional<std::int64_t>> fewest_;
  std::vector<std::optional<std::int64_t>> most_;
};

/// Minimum and maximum R-charge of a degree-j monomial. For k = 1 any j
/// divisible by d_1 qualifies (Laurent convention).
std::optional<RChargeRange> extremal_rcharge(std::span<const std::int64_t> degrees,
                                             std::int64_t j);

}  // namespace hybrid
