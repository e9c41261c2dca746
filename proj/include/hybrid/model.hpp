#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace hybrid {

/// A Fano complete intersection X of multidegree (d_1, ..., d_k) in P^n.
///
/// Only obtainable through validate(), so every instance satisfies
/// k >= 1, n >= 2, each d_i >= 2 and d_1 + ... + d_k <= n. Degrees are
/// stored in ascending order.
class CompleteIntersectionModel {
 public:
  static CompleteIntersectionModel validate(std::int64_t n,
                                            std::span<const std::int64_t> degrees);

  std::int64_t n() const noexcept { return n_; }
  const std::vector<std::int64_t>& degrees() const noexcept { return degrees_; }

  std::int64_t d_total() const noexcept { return d_total_; }
  std::int64_t codim() const noexcept { return static_cast<std::int64_t>(degrees_.size()); }
  std::int64_t dim_x() const noexcept { return n_ - codim(); }
  /// ind X = n + 1 - d.
  std::int64_t index() const noexcept { return n_ + 1 - d_total_; }
  std::int64_t dim_y_minus() const noexcept { return n_ + codim(); }
  std::int64_t d_max() const noexcept { return degrees_.back(); }
  std::int64_t d_min() const noexcept { return degrees_.front(); }

  friend bool operator==(const CompleteIntersectionModel&,
                         const CompleteIntersectionModel&) = default;

 private:
  CompleteIntersectionModel(std::int64_t n, std::vector<std::int64_t> degrees);

  std::int64_t n_;
  std::vector<std::int64_t> degrees_;
  std::int64_t d_total_;
};

/// Eliminates linear equations: drops every d_i == 1 and lowers n by the
/// number dropped. Throws AllLinear if nothing of degree >= 2 remains and
/// InvalidArgument if some d_i < 1.
std::pair<std::int64_t, std::vector<std::int64_t>> reduce_linear(
    std::int64_t n, std::span<const std::int64_t> degrees);

}  // namespace hybrid
