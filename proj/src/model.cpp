#include "hybrid/model.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hybrid/error.hpp"

namespace hybrid {

CompleteIntersectionModel::CompleteIntersectionModel(std::int64_t n,
                                                     std::vector<std::int64_t> degrees)
    : n_(n),
      degrees_(std::move(degrees)),
      d_total_(std::accumulate(degrees_.begin(), degrees_.end(), std::int64_t{0})) {}

CompleteIntersectionModel CompleteIntersectionModel::validate(
    std::int64_t n, std::span<const std::int64_t> degrees) {
  if (degrees.empty()) {
    throw Error(ErrorCode::EmptyDegrees, "at least one degree is required");
  }
  if (n < 2) {
    throw Error(ErrorCode::AmbientTooSmall,
                "ambient dimension n = " + std::to_string(n) + " is below 2");
  }
  std::vector<std::int64_t> sorted(degrees.begin(), degrees.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 2) {
    throw Error(ErrorCode::DegreeBelowTwo,
                "degree " + std::to_string(sorted.front()) +
                    " is below 2; eliminate linear equations first");
  }
  std::int64_t d = 0;
  for (auto di : sorted) {
    d += di;
    if (d > n) {
      throw Error(ErrorCode::NotFano, "total degree exceeds n = " + std::to_string(n) +
                                          "; X is not Fano");
    }
  }
  return CompleteIntersectionModel(n, std::move(sorted));
}

std::pair<std::int64_t, std::vector<std::int64_t>> reduce_linear(
    std::int64_t n, std::span<const std::int64_t> degrees) {
  std::vector<std::int64_t> kept;
  std::int64_t removed = 0;
  for (auto di : degrees) {
    if (di < 1) {
      throw Error(ErrorCode::InvalidArgument,
                  "degree " + std::to_string(di) + " is not positive");
    }
    if (di == 1) {
      ++removed;
    } else {
      kept.push_back(di);
    }
  }
  if (kept.empty() && removed > 0) {
    throw Error(ErrorCode::AllLinear,
                "every equation is linear; X is a linear subspace");
  }
  return {n - removed, std::move(kept)};
}

}  // namespace hybrid
