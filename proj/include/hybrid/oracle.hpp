#pragma once

// Brute-force reference paths for the tests: monomials are enumerated by
// nested loops and binomials come from factorials. Nothing here calls into
// hilbert or ext.

#include <cstdint>
#include <span>
#include <vector>

#include "hybrid/graded_count.hpp"
#include "hybrid/model.hpp"

namespace hybrid::oracle {

enum class Regime { H0, HTop };

using ExponentVector = std::vector<std::int64_t>;

/// All exponent vectors e with sum e_i d_i == j: nonnegative for H0 (any
/// sign when k = 1), all <= -1 for HTop (requires k >= 2). Returned in
/// descending lexicographic order.
std::vector<ExponentVector> enumerate_monomials(std::span<const std::int64_t> degrees,
                                                std::int64_t j, Regime regime);

/// Hom^*(O(a), O(b)) assembled directly from enumerated monomials.
/// Throws GuardExceeded when |b - a| > 60 or n > 10.
GradedHomTable brute_hom_table(const CompleteIntersectionModel& model, std::int64_t a,
                               std::int64_t b);

}  // namespace hybrid::oracle
