#include "hybrid/ext.hpp"

#include <algorithm>
#include <string>

#include "hybrid/error.hpp"

namespace hybrid {
namespace {

// Row n+1 of Pascal's triangle.
std::vector<Count> pascal_row(std::int64_t top) {
  std::vector<Count> row{Count(1)};
  for (std::int64_t r = 1; r <= top; ++r) {
    std::vector<Count> next(row.size() + 1);
    next.front() = 1;
    next.back() = 1;
    for (std::size_t i = 1; i < row.size(); ++i) next[i] = row[i - 1] + row[i];
    row = std::move(next);
  }
  return row;
}

std::int64_t table_extent(const CompleteIntersectionModel& model, std::int64_t m_lo,
                          std::int64_t m_hi) {
  // H^0 of O(m - i) needs degrees up to m_hi; H^{k-1} of O(m - i) reads the
  // H^0 row at -d - (m - i), largest at m = m_lo, i = n + 1.
  const std::int64_t top_dual = model.n() + 1 - model.d_total() - m_lo;
  return std::max({std::int64_t{0}, m_hi, top_dual});
}

}  // namespace

std::vector<KoszulPiece> koszul_pieces(const CompleteIntersectionModel& model, std::int64_t m) {
  const auto binomials = pascal_row(model.n() + 1);
  std::vector<KoszulPiece> pieces;
  pieces.reserve(binomials.size());
  for (std::int64_t i = 0; i <= model.n() + 1; ++i) {
    pieces.push_back({i, m - i, binomials[static_cast<std::size_t>(i)], i});
  }
  return pieces;
}

HomCalculator::HomCalculator(const CompleteIntersectionModel& model, std::int64_t m_lo,
                             std::int64_t m_hi)
    : model_(model),
      m_lo_(m_lo),
      m_hi_(m_hi),
      binomials_(pascal_row(model.n() + 1)),
      table_(model.degrees(), table_extent(model, m_lo, m_hi)) {
  if (m_lo > m_hi) {
    throw Error(ErrorCode::InvalidArgument, "empty twist range");
  }
}

void HomCalculator::check_range(std::int64_t m) const {
  if (m < m_lo_ || m > m_hi_) {
    throw Error(ErrorCode::InvalidArgument,
                "twist difference " + std::to_string(m) + " outside [" + std::to_string(m_lo_) +
                    ", " + std::to_string(m_hi_) + "]");
  }
}

GradedHomTable HomCalculator::hom_table(std::int64_t m) const {
  check_range(m);
  const std::int64_t top_q = model_.codim() - 1;

  // Accumulate densely over the reachable total degrees, then sparsify.
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  auto widen = [&](std::int64_t t_lo, std::int64_t t_hi) {
    if (hi < lo) {
      lo = t_lo;
      hi = t_hi;
    } else {
      lo = std::min(lo, t_lo);
      hi = std::max(hi, t_hi);
    }
  };
  for (std::int64_t i = 0; i <= model_.n() + 1; ++i) {
    if (auto row = table_.h0_row(m - i); !row.empty()) widen(2 * row.lo + i, 2 * row.hi() + i);
    if (auto row = table_.htop_row(m - i); !row.empty()) {
      widen(-2 * row.hi() + i + top_q, -2 * row.lo + i + top_q);
    }
  }
  if (hi < lo) return {};

  std::vector<Count> dense(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t i = 0; i <= model_.n() + 1; ++i) {
    const Count& mult = binomials_[static_cast<std::size_t>(i)];
    const auto h0 = table_.h0_row(m - i);
    for (std::size_t s = 0; s < h0.counts.size(); ++s) {
      if (sgn(h0.counts[s]) == 0) continue;
      const std::int64_t t = 2 * (h0.lo + static_cast<std::int64_t>(s)) + i;
      dense[static_cast<std::size_t>(t - lo)] += mult * h0.counts[s];
    }
    const auto top = table_.htop_row(m - i);
    for (std::size_t s = 0; s < top.counts.size(); ++s) {
      if (sgn(top.counts[s]) == 0) continue;
      const std::int64_t t = -2 * (top.lo + static_cast<std::int64_t>(s)) + i + top_q;
      dense[static_cast<std::size_t>(t - lo)] += mult * top.counts[s];
    }
  }

  GradedHomTable out;
  for (std::size_t idx = 0; idx < dense.size(); ++idx) {
    out.add(lo + static_cast<std::int64_t>(idx), dense[idx]);
  }
  return out;
}

std::optional<DegreeSpan> HomCalculator::extremes(std::int64_t m) const {
  check_range(m);
  const std::int64_t top_q = model_.codim() - 1;
  std::optional<DegreeSpan> out;
  auto widen = [&](std::int64_t t_lo, std::int64_t t_hi) {
    if (!out) {
      out = DegreeSpan{t_lo, t_hi};
    } else {
      out->e_minus = std::min(out->e_minus, t_lo);
      out->e_plus = std::max(out->e_plus, t_hi);
    }
  };
  // Row ends are always nonzero, so the extremes of each row are attained.
  for (std::int64_t i = 0; i <= model_.n() + 1; ++i) {
    if (auto row = table_.h0_row(m - i); !row.empty()) widen(2 * row.lo + i, 2 * row.hi() + i);
    if (auto row = table_.htop_row(m - i); !row.empty()) {
      widen(-2 * row.hi() + i + top_q, -2 * row.lo + i + top_q);
    }
  }
  return out;
}

GradedHomTable hom_table(const CompleteIntersectionModel& model, std::int64_t a, std::int64_t b) {
  const std::int64_t m = b - a;
  return HomCalculator(model, m, m).hom_table(m);
}

std::optional<DegreeSpan> e_extremes(const GradedHomTable& table) {
  const auto bounds = table.support_bounds();
  if (!bounds) return std::nullopt;
  return DegreeSpan{bounds->first, bounds->second};
}

}  // namespace hybrid
