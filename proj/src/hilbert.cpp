#include "hybrid/hilbert.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hybrid/error.hpp"

namespace hybrid {
namespace {

void require_weights(std::span<const std::int64_t> degrees) {
  if (degrees.empty()) {
    throw Error(ErrorCode::EmptyDegrees, "weighted projective space needs a weight");
  }
  for (auto di : degrees) {
    if (di < 2) {
      throw Error(ErrorCode::DegreeBelowTwo, "weight " + std::to_string(di) + " is below 2");
    }
  }
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

}  // namespace

HilbertTable::HilbertTable(std::span<const std::int64_t> degrees, std::int64_t extent)
    : degrees_(degrees.begin(), degrees.end()),
      extent_(std::max<std::int64_t>(extent, 0)),
      d_total_(std::accumulate(degrees.begin(), degrees.end(), std::int64_t{0})) {
  require_weights(degrees_);
  if (degrees_.size() >= 2) build();
}

void HilbertTable::build() {
  using RowT = Row;
  auto add_shifted = [](const RowT& base, const RowT& extra) {
    // base + extra with every coin count of extra raised by one
    if (extra.counts.empty()) return base;
    if (base.counts.empty()) return RowT{extra.lo + 1, extra.counts};
    const std::int64_t lo = std::min(base.lo, extra.lo + 1);
    const std::int64_t hi =
        std::max(base.lo + static_cast<std::int64_t>(base.counts.size()),
                 extra.lo + 1 + static_cast<std::int64_t>(extra.counts.size()));
    RowT out{lo, std::vector<Count>(static_cast<std::size_t>(hi - lo))};
    for (std::size_t s = 0; s < base.counts.size(); ++s) {
      out.counts[static_cast<std::size_t>(base.lo - lo) + s] += base.counts[s];
    }
    for (std::size_t s = 0; s < extra.counts.size(); ++s) {
      out.counts[static_cast<std::size_t>(extra.lo + 1 - lo) + s] += extra.counts[s];
    }
    return out;
  };

  const std::size_t k = degrees_.size();
  rows_.assign(static_cast<std::size_t>(extent_) + 1, Row{});
  // ring[i][j % d_i] holds the partial row for degree j using coins 0..i;
  // the last coin reads straight from rows_.
  std::vector<std::vector<Row>> ring(k - 1);
  for (std::size_t i = 0; i + 1 < k; ++i) ring[i].resize(static_cast<std::size_t>(degrees_[i]));

  for (std::int64_t j = 0; j <= extent_; ++j) {
    Row layer = j == 0 ? Row{0, {Count(1)}} : Row{};
    for (std::size_t i = 0; i < k; ++i) {
      const std::int64_t c = degrees_[i];
      if (i + 1 < k) {
        Row& slot = ring[i][static_cast<std::size_t>(j % c)];
        if (j >= c) layer = add_shifted(layer, slot);
        slot = layer;
      } else if (j >= c) {
        layer = add_shifted(layer, rows_[static_cast<std::size_t>(j - c)]);
      }
    }
    rows_[static_cast<std::size_t>(j)] = std::move(layer);
  }
}

void HilbertTable::check_extent(std::int64_t j) const {
  if (j > extent_) {
    throw Error(ErrorCode::InvalidArgument, "degree " + std::to_string(j) +
                                                " lies beyond the table extent " +
                                                std::to_string(extent_));
  }
}

CoinRowView HilbertTable::h0_row(std::int64_t j) const {
  if (degrees_.size() == 1) {
    const std::int64_t d1 = degrees_.front();
    if (j % d1 != 0) return {};
    return {floor_div(j, d1), std::span<const Count>(&one_, 1)};
  }
  if (j < 0) return {};
  check_extent(j);
  const Row& row = rows_[static_cast<std::size_t>(j)];
  return {row.lo, row.counts};
}

CoinRowView HilbertTable::htop_row(std::int64_t j) const {
  if (degrees_.size() == 1) return {};
  const std::int64_t dual = -d_total_ - j;
  if (dual < 0) return {};
  check_extent(dual);
  const Row& row = rows_[static_cast<std::size_t>(dual)];
  return {row.lo + static_cast<std::int64_t>(degrees_.size()), row.counts};
}

GradedCount HilbertTable::h0(std::int64_t j) const {
  GradedCount out;
  const auto row = h0_row(j);
  for (std::size_t s = 0; s < row.counts.size(); ++s) {
    out.add(2 * (row.lo + static_cast<std::int64_t>(s)), row.counts[s]);
  }
  return out;
}

GradedCount HilbertTable::htop(std::int64_t j) const {
  GradedCount out;
  const auto row = htop_row(j);
  for (std::size_t s = 0; s < row.counts.size(); ++s) {
    out.add(-2 * (row.lo + static_cast<std::int64_t>(s)), row.counts[s]);
  }
  return out;
}

GradedCount h0_graded(std::span<const std::int64_t> degrees, std::int64_t j) {
  return HilbertTable(degrees, std::max<std::int64_t>(j, 0)).h0(j);
}

GradedCount htop_graded(std::span<const std::int64_t> degrees, std::int64_t j) {
  require_weights(degrees);
  const std::int64_t d = std::accumulate(degrees.begin(), degrees.end(), std::int64_t{0});
  return HilbertTable(degrees, std::max<std::int64_t>(-d - j, 0)).htop(j);
}

KnapsackExtremes::KnapsackExtremes(std::span<const std::int64_t> degrees, std::int64_t extent)
    : degrees_(degrees.begin(), degrees.end()), extent_(std::max<std::int64_t>(extent, 0)) {
  require_weights(degrees_);
  if (degrees_.size() == 1) return;
  const auto size = static_cast<std::size_t>(extent_) + 1;
  fewest_.assign(size, std::nullopt);
  most_.assign(size, std::nullopt);
  fewest_[0] = 0;
  most_[0] = 0;
  for (std::size_t j = 1; j < size; ++j) {
    for (auto c : degrees_) {
      const auto coin = static_cast<std::size_t>(c);
      if (coin > j || !fewest_[j - coin]) continue;
      const std::int64_t lo = *fewest_[j - coin] + 1;
      const std::int64_t hi = *most_[j - coin] + 1;
      if (!fewest_[j] || lo < *fewest_[j]) fewest_[j] = lo;
      if (!most_[j] || hi > *most_[j]) most_[j] = hi;
    }
  }
}

std::optional<RChargeRange> KnapsackExtremes::rcharge(std::int64_t j) const {
  if (degrees_.size() == 1) {
    const std::int64_t d1 = degrees_.front();
    if (j % d1 != 0) return std::nullopt;
    const std::int64_t r = 2 * (j / d1);
    return RChargeRange{r, r};
  }
  if (j < 0) return std::nullopt;
  if (j > extent_) {
    throw Error(ErrorCode::InvalidArgument, "degree beyond knapsack extent");
  }
  const auto idx = static_cast<std::size_t>(j);
  if (!fewest_[idx]) return std::nullopt;
  return RChargeRange{2 * *fewest_[idx], 2 * *most_[idx]};
}

std::optional<RChargeRange> extremal_rcharge(std::span<const std::int64_t> degrees,
                                             std::int64_t j) {
  return KnapsackExtremes(degrees, std::max<std::int64_t>(j, 0)).rcharge(j);
}

}  // namespace hybrid
