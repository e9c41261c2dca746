#include "hybrid/graded_count.hpp"

#include <sstream>

#include "hybrid/error.hpp"

namespace hybrid {

GradedCount::GradedCount(std::initializer_list<std::pair<const std::int64_t, long>> entries) {
  for (const auto& [degree, count] : entries) add(degree, Count(count));
}

void GradedCount::add(std::int64_t degree, const Count& count) {
  if (sgn(count) < 0) {
    throw Error(ErrorCode::InvalidArgument, "graded counts are nonnegative");
  }
  if (sgn(count) == 0) return;
  entries_[degree] += count;
}

Count GradedCount::at(std::int64_t degree) const {
  auto it = entries_.find(degree);
  return it == entries_.end() ? Count(0) : it->second;
}

std::optional<std::pair<std::int64_t, std::int64_t>> GradedCount::support_bounds() const {
  if (entries_.empty()) return std::nullopt;
  return std::pair{entries_.begin()->first, entries_.rbegin()->first};
}

Count GradedCount::total() const {
  Count sum = 0;
  for (const auto& [degree, count] : entries_) sum += count;
  return sum;
}

std::string GradedCount::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [degree, count] : entries_) {
    if (!first) out << ", ";
    first = false;
    out << degree << ':' << count.get_str();
  }
  out << '}';
  return out.str();
}

}  // namespace hybrid
