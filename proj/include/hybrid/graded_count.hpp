#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace hybrid {

using Count = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms with a positive denominator.
inline Rational make_rational(std::int64_t num, std::int64_t den) {
  Rational r(Count(static_cast<long>(num)), Count(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

/// Finitely supported map degree -> strictly positive count. Absent keys
/// mean zero; adding zero never creates an entry.
class GradedCount {
 public:
  using Map = std::map<std::int64_t, Count>;

  GradedCount() = default;
  GradedCount(std::initializer_list<std::pair<const std::int64_t, long>> entries);

  void add(std::int64_t degree, const Count& count);

  /// Zero when the degree is absent.
  Count at(std::int64_t degree) const;

  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }
  const Map& entries() const& noexcept { return entries_; }
  Map entries() && { return std::move(entries_); }

  /// (min, max) of the support; nullopt when empty.
  std::optional<std::pair<std::int64_t, std::int64_t>> support_bounds() const;

  /// Sum of all counts.
  Count total() const;

  /// "{t:c, ...}" for diagnostics.
  std::string to_string() const;

  friend bool operator==(const GradedCount& a, const GradedCount& b) {
    return a.entries_ == b.entries_;
  }

 private:
  Map entries_;
};

/// Graded morphism dimensions Hom^t between two objects.
using GradedHomTable = GradedCount;

}  // namespace hybrid
