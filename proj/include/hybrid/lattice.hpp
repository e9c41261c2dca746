#pragma once

// Autoequivalences of MF(Y_-, W) that are tensor products with equivariant
// line bundles O(a)[b]. The bracket is R-charge, which is the shift in the
// category, so these form the lattice Z^2 under tensor product.

#include <cstdint>
#include <optional>

#include "hybrid/graded_count.hpp"
#include "hybrid/model.hpp"

namespace hybrid {

struct LatticeFunctor {
  std::int64_t twist = 0;
  std::int64_t shift = 0;

  friend LatticeFunctor operator+(LatticeFunctor a, LatticeFunctor b) {
    return {a.twist + b.twist, a.shift + b.shift};
  }
  friend LatticeFunctor operator-(LatticeFunctor a) { return {-a.twist, -a.shift}; }
  friend LatticeFunctor operator-(LatticeFunctor a, LatticeFunctor b) { return a + (-b); }
  /// The power F^p.
  friend LatticeFunctor operator*(std::int64_t p, LatticeFunctor a) {
    return {p * a.twist, p * a.shift};
  }
  friend bool operator==(const LatticeFunctor&, const LatticeFunctor&) = default;
};

/// Pure shift [s].
constexpr LatticeFunctor shift_by(std::int64_t s) { return {0, s}; }

enum class Side { YMinus, YPlus };

/// O(n+1-d)[n-k] on Y_-; on Y_+ the twist changes sign.
LatticeFunctor serre_functor(const CompleteIntersectionModel& model, Side side = Side::YMinus);

/// O(n+1-d)[-2k].
LatticeFunctor canonical_bundle(const CompleteIntersectionModel& model);

struct TwistCotwist {
  LatticeFunctor twist;    // on MF(Y_-, W)
  LatticeFunctor cotwist;  // on MF(Z_-, W)
  std::int64_t sliced_degree;
};

/// Spherical twist O(d_k)[2] and cotwist O(d_k) for Z_- = {p_k = 0} in Y_-.
/// `last` picks which (sorted) degree plays d_k; default is the largest.
/// Throws HypersurfaceCase for k = 1.
TwistCotwist twist_cotwist(const CompleteIntersectionModel& model,
                           std::optional<std::size_t> last = std::nullopt);

struct PowerIdentityReport {
  std::int64_t sliced_degree;  // d_k
  std::int64_t index_x;
  std::int64_t index_m;        // ind M = ind X + d_k
  std::int64_t dim_m;          // dim M = dim X + 1
  std::int64_t c;              // gcd(d_k, ind M)
  bool gcd_agrees;             // gcd(d_k, ind M) == gcd(d_k, ind X)
  std::int64_t serre_power;    // d_k / c
  std::int64_t twist_power;    // ind X / c
  std::int64_t cotwist_power;  // ind M / c
  std::int64_t y_extra_shift;  // (d_k dim X - 2 ind X) / c
  std::int64_t z_extra_shift;  // d_k dim M / c
  bool y_identity_holds;       // S_Y^{d_k/c} = T^{ind X/c}[y_extra_shift]
  bool z_identity_holds;       // S_Z^{d_k/c} = C^{ind M/c}[z_extra_shift]

  bool passed() const noexcept { return gcd_agrees && y_identity_holds && z_identity_holds; }
};

PowerIdentityReport power_identity_report(const CompleteIntersectionModel& model,
                                          std::optional<std::size_t> last = std::nullopt);

/// S^p = [q] for a hypersurface, using O(d)[2] = O on Y_-.
///
/// p is the lattice period: the least p with p * S reducible to a pure shift
/// modulo (d, 2). It is an upper bound for the categorical period.
struct FractionalCY {
  std::int64_t p;
  std::int64_t q;

  Rational dimension() const { return make_rational(q, p); }
  friend bool operator==(const FractionalCY&, const FractionalCY&) = default;
};

/// Throws NotHypersurface for k >= 2.
FractionalCY fractional_cy(const CompleteIntersectionModel& model);

}  // namespace hybrid
