#include "hybrid/lattice.hpp"

#include <numeric>
#include <string>

#include "hybrid/error.hpp"

namespace hybrid {

LatticeFunctor serre_functor(const CompleteIntersectionModel& model, Side side) {
  const std::int64_t shift = model.n() - model.codim();
  return side == Side::YMinus ? LatticeFunctor{model.index(), shift}
                              : LatticeFunctor{-model.index(), shift};
}

LatticeFunctor canonical_bundle(const CompleteIntersectionModel& model) {
  return {model.index(), -2 * model.codim()};
}

TwistCotwist twist_cotwist(const CompleteIntersectionModel& model, std::optional<std::size_t> last) {
  const auto& degrees = model.degrees();
  if (degrees.size() < 2) {
    throw Error(ErrorCode::HypersurfaceCase, "twist and cotwist need k >= 2");
  }
  const std::size_t pick = last.value_or(degrees.size() - 1);
  if (pick >= degrees.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "slice position " + std::to_string(pick) + " out of range");
  }
  const std::int64_t dk = degrees[pick];
  return {{dk, 2}, {dk, 0}, dk};
}

PowerIdentityReport power_identity_report(const CompleteIntersectionModel& model,
                                          std::optional<std::size_t> last) {
  const auto tc = twist_cotwist(model, last);
  PowerIdentityReport r{};
  r.sliced_degree = tc.sliced_degree;
  r.index_x = model.index();
  r.index_m = r.index_x + r.sliced_degree;
  r.dim_m = model.dim_x() + 1;
  r.c = std::gcd(r.sliced_degree, r.index_m);
  r.gcd_agrees = r.c == std::gcd(r.sliced_degree, r.index_x);

  const std::int64_t c = r.c;
  const std::int64_t y_num = r.sliced_degree * model.dim_x() - 2 * r.index_x;
  const std::int64_t z_num = r.sliced_degree * r.dim_m;
  const bool divisible = r.sliced_degree % c == 0 && r.index_x % c == 0 &&
                         r.index_m % c == 0 && y_num % c == 0 && z_num % c == 0;
  r.serre_power = r.sliced_degree / c;
  r.twist_power = r.index_x / c;
  r.cotwist_power = r.index_m / c;
  r.y_extra_shift = y_num / c;
  r.z_extra_shift = z_num / c;

  const LatticeFunctor serre_y = serre_functor(model, Side::YMinus);
  const LatticeFunctor serre_z{r.index_m, r.dim_m};
  r.y_identity_holds = divisible && r.serre_power * serre_y ==
                                        r.twist_power * tc.twist + shift_by(r.y_extra_shift);
  r.z_identity_holds = divisible && r.serre_power * serre_z ==
                                        r.cotwist_power * tc.cotwist + shift_by(r.z_extra_shift);
  return r;
}

FractionalCY fractional_cy(const CompleteIntersectionModel& model) {
  if (model.codim() != 1) {
    throw Error(ErrorCode::NotHypersurface,
                "fractional Calabi-Yau structure is only produced for hypersurfaces");
  }
  const std::int64_t d = model.d_total();
  const LatticeFunctor serre = serre_functor(model);
  const LatticeFunctor relation{d, 2};  // O(d)[2] = O
  // Smallest p with d | p * ind; then cancel the twist against the relation.
  for (std::int64_t p = 1;; ++p) {
    const LatticeFunctor power = p * serre;
    if (power.twist % d == 0) {
      const LatticeFunctor reduced = power - (power.twist / d) * relation;
      return {p, reduced.shift};
    }
  }
}

}  // namespace hybrid
