#include "hybrid/oracle.hpp"

#include <cstdlib>

#include "hybrid/error.hpp"

namespace hybrid::oracle {
namespace {

// Fills exps[pos..] with values of magnitude >= floor so that
// sum exps[i] * degrees[i] == remaining, largest magnitude first.
void search(std::span<const std::int64_t> degrees, std::size_t pos, std::int64_t remaining,
            std::int64_t floor, std::int64_t sign, ExponentVector& exps,
            std::vector<ExponentVector>& out) {
  if (pos + 1 == degrees.size()) {
    if (remaining % degrees[pos] == 0 && remaining / degrees[pos] >= floor) {
      exps[pos] = sign * (remaining / degrees[pos]);
      out.push_back(exps);
    }
    return;
  }
  for (std::int64_t mag = remaining / degrees[pos]; mag >= floor; --mag) {
    exps[pos] = sign * mag;
    search(degrees, pos + 1, remaining - mag * degrees[pos], floor, sign, exps, out);
  }
}

Count factorial(std::int64_t x) {
  Count f = 1;
  for (std::int64_t i = 2; i <= x; ++i) f *= static_cast<long>(i);
  return f;
}

}  // namespace

std::vector<ExponentVector> enumerate_monomials(std::span<const std::int64_t> degrees,
                                                std::int64_t j, Regime regime) {
  std::vector<ExponentVector> out;
  if (degrees.empty()) return out;
  if (regime == Regime::HTop && degrees.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, "top cohomology enumeration needs k >= 2");
  }
  if (regime == Regime::H0 && degrees.size() == 1) {
    if (j % degrees[0] == 0) out.push_back({j / degrees[0]});
    return out;
  }
  ExponentVector exps(degrees.size(), 0);
  if (regime == Regime::H0) {
    if (j >= 0) search(degrees, 0, j, 0, 1, exps, out);
  } else {
    // magnitudes b_i >= 1 with sum b_i d_i = -j; ascending b_1 gives
    // descending lexicographic order of e = -b
    std::vector<ExponentVector> rev;
    if (-j > 0) search(degrees, 0, -j, 1, -1, exps, rev);
    out.assign(rev.rbegin(), rev.rend());
  }
  return out;
}

GradedHomTable brute_hom_table(const CompleteIntersectionModel& model, std::int64_t a,
                               std::int64_t b) {
  const std::int64_t m = b - a;
  if (std::llabs(m) > 60 || model.n() > 10) {
    throw Error(ErrorCode::GuardExceeded, "oracle guard |b - a| <= 60, n <= 10 exceeded");
  }
  const auto& degrees = model.degrees();
  const std::int64_t k = model.codim();
  const std::int64_t top = model.n() + 1;

  GradedHomTable table;
  for (std::int64_t i = 0; i <= top; ++i) {
    const Count mult = factorial(top) / (factorial(i) * factorial(top - i));
    for (const auto& e : enumerate_monomials(degrees, m - i, Regime::H0)) {
      std::int64_t rcharge = 0;
      for (auto x : e) rcharge += 2 * x;
      table.add(rcharge + i, mult);
    }
    if (k >= 2) {
      for (const auto& e : enumerate_monomials(degrees, m - i, Regime::HTop)) {
        std::int64_t rcharge = 0;
        for (auto x : e) rcharge += 2 * x;
        table.add(rcharge + i + (k - 1), mult);
      }
    }
  }
  return table;
}

}  // namespace hybrid::oracle
