#pragma once

// Existence of a useful catalyst of any dimension, and an explicit
// construction when one exists. A catalyst can increase P = P(x -> y) iff
//
//   P < min{ x_n / y_n , 1 },
//
// and then the geometric vector c = (1, a, a^2, ..., a^(k-1)) works, where
//
//   h  = smallest index with x_h != P * y_h  (h < n is guaranteed),
//   a  in (alpha_min, 1) with alpha_min = max of P*y_n/x_n and the
//        h-dependent bound: x_h/(P*y_h) if P > x_h/y_h, else P*y_h/x_h,
//   k  = smallest integer with x_n > x_h * a^(k-1).
//
// Everything is exact: a is an exact rational and its powers are computed
// by repeated multiplication, so k can never be off by one. The finished
// catalyst is checked against the direct evaluation before being returned.

#include "entcat/oracle.hpp"
#include "entcat/probvec.hpp"
#include "entcat/vidal.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace entcat {

/// Every intermediate of the construction, for reproducibility. Both
/// h-branch bound values are kept even though only one applies;
/// bound_h_over is absent when y_h = 0 (its formula would divide by zero).
struct construction_trace {
  std::size_t h = 0;                // 1-based
  Rat bound_tail;                   // P * y_n / x_n
  std::optional<Rat> bound_h_over;  // x_h / (P * y_h), applies when P > x_h/y_h
  Rat bound_h_under;                // P * y_h / x_h, applies otherwise
  bool p_exceeds_h_ratio = false;   // which branch applies
  Rat alpha_min;
  Rat alpha;
  std::size_t k = 0;
  ProbVec catalyst = ProbVec::from_sorted_unchecked({Rat(1)});
  Rat p_before;
  Rat p_after;
};

using ConstructionTrace = construction_trace;

/// True iff some catalyst (of any dimension) increases P(x -> y). The
/// condition coincides with the admissibility test, since E_n(x)/E_n(y)
/// is exactly x_n/y_n.
inline bool exists_catalyst(const TransformPair& pair) {
  const Rat& p = pair.max_probability();
  if (p >= 1) return false;
  const Rat& xn = pair.x().component(pair.dimension());
  const Rat& yn = pair.y().component(pair.dimension());
  return yn == 0 || p * yn < xn;
}

namespace detail {

/// Smallest 1-based h with x_h != P * y_h. Under exists_catalyst some index
/// below n must differ, otherwise P would be 1.
inline std::size_t first_divergent_index(const TransformPair& pair) {
  const Rat& p = pair.max_probability();
  for (std::size_t i = 1; i <= pair.dimension(); ++i)
    if (pair.x().component(i) != p * pair.y().component(i)) return i;
  throw std::logic_error("no divergent index: x = P*y is impossible when P < 1");
}

inline construction_trace alpha_bound_details(const TransformPair& pair) {
  if (!exists_catalyst(pair))
    throw std::invalid_argument("no useful catalyst exists for this pair");
  construction_trace t;
  t.p_before = pair.max_probability();
  const Rat& p = t.p_before;
  const std::size_t n = pair.dimension();
  const Rat& xn = pair.x().component(n);
  const Rat& yn = pair.y().component(n);

  t.h = first_divergent_index(pair);
  if (t.h >= n)
    throw std::logic_error("divergent index must lie below n under exists_catalyst");
  const Rat& xh = pair.x().component(t.h);
  const Rat& yh = pair.y().component(t.h);

  t.bound_tail = p * yn / xn;  // xn > 0 under exists_catalyst
  t.p_exceeds_h_ratio = p * yh > xh;
  t.bound_h_under = p * yh / xh;
  if (yh > 0) t.bound_h_over = xh / (p * yh);

  const Rat& branch = t.p_exceeds_h_ratio ? *t.bound_h_over : t.bound_h_under;
  t.alpha_min = std::max(t.bound_tail, branch);
  if (t.alpha_min >= 1)
    throw std::logic_error("alpha lower bound reached 1; exists_catalyst should forbid this");
  return t;
}

}  // namespace detail

/// Greatest lower bound for the geometric ratio a. Requires exists_catalyst.
inline Rat alpha_bounds(const TransformPair& pair) {
  return detail::alpha_bound_details(pair).alpha_min;
}

/// Builds the geometric catalyst. theta in (0, 1) places a inside its open
/// interval: a = alpha_min + theta * (1 - alpha_min); small theta keeps the
/// dimension k small. alpha_override (tests, CLI) must lie strictly between
/// alpha_min and 1. The result is verified against the direct evaluation;
/// failure of that check would be a defect, not a property of the input.
inline construction_trace construct_catalyst(
    const TransformPair& pair, const Rat& theta = Rat(1, 1000),
    const std::optional<Rat>& alpha_override = std::nullopt) {
  if (theta <= 0 || theta >= 1)
    throw std::invalid_argument("theta must lie strictly between 0 and 1");

  construction_trace t = detail::alpha_bound_details(pair);
  if (alpha_override) {
    if (*alpha_override <= t.alpha_min || *alpha_override >= 1)
      throw std::invalid_argument("alpha must lie strictly between " +
                                  to_fraction_string(t.alpha_min) + " and 1");
    t.alpha = *alpha_override;
  } else {
    t.alpha = t.alpha_min + theta * (1 - t.alpha_min);
  }

  const Rat& xn = pair.x().component(pair.dimension());
  const Rat& xh = pair.x().component(t.h);

  // smallest k with x_n > x_h * alpha^(k-1); terminates since alpha < 1
  std::vector<Rat> powers{Rat(1)};
  while (xn <= xh * powers.back()) powers.push_back(powers.back() * t.alpha);
  t.k = powers.size();

  t.catalyst = ProbVec::from_components(std::move(powers), /*renormalize=*/true);
  t.p_after = catalyzed_prob(pair.x(), pair.y(), t.catalyst);
  if (t.p_after <= t.p_before)
    throw std::logic_error("constructed catalyst failed verification: P stayed at " +
                           to_fraction_string(t.p_before));
  return t;
}

}  // namespace entcat
