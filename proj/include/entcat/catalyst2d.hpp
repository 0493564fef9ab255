#pragma once

// The exact set S of useful 2-dimensional catalyst ratios t = c2/c1.
//
// For every index pair (r1, r2) drawn from L and the sentinel n+1, the
// ratios t for which that pair blocks any improvement form a closed band
// [lo, hi] built from component ratios of x and y:
//
//   lo = max{ x_r1 / x_(r2-1),  y_r1 / y_(r2-1) }   (0 when r1 = n+1)
//   hi = min{ x_(r1-1) / x_r2,  y_(r1-1) / y_r2 }   (may be +infinity)
//
// A term whose denominator vanishes together with its numerator is dropped;
// a positive numerator over a zero denominator counts as +infinity. A 2-d
// catalyst is useful exactly when its ratio escapes every band, i.e. lies in
//
//   S = intersection over pairs of (0, lo) u (hi, 1).
//
// Membership is decided in multiplied-out form (never dividing components),
// so zero components cannot produce a division by zero; interval endpoints
// are materialized only for the reported region.

#include "entcat/probvec.hpp"
#include "entcat/vidal.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace entcat {

/// One blocking band of catalyst ratios, tagged with the index pair that
/// produced it. r1 may equal n+1; hi of nullopt means unbounded above.
template <class S>
struct pair_bound {
  std::size_t r1 = 0;
  std::size_t r2 = 0;
  S lo{0};
  std::optional<S> hi;
};

using PairBound = pair_bound<Rat>;

namespace detail {

template <class S>
pair_bound<S> make_pair_bound(const basic_transform_pair<S>& pair, std::size_t r1,
                              std::size_t r2) {
  using traits = scalar_traits<S>;
  const std::size_t n = pair.dimension();
  pair_bound<S> b;
  b.r1 = r1;
  b.r2 = r2;
  for (const auto* v : {&pair.x(), &pair.y()}) {
    if (r1 <= n) {
      // lo candidates: v_r1 / v_(r2-1); numerator index exceeds denominator
      // index, so a zero denominator forces a zero numerator (dropped term)
      const S& den = v->component(r2 - 1);
      if (traits::lt(S{0}, den)) {
        S term = v->component(r1) / den;
        if (traits::lt(b.lo, term)) b.lo = std::move(term);
      }
    }
    // hi candidates: v_(r1-1) / v_r2; a zero denominator gives either a
    // dropped 0/0 term or +infinity, and neither lowers the minimum
    const S& den = v->component(r2);
    if (traits::lt(S{0}, den)) {
      S term = v->component(r1 - 1) / den;
      if (!b.hi || traits::lt(term, *b.hi)) b.hi = std::move(term);
    }
  }
  return b;
}

}  // namespace detail

/// All blocking bands: one per (r1, r2) with r1, r2 in L u {n+1}, r1 >= r2,
/// r2 < n+1. Requires an admissible pair; empty when L is empty.
template <class S>
std::vector<pair_bound<S>> pair_bounds(const basic_transform_pair<S>& pair) {
  const CriticalSet critical = critical_set(pair);
  const std::size_t sentinel = pair.dimension() + 1;
  std::vector<std::size_t> upper = critical;
  upper.push_back(sentinel);

  std::vector<pair_bound<S>> bounds;
  for (std::size_t r1 : upper)
    for (std::size_t r2 : critical) {
      if (r2 > r1) break;
      bounds.push_back(detail::make_pair_bound(pair, r1, r2));
    }
  return bounds;
}

/// Open interval (lo, hi) of catalyst ratios, 0 <= lo < hi <= 1.
template <class S>
struct ratio_interval {
  S lo;
  S hi;
  friend bool operator==(const ratio_interval&, const ratio_interval&) = default;
};

/// A subset of (0, 1) kept as sorted disjoint open intervals. Intervals
/// sharing an endpoint are not merged: the shared endpoint is excluded.
template <class S>
class basic_ratio_region {
 public:
  using traits = scalar_traits<S>;

  static basic_ratio_region empty_region() { return basic_ratio_region({}); }

  static basic_ratio_region full01() {
    return basic_ratio_region({ratio_interval<S>{S{0}, S{1}}});
  }

  bool empty() const noexcept { return intervals_.empty(); }

  const std::vector<ratio_interval<S>>& intervals() const noexcept { return intervals_; }

  bool contains(const S& t) const {
    for (const auto& iv : intervals_)
      if (traits::lt(iv.lo, t) && traits::lt(t, iv.hi)) return true;
    return false;
  }

  /// Removes the closed band [lo, hi] (hi of nullopt = +infinity), i.e.
  /// intersects with (0, lo) u (hi, 1).
  basic_ratio_region remove_closed_band(const S& lo, const std::optional<S>& hi) const {
    // a band that misses (0,1) removes nothing
    if (hi && traits::lt(*hi, lo)) return *this;
    if (hi && traits::le(*hi, S{0})) return *this;
    if (traits::le(S{1}, lo)) return *this;

    std::vector<ratio_interval<S>> out;
    for (const auto& iv : intervals_) {
      if (traits::lt(iv.lo, lo)) {
        S cut = traits::lt(lo, iv.hi) ? lo : iv.hi;
        out.push_back(ratio_interval<S>{iv.lo, std::move(cut)});
      }
      if (hi) {
        const S& start = traits::lt(iv.lo, *hi) ? *hi : iv.lo;
        if (traits::lt(start, iv.hi)) out.push_back(ratio_interval<S>{start, iv.hi});
      }
    }
    return basic_ratio_region(std::move(out));
  }

  friend bool operator==(const basic_ratio_region& a, const basic_ratio_region& b) = default;

 private:
  explicit basic_ratio_region(std::vector<ratio_interval<S>> intervals)
      : intervals_(std::move(intervals)) {}

  std::vector<ratio_interval<S>> intervals_;
};

using RatioRegion = basic_ratio_region<Rat>;

/// The set S of useful 2-d catalyst ratios. Empty when the pair is not
/// admissible; otherwise the intersection of all band complements, which
/// over an empty family is the whole of (0, 1).
template <class S>
basic_ratio_region<S> region2(const basic_transform_pair<S>& pair) {
  if (!catalysis_admissible(pair)) return basic_ratio_region<S>::empty_region();
  auto region = basic_ratio_region<S>::full01();
  for (const auto& b : pair_bounds(pair)) region = region.remove_closed_band(b.lo, b.hi);
  return region;
}

/// Decides whether the 2-d catalyst c = (c1, c2) increases P(x -> y),
/// evaluating every band constraint in multiplied-out form. The components
/// of c must be positive; the uniform catalyst (ratio 1) is never useful.
template <class S>
bool is_useful_2d(const basic_transform_pair<S>& pair, const basic_prob_vec<S>& c) {
  using traits = scalar_traits<S>;
  if (c.dimension() != 2)
    throw std::invalid_argument("catalyst must be 2-dimensional (got dimension " +
                                std::to_string(c.dimension()) + ")");
  if (!c.strictly_positive())
    throw std::invalid_argument("catalyst components must be strictly positive");
  const S& c1 = c.component(1);
  const S& c2 = c.component(2);
  if (traits::eq(c1, c2)) return false;  // ratio 1 lies outside (0, 1)
  if (!catalysis_admissible(pair)) return false;

  const std::size_t n = pair.dimension();
  for (const auto& b : pair_bounds(pair)) {
    bool blocked = true;
    for (const auto* v : {&pair.x(), &pair.y()}) {
      // lo <= t: c1 * v_r1 <= c2 * v_(r2-1), auto-satisfied when r1 = n+1
      if (b.r1 <= n && !traits::le(c1 * v->component(b.r1), c2 * v->component(b.r2 - 1))) {
        blocked = false;
        break;
      }
      // t <= hi: c2 * v_r2 <= c1 * v_(r1-1)
      if (!traits::le(c2 * v->component(b.r2), c1 * v->component(b.r1 - 1))) {
        blocked = false;
        break;
      }
    }
    if (blocked) return false;
  }
  return true;
}

/// True iff some 2-dimensional catalyst increases P(x -> y).
template <class S>
bool exists_2d(const basic_transform_pair<S>& pair) {
  return !region2(pair).empty();
}

}  // namespace entcat
