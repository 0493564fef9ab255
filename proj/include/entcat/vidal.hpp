#pragma once

// Vidal's maximal LOCC transformation probability
//
//   P(x -> y) = min over l of E_l(x) / E_l(y),
//
// its critical index set L (the interior indices attaining the minimum),
// and the admissibility test deciding whether any catalyst could increase
// P at all. Indices with E_l(y) = 0 are excluded from the minimization:
// their ratio is +infinity.

#include "entcat/probvec.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace entcat {

/// A transformation pair (x, y) at common dimension n >= 2, with cached
/// tail sums and the cached probability P(x -> y). Every later module reads
/// the cached value so that all decisions about one pair share a single P.
template <class S>
class basic_transform_pair {
 public:
  using traits = scalar_traits<S>;

  static basic_transform_pair make(const basic_prob_vec<S>& x_in,
                                   const basic_prob_vec<S>& y_in) {
    auto [x, y] = common_dimension(x_in, y_in);
    if (x.dimension() < 2)
      throw std::invalid_argument(
          "transformation pair needs dimension >= 2 after stripping shared zeros");
    return basic_transform_pair(std::move(x), std::move(y));
  }

  const basic_prob_vec<S>& x() const noexcept { return x_; }
  const basic_prob_vec<S>& y() const noexcept { return y_; }
  const basic_tail_sums<S>& x_tails() const noexcept { return ex_; }
  const basic_tail_sums<S>& y_tails() const noexcept { return ey_; }
  std::size_t dimension() const noexcept { return x_.dimension(); }

  /// Cached P(x -> y).
  const S& max_probability() const noexcept { return p_; }

 private:
  basic_transform_pair(basic_prob_vec<S> x, basic_prob_vec<S> y)
      : x_(std::move(x)), y_(std::move(y)), ex_(x_), ey_(y_), p_(compute_p()) {}

  S compute_p() const {
    const std::size_t n = x_.dimension();
    bool have = false;
    S best{0};
    for (std::size_t l = 1; l <= n; ++l) {
      if (!traits::lt(S{0}, ey_.at(l))) continue;  // ratio +infinity, skipped
      S ratio = ex_.at(l) / ey_.at(l);
      if (!have || traits::lt(ratio, best)) {
        best = std::move(ratio);
        have = true;
      }
    }
    // l = 1 always qualifies (E_1(y) = 1), so the minimum exists
    return best;
  }

  basic_prob_vec<S> x_;
  basic_prob_vec<S> y_;
  basic_tail_sums<S> ex_;
  basic_tail_sums<S> ey_;
  S p_;
};

using TransformPair = basic_transform_pair<Rat>;

/// P(x -> y) for vectors already at a common dimension.
template <class S>
S max_prob(const basic_prob_vec<S>& x, const basic_prob_vec<S>& y) {
  if (x.dimension() != y.dimension())
    throw std::invalid_argument("max_prob needs equal dimensions (got " +
                                std::to_string(x.dimension()) + " and " +
                                std::to_string(y.dimension()) + ")");
  return basic_transform_pair<S>::make(x, y).max_probability();
}

using CriticalSet = std::vector<std::size_t>;

/// The set L of interior indices 1 < l < n with E_l(x) = P * E_l(y),
/// tested in multiplied-out form so zero tails need no special case.
template <class S>
CriticalSet critical_set(const basic_transform_pair<S>& pair) {
  using traits = scalar_traits<S>;
  CriticalSet indices;
  for (std::size_t l = 2; l + 1 <= pair.dimension(); ++l) {
    if (traits::eq(pair.x_tails().at(l), pair.max_probability() * pair.y_tails().at(l)))
      indices.push_back(l);
  }
  return indices;
}

/// True iff a catalyst could possibly increase P(x -> y): P must be
/// strictly below 1 and strictly below the last-tail ratio E_n(x)/E_n(y)
/// (an E_n(y) of zero counts as +infinity). When this is false, no
/// catalyst of any dimension changes P.
template <class S>
bool catalysis_admissible(const basic_transform_pair<S>& pair) {
  using traits = scalar_traits<S>;
  const S& p = pair.max_probability();
  if (!traits::lt(p, S{1})) return false;
  const S& exn = pair.x_tails().at(pair.dimension());
  const S& eyn = pair.y_tails().at(pair.dimension());
  if (!traits::lt(S{0}, eyn)) return true;  // E_n(y) = 0: right side +infinity
  return traits::lt(p * eyn, exn);
}

}  // namespace entcat
