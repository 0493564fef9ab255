#pragma once

// Probability vectors of Schmidt coefficients: construction and validation,
// tensor products, tail sums E_l, majorization, and common-dimension
// adjustment. Components are kept sorted nonincreasingly; indices in the
// public API and in every error message are 1-based.

#include "entcat/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace entcat {

template <class S>
class basic_prob_vec {
 public:
  using value_type = S;
  using traits = scalar_traits<S>;

  /// Validating factory. Entries may arrive in any order and may contain
  /// zeros; negatives, empty input and an all-zero vector are rejected.
  /// With renormalize off the entries must sum to exactly 1; with it on
  /// they are divided by their sum first.
  static basic_prob_vec from_components(std::vector<S> raw, bool renormalize) {
    if (raw.empty()) throw std::invalid_argument("probability vector must be nonempty");
    S sum{0};
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (traits::lt(raw[i], S{0}))
        throw std::invalid_argument("component " + std::to_string(i + 1) +
                                    " is negative");
      sum += raw[i];
    }
    if (traits::le(sum, S{0}))
      throw std::invalid_argument("probability vector must have a positive total");
    if (renormalize) {
      for (S& v : raw) v /= sum;
    } else if (!traits::eq(sum, S{1})) {
      throw std::invalid_argument("components must sum to exactly 1");
    }
    std::sort(raw.begin(), raw.end(), std::greater<S>{});
    return basic_prob_vec(std::move(raw));
  }

  /// Trusts the caller: components already sorted nonincreasingly, all
  /// nonnegative, summing to 1. Used on internally generated data.
  static basic_prob_vec from_sorted_unchecked(std::vector<S> sorted) {
    return basic_prob_vec(std::move(sorted));
  }

  std::size_t dimension() const noexcept { return comps_.size(); }

  /// 1-based component access: component(1) is the largest.
  const S& component(std::size_t i) const {
    if (i < 1 || i > comps_.size())
      throw std::out_of_range("component index " + std::to_string(i) +
                              " outside 1.." + std::to_string(comps_.size()));
    return comps_[i - 1];
  }

  const std::vector<S>& components() const noexcept { return comps_; }

  auto begin() const noexcept { return comps_.begin(); }
  auto end() const noexcept { return comps_.end(); }

  bool strictly_positive() const {
    return !comps_.empty() && traits::lt(S{0}, comps_.back());
  }

  friend bool operator==(const basic_prob_vec& a, const basic_prob_vec& b) = default;

 private:
  explicit basic_prob_vec(std::vector<S> comps) : comps_(std::move(comps)) {}

  std::vector<S> comps_;
};

using ProbVec = basic_prob_vec<Rat>;

template <class S>
basic_prob_vec<S> make_prob_vec(std::vector<S> raw, bool renormalize = false) {
  return basic_prob_vec<S>::from_components(std::move(raw), renormalize);
}

/// Parses a vector literal into an exact ProbVec.
inline ProbVec parse_prob_vec(std::string_view literal, bool renormalize = false) {
  return ProbVec::from_components(parse_vector_literal(literal), renormalize);
}

/// Tail sums E_l = sum of components l..n, 1-based: at(1) = 1, at(n) = last
/// component. Accumulated from the back.
template <class S>
class basic_tail_sums {
 public:
  explicit basic_tail_sums(const basic_prob_vec<S>& v) : values_(v.dimension()) {
    const auto& c = v.components();
    S acc{0};
    for (std::size_t i = c.size(); i-- > 0;) {
      acc += c[i];
      values_[i] = acc;
    }
  }

  std::size_t dimension() const noexcept { return values_.size(); }

  const S& at(std::size_t l) const {
    if (l < 1 || l > values_.size())
      throw std::out_of_range("tail index " + std::to_string(l) + " outside 1.." +
                              std::to_string(values_.size()));
    return values_[l - 1];
  }

 private:
  std::vector<S> values_;
};

using TailSums = basic_tail_sums<Rat>;

template <class S>
basic_tail_sums<S> tail_sums(const basic_prob_vec<S>& v) {
  return basic_tail_sums<S>(v);
}

/// Sorted spectrum of all pairwise products a_i * b_j.
template <class S>
basic_prob_vec<S> tensor(const basic_prob_vec<S>& a, const basic_prob_vec<S>& b) {
  std::vector<S> products;
  products.reserve(a.dimension() * b.dimension());
  for (const S& ai : a)
    for (const S& bj : b) products.push_back(ai * bj);
  std::sort(products.begin(), products.end(), std::greater<S>{});
  return basic_prob_vec<S>::from_sorted_unchecked(std::move(products));
}

/// Nielsen's majorization check a < b: every prefix sum of a is at most the
/// corresponding prefix sum of b. Vectors must share a dimension.
template <class S>
bool majorized_by(const basic_prob_vec<S>& a, const basic_prob_vec<S>& b) {
  using traits = scalar_traits<S>;
  if (a.dimension() != b.dimension())
    throw std::invalid_argument("majorization needs equal dimensions (got " +
                                std::to_string(a.dimension()) + " and " +
                                std::to_string(b.dimension()) + ")");
  S pa{0};
  S pb{0};
  for (std::size_t l = 0; l + 1 < a.dimension(); ++l) {
    pa += a.components()[l];
    pb += b.components()[l];
    if (!traits::le(pa, pb)) return false;
  }
  return true;
}

/// Brings x and y to a common dimension: the shorter vector is padded with
/// exact zeros, then trailing positions that are zero in both are stripped,
/// so that at most one of the results ends in zero.
template <class S>
std::pair<basic_prob_vec<S>, basic_prob_vec<S>> common_dimension(
    const basic_prob_vec<S>& x, const basic_prob_vec<S>& y) {
  using traits = scalar_traits<S>;
  std::vector<S> xs = x.components();
  std::vector<S> ys = y.components();
  const std::size_t n = std::max(xs.size(), ys.size());
  xs.resize(n, S{0});
  ys.resize(n, S{0});
  while (xs.size() > 1 && traits::eq(xs.back(), S{0}) && traits::eq(ys.back(), S{0})) {
    xs.pop_back();
    ys.pop_back();
  }
  return {basic_prob_vec<S>::from_sorted_unchecked(std::move(xs)),
          basic_prob_vec<S>::from_sorted_unchecked(std::move(ys))};
}

}  // namespace entcat
