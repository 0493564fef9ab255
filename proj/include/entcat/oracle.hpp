#pragma once

// Brute-force ground truth: the catalyzed probability P(x(x)c -> y(x)c) is
// evaluated directly on the sorted tensor-product spectra, with no use of
// the critical-set machinery. Region scans and a bounded catalyst search
// are built on top, plus seeded random instance generation for the
// property suites.
//
// For exact rationals the evaluation runs on integer spectra over a common
// denominator: products, sorting, tail sums and the final minimization are
// all integer operations, and the denominators cancel in every ratio
// comparison. This keeps large constructed catalysts (k in the hundreds)
// affordable without touching the arithmetic semantics.

#include "entcat/probvec.hpp"
#include "entcat/vidal.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace entcat {

namespace detail {

/// Sorted integer spectrum: entries nums[i] / den, nonincreasing.
struct int_spectrum {
  std::vector<BigInt> nums;
  BigInt den;
};

inline int_spectrum to_spectrum(const ProbVec& v) {
  BigInt den = 1;
  for (const Rat& c : v) den = lcm(den, denominator(c));
  int_spectrum s;
  s.den = den;
  s.nums.reserve(v.dimension());
  for (const Rat& c : v) s.nums.push_back(numerator(c) * (den / denominator(c)));
  return s;
}

inline int_spectrum tensor_spectrum(const int_spectrum& a, const int_spectrum& b) {
  int_spectrum s;
  s.den = a.den * b.den;
  s.nums.reserve(a.nums.size() * b.nums.size());
  for (const BigInt& ai : a.nums)
    for (const BigInt& bj : b.nums) s.nums.push_back(ai * bj);
  std::sort(s.nums.begin(), s.nums.end(), std::greater<BigInt>{});
  return s;
}

/// Vidal's minimum over the two spectra; also reports the attaining index
/// (1-based, smallest). Denominators cancel inside the comparisons.
inline std::pair<Rat, std::size_t> vidal_min_on_spectra(const int_spectrum& xs,
                                                        const int_spectrum& ys) {
  const std::size_t n = xs.nums.size();
  if (n != ys.nums.size()) throw std::invalid_argument("spectra of unequal size");
  std::vector<BigInt> tx(n), ty(n);
  BigInt ax = 0, ay = 0;
  for (std::size_t i = n; i-- > 0;) {
    ax += xs.nums[i];
    ay += ys.nums[i];
    tx[i] = ax;
    ty[i] = ay;
  }
  bool have = false;
  std::size_t best_l = 0;
  for (std::size_t l = 0; l < n; ++l) {
    if (ty[l] == 0) continue;
    if (!have || tx[l] * ty[best_l] < tx[best_l] * ty[l]) {
      best_l = l;
      have = true;
    }
  }
  return {Rat(tx[best_l] * ys.den, ty[best_l] * xs.den), best_l + 1};
}

}  // namespace detail

/// P(x(x)c -> y(x)c), evaluated directly on the product spectra. x and y
/// must share a dimension; c may carry trailing zeros (they do not change
/// the result).
template <class S>
S catalyzed_prob(const basic_prob_vec<S>& x, const basic_prob_vec<S>& y,
                 const basic_prob_vec<S>& c) {
  if (x.dimension() != y.dimension())
    throw std::invalid_argument("catalyzed_prob needs x and y at a common dimension");
  if constexpr (scalar_traits<S>::is_exact) {
    const auto cs = detail::to_spectrum(c);
    return detail::vidal_min_on_spectra(
               detail::tensor_spectrum(detail::to_spectrum(x), cs),
               detail::tensor_spectrum(detail::to_spectrum(y), cs))
        .first;
  } else {
    return max_prob(tensor(x, c), tensor(y, c));
  }
}

/// Verdict of one direct evaluation. When the catalyst is useless,
/// witness_index is a 1-based position l in the product spectrum at which
/// E_l(x(x)c) = P * E_l(y(x)c), certifying that the minimum did not move.
template <class S>
struct catalyst_report {
  basic_prob_vec<S> catalyst;
  S p_before;
  S p_after;
  bool useful = false;
  std::optional<std::size_t> witness_index;
};

using CatalystReport = catalyst_report<Rat>;

template <class S>
catalyst_report<S> verify_useful(const basic_transform_pair<S>& pair,
                                 const basic_prob_vec<S>& c) {
  using traits = scalar_traits<S>;
  catalyst_report<S> report{c, pair.max_probability(), S{0}, false, std::nullopt};
  if constexpr (traits::is_exact) {
    const auto cs = detail::to_spectrum(c);
    auto [p_after, at] = detail::vidal_min_on_spectra(
        detail::tensor_spectrum(detail::to_spectrum(pair.x()), cs),
        detail::tensor_spectrum(detail::to_spectrum(pair.y()), cs));
    report.p_after = std::move(p_after);
    report.useful = traits::lt(report.p_before, report.p_after);
    if (!report.useful) report.witness_index = at;
  } else {
    report.p_after = catalyzed_prob(pair.x(), pair.y(), c);
    report.useful = traits::lt(report.p_before, report.p_after);
  }
  return report;
}

template <class S>
catalyst_report<S> verify_useful(const basic_prob_vec<S>& x, const basic_prob_vec<S>& y,
                                 const basic_prob_vec<S>& c) {
  return verify_useful(basic_transform_pair<S>::make(x, y), c);
}

/// One classified grid point of a 2-d catalyst scan.
template <class S>
struct region_sample {
  S t;
  bool useful = false;
};

/// Classifies t = i/resolution for i = 1..resolution-1 through the direct
/// evaluation, with catalyst (1/(1+t), t/(1+t)).
template <class S>
std::vector<region_sample<S>> scan_region2(const basic_transform_pair<S>& pair,
                                           unsigned resolution) {
  if (resolution < 2) throw std::invalid_argument("scan resolution must be >= 2");
  std::vector<region_sample<S>> samples;
  samples.reserve(resolution - 1);
  for (unsigned i = 1; i < resolution; ++i) {
    const S t = scalar_traits<S>::from_fraction(static_cast<long>(i),
                                                static_cast<long>(resolution));
    const S c1 = S{1} / (S{1} + t);
    basic_prob_vec<S> c =
        basic_prob_vec<S>::from_sorted_unchecked({c1, t * c1});
    samples.push_back({t, verify_useful(pair, c).useful});
  }
  return samples;
}

namespace detail {

/// Visits sorted compositions of `total` into `parts` positive integers in
/// decreasing lexicographic order; stops early when the visitor returns true.
inline bool visit_sorted_compositions(
    unsigned total, unsigned parts, unsigned max_part, std::vector<unsigned>& current,
    const std::function<bool(const std::vector<unsigned>&)>& visit) {
  if (parts == 1) {
    if (total >= 1 && total <= max_part) {
      current.push_back(total);
      const bool stop = visit(current);
      current.pop_back();
      return stop;
    }
    return false;
  }
  const unsigned hi = std::min(max_part, total - (parts - 1));
  // first part at least ceil(total/parts) keeps the sequence nonincreasing
  const unsigned lo = (total + parts - 1) / parts;
  for (unsigned first = hi; first >= lo && first >= 1; --first) {
    current.push_back(first);
    if (visit_sorted_compositions(total - first, parts - 1, first, current, visit))
      return true;
    current.pop_back();
  }
  return false;
}

}  // namespace detail

/// Searches catalyst dimensions 2..dmax over the simplex grid with the given
/// resolution (components i_1 >= ... >= i_d >= 1, sum = resolution, divided
/// by the resolution) and returns the first useful catalyst found in the
/// lowest dimension, largest first component first.
template <class S>
std::optional<catalyst_report<S>> search_catalyst(const basic_transform_pair<S>& pair,
                                                  unsigned dmax, unsigned resolution) {
  if (dmax < 2) throw std::invalid_argument("search needs dmax >= 2");
  if (resolution < 2) throw std::invalid_argument("search resolution must be >= 2");
  std::optional<catalyst_report<S>> found;
  for (unsigned d = 2; d <= dmax && !found; ++d) {
    if (resolution < d) break;
    std::vector<unsigned> current;
    detail::visit_sorted_compositions(
        resolution, d, resolution, current, [&](const std::vector<unsigned>& parts) {
          std::vector<S> comps;
          comps.reserve(parts.size());
          for (unsigned p : parts)
            comps.push_back(scalar_traits<S>::from_fraction(static_cast<long>(p),
                                                            static_cast<long>(resolution)));
          auto report =
              verify_useful(pair, basic_prob_vec<S>::from_sorted_unchecked(std::move(comps)));
          if (report.useful) {
            found = std::move(report);
            return true;
          }
          return false;
        });
  }
  return found;
}

/// Uniformly random composition of `total` into `parts` positive integers
/// (unordered content, reported sorted nonincreasingly): `parts - 1`
/// distinct cut points in 1..total-1.
inline std::vector<unsigned> random_sorted_composition(std::mt19937_64& rng, unsigned total,
                                                       std::size_t parts) {
  if (parts < 1 || parts > total)
    throw std::invalid_argument("composition needs 1 <= parts <= total");
  std::vector<unsigned> cuts;
  cuts.reserve(parts - 1);
  while (cuts.size() + 1 < parts) {
    const unsigned c = 1 + static_cast<unsigned>(uniform_below(total - 1, rng));
    if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<unsigned> sizes;
  sizes.reserve(parts);
  unsigned prev = 0;
  for (unsigned c : cuts) {
    sizes.push_back(c - prev);
    prev = c;
  }
  sizes.push_back(total - prev);
  std::sort(sizes.begin(), sizes.end(), std::greater<unsigned>{});
  return sizes;
}

/// Random sorted probability vector with strictly positive components of
/// denominator `denominator`.
inline ProbVec random_prob_vec(std::mt19937_64& rng, std::size_t n,
                               unsigned denominator = 1000) {
  const auto sizes = random_sorted_composition(rng, denominator, n);
  std::vector<Rat> comps;
  comps.reserve(n);
  for (unsigned s : sizes) comps.push_back(Rat(s, denominator));
  return ProbVec::from_sorted_unchecked(std::move(comps));
}

inline TransformPair random_pair(std::mt19937_64& rng, std::size_t n,
                                 unsigned denominator = 1000) {
  return TransformPair::make(random_prob_vec(rng, n, denominator),
                             random_prob_vec(rng, n, denominator));
}

/// Draws pairs until one satisfies the admissibility test.
inline TransformPair random_admissible_pair(std::mt19937_64& rng, std::size_t n,
                                            unsigned denominator = 1000) {
  while (true) {
    TransformPair pair = random_pair(rng, n, denominator);
    if (catalysis_admissible(pair)) return pair;
  }
}

}  // namespace entcat
