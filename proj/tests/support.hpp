#pragma once

// Shared helpers for the test binaries.

#include "entcat/oracle.hpp"
#include "entcat/probvec.hpp"
#include "entcat/vidal.hpp"

#include <random>
#include <string>
#include <string_view>

namespace entcat::testing {

inline ProbVec pv(std::string_view literal, bool renormalize = false) {
  return parse_prob_vec(literal, renormalize);
}

inline TransformPair pair_of(std::string_view x, std::string_view y) {
  return TransformPair::make(pv(x), pv(y));
}

inline Rat rat(std::string_view literal) { return parse_rational(literal); }

// the worked-example fixtures used across suites
inline TransformPair example1_pair_a() { return pair_of("0.6,0.2,0.2", "0.5,0.4,0.1"); }
inline TransformPair example1_pair_b() { return pair_of("0.6,0.2,0.2", "0.5,0.3,0.2"); }
inline TransformPair example2_pair() {
  return pair_of("0.4,0.4,0.1,0.1", "0.5,0.25,0.25,0");
}

/// 2-d catalyst with ratio t = c2/c1 in (0, 1].
inline ProbVec catalyst_from_ratio(const Rat& t) {
  const Rat c1 = Rat(1) / (1 + t);
  return ProbVec::from_sorted_unchecked({c1, t * c1});
}

}  // namespace entcat::testing
