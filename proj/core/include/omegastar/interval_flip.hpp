// The block-reversal map of an infinite set D and its conjugate of the
// predecessor.
//
// With d_0 = 0 < d_1 < d_2 < … enumerating {0} ∪ (D + 1), h reverses every
// block [d_k, d_{k+1} - 1], and f = h ∘ s⁻¹ ∘ h⁻¹ is
//   f(n) = n + 1        for n ∉ D,
//   f(n) = d_{i-2}      for n = d_i - 1, i ≥ 2,
// undefined at d_1 - 1. f agrees with the shift mod finite on every A with
// A ∩ D or A \ D finite.

#ifndef OMEGASTAR_INTERVAL_FLIP_HPP
#define OMEGASTAR_INTERVAL_FLIP_HPP

#include "omegastar/ep_set.hpp"
#include "omegastar/permutation.hpp"

namespace omegastar {

struct IntervalFlip {
  Permutation h;
  Permutation f;
};

/// Throws std::invalid_argument for finite d.
IntervalFlip interval_flip(const EpSet& d);

}  // namespace omegastar

#endif  // OMEGASTAR_INTERVAL_FLIP_HPP
