// Pointwise cross-checks behind `omegastar verify`.

#ifndef OMEGASTAR_TOOLS_ORACLE_HPP
#define OMEGASTAR_TOOLS_ORACLE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "omegastar/digraph.hpp"
#include "omegastar/partition.hpp"
#include "omegastar/permutation.hpp"

namespace omegastar::tools {

/// Beyond this point every x lies in a piece of h, and both x and h(x) lie
/// in the periodic part of v.
Int transition_threshold(const Permutation& h, const ClopenPartition& v);

/// Period of the pair (class of x, class of h(x)) beyond the threshold.
Int transition_window(const Permutation& h, const ClopenPartition& v);

struct TransitionCensus {
  Int threshold = 0;
  Int window = 1;
  Int windows = 0;  // complete windows inside [threshold, prefix)
  std::vector<std::vector<Int>> counts;  // transitions i -> j from the threshold on
  // Per class pair, the number of complete windows containing a transition.
  std::vector<std::vector<Int>> windows_hit;
};

/// Counts x -> h(x) transitions by class for x in [threshold, prefix).
TransitionCensus census(const Permutation& h, const ClopenPartition& v, Int prefix);

/// Empty when the census agrees with g: no transition outside g, and every
/// edge of g witnessed in every complete window.
std::string census_mismatch(const TransitionCensus& c, const HitDigraph& g);

}  // namespace omegastar::tools

#endif  // OMEGASTAR_TOOLS_ORACLE_HPP
