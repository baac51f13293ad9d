// Hitting digraphs of mod-finite permutations on clopen partitions, and the
// basic-neighbourhood, refinement and chain-transitivity queries built on
// them.

#ifndef OMEGASTAR_HITTING_HPP
#define OMEGASTAR_HITTING_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "omegastar/digraph.hpp"
#include "omegastar/ep_set.hpp"
#include "omegastar/partition.hpp"
#include "omegastar/permutation.hpp"

namespace omegastar {

/// Edge (i, j) iff h[V_i] ∩ V_j is infinite. Computed exactly from the
/// affine pieces by residue arithmetic, without materializing images.
HitDigraph hit_digraph(const Permutation& h, const ClopenPartition& v);

/// h[A] ⊆* B, decided piecewise by residue arithmetic.
bool image_almost_subset(const Permutation& h, const EpSet& a, const EpSet& b);

/// Edge (i, j) iff some edge (i', j') of g has W_i' ⊆* V_i and W_j' ⊆* V_j.
/// Throws std::invalid_argument when w does not refine v.
HitDigraph project_digraph(const HitDigraph& g, const ClopenPartition& w, const ClopenPartition& v);

/// h lies in the basic open set ⟨V, G⟩, i.e. hit_digraph(h, V) == G.
bool neighborhood_contains(const Permutation& h, const ClopenPartition& v, const HitDigraph& g);

/// Bounded search for an infinite, co-infinite A with h[A] ⊆* A, which
/// certifies that h is not chain transitive. An empty result is not a
/// proof of chain transitivity.
std::optional<EpSet> invariant_clopen_search(const Permutation& h, Int max_period, Int max_threshold);

struct ChainLevel {
  ClopenPartition partition;
  HitDigraph digraph;
};

/// Level 0 is the coarsest.
using RefinementChain = std::vector<ChainLevel>;

class ChainError : public std::invalid_argument {
 public:
  ChainError(const std::string& what, std::size_t level) : std::invalid_argument(what), level_(level) {}
  std::size_t level() const { return level_; }

 private:
  std::size_t level_;
};

/// Checks sizes, refinement, projection compatibility and transitivity of
/// every level; throws ChainError naming the first bad level.
void validate_chain(const RefinementChain& chain);

}  // namespace omegastar

#endif  // OMEGASTAR_HITTING_HPP
