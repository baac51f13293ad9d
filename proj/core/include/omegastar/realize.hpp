// Realizing transitive digraphs, and refining chains of them, as hitting
// digraphs of maps conjugate to the successor.

#ifndef OMEGASTAR_REALIZE_HPP
#define OMEGASTAR_REALIZE_HPP

#include "omegastar/digraph.hpp"
#include "omegastar/hitting.hpp"
#include "omegastar/partition.hpp"
#include "omegastar/permutation.hpp"
#include "omegastar/walk.hpp"

namespace omegastar {

/// h = f ∘ s ∘ f⁻¹ where f is the greedy enumerator of `walk`.
struct Realization {
  Permutation h;
  Permutation f;
  WalkSpec walk;
};

/// hit_digraph(h, v) == g. Throws std::invalid_argument when the sizes
/// differ or g is not transitive (hit digraphs of chain transitive maps
/// always are).
Realization realize_digraph(const ClopenPartition& v, const HitDigraph& g);

/// One map whose hit digraph at every level of the chain is that level's
/// digraph. Each level contributes a closed walk to the prelude, entered
/// along an edge of the previous level; the finest walk then repeats.
/// Throws ChainError naming the first bad level.
Realization realize_chain(const RefinementChain& chain);

enum class Base { successor, predecessor };

/// f ∘ base =* h ∘ f, i.e. f conjugates base to h mod finite. False when
/// either map is invalid.
bool conjugacy_witness_check(const Permutation& f, const Permutation& h, Base base);

}  // namespace omegastar

#endif  // OMEGASTAR_REALIZE_HPP
