// Periodic walks through a digraph and the greedy enumerator they induce.
//
// A WalkSpec is a finite prelude followed by a cycle repeated forever. Its
// entries are class indices; with level marks, prelude entries may refer to
// coarser partitions of a refinement chain while the cycle always lives in
// the finest one. The greedy enumerator sends step n to the least element of
// the n-th visited class not used at an earlier step.

#ifndef OMEGASTAR_WALK_HPP
#define OMEGASTAR_WALK_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "omegastar/digraph.hpp"
#include "omegastar/partition.hpp"
#include "omegastar/permutation.hpp"

namespace omegastar {

struct LevelMark {
  std::size_t start = 0;  // first index (prelude ++ cycle numbering) at this level
  std::size_t level = 0;
  friend bool operator==(const LevelMark&, const LevelMark&) = default;
};

struct WalkSpec {
  std::vector<std::size_t> prelude;
  std::vector<std::size_t> cycle;
  std::vector<LevelMark> level_marks;

  /// Class index visited at step n.
  std::size_t at(std::size_t n) const {
    return n < prelude.size() ? prelude[n] : cycle[(n - prelude.size()) % cycle.size()];
  }
  /// Level governing step n (0 without marks).
  std::size_t level_at(std::size_t n) const;

  friend bool operator==(const WalkSpec&, const WalkSpec&) = default;
};

/// Closed walk covering every edge of a transitive digraph, returned as
/// the cycle [v0, …, vL-1] with the wrap-around vL-1 → v0 also an edge.
/// Deterministic: from the current vertex take the uncovered out-edge with
/// the lowest target, postponing an edge back to the start vertex while
/// other uncovered out-edges remain; when stuck, move along a shortest path
/// to the nearest vertex with an uncovered out-edge; finally close up along
/// a shortest path. Throws std::invalid_argument on a non-transitive digraph.
std::vector<std::size_t> edge_covering_closed_walk(const HitDigraph& g,
                                                   std::optional<std::size_t> start = std::nullopt);

/// Closed-form enumerator for a single-level walk over v.
Permutation greedy_enumerator(const WalkSpec& walk, const ClopenPartition& v);

/// Closed-form enumerator for a walk over a refinement chain; the cycle must
/// be at the last level. The eventual modulus is
/// Λ = L·lcm_A(d_A / gcd(m_A, d_A)) with L the cycle length, m_A the visits
/// to class A per cycle and d_A the members of A per period. The result is
/// checked against pointwise greedy simulation on 10·Λ + threshold steps and
/// std::logic_error is thrown on any disagreement.
Permutation greedy_enumerator(const WalkSpec& walk, std::span<const ClopenPartition> levels);

/// Pointwise greedy replay of the first `steps` values.
std::vector<Int> simulate_greedy(const WalkSpec& walk, std::span<const ClopenPartition> levels,
                                 std::size_t steps);

}  // namespace omegastar

#endif  // OMEGASTAR_WALK_HPP
