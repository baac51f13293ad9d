#include "omegastar/realize.hpp"

#include <sstream>
#include <stdexcept>

namespace omegastar {

Realization realize_digraph(const ClopenPartition& v, const HitDigraph& g) {
  if (g.size() != v.size()) {
    std::ostringstream os;
    os << "realize: digraph on " << g.size() << " vertices for a " << v.size() << "-class partition";
    throw std::invalid_argument(os.str());
  }
  if (!is_transitive(g))
    throw std::invalid_argument("realize: digraph " + to_string(g) +
                                " is not transitive; the hit digraph of a map conjugate to the shift always is");
  WalkSpec walk;
  walk.cycle = edge_covering_closed_walk(g);
  Permutation f = greedy_enumerator(walk, v);
  Permutation h = conjugate_successor(f);
  if (hit_digraph(h, v) != g) throw std::logic_error("realize: hit digraph of the construction differs from " + to_string(g));
  return {std::move(h), std::move(f), std::move(walk)};
}

Realization realize_chain(const RefinementChain& chain) {
  validate_chain(chain);
  std::vector<ClopenPartition> levels;
  for (const auto& l : chain) levels.push_back(l.partition);

  WalkSpec walk;
  std::size_t start = 0;
  for (std::size_t m = 0; m < chain.size(); ++m) {
    if (m > 0) {
      // Enter level m inside the lowest class of level m-1 reachable from
      // where the previous walk ended.
      const auto parent = *refinement_map(levels[m], levels[m - 1]);
      const std::size_t last = walk.prelude.back();
      std::optional<std::size_t> entry;
      for (std::size_t a : chain[m - 1].digraph.successors(last)) {
        for (std::size_t b = 0; b < parent.size() && !entry; ++b)
          if (parent[b] == a) entry = b;
        if (entry) break;
      }
      if (!entry) throw ChainError("chain: no class of level " + std::to_string(m) + " is reachable", m);
      start = *entry;
    }
    const auto w = edge_covering_closed_walk(chain[m].digraph, start);
    const std::size_t offset = walk.prelude.size();
    walk.level_marks.push_back({offset, m});
    if (m + 1 < chain.size()) {
      walk.prelude.insert(walk.prelude.end(), w.begin(), w.end());
      walk.prelude.push_back(w.front());
    } else {
      walk.cycle = w;
    }
  }

  Permutation f = greedy_enumerator(walk, std::span<const ClopenPartition>(levels));
  Permutation h = conjugate_successor(f);
  for (std::size_t m = 0; m < chain.size(); ++m) {
    if (hit_digraph(h, levels[m]) != chain[m].digraph)
      throw std::logic_error("realize_chain: construction misses the digraph at level " + std::to_string(m));
  }
  return {std::move(h), std::move(f), std::move(walk)};
}

bool conjugacy_witness_check(const Permutation& f, const Permutation& h, Base base) {
  if (!validate(f) || !validate(h)) return false;
  const Permutation b = base == Base::successor ? Permutation::successor() : Permutation::predecessor();
  return almost_equal_perm(compose(f, b), compose(h, f));
}

}  // namespace omegastar
