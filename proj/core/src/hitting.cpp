#include "omegastar/hitting.hpp"

#include <sstream>

namespace omegastar {

HitDigraph hit_digraph(const Permutation& h, const ClopenPartition& v) {
  require_valid(h, "hit_digraph");
  HitDigraph g(v.size());
  const Int period = v.period();
  const Int thr = v.threshold();
  // First element ≥ thr of a progression.
  auto first_from = [thr](Int start, Int step) {
    return start >= thr ? start : start + step * ((thr - start + step - 1) / step);
  };
  for (const auto& pc : h.pieces()) {
    // Split the domain so each sub-progression sits eventually in one class.
    const Int sub = lcm(pc.domain.step, period);
    const Int count = sub / pc.domain.step;
    const Int image_step = pc.image.step * count;
    const Int image_count = lcm(image_step, period) / image_step;
    for (Int kappa = 0; kappa < count; ++kappa) {
      const Int x = first_from(pc.domain.at(kappa), sub);
      const std::size_t from = v.class_of(x);
      const Int y0 = first_from(pc.apply(x), image_step);
      for (Int i = 0; i < image_count; ++i) g.add_edge(from, v.class_of(y0 + image_step * i));
    }
  }
  return g;
}

bool image_almost_subset(const Permutation& h, const EpSet& a, const EpSet& b) {
  for (const auto& pc : h.pieces()) {
    const Int sub = lcm(pc.domain.step, a.period());
    const Int count = sub / pc.domain.step;
    const Int image_step = pc.image.step * count;
    const Int image_count = lcm(image_step, b.period()) / image_step;
    for (Int kappa = 0; kappa < count; ++kappa) {
      Int x = pc.domain.at(kappa);
      if (x < a.threshold()) x += sub * ((a.threshold() - x + sub - 1) / sub);
      if (!a.contains(x)) continue;
      Int y = pc.apply(x);
      if (y < b.threshold()) y += image_step * ((b.threshold() - y + image_step - 1) / image_step);
      for (Int i = 0; i < image_count; ++i)
        if (!b.contains(y + image_step * i)) return false;
    }
  }
  return true;
}

HitDigraph project_digraph(const HitDigraph& g, const ClopenPartition& w, const ClopenPartition& v) {
  if (g.size() != w.size()) throw std::invalid_argument("project_digraph: digraph size does not match partition");
  const auto parent = refinement_map(w, v);
  if (!parent) throw std::invalid_argument("project_digraph: partition does not refine the target");
  HitDigraph out(v.size());
  for (const auto& [a, b] : g.edges()) out.add_edge((*parent)[a], (*parent)[b]);
  return out;
}

bool neighborhood_contains(const Permutation& h, const ClopenPartition& v, const HitDigraph& g) {
  if (g.size() != v.size()) throw std::invalid_argument("neighborhood_contains: digraph size does not match partition");
  return hit_digraph(h, v) == g;
}

std::optional<EpSet> invariant_clopen_search(const Permutation& h, Int max_period, Int max_threshold) {
  require_valid(h, "invariant_clopen_search");
  if (max_period > 24) throw std::invalid_argument("invariant_clopen_search: max_period above 24");
  // A candidate with threshold t > 0 is almost equal to a threshold-0
  // candidate of the same period, which precedes it in (period, threshold,
  // pattern) order, so scanning threshold 0 finds the same first hit.
  (void)max_threshold;
  for (Int p = 1; p <= max_period; ++p) {
    const std::uint64_t full = (std::uint64_t{1} << p) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
      Bits pattern(static_cast<std::size_t>(p));
      for (Int i = 0; i < p; ++i) pattern[i] = (mask >> i) & 1U;
      const EpSet a = EpSet::make({}, std::move(pattern));
      if (a.period() != p) continue;  // already tried at its minimal period
      if (image_almost_subset(h, a, a)) return a;
    }
  }
  return std::nullopt;
}

void validate_chain(const RefinementChain& chain) {
  if (chain.empty()) throw ChainError("chain: no levels", 0);
  for (std::size_t n = 0; n < chain.size(); ++n) {
    const auto& level = chain[n];
    std::ostringstream os;
    os << "chain level " << n << ": ";
    if (level.digraph.size() != level.partition.size())
      throw ChainError(os.str() + "digraph size does not match partition", n);
    if (!is_transitive(level.digraph))
      throw ChainError(os.str() + "digraph " + to_string(level.digraph) + " is not transitive", n);
    if (n == 0) continue;
    const auto& prev = chain[n - 1];
    if (!refines(level.partition, prev.partition))
      throw ChainError(os.str() + "partition does not refine level " + std::to_string(n - 1), n);
    const HitDigraph projected = project_digraph(level.digraph, level.partition, prev.partition);
    if (projected != prev.digraph)
      throw ChainError(os.str() + "digraph projects to " + to_string(projected) + ", not to level " +
                           std::to_string(n - 1) + "'s " + to_string(prev.digraph),
                       n);
  }
}

}  // namespace omegastar
