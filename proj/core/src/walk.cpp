#include "omegastar/walk.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace omegastar {

std::size_t WalkSpec::level_at(std::size_t n) const {
  std::size_t level = 0;
  for (const auto& m : level_marks)
    if (m.start <= n) level = m.level;
  return level;
}

namespace {

// Shortest path from `from` to the first vertex satisfying `goal` (at least
// one edge), excluding `from`; successors are explored in index order.
template <class Goal>
std::optional<std::vector<std::size_t>> bfs_path(const HitDigraph& g, std::size_t from, Goal goal) {
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(g.size(), kNone);
  std::vector<bool> seen(g.size(), false);
  std::deque<std::size_t> queue{from};
  bool first = true;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    if (!first && goal(u)) {
      std::vector<std::size_t> path{u};
      for (std::size_t cur = parent[u]; cur != from; cur = parent[cur]) path.push_back(cur);
      path.push_back(from);
      std::reverse(path.begin(), path.end());
      return path;
    }
    first = false;
    for (std::size_t w : g.successors(u)) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = u;
        queue.push_back(w);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::size_t> edge_covering_closed_walk(const HitDigraph& g, std::optional<std::size_t> start) {
  if (!is_transitive(g))
    throw std::invalid_argument("edge_covering_closed_walk: digraph " + to_string(g) + " is not transitive");
  const std::size_t s = start.value_or(0);
  if (s >= g.size()) throw std::out_of_range("edge_covering_closed_walk: start vertex out of range");

  const std::size_t n = g.size();
  std::vector<bool> covered(n * n, false);
  std::size_t remaining = g.edge_count();
  auto cover = [&](std::size_t a, std::size_t b) {
    if (!covered[a * n + b]) {
      covered[a * n + b] = true;
      --remaining;
    }
  };
  auto uncovered_out = [&](std::size_t v) {
    std::vector<std::size_t> out;
    for (std::size_t w : g.successors(v))
      if (!covered[v * n + w]) out.push_back(w);
    return out;
  };

  std::vector<std::size_t> walk{s};
  while (remaining > 0) {
    const std::size_t cur = walk.back();
    if (remaining == 1 && g.has_edge(cur, s) && !covered[cur * n + s]) break;  // the wrap covers it
    const auto options = uncovered_out(cur);
    if (!options.empty()) {
      std::size_t next = options.front();
      if (cur != s && next == s && options.size() > 1) next = options[1];
      cover(cur, next);
      walk.push_back(next);
      continue;
    }
    const auto path = bfs_path(g, cur, [&](std::size_t v) { return !uncovered_out(v).empty(); });
    std::size_t prev = cur;
    for (std::size_t i = 1; i < path->size(); ++i) {
      cover(prev, (*path)[i]);
      prev = (*path)[i];
      walk.push_back(prev);
    }
  }
  // Close the walk: the cycle convention wraps back to walk.front().
  if (!g.has_edge(walk.back(), s)) {
    const auto path = bfs_path(g, walk.back(), [&](std::size_t v) { return v == s; });
    for (std::size_t i = 1; i + 1 < path->size(); ++i) walk.push_back((*path)[i]);
  }
  return walk;
}

namespace {

struct ResolvedWalk {
  std::vector<const EpSet*> prelude;  // set visited at each prelude step
  std::vector<std::size_t> prelude_ids;
  std::vector<std::size_t> cycle;  // class indices at the finest level
  const ClopenPartition* finest = nullptr;
  std::size_t finest_id_base = 0;  // id of finest class c is base + c
};

ResolvedWalk resolve(const WalkSpec& walk, std::span<const ClopenPartition> levels) {
  if (levels.empty()) throw std::invalid_argument("greedy_enumerator: no partitions");
  if (walk.cycle.empty()) throw std::invalid_argument("greedy_enumerator: empty cycle");
  const std::size_t last = levels.size() - 1;
  if (walk.level_at(walk.prelude.size()) != last)
    throw std::invalid_argument("greedy_enumerator: the cycle must run at the finest level");
  std::vector<std::size_t> base(levels.size(), 0);
  for (std::size_t l = 1; l < levels.size(); ++l) base[l] = base[l - 1] + levels[l - 1].size();

  ResolvedWalk r;
  r.finest = &levels[last];
  r.finest_id_base = base[last];
  for (std::size_t i = 0; i < walk.prelude.size(); ++i) {
    const std::size_t level = walk.level_at(i);
    if (level >= levels.size()) throw std::out_of_range("greedy_enumerator: level mark out of range");
    const std::size_t c = walk.prelude[i];
    if (c >= levels[level].size()) {
      std::ostringstream os;
      os << "greedy_enumerator: prelude step " << i << " visits class " << c << " of a " << levels[level].size()
         << "-class partition";
      throw std::out_of_range(os.str());
    }
    r.prelude.push_back(&levels[level][c]);
    r.prelude_ids.push_back(base[level] + c);
  }
  std::vector<bool> visited(r.finest->size(), false);
  for (std::size_t c : walk.cycle) {
    if (c >= r.finest->size()) {
      std::ostringstream os;
      os << "greedy_enumerator: cycle visits class " << c << " of a " << r.finest->size() << "-class partition";
      throw std::out_of_range(os.str());
    }
    visited[c] = true;
  }
  for (std::size_t c = 0; c < visited.size(); ++c) {
    if (!visited[c]) {
      std::ostringstream os;
      os << "greedy_enumerator: cycle never visits class " << c << ", so the enumerator is not onto";
      throw std::invalid_argument(os.str());
    }
  }
  r.cycle = walk.cycle;
  return r;
}

std::vector<Int> replay(const ResolvedWalk& r, std::size_t steps) {
  std::vector<Int> out;
  out.reserve(steps);
  std::vector<bool> used;
  std::map<std::size_t, Int> cursor;
  for (std::size_t n = 0; n < steps; ++n) {
    const bool in_prelude = n < r.prelude.size();
    const std::size_t cls = in_prelude ? 0 : r.cycle[(n - r.prelude.size()) % r.cycle.size()];
    const EpSet& set = in_prelude ? *r.prelude[n] : (*r.finest)[cls];
    const std::size_t id = in_prelude ? r.prelude_ids[n] : r.finest_id_base + cls;
    Int x = *set.next_at_or_after(cursor[id]);
    while (x < static_cast<Int>(used.size()) && used[static_cast<std::size_t>(x)])
      x = *set.next_at_or_after(x + 1);
    if (x >= static_cast<Int>(used.size())) used.resize(static_cast<std::size_t>(2 * x + 16), false);
    used[static_cast<std::size_t>(x)] = true;
    cursor[id] = x + 1;
    out.push_back(x);
  }
  return out;
}

}  // namespace

std::vector<Int> simulate_greedy(const WalkSpec& walk, std::span<const ClopenPartition> levels, std::size_t steps) {
  return replay(resolve(walk, levels), steps);
}

Permutation greedy_enumerator(const WalkSpec& walk, const ClopenPartition& v) {
  if (!walk.level_marks.empty()) {
    for (const auto& m : walk.level_marks)
      if (m.level != 0) throw std::invalid_argument("greedy_enumerator: level marks need a partition chain");
  }
  return greedy_enumerator(walk, std::span<const ClopenPartition>(&v, 1));
}

Permutation greedy_enumerator(const WalkSpec& walk, std::span<const ClopenPartition> levels) {
  const ResolvedWalk r = resolve(walk, levels);
  const Int prelude_len = static_cast<Int>(r.prelude.size());
  const Int cycle_len = static_cast<Int>(r.cycle.size());
  const std::vector<Int> prelude_values = replay(r, r.prelude.size());

  // Classes with the prelude's picks removed; the cycle then enumerates
  // each of them in increasing order.
  const EpSet consumed = EpSet::finite(prelude_values);
  const std::size_t k = r.finest->size();
  std::vector<EpSet> remaining;
  std::vector<Int> visits(k, 0);
  std::vector<Int> occurrence(r.cycle.size());
  for (std::size_t c = 0; c < k; ++c) remaining.push_back(difference((*r.finest)[c], consumed));
  for (std::size_t i = 0; i < r.cycle.size(); ++i) occurrence[i] = visits[r.cycle[i]]++;

  Int modulus_factor = 1;
  Int warmup_cycles = 0;
  for (std::size_t c = 0; c < k; ++c) {
    const Int d = remaining[c].ones_per_period();
    modulus_factor = lcm(modulus_factor, d / gcd(visits[c], d));
    const Int j0 = remaining[c].ones_in_prefix();
    warmup_cycles = std::max(warmup_cycles, (j0 + visits[c] - 1) / visits[c]);
  }
  const Int modulus = cycle_len * modulus_factor;
  const Int threshold = prelude_len + cycle_len * warmup_cycles;

  auto eval = [&](Int n) -> std::optional<Int> {
    if (n < prelude_len) return prelude_values[static_cast<std::size_t>(n)];
    const Int q = (n - prelude_len) / cycle_len;
    const std::size_t pos = static_cast<std::size_t>((n - prelude_len) % cycle_len);
    const std::size_t c = r.cycle[pos];
    return remaining[c].enumerate(q * visits[c] + occurrence[pos]);
  };
  Permutation f = Permutation::fit(eval, modulus, threshold);

  const std::size_t check_steps = static_cast<std::size_t>(10 * modulus + threshold);
  const std::vector<Int> replayed = replay(r, check_steps);
  for (std::size_t n = 0; n < check_steps; ++n) {
    if (f.apply(static_cast<Int>(n)) != replayed[n]) {
      std::ostringstream os;
      os << "greedy_enumerator: closed form disagrees with greedy replay at step " << n;
      throw std::logic_error(os.str());
    }
  }
  if (auto v = validate(f); !v) throw std::logic_error("greedy_enumerator: closed form invalid: " + v.message);
  return f;
}

}  // namespace omegastar
