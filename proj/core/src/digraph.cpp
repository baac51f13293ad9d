#include "omegastar/digraph.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>

namespace omegastar {

HitDigraph HitDigraph::from_edges(std::size_t size, const std::vector<Edge>& edges) {
  HitDigraph g(size);
  for (const auto& [a, b] : edges) {
    if (a >= size || b >= size) throw std::out_of_range("digraph: edge endpoint out of range");
    g.add_edge(a, b);
  }
  return g;
}

HitDigraph HitDigraph::all_loops(std::size_t size) {
  HitDigraph g(size);
  for (std::size_t v = 0; v < size; ++v) g.add_edge(v, v);
  return g;
}

HitDigraph HitDigraph::complete(std::size_t size) {
  HitDigraph g(size);
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b) g.add_edge(a, b);
  return g;
}

HitDigraph HitDigraph::cycle(std::size_t size) {
  HitDigraph g(size);
  for (std::size_t v = 0; v < size; ++v) g.add_edge(v, (v + 1) % size);
  return g;
}

void HitDigraph::add_edge(std::size_t from, std::size_t to) {
  if (from >= size_ || to >= size_) throw std::out_of_range("digraph: edge endpoint out of range");
  adj_[from * size_ + to] = true;
}

std::vector<Edge> HitDigraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t a = 0; a < size_; ++a)
    for (std::size_t b = 0; b < size_; ++b)
      if (has_edge(a, b)) out.emplace_back(a, b);
  return out;
}

std::size_t HitDigraph::edge_count() const {
  std::size_t c = 0;
  for (bool b : adj_) c += b;
  return c;
}

std::vector<std::size_t> HitDigraph::successors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < size_; ++w)
    if (has_edge(v, w)) out.push_back(w);
  return out;
}

namespace {

// Vertices reachable from v by paths with at least one edge.
std::vector<bool> reach_plus(const HitDigraph& g, std::size_t v) {
  std::vector<bool> seen(g.size(), false);
  std::deque<std::size_t> queue;
  for (std::size_t w : g.successors(v)) {
    if (!seen[w]) {
      seen[w] = true;
      queue.push_back(w);
    }
  }
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t w : g.successors(u)) {
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

bool is_transitive(const HitDigraph& g) {
  if (g.size() == 0) return false;
  // Strongly connected with every vertex on a cycle: vertex 0 reaches all
  // vertices (itself included) and all vertices reach 0.
  const auto from0 = reach_plus(g, 0);
  for (bool b : from0)
    if (!b) return false;
  for (std::size_t v = 1; v < g.size(); ++v)
    if (!reach_plus(g, v)[0]) return false;
  return true;
}

HitDigraph reverse(const HitDigraph& g) {
  HitDigraph r(g.size());
  for (const auto& [a, b] : g.edges()) r.add_edge(b, a);
  return r;
}

std::optional<std::vector<std::size_t>> chain_path(const HitDigraph& g, std::size_t from,
                                                   std::size_t to) {
  if (from >= g.size() || to >= g.size()) throw std::out_of_range("chain_path: vertex out of range");
  // BFS over first-step successors; parent[w] is the predecessor of w.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(g.size(), kNone);
  std::vector<bool> seen(g.size(), false);
  std::deque<std::size_t> queue;
  for (std::size_t w : g.successors(from)) {
    seen[w] = true;
    parent[w] = from;
    queue.push_back(w);
  }
  while (!queue.empty() && !seen[to]) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t w : g.successors(u)) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = u;
        queue.push_back(w);
      }
    }
  }
  if (!seen[to]) return std::nullopt;
  std::vector<std::size_t> path{to};
  std::size_t cur = to;
  do {
    cur = parent[cur];
    path.push_back(cur);
  } while (cur != from || path.size() < 2);
  // When from == to, parent chains end on `from` after ≥ 1 step.
  return std::vector<std::size_t>(path.rbegin(), path.rend());
}

std::string to_string(const HitDigraph& g) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [a, b] : g.edges()) {
    if (!first) os << ',';
    first = false;
    os << '(' << a << ',' << b << ')';
  }
  os << '}';
  return os.str();
}

}  // namespace omegastar
