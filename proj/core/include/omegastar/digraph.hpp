// Directed graphs on partition classes (loops allowed, no multi-edges).

#ifndef OMEGASTAR_DIGRAPH_HPP
#define OMEGASTAR_DIGRAPH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace omegastar {

using Edge = std::pair<std::size_t, std::size_t>;

class HitDigraph {
 public:
  HitDigraph() = default;
  explicit HitDigraph(std::size_t size) : size_(size), adj_(size * size, false) {}
  /// Throws std::out_of_range on an endpoint ≥ size.
  static HitDigraph from_edges(std::size_t size, const std::vector<Edge>& edges);

  static HitDigraph all_loops(std::size_t size);
  /// Every ordered pair, loops included.
  static HitDigraph complete(std::size_t size);
  /// 0 → 1 → ⋯ → size-1 → 0.
  static HitDigraph cycle(std::size_t size);

  std::size_t size() const { return size_; }
  void add_edge(std::size_t from, std::size_t to);
  bool has_edge(std::size_t from, std::size_t to) const { return adj_[from * size_ + to]; }
  /// Lexicographically sorted.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;
  std::vector<std::size_t> successors(std::size_t v) const;

  friend bool operator==(const HitDigraph&, const HitDigraph&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<bool> adj_;
};

/// Every ordered pair (v, w), v = w included, is joined by a path with at
/// least one edge. A lone vertex therefore needs a loop.
bool is_transitive(const HitDigraph& g);

/// Edge (i, j) iff (j, i) in g.
HitDigraph reverse(const HitDigraph& g);

/// Shortest vertex sequence of length ≥ 2 from `from` to `to` along edges,
/// lowest index first on ties.
std::optional<std::vector<std::size_t>> chain_path(const HitDigraph& g, std::size_t from,
                                                   std::size_t to);

/// "{(0,1),(1,0)}" style rendering for diagnostics.
std::string to_string(const HitDigraph& g);

}  // namespace omegastar

#endif  // OMEGASTAR_DIGRAPH_HPP
