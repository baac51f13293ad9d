#include <gtest/gtest.h>

#include "omegastar/walk.hpp"
#include "support.hpp"

using namespace omegastar;

namespace {

using Cycle = std::vector<std::size_t>;

void expect_covering(const HitDigraph& g, const Cycle& w) {
  ASSERT_FALSE(w.empty());
  std::set<Edge> seen;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Edge e{w[i], w[(i + 1) % w.size()]};
    ASSERT_TRUE(g.has_edge(e.first, e.second)) << "step " << i;
    seen.insert(e);
  }
  EXPECT_EQ(seen.size(), g.edge_count());
  EXPECT_LE(w.size(), g.edge_count() * (g.size() + 1));
}

std::vector<Int> greedy_values(const Permutation& f, std::size_t n) {
  std::vector<Int> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(*f.apply(static_cast<Int>(i)));
  return out;
}

}  // namespace

TEST(Walk, Examples) {
  EXPECT_EQ(edge_covering_closed_walk(HitDigraph::all_loops(1)), (Cycle{0}));
  EXPECT_EQ(edge_covering_closed_walk(HitDigraph::cycle(2)), (Cycle{0, 1}));
  EXPECT_EQ(edge_covering_closed_walk(HitDigraph::complete(2)), (Cycle{0, 0, 1, 1}));
  EXPECT_THROW(edge_covering_closed_walk(HitDigraph::from_edges(2, {{0, 1}})), std::invalid_argument);
  EXPECT_EQ(edge_covering_closed_walk(HitDigraph::cycle(3), 2), (Cycle{2, 0, 1}));
}

TEST(WalkProperty, CoversEveryEdgeOfSmallDigraphs) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& g : support::all_digraphs(n)) {
      if (!support::transitive_oracle(g)) continue;
      for (std::size_t s = 0; s < n; ++s) {
        const auto w = edge_covering_closed_walk(g, s);
        EXPECT_EQ(w.front(), s);
        expect_covering(g, w);
      }
    }
}

TEST(WalkProperty, CoversEveryEdgeOfRandomDigraphs) {
  support::Rng rng(51);
  for (int i = 0; i < 200; ++i) {
    const auto g = support::random_transitive(rng, static_cast<std::size_t>(support::uniform(rng, 1, 8)),
                                              support::uniform(rng, 0, 5) / 10.0);
    expect_covering(g, edge_covering_closed_walk(g));
    EXPECT_EQ(edge_covering_closed_walk(g), edge_covering_closed_walk(g));
  }
}

TEST(Greedy, Examples) {
  const auto eo = ClopenPartition::residues(2);
  EXPECT_EQ(greedy_enumerator({{}, {0, 1}, {}}, eo), Permutation::identity());
  const auto f = greedy_enumerator({{}, {0, 0, 1, 1}, {}}, eo);
  EXPECT_EQ(greedy_values(f, 8), (std::vector<Int>{0, 2, 1, 3, 4, 6, 5, 7}));
  for (Int n = 0; n < 400; ++n) {
    const Int expect = n % 4 == 1 ? n + 1 : n % 4 == 2 ? n - 1 : n;
    EXPECT_EQ(f.apply(n), expect);
  }
  EXPECT_EQ(greedy_enumerator({{}, {0}, {}}, ClopenPartition::residues(1)), Permutation::identity());
}

TEST(Greedy, Errors) {
  const auto eo = ClopenPartition::residues(2);
  EXPECT_THROW(greedy_enumerator({{}, {0, 2}, {}}, eo), std::out_of_range);
  EXPECT_THROW(greedy_enumerator({{5}, {0, 1}, {}}, eo), std::out_of_range);
  EXPECT_THROW(greedy_enumerator({{}, {0, 0}, {}}, eo), std::invalid_argument);  // never visits odds
  EXPECT_THROW(greedy_enumerator({{}, {}, {}}, eo), std::invalid_argument);
}

TEST(GreedyProperty, MatchesNaiveGreedy) {
  support::Rng rng(52);
  for (int i = 0; i < 150; ++i) {
    const auto raw = support::random_partition(rng);
    const auto v = raw.partition();
    WalkSpec walk;
    for (Int k = support::uniform(rng, 0, 6); k > 0; --k)
      walk.prelude.push_back(static_cast<std::size_t>(support::uniform(rng, 0, static_cast<Int>(raw.classes) - 1)));
    for (std::size_t c = 0; c < raw.classes; ++c) walk.cycle.push_back(c);
    for (Int k = support::uniform(rng, 0, 5); k > 0; --k)
      walk.cycle.push_back(static_cast<std::size_t>(support::uniform(rng, 0, static_cast<Int>(raw.classes) - 1)));
    std::shuffle(walk.cycle.begin(), walk.cycle.end(), rng);
    const auto f = greedy_enumerator(walk, v);
    EXPECT_TRUE(validate(f));
    const auto naive = support::naive_greedy([&](std::size_t n, Int x) { return raw.class_of(x) == walk.at(n); }, 1500);
    EXPECT_EQ(greedy_values(f, naive.size()), naive);
  }
}

TEST(GreedyProperty, MultiLevelMatchesNaiveGreedy) {
  support::Rng rng(53);
  const std::vector<support::RawPartition> raws{support::residues(2), support::residues(4), support::residues(12)};
  std::vector<ClopenPartition> levels;
  for (const auto& r : raws) levels.push_back(r.partition());
  for (int i = 0; i < 60; ++i) {
    WalkSpec walk;
    for (std::size_t l = 0; l < raws.size(); ++l) {
      const Int len = l + 1 == raws.size() ? 0 : support::uniform(rng, 0, 5);
      if (len == 0 && l + 1 != raws.size()) continue;
      walk.level_marks.push_back({walk.prelude.size(), l});
      for (Int k = 0; k < len; ++k)
        walk.prelude.push_back(static_cast<std::size_t>(support::uniform(rng, 0, static_cast<Int>(raws[l].classes) - 1)));
    }
    for (std::size_t c = 0; c < 12; ++c) walk.cycle.push_back(c);
    std::shuffle(walk.cycle.begin(), walk.cycle.end(), rng);
    const auto f = greedy_enumerator(walk, std::span<const ClopenPartition>(levels));
    const auto naive = support::naive_greedy(
        [&](std::size_t n, Int x) { return raws[walk.level_at(n)].class_of(x) == walk.at(n); }, 1500);
    EXPECT_EQ(greedy_values(f, naive.size()), naive);
    EXPECT_EQ(simulate_greedy(walk, levels, naive.size()), naive);
  }
}
