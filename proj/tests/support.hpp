// Random generators and brute-force oracles shared by the unit tests and the
// acceptance runner. Oracles work on raw words, lookup tables and pointwise
// evaluation only.

#ifndef OMEGASTAR_TESTS_SUPPORT_HPP
#define OMEGASTAR_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "omegastar/digraph.hpp"
#include "omegastar/ep_set.hpp"
#include "omegastar/partition.hpp"
#include "omegastar/permutation.hpp"

namespace support {

using omegastar::Int;
using Rng = std::mt19937_64;

inline Int uniform(Rng& rng, Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); }
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

// ---- sets as raw words

struct Word {
  std::vector<bool> prefix;
  std::vector<bool> pattern;

  bool member(Int n) const {
    if (n < static_cast<Int>(prefix.size())) return prefix[static_cast<std::size_t>(n)];
    return pattern[static_cast<std::size_t>((n - static_cast<Int>(prefix.size())) % static_cast<Int>(pattern.size()))];
  }
  omegastar::EpSet set() const { return omegastar::EpSet::make(prefix, pattern); }
};

inline Word random_word(Rng& rng, Int max_prefix = 6, Int max_period = 6, double density = 0.5) {
  Word w;
  const Int t = uniform(rng, 0, max_prefix), p = uniform(rng, 1, max_period);
  for (Int i = 0; i < t; ++i) w.prefix.push_back(coin(rng, density));
  for (Int i = 0; i < p; ++i) w.pattern.push_back(coin(rng, density));
  return w;
}

inline Word infinite_word(Rng& rng, Int max_prefix = 6, Int max_period = 6) {
  Word w = random_word(rng, max_prefix, max_period);
  w.pattern[static_cast<std::size_t>(uniform(rng, 0, static_cast<Int>(w.pattern.size()) - 1))] = true;
  return w;
}

inline std::vector<bool> bits(const omegastar::EpSet& a, Int n) {
  std::vector<bool> out;
  for (Int i = 0; i < n; ++i) out.push_back(a.contains(i));
  return out;
}

// ---- partitions as lookup tables

struct RawPartition {
  std::size_t classes = 0;
  std::vector<std::size_t> head;     // class of n < head.size()
  std::vector<std::size_t> pattern;  // then periodic

  std::size_t class_of(Int n) const {
    if (n < static_cast<Int>(head.size())) return head[static_cast<std::size_t>(n)];
    return pattern[static_cast<std::size_t>((n - static_cast<Int>(head.size())) % static_cast<Int>(pattern.size()))];
  }
  Int threshold() const { return static_cast<Int>(head.size()); }
  Int period() const { return static_cast<Int>(pattern.size()); }

  omegastar::ClopenPartition partition() const {
    std::vector<omegastar::EpSet> sets;
    for (std::size_t c = 0; c < classes; ++c) {
      std::vector<bool> pre, pat;
      for (auto x : head) pre.push_back(x == c);
      for (auto x : pattern) pat.push_back(x == c);
      sets.push_back(omegastar::EpSet::make(pre, pat));
    }
    return omegastar::ClopenPartition::make(sets);
  }
};

/// period ≤ max_period, threshold ≤ max_threshold, every class infinite.
inline RawPartition random_partition(Rng& rng, Int max_period = 12, Int max_threshold = 16, std::size_t max_classes = 4) {
  RawPartition r;
  const Int p = uniform(rng, 2, max_period);
  r.classes = static_cast<std::size_t>(uniform(rng, 2, std::min<Int>(static_cast<Int>(max_classes), p)));
  for (Int i = 0; i < p; ++i) r.pattern.push_back(static_cast<std::size_t>(i) < r.classes ? static_cast<std::size_t>(i) : static_cast<std::size_t>(uniform(rng, 0, static_cast<Int>(r.classes) - 1)));
  std::shuffle(r.pattern.begin(), r.pattern.end(), rng);
  const Int t = uniform(rng, 0, max_threshold);
  for (Int i = 0; i < t; ++i) r.head.push_back(static_cast<std::size_t>(uniform(rng, 0, static_cast<Int>(r.classes) - 1)));
  return r;
}

inline RawPartition residues(Int m) {
  RawPartition r;
  r.classes = static_cast<std::size_t>(m);
  for (Int i = 0; i < m; ++i) r.pattern.push_back(static_cast<std::size_t>(i));
  return r;
}

// ---- permutations with a naive evaluator

/// A residue shift kept in its defining data.
struct RawShift {
  Int threshold = 0;
  std::map<Int, Int> exceptions;
  Int period = 1;
  std::vector<Int> offsets;

  std::optional<Int> operator()(Int n) const {
    if (n < threshold) {
      auto it = exceptions.find(n);
      if (it == exceptions.end()) return std::nullopt;
      return it->second;
    }
    return n + offsets[static_cast<std::size_t>(n % period)];
  }
  omegastar::Permutation perm() const {
    return omegastar::Permutation::from_residue_shift({threshold, exceptions, period, offsets});
  }
};

/// A valid (injective, cofinite domain and image) residue shift.
inline RawShift random_shift(Rng& rng, Int max_period = 12, Int max_threshold = 16) {
  RawShift s;
  s.period = uniform(rng, 1, max_period);
  s.threshold = uniform(rng, 0, max_threshold);
  std::vector<Int> target(static_cast<std::size_t>(s.period));
  std::iota(target.begin(), target.end(), Int{0});
  std::shuffle(target.begin(), target.end(), rng);
  for (Int r = 0; r < s.period; ++r) {
    const Int n0 = s.threshold + ((r - s.threshold) % s.period + s.period) % s.period;
    Int c = target[static_cast<std::size_t>(r)] - r + s.period * uniform(rng, -2, 2);
    while (n0 + c < 0) c += s.period;
    s.offsets.push_back(c);
  }
  // Values never reached from the tail, paired with a subset of [0, t).
  std::set<Int> image;
  Int top = s.threshold;
  for (Int c : s.offsets) top = std::max(top, s.threshold + s.period + std::abs(c));
  for (Int n = s.threshold; n < top + 4 * s.period; ++n) image.insert(n + s.offsets[static_cast<std::size_t>(n % s.period)]);
  std::vector<Int> missing;
  for (Int v = 0; v < top; ++v)
    if (!image.count(v)) missing.push_back(v);
  std::shuffle(missing.begin(), missing.end(), rng);
  std::vector<Int> keys(static_cast<std::size_t>(s.threshold));
  std::iota(keys.begin(), keys.end(), Int{0});
  std::shuffle(keys.begin(), keys.end(), rng);
  const std::size_t pairs = std::min(keys.size(), missing.size()) - (coin(rng, 0.2) && !keys.empty() && !missing.empty() ? 1 : 0);
  for (std::size_t i = 0; i < pairs; ++i) s.exceptions.emplace(keys[i], missing[i]);
  return s;
}

struct Leaf {
  Int residue, step;
};

inline std::vector<Leaf> random_cover(Rng& rng, const std::vector<Int>& splits) {
  std::vector<Leaf> leaves{{0, 1}};
  for (Int q : splits) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<Int>(leaves.size()) - 1));
    const Leaf l = leaves[i];
    leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(i));
    for (Int j = 0; j < q; ++j) leaves.push_back({l.residue + l.step * j, l.step * q});
  }
  return leaves;
}

/// A bijection of ω mapping the residue classes of one random tree cover
/// affinely onto those of another; domain and image steps generally differ.
struct RawAffine {
  std::vector<Leaf> domain, image;

  std::optional<Int> operator()(Int n) const {
    for (std::size_t i = 0; i < domain.size(); ++i)
      if (n % domain[i].step == domain[i].residue)
        return image[i].residue + image[i].step * (n / domain[i].step);
    return std::nullopt;
  }
  omegastar::Permutation perm() const {
    std::vector<omegastar::AffinePiece> pieces;
    for (std::size_t i = 0; i < domain.size(); ++i)
      pieces.push_back({{domain[i].residue, domain[i].step}, {image[i].residue, image[i].step}});
    return omegastar::Permutation({}, pieces);
  }
};

inline RawAffine random_affine(Rng& rng, Int max_splits = 4) {
  std::vector<Int> qs;
  const Int k = uniform(rng, 0, max_splits);
  for (Int i = 0; i < k; ++i) qs.push_back(uniform(rng, 2, 3));
  RawAffine a;
  a.domain = random_cover(rng, qs);
  std::shuffle(qs.begin(), qs.end(), rng);
  a.image = random_cover(rng, qs);
  std::shuffle(a.image.begin(), a.image.end(), rng);
  return a;
}

/// A random valid permutation with its naive evaluator and the steps of
/// its defining progressions.
struct Sample {
  omegastar::Permutation perm;
  std::function<std::optional<Int>(Int)> eval;
  std::vector<Int> steps;
};

inline Sample random_sample(Rng& rng) {
  if (coin(rng)) {
    auto raw = random_shift(rng);
    return {raw.perm(), raw, {raw.period}};
  }
  auto raw = random_affine(rng);
  std::vector<Int> steps;
  for (const auto& l : raw.domain) steps.push_back(l.step);
  for (const auto& l : raw.image) steps.push_back(l.step);
  return {raw.perm(), raw, steps};
}

// ---- digraphs

inline std::vector<std::vector<bool>> closure(const omegastar::HitDigraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r[i][j] = g.has_edge(i, j);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  return r;
}

inline bool transitive_oracle(const omegastar::HitDigraph& g) {
  if (g.size() == 0) return false;
  for (const auto& row : closure(g))
    for (bool b : row)
      if (!b) return false;
  return true;
}

/// Every digraph on n labelled vertices (loops allowed), by adjacency mask.
inline std::vector<omegastar::HitDigraph> all_digraphs(std::size_t n) {
  std::vector<omegastar::HitDigraph> out;
  const std::size_t bits = n * n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    omegastar::HitDigraph g(n);
    for (std::size_t b = 0; b < bits; ++b)
      if ((mask >> b) & 1U) g.add_edge(b / n, b % n);
    out.push_back(g);
  }
  return out;
}

inline omegastar::HitDigraph random_transitive(Rng& rng, std::size_t n, double extra = 0.3) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);
  omegastar::HitDigraph g(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(order[i], order[(i + 1) % n]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (coin(rng, extra)) g.add_edge(i, j);
  return g;
}

// ---- hit digraphs by pointwise evaluation

/// Edges observed among x -> h(x) for x in [from, from + window).
template <class Map>
omegastar::HitDigraph observed_digraph(const Map& h, const RawPartition& v, Int from, Int window) {
  omegastar::HitDigraph g(v.classes);
  for (Int x = from; x < from + window; ++x) {
    const auto y = h(x);
    if (y) g.add_edge(v.class_of(x), v.class_of(*y));
  }
  return g;
}

/// A period of the class-transition pattern of an affine map whose pieces
/// have the given steps.
inline Int transition_period(const std::vector<Int>& steps, Int partition_period) {
  Int l = partition_period;
  for (Int s : steps) l = std::lcm(l, s);
  return l * partition_period;
}

/// Naive greedy: f(n) = least x not used before with member(n, x), i.e. in
/// the class visited at step n.
template <class Member>
std::vector<Int> naive_greedy(Member member, std::size_t steps) {
  std::vector<Int> out;
  std::set<Int> used;
  for (std::size_t n = 0; n < steps; ++n) {
    Int x = 0;
    while (used.count(x) || !member(n, x)) ++x;
    used.insert(x);
    out.push_back(x);
  }
  return out;
}

}  // namespace support

#endif  // OMEGASTAR_TESTS_SUPPORT_HPP
