#include "oracle.hpp"

#include <sstream>

namespace omegastar::tools {

Int transition_threshold(const Permutation& h, const ClopenPartition& v) {
  Int t = std::max(h.threshold(), v.threshold());
  for (const auto& pc : h.pieces()) {
    if (pc.image.start >= v.threshold()) continue;
    const Int k = (v.threshold() - pc.image.start + pc.image.step - 1) / pc.image.step;
    t = std::max(t, pc.domain.at(k));
  }
  return t;
}

Int transition_window(const Permutation& h, const ClopenPartition& v) {
  const Int p = v.period();
  Int w = p;
  for (const auto& pc : h.pieces()) {
    const Int sub = lcm(pc.domain.step, p);
    const Int image_step = pc.image.step * (sub / pc.domain.step);
    w = lcm(w, sub * (lcm(image_step, p) / image_step));
  }
  return w;
}

TransitionCensus census(const Permutation& h, const ClopenPartition& v, Int prefix) {
  TransitionCensus c;
  c.threshold = transition_threshold(h, v);
  c.window = transition_window(h, v);
  const std::size_t k = v.size();
  c.counts.assign(k, std::vector<Int>(k, 0));
  c.windows_hit.assign(k, std::vector<Int>(k, 0));
  std::vector<std::vector<bool>> seen(k, std::vector<bool>(k, false));
  Int in_window = 0;
  for (Int x = c.threshold; x < prefix; ++x) {
    const std::size_t i = v.class_of(x), j = v.class_of(*h.apply(x));
    ++c.counts[i][j];
    seen[i][j] = true;
    if (++in_window == c.window) {
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
          c.windows_hit[a][b] += seen[a][b];
          seen[a][b] = false;
        }
      ++c.windows;
      in_window = 0;
    }
  }
  return c;
}

std::string census_mismatch(const TransitionCensus& c, const HitDigraph& g) {
  std::ostringstream os;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (!g.has_edge(i, j) && c.counts[i][j] > 0) {
        os << c.counts[i][j] << " stray transitions " << i << " -> " << j << " beyond " << c.threshold;
        return os.str();
      }
      if (g.has_edge(i, j) && c.windows_hit[i][j] < c.windows) {
        os << "edge (" << i << "," << j << ") witnessed in only " << c.windows_hit[i][j] << " of " << c.windows
           << " windows of length " << c.window;
        return os.str();
      }
    }
  }
  return {};
}

}  // namespace omegastar::tools
