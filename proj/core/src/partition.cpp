#include "omegastar/partition.hpp"

#include <algorithm>
#include <sstream>

namespace omegastar {

ClopenPartition::ClopenPartition(std::vector<EpSet> classes) : classes_(std::move(classes)) {
  for (const auto& c : classes_) {
    threshold_ = std::max(threshold_, c.threshold());
    period_ = lcm(period_, c.period());
  }
  head_.resize(static_cast<std::size_t>(threshold_));
  tail_.resize(static_cast<std::size_t>(period_));
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    for (Int n = 0; n < threshold_; ++n)
      if (classes_[i].contains(n)) head_[static_cast<std::size_t>(n)] = i;
    for (Int r = 0; r < period_; ++r)
      if (classes_[i].contains(threshold_ + r)) tail_[static_cast<std::size_t>(r)] = i;
  }
}

ClopenPartition ClopenPartition::make(std::vector<EpSet> sets) {
  if (sets.empty()) throw PartitionError("partition: no classes", 0);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (!sets[i].is_infinite()) {
      std::ostringstream os;
      os << "partition: class " << i << " is finite";
      throw PartitionError(os.str(), i);
    }
  }
  EpSet covered = EpSet::empty();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (intersect(sets[i], sets[j]).is_infinite()) {
        std::ostringstream os;
        os << "partition: classes " << i << " and " << j << " have infinite intersection";
        throw PartitionError(os.str(), i);
      }
    }
    covered = set_union(covered, sets[i]);
  }
  if (!covered.is_cofinite()) throw PartitionError("partition: union of classes is co-infinite", sets.size() - 1);

  // Stray points all lie below the largest class threshold.
  Int top = 0;
  for (const auto& s : sets) top = std::max(top, s.threshold());
  std::vector<std::size_t> owner(static_cast<std::size_t>(top), 0);
  for (Int n = 0; n < top; ++n) {
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (sets[i].contains(n)) {
        owner[static_cast<std::size_t>(n)] = i;
        break;
      }
    }
  }
  std::vector<EpSet> classes;
  classes.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::vector<Int> keep;
    for (Int n = 0; n < top; ++n)
      if (owner[static_cast<std::size_t>(n)] == i) keep.push_back(n);
    // Replace the head [0, top) of class i by exactly the owned points.
    const EpSet tail = difference(sets[i], EpSet::finite(sets[i].members_below(top)));
    classes.push_back(set_union(tail, EpSet::finite(keep)));
  }
  return ClopenPartition(std::move(classes));
}

ClopenPartition ClopenPartition::residues(Int modulus) {
  std::vector<EpSet> sets;
  for (Int r = 0; r < modulus; ++r) sets.push_back(EpSet::residue_class(modulus, r));
  return make(std::move(sets));
}

std::size_t ClopenPartition::class_of(Int n) const {
  if (n < threshold_) return head_[static_cast<std::size_t>(n)];
  return tail_[static_cast<std::size_t>((n - threshold_) % period_)];
}

ClopenPartition common_refinement(const ClopenPartition& v, const ClopenPartition& w) {
  std::vector<EpSet> sets;
  for (const auto& a : v.classes())
    for (const auto& b : w.classes())
      if (auto c = intersect(a, b); c.is_infinite()) sets.push_back(std::move(c));
  std::sort(sets.begin(), sets.end(),
            [](const EpSet& x, const EpSet& y) { return *x.next_at_or_after(0) < *y.next_at_or_after(0); });
  return ClopenPartition::make(std::move(sets));
}

std::optional<std::vector<std::size_t>> refinement_map(const ClopenPartition& w,
                                                       const ClopenPartition& v) {
  std::vector<std::size_t> parent(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::size_t hits = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (almost_subset(w[i], v[j])) {
        parent[i] = j;
        ++hits;
      }
    }
    if (hits != 1) return std::nullopt;
  }
  return parent;
}

bool refines(const ClopenPartition& w, const ClopenPartition& v) {
  return refinement_map(w, v).has_value();
}

}  // namespace omegastar
