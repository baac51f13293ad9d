// Finite partitions of ω into infinite eventually periodic classes; each
// such partition names a partition of ω* into clopen sets.

#ifndef OMEGASTAR_PARTITION_HPP
#define OMEGASTAR_PARTITION_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "omegastar/ep_set.hpp"

namespace omegastar {

class PartitionError : public std::invalid_argument {
 public:
  PartitionError(const std::string& what, std::size_t index)
      : std::invalid_argument(what), index_(index) {}
  /// Offending class (first index of an offending pair).
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

class ClopenPartition {
 public:
  /// Validates the classes mod finite and normalizes to an exact partition
  /// of ω: a point in no class goes to class 0, a point in several classes
  /// stays only in the lowest-index one. Throws PartitionError.
  static ClopenPartition make(std::vector<EpSet> sets);

  /// Residue classes mod k, in residue order.
  static ClopenPartition residues(Int modulus);

  std::size_t size() const { return classes_.size(); }
  const std::vector<EpSet>& classes() const { return classes_; }
  const EpSet& operator[](std::size_t i) const { return classes_[i]; }

  /// Index of the class containing n.
  std::size_t class_of(Int n) const;

  /// Beyond threshold() membership of every class is periodic with period().
  Int threshold() const { return threshold_; }
  Int period() const { return period_; }

  friend bool operator==(const ClopenPartition& a, const ClopenPartition& b) {
    return a.classes_ == b.classes_;
  }

 private:
  explicit ClopenPartition(std::vector<EpSet> classes);

  std::vector<EpSet> classes_;
  Int threshold_ = 0;
  Int period_ = 1;
  std::vector<std::size_t> head_;  // class_of for n < threshold
  std::vector<std::size_t> tail_;  // class_of for threshold + r, r < period
};

/// Classes are the infinite pairwise intersections, ordered by least element.
ClopenPartition common_refinement(const ClopenPartition& v, const ClopenPartition& w);

/// For each class of w, the unique class of v almost containing it; empty
/// when w does not refine v.
std::optional<std::vector<std::size_t>> refinement_map(const ClopenPartition& w,
                                                       const ClopenPartition& v);

/// Every class of w is almost contained in exactly one class of v.
bool refines(const ClopenPartition& w, const ClopenPartition& v);

}  // namespace omegastar

#endif  // OMEGASTAR_PARTITION_HPP
