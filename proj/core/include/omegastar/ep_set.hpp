// Eventually periodic subsets of the natural numbers.
//
// An EpSet is an exact, canonical representative of a clopen subset of the
// remainder ω*: membership is given by a finite prefix word followed by a
// repeating pattern word. Values are immutable and every operation returns
// a canonical result, so structural equality is set equality.

#ifndef OMEGASTAR_EP_SET_HPP
#define OMEGASTAR_EP_SET_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace omegastar {

/// Natural numbers and integer offsets share one signed 64-bit type.
using Int = std::int64_t;

/// Membership word; bit i is the membership of the i-th position.
using Bits = std::vector<bool>;

class EpSet {
 public:
  /// The empty set.
  EpSet();

  /// membership(n) = prefix[n] for n < |prefix|, else
  /// pattern[(n - |prefix|) mod |pattern|]. Throws std::invalid_argument on
  /// an empty pattern.
  static EpSet make(Bits prefix, Bits pattern);

  static EpSet empty();
  static EpSet all();
  static EpSet evens();
  static EpSet odds();
  /// {n : n ≡ residue (mod modulus)}.
  static EpSet residue_class(Int modulus, Int residue);
  /// {start + step·k : k ≥ 0}.
  static EpSet progression(Int start, Int step);
  static EpSet finite(std::span<const Int> elements);

  bool contains(Int n) const;

  Int threshold() const { return static_cast<Int>(prefix_.size()); }
  Int period() const { return static_cast<Int>(pattern_.size()); }
  const Bits& prefix() const { return prefix_; }
  const Bits& pattern() const { return pattern_; }

  /// Number of members inside one pattern period.
  Int ones_per_period() const { return pattern_ones_; }
  /// Number of members below threshold().
  Int ones_in_prefix() const { return prefix_ones_; }

  bool is_infinite() const { return pattern_ones_ > 0; }
  bool is_cofinite() const { return pattern_ones_ == period(); }
  bool is_empty() const { return prefix_ones_ == 0 && pattern_ones_ == 0; }

  /// Smallest member ≥ n, if any.
  std::optional<Int> next_at_or_after(Int n) const;

  /// The i-th smallest member (0-indexed). Throws std::out_of_range when the
  /// set has at most i members.
  Int enumerate(Int i) const;

  /// |{m ∈ A : m < n}|.
  Int count_below(Int n) const;

  /// Members below n, ascending.
  std::vector<Int> members_below(Int n) const;

  friend bool operator==(const EpSet& a, const EpSet& b) {
    return a.prefix_ == b.prefix_ && a.pattern_ == b.pattern_;
  }

 private:
  EpSet(Bits prefix, Bits pattern);
  void canonicalize();

  Bits prefix_;
  Bits pattern_;
  Int prefix_ones_ = 0;
  Int pattern_ones_ = 0;
};

EpSet set_union(const EpSet& a, const EpSet& b);
EpSet intersect(const EpSet& a, const EpSet& b);
EpSet complement(const EpSet& a);
EpSet difference(const EpSet& a, const EpSet& b);
EpSet symmetric_difference(const EpSet& a, const EpSet& b);

/// A + k.
EpSet shift_up(const EpSet& a, Int k);
/// {a - k : a ∈ A, a ≥ k}.
EpSet shift_down(const EpSet& a, Int k);

/// Symmetric difference finite, i.e. equal as clopen subsets of ω*.
bool almost_equal(const EpSet& a, const EpSet& b);
/// A \ B finite.
bool almost_subset(const EpSet& a, const EpSet& b);

/// Human-readable "prefix|pattern" rendering, e.g. "01|1".
std::string to_string(const EpSet& a);

Int gcd(Int a, Int b);
/// Least common multiple; throws std::overflow_error past 2^62.
Int lcm(Int a, Int b);
/// Non-negative remainder.
inline Int floor_mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace omegastar

#endif  // OMEGASTAR_EP_SET_HPP
