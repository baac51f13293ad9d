// Mod-finite permutations of ω given by residue-class-wise affine pieces.
//
// A Permutation is a finite exception table together with finitely many
// pieces; each piece maps an arithmetic progression affinely onto another
// arithmetic progression. Piece domains (and piece images) are pairwise
// disjoint and together cover all but finitely many naturals, so the map
// restricts to a bijection between two cofinite sets and induces a trivial
// homeomorphism of ω*. Residue shifts n ↦ n + c(n mod Λ) are the special
// case where every piece has equal domain and image steps.
//
// The class is closed under compose, invert and conjugation of the
// successor. All values are immutable.

#ifndef OMEGASTAR_PERMUTATION_HPP
#define OMEGASTAR_PERMUTATION_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "omegastar/ep_set.hpp"

namespace omegastar {

/// {start + step·k : k ≥ 0}.
struct Progression {
  Int start = 0;
  Int step = 1;

  Int at(Int k) const { return start + step * k; }
  bool contains(Int n) const { return n >= start && (n - start) % step == 0; }
  friend bool operator==(const Progression&, const Progression&) = default;
};

/// domain.at(k) ↦ image.at(k).
struct AffinePiece {
  Progression domain;
  Progression image;

  Int apply(Int n) const { return image.start + image.step * ((n - domain.start) / domain.step); }
  friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

/// The spec-style residue shift view: value(n) = n + offsets[n mod period]
/// for n ≥ threshold, exceptions below.
struct ResidueShiftForm {
  Int threshold = 0;
  std::map<Int, Int> exceptions;
  Int period = 1;
  std::vector<Int> offsets;
};

class Permutation {
 public:
  /// The identity.
  Permutation();

  /// Builds and normalizes; does not validate (see validate()).
  Permutation(std::map<Int, Int> exceptions, std::vector<AffinePiece> pieces);

  static Permutation identity();
  static Permutation successor();
  static Permutation predecessor();
  /// n ↦ n + k for k ≥ 0.
  static Permutation translation(Int k);

  /// Residue shift with undefined points of [0, threshold) absent from the
  /// exception table.
  static Permutation from_residue_shift(const ResidueShiftForm& form);

  /// Fit a map known to be affine on each residue class mod `modulus` from
  /// `threshold` on. Values below the threshold become exceptions. The fit
  /// is cross-checked at a third point per class; a mismatch or a
  /// non-increasing class throws std::logic_error.
  static Permutation fit(const std::function<std::optional<Int>(Int)>& eval, Int modulus,
                         Int threshold);

  std::optional<Int> apply(Int n) const;

  const std::map<Int, Int>& exceptions() const { return exceptions_; }
  const std::vector<AffinePiece>& pieces() const { return pieces_; }

  /// Least t such that every n ≥ t lies in a piece domain (for a valid map).
  Int threshold() const;

  /// Pieces whose domain meets the residue class of n; used for lookups.
  const AffinePiece* piece_for(Int n) const;

  /// Present when every piece has equal domain and image step and the
  /// common period stays below max_period.
  std::optional<ResidueShiftForm> as_residue_shift(Int max_period = 1 << 16) const;

  /// Exact functional equality.
  friend bool operator==(const Permutation& p, const Permutation& q);

 private:
  void normalize();
  void build_index();

  std::map<Int, Int> exceptions_;
  std::vector<AffinePiece> pieces_;
  // step -> (residue -> piece index)
  std::map<Int, std::map<Int, std::size_t>> index_;
};

struct Validation {
  bool ok = true;
  std::string message;
  explicit operator bool() const { return ok; }
};

/// Checks injectivity, cofinite domain and cofinite image exactly.
Validation validate(const Permutation& p);
/// Throws std::invalid_argument with the diagnostic when p is invalid.
void require_valid(const Permutation& p, const char* what);

/// p ∘ q.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation invert(const Permutation& p);

/// p(n) = q(n) for all but finitely many n.
bool almost_equal_perm(const Permutation& p, const Permutation& q);

/// Largest period image_of_set will materialize.
inline constexpr Int kMaxImagePeriod = Int{1} << 22;

/// {p(a) : a ∈ A ∩ dom(p)}. Throws std::length_error when the exact image
/// would need a period above kMaxImagePeriod.
EpSet image_of_set(const Permutation& p, const EpSet& a);

/// f ∘ s ∘ f⁻¹.
Permutation conjugate_successor(const Permutation& f);
/// f ∘ s⁻¹ ∘ f⁻¹.
Permutation conjugate_predecessor(const Permutation& f);

}  // namespace omegastar

#endif  // OMEGASTAR_PERMUTATION_HPP
