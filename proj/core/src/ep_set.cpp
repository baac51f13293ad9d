#include "omegastar/ep_set.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace omegastar {

Int gcd(Int a, Int b) { return std::gcd(a, b); }

Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  const Int g = std::gcd(a, b);
  Int r = 0;
  if (__builtin_mul_overflow(a / g, b, &r) || r > (Int{1} << 62)) throw std::overflow_error("lcm exceeds 2^62");
  return r;
}

namespace {

// Smallest q dividing |w| such that w is q-periodic.
std::size_t minimal_period(const Bits& w) {
  const std::size_t p = w.size();
  for (std::size_t q = 1; q < p; ++q) {
    if (p % q != 0) continue;
    bool ok = true;
    for (std::size_t i = q; i < p && ok; ++i) ok = w[i] == w[i - q];
    if (ok) return q;
  }
  return p;
}

Int count_ones(const Bits& w) {
  return static_cast<Int>(std::count(w.begin(), w.end(), true));
}

// Apply a pointwise boolean operator on a common threshold and period.
template <class Op>
EpSet combine(const EpSet& a, const EpSet& b, Op op) {
  const Int t = std::max(a.threshold(), b.threshold());
  const Int p = lcm(a.period(), b.period());
  Bits prefix(static_cast<std::size_t>(t));
  Bits pattern(static_cast<std::size_t>(p));
  for (Int n = 0; n < t; ++n) prefix[n] = op(a.contains(n), b.contains(n));
  for (Int i = 0; i < p; ++i) pattern[i] = op(a.contains(t + i), b.contains(t + i));
  return EpSet::make(std::move(prefix), std::move(pattern));
}

}  // namespace

EpSet::EpSet() : prefix_(), pattern_(1, false) {}

EpSet::EpSet(Bits prefix, Bits pattern)
    : prefix_(std::move(prefix)), pattern_(std::move(pattern)) {
  canonicalize();
}

EpSet EpSet::make(Bits prefix, Bits pattern) {
  if (pattern.empty()) throw std::invalid_argument("EpSet: empty pattern");
  return EpSet(std::move(prefix), std::move(pattern));
}

void EpSet::canonicalize() {
  pattern_.resize(minimal_period(pattern_));
  // Absorb prefix positions that already follow the periodic tail.
  while (!prefix_.empty() && prefix_.back() == pattern_.back()) {
    const bool bit = prefix_.back();
    prefix_.pop_back();
    pattern_.insert(pattern_.begin(), bit);
    pattern_.pop_back();
  }
  prefix_ones_ = count_ones(prefix_);
  pattern_ones_ = count_ones(pattern_);
}

EpSet EpSet::empty() { return EpSet(); }
EpSet EpSet::all() { return EpSet({}, Bits{true}); }
EpSet EpSet::evens() { return residue_class(2, 0); }
EpSet EpSet::odds() { return residue_class(2, 1); }

EpSet EpSet::residue_class(Int modulus, Int residue) {
  if (modulus < 1) throw std::invalid_argument("residue_class: modulus must be >= 1");
  Bits pattern(static_cast<std::size_t>(modulus), false);
  pattern[static_cast<std::size_t>(floor_mod(residue, modulus))] = true;
  return EpSet({}, std::move(pattern));
}

EpSet EpSet::progression(Int start, Int step) {
  if (start < 0 || step < 1) throw std::invalid_argument("progression: need start >= 0, step >= 1");
  Bits pattern(static_cast<std::size_t>(step), false);
  pattern[0] = true;
  return EpSet(Bits(static_cast<std::size_t>(start), false), std::move(pattern));
}

EpSet EpSet::finite(std::span<const Int> elements) {
  Int top = 0;
  for (Int e : elements) {
    if (e < 0) throw std::invalid_argument("finite: negative element");
    top = std::max(top, e + 1);
  }
  Bits prefix(static_cast<std::size_t>(top), false);
  for (Int e : elements) prefix[static_cast<std::size_t>(e)] = true;
  return EpSet(std::move(prefix), Bits{false});
}

bool EpSet::contains(Int n) const {
  if (n < 0) return false;
  if (n < threshold()) return prefix_[static_cast<std::size_t>(n)];
  return pattern_[static_cast<std::size_t>((n - threshold()) % period())];
}

std::optional<Int> EpSet::next_at_or_after(Int n) const {
  n = std::max<Int>(n, 0);
  for (; n < threshold(); ++n)
    if (prefix_[static_cast<std::size_t>(n)]) return n;
  if (pattern_ones_ == 0) return std::nullopt;
  for (Int k = 0; k < period(); ++k)
    if (contains(n + k)) return n + k;
  return std::nullopt;  // unreachable
}

Int EpSet::enumerate(Int i) const {
  if (i < 0) throw std::out_of_range("enumerate: negative index");
  if (i < prefix_ones_) {
    for (Int n = 0;; ++n)
      if (prefix_[static_cast<std::size_t>(n)] && i-- == 0) return n;
  }
  if (pattern_ones_ == 0) throw std::out_of_range("enumerate: index beyond a finite set");
  const Int rest = i - prefix_ones_;
  const Int q = rest / pattern_ones_;
  Int r = rest % pattern_ones_;
  for (Int k = 0;; ++k)
    if (pattern_[static_cast<std::size_t>(k)] && r-- == 0) return threshold() + q * period() + k;
}

Int EpSet::count_below(Int n) const {
  if (n <= 0) return 0;
  if (n <= threshold()) {
    return static_cast<Int>(std::count(prefix_.begin(), prefix_.begin() + n, true));
  }
  const Int tail = n - threshold();
  Int c = prefix_ones_ + (tail / period()) * pattern_ones_;
  for (Int k = 0; k < tail % period(); ++k) c += pattern_[static_cast<std::size_t>(k)];
  return c;
}

std::vector<Int> EpSet::members_below(Int n) const {
  std::vector<Int> out;
  for (Int m = 0; m < n; ++m)
    if (contains(m)) out.push_back(m);
  return out;
}

EpSet set_union(const EpSet& a, const EpSet& b) {
  return combine(a, b, [](bool x, bool y) { return x || y; });
}
EpSet intersect(const EpSet& a, const EpSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && y; });
}
EpSet difference(const EpSet& a, const EpSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && !y; });
}
EpSet symmetric_difference(const EpSet& a, const EpSet& b) {
  return combine(a, b, [](bool x, bool y) { return x != y; });
}

EpSet complement(const EpSet& a) {
  Bits prefix = a.prefix();
  Bits pattern = a.pattern();
  prefix.flip();
  pattern.flip();
  return EpSet::make(std::move(prefix), std::move(pattern));
}

EpSet shift_up(const EpSet& a, Int k) {
  if (k < 0) throw std::invalid_argument("shift_up: negative shift");
  Bits prefix(static_cast<std::size_t>(k), false);
  prefix.insert(prefix.end(), a.prefix().begin(), a.prefix().end());
  return EpSet::make(std::move(prefix), a.pattern());
}

EpSet shift_down(const EpSet& a, Int k) {
  if (k < 0) throw std::invalid_argument("shift_down: negative shift");
  if (k <= a.threshold()) {
    return EpSet::make(Bits(a.prefix().begin() + k, a.prefix().end()), a.pattern());
  }
  const Int p = a.period();
  const Int rot = (k - a.threshold()) % p;
  Bits pattern(static_cast<std::size_t>(p));
  for (Int i = 0; i < p; ++i) pattern[i] = a.pattern()[static_cast<std::size_t>((i + rot) % p)];
  return EpSet::make({}, std::move(pattern));
}

bool almost_equal(const EpSet& a, const EpSet& b) {
  return !symmetric_difference(a, b).is_infinite();
}

bool almost_subset(const EpSet& a, const EpSet& b) {
  return !difference(a, b).is_infinite();
}

std::string to_string(const EpSet& a) {
  std::string s;
  for (bool b : a.prefix()) s.push_back(b ? '1' : '0');
  s.push_back('|');
  for (bool b : a.pattern()) s.push_back(b ? '1' : '0');
  return s;
}

}  // namespace omegastar
