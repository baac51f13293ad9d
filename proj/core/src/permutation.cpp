#include "omegastar/permutation.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace omegastar {

namespace {

__extension__ typedef __int128 Wide;

Int checked(Wide v) {
  if (v > (Wide{1} << 62) || v < -(Wide{1} << 62)) throw std::overflow_error("permutation arithmetic overflow");
  return static_cast<Int>(v);
}

// Modular inverse of a mod m (gcd(a, m) = 1, m ≥ 1).
Int mod_inverse(Int a, Int m) {
  Int old_r = floor_mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const Int q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  return floor_mod(old_s, m);
}

// Smallest common element of two progressions, if they meet (they then
// meet in the progression {x + lcm(steps)·i}).
std::optional<Int> first_common(const Progression& u, const Progression& v) {
  const Int g = gcd(u.step, v.step);
  if (floor_mod(v.start - u.start, g) != 0) return std::nullopt;
  const Int m = v.step / g;
  const Int t = checked(static_cast<Wide>(floor_mod((v.start - u.start) / g, m)) *
                        mod_inverse(u.step / g, m) % m);
  const Int period = lcm(u.step, v.step);
  Int x = checked(u.start + static_cast<Wide>(u.step) * t);
  const Int lo = std::max(u.start, v.start);
  if (x < lo) x = checked(x + static_cast<Wide>(period) * ((lo - x + period - 1) / period));
  return x;
}

std::vector<Int> prime_factors(Int n) {
  std::vector<Int> out;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool piece_less(const AffinePiece& a, const AffinePiece& b) {
  return std::tie(a.domain.step, a.domain.start) < std::tie(b.domain.step, b.domain.start);
}

}  // namespace

Permutation::Permutation() : Permutation({}, {AffinePiece{{0, 1}, {0, 1}}}) {}

Permutation::Permutation(std::map<Int, Int> exceptions, std::vector<AffinePiece> pieces)
    : exceptions_(std::move(exceptions)), pieces_(std::move(pieces)) {
  normalize();
}

Permutation Permutation::identity() { return Permutation(); }
Permutation Permutation::successor() { return translation(1); }
Permutation Permutation::predecessor() { return Permutation({}, {AffinePiece{{1, 1}, {0, 1}}}); }

Permutation Permutation::translation(Int k) {
  if (k < 0) throw std::invalid_argument("translation: negative shift");
  return Permutation({}, {AffinePiece{{0, 1}, {k, 1}}});
}

Permutation Permutation::from_residue_shift(const ResidueShiftForm& form) {
  if (form.period < 1) throw std::invalid_argument("residue shift: period must be >= 1");
  if (static_cast<Int>(form.offsets.size()) != form.period)
    throw std::invalid_argument("residue shift: offsets must have one entry per residue");
  if (form.threshold < 0) throw std::invalid_argument("residue shift: negative threshold");
  std::map<Int, Int> exceptions;
  for (const auto& [n, m] : form.exceptions) {
    if (n < 0 || n >= form.threshold)
      throw std::invalid_argument("residue shift: exception key outside [0, threshold)");
    if (m < 0) throw std::invalid_argument("residue shift: negative exception value");
    exceptions.emplace(n, m);
  }
  std::vector<AffinePiece> pieces;
  for (Int r = 0; r < form.period; ++r) {
    const Int n0 = form.threshold + floor_mod(r - form.threshold, form.period);
    const Int v0 = n0 + form.offsets[static_cast<std::size_t>(r)];
    if (v0 < 0) throw std::invalid_argument("residue shift: n + offset negative beyond threshold");
    pieces.push_back({{n0, form.period}, {v0, form.period}});
  }
  return Permutation(std::move(exceptions), std::move(pieces));
}

Permutation Permutation::fit(const std::function<std::optional<Int>(Int)>& eval, Int modulus,
                             Int threshold) {
  if (modulus < 1) throw std::invalid_argument("fit: modulus must be >= 1");
  std::map<Int, Int> exceptions;
  for (Int n = 0; n < threshold; ++n)
    if (auto v = eval(n)) exceptions.emplace(n, *v);
  std::vector<AffinePiece> pieces;
  pieces.reserve(static_cast<std::size_t>(modulus));
  for (Int r = 0; r < modulus; ++r) {
    const Int n0 = threshold + floor_mod(r - threshold, modulus);
    const auto v0 = eval(n0), v1 = eval(n0 + modulus), v2 = eval(n0 + 2 * modulus);
    if (!v0 || !v1 || !v2) throw std::logic_error("fit: map undefined beyond threshold");
    const Int step = *v1 - *v0;
    if (step < 1 || *v2 - *v1 != step) throw std::logic_error("fit: map not affine on residue class");
    pieces.push_back({{n0, modulus}, {*v0, step}});
  }
  return Permutation(std::move(exceptions), std::move(pieces));
}

void Permutation::normalize() {
  bool changed = true;
  while (changed) {
    changed = false;
    // Absorb exceptions that extend a piece one step downward.
    for (auto& pc : pieces_) {
      while (pc.domain.start - pc.domain.step >= 0 && pc.image.start - pc.image.step >= 0) {
        auto it = exceptions_.find(pc.domain.start - pc.domain.step);
        if (it == exceptions_.end() || it->second != pc.image.start - pc.image.step) break;
        exceptions_.erase(it);
        pc.domain.start -= pc.domain.step;
        pc.image.start -= pc.image.step;
      }
    }
    std::sort(pieces_.begin(), pieces_.end(), piece_less);
    // Merge q sibling pieces {a + i·S/q + S·k} carrying one affine map.
    std::map<std::pair<Int, Int>, std::size_t> at;
    for (std::size_t i = 0; i < pieces_.size(); ++i)
      at.emplace(std::pair{pieces_[i].domain.step, pieces_[i].domain.start}, i);
    std::vector<bool> used(pieces_.size(), false);
    std::vector<AffinePiece> merged;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      if (used[i]) continue;
      const AffinePiece& base = pieces_[i];
      bool done = false;
      for (Int q : prime_factors(base.domain.step)) {
        if (base.image.step % q != 0) continue;
        const Int sub = base.domain.step / q;
        std::vector<std::size_t> group{i};
        for (Int u = 1; u < q; ++u) {
          auto it = at.find({base.domain.step, base.domain.start + u * sub});
          if (it == at.end() || used[it->second]) break;
          const AffinePiece& other = pieces_[it->second];
          if (other.image.step != base.image.step ||
              other.image.start != base.image.start + u * (base.image.step / q))
            break;
          group.push_back(it->second);
        }
        if (static_cast<Int>(group.size()) != q) continue;
        for (std::size_t g : group) used[g] = true;
        merged.push_back({{base.domain.start, sub}, {base.image.start, base.image.step / q}});
        done = changed = true;
        break;
      }
      if (!done) {
        used[i] = true;
        merged.push_back(base);
      }
    }
    pieces_ = std::move(merged);
  }
  std::sort(pieces_.begin(), pieces_.end(), piece_less);
  build_index();
}

void Permutation::build_index() {
  index_.clear();
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const auto& d = pieces_[i].domain;
    index_[d.step].emplace(floor_mod(d.start, d.step), i);
  }
}

const AffinePiece* Permutation::piece_for(Int n) const {
  for (const auto& [step, by_residue] : index_) {
    auto it = by_residue.find(floor_mod(n, step));
    if (it != by_residue.end()) return &pieces_[it->second];
  }
  return nullptr;
}

std::optional<Int> Permutation::apply(Int n) const {
  if (n < 0) return std::nullopt;
  if (const AffinePiece* pc = piece_for(n); pc && n >= pc->domain.start) return pc->apply(n);
  if (auto it = exceptions_.find(n); it != exceptions_.end()) return it->second;
  return std::nullopt;
}

Int Permutation::threshold() const {
  Int t = 0;
  for (const auto& pc : pieces_) t = std::max(t, pc.domain.start - pc.domain.step + 1);
  return t;
}

std::optional<ResidueShiftForm> Permutation::as_residue_shift(Int max_period) const {
  Int period = 1;
  for (const auto& pc : pieces_) {
    if (pc.domain.step != pc.image.step) return std::nullopt;
    period = lcm(period, pc.domain.step);
    if (period > max_period) return std::nullopt;
  }
  ResidueShiftForm form;
  form.period = period;
  form.offsets.resize(static_cast<std::size_t>(period));
  for (Int r = 0; r < period; ++r) {
    const AffinePiece* pc = piece_for(r);
    if (pc == nullptr) return std::nullopt;
    form.offsets[static_cast<std::size_t>(r)] = pc->image.start - pc->domain.start;
  }
  Int t = threshold();
  while (t > 0) {
    const auto v = apply(t - 1);
    if (!v || *v != t - 1 + form.offsets[static_cast<std::size_t>((t - 1) % period)]) break;
    --t;
  }
  form.threshold = t;
  for (Int n = 0; n < t; ++n)
    if (auto v = apply(n)) form.exceptions.emplace(n, *v);
  return form;
}

bool operator==(const Permutation& p, const Permutation& q) {
  if (!almost_equal_perm(p, q)) return false;
  Int top = std::max(p.threshold(), q.threshold());
  if (!p.exceptions_.empty()) top = std::max(top, p.exceptions_.rbegin()->first + 1);
  if (!q.exceptions_.empty()) top = std::max(top, q.exceptions_.rbegin()->first + 1);
  for (Int n = 0; n < top; ++n)
    if (p.apply(n) != q.apply(n)) return false;
  return true;
}

Validation validate(const Permutation& p) {
  using boost::multiprecision::cpp_rational;
  auto fail = [](std::string msg) { return Validation{false, std::move(msg)}; };
  const auto& pieces = p.pieces();
  if (pieces.empty()) return fail("no pieces: domain is finite");
  for (const auto& pc : pieces) {
    if (pc.domain.step < 1 || pc.image.step < 1) return fail("piece with non-positive step");
    if (pc.domain.start < 0 || pc.image.start < 0) return fail("piece with negative start");
  }
  for (const auto& [n, m] : p.exceptions()) {
    if (n < 0 || m < 0) return fail("negative exception entry");
  }
  auto meets = [](const Progression& u, const Progression& v) {
    return floor_mod(u.start - v.start, gcd(u.step, v.step)) == 0;
  };
  cpp_rational dom_density = 0, img_density = 0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    dom_density += cpp_rational(1, pieces[i].domain.step);
    img_density += cpp_rational(1, pieces[i].image.step);
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      if (meets(pieces[i].domain, pieces[j].domain)) {
        std::ostringstream os;
        os << "piece domains overlap (pieces " << i << " and " << j << ")";
        return fail(os.str());
      }
      if (meets(pieces[i].image, pieces[j].image)) {
        std::ostringstream os;
        os << "not injective: piece images overlap (pieces " << i << " and " << j << ")";
        return fail(os.str());
      }
    }
  }
  if (dom_density != 1) return fail("domain is not cofinite");
  if (img_density != 1) return fail("image is not cofinite");
  std::set<Int> exception_values;
  for (const auto& [n, m] : p.exceptions()) {
    if (const AffinePiece* pc = p.piece_for(n); pc && n >= pc->domain.start) {
      std::ostringstream os;
      os << "exception at " << n << " lies inside a piece domain";
      return fail(os.str());
    }
    if (!exception_values.insert(m).second) {
      std::ostringstream os;
      os << "not injective: value " << m << " repeated in exception table";
      return fail(os.str());
    }
    for (const auto& pc : pieces) {
      if (pc.image.contains(m)) {
        std::ostringstream os;
        os << "not injective: exception value " << m << " collides with a piece image";
        return fail(os.str());
      }
    }
  }
  return {};
}

void require_valid(const Permutation& p, const char* what) {
  if (auto v = validate(p); !v) throw std::invalid_argument(std::string(what) + ": invalid permutation: " + v.message);
}

Permutation compose(const Permutation& p, const Permutation& q) {
  std::map<Int, Int> exceptions;
  for (const auto& [n, m] : q.exceptions())
    if (auto v = p.apply(m)) exceptions.emplace(n, *v);

  // Group p's pieces by domain step for residue-compatible lookups.
  std::map<Int, std::map<Int, const AffinePiece*>> by_step;
  for (const auto& pc : p.pieces()) by_step[pc.domain.step].emplace(floor_mod(pc.domain.start, pc.domain.step), &pc);

  std::vector<AffinePiece> pieces;
  for (const auto& qc : q.pieces()) {
    const Progression& img = qc.image;
    for (const auto& [step, residues] : by_step) {
      const Int g = gcd(img.step, step);
      const Int base = floor_mod(img.start, g);
      for (Int rho = base; rho < step; rho += g) {
        auto it = residues.find(rho);
        if (it == residues.end()) continue;
        const AffinePiece& pc = *it->second;
        const auto x = first_common(img, pc.domain);
        if (!x) continue;
        const Int common = lcm(img.step, pc.domain.step);
        const Int k = (*x - img.start) / img.step;
        pieces.push_back({{checked(qc.domain.start + static_cast<Wide>(qc.domain.step) * k),
                           checked(static_cast<Wide>(qc.domain.step) * (common / img.step))},
                          {pc.apply(*x), checked(static_cast<Wide>(pc.image.step) * (common / pc.domain.step))}});
      }
    }
    // Image points that land on p's exception table.
    for (const auto& [e, v] : p.exceptions()) {
      if (img.contains(e)) exceptions.emplace(qc.domain.at((e - img.start) / img.step), v);
    }
  }
  return Permutation(std::move(exceptions), std::move(pieces));
}

Permutation invert(const Permutation& p) {
  std::map<Int, Int> exceptions;
  for (const auto& [n, m] : p.exceptions()) exceptions.emplace(m, n);
  std::vector<AffinePiece> pieces;
  pieces.reserve(p.pieces().size());
  for (const auto& pc : p.pieces()) pieces.push_back({pc.image, pc.domain});
  return Permutation(std::move(exceptions), std::move(pieces));
}

bool almost_equal_perm(const Permutation& p, const Permutation& q) {
  std::map<Int, std::map<Int, const AffinePiece*>> by_step;
  for (const auto& qc : q.pieces()) by_step[qc.domain.step].emplace(floor_mod(qc.domain.start, qc.domain.step), &qc);
  for (const auto& pc : p.pieces()) {
    for (const auto& [step, residues] : by_step) {
      const Int g = gcd(pc.domain.step, step);
      for (Int rho = floor_mod(pc.domain.start, g); rho < step; rho += g) {
        auto it = residues.find(rho);
        if (it == residues.end()) continue;
        const auto x = first_common(pc.domain, it->second->domain);
        if (!x) continue;
        if (static_cast<Wide>(pc.image.step) * it->second->domain.step !=
                static_cast<Wide>(it->second->image.step) * pc.domain.step ||
            pc.apply(*x) != it->second->apply(*x))
          return false;
      }
    }
  }
  return true;
}

EpSet image_of_set(const Permutation& p, const EpSet& a) {
  std::vector<Progression> tails;
  std::vector<Int> points;
  for (const auto& [n, m] : p.exceptions())
    if (a.contains(n)) points.push_back(m);
  const Int thr = a.threshold();
  for (const auto& pc : p.pieces()) {
    const Int sub = lcm(pc.domain.step, a.period());
    const Int count = sub / pc.domain.step;
    for (Int kappa = 0; kappa < count; ++kappa) {
      Int x = pc.domain.at(kappa);
      for (; x < thr; x += sub)
        if (a.contains(x)) points.push_back(pc.apply(x));
      if (a.contains(x)) tails.push_back({pc.apply(x), checked(static_cast<Wide>(pc.image.step) * count)});
    }
  }
  Int period = 1, top = 0;
  for (const auto& t : tails) {
    period = lcm(period, t.step);
    if (period > kMaxImagePeriod) throw std::length_error("image_of_set: image period exceeds limit");
    top = std::max(top, t.start);
  }
  for (Int v : points) top = std::max(top, v + 1);
  Bits bits(static_cast<std::size_t>(top + period), false);
  for (const auto& t : tails)
    for (Int y = t.start; y < top + period; y += t.step) bits[static_cast<std::size_t>(y)] = true;
  for (Int v : points) bits[static_cast<std::size_t>(v)] = true;
  Bits prefix(bits.begin(), bits.begin() + top);
  Bits pattern(bits.begin() + top, bits.end());
  return EpSet::make(std::move(prefix), std::move(pattern));
}

Permutation conjugate_successor(const Permutation& f) {
  require_valid(f, "conjugate_successor");
  return compose(compose(f, Permutation::successor()), invert(f));
}

Permutation conjugate_predecessor(const Permutation& f) {
  require_valid(f, "conjugate_predecessor");
  return compose(compose(f, Permutation::predecessor()), invert(f));
}

}  // namespace omegastar
