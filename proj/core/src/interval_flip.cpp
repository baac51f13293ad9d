#include "omegastar/interval_flip.hpp"

#include <stdexcept>

namespace omegastar {

IntervalFlip interval_flip(const EpSet& d) {
  if (!d.is_infinite()) throw std::invalid_argument("interval_flip: D must be infinite");
  const EpSet e = shift_up(d, 1);  // d_1 < d_2 < … ; d_0 = 0 is implicit
  auto d_at = [&](Int k) { return k == 0 ? Int{0} : e.enumerate(k - 1); };

  auto h_eval = [&](Int n) -> std::optional<Int> {
    const Int k = e.count_below(n + 1);
    return d_at(k) + d_at(k + 1) - 1 - n;
  };
  Permutation h = Permutation::fit(h_eval, e.period(), *e.next_at_or_after(e.threshold()));

  auto f_eval = [&](Int n) -> std::optional<Int> {
    if (!d.contains(n)) return n + 1;
    const Int i = e.count_below(n + 1) + 1;
    if (i < 2) return std::nullopt;
    return d_at(i - 2);
  };
  Permutation f = Permutation::fit(f_eval, e.period(), e.enumerate(e.ones_in_prefix() + 2));

  require_valid(h, "interval_flip h");
  require_valid(f, "interval_flip f");
  return {std::move(h), std::move(f)};
}

}  // namespace omegastar
