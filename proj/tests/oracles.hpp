// Test-only oracles, independent of the library's lattice/fan code paths:
// rank from an explicit basis list, the Whitney rank-sum route to the
// characteristic polynomial, and a pruning-free linear-space enumerator.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "chern/matroid.hpp"

namespace oracle {

using chern::Bits;

// Max |S intersect B| over bases B; the textbook rank formula.
inline int rank_from_bases(const std::vector<Bits>& bases, Bits s) {
  int best = 0;
  for (Bits b : bases) best = std::max(best, chern::popcount(s & b));
  return best;
}

// Bases of a matroid read off the rank oracle: r-subsets of full rank.
inline std::vector<Bits> bases_of(const chern::Matroid& m) {
  std::vector<Bits> out;
  const Bits full = m.ground_set();
  for (Bits s = 0; s <= full; ++s) {
    if (chern::popcount(s) != m.rank()) continue;
    if (chern::subset_of(s, full) && m.rank_of(s) == m.rank()) out.push_back(s);
  }
  return out;
}

// Whitney rank generating sum: chi(lambda) = sum_S (-1)^|S| lambda^(r - r(S)),
// a route to the characteristic polynomial that never touches the Mobius
// function. Coefficients returned by descending powers.
inline std::vector<long long> whitney_char_poly(const chern::Matroid& m) {
  std::vector<long long> coeffs(m.rank() + 1, 0);
  const Bits full = m.ground_set();
  for (Bits s = 0;; ++s) {
    const int corank = m.rank() - m.rank_of(s);
    coeffs[m.rank() - corank] += chern::popcount(s) % 2 == 0 ? 1 : -1;
    if (s == full) break;
  }
  return coeffs;
}

// Closure computed straight from the rank oracle.
inline Bits closure_by_rank(const chern::Matroid& m, Bits s) {
  Bits c = s;
  const int r = m.rank_of(s);
  for (int e = 0; e < m.size(); ++e)
    if (!chern::has(s, e) && m.rank_of(s | chern::bit(e)) == r) c |= chern::bit(e);
  return c;
}

// Enumerates every linear space on n labeled points (families of >=3-point
// lines meeting pairwise in <= 1 point, no line covering everything) with no
// isomorphism pruning, then counts classes via canonical_form. Exponential in
// the number of labeled families; fine for n <= 7.
inline std::set<std::vector<std::uint8_t>> dumb_rank3_classes(int n) {
  std::vector<Bits> candidates;
  const Bits full = chern::full_set(n);
  for (Bits s = 0; s <= full; ++s) {
    const int sz = chern::popcount(s);
    if (sz >= 3 && sz <= n - 1) candidates.push_back(s);
  }
  std::set<std::vector<std::uint8_t>> classes;
  std::vector<Bits> family;
  auto rec = [&](auto&& self, size_t from) -> void {
    classes.insert(chern::Matroid::from_rank2_flats(n, family).canonical_form());
    for (size_t i = from; i < candidates.size(); ++i) {
      bool ok = true;
      for (Bits f : family)
        if (chern::popcount(f & candidates[i]) >= 2) {
          ok = false;
          break;
        }
      if (!ok) continue;
      family.push_back(candidates[i]);
      self(self, i + 1);
      family.pop_back();
    }
  };
  rec(rec, 0);
  return classes;
}

}  // namespace oracle
