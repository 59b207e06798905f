#pragma once

#include <map>
#include <vector>

#include "chern/matroid.hpp"

namespace chern {

/// The lattice of flats with a global flat index (sorted by rank, then by
/// mask), upward covering lists and cached Mobius values from the bottom.
/// Immutable once built.
struct FlatLattice {
  int n = 0;
  int rank = 0;                       // matroid rank (= d+1)
  bool loopless = false;
  std::vector<Bits> flats;            // index -> mask
  std::vector<int> flat_rank;         // index -> rank
  std::vector<int> rank_offset;       // rank -> first index (size rank+2)
  std::vector<std::vector<int>> covers;  // index -> indices of covering flats
  std::vector<long long> mobius_bottom;  // mu(bottom, F)

  static FlatLattice build(const Matroid& m);

  int bottom() const { return 0; }
  int top() const { return static_cast<int>(flats.size()) - 1; }
  int count() const { return static_cast<int>(flats.size()); }
  int index_of(Bits f) const;  // -1 if not a flat

  /// Mobius function mu(F, G) over the lattice interval; 0 unless F <= G.
  long long mobius(int f, int g) const;

  /// Beta invariant of the minor M|G / F, read off the interval [F, G].
  long long beta_interval(int f, int g) const;
};

/// Characteristic polynomial, stored by descending powers of lambda
/// (coeffs[0] = 1 is the lambda^rank coefficient).
struct CharPoly {
  std::vector<long long> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  long long eval(long long x) const;
  /// Exact division by (lambda - 1); the remainder must vanish.
  CharPoly reduced() const;
};

CharPoly char_poly(const Matroid& m);
CharPoly char_poly(const FlatLattice& lattice);

/// Crapo beta invariant, beta = (-1)^d chibar(1) >= 0. Rejects loops.
long long beta(const Matroid& m);

/// Histogram of rank-2 flat sizes of a simple rank-3 matroid, 2-point flats
/// included. Satisfies sum C(m,2) t_m = C(n,2).
struct RankTwoProfile {
  int n = 0;
  std::map<int, long long> t;

  long long count(int m) const {
    auto it = t.find(m);
    return it == t.end() ? 0 : it->second;
  }
  long long total_lines() const;
};

RankTwoProfile rank2_profile(const Matroid& m);

/// Profile of U_{3,n} (all t_2 = C(n,2)); used by closed-form cross-checks.
RankTwoProfile uniform_rank3_profile(int n);

}  // namespace chern
