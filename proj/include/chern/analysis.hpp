#pragma once

#include <string>

#include "chern/intersection.hpp"
#include "chern/lattice.hpp"

namespace chern {

struct ChernPair {
  long long c1sq = 0;
  long long c2 = 0;

  bool operator==(const ChernPair&) const = default;
  bool operator<(const ChernPair& o) const {
    return c1sq != o.c1sq ? c1sq < o.c1sq : c2 < o.c2;
  }
};

/// Closed-form Chern numbers of a simple rank-3 matroid:
///   c1sq = 9 - 5n + sum (3m-4) t_m,   c2 = 3 - 2n + sum (m-1) t_m.
ChernPair chern_rank3(const RankTwoProfile& p);

/// Alternate route c1sq = (3-n)^2 - sum (2-m)^2 t_m; agrees with chern_rank3
/// via the identity n^2 - n = sum (m^2-m) t_m.
long long c1sq_alt(const RankTwoProfile& p);

/// Closed form for the uniform matroid U_{r,n}:
///   (-1)^d prod_i C(n-(d-i)-2, i)^{k_i},  d = r-1.
long long uniform_chern(int r, int n, const ChernExponents& e);

/// (3(q^3-q^2-q+1), q^3-q^2-q+1) for the projective plane of order q.
ChernPair pg_chern(long long q);

/// 5 c2 - 2 c1sq; also evaluates -3 - sum (m-3) t_m and asserts equality.
long long melchior_gap(const RankTwoProfile& p);

enum class EqualityCase { None, Left, Right };

struct TheoremReport {
  std::string theorem;
  bool holds = false;
  EqualityCase equality_case = EqualityCase::None;
  std::string witness;
};

/// 0 <= c1sq and 0 <= c2, with c1sq = 0 iff M has a coloop.
TheoremReport verify_positivity(const Matroid& m);

/// c1sq <= c1sq(U_{3,n}) and c2 <= c2(U_{3,n}).
TheoremReport verify_uniform_bounds(const Matroid& m);

/// (2n-6)/(n-2) <= c1sq/c2 <= 3 for coloop-free simple rank-3 matroids,
/// compared by exact cross-multiplication. Left equality iff M = U_{3,n};
/// right equality iff M is a projective plane (coloop-free with exactly n
/// rank-2 flats).
TheoremReport verify_ratio(const Matroid& m);

/// Conjectured bound |c(M,e)| <= |c(U_{r,n},e)|, engine value against the
/// uniform closed form. Violations come back as holds = false with a witness,
/// never as errors.
TheoremReport conjecture_check(const Matroid& m, const ChernExponents& e);

}  // namespace chern
