#include "chern/analysis.hpp"

#include <cassert>
#include <cstdlib>

#include "chern/errors.hpp"

namespace chern {

namespace {

RankTwoProfile profile_of(const Matroid& m) {
  if (m.rank() != 3) fail(ErrorCode::RankError, "theorem suite requires rank 3");
  return rank2_profile(m);
}

bool is_uniform_profile(const RankTwoProfile& p) {
  for (const auto& [m, c] : p.t)
    if (m >= 3 && c > 0) return false;
  return true;
}

std::string pair_str(const ChernPair& c) {
  return "(" + std::to_string(c.c1sq) + "," + std::to_string(c.c2) + ")";
}

}  // namespace

ChernPair chern_rank3(const RankTwoProfile& p) {
  ChernPair out;
  out.c1sq = 9 - 5LL * p.n;
  out.c2 = 3 - 2LL * p.n;
  for (const auto& [m, c] : p.t) {
    out.c1sq = checked_add(out.c1sq, checked_mul(3LL * m - 4, c));
    out.c2 = checked_add(out.c2, checked_mul(m - 1LL, c));
  }
  return out;
}

long long c1sq_alt(const RankTwoProfile& p) {
  long long out = checked_mul(3 - p.n, 3 - p.n);
  for (const auto& [m, c] : p.t)
    out = checked_add(out, -checked_mul(checked_mul(2 - m, 2 - m), c));
  return out;
}

long long uniform_chern(int r, int n, const ChernExponents& e) {
  if (r < 1 || r > n) fail(ErrorCode::InvalidInput, "uniform matroid needs 1 <= r <= n");
  const int d = r - 1;
  if (e.d() != d || !e.valid())
    fail(ErrorCode::InvalidExponents, "exponents " + e.str() + " invalid for rank " + std::to_string(r));
  long long prod = 1;
  for (int i = 1; i <= d; ++i) {
    const long long base = binomial(n - (d - i) - 2, i);
    for (long long c = 0; c < e.k[i - 1]; ++c) prod = checked_mul(prod, base);
  }
  return d % 2 == 0 ? prod : -prod;
}

ChernPair pg_chern(long long q) {
  if (q < 2) fail(ErrorCode::InvalidInput, "projective planes need q >= 2");
  const long long c2 = checked_add(checked_mul(checked_mul(q, q), q - 1), 1 - q);
  return ChernPair{checked_mul(3, c2), c2};
}

long long melchior_gap(const RankTwoProfile& p) {
  const ChernPair c = chern_rank3(p);
  const long long gap = checked_add(checked_mul(5, c.c2), -checked_mul(2, c.c1sq));
  long long alt = -3;
  for (const auto& [m, cnt] : p.t) alt = checked_add(alt, -checked_mul(m - 3LL, cnt));
  assert(gap == alt);
  return gap;
}

TheoremReport verify_positivity(const Matroid& m) {
  const RankTwoProfile p = profile_of(m);
  const ChernPair c = chern_rank3(p);
  const bool coloop = m.has_coloop();
  TheoremReport rep;
  rep.theorem = "positivity";
  rep.holds = c.c1sq >= 0 && c.c2 >= 0 && (c.c1sq == 0) == coloop;
  rep.equality_case = c.c1sq == 0 ? EqualityCase::Left : EqualityCase::None;
  rep.witness = "chern=" + pair_str(c) + " coloop=" + (coloop ? "yes" : "no");
  return rep;
}

TheoremReport verify_uniform_bounds(const Matroid& m) {
  const RankTwoProfile p = profile_of(m);
  const ChernPair c = chern_rank3(p);
  const ChernPair u = chern_rank3(uniform_rank3_profile(p.n));
  TheoremReport rep;
  rep.theorem = "uniform-bounds";
  rep.holds = c.c1sq >= 0 && c.c2 >= 0 && c.c1sq <= u.c1sq && c.c2 <= u.c2;
  rep.equality_case = EqualityCase::None;
  rep.witness = "chern=" + pair_str(c) + " uniform=" + pair_str(u);
  return rep;
}

TheoremReport verify_ratio(const Matroid& m) {
  const RankTwoProfile p = profile_of(m);
  if (m.has_coloop()) fail(ErrorCode::ColoopError, "ratio bounds require a coloop-free matroid");
  const ChernPair c = chern_rank3(p);
  if (c.c2 == 0) fail(ErrorCode::ColoopError, "ratio undefined: c2 = 0");
  const long long n = p.n;

  // All comparisons cross-multiplied; c2 > 0 so directions are preserved.
  const long long left_lhs = checked_mul(n - 2, c.c1sq);
  const long long left_rhs = checked_mul(2 * n - 6, c.c2);
  const bool left_holds = left_lhs >= left_rhs;
  const bool left_equal = left_lhs == left_rhs;
  const bool right_holds = c.c1sq <= checked_mul(3, c.c2);
  const bool right_equal = c.c1sq == checked_mul(3, c.c2);

  const bool uniform = is_uniform_profile(p);
  const bool projective_plane = p.total_lines() == n;  // coloop-free already

  TheoremReport rep;
  rep.theorem = "ratio-bounds";
  rep.holds = left_holds && right_holds && (left_equal == uniform) &&
              (right_equal == projective_plane);
  rep.equality_case = left_equal ? EqualityCase::Left
                                 : (right_equal ? EqualityCase::Right : EqualityCase::None);
  rep.witness = "chern=" + pair_str(c) + " ratio=" + std::to_string(c.c1sq) + "/" +
                std::to_string(c.c2) + " uniform=" + (uniform ? "yes" : "no") +
                " projective=" + (projective_plane ? "yes" : "no");
  return rep;
}

TheoremReport conjecture_check(const Matroid& m, const ChernExponents& e) {
  if (!m.is_simple())
    fail(ErrorCode::InvalidInput, "the conjectured bound is about simple matroids");
  const long long v = chern_number(m, e);
  const long long u = uniform_chern(m.rank(), m.size(), e);
  TheoremReport rep;
  rep.theorem = "conjecture-uniform-bound";
  rep.holds = std::llabs(v) <= std::llabs(u);
  rep.equality_case = std::llabs(v) == std::llabs(u) ? EqualityCase::Left : EqualityCase::None;
  rep.witness = "exponents=" + e.str() + " |engine|=" + std::to_string(std::llabs(v)) +
                " |uniform|=" + std::to_string(std::llabs(u));
  return rep;
}

}  // namespace chern
