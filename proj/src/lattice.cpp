#include "chern/lattice.hpp"

#include <algorithm>

#include "chern/errors.hpp"
#include "chern/rational.hpp"

namespace chern {

FlatLattice FlatLattice::build(const Matroid& m) {
  FlatLattice lat;
  lat.n = m.size();
  lat.rank = m.rank();
  lat.loopless = m.is_loopless();
  lat.rank_offset.assign(lat.rank + 2, 0);
  for (int r = 0; r <= lat.rank; ++r) {
    lat.rank_offset[r] = static_cast<int>(lat.flats.size());
    for (Bits f : m.flats_by_rank()[r]) {
      lat.flats.push_back(f);
      lat.flat_rank.push_back(r);
    }
  }
  lat.rank_offset[lat.rank + 1] = static_cast<int>(lat.flats.size());

  lat.covers.assign(lat.flats.size(), {});
  for (int f = 0; f < lat.count(); ++f) {
    const int r = lat.flat_rank[f];
    if (r == lat.rank) continue;
    for (int g = lat.rank_offset[r + 1]; g < lat.rank_offset[r + 2]; ++g)
      if (subset_of(lat.flats[f], lat.flats[g])) lat.covers[f].push_back(g);
  }

  lat.mobius_bottom.assign(lat.flats.size(), 0);
  lat.mobius_bottom[0] = 1;
  for (int g = 1; g < lat.count(); ++g) {
    long long acc = 0;
    for (int f = 0; f < g; ++f)
      if (subset_of(lat.flats[f], lat.flats[g]))
        acc = checked_add(acc, lat.mobius_bottom[f]);
    lat.mobius_bottom[g] = -acc;
  }
  return lat;
}

int FlatLattice::index_of(Bits f) const {
  for (int r = 0; r <= rank; ++r) {
    auto first = flats.begin() + rank_offset[r];
    auto last = flats.begin() + rank_offset[r + 1];
    auto it = std::lower_bound(first, last, f);
    if (it != last && *it == f) return static_cast<int>(it - flats.begin());
  }
  return -1;
}

long long FlatLattice::mobius(int f, int g) const {
  if (f == g) return 1;
  if (!subset_of(flats[f], flats[g])) return 0;
  // Local pass over the interval [f, g] in rank (= index) order.
  std::vector<int> interval;
  std::vector<long long> mu;
  for (int h = f; h <= g; ++h) {
    if (!subset_of(flats[f], flats[h]) || !subset_of(flats[h], flats[g])) continue;
    long long acc = 0;
    for (size_t i = 0; i < interval.size(); ++i)
      if (subset_of(flats[interval[i]], flats[h])) acc = checked_add(acc, mu[i]);
    interval.push_back(h);
    mu.push_back(h == f ? 1 : -acc);
  }
  return mu.back();
}

long long FlatLattice::beta_interval(int f, int g) const {
  const int rho = flat_rank[g] - flat_rank[f];
  if (rho <= 0) fail(ErrorCode::InvalidInput, "beta of a rank-0 interval");
  // Characteristic polynomial of the minor M|G/F from the interval [F, G],
  // by descending powers.
  std::vector<long long> chi(rho + 1, 0);
  std::vector<int> interval;
  std::vector<long long> mu;
  for (int h = f; h <= g; ++h) {
    if (!subset_of(flats[f], flats[h]) || !subset_of(flats[h], flats[g])) continue;
    long long acc = 0;
    for (size_t i = 0; i < interval.size(); ++i)
      if (subset_of(flats[interval[i]], flats[h])) acc = checked_add(acc, mu[i]);
    interval.push_back(h);
    mu.push_back(h == f ? 1 : -acc);
    chi[flat_rank[h] - flat_rank[f]] =
        checked_add(chi[flat_rank[h] - flat_rank[f]], mu.back());
  }
  // chibar = chi / (lambda - 1), exact; beta = (-1)^(rho-1) chibar(1).
  long long carry = 0, chibar_at_1 = 0;
  for (int i = 0; i < rho; ++i) {
    carry = checked_add(chi[i], carry);
    chibar_at_1 = checked_add(chibar_at_1, carry);
  }
  if (checked_add(chi[rho], carry) != 0)
    fail(ErrorCode::NotAMatroid, "characteristic polynomial not divisible by (lambda-1)");
  long long b = (rho - 1) % 2 == 0 ? chibar_at_1 : -chibar_at_1;
  if (b < 0) fail(ErrorCode::NotAMatroid, "negative beta invariant");
  return b;
}

long long CharPoly::eval(long long x) const {
  long long acc = 0;
  for (long long c : coeffs) acc = checked_add(checked_mul(acc, x), c);
  return acc;
}

CharPoly CharPoly::reduced() const {
  CharPoly out;
  long long carry = 0;
  for (size_t i = 0; i + 1 < coeffs.size(); ++i) {
    carry = checked_add(coeffs[i], carry);
    out.coeffs.push_back(carry);
  }
  if (checked_add(coeffs.back(), carry) != 0)
    fail(ErrorCode::InvalidInput, "polynomial is not divisible by (lambda-1)");
  return out;
}

CharPoly char_poly(const FlatLattice& lattice) {
  if (!lattice.loopless)
    fail(ErrorCode::LoopError, "characteristic polynomial requires a loopless matroid");
  CharPoly p;
  p.coeffs.assign(lattice.rank + 1, 0);
  for (int f = 0; f < lattice.count(); ++f)
    p.coeffs[lattice.flat_rank[f]] =
        checked_add(p.coeffs[lattice.flat_rank[f]], lattice.mobius_bottom[f]);
  if (lattice.n >= 1 && p.eval(1) != 0)
    fail(ErrorCode::NotAMatroid, "characteristic polynomial does not vanish at 1");
  return p;
}

CharPoly char_poly(const Matroid& m) { return char_poly(FlatLattice::build(m)); }

long long beta(const Matroid& m) {
  if (m.size() < 1) fail(ErrorCode::InvalidInput, "beta requires a nonempty ground set");
  if (!m.is_loopless()) fail(ErrorCode::LoopError, "beta requires a loopless matroid");
  FlatLattice lat = FlatLattice::build(m);
  return lat.beta_interval(lat.bottom(), lat.top());
}

long long RankTwoProfile::total_lines() const {
  long long s = 0;
  for (const auto& [m, c] : t) s += c;
  return s;
}

RankTwoProfile rank2_profile(const Matroid& m) {
  if (m.rank() != 3) fail(ErrorCode::RankError, "rank-2 profile requires rank 3");
  if (!m.is_simple()) fail(ErrorCode::RankError, "rank-2 profile requires a simple matroid");
  RankTwoProfile p;
  p.n = m.size();
  for (Bits f : m.flats_by_rank()[2]) ++p.t[popcount(f)];
  long long pairs = 0;
  for (const auto& [sz, c] : p.t) pairs = checked_add(pairs, checked_mul(binomial(sz, 2), c));
  if (pairs != binomial(p.n, 2))
    fail(ErrorCode::NotAMatroid, "rank-2 flats do not cover each pair exactly once");
  return p;
}

RankTwoProfile uniform_rank3_profile(int n) {
  if (n < 3) fail(ErrorCode::InvalidInput, "uniform rank-3 profile needs n >= 3");
  RankTwoProfile p;
  p.n = n;
  p.t[2] = binomial(n, 2);
  return p;
}

}  // namespace chern
