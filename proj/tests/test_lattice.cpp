#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chern/errors.hpp"
#include "chern/io.hpp"
#include "chern/lattice.hpp"
#include "chern/rational.hpp"
#include "oracles.hpp"

using namespace chern;

namespace {

std::vector<Matroid> corpus() {
  return {Matroid::uniform(3, 4), Matroid::uniform(3, 7), Matroid::uniform(2, 5),
          Matroid::uniform(4, 6), Matroid::pg2(2),        builtin("nonfano"),
          builtin("braid"),       builtin("pappus"),      builtin("nonpappus")};
}

}  // namespace

TEST_CASE("mobius values") {
  Matroid fano = Matroid::pg2(2);
  FlatLattice lat = FlatLattice::build(fano);
  CHECK(lat.mobius(lat.bottom(), lat.bottom()) == 1);
  for (int f = lat.rank_offset[1]; f < lat.rank_offset[2]; ++f) {
    CHECK(lat.mobius_bottom[f] == -1);
    CHECK(lat.mobius(lat.bottom(), f) == -1);
  }
  // rank-2 flat of size m in a simple rank-3 matroid: mu = m-1
  for (const Matroid& m : corpus()) {
    if (m.rank() != 3 || !m.is_simple()) continue;
    FlatLattice l = FlatLattice::build(m);
    for (int f = l.rank_offset[2]; f < l.rank_offset[3]; ++f)
      CHECK(l.mobius_bottom[f] == popcount(l.flats[f]) - 1);
  }
}

TEST_CASE("mobius interval sums vanish") {
  for (const Matroid& m : corpus()) {
    FlatLattice lat = FlatLattice::build(m);
    for (int g = 1; g < lat.count(); ++g) {
      long long total = 0;
      for (int f = 0; f <= g; ++f)
        if (subset_of(lat.flats[f], lat.flats[g])) total += lat.mobius_bottom[f];
      CHECK(total == 0);
      CHECK(lat.mobius(0, g) == lat.mobius_bottom[g]);
    }
  }
}

TEST_CASE("characteristic polynomial") {
  CHECK(char_poly(Matroid::uniform(3, 4)).coeffs == std::vector<long long>{1, -4, 6, -3});
  CHECK(char_poly(Matroid::pg2(2)).coeffs == std::vector<long long>{1, -7, 14, -8});
  CHECK(char_poly(Matroid::uniform(1, 1)).coeffs == std::vector<long long>{1, -1});

  // Whitney rank-sum route, which never touches the Mobius function
  for (const Matroid& m : corpus()) {
    if (m.size() > 9) continue;
    CHECK(char_poly(m).coeffs == oracle::whitney_char_poly(m));
  }

  for (const Matroid& m : corpus()) {
    CharPoly chi = char_poly(m);
    CHECK(chi.coeffs[0] == 1);
    CHECK(chi.eval(1) == 0);
    CHECK_NOTHROW(chi.reduced());
  }

  Matroid loopy = Matroid::from_bases(3, {set_of({0, 1})});
  CHECK_THROWS_AS(char_poly(loopy), MatroidError);
  CHECK_THROWS_AS(beta(loopy), MatroidError);
}

TEST_CASE("beta invariant") {
  CHECK(beta(Matroid::pg2(2)) == 3);
  CHECK(beta(Matroid::uniform(3, 7)) == 10);
  for (int n = 3; n <= 9; ++n) CHECK(beta(Matroid::uniform(3, n)) == binomial(n - 2, 2));

  // a coloop disconnects, so beta vanishes
  Matroid near_pencil = Matroid::from_rank2_flats(6, {set_of({0, 1, 2, 3, 4})});
  CHECK(beta(near_pencil) == 0);

  // Crapo recursion beta(M) = beta(M\i) + beta(M/i) for non-(co)loops
  for (const Matroid& m : corpus()) {
    if (m.size() > 9) continue;
    for (int e = 0; e < m.size(); ++e) {
      if (has(m.loops(), e) || has(m.coloops(), e)) continue;
      CHECK(beta(m) == beta(m.delete_elements(bit(e))) + beta(m.contract(bit(e))));
    }
  }
}

TEST_CASE("interval beta equals minor beta") {
  for (const Matroid& m : corpus()) {
    if (m.size() > 9) continue;
    FlatLattice lat = FlatLattice::build(m);
    for (int f = 0; f < lat.count(); ++f)
      for (int g = f + 1; g < lat.count(); ++g) {
        if (!subset_of(lat.flats[f], lat.flats[g])) continue;
        Matroid minor = m.restrict_to(lat.flats[g]).contract(set_of([&] {
          std::vector<int> xs;
          auto kept = kept_elements(lat.flats[g]);
          for (int i = 0; i < static_cast<int>(kept.size()); ++i)
            if (has(lat.flats[f], kept[i])) xs.push_back(i);
          return xs;
        }()));
        CHECK(lat.beta_interval(f, g) == beta(minor));
      }
  }
}

TEST_CASE("rank-2 profiles") {
  RankTwoProfile fano = rank2_profile(Matroid::pg2(2));
  CHECK(fano.count(3) == 7);
  CHECK(fano.count(2) == 0);

  CHECK(rank2_profile(Matroid::uniform(3, 5)).count(2) == 10);

  RankTwoProfile pappus = rank2_profile(builtin("pappus"));
  CHECK(pappus.count(3) == 9);
  CHECK(pappus.count(2) == 9);

  CHECK_THROWS_AS(rank2_profile(Matroid::uniform(4, 5)), MatroidError);

  // the profile identity n^2 - n = sum (m^2 - m) t_m
  for (const Matroid& m : corpus()) {
    if (m.rank() != 3 || !m.is_simple()) continue;
    RankTwoProfile p = rank2_profile(m);
    long long rhs = 0;
    for (const auto& [sz, c] : p.t) rhs += (static_cast<long long>(sz) * sz - sz) * c;
    CHECK(rhs == static_cast<long long>(p.n) * p.n - p.n);
  }
}
