#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "chern/analysis.hpp"
#include "chern/errors.hpp"
#include "chern/intersection.hpp"
#include "chern/io.hpp"

using namespace chern;

TEST_CASE("basis PL functions") {
  FlatLattice lat = FlatLattice::build(Matroid::uniform(3, 4));
  const int f_pt = lat.index_of(bit(0));
  const int f_line = lat.index_of(set_of({0, 1}));
  PlFunction phi = basis_pl(lat, f_line);
  CHECK(phi.value[f_line] == 1);
  CHECK(phi.value[f_pt] == 0);
  // linear on the cone of the chain {0} < {0,1}
  CHECK(phi.eval_in_cone({f_pt, f_line}, {Rat(1), Rat(1)}) == 1);
  CHECK(phi.eval_in_cone({f_pt, f_line}, {Rat(5), Rat(3)}) == 3);

  CHECK_THROWS_AS(basis_pl(lat, lat.bottom()), MatroidError);
  CHECK_THROWS_AS(basis_pl(lat, lat.top()), MatroidError);
}

TEST_CASE("divisor application") {
  FlatLattice lat = FlatLattice::build(Matroid::uniform(3, 4));
  MinkowskiWeight top = csm_cycle(lat, 2);

  PlFunction zero;
  zero.value.assign(lat.count(), Rat(0));
  MinkowskiWeight z = divisor_apply(lat, zero, top);
  CHECK(z.dim == 1);
  CHECK(z.is_zero());

  for (int f = lat.rank_offset[1]; f < lat.rank_offset[3]; ++f) {
    MinkowskiWeight cut = divisor_apply(lat, basis_pl(lat, f), top);
    CHECK(cut.dim == 1);
    CHECK(check_balanced(lat, cut));
  }

  CHECK_THROWS_AS(divisor_apply(lat, zero, csm_cycle(lat, 0)), MatroidError);
}

TEST_CASE("lift reproduces its target") {
  for (const Matroid& m : {Matroid::uniform(3, 4), Matroid::pg2(2), builtin("braid")}) {
    FlatLattice lat = FlatLattice::build(m);
    const int d = lat.rank - 1;
    MinkowskiWeight top = csm_cycle(lat, d);
    for (int k = 0; k <= d; ++k) {
      MinkowskiWeight target = csm_cycle(lat, k);
      ChainMonomialCombination comb = lift(lat, target);
      CHECK(comb.degree == d - k);
      MinkowskiWeight back = apply_combination(lat, comb, top);
      CHECK(back.dim == k);
      for (const FlatChain& chain : chains(lat, k)) CHECK(back.at(chain) == target.at(chain));
    }
  }
}

TEST_CASE("lift of the top cycle is the empty monomial") {
  FlatLattice lat = FlatLattice::build(Matroid::uniform(3, 4));
  ChainMonomialCombination comb = lift(lat, csm_cycle(lat, 2));
  REQUIRE(comb.terms.size() == 1);
  CHECK(comb.terms[0].first == 1);
  CHECK(comb.terms[0].second.flats.empty());
}

TEST_CASE("vertex weights from lifted factors") {
  // self-intersection of csm_1 on U_{3,4} and the Fano plane
  {
    FlatLattice lat = FlatLattice::build(Matroid::uniform(3, 4));
    MinkowskiWeight mid = csm_cycle(lat, 1);
    ChainMonomialCombination comb = lift(lat, mid);
    MinkowskiWeight point = apply_combination(lat, comb, mid);
    CHECK(vertex_weight(point) == 1);
  }
  {
    FlatLattice lat = FlatLattice::build(Matroid::pg2(2));
    MinkowskiWeight mid = csm_cycle(lat, 1);
    MinkowskiWeight point = apply_combination(lat, lift(lat, mid), mid);
    CHECK(vertex_weight(point) == 9);
    // lift of csm_0 applied to csm_2 recovers the vertex weight 3
    MinkowskiWeight v =
        apply_combination(lat, lift(lat, csm_cycle(lat, 0)), csm_cycle(lat, 2));
    CHECK(vertex_weight(v) == 3);
  }
}

TEST_CASE("chern numbers of table matroids") {
  CHECK(chern_number(Matroid::pg2(2), {{2, 0}}) == 9);
  CHECK(chern_number(Matroid::pg2(2), {{0, 1}}) == 3);
  CHECK(chern_number(Matroid::uniform(3, 7), {{2, 0}}) == 16);
  CHECK(chern_number(Matroid::uniform(3, 7), {{0, 1}}) == 10);
  CHECK(chern_number(Matroid::uniform(4, 6), {{3, 0, 0}}) == -8);
  CHECK(chern_number(builtin("braid"), {{2, 0}}) == 5);
  CHECK(chern_number(builtin("braid"), {{0, 1}}) == 2);
}

TEST_CASE("uniform engine values match the closed form") {
  for (int r = 2; r <= 4; ++r)
    for (int n = r; n <= 6; ++n) {
      IntersectionEngine engine(Matroid::uniform(r, n));
      for (const ChernExponents& e : all_exponents(r - 1))
        CHECK(engine.chern_number(e) == uniform_chern(r, n, e));
    }
}

TEST_CASE("exponent bookkeeping") {
  CHECK(all_exponents(1).size() == 1);
  CHECK(all_exponents(2).size() == 2);
  CHECK(all_exponents(3).size() == 3);
  for (const auto& e : all_exponents(4)) CHECK(e.valid());

  CHECK_THROWS_AS(chern_number(Matroid::uniform(3, 5), {{1, 1}}), MatroidError);
  CHECK_THROWS_AS(chern_number(Matroid::uniform(3, 5), {{3}}), MatroidError);
}

TEST_CASE("engine is independent of pivoting and carrier choice") {
  for (const Matroid& m : {Matroid::pg2(2), builtin("nonfano"), Matroid::uniform(4, 6)}) {
    const int d = m.rank() - 1;
    for (const ChernExponents& e : all_exponents(d)) {
      const long long forward = chern_number(m, e);
      EngineOptions reverse;
      reverse.pivot = PivotOrder::Reverse;
      CHECK(chern_number(m, e, reverse) == forward);
      for (int i = 1; i <= d; ++i) {
        if (e.k[i - 1] == 0) continue;
        EngineOptions alt;
        alt.carrier_codim = i;
        CHECK(chern_number(m, e, alt) == forward);
      }
    }
  }
}

TEST_CASE("chern numbers are relabeling-invariant") {
  std::mt19937 rng(19);
  for (const Matroid& m : {Matroid::pg2(2), builtin("braid")}) {
    std::vector<int> perm(m.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Matroid moved = m.relabeled(perm);
    for (const ChernExponents& e : all_exponents(m.rank() - 1))
      CHECK(chern_number(m, e) == chern_number(moved, e));
  }
}

TEST_CASE("loops are rejected") {
  Matroid loopy = Matroid::from_bases(3, {set_of({0, 1})});
  CHECK_THROWS_AS(chern_number(loopy, {{1}}), MatroidError);
}
