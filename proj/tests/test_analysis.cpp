#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chern/analysis.hpp"
#include "chern/errors.hpp"
#include "chern/io.hpp"

using namespace chern;

namespace {

RankTwoProfile profile(const Matroid& m) { return rank2_profile(m); }

}  // namespace

TEST_CASE("rank-3 closed forms") {
  CHECK(chern_rank3(profile(Matroid::pg2(2))) == ChernPair{9, 3});
  CHECK(chern_rank3(profile(builtin("braid"))) == ChernPair{5, 2});
  CHECK(chern_rank3(profile(builtin("nonfano"))) == ChernPair{10, 4});
  CHECK(chern_rank3(profile(builtin("pappus"))) == ChernPair{27, 12});
  CHECK(chern_rank3(profile(builtin("nonpappus"))) == ChernPair{28, 13});
}

TEST_CASE("alternate c1sq route") {
  CHECK(c1sq_alt(uniform_rank3_profile(7)) == 16);
  CHECK(c1sq_alt(profile(Matroid::pg2(2))) == 9);
  CHECK(c1sq_alt(profile(builtin("pappus"))) == 27);
  for (const char* name : {"fano", "nonfano", "pappus", "nonpappus", "braid"}) {
    RankTwoProfile p = profile(builtin(name));
    CHECK(c1sq_alt(p) == chern_rank3(p).c1sq);
  }
}

TEST_CASE("uniform closed form") {
  CHECK(uniform_chern(3, 5, {{2, 0}}) == 4);
  CHECK(uniform_chern(3, 5, {{0, 1}}) == 3);
  CHECK(uniform_chern(3, 9, {{0, 1}}) == 21);
  CHECK(uniform_chern(3, 3, {{2, 0}}) == 0);
  CHECK(uniform_chern(3, 3, {{0, 1}}) == 0);
  // agrees with the rank-3 profile formulas for all n
  for (int n = 3; n <= 12; ++n) {
    ChernPair c = chern_rank3(uniform_rank3_profile(n));
    CHECK(uniform_chern(3, n, {{2, 0}}) == c.c1sq);
    CHECK(uniform_chern(3, n, {{0, 1}}) == c.c2);
  }
}

TEST_CASE("projective plane closed form") {
  CHECK(pg_chern(2) == ChernPair{9, 3});
  CHECK(pg_chern(4) == ChernPair{135, 45});
  CHECK(pg_chern(8) == ChernPair{1323, 441});
  CHECK(pg_chern(9) == ChernPair{1920, 640});
}

TEST_CASE("melchior gap") {
  CHECK(melchior_gap(profile(Matroid::pg2(2))) == -3);
  CHECK(melchior_gap(uniform_rank3_profile(4)) == 3);
  CHECK(melchior_gap(profile(builtin("braid"))) == 0);
}

TEST_CASE("positivity") {
  TheoremReport fano = verify_positivity(Matroid::pg2(2));
  CHECK(fano.holds);
  CHECK(fano.equality_case == EqualityCase::None);

  Matroid near_pencil = Matroid::from_rank2_flats(6, {set_of({0, 1, 2, 3, 4})});
  TheoremReport pencil = verify_positivity(near_pencil);
  CHECK(pencil.holds);
  CHECK(pencil.equality_case == EqualityCase::Left);
  CHECK(chern_rank3(profile(near_pencil)) == ChernPair{0, 0});

  CHECK_THROWS_AS(verify_positivity(Matroid::uniform(4, 5)), MatroidError);
}

TEST_CASE("uniform bounds") {
  for (const char* name : {"fano", "nonfano", "pappus", "nonpappus", "braid"})
    CHECK(verify_uniform_bounds(builtin(name)).holds);
  CHECK(verify_uniform_bounds(Matroid::uniform(3, 6)).holds);
}

TEST_CASE("ratio bounds") {
  TheoremReport fano = verify_ratio(Matroid::pg2(2));
  CHECK(fano.holds);
  CHECK(fano.equality_case == EqualityCase::Right);

  TheoremReport pg3 = verify_ratio(Matroid::pg2(3));
  CHECK(pg3.holds);
  CHECK(pg3.equality_case == EqualityCase::Right);

  TheoremReport u37 = verify_ratio(Matroid::uniform(3, 7));
  CHECK(u37.holds);
  CHECK(u37.equality_case == EqualityCase::Left);

  TheoremReport np = verify_ratio(builtin("nonpappus"));
  CHECK(np.holds);
  CHECK(np.equality_case == EqualityCase::None);

  Matroid near_pencil = Matroid::from_rank2_flats(6, {set_of({0, 1, 2, 3, 4})});
  try {
    verify_ratio(near_pencil);
    FAIL("expected coloop-error");
  } catch (const MatroidError& e) {
    CHECK(e.code() == ErrorCode::ColoopError);
  }
}

TEST_CASE("conjecture checker") {
  TheoremReport fano = conjecture_check(Matroid::pg2(2), {{2, 0}});
  CHECK(fano.holds);
  CHECK(fano.equality_case == EqualityCase::None);  // 9 < 16

  TheoremReport u = conjecture_check(Matroid::uniform(3, 6), {{0, 1}});
  CHECK(u.holds);
  CHECK(u.equality_case == EqualityCase::Left);  // equality for the uniform itself
}
