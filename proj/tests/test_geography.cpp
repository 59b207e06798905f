#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "chern/errors.hpp"
#include "chern/geography.hpp"
#include "chern/io.hpp"
#include "oracles.hpp"

using namespace chern;

TEST_CASE("smallest ground sets") {
  auto n3 = enumerate_rank3(3);
  REQUIRE(n3.size() == 1);
  CHECK(n3[0].canonical_form() == Matroid::uniform(3, 3).canonical_form());

  CHECK_THROWS_AS(enumerate_rank3(2), MatroidError);
  CHECK_THROWS_AS(enumerate_rank3(10), MatroidError);
}

TEST_CASE("enumeration matches the pruning-free oracle") {
  for (int n = 3; n <= 6; ++n) {
    auto classes = oracle::dumb_rank3_classes(n);
    auto enumerated = enumerate_rank3(n);
    CHECK(enumerated.size() == classes.size());
    std::set<std::vector<std::uint8_t>> seen;
    for (const Matroid& m : enumerated) {
      auto form = m.canonical_form();
      CHECK(classes.count(form) == 1);
      CHECK(seen.insert(form).second);  // exactly once up to isomorphism
    }
  }
}

TEST_CASE("known landmarks appear") {
  auto n6 = enumerate_rank3(6);
  bool braid_found = false;
  for (const Matroid& m : n6)
    braid_found |= m.canonical_form() == builtin("braid").canonical_form();
  CHECK(braid_found);

  auto n7 = enumerate_rank3(7);
  bool fano = false, nonfano = false;
  for (const Matroid& m : n7) {
    RankTwoProfile p = rank2_profile(m);
    if (p.count(3) == 7 && p.total_lines() == 7) fano = true;
    if (p.count(3) == 6 && p.count(2) == 3) nonfano = true;
  }
  CHECK(fano);
  CHECK(nonfano);
}

TEST_CASE("every output is a valid linear space") {
  for (const Matroid& m : enumerate_rank3(6)) {
    CHECK(m.is_simple());
    CHECK(m.rank() == 3);
    RankTwoProfile p = rank2_profile(m);  // construction-level validation
    long long rhs = 0;
    for (const auto& [sz, c] : p.t) rhs += (static_cast<long long>(sz) * sz - sz) * c;
    CHECK(rhs == static_cast<long long>(p.n) * p.n - p.n);
  }
}

TEST_CASE("enumeration is relabeling-complete") {
  std::mt19937 rng(23);
  auto all = enumerate_rank3(6);
  std::set<std::vector<std::uint8_t>> forms;
  for (const Matroid& m : all) forms.insert(m.canonical_form());
  std::vector<int> perm(6);
  std::iota(perm.begin(), perm.end(), 0);
  for (const Matroid& m : all) {
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(forms.count(m.relabeled(perm).canonical_form()) == 1);
  }
}

TEST_CASE("threading does not change the output") {
  auto seq = enumerate_rank3(6, 1);
  auto par = enumerate_rank3(6, 4);
  REQUIRE(seq.size() == par.size());
  for (size_t i = 0; i < seq.size(); ++i) CHECK(seq[i] == par[i]);

  CHECK(geography_csv(geography(6, false, 1)) == geography_csv(geography(6, false, 4)));
}

TEST_CASE("geography records") {
  auto n3 = geography(3, false);
  REQUIRE(n3.size() == 1);
  CHECK(n3[0].pair == ChernPair{0, 0});

  auto n4 = geography(4, false);
  bool has11 = false;
  for (const auto& r : n4) has11 |= r.pair == ChernPair{1, 1};
  CHECK(has11);

  auto n7 = geography(7, true);
  std::set<ChernPair> pairs;
  long long total = 0;
  for (const auto& r : n7) {
    pairs.insert(r.pair);
    total += r.classes;
    CHECK(!r.witness.empty());
  }
  CHECK(pairs.count(ChernPair{9, 3}) == 1);
  CHECK(pairs.count(ChernPair{10, 4}) == 1);
  CHECK(pairs.count(ChernPair{16, 10}) == 1);
  // records are sorted by pair
  CHECK(std::is_sorted(n7.begin(), n7.end(),
                       [](const auto& a, const auto& b) { return a.pair < b.pair; }));
  // coloop filter removes exactly the near-pencil class
  long long unfiltered = 0;
  for (const auto& r : geography(7, false)) unfiltered += r.classes;
  CHECK(unfiltered == total + 1);
}

TEST_CASE("csv shape") {
  auto csv = geography_csv(geography(4, false));
  CHECK(csv.rfind("n,c1sq,c2,classes,witness\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') >= 2);
}
