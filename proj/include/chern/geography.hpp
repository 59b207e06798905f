#pragma once

#include <string>
#include <vector>

#include "chern/analysis.hpp"
#include "chern/matroid.hpp"

namespace chern {

/// Every simple rank-3 matroid on n elements, exactly once up to isomorphism,
/// by orderly generation over canonical line families. 3 <= n <= 9; the
/// output order is deterministic and independent of the thread count.
std::vector<Matroid> enumerate_rank3(int n, int threads = 1);

struct GeographyRecord {
  int n = 0;
  ChernPair pair;
  std::string witness;  // hex canonical encoding of one representative
  long long classes = 0;
};

/// Achieved (c1sq, c2) pairs with isomorphism-class counts, sorted
/// lexicographically by pair.
std::vector<GeographyRecord> geography(int n, bool coloop_free, int threads = 1);

/// CSV with header n,c1sq,c2,classes,witness.
std::string geography_csv(const std::vector<GeographyRecord>& records);

}  // namespace chern
