#pragma once

#include <map>
#include <vector>

#include "chern/lattice.hpp"
#include "chern/rational.hpp"

namespace chern {

/// A cone of the Bergman fan: a strictly nested chain of proper nonempty
/// flats, stored as increasing lattice indices.
using FlatChain = std::vector<int>;

/// Weighted k-skeleton of the Bergman fan; zero weights are omitted. Weights
/// are kept as exact rationals so divisor intersections compose; CSM cycles
/// themselves are always integral.
struct MinkowskiWeight {
  int dim = 0;
  std::map<FlatChain, Rat> weights;

  Rat at(const FlatChain& c) const {
    auto it = weights.find(c);
    return it == weights.end() ? Rat(0) : it->second;
  }
  void set(const FlatChain& c, const Rat& v) {
    if (v == 0)
      weights.erase(c);
    else
      weights[c] = v;
  }
  bool is_zero() const { return weights.empty(); }
  bool is_integral() const;
};

/// Representative of u_F in N = Z^E / Z*1, canonicalized by pinning the
/// coordinate of element n-1 to 0. The returned vector has length n.
std::vector<long long> lattice_vector(Bits flat, int n);

/// All strictly increasing length-k chains of proper nonempty flats.
std::vector<FlatChain> chains(const FlatLattice& lattice, int k);

/// Weight of one cone of csm_k: (-1)^{d-k} * prod beta(M|F_{i+1}/F_i) over
/// the chain extended by the bottom and top flats.
long long csm_weight(const FlatLattice& lattice, const FlatChain& chain);

/// The k-dimensional CSM cycle of a loopless matroid.
MinkowskiWeight csm_cycle(const FlatLattice& lattice, int k);

/// Standard balancing condition: around every (k-1)-chain tau, the weighted
/// sum of the inserted rays lies in the rational span of tau's rays.
bool check_balanced(const FlatLattice& lattice, const MinkowskiWeight& w);

/// The unique weight of a 0-dimensional Minkowski weight, as an integer.
long long vertex_weight(const MinkowskiWeight& w);
Rat vertex_weight_exact(const MinkowskiWeight& w);

/// Star of the codim-1 faces: for every (k-1)-chain bounding a nonzero cone
/// of w, the (inserted flat index, cone weight) pairs over all k-cones of
/// the fan containing it.
std::map<FlatChain, std::vector<std::pair<int, Rat>>> weight_star(
    const FlatLattice& lattice, const MinkowskiWeight& w);

}  // namespace chern
