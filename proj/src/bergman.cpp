#include "chern/bergman.hpp"

#include <algorithm>
#include <set>

#include "chern/errors.hpp"
#include "chern/linalg.hpp"

namespace chern {

namespace {

void require_loopless(const FlatLattice& lattice) {
  if (!lattice.loopless)
    fail(ErrorCode::LoopError, "the Bergman fan is defined for loopless matroids");
}

// Can `f` extend `chain` to a strictly nested chain? Entries are ordered by
// rank, so f must contain everything of lower rank and sit inside everything
// of higher rank.
bool insertable(const FlatLattice& lattice, const FlatChain& chain, int f) {
  for (int c : chain) {
    if (lattice.flat_rank[c] == lattice.flat_rank[f]) return false;
    if (lattice.flat_rank[c] < lattice.flat_rank[f]) {
      if (!subset_of(lattice.flats[c], lattice.flats[f])) return false;
    } else if (!subset_of(lattice.flats[f], lattice.flats[c])) {
      return false;
    }
  }
  return true;
}

FlatChain inserted(const FlatLattice& lattice, const FlatChain& chain, int f) {
  FlatChain out = chain;
  out.insert(std::upper_bound(out.begin(), out.end(), f), f);
  (void)lattice;
  return out;
}

// All (codim-1 chain, inserted flat, weight) incidences around the support
// of w, grouped by the smaller chain.
std::map<FlatChain, std::vector<std::pair<int, Rat>>> star_of_boundaries(
    const FlatLattice& lattice, const MinkowskiWeight& w) {
  std::set<FlatChain> taus;
  for (const auto& [chain, weight] : w.weights) {
    for (size_t drop = 0; drop < chain.size(); ++drop) {
      FlatChain tau = chain;
      tau.erase(tau.begin() + drop);
      taus.insert(std::move(tau));
    }
  }
  std::map<FlatChain, std::vector<std::pair<int, Rat>>> star;
  const int first = lattice.rank_offset[1];
  const int last = lattice.rank_offset[lattice.rank];  // proper flats only
  for (const auto& tau : taus) {
    auto& entries = star[tau];
    for (int f = first; f < last; ++f) {
      if (!insertable(lattice, tau, f)) continue;
      Rat weight = w.at(inserted(lattice, tau, f));
      if (weight != 0) entries.emplace_back(f, weight);
    }
  }
  return star;
}

}  // namespace

bool MinkowskiWeight::is_integral() const {
  for (const auto& [chain, weight] : weights)
    if (!chern::is_integral(weight)) return false;
  return true;
}

std::vector<long long> lattice_vector(Bits flat, int n) {
  std::vector<long long> v(n, 0);
  const bool pin = has(flat, n - 1);
  for (int i = 0; i < n - 1; ++i) v[i] = (has(flat, i) ? 1 : 0) - (pin ? 1 : 0);
  return v;
}

std::vector<FlatChain> chains(const FlatLattice& lattice, int k) {
  require_loopless(lattice);
  const int d = lattice.rank - 1;
  if (k < 0 || k > d)
    fail(ErrorCode::DimensionError, "chain length " + std::to_string(k) +
                                        " out of range 0.." + std::to_string(d));
  std::vector<FlatChain> out;
  FlatChain current;
  const int first = lattice.rank_offset[1];
  const int last = lattice.rank_offset[lattice.rank];
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(current.size()) == k) {
      out.push_back(current);
      return;
    }
    for (int f = from; f < last; ++f) {
      if (!current.empty() &&
          !subset_of(lattice.flats[current.back()], lattice.flats[f]))
        continue;
      if (!current.empty() &&
          lattice.flat_rank[current.back()] == lattice.flat_rank[f])
        continue;
      current.push_back(f);
      self(self, f + 1);
      current.pop_back();
    }
  };
  rec(rec, first);
  return out;
}

long long csm_weight(const FlatLattice& lattice, const FlatChain& chain) {
  require_loopless(lattice);
  const int d = lattice.rank - 1;
  const int k = static_cast<int>(chain.size());
  if (k > d) fail(ErrorCode::DimensionError, "chain longer than the fan dimension");
  for (int i = 0; i < k; ++i) {
    const int f = chain[i];
    if (f <= lattice.bottom() || f >= lattice.top())
      fail(ErrorCode::InvalidInput, "chain entries must be proper nonempty flats");
    if (i > 0 && !(chain[i - 1] < f &&
                   subset_of(lattice.flats[chain[i - 1]], lattice.flats[f]) &&
                   lattice.flats[chain[i - 1]] != lattice.flats[f]))
      fail(ErrorCode::InvalidInput, "chain is not strictly nested");
  }
  long long prod = 1;
  int below = lattice.bottom();
  for (int i = 0; i <= k && prod != 0; ++i) {
    const int above = i == k ? lattice.top() : chain[i];
    prod = checked_mul(prod, lattice.beta_interval(below, above));
    below = above;
  }
  return (d - k) % 2 == 0 ? prod : -prod;
}

MinkowskiWeight csm_cycle(const FlatLattice& lattice, int k) {
  MinkowskiWeight w;
  w.dim = k;
  for (const FlatChain& chain : chains(lattice, k)) {
    long long weight = csm_weight(lattice, chain);
    if (weight != 0) w.weights.emplace(chain, rat_of(weight));
  }
  return w;
}

bool check_balanced(const FlatLattice& lattice, const MinkowskiWeight& w) {
  if (w.dim == 0) return true;
  const int n = lattice.n;
  for (const auto& [tau, entries] : star_of_boundaries(lattice, w)) {
    std::vector<Rat> total(n, Rat(0));
    for (const auto& [f, weight] : entries) {
      auto v = lattice_vector(lattice.flats[f], n);
      for (int i = 0; i < n; ++i) total[i] += weight * rat_of(v[i]);
    }
    std::vector<std::vector<Rat>> span;
    for (int c : tau) {
      auto v = lattice_vector(lattice.flats[c], n);
      std::vector<Rat> col(n);
      for (int i = 0; i < n; ++i) col[i] = rat_of(v[i]);
      span.push_back(std::move(col));
    }
    if (!express_in_span(span, total)) return false;
  }
  return true;
}

Rat vertex_weight_exact(const MinkowskiWeight& w) {
  if (w.dim != 0)
    fail(ErrorCode::DimensionError, "vertex weight of a positive-dimensional cycle");
  return w.at({});
}

long long vertex_weight(const MinkowskiWeight& w) {
  return rat_to_ll(vertex_weight_exact(w));
}

std::map<FlatChain, std::vector<std::pair<int, Rat>>> weight_star(
    const FlatLattice& lattice, const MinkowskiWeight& w) {
  return star_of_boundaries(lattice, w);
}

}  // namespace chern
