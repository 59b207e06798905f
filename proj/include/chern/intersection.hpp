#pragma once

#include <optional>
#include <vector>

#include "chern/bergman.hpp"

namespace chern {

/// Piecewise linear function on the Bergman fan, determined by its values on
/// the rays u_F and linear on every cone.
struct PlFunction {
  std::vector<Rat> value;  // indexed by lattice flat index; bottom/top unused

  /// Value at sum coeff[i] * u_{chain[i]}, a point of the cone of `chain`.
  Rat eval_in_cone(const FlatChain& chain, const std::vector<Rat>& coeff) const;
};

/// Indicator PL function of one proper nonempty flat.
PlFunction basis_pl(const FlatLattice& lattice, int flat_index);

/// Weil-divisor intersection of a PL function with a balanced weight:
/// the output weight of tau is  sum_{sigma > tau} w(sigma) phi(v_sigma)
/// - phi_tau(sum_{sigma > tau} w(sigma) v_sigma), where v_sigma is the ray
/// sigma adds to tau and phi_tau extends phi linearly in tau's ray
/// coordinates. Throws balancing-violation if the summed vector leaves the
/// span of tau.
MinkowskiWeight divisor_apply(const FlatLattice& lattice, const PlFunction& phi,
                              const MinkowskiWeight& w);

/// A degree = multiplicity monomial in the basis PL functions, supported on
/// a chain (repeats allowed).
struct ChainMonomial {
  std::vector<int> flats;  // sorted lattice indices; support strictly nested
};

struct ChainMonomialCombination {
  int degree = 0;
  std::vector<std::pair<Rat, ChainMonomial>> terms;
};

enum class PivotOrder { Forward, Reverse };

/// Lifts a balanced weight of dimension k to a degree-(d-k) combination of
/// chain monomials whose application to csm_d reproduces it exactly. Any
/// solution of the (typically underdetermined) linear system is acceptable.
ChainMonomialCombination lift(const FlatLattice& lattice,
                              const MinkowskiWeight& w,
                              PivotOrder order = PivotOrder::Forward);

/// Applies every monomial of a combination to a weight and accumulates.
MinkowskiWeight apply_combination(const FlatLattice& lattice,
                                  const ChainMonomialCombination& comb,
                                  const MinkowskiWeight& w);

/// Exponent vector (k_1, .., k_d) with sum i*k_i = d.
struct ChernExponents {
  std::vector<long long> k;

  int d() const { return static_cast<int>(k.size()); }
  bool valid() const;
  std::string str() const;
};

/// All valid exponent vectors for a rank-(d+1) matroid.
std::vector<ChernExponents> all_exponents(int d);

struct EngineOptions {
  PivotOrder pivot = PivotOrder::Forward;
  /// Test hook: force the carrier to be the factor csm_{d-i} for this i
  /// (must name a factor with k_i > 0).
  std::optional<int> carrier_codim;
};

/// Caches csm cycles and lifts for repeated Chern-number queries against one
/// matroid. Pure queries over immutable data; distinct instances may be used
/// concurrently.
class IntersectionEngine {
 public:
  explicit IntersectionEngine(const Matroid& m, EngineOptions opt = {});

  long long chern_number(const ChernExponents& e);
  const FlatLattice& lattice() const { return lattice_; }
  const MinkowskiWeight& csm(int k);

 private:
  const ChainMonomialCombination& lift_of(int dim);

  FlatLattice lattice_;
  EngineOptions opt_;
  std::vector<std::optional<MinkowskiWeight>> csm_;
  std::vector<std::optional<ChainMonomialCombination>> lifts_;
};

/// One-shot Chern number per the vertex-multiplicity definition.
long long chern_number(const Matroid& m, const ChernExponents& e,
                       EngineOptions opt = {});

}  // namespace chern
