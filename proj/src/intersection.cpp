#include "chern/intersection.hpp"

#include <algorithm>
#include <map>

#include "chern/errors.hpp"
#include "chern/linalg.hpp"

namespace chern {

Rat PlFunction::eval_in_cone(const FlatChain& chain, const std::vector<Rat>& coeff) const {
  if (chain.size() != coeff.size())
    fail(ErrorCode::InvalidInput, "cone coordinates do not match the chain length");
  Rat acc(0);
  for (size_t i = 0; i < chain.size(); ++i) acc += coeff[i] * value[chain[i]];
  return acc;
}

PlFunction basis_pl(const FlatLattice& lattice, int flat_index) {
  if (flat_index <= lattice.bottom() || flat_index >= lattice.top())
    fail(ErrorCode::InvalidFlat, "basis PL functions live on proper nonempty flats");
  PlFunction phi;
  phi.value.assign(lattice.count(), Rat(0));
  phi.value[flat_index] = 1;
  return phi;
}

MinkowskiWeight divisor_apply(const FlatLattice& lattice, const PlFunction& phi,
                              const MinkowskiWeight& w) {
  if (w.dim < 1)
    fail(ErrorCode::DimensionError, "divisor intersection needs a cycle of dimension >= 1");
  MinkowskiWeight out;
  out.dim = w.dim - 1;
  for (const auto& [tau, entries] : weight_star(lattice, w)) {
    Rat first(0);
    std::vector<Rat> total(lattice.n, Rat(0));
    for (const auto& [f, weight] : entries) {
      first += weight * phi.value[f];
      auto v = lattice_vector(lattice.flats[f], lattice.n);
      for (int i = 0; i < lattice.n; ++i) total[i] += weight * rat_of(v[i]);
    }
    std::vector<std::vector<Rat>> span;
    for (int c : tau) {
      auto v = lattice_vector(lattice.flats[c], lattice.n);
      std::vector<Rat> col(lattice.n);
      for (int i = 0; i < lattice.n; ++i) col[i] = rat_of(v[i]);
      span.push_back(std::move(col));
    }
    auto coords = express_in_span(span, total);
    if (!coords)
      fail(ErrorCode::BalancingViolation,
           "weighted fan is not balanced around a codimension-1 face");
    Rat second(0);
    for (size_t i = 0; i < tau.size(); ++i) second += (*coords)[i] * phi.value[tau[i]];
    out.set(tau, first - second);
  }
  return out;
}

namespace {

MinkowskiWeight apply_monomial(const FlatLattice& lattice, const ChainMonomial& m,
                               const MinkowskiWeight& w) {
  MinkowskiWeight cur = w;
  for (int f : m.flats) cur = divisor_apply(lattice, basis_pl(lattice, f), cur);
  return cur;
}

}  // namespace

ChainMonomialCombination lift(const FlatLattice& lattice, const MinkowskiWeight& w,
                              PivotOrder order) {
  const int d = lattice.rank - 1;
  const int k = w.dim;
  if (k < 0 || k > d) fail(ErrorCode::DimensionError, "cycle dimension out of range");
  const int degree = d - k;

  const std::vector<FlatChain> k_chains = chains(lattice, k);
  std::map<FlatChain, size_t> row_of;
  for (size_t i = 0; i < k_chains.size(); ++i) row_of[k_chains[i]] = i;

  std::vector<ChainMonomial> monomials;
  std::vector<std::vector<Rat>> columns;  // per monomial, dense over rows
  const MinkowskiWeight top = csm_cycle(lattice, d);
  const int first = lattice.rank_offset[1];
  const int last = lattice.rank_offset[lattice.rank];

  ChainMonomial current;
  auto record = [&](const MinkowskiWeight& applied) {
    monomials.push_back(current);
    std::vector<Rat> col(k_chains.size(), Rat(0));
    for (const auto& [chain, val] : applied.weights) col[row_of.at(chain)] = val;
    columns.push_back(std::move(col));
  };
  // DFS over multisets with chain support, sharing the partially applied
  // weight along the prefix.
  auto rec = [&](auto&& self, int from, const MinkowskiWeight& applied) -> void {
    if (static_cast<int>(current.flats.size()) == degree) {
      record(applied);
      return;
    }
    for (int f = from; f < last; ++f) {
      if (!current.flats.empty() && f != current.flats.back() &&
          !subset_of(lattice.flats[current.flats.back()], lattice.flats[f]))
        continue;
      current.flats.push_back(f);
      self(self, f, divisor_apply(lattice, basis_pl(lattice, f), applied));
      current.flats.pop_back();
    }
  };
  rec(rec, first, top);

  // Row-major system: one equation per k-chain, one unknown per monomial.
  std::vector<std::vector<Rat>> rows(k_chains.size(), std::vector<Rat>(monomials.size(), Rat(0)));
  std::vector<Rat> rhs(k_chains.size(), Rat(0));
  for (size_t j = 0; j < monomials.size(); ++j)
    for (size_t i = 0; i < k_chains.size(); ++i) rows[i][j] = columns[j][i];
  for (size_t i = 0; i < k_chains.size(); ++i) rhs[i] = w.at(k_chains[i]);

  auto sol = solve_linear_system(std::move(rows), std::move(rhs),
                                 order == PivotOrder::Forward ? Pivoting::FirstFeasible
                                                              : Pivoting::Reverse);
  if (!sol)
    fail(ErrorCode::LiftFailure,
         "no chain-monomial combination reproduces the given weights");

  ChainMonomialCombination comb;
  comb.degree = degree;
  for (size_t j = 0; j < monomials.size(); ++j)
    if ((*sol)[j] != 0) comb.terms.emplace_back((*sol)[j], monomials[j]);
  return comb;
}

MinkowskiWeight apply_combination(const FlatLattice& lattice,
                                  const ChainMonomialCombination& comb,
                                  const MinkowskiWeight& w) {
  MinkowskiWeight out;
  out.dim = w.dim - comb.degree;
  if (out.dim < 0) fail(ErrorCode::DimensionError, "combination degree exceeds cycle dimension");
  for (const auto& [coeff, monomial] : comb.terms) {
    MinkowskiWeight part = apply_monomial(lattice, monomial, w);
    for (const auto& [chain, val] : part.weights) out.set(chain, out.at(chain) + coeff * val);
  }
  return out;
}

bool ChernExponents::valid() const {
  long long total = 0;
  for (size_t i = 0; i < k.size(); ++i) {
    if (k[i] < 0) return false;
    total += static_cast<long long>(i + 1) * k[i];
  }
  return total == static_cast<long long>(k.size());
}

std::string ChernExponents::str() const {
  std::string out = "(";
  for (size_t i = 0; i < k.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(k[i]);
  }
  return out + ")";
}

std::vector<ChernExponents> all_exponents(int d) {
  std::vector<ChernExponents> out;
  std::vector<long long> k(d, 0);
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (i == d) {
      if (remaining == 0) out.push_back(ChernExponents{k});
      return;
    }
    for (int c = 0; c * (i + 1) <= remaining; ++c) {
      k[i] = c;
      self(self, i + 1, remaining - c * (i + 1));
    }
    k[i] = 0;
  };
  rec(rec, 0, d);
  return out;
}

IntersectionEngine::IntersectionEngine(const Matroid& m, EngineOptions opt)
    : lattice_(FlatLattice::build(m)), opt_(opt) {
  if (!lattice_.loopless)
    fail(ErrorCode::LoopError, "Chern numbers are defined for loopless matroids");
  csm_.resize(lattice_.rank);
  lifts_.resize(lattice_.rank);
}

const MinkowskiWeight& IntersectionEngine::csm(int k) {
  if (k < 0 || k >= static_cast<int>(csm_.size()))
    fail(ErrorCode::DimensionError, "csm dimension out of range");
  if (!csm_[k]) csm_[k] = csm_cycle(lattice_, k);
  return *csm_[k];
}

const ChainMonomialCombination& IntersectionEngine::lift_of(int dim) {
  if (!lifts_[dim]) lifts_[dim] = lift(lattice_, csm(dim), opt_.pivot);
  return *lifts_[dim];
}

long long IntersectionEngine::chern_number(const ChernExponents& e) {
  const int d = lattice_.rank - 1;
  if (e.d() != d || !e.valid())
    fail(ErrorCode::InvalidExponents,
         "exponents " + e.str() + " do not satisfy sum i*k_i = " + std::to_string(d));
  if (d == 0) return vertex_weight(csm(0));

  int carrier = 0;  // codimension i of the carrier factor csm_{d-i}
  if (opt_.carrier_codim) {
    carrier = *opt_.carrier_codim;
    if (carrier < 1 || carrier > d || e.k[carrier - 1] == 0)
      fail(ErrorCode::InvalidExponents, "carrier override names an absent factor");
  } else {
    while (e.k[carrier] == 0) ++carrier;
    ++carrier;  // 1-based codimension
  }

  MinkowskiWeight current = csm(d - carrier);
  for (int i = 1; i <= d; ++i) {
    long long copies = e.k[i - 1] - (i == carrier ? 1 : 0);
    for (long long c = 0; c < copies; ++c)
      current = apply_combination(lattice_, lift_of(d - i), current);
  }
  return rat_to_ll(vertex_weight_exact(current));
}

long long chern_number(const Matroid& m, const ChernExponents& e, EngineOptions opt) {
  IntersectionEngine engine(m, opt);
  return engine.chern_number(e);
}

}  // namespace chern
