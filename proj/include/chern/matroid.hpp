#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "chern/subset.hpp"

namespace chern {

/// A matroid on ground set {0, .., n-1}, stored as its full lattice of flats
/// grouped by rank. Flats are materialized eagerly at construction; every
/// query (rank, closure, loops, minors) reads the lattice. Instances are
/// immutable after construction and safe to share across threads.
class Matroid {
 public:
  /// Uniform matroid U_{r,n}: every subset of size < r is independent.
  static Matroid uniform(int r, int n);

  /// Simple rank-3 matroid from its big (size >= 3) rank-2 flats; all
  /// remaining pairs become 2-point flats. This is the linear-space encoding.
  static Matroid from_rank2_flats(int n, const std::vector<Bits>& big_flats,
                                  std::string label = "");

  /// Finite projective plane PG(2,q) on q^2+q+1 points. q must be prime or
  /// one of {4, 8, 9}.
  static Matroid pg2(int q);

  /// General constructor from a list of bases; the exchange axiom is checked
  /// exhaustively and the flat lattice is built from the induced rank
  /// function.
  static Matroid from_bases(int n, const std::vector<Bits>& bases,
                            std::string label = "");

  /// Builds the flat lattice by closure BFS over an arbitrary rank oracle.
  /// The oracle must be a genuine matroid rank function.
  static Matroid from_rank_oracle(int n, int rank,
                                  const std::function<int(Bits)>& rank_fn,
                                  std::string label = "");

  int size() const { return n_; }
  int rank() const { return rank_; }
  Bits ground_set() const { return full_set(n_); }
  const std::string& label() const { return label_; }

  /// flats_by_rank()[r] lists the rank-r flats, each sorted ascending by mask.
  const std::vector<std::vector<Bits>>& flats_by_rank() const {
    return flats_by_rank_;
  }

  /// Rank of an arbitrary subset = rank of the smallest flat containing it.
  int rank_of(Bits s) const;

  /// Smallest flat containing s.
  Bits closure(Bits s) const;

  Bits loops() const;
  Bits coloops() const;
  bool is_loopless() const { return loops() == 0; }
  bool is_simple() const;
  bool has_coloop() const { return coloops() != 0; }

  /// Minors. Ground elements are re-indexed to 0..m-1 in increasing order of
  /// the kept original labels (see kept_elements).
  Matroid delete_elements(Bits x) const;
  Matroid restrict_to(Bits t) const { return delete_elements(ground_set() & ~t); }
  Matroid contract(Bits x) const;

  /// Canonical byte encoding: equal iff the matroids differ by a ground-set
  /// permutation. Brute-force minimum over all permutations for n <= 8, an
  /// invariant-refinement/brute-force hybrid for 9..limit.
  std::vector<std::uint8_t> canonical_form(int limit = 10) const;

  /// Labeled equality (same flats on the same ground set).
  bool operator==(const Matroid& o) const {
    return n_ == o.n_ && rank_ == o.rank_ && flats_by_rank_ == o.flats_by_rank_;
  }

  Matroid relabeled(const std::vector<int>& perm, std::string label = "") const;

 private:
  Matroid() = default;

  int n_ = 0;
  int rank_ = 0;
  std::vector<std::vector<Bits>> flats_by_rank_;
  std::string label_;
};

/// New-index -> old-label map for the minor that keeps exactly `keep`.
std::vector<int> kept_elements(Bits keep);

std::string hex_encoding(const std::vector<std::uint8_t>& bytes);

}  // namespace chern
