#include "chern/matroid.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "chern/errors.hpp"
#include "chern/rational.hpp"

namespace chern {

namespace {

std::vector<Bits> all_k_subsets(int n, int k) {
  std::vector<Bits> out;
  if (k > n || k < 0) return out;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    out.push_back(set_of(idx));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

// Finite field of order q for prime q and q in {4, 8, 9}; elements are
// 0..q-1, prime powers encoded as base-p coefficient vectors of polynomials
// reduced modulo an irreducible one.
class Field {
 public:
  explicit Field(int q) : q_(q) {
    int p = smallest_prime_factor(q);
    int k = 0;
    for (int m = q; m > 1; m /= p) {
      if (m % p != 0) fail(ErrorCode::UnsupportedOrder, "q must be a prime power");
      ++k;
    }
    if (k == 1) {
      prime_ = q;
      return;
    }
    // Irreducible polynomials for the supported prime-power orders, stored
    // as base-p digit encodings of x^k + ... below the leading term.
    int reduct;
    if (q == 4) reduct = 3;        // x^2 + x + 1 over GF(2)
    else if (q == 8) reduct = 3;   // x^3 + x + 1 over GF(2)
    else if (q == 9) reduct = 1;   // x^2 + 1 over GF(3)
    else fail(ErrorCode::UnsupportedOrder, "supported orders: primes and {4,8,9}");
    prime_ = p;
    mul_.assign(q * q, 0);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) mul_[a * q + b] = poly_mul(a, b, p, k, reduct);
  }

  int add(int a, int b) const {
    if (mul_.empty()) return (a + b) % q_;
    int r = 0, pw = 1;
    for (int i = 0; pw < q_; ++i, pw *= prime_)
      r += ((a / pw + b / pw) % prime_) * pw;
    return r;
  }

  int mul(int a, int b) const {
    if (mul_.empty()) return (a * b) % q_;
    return mul_[a * q_ + b];
  }

  int size() const { return q_; }

  static bool supported(int q) {
    if (q < 2) return false;
    if (smallest_prime_factor(q) == q) return true;
    return q == 4 || q == 8 || q == 9;
  }

 private:
  static int smallest_prime_factor(int q) {
    for (int d = 2; d * d <= q; ++d)
      if (q % d == 0) return d;
    return q;
  }

  // Multiplies two polynomials given as base-p digit strings and reduces by
  // x^k = reduct.
  static int poly_mul(int a, int b, int p, int k, int reduct) {
    std::array<int, 8> prod{};
    for (int i = 0, ai = a; ai > 0; ++i, ai /= p)
      for (int j = 0, bj = b; bj > 0; ++j, bj /= p)
        prod[i + j] = (prod[i + j] + (ai % p) * (bj % p)) % p;
    for (int deg = 2 * (k - 1); deg >= k; --deg) {
      int c = prod[deg];
      if (c == 0) continue;
      prod[deg] = 0;
      for (int j = 0, rj = reduct; rj > 0; ++j, rj /= p)
        prod[deg - k + j] = (prod[deg - k + j] + c * (rj % p)) % p;
    }
    int r = 0, pw = 1;
    for (int i = 0; i < k; ++i, pw *= p) r += prod[i] * pw;
    return r;
  }

  int q_;
  int prime_ = 0;
  std::vector<int> mul_;  // empty for prime fields
};

}  // namespace

std::vector<int> kept_elements(Bits keep) { return elements(keep); }

std::string hex_encoding(const std::vector<std::uint8_t>& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

Matroid Matroid::from_rank_oracle(int n, int rank,
                                  const std::function<int(Bits)>& rank_fn,
                                  std::string label) {
  if (n < 0 || n > kMaxGroundSize) fail(ErrorCode::InvalidInput, "ground set size out of range");
  Matroid m;
  m.n_ = n;
  m.rank_ = rank;
  m.label_ = std::move(label);
  const Bits ground = full_set(n);

  auto close = [&](Bits s) {
    int r = rank_fn(s);
    Bits c = s;
    for (int e = 0; e < n; ++e) {
      if (has(c, e)) continue;
      if (rank_fn(s | bit(e)) == r) c |= bit(e);
    }
    return c;
  };

  m.flats_by_rank_.assign(rank + 1, {});
  m.flats_by_rank_[0].push_back(close(0));
  for (int r = 0; r < rank; ++r) {
    std::set<Bits> next;
    for (Bits f : m.flats_by_rank_[r]) {
      for (int e = 0; e < n; ++e) {
        if (has(f, e)) continue;
        next.insert(close(f | bit(e)));
      }
    }
    if (next.empty()) fail(ErrorCode::NotAMatroid, "rank function is not graded to the stated rank");
    m.flats_by_rank_[r + 1].assign(next.begin(), next.end());
  }
  if (m.flats_by_rank_[rank] != std::vector<Bits>{ground})
    fail(ErrorCode::NotAMatroid, "top flat is not the full ground set");
  return m;
}

Matroid Matroid::uniform(int r, int n) {
  if (r < 1 || n < 1) fail(ErrorCode::InvalidInput, "uniform matroid needs 1 <= r <= n");
  if (r > n) fail(ErrorCode::InvalidInput, "uniform matroid needs r <= n");
  if (n > kMaxGroundSize) fail(ErrorCode::InvalidInput, "ground set too large");
  Matroid m;
  m.n_ = n;
  m.rank_ = r;
  m.label_ = "U(" + std::to_string(r) + "," + std::to_string(n) + ")";
  m.flats_by_rank_.assign(r + 1, {});
  for (int k = 0; k < r; ++k) m.flats_by_rank_[k] = all_k_subsets(n, k);
  m.flats_by_rank_[r] = {full_set(n)};
  return m;
}

Matroid Matroid::from_rank2_flats(int n, const std::vector<Bits>& big_flats,
                                  std::string label) {
  if (n < 3 || n > kMaxGroundSize)
    fail(ErrorCode::InvalidInput, "simple rank-3 matroid needs 3 <= n <= " +
                                      std::to_string(kMaxGroundSize));
  const Bits ground = full_set(n);
  for (size_t i = 0; i < big_flats.size(); ++i) {
    if (!subset_of(big_flats[i], ground))
      fail(ErrorCode::InvalidInput, "flat " + subset_str(big_flats[i]) + " leaves the ground set");
    int sz = popcount(big_flats[i]);
    if (sz < 3)
      fail(ErrorCode::InvalidInput, "rank-2 flat " + subset_str(big_flats[i]) + " has size < 3");
    if (sz >= n)
      fail(ErrorCode::InvalidInput, "rank-2 flat covers the whole ground set");
    for (size_t j = 0; j < i; ++j)
      if (popcount(big_flats[i] & big_flats[j]) >= 2)
        fail(ErrorCode::InvalidLinearSpace,
             "flats " + subset_str(big_flats[j]) + " and " + subset_str(big_flats[i]) +
                 " share two elements");
  }

  Matroid m;
  m.n_ = n;
  m.rank_ = 3;
  m.label_ = std::move(label);
  m.flats_by_rank_.assign(4, {});
  m.flats_by_rank_[0] = {Bits{0}};
  for (int e = 0; e < n; ++e) m.flats_by_rank_[1].push_back(bit(e));
  std::vector<Bits> lines = big_flats;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Bits pair = bit(a) | bit(b);
      bool covered = false;
      for (Bits f : big_flats)
        if (subset_of(pair, f)) {
          covered = true;
          break;
        }
      if (!covered) lines.push_back(pair);
    }
  std::sort(lines.begin(), lines.end());
  m.flats_by_rank_[2] = std::move(lines);
  m.flats_by_rank_[3] = {ground};
  return m;
}

Matroid Matroid::pg2(int q) {
  if (!Field::supported(q))
    fail(ErrorCode::UnsupportedOrder,
         "pg2 supports prime q and q in {4,8,9}; got q=" + std::to_string(q));
  Field f(q);
  // Normalized homogeneous triples: (1,y,z), (0,1,z), (0,0,1).
  std::vector<std::array<int, 3>> points;
  for (int y = 0; y < q; ++y)
    for (int z = 0; z < q; ++z) points.push_back({1, y, z});
  for (int z = 0; z < q; ++z) points.push_back({0, 1, z});
  points.push_back({0, 0, 1});
  const int n = static_cast<int>(points.size());

  std::vector<Bits> lines;
  for (const auto& l : points) {
    Bits line = 0;
    for (int i = 0; i < n; ++i) {
      const auto& p = points[i];
      int s = f.add(f.add(f.mul(l[0], p[0]), f.mul(l[1], p[1])), f.mul(l[2], p[2]));
      if (s == 0) line |= bit(i);
    }
    if (popcount(line) != q + 1)
      fail(ErrorCode::NotAMatroid, "projective line of wrong size (bad field tables)");
    lines.push_back(line);
  }
  // Every point pair must lie on exactly one line.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      int cnt = 0;
      for (Bits l : lines)
        if (has(l, a) && has(l, b)) ++cnt;
      if (cnt != 1) fail(ErrorCode::NotAMatroid, "projective incidence axiom failed");
    }
  return from_rank2_flats(n, lines, "PG(2," + std::to_string(q) + ")");
}

Matroid Matroid::from_bases(int n, const std::vector<Bits>& bases, std::string label) {
  if (n < 0 || n > kMaxGroundSize) fail(ErrorCode::InvalidInput, "ground set size out of range");
  if (bases.empty()) fail(ErrorCode::NotAMatroid, "a matroid has at least one basis");
  const Bits ground = full_set(n);
  const int r = popcount(bases.front());
  std::set<Bits> base_set;
  for (Bits b : bases) {
    if (!subset_of(b, ground)) fail(ErrorCode::InvalidInput, "basis leaves the ground set");
    if (popcount(b) != r) fail(ErrorCode::NotAMatroid, "bases of unequal size");
    base_set.insert(b);
  }
  for (Bits b1 : base_set)
    for (Bits b2 : base_set) {
      if (b1 == b2) continue;
      for (int x : elements(b1 & ~b2)) {
        bool exchanged = false;
        for (int y : elements(b2 & ~b1)) {
          if (base_set.count((b1 & ~bit(x)) | bit(y))) {
            exchanged = true;
            break;
          }
        }
        if (!exchanged)
          fail(ErrorCode::NotAMatroid, "basis exchange fails for " + subset_str(b1) + " and " +
                                           subset_str(b2) + " at element " + std::to_string(x));
      }
    }

  auto rank_fn = [&](Bits s) {
    int best = 0;
    for (Bits b : base_set) best = std::max(best, popcount(s & b));
    return best;
  };
  return from_rank_oracle(n, r, rank_fn, std::move(label));
}

int Matroid::rank_of(Bits s) const {
  for (int r = 0; r <= rank_; ++r)
    for (Bits f : flats_by_rank_[r])
      if (subset_of(s, f)) return r;
  fail(ErrorCode::InvalidInput, "subset " + subset_str(s) + " leaves the ground set");
}

Bits Matroid::closure(Bits s) const {
  for (int r = 0; r <= rank_; ++r)
    for (Bits f : flats_by_rank_[r])
      if (subset_of(s, f)) return f;
  fail(ErrorCode::InvalidInput, "subset " + subset_str(s) + " leaves the ground set");
}

Bits Matroid::loops() const { return flats_by_rank_[0][0]; }

Bits Matroid::coloops() const {
  Bits out = 0;
  for (int e = 0; e < n_; ++e)
    if (rank_of(ground_set() & ~bit(e)) == rank_ - 1) out |= bit(e);
  return out;
}

bool Matroid::is_simple() const {
  if (loops() != 0) return false;
  if (rank_ == 0) return n_ == 0;
  if (static_cast<int>(flats_by_rank_[1].size()) != n_) return false;
  for (Bits f : flats_by_rank_[1])
    if (popcount(f) != 1) return false;
  return true;
}

Matroid Matroid::delete_elements(Bits x) const {
  if (!subset_of(x, ground_set())) fail(ErrorCode::InvalidInput, "deleted set leaves the ground set");
  const std::vector<int> old_of_new = kept_elements(ground_set() & ~x);
  const int m = static_cast<int>(old_of_new.size());
  auto embed = [&](Bits s) {
    Bits out = 0;
    for (int i = 0; i < m; ++i)
      if (has(s, i)) out |= bit(old_of_new[i]);
    return out;
  };
  const int new_rank = rank_of(ground_set() & ~x);
  return from_rank_oracle(m, new_rank, [&](Bits s) { return rank_of(embed(s)); }, label_);
}

Matroid Matroid::contract(Bits x) const {
  if (!subset_of(x, ground_set())) fail(ErrorCode::InvalidInput, "contracted set leaves the ground set");
  const std::vector<int> old_of_new = kept_elements(ground_set() & ~x);
  const int m = static_cast<int>(old_of_new.size());
  auto embed = [&](Bits s) {
    Bits out = 0;
    for (int i = 0; i < m; ++i)
      if (has(s, i)) out |= bit(old_of_new[i]);
    return out;
  };
  const int rx = rank_of(x);
  return from_rank_oracle(
      m, rank_of(ground_set()) - rx,
      [&](Bits s) { return rank_of(embed(s) | x) - rx; }, label_);
}

Matroid Matroid::relabeled(const std::vector<int>& perm, std::string label) const {
  Matroid m;
  m.n_ = n_;
  m.rank_ = rank_;
  m.label_ = label.empty() ? label_ : std::move(label);
  m.flats_by_rank_.resize(flats_by_rank_.size());
  for (size_t r = 0; r < flats_by_rank_.size(); ++r) {
    for (Bits f : flats_by_rank_[r]) m.flats_by_rank_[r].push_back(apply_perm(f, perm));
    std::sort(m.flats_by_rank_[r].begin(), m.flats_by_rank_[r].end());
  }
  return m;
}

namespace {

using FlatKey = std::vector<std::vector<Bits>>;

FlatKey permuted_key(const FlatKey& flats, const std::vector<int>& perm) {
  FlatKey out(flats.size());
  for (size_t r = 0; r < flats.size(); ++r) {
    out[r].reserve(flats[r].size());
    for (Bits f : flats[r]) out[r].push_back(apply_perm(f, perm));
    std::sort(out[r].begin(), out[r].end());
  }
  return out;
}

// WL-style element invariants: start from the multiset of (rank, size) of
// incident flats, then twice fold in the sorted invariants of co-flat
// elements. Equivariant under relabeling by construction.
std::vector<std::uint64_t> element_invariants(const FlatKey& flats, int n) {
  auto mix = [](std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  };
  std::vector<std::uint64_t> inv(n, 0x1234567890abcdefULL);
  for (int round = 0; round < 3; ++round) {
    std::vector<std::vector<std::uint64_t>> incident(n);
    for (size_t r = 0; r + 1 < flats.size(); ++r) {
      if (r == 0) continue;  // bottom flat carries no element information
      for (Bits f : flats[r]) {
        std::vector<std::uint64_t> member_inv;
        for (int e : elements(f)) member_inv.push_back(inv[e]);
        std::sort(member_inv.begin(), member_inv.end());
        std::uint64_t fh = mix(r, popcount(f));
        for (auto v : member_inv) fh = mix(fh, v);
        for (int e : elements(f)) incident[e].push_back(fh);
      }
    }
    std::vector<std::uint64_t> next(n);
    for (int e = 0; e < n; ++e) {
      std::sort(incident[e].begin(), incident[e].end());
      std::uint64_t h = mix(0xabcdefULL, inv[e]);
      for (auto v : incident[e]) h = mix(h, v);
      next[e] = h;
    }
    inv = std::move(next);
  }
  return inv;
}

void min_over_block_perms(const FlatKey& flats,
                          const std::vector<std::vector<int>>& blocks, int n,
                          FlatKey& best) {
  std::vector<int> perm(n, -1);
  // Positions are assigned block by block; block b owns a contiguous range.
  std::vector<int> offset(blocks.size());
  int off = 0;
  for (size_t b = 0; b < blocks.size(); ++b) {
    offset[b] = off;
    off += static_cast<int>(blocks[b].size());
  }
  std::vector<std::vector<int>> arrangement = blocks;

  auto consider = [&]() {
    for (size_t b = 0; b < blocks.size(); ++b)
      for (size_t j = 0; j < arrangement[b].size(); ++j)
        perm[arrangement[b][j]] = offset[b] + static_cast<int>(j);
    FlatKey key = permuted_key(flats, perm);
    if (best.empty() || key < best) best = std::move(key);
  };

  // Odometer over per-block permutations.
  std::function<void(size_t)> rec = [&](size_t b) {
    if (b == blocks.size()) {
      consider();
      return;
    }
    std::sort(arrangement[b].begin(), arrangement[b].end());
    do {
      rec(b + 1);
    } while (std::next_permutation(arrangement[b].begin(), arrangement[b].end()));
  };
  rec(0);
}

}  // namespace

std::vector<std::uint8_t> Matroid::canonical_form(int limit) const {
  if (n_ > limit)
    fail(ErrorCode::TooLarge, "canonical_form limited to n <= " + std::to_string(limit));

  FlatKey best;
  if (n_ <= 8) {
    std::vector<std::vector<int>> one_block(1);
    one_block[0].resize(n_);
    std::iota(one_block[0].begin(), one_block[0].end(), 0);
    min_over_block_perms(flats_by_rank_, one_block, n_, best);
  } else {
    auto inv = element_invariants(flats_by_rank_, n_);
    std::map<std::uint64_t, std::vector<int>> by_inv;
    for (int e = 0; e < n_; ++e) by_inv[inv[e]].push_back(e);
    std::vector<std::vector<int>> blocks;
    for (auto& [h, es] : by_inv) blocks.push_back(es);
    min_over_block_perms(flats_by_rank_, blocks, n_, best);
  }

  std::vector<std::uint8_t> bytes;
  bytes.push_back(static_cast<std::uint8_t>(n_));
  bytes.push_back(static_cast<std::uint8_t>(rank_));
  const int flat_bytes = (n_ + 7) / 8;
  for (const auto& level : best) {
    bytes.push_back(static_cast<std::uint8_t>(level.size() & 0xff));
    bytes.push_back(static_cast<std::uint8_t>(level.size() >> 8));
    for (Bits f : level)
      for (int b = 0; b < flat_bytes; ++b)
        bytes.push_back(static_cast<std::uint8_t>(f >> (8 * b)));
  }
  return bytes;
}

}  // namespace chern
