#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace chern {

// Ground-set subsets are bitmasks. 128 bits covers every supported matroid
// (the largest built-in is PG(2,9) on 91 points).
using Bits = unsigned __int128;

constexpr int kMaxGroundSize = 120;

inline Bits bit(int i) { return Bits{1} << i; }

inline bool has(Bits s, int i) { return (s >> i) & 1; }

inline Bits full_set(int n) {
  return n == 0 ? Bits{0} : (~Bits{0} >> (128 - n));
}

inline bool subset_of(Bits a, Bits b) { return (a & ~b) == 0; }

inline int popcount(Bits s) {
  return __builtin_popcountll(static_cast<std::uint64_t>(s)) +
         __builtin_popcountll(static_cast<std::uint64_t>(s >> 64));
}

inline std::vector<int> elements(Bits s) {
  std::vector<int> out;
  for (int i = 0; s != 0; ++i, s >>= 1) {
    if (s & 1) out.push_back(i);
  }
  return out;
}

inline Bits set_of(std::initializer_list<int> xs) {
  Bits s = 0;
  for (int x : xs) s |= bit(x);
  return s;
}

inline Bits set_of(const std::vector<int>& xs) {
  Bits s = 0;
  for (int x : xs) s |= bit(x);
  return s;
}

// Relabels a subset along perm: element i goes to perm[i].
inline Bits apply_perm(Bits s, const std::vector<int>& perm) {
  Bits out = 0;
  for (int i = 0; s != 0; ++i, s >>= 1) {
    if (s & 1) out |= bit(perm[i]);
  }
  return out;
}

std::string subset_str(Bits s);

}  // namespace chern
