#include "chern/geography.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <thread>

#include "chern/errors.hpp"

namespace chern {

namespace {

// The enumerator works on line families over n <= 9 points, so 16-bit masks
// suffice; Matroid conversion happens only on output.
using Mask = std::uint32_t;

int mask_popcount(Mask m) { return __builtin_popcount(m); }

std::vector<Mask> candidate_lines(int n) {
  std::vector<Mask> out;
  const Mask full = (Mask{1} << n) - 1;
  for (Mask m = 0; m <= full; ++m) {
    const int sz = mask_popcount(m);
    if (sz >= 3 && sz <= n - 1) out.push_back(m);
  }
  return out;
}

bool compatible(Mask line, const std::vector<Mask>& family) {
  for (Mask f : family)
    if (mask_popcount(line & f) >= 2) return false;
  return true;
}

// Exact minimum-image test: is the sorted family F the lexicographically
// smallest among all its relabelings? The search places image lines
// F[0], F[1], .. in order; a branch dies as soon as some line could land
// strictly below the next target, which is precisely a smaller image.
class MinImageSearch {
 public:
  MinImageSearch(const std::vector<Mask>& family, int n)
      : family_(family), n_(n), position_(n, -1), placed_(family.size(), false) {}

  bool family_is_canonical() {
    found_smaller_ = false;
    descend(0);
    return !found_smaller_;
  }

 private:
  // Smallest final image the line could still get under the current partial
  // assignment: its fixed positions plus the lowest free positions.
  Mask min_possible_image(Mask line) const {
    Mask fixed = 0;
    int unassigned = 0;
    for (int e = 0; e < n_; ++e) {
      if (!(line >> e & 1)) continue;
      if (position_[e] >= 0)
        fixed |= Mask{1} << position_[e];
      else
        ++unassigned;
    }
    Mask free = ~used_ & ((Mask{1} << n_) - 1);
    while (unassigned-- > 0) {
      const Mask low = free & (~free + 1);
      fixed |= low;
      free &= ~low;
    }
    return fixed;
  }

  void descend(size_t t) {
    if (found_smaller_ || t == family_.size()) return;
    const Mask target = family_[t];
    for (size_t li = 0; li < family_.size(); ++li) {
      if (placed_[li]) continue;
      if (min_possible_image(family_[li]) < target) {
        found_smaller_ = true;
        return;
      }
    }
    for (size_t li = 0; li < family_.size() && !found_smaller_; ++li) {
      if (!placed_[li]) place_exactly(li, t, target);
    }
  }

  void place_exactly(size_t li, size_t t, Mask target) {
    const Mask line = family_[li];
    Mask need = target;
    std::vector<int> loose;
    for (int e = 0; e < n_; ++e) {
      if (!(line >> e & 1)) continue;
      if (position_[e] >= 0) {
        if (!(target >> position_[e] & 1)) return;  // sticks out of the target
        need &= ~(Mask{1} << position_[e]);
      } else {
        loose.push_back(e);
      }
    }
    if (need & used_) return;  // needed positions already taken by other lines
    std::vector<int> slots;
    for (int p = 0; p < n_; ++p)
      if (need >> p & 1) slots.push_back(p);
    if (slots.size() != loose.size()) return;  // sizes disagree

    placed_[li] = true;
    used_ |= target;
    do {
      for (size_t i = 0; i < loose.size(); ++i) position_[loose[i]] = slots[i];
      descend(t + 1);
      for (int e : loose) position_[e] = -1;
      if (found_smaller_) break;
    } while (std::next_permutation(slots.begin(), slots.end()));
    used_ &= ~target;
    placed_[li] = false;
  }

  const std::vector<Mask>& family_;
  int n_;
  std::vector<int> position_;  // element -> image position, -1 if unassigned
  std::vector<bool> placed_;
  Mask used_ = 0;
  bool found_smaller_ = false;
};

bool is_canonical(const std::vector<Mask>& family, int n) {
  return MinImageSearch(family, n).family_is_canonical();
}

void orderly_dfs(int n, const std::vector<Mask>& candidates,
                 std::vector<Mask>& family, size_t next_candidate,
                 std::vector<std::vector<Mask>>& out) {
  out.push_back(family);
  for (size_t ci = next_candidate; ci < candidates.size(); ++ci) {
    const Mask m = candidates[ci];
    if (!compatible(m, family)) continue;
    family.push_back(m);
    if (is_canonical(family, n)) orderly_dfs(n, candidates, family, ci + 1, out);
    family.pop_back();
  }
}

// Deterministic split: canonical families of size <= 1 are emitted in order,
// and each canonical 2-family roots an independent subtree (a parallel task).
std::vector<std::vector<Mask>> enumerate_families(int n, int threads) {
  const std::vector<Mask> candidates = candidate_lines(n);

  struct Task {
    std::vector<Mask> family;
    size_t next_candidate;
  };
  std::vector<std::vector<Mask>> prefix_outputs;
  std::vector<Task> tasks;
  // preorder position of each size<=1 output among tasks
  std::vector<std::pair<size_t, std::vector<Mask>>> small;

  prefix_outputs.push_back({});
  for (size_t ai = 0; ai < candidates.size(); ++ai) {
    std::vector<Mask> one{candidates[ai]};
    if (!is_canonical(one, n)) continue;
    small.emplace_back(tasks.size(), one);
    for (size_t bi = ai + 1; bi < candidates.size(); ++bi) {
      if (!compatible(candidates[bi], one)) continue;
      std::vector<Mask> two{candidates[ai], candidates[bi]};
      if (is_canonical(two, n)) tasks.push_back({std::move(two), bi + 1});
    }
  }

  std::vector<std::vector<std::vector<Mask>>> task_out(tasks.size());
  auto run_task = [&](size_t ti) {
    std::vector<Mask> family = tasks[ti].family;
    orderly_dfs(n, candidates, family, tasks[ti].next_candidate, task_out[ti]);
  };
  if (threads <= 1 || tasks.size() <= 1) {
    for (size_t ti = 0; ti < tasks.size(); ++ti) run_task(ti);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    const size_t workers = std::min<size_t>(threads, tasks.size());
    for (size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (size_t ti = next.fetch_add(1); ti < tasks.size(); ti = next.fetch_add(1))
          run_task(ti);
      });
    for (auto& th : pool) th.join();
  }

  // Reassemble the sequential DFS preorder.
  std::vector<std::vector<Mask>> out = std::move(prefix_outputs);
  size_t ti = 0;
  for (const auto& [task_start, one] : small) {
    while (ti < task_start) {
      for (auto& fam : task_out[ti]) out.push_back(std::move(fam));
      ++ti;
    }
    out.push_back(one);
  }
  for (; ti < tasks.size(); ++ti)
    for (auto& fam : task_out[ti]) out.push_back(std::move(fam));
  return out;
}

Matroid family_to_matroid(int n, const std::vector<Mask>& family) {
  std::vector<Bits> lines;
  lines.reserve(family.size());
  for (Mask m : family) lines.push_back(static_cast<Bits>(m));
  return Matroid::from_rank2_flats(n, lines);
}

}  // namespace

std::vector<Matroid> enumerate_rank3(int n, int threads) {
  if (n < 3 || n > 9)
    fail(ErrorCode::TooLarge, "rank-3 enumeration supports 3 <= n <= 9");
  std::vector<Matroid> out;
  for (const auto& family : enumerate_families(n, threads))
    out.push_back(family_to_matroid(n, family));
  return out;
}

std::vector<GeographyRecord> geography(int n, bool coloop_free, int threads) {
  std::map<ChernPair, GeographyRecord> by_pair;
  for (const Matroid& m : enumerate_rank3(n, threads)) {
    if (coloop_free && m.has_coloop()) continue;
    const ChernPair pair = chern_rank3(rank2_profile(m));
    auto it = by_pair.find(pair);
    if (it == by_pair.end()) {
      GeographyRecord rec;
      rec.n = n;
      rec.pair = pair;
      rec.witness = hex_encoding(m.canonical_form());
      rec.classes = 1;
      by_pair.emplace(pair, std::move(rec));
    } else {
      ++it->second.classes;
    }
  }
  std::vector<GeographyRecord> out;
  out.reserve(by_pair.size());
  for (auto& [pair, rec] : by_pair) out.push_back(std::move(rec));
  return out;
}

std::string geography_csv(const std::vector<GeographyRecord>& records) {
  std::string out = "n,c1sq,c2,classes,witness\n";
  for (const auto& r : records) {
    out += std::to_string(r.n) + "," + std::to_string(r.pair.c1sq) + "," +
           std::to_string(r.pair.c2) + "," + std::to_string(r.classes) + "," +
           r.witness + "\n";
  }
  return out;
}

}  // namespace chern
