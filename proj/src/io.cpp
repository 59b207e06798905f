#include "chern/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "chern/errors.hpp"
#include "chern/rational.hpp"

namespace chern {

namespace {

bool is_uniform_shaped(const Matroid& m) {
  for (int k = 0; k < m.rank(); ++k) {
    const auto& level = m.flats_by_rank()[k];
    if (static_cast<long long>(level.size()) != binomial(m.size(), k)) return false;
    for (Bits f : level)
      if (popcount(f) != k) return false;
  }
  return true;
}

std::vector<Bits> big_rank2_flats(const Matroid& m) {
  std::vector<Bits> out;
  for (Bits f : m.flats_by_rank()[2])
    if (popcount(f) >= 3) out.push_back(f);
  return out;
}

nlohmann::json subsets_to_json(const std::vector<Bits>& subsets) {
  nlohmann::json arr = nlohmann::json::array();
  for (Bits s : subsets) arr.push_back(elements(s));
  return arr;
}

// Arbitrary integer labels are accepted; labels already in 0..n-1 are used
// as-is, anything else is compacted in sorted order.
std::vector<Bits> subsets_from_json(const nlohmann::json& data, int n,
                                    const std::string& what) {
  if (!data.is_array()) fail(ErrorCode::ParseError, "\"data\" must be a list of " + what);
  std::vector<std::vector<long long>> raw;
  std::set<long long> labels;
  for (const auto& item : data) {
    if (!item.is_array()) fail(ErrorCode::ParseError, what + " entries must be integer lists");
    std::vector<long long> one;
    for (const auto& v : item) {
      if (!v.is_number_integer()) fail(ErrorCode::ParseError, what + " entries must be integers");
      one.push_back(v.get<long long>());
      labels.insert(one.back());
    }
    raw.push_back(std::move(one));
  }
  std::map<long long, int> index;
  const bool in_range = !labels.empty() && *labels.begin() >= 0 && *labels.rbegin() < n;
  if (in_range) {
    for (long long l : labels) index[l] = static_cast<int>(l);
  } else {
    if (static_cast<int>(labels.size()) > n)
      fail(ErrorCode::ParseError, "more labels than ground-set elements");
    int next = 0;
    for (long long l : labels) index[l] = next++;
  }
  std::vector<Bits> out;
  for (const auto& one : raw) {
    Bits s = 0;
    for (long long l : one) s |= bit(index.at(l));
    out.push_back(s);
  }
  return out;
}

std::vector<Bits> all_bases(const Matroid& m) {
  if (m.size() > 20) fail(ErrorCode::TooLarge, "basis serialization capped at n <= 20");
  std::vector<Bits> out;
  const int r = m.rank();
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  if (r == 0) return {Bits{0}};
  while (true) {
    Bits s = set_of(idx);
    if (m.rank_of(s) == r) out.push_back(s);
    int i = r - 1;
    while (i >= 0 && idx[i] == m.size() - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace

nlohmann::json matroid_to_json(const Matroid& m) {
  nlohmann::json j;
  j["n"] = m.size();
  j["rank"] = m.rank();
  if (!m.label().empty()) j["label"] = m.label();
  if (is_uniform_shaped(m)) {
    j["kind"] = "uniform";
    j["data"] = nlohmann::json::array();
  } else if (m.rank() == 3 && m.is_simple()) {
    j["kind"] = "rank2flats";
    j["data"] = subsets_to_json(big_rank2_flats(m));
  } else {
    j["kind"] = "bases";
    j["data"] = subsets_to_json(all_bases(m));
  }
  return j;
}

Matroid matroid_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail(ErrorCode::ParseError, "matroid file must be a JSON object");
  for (const char* field : {"n", "rank", "kind"})
    if (!j.contains(field))
      fail(ErrorCode::ParseError, std::string("missing field \"") + field + "\"");
  if (!j["n"].is_number_integer() || !j["rank"].is_number_integer())
    fail(ErrorCode::ParseError, "\"n\" and \"rank\" must be integers");
  const int n = j["n"].get<int>();
  const int rank = j["rank"].get<int>();
  const std::string kind = j["kind"].is_string() ? j["kind"].get<std::string>() : "";
  const std::string label = j.value("label", std::string{});

  Matroid m = [&] {
    if (kind == "uniform") return Matroid::uniform(rank, n);
    if (kind == "pg2") {
      if (!j.contains("data") || !j["data"].is_number_integer())
        fail(ErrorCode::ParseError, "pg2 needs integer \"data\" = q");
      return Matroid::pg2(j["data"].get<int>());
    }
    if (kind == "rank2flats") {
      if (rank != 3) fail(ErrorCode::ParseError, "rank2flats implies rank 3");
      return Matroid::from_rank2_flats(
          n, subsets_from_json(j.value("data", nlohmann::json::array()), n, "flats"), label);
    }
    if (kind == "bases")
      return Matroid::from_bases(
          n, subsets_from_json(j.value("data", nlohmann::json::array()), n, "bases"), label);
    fail(ErrorCode::ParseError, "unknown kind \"" + kind + "\"");
  }();
  if (m.size() != n || m.rank() != rank)
    fail(ErrorCode::ParseError, "declared n/rank disagree with the constructed matroid");
  return m;
}

Matroid load_matroid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::ParseError, path + ": " + e.what());
  }
  return matroid_from_json(j);
}

Matroid builtin(const std::string& name) {
  if (name == "fano") return Matroid::pg2(2);
  if (name == "nonfano") {
    auto lines = big_rank2_flats(Matroid::pg2(2));
    lines.pop_back();  // relax one line; all choices are equivalent
    return Matroid::from_rank2_flats(7, lines, "non-Fano");
  }
  if (name == "pappus" || name == "nonpappus") {
    // Two 3-point lines {0,1,2}, {3,4,5}; 6 = 04*13, 7 = 05*23, 8 = 15*24;
    // the line {6,7,8} is the Pappus conclusion.
    std::vector<Bits> lines = {
        set_of({0, 1, 2}), set_of({3, 4, 5}), set_of({0, 4, 6}), set_of({1, 3, 6}),
        set_of({0, 5, 7}), set_of({2, 3, 7}), set_of({1, 5, 8}), set_of({2, 4, 8}),
        set_of({6, 7, 8})};
    if (name == "nonpappus") {
      lines.pop_back();
      return Matroid::from_rank2_flats(9, lines, "non-Pappus");
    }
    return Matroid::from_rank2_flats(9, lines, "Pappus");
  }
  if (name == "braid") {
    // Graphic matroid of K4; edges 0=ab 1=ac 2=ad 3=bc 4=bd 5=cd, flats are
    // the four triangles (opposite-edge pairs fill in as 2-point flats).
    std::vector<Bits> triangles = {set_of({0, 1, 3}), set_of({0, 2, 4}),
                                   set_of({1, 2, 5}), set_of({3, 4, 5})};
    return Matroid::from_rank2_flats(6, triangles, "Braid");
  }
  if (name.rfind("pg2-", 0) == 0) {
    try {
      return Matroid::pg2(std::stoi(name.substr(4)));
    } catch (const std::invalid_argument&) {
      fail(ErrorCode::ParseError, "bad pg2 order in \"" + name + "\"");
    }
  }
  if (name.rfind("u-", 0) == 0) {
    const auto dash = name.find('-', 2);
    if (dash != std::string::npos) {
      try {
        return Matroid::uniform(std::stoi(name.substr(2, dash - 2)),
                                std::stoi(name.substr(dash + 1)));
      } catch (const std::invalid_argument&) {
        fail(ErrorCode::ParseError, "bad uniform parameters in \"" + name + "\"");
      }
    }
  }
  fail(ErrorCode::ParseError, "unknown builtin \"" + name + "\" (try: " +
                                  [] {
                                    std::string all;
                                    for (const auto& b : builtin_names()) {
                                      if (!all.empty()) all += ", ";
                                      all += b;
                                    }
                                    return all;
                                  }() +
                                  ")");
}

std::vector<std::string> builtin_names() {
  return {"fano", "nonfano", "pappus", "nonpappus", "braid", "pg2-Q", "u-R-N"};
}

}  // namespace chern
