#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "chern/matroid.hpp"

namespace chern {

/// Interchange format:
///   {"n": int, "rank": int, "kind": "rank2flats"|"bases"|"uniform"|"pg2",
///    "data": ...}
/// rank2flats/bases data is a list of integer lists (arbitrary integer
/// labels, normalized to 0..n-1 on load); uniform takes no data; pg2 data is
/// the order q.
nlohmann::json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const nlohmann::json& j);
Matroid load_matroid_file(const std::string& path);

/// Built-in matroids: fano, nonfano, pappus, nonpappus, braid, pg2-Q, u-R-N.
Matroid builtin(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace chern
