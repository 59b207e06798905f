#include "chern/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "chern/analysis.hpp"
#include "chern/bergman.hpp"
#include "chern/errors.hpp"
#include "chern/geography.hpp"
#include "chern/intersection.hpp"
#include "chern/io.hpp"
#include "chern/lattice.hpp"

namespace chern {

namespace {

using nlohmann::json;

struct TargetOpts {
  std::string file;
  std::string builtin_name;
  std::vector<int> uniform_rn;
  int pg2_q = 0;

  CLI::Option* file_opt = nullptr;
  CLI::Option* builtin_opt = nullptr;
  CLI::Option* uniform_opt = nullptr;
  CLI::Option* pg2_opt = nullptr;

  void attach(CLI::App* cmd) {
    file_opt = cmd->add_option("--file", file, "matroid JSON file");
    builtin_opt = cmd->add_option("--builtin", builtin_name, "built-in matroid name");
    uniform_opt =
        cmd->add_option("--uniform", uniform_rn, "uniform matroid U_{R,N}")->expected(2);
    pg2_opt = cmd->add_option("--pg2", pg2_q, "projective plane of order Q");
  }

  Matroid resolve() const {
    const int given = (file_opt->count() ? 1 : 0) + (builtin_opt->count() ? 1 : 0) +
                      (uniform_opt->count() ? 1 : 0) + (pg2_opt->count() ? 1 : 0);
    if (given != 1)
      fail(ErrorCode::InvalidInput,
           "exactly one of --file/--builtin/--uniform/--pg2 is required");
    if (file_opt->count()) return load_matroid_file(file);
    if (builtin_opt->count()) return builtin(builtin_name);
    if (uniform_opt->count()) return Matroid::uniform(uniform_rn[0], uniform_rn[1]);
    return Matroid::pg2(pg2_q);
  }
};

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) fail(ErrorCode::InvalidInput, "cannot write " + out_path);
  f << text;
}

std::string matroid_name(const Matroid& m) {
  if (!m.label().empty()) return m.label();
  return "matroid(n=" + std::to_string(m.size()) + ",rank=" + std::to_string(m.rank()) + ")";
}

bool is_uniform_shaped(const Matroid& m) {
  for (int k = 0; k < m.rank(); ++k) {
    const auto& level = m.flats_by_rank()[k];
    if (static_cast<long long>(level.size()) != binomial(m.size(), k)) return false;
    for (Bits f : level)
      if (popcount(f) != k) return false;
  }
  return true;
}

json exponents_json(const ChernExponents& e) {
  json arr = json::array();
  for (long long v : e.k) arr.push_back(v);
  return arr;
}

json chern_result(const Matroid& m, const ChernExponents& e, bool engine) {
  json r;
  r["exponents"] = exponents_json(e);
  if (engine) {
    r["value"] = chern_number(m, e);
    r["method"] = "intersection";
    return r;
  }
  if (m.rank() == 3 && m.is_simple()) {
    const ChernPair pair = chern_rank3(rank2_profile(m));
    r["value"] = e.k == std::vector<long long>{2, 0} ? pair.c1sq : pair.c2;
    r["method"] = "closed-form";
    return r;
  }
  if (is_uniform_shaped(m)) {
    r["value"] = uniform_chern(m.rank(), m.size(), e);
    r["method"] = "closed-form";
    return r;
  }
  r["value"] = chern_number(m, e);
  r["method"] = "intersection";
  return r;
}

const char* equality_name(EqualityCase c) {
  switch (c) {
    case EqualityCase::Left: return "left";
    case EqualityCase::Right: return "right";
    case EqualityCase::None: return "none";
  }
  return "none";
}

json report_json(const TheoremReport& rep) {
  json r;
  r["theorem"] = rep.theorem;
  r["holds"] = rep.holds;
  r["equality_case"] = equality_name(rep.equality_case);
  r["witness"] = rep.witness;
  return r;
}

std::string two_decimals(long long num, long long den) {
  // round-half-up of num/den to two decimals, den > 0
  const long long scaled = (200 * num + den) / (2 * den);
  std::string frac = std::to_string(scaled % 100);
  if (frac.size() < 2) frac = "0" + frac;
  return std::to_string(scaled / 100) + "." + frac;
}

int enum_cap() {
  const char* env = std::getenv("MATROID_ENUM_CAP");
  if (env == nullptr) return 8;
  try {
    return std::stoi(env);
  } catch (...) {
    return 8;
  }
}

}  // namespace

std::string reference_table(const std::string& format) {
  struct Row {
    std::string name;
    Matroid m;
  };
  std::vector<Row> rows;
  for (int n : {3, 4, 5, 7, 9})
    rows.push_back({"U_{3," + std::to_string(n) + "}", Matroid::uniform(3, n)});
  for (int q : {2, 4, 8, 9})
    rows.push_back({"PG(2," + std::to_string(q) + ")", Matroid::pg2(q)});
  rows.push_back({"non-Fano", builtin("nonfano")});
  rows.push_back({"Pappus", builtin("pappus")});
  rows.push_back({"non-Pappus", builtin("nonpappus")});
  rows.push_back({"Braid", builtin("braid")});

  std::vector<std::array<std::string, 5>> cells;
  cells.push_back({"name", "c1sq", "c2", "ratio", "approx"});
  for (const auto& row : rows) {
    const ChernPair c = chern_rank3(rank2_profile(row.m));
    std::string ratio = "-", approx = "-";
    if (c.c2 != 0) {
      const long long g = std::gcd(c.c1sq, c.c2);
      ratio = std::to_string(c.c1sq / g) + "/" + std::to_string(c.c2 / g);
      approx = two_decimals(c.c1sq, c.c2);
    }
    cells.push_back({row.name, std::to_string(c.c1sq), std::to_string(c.c2), ratio, approx});
  }

  std::string out;
  if (format == "csv") {
    for (const auto& r : cells) {
      for (size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + r[i];
      out += "\n";
    }
    return out;
  }
  std::array<size_t, 5> width{};
  for (const auto& r : cells)
    for (size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  for (const auto& r : cells) {
    for (size_t i = 0; i < r.size(); ++i) {
      std::string cell = r[i];
      cell.resize(width[i], ' ');
      out += cell + (i + 1 < r.size() ? "  " : "");
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += "\n";
  }
  return out;
}

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chern numbers of matroids: CSM cycles on Bergman fans, closed forms, "
               "theorem checks, and small-scale geography"};
  app.require_subcommand(1);

  std::string out_path;
  app.add_option("--out", out_path, "write output to a file instead of stdout");

  auto* cmd_construct = app.add_subcommand("construct", "construct a matroid and print its JSON");
  TargetOpts construct_target;
  construct_target.attach(cmd_construct);

  auto* cmd_invariants = app.add_subcommand("invariants", "lattice invariants of a matroid");
  TargetOpts invariants_target;
  invariants_target.attach(cmd_invariants);

  auto* cmd_csm = app.add_subcommand("csm", "CSM cycle of a loopless matroid");
  TargetOpts csm_target;
  csm_target.attach(cmd_csm);
  int csm_k = 0;
  cmd_csm->add_option("--k", csm_k, "cycle dimension")->required();

  auto* cmd_chern = app.add_subcommand("chern", "Chern numbers");
  TargetOpts chern_target;
  chern_target.attach(cmd_chern);
  bool use_engine = false;
  cmd_chern->add_flag("--engine", use_engine, "force the intersection engine");
  std::vector<long long> exponents;
  cmd_chern->add_option("--exponents", exponents, "exponent vector k_1,..,k_d")
      ->delimiter(',');

  auto* cmd_verify = app.add_subcommand("verify", "run the rank-3 theorem suites");
  TargetOpts verify_target;
  verify_target.attach(cmd_verify);

  auto* cmd_geo = app.add_subcommand("geography", "achieved Chern pairs for rank-3 matroids");
  int geo_n = 0;
  bool coloop_free = false;
  int threads = 1;
  std::string geo_format = "csv";
  cmd_geo->add_option("--n", geo_n, "ground-set size")->required();
  cmd_geo->add_flag("--coloop-free", coloop_free, "only coloop-free matroids");
  cmd_geo->add_option("--threads", threads, "worker threads");
  cmd_geo->add_option("--format", geo_format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* cmd_table = app.add_subcommand("table", "reference table of rank-3 Chern numbers");
  std::string table_format = "text";
  cmd_table->add_option("--format", table_format, "text|csv")
      ->check(CLI::IsMember({"text", "csv"}));

  std::vector<const char*> argv;
  argv.push_back("chernum");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (cmd_construct->parsed()) {
      emit(matroid_to_json(construct_target.resolve()).dump(2) + "\n", out_path, out);
      return 0;
    }

    if (cmd_invariants->parsed()) {
      const Matroid m = invariants_target.resolve();
      json j;
      j["name"] = matroid_name(m);
      j["n"] = m.size();
      j["rank"] = m.rank();
      j["simple"] = m.is_simple();
      j["loops"] = elements(m.loops());
      j["coloops"] = elements(m.coloops());
      if (m.is_loopless()) {
        j["char_poly"] = char_poly(m).coeffs;
        j["beta"] = beta(m);
      }
      if (m.rank() == 3 && m.is_simple()) {
        const RankTwoProfile p = rank2_profile(m);
        json t;
        for (const auto& [sz, c] : p.t) t[std::to_string(sz)] = c;
        j["rank2_profile"] = t;
        const ChernPair c = chern_rank3(p);
        j["chern"] = {{"c1sq", c.c1sq}, {"c2", c.c2}};
        j["melchior_gap"] = melchior_gap(p);
      }
      emit(j.dump(2) + "\n", out_path, out);
      return 0;
    }

    if (cmd_csm->parsed()) {
      const Matroid m = csm_target.resolve();
      const FlatLattice lattice = FlatLattice::build(m);
      const MinkowskiWeight w = csm_cycle(lattice, csm_k);
      json j;
      j["k"] = csm_k;
      json weights = json::array();
      for (const auto& [chain, val] : w.weights) {
        json entry;
        json flats = json::array();
        for (int f : chain) flats.push_back(elements(lattice.flats[f]));
        entry["chain"] = flats;
        entry["w"] = rat_to_ll(val);
        weights.push_back(entry);
      }
      j["weights"] = weights;
      emit(j.dump(2) + "\n", out_path, out);
      return 0;
    }

    if (cmd_chern->parsed()) {
      const Matroid m = chern_target.resolve();
      const int d = m.rank() - 1;
      json j;
      j["name"] = matroid_name(m);
      if (!exponents.empty()) {
        ChernExponents e{exponents};
        if (e.d() != d || !e.valid())
          fail(ErrorCode::InvalidExponents,
               "exponents " + e.str() + " do not satisfy sum i*k_i = " + std::to_string(d));
        emit(chern_result(m, e, use_engine).dump(2) + "\n", out_path, out);
        return 0;
      }
      json results = json::array();
      for (const ChernExponents& e : all_exponents(d))
        results.push_back(chern_result(m, e, use_engine));
      j["results"] = results;
      emit(j.dump(2) + "\n", out_path, out);
      return 0;
    }

    if (cmd_verify->parsed()) {
      const Matroid m = verify_target.resolve();
      if (m.rank() != 3)
        fail(ErrorCode::RankError, "the theorem suites cover rank-3 matroids");
      if (!m.is_simple())
        fail(ErrorCode::InvalidInput, "the theorem suites cover simple matroids");
      json reports = json::array();
      bool violated = false;
      for (const TheoremReport& rep : {verify_positivity(m), verify_uniform_bounds(m)}) {
        reports.push_back(report_json(rep));
        violated = violated || !rep.holds;
      }
      if (m.has_coloop()) {
        json skipped;
        skipped["theorem"] = "ratio-bounds";
        skipped["skipped"] = "matroid has a coloop";
        reports.push_back(skipped);
      } else {
        const TheoremReport rep = verify_ratio(m);
        reports.push_back(report_json(rep));
        violated = violated || !rep.holds;
      }
      json gap;
      gap["theorem"] = "melchior-gap";
      gap["statistic"] = melchior_gap(rank2_profile(m));
      gap["note"] = "nonnegative for pseudoline-realizable matroids; informational";
      reports.push_back(gap);
      if (m.size() <= 9) {
        for (const ChernExponents& e : all_exponents(2)) {
          json r = report_json(conjecture_check(m, e));
          r["kind"] = "conjecture";
          reports.push_back(r);
        }
      }
      json j;
      j["name"] = matroid_name(m);
      j["reports"] = reports;
      emit(j.dump(2) + "\n", out_path, out);
      return violated ? 2 : 0;
    }

    if (cmd_geo->parsed()) {
      const int cap = enum_cap();
      if (geo_n > cap)
        fail(ErrorCode::TooLarge,
             "geography capped at n <= " + std::to_string(cap) +
                 " (set MATROID_ENUM_CAP to raise, hard limit 9)");
      const auto records = geography(geo_n, coloop_free, threads);
      if (geo_format == "csv") {
        emit(geography_csv(records), out_path, out);
      } else {
        json arr = json::array();
        for (const auto& r : records)
          arr.push_back({{"n", r.n},
                         {"c1sq", r.pair.c1sq},
                         {"c2", r.pair.c2},
                         {"classes", r.classes},
                         {"witness", r.witness}});
        emit(arr.dump(2) + "\n", out_path, out);
      }
      return 0;
    }

    if (cmd_table->parsed()) {
      emit(reference_table(table_format), out_path, out);
      return 0;
    }
  } catch (const MatroidError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace chern
