// strata: command-line front end for stratifications of kinematic regions.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "strata/census.hpp"
#include "strata/classify.hpp"
#include "strata/exactmat.hpp"
#include "strata/json_io.hpp"
#include "strata/poset.hpp"
#include "strata/realize.hpp"
#include "strata/regioncheck.hpp"

namespace {

using strata::io::json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& source) {
  if (source == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(source);
  if (!in) throw IoError("cannot read " + source);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inline JSON when the argument starts with '{', otherwise a path or "-".
json load_json(const std::string& arg) {
  const std::string text = !arg.empty() && arg.front() == '{' ? arg : slurp(arg);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw strata::Error(strata::ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
  }
}

std::uint64_t resolve_seed(const CLI::Option* opt, std::uint64_t flag_value) {
  if (opt->count() > 0) return flag_value;
  if (const char* env = std::getenv("STRATA_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw strata::Error(strata::ErrorCode::InvalidArgument, "STRATA_SEED must be an unsigned integer");
    }
  }
  return strata::kDefaultSeed;
}

std::string sign_string(const strata::SignedMatroid& sm) {
  std::string out;
  for (int i = 0; i < sm.ground_size(); ++i) {
    const int s = sm.sigma()[i];
    out += s > 0 ? '+' : (s < 0 ? '-' : '0');
  }
  return out;
}

std::string parts_string(const strata::RankTwoMatroid& p) {
  const char* sep = p.ground_size() >= 10 ? "," : "";
  std::string out;
  for (const auto& part : p.parts()) {
    out += '{';
    for (std::size_t k = 0; k < part.size(); ++k) out += (k ? sep : "") + std::to_string(part[k] + 1);
    out += '}';
  }
  return out;
}

std::string label_string(const strata::StratumLabel& label) {
  std::ostringstream ss;
  ss << "(" << parts_string(label.signed_matroid.matroid()) << ", " << sign_string(label.signed_matroid)
     << ", r=" << label.rank << ") " << strata::to_string(label.kind) << " d=" << label.dimension();
  return ss.str();
}

// ---- census -----------------------------------------------------------------

std::string cell_text(const strata::CensusRow* row) {
  if (!row) return "";
  return row->count_fixed.get_str() + "/" + row->count_all.get_str();
}

void print_census(const strata::CensusQuery& q, const std::vector<strata::CensusRow>& rows,
                  const std::string& format) {
  const int max_r = strata::table_max_rank(q.n, q.region);
  const int max_d = strata::table_max_dimension(q.n, q.region);
  std::map<std::pair<int, int>, const strata::CensusRow*> cells;
  for (const auto& row : rows) cells[{row.d, row.r}] = &row;
  auto find = [&](int d, int r) -> const strata::CensusRow* {
    auto it = cells.find({d, r});
    return it == cells.end() ? nullptr : it->second;
  };

  if (format == "json") {
    json out = json::array();
    for (const auto& row : rows) out.push_back(strata::io::to_json(row));
    std::cout << out.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "d,r,fixed,all\n";
    for (const auto& row : rows) {
      std::cout << row.d << "," << row.r << "," << row.count_fixed << "," << row.count_all << "\n";
    }
  } else if (format == "table") {
    std::cout << "d";
    for (int r = 2; r <= max_r; ++r) std::cout << ",r" << r << "_fixed,r" << r << "_all";
    std::cout << "\n";
    for (int d = 1; d <= max_d; ++d) {
      if (q.d && *q.d != d) continue;
      std::cout << d;
      for (int r = 2; r <= max_r; ++r) {
        const auto* row = find(d, r);
        std::cout << ",";
        if (row) std::cout << row->count_fixed;
        std::cout << ",";
        if (row) std::cout << row->count_all;
      }
      std::cout << "\n";
    }
  } else {
    std::size_t widest = 3;
    for (const auto& row : rows) widest = std::max(widest, cell_text(&row).size());
    const int width = static_cast<int>(widest) + 2;
    std::cout << "n=" << q.n << " " << strata::to_string(q.region) << " (fixed/all)\n";
    std::cout << std::setw(4) << "d";
    for (int r = 2; r <= max_r; ++r) std::cout << std::setw(width) << ("r=" + std::to_string(r));
    std::cout << "\n";
    for (int d = 1; d <= max_d; ++d) {
      if (q.d && *q.d != d) continue;
      std::cout << std::setw(4) << d;
      for (int r = 2; r <= max_r; ++r) std::cout << std::setw(width) << cell_text(find(d, r));
      std::cout << "\n";
    }
  }
}

// ---- examples ---------------------------------------------------------------

std::string signs_text(const std::array<int, 10>& signs) {
  std::string out;
  for (int s : signs) out += s > 0 ? '+' : '-';
  return out;
}

int run_examples(const std::string& which, const std::vector<std::string>& point, const std::string& format) {
  if (which == "n4") {
    if (point.size() != 2) throw strata::Error(strata::ErrorCode::InvalidArgument, "n4 needs --point x y");
    const mpq_class x = strata::Scalar::parse_exact(point[0]).rational();
    const mpq_class y = strata::Scalar::parse_exact(point[1]).rational();
    const auto res = strata::mmc4_classify(x, y);
    json out{{"x", x.get_str()}, {"y", y.get_str()}, {"minor", res.minor.get_str()}};
    switch (res.status) {
      case strata::Mmc4Point::Status::Origin: out["status"] = "origin"; break;
      case strata::Mmc4Point::Status::Outside: out["status"] = "outside"; break;
      case strata::Mmc4Point::Status::Inside:
        out["status"] = "inside";
        out["label"] = strata::io::to_json(*res.label);
        break;
    }
    if (format == "json") {
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "point (" << out["x"].get<std::string>() << ", " << out["y"].get<std::string>()
                << "): " << out["status"].get<std::string>() << ", 3x3 minors = " << out["minor"].get<std::string>()
                << "\n";
      if (res.label) std::cout << "stratum " << label_string(*res.label) << "\n";
    }
    return 0;
  }
  if (which == "n5") {
    if (!point.empty()) {
      if (point.size() != 5) throw strata::Error(strata::ErrorCode::InvalidArgument, "n5 needs --point a b c d e");
      strata::Mmc5Point p;
      for (int k = 0; k < 5; ++k) p[k] = strata::Scalar::parse_exact(point[k]).rational();
      const auto s = strata::mmc5_matrix(p);
      json out{{"quartic", strata::igusa_quartic(p).get_str()}, {"matrix", strata::io::to_json(s)}};
      try {
        out["label"] = strata::io::to_json(strata::classify_massless(s).label);
      } catch (const strata::Error& e) {
        out["outside"] = strata::io::error_json(e);
      }
      std::cout << out.dump(format == "json" ? 2 : -1) << "\n";
      return 0;
    }
    const auto census = strata::arrangement_census();
    if (format == "json") {
      json rows = json::array();
      for (const auto& r : census.consistent) {
        std::string sigma;
        for (int s : r.sigma) sigma += s > 0 ? '+' : '-';
        json witness = json::array();
        for (const auto& v : r.witness) witness.push_back(v.get_str());
        rows.push_back(json{{"sigma", sigma}, {"signs", signs_text(r.entry_signs)}, {"witness", witness}});
      }
      std::cout << json{{"regions", census.region_count}, {"consistent", rows}}.dump(2) << "\n";
    } else {
      std::cout << "regions: " << census.region_count << "\n";
      std::cout << "consistent: " << census.consistent.size() << "\n";
      std::cout << "sigma  s12 s13 s14 s15 s23 s24 s25 s34 s35 s45\n";
      for (const auto& r : census.consistent) {
        for (int s : r.sigma) std::cout << (s > 0 ? '+' : '-');
        for (int s : r.entry_signs) std::cout << "   " << (s > 0 ? '+' : '-');
        std::cout << "\n";
      }
    }
    return 0;
  }
  throw strata::Error(strata::ErrorCode::InvalidArgument, "examples takes n4 or n5");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stratified kinematic regions: membership, classification and censuses"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format;
  app.add_option("--format", format, "pretty, json, csv or table (census defaults to table, others to pretty)")
      ->check(CLI::IsMember({"pretty", "json", "csv", "table"}));

  auto* check = app.add_subcommand("check", "Decide whether a matrix is a Mandelstam matrix");
  std::string input = "-";
  check->add_option("input", input, "Matrix JSON (path, '-' or inline)")->capture_default_str();

  auto* classify = app.add_subcommand("classify", "Classify a matrix into its stratum");
  classify->add_option("input", input, "Matrix JSON (path, '-' or inline)")->capture_default_str();

  std::string region_text = "massless";
  int n = 0;
  std::optional<int> opt_r, opt_d;
  bool check_brute = false;
  auto* census = app.add_subcommand("census", "Stratum counts by rank and dimension");
  census->add_option("--n", n, "Ground set size")->required();
  census->add_option("--region", region_text, "massless, lorentzian or mmc")->capture_default_str();
  census->add_option("--r", opt_r, "Restrict to one rank");
  census->add_option("--d", opt_d, "Restrict to one dimension");
  census->add_flag("--check-bruteforce", check_brute, "Compare against enumeration");

  auto* count = app.add_subcommand("count", "Count strata of one rank and dimension");
  int r = 0, d = 0;
  count->add_option("--n", n)->required();
  count->add_option("--r", r)->required();
  count->add_option("--d", d)->required();
  count->add_option("--region", region_text)->capture_default_str();
  count->add_flag("--check-bruteforce", check_brute);

  auto* sample = app.add_subcommand("sample", "Sample a configuration in a stratum");
  std::string label_arg;
  bool mmc = false;
  std::uint64_t seed_value = 0;
  sample->add_option("label", label_arg, "Label JSON (path, '-' or inline)")->required();
  sample->add_flag("--mmc", mmc, "Sample the momentum-conserving stratum");
  auto* sample_seed = sample->add_option("--seed", seed_value);

  auto* dimv = app.add_subcommand("dim-verify", "Compare Jacobian ranks with the dimension formulas");
  int seeds = 1;
  dimv->add_option("--n", n)->required();
  dimv->add_option("--r", r)->required();
  dimv->add_flag("--mmc", mmc);
  dimv->add_option("--seeds", seeds)->capture_default_str();
  auto* dimv_seed = dimv->add_option("--seed", seed_value);

  auto* poset = app.add_subcommand("poset", "Hasse diagram of the strata of one rank");
  poset->add_option("--n", n)->required();
  poset->add_option("--r", r)->required();
  poset->add_option("--region", region_text)->capture_default_str();
  poset->add_option("--below", label_arg, "Signed matroid JSON generating an order ideal");

  auto* examples = app.add_subcommand("examples", "Worked four- and five-point regions");
  std::string which;
  std::vector<std::string> point;
  examples->add_option("which", which, "n4 or n5")->required();
  examples->add_option("--point", point, "Exact coordinates");

  CLI11_PARSE(app, argc, argv);
  if (format.empty()) format = census->parsed() ? "table" : "pretty";

  try {
    if (check->parsed()) {
      const auto s = strata::io::matrix_from_json(load_json(input));
      const auto verdict = strata::is_mandelstam(s);
      const json out = strata::io::to_json(verdict);
      if (format == "json") {
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << (verdict.mandelstam ? "mandelstam" : "not mandelstam") << ", rank " << verdict.rank << "\n";
        if (out.contains("witness")) std::cout << "witness " << out["witness"].dump() << "\n";
      }
      return 0;
    }
    if (classify->parsed()) {
      const auto s = strata::io::matrix_from_json(load_json(input));
      const auto cls = strata::classify_massless(s);
      json out = strata::io::to_json(cls.label);
      out["margin"] = cls.margin;
      if (format == "json") {
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << label_string(cls.label) << "\n";
      }
      return 0;
    }
    if (census->parsed() || count->parsed()) {
      strata::CensusQuery q{n, strata::region_from_string(region_text), opt_r, opt_d};
      if (count->parsed()) {
        q.r = r;
        q.d = d;
      }
      const auto rows = strata::build_table(q);
      if (check_brute) {
        const auto brute = strata::brute_force_table(q);
        if (brute != rows) {
          json err{{"error", "BruteForceMismatch"}, {"message", "closed form and enumeration disagree"},
                   {"witness", json::array()}};
          std::cerr << err.dump() << "\n";
          return 1;
        }
      }
      if (count->parsed() && format != "json") {
        const mpz_class fixed = rows.empty() ? mpz_class(0) : rows.front().count_fixed;
        const mpz_class all = rows.empty() ? mpz_class(0) : rows.front().count_all;
        std::cout << fixed << "/" << all << "\n";
      } else {
        print_census(q, rows, format);
      }
      return 0;
    }
    if (sample->parsed()) {
      const auto label = strata::io::label_from_json(load_json(label_arg));
      const std::uint64_t seed = resolve_seed(sample_seed, seed_value);
      const bool conserving = mmc || label.kind == strata::Region::MMC;
      const auto config = conserving ? strata::sample_mmc(label.signed_matroid, label.rank, seed)
                                     : strata::sample_stratum(label.signed_matroid, label.rank, seed);
      const auto g = strata::gram(config);
      json out{{"config", strata::io::to_json(config)}, {"gram", strata::io::to_json(g)},
               {"label", strata::io::to_json(strata::classify_massless(g).label)}};
      std::cout << out.dump(format == "json" ? 2 : -1) << "\n";
      return 0;
    }
    if (dimv->parsed()) {
      const std::uint64_t seed = resolve_seed(dimv_seed, seed_value);
      int failures = 0, total = 0;
      json results = json::array();
      strata::for_each_signed(n, 2, [&](const strata::SignedMatroid& sm) {
        const bool member = mmc ? strata::mmc_nonempty(sm, r) : strata::nonempty_massless(sm.matroid(), r);
        if (!member) return;
        for (int k = 0; k < seeds; ++k) {
          const auto est = strata::estimate_dimension(sm, r, mmc, seed + static_cast<std::uint64_t>(k));
          const bool ok = est.rank == est.expected;
          ++total;
          if (!ok) ++failures;
          const strata::StratumLabel label{sm, r, mmc ? strata::Region::MMC : strata::massless_kind(sm)};
          if (format == "json") {
            json j = strata::io::to_json(label);
            j["estimated"] = est.rank;
            j["pass"] = ok;
            results.push_back(j);
          } else {
            std::cout << (ok ? "pass " : "FAIL ") << label_string(label) << " estimated=" << est.rank << "\n";
          }
        }
      });
      if (format == "json") {
        std::cout << json{{"checked", total}, {"failures", failures}, {"results", results}}.dump(2) << "\n";
      } else {
        std::cout << total - failures << "/" << total << " labels pass\n";
      }
      if (failures > 0) {
        std::cerr << json{{"error", "DimensionMismatch"}, {"message", "estimated rank differs from formula"},
                          {"witness", json{{"failures", failures}}}}
                         .dump()
                  << "\n";
        return 1;
      }
      return 0;
    }
    if (poset->parsed()) {
      strata::PosetQuery q{n, r, strata::region_from_string(region_text), std::nullopt};
      if (!label_arg.empty()) q.below = strata::io::signed_matroid_from_json(load_json(label_arg));
      const auto result = strata::export_poset(q);
      if (format == "json") {
        std::cout << strata::io::to_json(result).dump(2) << "\n";
      } else {
        for (std::size_t v = 0; v < result.vertices.size(); ++v) {
          std::cout << v << " " << label_string(result.vertices[v]) << "\n";
        }
        for (const auto& [lo, hi] : result.covers) std::cout << lo << " < " << hi << "\n";
      }
      return 0;
    }
    if (examples->parsed()) return run_examples(which, point, format);
  } catch (const strata::Error& e) {
    std::cerr << strata::io::error_json(e).dump() << "\n";
    return 1;
  } catch (const IoError& e) {
    std::cerr << json{{"error", "IoError"}, {"message", e.what()}, {"witness", json::array()}}.dump() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << json{{"error", "Parse"}, {"message", e.what()}, {"witness", json::array()}}.dump() << "\n";
    return 1;
  }
  return 0;
}
