#include "strata/json_io.hpp"

#include <string>

namespace strata::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::Parse, what); }

Scalar scalar_from_json(const json& v, Mode mode) {
  if (mode == Mode::Exact) {
    if (v.is_string()) return Scalar::parse_exact(v.get<std::string>());
    if (v.is_number_integer()) return Scalar(mpq_class(v.get<long>()));
    parse_error("exact entries must be strings \"p/q\" or integers");
  }
  if (!v.is_number()) parse_error("float entries must be numbers");
  return Scalar(v.get<double>());
}

json scalar_to_json(const Scalar& s) {
  if (s.is_exact()) return s.to_string();
  return s.real();
}

std::string sign_char(int s) { return s > 0 ? "+" : "-"; }

}  // namespace

json to_json(const SymmetricMatrix& s) {
  json upper = json::array();
  for (const Scalar& v : s.upper()) upper.push_back(scalar_to_json(v));
  return json{{"n", s.size()}, {"mode", std::string(to_string(s.mode()))}, {"upper", upper}};
}

SymmetricMatrix matrix_from_json(const json& j) {
  if (!j.is_object()) parse_error("matrix must be a JSON object");
  const std::string mode_text = j.value("mode", std::string("exact"));
  if (mode_text != "exact" && mode_text != "float") parse_error("mode must be \"exact\" or \"float\"");
  const Mode mode = mode_text == "exact" ? Mode::Exact : Mode::Float;

  if (j.contains("rows")) {
    const json& rows = j.at("rows");
    const int n = static_cast<int>(rows.size());
    if (mode == Mode::Exact) {
      std::vector<std::vector<mpq_class>> dense(n, std::vector<mpq_class>(n));
      for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n) parse_error("matrix rows must be square");
        for (int k = 0; k < n; ++k) dense[i][k] = scalar_from_json(rows[i][k], mode).rational();
      }
      return SymmetricMatrix::from_rows(dense);
    }
    std::vector<std::vector<double>> dense(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(rows[i].size()) != n) parse_error("matrix rows must be square");
      for (int k = 0; k < n; ++k) dense[i][k] = scalar_from_json(rows[i][k], mode).real();
    }
    return SymmetricMatrix::from_rows(dense);
  }

  if (!j.contains("n") || !j.contains("upper")) parse_error("matrix needs \"n\" and \"upper\" (or \"rows\")");
  const int n = j.at("n").get<int>();
  const json& upper = j.at("upper");
  if (n < 1 || upper.size() != static_cast<std::size_t>(n * (n + 1) / 2)) {
    parse_error("\"upper\" must hold n(n+1)/2 entries");
  }
  SymmetricMatrix s(n, mode);
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    for (int c = i; c < n; ++c) s.set(i, c, scalar_from_json(upper[k++], mode));
  }
  return s;
}

json to_json(const SignedMatroid& sm) {
  json parts = json::array();
  for (const auto& part : sm.matroid().parts()) {
    json p = json::array();
    for (int i : part) p.push_back(i + 1);
    parts.push_back(p);
  }
  json signs = json::object();
  for (int i : sm.matroid().nonloops()) signs[std::to_string(i + 1)] = sign_char(sm.sigma()[i]);
  return json{{"n", sm.ground_size()}, {"parts", parts}, {"signs", signs}};
}

SignedMatroid signed_matroid_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("parts")) parse_error("signed matroid needs \"n\" and \"parts\"");
  const int n = j.at("n").get<int>();
  if (n < 2) parse_error("\"n\" must be at least 2");
  std::vector<std::vector<int>> parts;
  for (const json& part : j.at("parts")) {
    std::vector<int> p;
    for (const json& e : part) p.push_back(e.get<int>() - 1);
    parts.push_back(p);
  }
  const RankTwoMatroid matroid = RankTwoMatroid::from_parts(n, parts);
  std::vector<int> sigma(static_cast<std::size_t>(n), 0);
  for (int i : matroid.nonloops()) sigma[i] = 1;
  if (j.contains("signs")) {
    const json& signs = j.at("signs");
    if (signs.is_string()) {
      // Compact form: one character per non-loop in increasing order.
      const std::string text = signs.get<std::string>();
      const auto nonloops = matroid.nonloops();
      if (text.size() != nonloops.size()) parse_error("sign string needs one character per non-loop");
      for (std::size_t k = 0; k < nonloops.size(); ++k) sigma[nonloops[k]] = text[k] == '-' ? -1 : 1;
    } else {
      for (const auto& [key, value] : signs.items()) {
        const int i = std::stoi(key) - 1;
        if (i < 0 || i >= n) throw Error(ErrorCode::IndexOutOfRange, "sign index out of range", {std::max(i, 0)});
        const std::string v = value.get<std::string>();
        if (v != "+" && v != "-") parse_error("signs must be \"+\" or \"-\"");
        sigma[i] = v == "+" ? 1 : -1;
      }
    }
  }
  return SignedMatroid(matroid, SignVector(sigma));
}

json to_json(const StratumLabel& label) {
  json j = to_json(label.signed_matroid);
  j["r"] = label.rank;
  j["kind"] = std::string(to_string(label.kind));
  j["d"] = label.dimension();
  return j;
}

StratumLabel label_from_json(const json& j) {
  const SignedMatroid sm = signed_matroid_from_json(j);
  if (!j.contains("r")) parse_error("label needs \"r\"");
  StratumLabel label{sm, j.at("r").get<int>(), massless_kind(sm)};
  if (j.contains("kind")) label.kind = region_from_string(j.at("kind").get<std::string>());
  return label;
}

json to_json(const MomentumConfig& c) {
  return json{{"n", c.n}, {"r", c.r}, {"seed", c.seed}, {"lambdas", c.lambdas}, {"points", c.points}};
}

MomentumConfig config_from_json(const json& j) {
  if (!j.is_object() || !j.contains("lambdas") || !j.contains("points")) {
    parse_error("configuration needs \"lambdas\" and \"points\"");
  }
  MomentumConfig c;
  c.lambdas = j.at("lambdas").get<std::vector<double>>();
  c.points = j.at("points").get<std::vector<std::vector<double>>>();
  c.n = j.value("n", static_cast<int>(c.lambdas.size()));
  c.r = j.value("r", c.points.empty() ? 2 : static_cast<int>(c.points.front().size()) + 1);
  c.seed = j.value("seed", std::uint64_t{0});
  return c;
}

json to_json(const CensusRow& row) {
  return json{{"n", row.n}, {"r", row.r}, {"d", row.d}, {"fixed", row.count_fixed.get_str()},
              {"all", row.count_all.get_str()}};
}

json to_json(const Poset& poset) {
  json vertices = json::array();
  for (std::size_t v = 0; v < poset.vertices.size(); ++v) {
    json j = to_json(poset.vertices[v]);
    j["id"] = v;
    vertices.push_back(j);
  }
  json edges = json::array();
  for (const auto& [lo, hi] : poset.covers) edges.push_back(json::array({lo, hi}));
  return json{{"vertices", vertices}, {"covers", edges}};
}

json to_json(const MandelstamVerdict& verdict) {
  json j{{"mandelstam", verdict.mandelstam}, {"rank", verdict.rank}};
  if (verdict.violation) {
    json subset = json::array();
    for (int i : verdict.violation->subset) subset.push_back(i + 1);
    j["witness"] = json{{"subset", subset}, {"minor", scalar_to_json(verdict.violation->minor)}};
  }
  if (verdict.negative_diagonal) j["witness"] = json{{"diagonal", *verdict.negative_diagonal + 1}};
  return j;
}

json error_json(const Error& e) {
  json witness = json::array();
  for (int i : e.witness()) witness.push_back(i + 1);
  return json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}, {"witness", witness}};
}

}  // namespace strata::io
