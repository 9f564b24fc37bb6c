#include "core/json_io.hpp"

#include <json.hpp>

#include "core/error.hpp"

namespace dominor {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::kParseError, "malformed JSON");
  return j;
}

Rational rat_of(const json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return rational_from_string(j.get<std::string>());
  fail(Errc::kParseError, "expected a rational as \"p/q\" string or integer");
}

}  // namespace

std::string matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rational_to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows.dump();
}

Matrix matrix_from_json(const std::string& text) {
  json j = parse(text);
  if (j.is_object() && j.contains("matrix")) j = j["matrix"];
  if (!j.is_array() || j.empty()) fail(Errc::kParseError, "matrix JSON must be an array of rows");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j[0].size());
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j[i].size()) != cols) fail(Errc::kParseError, "ragged matrix rows");
    for (int c = 0; c < cols; ++c) m.at(i, c) = rat_of(j[i][c]);
  }
  return m;
}

std::string region_to_json(const Region& r) {
  json out;
  json cells = json::array();
  for (Cell c : r.cells) cells.push_back(json::array({c.x, c.y}));
  out["cells"] = std::move(cells);
  if (r.anchor)
    out["anchor"] = json::array({r.anchor->first, r.anchor->second});
  else
    out["anchor"] = nullptr;
  return out.dump();
}

Region region_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("cells")) fail(Errc::kParseError, "region JSON needs \"cells\"");
  std::vector<Cell> cells;
  for (const auto& c : j["cells"]) {
    if (!c.is_array() || c.size() != 2) fail(Errc::kParseError, "cell must be [x, y]");
    cells.push_back({c[0].get<int>(), c[1].get<int>()});
  }
  std::optional<Point> anchor;
  if (j.contains("anchor") && !j["anchor"].is_null()) {
    const auto& a = j["anchor"];
    if (!a.is_array() || a.size() != 2) fail(Errc::kParseError, "anchor must be [x, y]");
    anchor = Point{a[0].get<int>(), a[1].get<int>()};
  }
  if (cells.empty() && !anchor) fail(Errc::kParseError, "empty region needs an anchor");
  return Region::from_cells(std::move(cells), anchor);
}

std::string spec_to_json(const SemiContigSpec& s) {
  json out;
  out["a"] = s.a;
  out["b"] = s.b;
  out["ks"] = s.ks;
  out["ts"] = s.ts;
  out["n"] = s.n;
  out["side"] = s.side == SemiContigSpec::Side::kSM ? "SM" : "SMbar";
  return out.dump();
}

SemiContigSpec spec_from_json(const std::string& text) {
  json j = parse(text);
  SemiContigSpec s;
  try {
    s.a = j.at("a").get<int>();
    s.b = j.at("b").get<int>();
    s.ks = j.at("ks").get<std::vector<int>>();
    s.ts = j.at("ts").get<std::vector<int>>();
    s.n = j.at("n").get<int>();
    const std::string side = j.value("side", "SM");
    if (side == "SM")
      s.side = SemiContigSpec::Side::kSM;
    else if (side == "SMbar")
      s.side = SemiContigSpec::Side::kSMbar;
    else
      fail(Errc::kParseError, "side must be SM or SMbar");
  } catch (const json::exception& e) {
    fail(Errc::kParseError, std::string("bad spec JSON: ") + e.what());
  }
  return s;
}

std::string network_to_json(const Network& n) {
  json out;
  out["n"] = n.n;
  out["interior"] = n.interior;
  json edges = json::array();
  for (const auto& [u, v, c] : n.edges)
    edges.push_back(json::array({u, v, rational_to_string(c)}));
  out["edges"] = std::move(edges);
  json rot = json::object();
  for (const auto& [v, order] : n.rotation) rot[std::to_string(v)] = order;
  out["rotation"] = std::move(rot);
  return out.dump();
}

Network network_from_json(const std::string& text) {
  json j = parse(text);
  Network n;
  try {
    n.n = j.at("n").get<int>();
    n.interior = j.value("interior", 0);
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3) fail(Errc::kParseError, "edge must be [u, v, c]");
      n.edges.emplace_back(e[0].get<int>(), e[1].get<int>(), rat_of(e[2]));
    }
    if (j.contains("rotation"))
      for (const auto& [key, val] : j["rotation"].items())
        n.rotation[std::stoi(key)] = val.get<std::vector<int>>();
  } catch (const json::exception& e) {
    fail(Errc::kParseError, std::string("bad network JSON: ") + e.what());
  }
  n.validate();
  return n;
}

std::string laurent_to_json(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) {
    json term;
    term["coeff"] = rational_to_string(c);
    json exps = json::array();
    for (const auto& [pt, ex] : e) exps.push_back(json::array({pt.first, pt.second, ex}));
    term["exponents"] = std::move(exps);
    out.push_back(std::move(term));
  }
  return out.dump();
}

std::string report_to_json(const VerificationReport& r) {
  json out;
  out["theorem"] = r.theorem;
  out["params"] = r.params;
  out["lhs"] = r.lhs;
  out["rhs"] = r.rhs;
  out["equal"] = r.equal;
  out["cells"] = r.region_cells;
  if (r.tilings >= 0) out["tilings"] = r.tilings;
  out["ms"] = r.ms;
  if (!r.note.empty()) out["note"] = r.note;
  return out.dump();
}

}  // namespace dominor
