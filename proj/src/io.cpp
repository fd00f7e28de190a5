#include "fproot/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace fproot {

namespace {

Json number_or_string(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

std::string describe(const Json& j) {
  std::string s = j.dump();
  return s.size() > 40 ? s.substr(0, 40) + "..." : s;
}

Rational parse_rational_json(const Json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_number_unsigned()) return Rational(static_cast<long>(j.get<unsigned long>()));
    if (j.is_number_float()) return parse_rational(j.dump());
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument&) {
  }
  throw ParseError(where + ": cannot read " + describe(j) + " as a rational number");
}

std::string id_of(const Json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long>());
  throw ParseError(where + ": expected a string identifier, got " + describe(j));
}

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

RatMatrix parse_rat_matrix(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of rows");
  RatMatrix m(rows, cols);
  if (rows == 0 || cols == 0) {
    // Accept [] or a list of empty rows for degenerate shapes.
    if (j.size() != 0 && j.size() != rows) throw ParseError(where + ": wrong number of rows");
    for (const auto& r : j)
      if (!r.is_array() || r.size() != cols) throw ParseError(where + ": wrong row length");
    return m;
  }
  if (j.size() != rows)
    throw ParseError(where + ": expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw ParseError(where + ": row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = parse_rational_json(j[r][c], where + " entry (" + std::to_string(r) + "," + std::to_string(c) + ")");
  }
  return m;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

ExtendedMatrix parse_matrix(const Json& j) {
  if (!j.is_array()) throw ParseError("matrix: expected an array of rows");
  const std::size_t n = j.size();
  ExtendedMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n)
      throw ParseError("matrix: row " + std::to_string(r) + " must have " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) {
      const Json& e = j[r][c];
      const std::string where = "matrix entry (" + std::to_string(r) + "," + std::to_string(c) + ")";
      if (e.is_string()) {
        const std::string s = e.get<std::string>();
        if (s == "inf" || s == "+inf" || s == "∞") {
          m(r, c) = ExtendedEntry::pos_inf();
          continue;
        }
        if (s == "-inf" || s == "-∞") {
          m(r, c) = ExtendedEntry::neg_inf();
          continue;
        }
      }
      m(r, c) = ExtendedEntry::finite(parse_rational_json(e, where));
    }
  }
  return m;
}

Quiver parse_quiver(const Json& j) {
  Quiver q;
  try {
    for (const auto& v : require(j, "vertices", "quiver")) q.add_vertex(id_of(v, "quiver vertex"));
    if (j.contains("arrows"))
      for (const auto& a : j.at("arrows")) {
        const std::string label = id_of(require(a, "label", "quiver arrow"), "arrow label");
        q.add_arrow(label, id_of(require(a, "from", "arrow '" + label + "'"), "arrow source"),
                    id_of(require(a, "to", "arrow '" + label + "'"), "arrow target"));
      }
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("quiver: ") + e.what());
  }
  return q;
}

Json quiver_to_json(const Quiver& q) {
  Json j;
  j["vertices"] = q.vertices();
  j["arrows"] = Json::array();
  for (const auto& a : q.arrows())
    j["arrows"].push_back({{"label", a.label}, {"from", q.vertices()[a.source]}, {"to", q.vertices()[a.target]}});
  return j;
}

BoundAlgebra parse_algebra(const Json& j, const AlgebraOptions& opts) {
  Quiver q = parse_quiver(j.contains("quiver") ? j.at("quiver") : j);
  std::vector<Relation> relations;
  if (j.contains("relations")) {
    const Json& rels = j.at("relations");
    if (!rels.is_array()) throw ParseError("relations: expected an array");
    for (std::size_t r = 0; r < rels.size(); ++r) {
      const std::string where = "relation " + std::to_string(r);
      if (!rels[r].is_array()) throw ParseError(where + ": expected an array of terms");
      Relation rel;
      for (const auto& t : rels[r]) {
        const Rational c = t.contains("coeff") ? parse_rational_json(t.at("coeff"), where + " coefficient") : Rational(1);
        std::vector<std::string> labels;
        for (const auto& l : require(t, "path", where)) labels.push_back(id_of(l, where + " path"));
        if (labels.empty()) throw ParseError(where + ": empty path");
        try {
          rel.push_back({c, path_from_labels(q, labels)});
        } catch (const std::invalid_argument& e) {
          throw ParseError(where + ": " + e.what());
        }
      }
      relations.push_back(std::move(rel));
    }
  }
  try {
    return build_algebra(std::move(q), std::move(relations), opts);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("algebra: ") + e.what());
  }
}

Json algebra_to_json(const BoundAlgebra& a) {
  Json j = quiver_to_json(a.quiver());
  j["relations"] = Json::array();
  for (const auto& r : a.relations()) {
    Json rel = Json::array();
    for (const auto& t : r) rel.push_back({{"coeff", to_string(t.coeff)}, {"path", path_labels(a.quiver(), t.path)}});
    j["relations"].push_back(rel);
  }
  j["dim"] = a.dim();
  Json basis = Json::array();
  for (const auto& p : a.basis()) basis.push_back(path_name(a.quiver(), p));
  j["basis"] = basis;
  return j;
}

Representation parse_module(const Json& j, const AlgebraPtr& a) {
  const Quiver& q = a->quiver();
  std::vector<std::size_t> d(q.vertex_count(), 0);
  const Json& dv = require(j, "dimvec", "module");
  if (dv.is_object()) {
    for (const auto& [key, val] : dv.items()) {
      auto v = q.find_vertex(key);
      if (!v) throw ParseError("module dimvec: unknown vertex '" + key + "'");
      if (!val.is_number_unsigned() && !(val.is_number_integer() && val.get<long>() >= 0))
        throw ParseError("module dimvec: entry for '" + key + "' must be a nonnegative integer");
      d[*v] = val.get<std::size_t>();
    }
  } else if (dv.is_array() && dv.size() == d.size()) {
    for (std::size_t v = 0; v < d.size(); ++v) {
      if (!dv[v].is_number_unsigned()) throw ParseError("module dimvec: entries must be nonnegative integers");
      d[v] = dv[v].get<std::size_t>();
    }
  } else {
    throw ParseError("module dimvec: expected an object keyed by vertex");
  }
  std::vector<RatMatrix> maps;
  const Json empty = Json::object();
  const Json& mj = j.contains("maps") ? j.at("maps") : empty;
  for (const auto& [key, val] : mj.items())
    if (!q.find_arrow(key)) throw ParseError("module maps: unknown arrow '" + key + "'");
  for (const auto& ar : q.arrows()) {
    const std::size_t rows = d[ar.target], cols = d[ar.source];
    if (mj.contains(ar.label))
      maps.push_back(parse_rat_matrix(mj.at(ar.label), rows, cols, "module map '" + ar.label + "'"));
    else
      maps.emplace_back(rows, cols);
  }
  try {
    return Representation(a, d, std::move(maps), j.contains("name") ? id_of(j.at("name"), "module name") : "M");
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("module: ") + e.what());
  }
}

Json matrix_to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Json module_to_json(const Representation& m) {
  const Quiver& q = m.algebra()->quiver();
  Json j;
  j["name"] = m.name();
  Json d = Json::object();
  for (std::size_t v = 0; v < q.vertex_count(); ++v) d[q.vertices()[v]] = m.dim(v);
  j["dimvec"] = d;
  Json maps = Json::object();
  for (std::size_t a = 0; a < q.arrow_count(); ++a) maps[q.arrow(a).label] = matrix_to_json(m.map(a));
  j["maps"] = maps;
  return j;
}

Json spectral_to_json(const SpectralValue& v) {
  Json j;
  if (v.infinite)
    j["rho"] = "inf";
  else if (v.exact)
    j["rho"] = to_string(*v.exact);
  else
    j["rho"] = v.value;
  j["value"] = number_or_string(v.infinite ? INFINITY : v.value);
  j["certified"] = v.certified;
  j["tolerance"] = number_or_string(v.tolerance);
  if (v.exact) j["exact"] = to_string(*v.exact);
  if (v.bracket) j["bracket"] = {to_string(v.bracket->first), to_string(v.bracket->second)};
  if (!v.root_polynomial.empty()) {
    Json p = Json::array();
    for (const auto& c : v.root_polynomial) p.push_back(to_string(c));
    j["root_polynomial"] = p;
  }
  return j;
}

Json growth_to_json(const GrowthEstimate& g) {
  return {{"fpg", number_or_string(g.fpg)},
          {"fpv", number_or_string(g.fpv)},
          {"kind", to_string(g.kind)},
          {"window", {g.window_begin, g.window_end}}};
}

namespace {

Json member_names(const FpReport& r, const std::vector<std::size_t>& members) {
  Json out = Json::array();
  for (std::size_t i : members) out.push_back(r.names[i]);
  return out;
}

Json doubles(const std::vector<double>& xs) {
  Json out = Json::array();
  for (double x : xs) out.push_back(number_or_string(x));
  return out;
}

}  // namespace

Json report_to_json(const FpReport& r, const Json& extra_budgets) {
  Json j;
  j["version"] = version;
  Json budgets{{"max_set_size", r.budgets.max_set_size}, {"max_sets", r.budgets.max_sets}};
  for (const auto& [k, v] : extra_budgets.items()) budgets[k] = v;
  j["budgets"] = budgets;
  j["universe"] = r.names;
  j["powers"] = r.powers;
  Json grid = Json::array();
  for (const auto& row : r.grid)
    for (const auto& c : row)
      grid.push_back({{"n", c.n},
                      {"power", c.power},
                      {"fpdim", spectral_to_json(c.value)},
                      {"witness", member_names(r, c.witness)},
                      {"sets_scanned", c.sets_scanned},
                      {"exhausted", c.exhausted}});
  j["grid"] = grid;
  j["fpdim"] = r.fpdim ? spectral_to_json(*r.fpdim) : Json(nullptr);
  j["fpdim_witness"] = member_names(r, r.fpdim_witness);
  j["stabilization_index"] = r.stabilization_index ? Json(*r.stabilization_index) : Json(nullptr);
  j["fpgldim"] = r.fpgldim ? Json(*r.fpgldim) : Json(nullptr);
  if (r.growth) {
    Json g = growth_to_json(*r.growth);
    g["fpc"] = r.growth->kind == GrowthEstimate::Kind::vanishing ? Json(0.0) : number_or_string(r.growth->fpg + 1.0);
    g["sequence"] = doubles(r.growth_sequence);
    j["growth"] = g;
  } else {
    j["growth"] = nullptr;
  }
  if (r.envelope_growth) {
    Json g = growth_to_json(*r.envelope_growth);
    g["sequence"] = doubles(r.envelope_sequence);
    j["envelope_growth"] = g;
  } else {
    j["envelope_growth"] = nullptr;
  }
  j["exhausted"] = r.exhausted;
  return j;
}

std::string report_grid_csv(const FpReport& r) {
  std::ostringstream out;
  out << "n,power,fpdim,certified,witness\n";
  for (const auto& row : r.grid)
    for (const auto& c : row) {
      out << c.n << ',' << c.power << ',';
      if (c.value.infinite)
        out << "inf";
      else if (c.value.exact)
        out << to_string(*c.value.exact);
      else
        out << c.value.value;
      out << ',' << (c.value.certified ? "true" : "false") << ",\"";
      for (std::size_t k = 0; k < c.witness.size(); ++k) out << (k ? ";" : "") << r.names[c.witness[k]];
      out << "\"\n";
    }
  return out.str();
}

}  // namespace fproot
