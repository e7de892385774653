#include "samelson/io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace samelson {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Rat rat_field(const json& v, const std::string& ctx) {
  if (!v.is_string()) throw ParseError(ctx + ": expected a rational string like \"-1/2\"");
  try {
    return parse_rat(v.get<std::string>());
  } catch (const Error& e) {
    throw ParseError(ctx + ": " + e.what());
  }
}

std::vector<Rat> rat_vector(const json& v, int dim, const std::string& ctx) {
  if (!v.is_array() || static_cast<int>(v.size()) != dim)
    throw ParseError(ctx + ": expected an array of " + std::to_string(dim) + " rational strings");
  std::vector<Rat> out;
  for (size_t i = 0; i < v.size(); ++i)
    out.push_back(rat_field(v[i], ctx + "[" + std::to_string(i) + "]"));
  return out;
}

ordered_json json_of(const GRat& x) {
  ordered_json out;
  out["re"] = to_string(x.re);
  out["im"] = to_string(x.im);
  return out;
}

ordered_json json_of_item(const VerificationItem& item) {
  ordered_json out;
  out["name"] = item.name;
  out["passed"] = item.passed;
  if (item.certificate) {
    ordered_json cert;
    cert["indices"] = item.certificate->indices;
    if (!item.certificate->residual.empty()) {
      ordered_json res = ordered_json::array();
      for (const auto& v : item.certificate->residual) res.push_back(json_of(v));
      cert["residual"] = std::move(res);
    }
    if (!item.certificate->detail.empty()) cert["detail"] = item.certificate->detail;
    out["certificate"] = std::move(cert);
  }
  return out;
}

std::string describe_certificate(const Certificate& cert) {
  std::string out;
  if (!cert.indices.empty()) {
    out += " at (";
    for (size_t i = 0; i < cert.indices.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(cert.indices[i]);
    }
    out += ")";
  }
  if (!cert.detail.empty()) out += ": " + cert.detail;
  if (!cert.residual.empty()) out += "; residual = " + format_element(cert.residual);
  return out;
}

}  // namespace

AlgebraFile parse_algebra_file(const std::string& path) {
  return parse_algebra_json(load_json(path), path);
}

AlgebraFile parse_algebra_json(const json& doc, const std::string& ctx) {
  if (!doc.is_object()) throw ParseError(ctx + ": expected a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "name" && key != "dim" && key != "brackets" && key != "torus" &&
        key != "regular_element")
      throw ParseError(ctx + ": unknown key '" + key + "'");
  }
  if (!doc.contains("dim") || !doc["dim"].is_number_integer())
    throw ParseError(ctx + ": missing integer 'dim'");
  int dim = doc["dim"].get<int>();
  if (dim < 1) throw ParseError(ctx + ": dim must be >= 1");
  std::string name = doc.value("name", std::string("algebra"));

  if (!doc.contains("brackets") || !doc["brackets"].is_array())
    throw ParseError(ctx + ": missing array 'brackets'");
  LieAlgebra::Table table;
  for (size_t e = 0; e < doc["brackets"].size(); ++e) {
    const json& entry = doc["brackets"][e];
    std::string ectx = ctx + ": brackets[" + std::to_string(e) + "]";
    if (!entry.is_object() || !entry.contains("i") || !entry.contains("j") ||
        !entry.contains("coeffs") || !entry["i"].is_number_integer() ||
        !entry["j"].is_number_integer() || !entry["coeffs"].is_object())
      throw ParseError(ectx + ": expected {\"i\": int, \"j\": int, \"coeffs\": object}");
    for (const auto& [key, _] : entry.items())
      if (key != "i" && key != "j" && key != "coeffs")
        throw ParseError(ectx + ": unknown key '" + key + "'");
    int i = entry["i"].get<int>(), j = entry["j"].get<int>();
    if (i < 1 || i > dim || j < 1 || j > dim)
      throw ParseError(ectx + ": index out of range 1.." + std::to_string(dim));
    if (i >= j) throw ParseError(ectx + ": entries must have i < j (antisymmetry is implied)");
    if (table.count({i - 1, j - 1}))
      throw ParseError(ectx + ": duplicate pair (" + std::to_string(i) + "," + std::to_string(j) +
                       ")");
    LieAlgebra::Entry sparse;
    for (const auto& [kstr, val] : entry["coeffs"].items()) {
      int k = 0;
      try {
        size_t used = 0;
        k = std::stoi(kstr, &used);
        if (used != kstr.size()) throw std::invalid_argument(kstr);
      } catch (const std::exception&) {
        throw ParseError(ectx + ": coeffs key '" + kstr + "' is not a basis index");
      }
      if (k < 1 || k > dim)
        throw ParseError(ectx + ": coeffs index " + kstr + " out of range 1.." +
                         std::to_string(dim));
      sparse.emplace_back(k - 1, rat_field(val, ectx + ".coeffs[\"" + kstr + "\"]"));
    }
    table[{i - 1, j - 1}] = std::move(sparse);
  }

  AlgebraFile out{LieAlgebra(dim, std::move(name), std::move(table)), {}, std::nullopt};

  if (doc.contains("torus")) {
    if (!doc["torus"].is_array()) throw ParseError(ctx + ": 'torus' must be an array");
    for (size_t t = 0; t < doc["torus"].size(); ++t) {
      const json& v = doc["torus"][t];
      std::string tctx = ctx + ": torus[" + std::to_string(t) + "]";
      if (v.is_number_integer()) {
        int idx = v.get<int>();
        if (idx < 1 || idx > dim)
          throw ParseError(tctx + ": basis index out of range 1.." + std::to_string(dim));
        std::vector<Rat> coords(dim, Rat(0));
        coords[idx - 1] = Rat(1);
        out.torus_hint.push_back(std::move(coords));
      } else {
        out.torus_hint.push_back(rat_vector(v, dim, tctx));
      }
    }
  }
  if (doc.contains("regular_element"))
    out.regular_hint = rat_vector(doc["regular_element"], dim, ctx + ": regular_element");
  return out;
}

ordered_json emit_algebra(const AlgebraFile& f) {
  const LieAlgebra& g = f.algebra;
  ordered_json out;
  out["name"] = g.name();
  out["dim"] = g.dim();
  ordered_json brackets = ordered_json::array();
  for (const auto& [ij, entry] : g.table()) {
    ordered_json e;
    e["i"] = ij.first + 1;
    e["j"] = ij.second + 1;
    ordered_json coeffs;
    for (const auto& [k, v] : entry) coeffs[std::to_string(k + 1)] = to_string(v);
    e["coeffs"] = std::move(coeffs);
    brackets.push_back(std::move(e));
  }
  out["brackets"] = std::move(brackets);
  if (!f.torus_hint.empty()) {
    ordered_json torus = ordered_json::array();
    for (const auto& v : f.torus_hint) {
      ordered_json vec = ordered_json::array();
      for (const auto& c : v) vec.push_back(to_string(c));
      torus.push_back(std::move(vec));
    }
    out["torus"] = std::move(torus);
  }
  if (f.regular_hint) {
    ordered_json vec = ordered_json::array();
    for (const auto& c : *f.regular_hint) vec.push_back(to_string(c));
    out["regular_element"] = std::move(vec);
  }
  return out;
}

QMat parse_matrix_file(const std::string& path) {
  json doc = load_json(path);
  if (!doc.is_array() || doc.empty())
    throw ParseError(path + ": expected a nonempty array of rows");
  int rows = static_cast<int>(doc.size());
  int cols = -1;
  QMat m;
  for (int r = 0; r < rows; ++r) {
    if (!doc[r].is_array()) throw ParseError(path + ": row " + std::to_string(r) + " not an array");
    if (cols < 0) {
      cols = static_cast<int>(doc[r].size());
      m = QMat(rows, cols);
    }
    if (static_cast<int>(doc[r].size()) != cols)
      throw ParseError(path + ": ragged rows");
    for (int c = 0; c < cols; ++c)
      m(r, c) = rat_field(doc[r][c],
                          path + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
  }
  return m;
}

void render_text(const CliReport& report, std::ostream& out) {
  out << "algebra: " << report.name << " (dim " << report.dim << ")\n";
  if (report.torus) {
    out << "torus (dim " << report.torus->size() << "):\n";
    for (size_t i = 0; i < report.torus->size(); ++i) {
      std::vector<GRat> coords((*report.torus)[i].begin(), (*report.torus)[i].end());
      out << "  H_" << (i + 1) << " = " << format_element(coords) << "\n";
    }
  }
  if (report.regular) {
    std::vector<GRat> coords(report.regular->begin(), report.regular->end());
    out << "regular element: " << format_element(coords) << "\n";
  }
  if (report.roots) {
    out << "positive roots (" << report.roots->size() << "):\n";
    for (size_t r = 0; r < report.roots->size(); ++r) {
      out << "  root " << (r + 1) << ": values (";
      const auto& vals = (*report.roots)[r].values;
      for (size_t i = 0; i < vals.size(); ++i) {
        if (i) out << ", ";
        out << to_string(vals[i]);
      }
      out << ")";
      if (report.root_vectors) out << "   E_" << (r + 1) << " = "
                                   << format_element((*report.root_vectors)[r]);
      out << "\n";
    }
  }
  if (report.j_matrix) {
    out << "J (" << report.j_matrix->rows() << "x" << report.j_matrix->cols();
    if (report.provenance) out << ", " << *report.provenance;
    out << "):\n";
    for (int r = 0; r < report.j_matrix->rows(); ++r) {
      out << "  [";
      for (int c = 0; c < report.j_matrix->cols(); ++c)
        out << " " << to_string((*report.j_matrix)(r, c));
      out << " ]\n";
    }
  }

  int case_pass = 0, case_total = 0;
  for (const auto& item : report.checks.items)
    if (item.name.rfind("case", 0) == 0) {
      ++case_total;
      if (item.passed) ++case_pass;
    }
  for (const auto& item : report.checks.items) {
    if (item.name.rfind("case", 0) == 0) continue;
    if (item.name == "j_squared") {
      out << "J^2 = -id: " << (item.passed ? "PASS" : "FAIL");
    } else if (item.name == "nijenhuis" && report.j_matrix) {
      int n = report.j_matrix->rows();
      int pairs = n * (n - 1) / 2;
      out << "N_J = 0: " << (item.passed ? "PASS" : "FAIL") << " (" << pairs << "/" << pairs
          << " pairs)";
    } else {
      out << item.name << ": " << (item.passed ? "PASS" : "FAIL");
    }
    if (!item.passed && item.certificate) out << describe_certificate(*item.certificate);
    out << "\n";
  }
  if (case_total > 0) {
    out << "case families: " << case_pass << "/" << case_total
        << (case_pass == case_total ? " PASS" : " FAIL") << "\n";
    for (const auto& item : report.checks.items) {
      if (item.name.rfind("case", 0) != 0) continue;
      out << "  " << item.name << ": " << (item.passed ? "PASS" : "FAIL");
      if (!item.passed && item.certificate) out << describe_certificate(*item.certificate);
      out << "\n";
    }
  }
  out << "overall: " << (report.overall() ? "PASS" : "FAIL") << "\n";
}

std::string render_json(const CliReport& report) {
  ordered_json out;
  out["name"] = report.name;
  out["dim"] = report.dim;
  if (report.torus) {
    ordered_json torus = ordered_json::array();
    for (const auto& h : *report.torus) {
      ordered_json vec = ordered_json::array();
      for (const auto& c : h) vec.push_back(to_string(c));
      torus.push_back(std::move(vec));
    }
    out["torus"] = std::move(torus);
  }
  if (report.regular) {
    ordered_json vec = ordered_json::array();
    for (const auto& c : *report.regular) vec.push_back(to_string(c));
    out["regular_element"] = std::move(vec);
  }
  if (report.roots) {
    ordered_json roots = ordered_json::array();
    for (const auto& r : *report.roots) {
      ordered_json values = ordered_json::array();
      for (const auto& v : r.values) values.push_back(json_of(v));
      ordered_json root;
      root["values"] = std::move(values);
      roots.push_back(std::move(root));
    }
    out["roots"] = std::move(roots);
  }
  if (report.root_vectors) {
    ordered_json vecs = ordered_json::array();
    for (const auto& v : *report.root_vectors) {
      ordered_json vec = ordered_json::array();
      for (const auto& c : v) vec.push_back(json_of(c));
      vecs.push_back(std::move(vec));
    }
    out["root_vectors"] = std::move(vecs);
  }
  if (report.j_matrix) {
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < report.j_matrix->rows(); ++r) {
      ordered_json row = ordered_json::array();
      for (int c = 0; c < report.j_matrix->cols(); ++c)
        row.push_back(to_string((*report.j_matrix)(r, c)));
      rows.push_back(std::move(row));
    }
    out["j_matrix"] = std::move(rows);
    if (report.provenance) out["provenance"] = *report.provenance;
  }
  ordered_json checks = ordered_json::array();
  for (const auto& item : report.checks.items) checks.push_back(json_of_item(item));
  out["checks"] = std::move(checks);
  out["overall"] = report.overall();
  return out.dump(2) + "\n";
}

}  // namespace samelson
