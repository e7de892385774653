#include "samelson/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <ostream>

#include "samelson/io.hpp"
#include "samelson/roots.hpp"
#include "samelson/verify.hpp"

namespace samelson {

namespace {

std::uint64_t seed_from_env() {
  const char* env = std::getenv("SAMELSON_SEED");
  if (!env || !*env) return 0;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0') throw ParseError("SAMELSON_SEED is not an unsigned integer");
  return v;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

struct PipelineOptions {
  std::string torus_spec;    // comma-separated 1-based basis indices
  std::string regular_spec;  // comma-separated rationals, length k or n
  double tol = 1e-9;
  std::string format = "text";
};

std::vector<Element> resolve_torus(const LieAlgebra& g, const AlgebraFile& file,
                                   const std::string& spec, std::uint64_t seed) {
  std::vector<Element> hint;
  if (!spec.empty()) {
    for (const auto& tok : split_commas(spec)) {
      int idx = 0;
      try {
        size_t used = 0;
        idx = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError("--torus: '" + tok + "' is not a basis index");
      }
      if (idx < 1 || idx > g.dim())
        throw ParseError("--torus: index " + tok + " out of range 1.." + std::to_string(g.dim()));
      hint.push_back(basis_element(g, idx - 1));
    }
  } else {
    for (const auto& coords : file.torus_hint) hint.push_back(make_element(g, coords));
  }
  return find_maximal_torus(g, seed, hint.empty() ? nullptr : &hint);
}

std::optional<Element> resolve_regular(const LieAlgebra& g, const AlgebraFile& file,
                                       const std::string& spec,
                                       const std::vector<Element>& torus) {
  if (!spec.empty()) {
    std::vector<Rat> vals;
    for (const auto& tok : split_commas(spec)) {
      try {
        vals.push_back(parse_rat(tok));
      } catch (const Error& e) {
        throw ParseError(std::string("--regular: ") + e.what());
      }
    }
    if (static_cast<int>(vals.size()) == static_cast<int>(torus.size())) {
      Element h0 = zero_element(g);
      for (size_t i = 0; i < torus.size(); ++i) h0 = h0 + vals[i] * torus[i];
      return h0;
    }
    if (static_cast<int>(vals.size()) == g.dim()) return make_element(g, std::move(vals));
    throw ParseError("--regular: expected " + std::to_string(torus.size()) +
                     " torus coefficients or " + std::to_string(g.dim()) +
                     " algebra coordinates, got " + std::to_string(vals.size()));
  }
  if (file.regular_hint) return make_element(g, *file.regular_hint);
  return std::nullopt;
}

int finish(const CliReport& report, const std::string& format, std::ostream& out) {
  if (format == "json")
    out << render_json(report);
  else
    render_text(report, out);
  return report.overall() ? 0 : 1;
}

// jacobi + compact_type; returns false if the pipeline must stop.
bool structural_checks(const LieAlgebra& g, CliReport& report) {
  VerificationItem jacobi = check_jacobi(g);
  report.checks.add(jacobi);
  if (!jacobi.passed) return false;
  VerificationItem compact = check_compact_type(g);
  report.checks.add(compact);
  return compact.passed;
}

RootDatum run_root_pipeline(const LieAlgebra& g, const AlgebraFile& file,
                            const PipelineOptions& opts, CliReport& report) {
  std::vector<Element> torus = resolve_torus(g, file, opts.torus_spec, seed_from_env());
  RootDatum datum = root_space_decomposition(g, torus, opts.tol);
  datum = choose_positive_system(datum, resolve_regular(g, file, opts.regular_spec, torus));
  datum = normalize_root_vectors(datum);
  report.checks.add(verify_root_exactness(datum));

  std::vector<std::vector<Rat>> torus_coords;
  for (const auto& h : datum.torus) torus_coords.push_back(h.coords);
  report.torus = std::move(torus_coords);
  report.regular = datum.regular->coords;
  report.roots = datum.roots;
  std::vector<std::vector<GRat>> vectors;
  for (const auto& v : datum.root_vectors) vectors.push_back(v.coords);
  report.root_vectors = std::move(vectors);
  return datum;
}

int cmd_check(const std::string& path, const std::string& format, std::ostream& out) {
  AlgebraFile file = parse_algebra_file(path);
  CliReport report;
  report.name = file.algebra.name();
  report.dim = file.algebra.dim();
  structural_checks(file.algebra, report);
  return finish(report, format, out);
}

int cmd_roots(const std::string& path, const PipelineOptions& opts, std::ostream& out) {
  AlgebraFile file = parse_algebra_file(path);
  CliReport report;
  report.name = file.algebra.name();
  report.dim = file.algebra.dim();
  if (!structural_checks(file.algebra, report)) return finish(report, opts.format, out);
  run_root_pipeline(file.algebra, file, opts, report);
  return finish(report, opts.format, out);
}

int cmd_samelson(const std::string& path, const PipelineOptions& opts, const std::string& mode,
                 int k, std::ostream& out) {
  AlgebraFile file = parse_algebra_file(path);
  const LieAlgebra& g = file.algebra;
  CliReport report;
  report.name = g.name();
  report.dim = g.dim();
  if (!structural_checks(g, report)) return finish(report, opts.format, out);
  RootDatum datum = run_root_pipeline(g, file, opts, report);

  if (mode == "tangent") {
    int levels = k < 0 ? 1 : k;
    if (levels < 1) throw Error("--k must be >= 1 in tangent mode");
    Tower tower = build_tower(g, levels);
    ComplexStructure j = tower_complex_structure(tower, datum, levels);
    report.checks.add(verify_j_squared(j));
    report.checks.add(verify_integrability(j));
    if (levels == 1)
      for (auto& family : case_suite(tower.tangent_at(1), datum, j))
        report.checks.add(std::move(family.item));
    report.j_matrix = j.matrix;
    report.provenance = to_string(j.provenance);
  } else {
    // classic: Samelson structure on the algebra itself, optionally lifted
    // k times; lift mode defaults to one lift
    int lifts = k;
    if (mode == "classic" && lifts < 0) lifts = 0;
    if (mode == "lift") lifts = lifts < 0 ? 1 : std::max(lifts, 1);
    ComplexStructure j = build_classic_samelson(g, datum);
    std::optional<Tower> tower;
    if (lifts > 0) {
      tower.emplace(build_tower(g, lifts));
      for (int level = 1; level <= lifts; ++level)
        j = lift_complex_structure(tower->tangent_at(level), j);
    }
    report.checks.add(verify_j_squared(j));
    report.checks.add(verify_integrability(j));
    report.j_matrix = j.matrix;
    report.provenance = to_string(j.provenance);
  }
  return finish(report, opts.format, out);
}

int cmd_verify(const std::string& path, const std::string& matrix_path, const std::string& format,
               std::ostream& out) {
  AlgebraFile file = parse_algebra_file(path);
  const LieAlgebra& g = file.algebra;
  QMat m = parse_matrix_file(matrix_path);
  if (m.rows() != g.dim() || m.cols() != g.dim())
    throw ParseError(matrix_path + ": expected a " + std::to_string(g.dim()) + "x" +
                     std::to_string(g.dim()) + " matrix, got " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()));
  ComplexStructure j{&g, std::move(m), Provenance::UserSupplied};
  CliReport report;
  report.name = g.name();
  report.dim = g.dim();
  report.j_matrix = j.matrix;
  report.provenance = to_string(j.provenance);
  report.checks.add(check_jacobi(g));
  report.checks.add(verify_j_squared(j));
  report.checks.add(verify_integrability(j));
  return finish(report, format, out);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Samelson-type complex structures on tangent Lie algebras"};
  app.name("samelson");

  std::string file, matrix_file, mode = "tangent";
  PipelineOptions opts;
  int k = -1;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_str("text");
  };

  CLI::App* check = app.add_subcommand("check", "Jacobi identity and compact-type certificate");
  check->add_option("file", file, "Algebra file (JSON)")->required();
  add_format(check);

  CLI::App* roots = app.add_subcommand("roots", "Exact root space decomposition");
  roots->add_option("file", file, "Algebra file (JSON)")->required();
  roots->add_option("--torus", opts.torus_spec, "Torus hint: comma-separated basis indices");
  roots->add_option("--regular", opts.regular_spec,
                    "Regular element: comma-separated rationals (torus coefficients or algebra "
                    "coordinates)");
  roots->add_option("--tol", opts.tol, "Eigenvalue snapping tolerance")
      ->check(CLI::PositiveNumber)
      ->default_val(1e-9);
  add_format(roots);

  CLI::App* build = app.add_subcommand("samelson", "Construct and verify a complex structure");
  build->add_option("file", file, "Algebra file (JSON)")->required();
  build->add_option("--k", k, "Tower level (tangent mode) or number of lifts (classic mode)");
  build->add_option("--mode", mode, "Construction")
      ->check(CLI::IsMember({"tangent", "classic", "lift"}))
      ->default_str("tangent");
  build->add_option("--torus", opts.torus_spec, "Torus hint: comma-separated basis indices");
  build->add_option("--regular", opts.regular_spec,
                    "Regular element: comma-separated rationals");
  build->add_option("--tol", opts.tol, "Eigenvalue snapping tolerance")
      ->check(CLI::PositiveNumber)
      ->default_val(1e-9);
  add_format(build);

  CLI::App* verify = app.add_subcommand("verify", "Verify a user-supplied J matrix");
  verify->add_option("file", file, "Algebra file (JSON)")->required();
  verify->add_option("--j", matrix_file, "J matrix file (JSON array of rows)")->required();
  add_format(verify);

  app.require_subcommand(1);

  std::vector<const char*> argv;
  argv.push_back("samelson");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(file, opts.format, out);
    if (roots->parsed()) return cmd_roots(file, opts, out);
    if (build->parsed()) return cmd_samelson(file, opts, mode, k, out);
    if (verify->parsed()) return cmd_verify(file, matrix_file, opts.format, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace samelson
