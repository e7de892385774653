#pragma once

#include <nlohmann/json_fwd.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "samelson/report.hpp"
#include "samelson/root_datum.hpp"

namespace samelson {

/// Malformed input (files, flags); the CLI maps it to exit code 2.
struct ParseError : Error {
  using Error::Error;
};

/// Parsed algebra file: the algebra plus optional torus / regular-element
/// hints as raw coordinate vectors (index shorthands already expanded).
struct AlgebraFile {
  LieAlgebra algebra;
  std::vector<std::vector<Rat>> torus_hint;
  std::optional<std::vector<Rat>> regular_hint;
};

AlgebraFile parse_algebra_file(const std::string& path);
AlgebraFile parse_algebra_json(const nlohmann::json& doc, const std::string& context);

/// Inverse of parse_algebra_json: parse(emit(f)) reproduces f exactly.
nlohmann::ordered_json emit_algebra(const AlgebraFile& f);

/// A J matrix as a JSON array of arrays of rational strings.
QMat parse_matrix_file(const std::string& path);

/// Everything a command wants to print, rendered as text or stable JSON.
struct CliReport {
  std::string name;
  int dim = 0;
  std::optional<std::vector<std::vector<Rat>>> torus;
  std::optional<std::vector<Rat>> regular;
  std::optional<std::vector<Root>> roots;
  std::optional<std::vector<std::vector<GRat>>> root_vectors;
  std::optional<QMat> j_matrix;
  std::optional<std::string> provenance;
  VerificationReport checks;

  bool overall() const { return checks.overall(); }
};

void render_text(const CliReport& report, std::ostream& out);
std::string render_json(const CliReport& report);

}  // namespace samelson
