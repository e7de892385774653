#include <doctest.h>

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "samelson/cli.hpp"
#include "samelson/io.hpp"

using namespace samelson;
using namespace samelson::testing;
using nlohmann::json;

namespace {

// tests run with the repository root as working directory (set by ctest)
const char* kSo3 = "data/so3.json";
const char* kU3 = "data/u3.json";

AlgebraFile parse_string(const std::string& text) {
  return parse_algebra_json(json::parse(text), "inline");
}

int run(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

}  // namespace

TEST_CASE("shipped fixtures parse to the reference tables") {
  AlgebraFile so3 = parse_algebra_file(kSo3);
  CHECK(so3.algebra == make_so3());
  CHECK(so3.algebra.name() == "so3");
  REQUIRE(so3.torus_hint.size() == 1);
  CHECK(so3.torus_hint[0] == basis_element(so3.algebra, 0).coords);

  AlgebraFile u3 = parse_algebra_file(kU3);
  CHECK(u3.algebra == make_u3());
  CHECK(u3.algebra.table().size() == 27);
  REQUIRE(u3.regular_hint.has_value());
  CHECK((*u3.regular_hint)[0] == rat(2));
}

TEST_CASE("shipped tangent fixture equals the constructed tangent algebra") {
  AlgebraFile f = parse_algebra_file("data/tso3.json");
  CHECK(f.algebra == tangent_algebra(make_so3()).total);
  CHECK(parse_matrix_file("data/tso3_j.json") == so3_tangent_j());
}

TEST_CASE("abelian file") {
  AlgebraFile f = parse_string(R"({"name":"line","dim":1,"brackets":[]})");
  CHECK(f.algebra.dim() == 1);
  CHECK(f.algebra.table().empty());
}

TEST_CASE("parse errors carry field context") {
  CHECK_THROWS_WITH_AS(
      parse_string(R"({"dim":2,"brackets":[{"i":1,"j":2,"coeffs":{"1":"1"}},
                                           {"i":1,"j":2,"coeffs":{"2":"1"}}]})"),
      doctest::Contains("duplicate pair"), ParseError);
  CHECK_THROWS_WITH_AS(parse_string(R"({"dim":2,"brackets":[{"i":2,"j":1,"coeffs":{}}]})"),
                       doctest::Contains("i < j"), ParseError);
  CHECK_THROWS_WITH_AS(parse_string(R"({"dim":2,"brackets":[{"i":1,"j":3,"coeffs":{}}]})"),
                       doctest::Contains("out of range"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_string(R"({"dim":2,"brackets":[{"i":1,"j":2,"coeffs":{"1":"1/0"}}]})"),
      doctest::Contains("coeffs[\"1\"]"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_string(R"({"dim":2,"brackets":[{"i":1,"j":2,"coeffs":{"1":"x"}}]})"),
      doctest::Contains("malformed rational"), ParseError);
  CHECK_THROWS_WITH_AS(parse_string(R"({"dim":2,"brackets":[],"torus":[5]})"),
                       doctest::Contains("torus[0]"), ParseError);
  CHECK_THROWS_WITH_AS(parse_string(R"({"dim":2,"bracket":[]})"),
                       doctest::Contains("unknown key"), ParseError);
  CHECK_THROWS_AS(parse_algebra_file("data/does_not_exist.json"), ParseError);
}

TEST_CASE("emit and parse round trip") {
  Rng rng(61);
  std::vector<AlgebraFile> files;
  files.push_back(parse_algebra_file(kSo3));
  files.push_back(parse_algebra_file(kU3));
  for (int t = 0; t < 10; ++t)
    files.push_back(AlgebraFile{random_almost_abelian(rng, 2 + t % 4), {}, std::nullopt});
  for (const auto& f : files) {
    AlgebraFile back = parse_algebra_json(emit_algebra(f), "roundtrip");
    CHECK(back.algebra == f.algebra);
    CHECK(back.algebra.name() == f.algebra.name());
    CHECK(back.torus_hint == f.torus_hint);
    CHECK(back.regular_hint == f.regular_hint);
  }
}

TEST_CASE("cli check command") {
  std::string out;
  CHECK(run({"check", kSo3}, &out) == 0);
  CHECK(out.find("jacobi: PASS") != std::string::npos);
  CHECK(out.find("compact_type: PASS") != std::string::npos);

  CHECK(run({"check", "data/filiform4.json"}, &out) == 1);
  CHECK(out.find("compact_type: FAIL") != std::string::npos);
}

TEST_CASE("cli roots command with json output") {
  std::string out;
  REQUIRE(run({"roots", kSo3, "--torus", "1", "--format", "json"}, &out) == 0);
  json doc = json::parse(out);
  CHECK(doc["name"] == "so3");
  CHECK(doc["dim"] == 3);
  REQUIRE(doc["roots"].size() == 1);
  CHECK(doc["roots"][0]["values"][0]["re"] == "0");
  CHECK(doc["roots"][0]["values"][0]["im"] == "1");
  CHECK(doc["root_vectors"][0][1]["re"] == "1");
  CHECK(doc["root_vectors"][0][2]["im"] == "1");
  CHECK(doc["overall"] == true);

  // byte-identical output on identical input
  std::string again;
  REQUIRE(run({"roots", kSo3, "--torus", "1", "--format", "json"}, &again) == 0);
  CHECK(out == again);
}

TEST_CASE("cli samelson command") {
  std::string out;
  REQUIRE(run({"samelson", kSo3, "--format", "json"}, &out) == 0);
  json doc = json::parse(out);
  REQUIRE(doc.contains("j_matrix"));
  QMat expected = so3_tangent_j();
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c)
      CHECK(doc["j_matrix"][r][c].get<std::string>() == to_string(expected(r, c)));
  bool saw_cases = false;
  for (const auto& item : doc["checks"]) {
    CHECK(item["passed"] == true);
    saw_cases = saw_cases || item["name"].get<std::string>().rfind("case", 0) == 0;
  }
  CHECK(saw_cases);

  // the text format prints the scan summary line
  std::string text;
  REQUIRE(run({"samelson", kSo3}, &text) == 0);
  CHECK(text.find("N_J = 0: PASS (15/15 pairs)") != std::string::npos);

  // tower mode
  REQUIRE(run({"samelson", kSo3, "--k", "2", "--format", "json"}, &out) == 0);
  doc = json::parse(out);
  CHECK(doc["j_matrix"].size() == 12);
  CHECK(doc["overall"] == true);
}

TEST_CASE("cli classic mode exits 1 on an odd torus") {
  std::string out, err;
  CHECK(run({"samelson", kU3, "--mode", "classic"}, &out, &err) == 1);
  CHECK(err.find("odd") != std::string::npos);

  // and works on a product of two rotation algebras
  CHECK(run({"samelson", "data/so3so3.json", "--mode", "classic"}, &out, &err) == 0);
  CHECK(run({"samelson", "data/so3so3.json", "--mode", "lift"}, &out, &err) == 0);
}

TEST_CASE("cli verify command") {
  namespace fs = std::filesystem;
  std::string dir = (fs::temp_directory_path() / "samelson_io_test").string();
  fs::create_directories(dir);
  std::string alg_path = dir + "/tso3.json";
  std::string j_path = dir + "/j.json";
  std::string j_bad_path = dir + "/j_bad.json";

  // so3 itself is odd dimensional, so J^2 = -id is impossible there; verify a
  // user-supplied J on the tangent algebra instead
  AlgebraFile so3 = parse_algebra_file(kSo3);
  TangentAlgebra tg = tangent_algebra(so3.algebra);
  {
    std::ofstream alg(alg_path);
    alg << emit_algebra(AlgebraFile{tg.total, {}, std::nullopt});
  }
  auto dump_matrix = [](const QMat& j, const std::string& path) {
    json rows = json::array();
    for (int r = 0; r < j.rows(); ++r) {
      json row = json::array();
      for (int c = 0; c < j.cols(); ++c) row.push_back(to_string(j(r, c)));
      rows.push_back(row);
    }
    std::ofstream jm(path);
    jm << rows;
  };
  dump_matrix(so3_tangent_j(), j_path);
  QMat bad = so3_tangent_j();
  bad(2, 1) = rat(1);
  dump_matrix(bad, j_bad_path);

  std::string out;
  CHECK(run({"verify", alg_path, "--j", j_path}, &out) == 0);
  CHECK(out.find("N_J = 0: PASS") != std::string::npos);

  // corrupted matrix: verification failure, exit 1, certificate printed
  CHECK(run({"verify", alg_path, "--j", j_bad_path}, &out) == 1);
  CHECK(out.find("FAIL") != std::string::npos);
  CHECK(out.find("residual") != std::string::npos);

  // wrong size: usage error
  std::string err;
  CHECK(run({"verify", kSo3, "--j", j_path}, &out, &err) == 2);
}

TEST_CASE("cli usage errors exit 2") {
  std::string out, err;
  CHECK(run({"frobnicate", kSo3}, &out, &err) == 2);
  CHECK(run({"roots"}, &out, &err) == 2);
  CHECK(run({"roots", kSo3, "--format", "yaml"}, &out, &err) == 2);
  CHECK(run({"roots", "data/missing.json"}, &out, &err) == 2);
  CHECK(run({"roots", kSo3, "--torus", "7"}, &out, &err) == 2);
  CHECK(run({"--help"}, &out, &err) == 0);
}

TEST_CASE("cli rejects a bad torus hint with exit 1") {
  std::string out, err;
  // e1, e2 do not commute in so3
  CHECK(run({"roots", kSo3, "--torus", "1,2"}, &out, &err) == 1);
  CHECK(err.find("abelian") != std::string::npos);
}

TEST_CASE("cli torus search honors SAMELSON_SEED") {
  namespace fs = std::filesystem;
  std::string out, err;

  // abelian algebra: the searched torus is the whole space, no roots to snap
  std::string ab_path = (fs::temp_directory_path() / "samelson_seed_ab.json").string();
  {
    std::ofstream o(ab_path);
    o << R"({"name":"t4","dim":4,"brackets":[]})";
  }
  setenv("SAMELSON_SEED", "3", 1);
  int code = run({"roots", ab_path, "--format", "json"}, &out, &err);
  unsetenv("SAMELSON_SEED");
  REQUIRE(code == 0);
  json doc = json::parse(out);
  CHECK(doc["torus"].size() == 4);
  CHECK(doc["roots"].empty());

  // a searched torus of so3+so3 is generically not axis aligned, so the root
  // values are irrational multiples of i and the exact gate must refuse
  AlgebraFile f = parse_algebra_file("data/so3so3.json");
  f.torus_hint.clear();
  std::string path = (fs::temp_directory_path() / "samelson_seed_test.json").string();
  {
    std::ofstream o(path);
    o << emit_algebra(f);
  }
  setenv("SAMELSON_SEED", "3", 1);
  code = run({"roots", path}, &out, &err);
  unsetenv("SAMELSON_SEED");
  CHECK(code == 1);
  CHECK(err.find("irrational") != std::string::npos);

  setenv("SAMELSON_SEED", "not_a_number", 1);
  code = run({"roots", ab_path}, &out, &err);
  unsetenv("SAMELSON_SEED");
  CHECK(code == 2);
}

TEST_CASE("coordinate-vector torus hints flow through the pipeline") {
  namespace fs = std::filesystem;
  std::string path = (fs::temp_directory_path() / "samelson_coord_torus.json").string();
  {
    std::ofstream o(path);
    o << R"({"name":"so3","dim":3,
             "brackets":[{"i":1,"j":2,"coeffs":{"3":"-1"}},
                          {"i":1,"j":3,"coeffs":{"2":"1"}},
                          {"i":2,"j":3,"coeffs":{"1":"-1"}}],
             "torus":[["1","0","0"]]})";
  }
  std::string out;
  REQUIRE(run({"roots", path, "--format", "json"}, &out) == 0);
  json doc = json::parse(out);
  CHECK(doc["roots"].size() == 1);
  CHECK(doc["roots"][0]["values"][0]["im"] == "1");
}

TEST_CASE("regular element accepted as algebra coordinates or torus coefficients") {
  std::string as_torus, as_coords;
  REQUIRE(run({"roots", kU3, "--regular", "2,1,3", "--format", "json"}, &as_torus) == 0);
  REQUIRE(run({"roots", kU3, "--regular", "2,1,3,0,0,0,0,0,0", "--format", "json"},
              &as_coords) == 0);
  CHECK(as_torus == as_coords);

  // a different regular element flips the system: flag overrides the file
  std::string flipped;
  REQUIRE(run({"roots", kU3, "--regular", "-2,-1,-3", "--format", "json"}, &flipped) == 0);
  json a = json::parse(as_torus), b = json::parse(flipped);
  for (int r = 0; r < 3; ++r)
    for (int v = 0; v < 3; ++v) {
      Rat lhs = parse_rat(a["roots"][r]["values"][v]["im"].get<std::string>());
      Rat rhs = parse_rat(b["roots"][2 - r]["values"][v]["im"].get<std::string>());
      CHECK(lhs == -rhs);  // canonical order reverses under negation
    }
}

TEST_CASE("cli tolerance flag and repeated lifts") {
  std::string out, err;
  CHECK(run({"roots", kSo3, "--tol", "1e-12"}, &out, &err) == 0);
  CHECK(run({"roots", kSo3, "--tol", "-1"}, &out, &err) == 2);  // flag validation
  // classic structure on so3+so3 lifted twice: 24x24
  REQUIRE(run({"samelson", "data/so3so3.json", "--mode", "classic", "--k", "2", "--format",
               "json"},
              &out, &err) == 0);
  json doc = json::parse(out);
  CHECK(doc["j_matrix"].size() == 24);
  CHECK(doc["provenance"] == "proposition-lift");
}
