#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "tcds/io.hpp"

using namespace tcds;
using nlohmann::json;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("tcds_io_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("matrix round-trip is exact") {
  Rng rng(2);
  Mat m(3, 2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j) m(i, j) = rng.cgaussian();
  const Mat back = matrix_from_json(matrix_to_json(m), 3, 2, "m");
  CHECK(mat_max_abs(back - m) == 0.0);
}

TEST_CASE("element round-trip and diagnostics") {
  const AlgebraShape shape{{1, 2}};
  Rng rng(3);
  const AlgebraElement a = random_element(shape, rng);
  const AlgebraElement back = element_from_json(element_to_json(a), shape, "a");
  CHECK(elem_distance(back, a) == 0.0);

  json bad = element_to_json(a);
  bad["mats"][1][0][0] = json::array({1.0});  // not a [re,im] pair
  try {
    element_from_json(bad, shape, "a");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(std::string(e.what()).find("a.mats[1][0][0]") != std::string::npos);
  }

  json missing = element_to_json(a);
  missing.erase("mats");
  CHECK_THROWS_AS(element_from_json(missing, shape, "a"), parse_error);

  json nonfinite = element_to_json(a);
  nonfinite["mats"][0][0][0] = json::array({std::numeric_limits<double>::quiet_NaN(), 0.0});
  // NaN does not survive json serialization anyway, but a direct object must be rejected
  CHECK_THROWS_AS(element_from_json(nonfinite, shape, "a"), parse_error);
}

TEST_CASE("system save/load round-trip preserves every entry") {
  TempDir tmp;
  const SystemPtr sys = random_system(6, direct_product(cyclic_group(2), cyclic_group(2)),
                                      AlgebraShape{{2, 2}}, 0.5);
  save_system(*sys, tmp.file("sys.json"));
  const SystemPtr back = load_system(tmp.file("sys.json"));

  CHECK(back->k == sys->k);
  CHECK(back->group.order == sys->group.order);
  CHECK(back->group.table == sys->group.table);
  CHECK(back->group.identity == sys->group.identity);
  CHECK(back->group.inverses == sys->group.inverses);
  CHECK(back->shape == sys->shape);
  for (int r = 0; r < sys->group.order; ++r) {
    CHECK(back->alpha[r].perm == sys->alpha[r].perm);
    for (std::size_t i = 0; i < sys->alpha[r].units.size(); ++i)
      CHECK(mat_max_abs(back->alpha[r].units[i] - sys->alpha[r].units[i]) <= 1e-15);
    for (int s = 0; s < sys->group.order; ++s)
      CHECK(elem_distance(back->omega[r][s], sys->omega[r][s]) <= 1e-15);
  }

  // save → load → save is byte-stable
  save_system(*back, tmp.file("sys2.json"));
  std::ifstream f1(tmp.file("sys.json")), f2(tmp.file("sys2.json"));
  const std::string s1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
  const std::string s2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
  CHECK(s1 == s2);
}

TEST_CASE("conv element round-trip") {
  TempDir tmp;
  const SystemPtr sys = make_rotation_system(3, 1, 2.0);
  Rng rng(9);
  const ConvElement f = random_conv(sys, rng, 0.3);
  save_conv(f, tmp.file("f.json"));
  const ConvElement back = load_conv(tmp.file("f.json"), sys);
  CHECK(conv_distance(back, f) == 0.0);
}

TEST_CASE("loading rejects malformed and math-invalid files") {
  TempDir tmp;
  const SystemPtr sys = make_trivial_system(cyclic_group(3), AlgebraShape{{1}}, 1.0);

  SUBCASE("missing file") { CHECK_THROWS_AS(load_system(tmp.file("nope.json")), parse_error); }

  SUBCASE("unparseable JSON") {
    std::ofstream(tmp.file("junk.json")) << "{ not json";
    CHECK_THROWS_AS(load_system(tmp.file("junk.json")), parse_error);
  }

  SUBCASE("missing field is named") {
    json j = system_to_json(*sys);
    j.erase("k");
    write_json_file(j, tmp.file("nok.json"));
    try {
      load_system(tmp.file("nok.json"));
      FAIL("expected parse_error");
    } catch (const parse_error& e) {
      CHECK(std::string(e.what()).find("'k'") != std::string::npos);
    }
  }

  SUBCASE("wrong omega arity is named") {
    json j = system_to_json(*sys);
    j["omega"][1].erase(2);
    write_json_file(j, tmp.file("noo.json"));
    try {
      load_system(tmp.file("noo.json"));
      FAIL("expected parse_error");
    } catch (const parse_error& e) {
      CHECK(std::string(e.what()).find("omega[1]") != std::string::npos);
    }
  }

  SUBCASE("non-group table") {
    json j = system_to_json(*sys);
    j["group"]["table"][0][0] = 1;
    write_json_file(j, tmp.file("nog.json"));
    CHECK_THROWS_AS(load_system(tmp.file("nog.json")), not_a_group);
  }

  SUBCASE("group order contradiction") {
    json j = system_to_json(*sys);
    j["group"]["order"] = 4;
    write_json_file(j, tmp.file("noord.json"));
    CHECK_THROWS_AS(load_system(tmp.file("noord.json")), parse_error);
  }

  SUBCASE("well-formed but axiom-violating file") {
    TwistedSystem bad = *sys;
    bad.omega[1][1].mats[0](0, 0) = cplx(-1.0, 0.0);
    save_system(bad, tmp.file("bad.json"));
    CHECK_NOTHROW(load_system_unchecked(tmp.file("bad.json")));
    try {
      load_system(tmp.file("bad.json"));
      FAIL("expected invalid_system");
    } catch (const invalid_system& e) {
      CHECK(!e.report.pass());
      CHECK(e.report.max_residual() > 1.0);
    }
  }
}

TEST_CASE("identity and inverses are re-derived, not trusted") {
  TempDir tmp;
  const SystemPtr sys = make_trivial_system(cyclic_group(3), AlgebraShape{{1}}, 1.0);
  json j = system_to_json(*sys);
  CHECK(!j["group"].contains("identity"));  // not serialized at all
  write_json_file(j, tmp.file("sys.json"));
  const SystemPtr back = load_system(tmp.file("sys.json"));
  CHECK(back->group.identity == 0);
  CHECK(back->group.inv(1) == 2);
}

TEST_CASE("report serialization carries the full record set") {
  const SystemPtr sys = make_rotation_system(2, 1, 1.0);
  const ValidationReport vrep = validate_system(*sys);
  const json vj = validation_report_to_json(vrep);
  CHECK(vj["pass"] == true);
  CHECK(vj["checks"].size() == vrep.checks.size());
  CHECK(vj["checks"][2]["status"] == "vacuous");

  const TheoremReport trep = verify_system(sys, 1, 10, 1e-9);
  const json tj = theorem_report_to_json(trep);
  CHECK(tj["pass"] == true);
  CHECK(tj["seed"] == 1);
  CHECK(tj["samples"] == 10);
  CHECK(tj["checks"].size() == trep.checks.size());

  const std::string text = format_theorem_report(trep);
  for (const char* label : {"First Norm Identity", "Second Norm Identity", "Main Norm Identity",
                            "First Norm Inequality", "Main Norm Inequality",
                            "Theorem contractivity"})
    CHECK(text.find(label) != std::string::npos);
  const std::string vtext = format_validation_report(vrep);
  CHECK(vtext.find("vacuous") != std::string::npos);
  CHECK(vtext.find("(7)") != std::string::npos);
}
