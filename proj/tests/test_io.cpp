#include <doctest.h>

#include <filesystem>

#include "lowrank/errors.hpp"
#include "lowrank/io.hpp"
#include "support.hpp"

using namespace lowrank;

namespace {

std::string token_of(const std::string& text, Json (*reader)(const std::string&)) {
  try {
    reader(text);
  } catch (const ParseError& e) {
    return e.token();
  }
  return "<no error>";
}

Json read_ensemble(const std::string& text) { return ensemble_to_json(ensemble_from_json(parse_json(text))); }
Json read_subspaces(const std::string& text) { return subspaces_to_json(subspaces_from_json(parse_json(text))); }
Json read_certificate(const std::string& text) { return certificate_to_json(certificate_from_json(parse_json(text))); }

}  // namespace

TEST_CASE("ensemble round trip") {
  RationalMatrix a(2, 2);
  a(0, 0) = make_rational(3, 7);
  a(1, 0) = -12;
  const MeasurementEnsemble e{2, 1, true, {a, RationalMatrix::identity(2)}};
  const MeasurementEnsemble back = ensemble_from_json(parse_json(to_text(ensemble_to_json(e))));
  CHECK(back.n == 2);
  CHECK(back.symmetric);
  CHECK(back.matrices == e.matrices);
}

TEST_CASE("integer entries are accepted") {
  const auto e = ensemble_from_json(parse_json(R"({"n":2,"matrices":[[[1,0],[0,"-1/2"]]]})"));
  CHECK(e.r == 1);
  CHECK_FALSE(e.symmetric);
  CHECK(e.matrices[0](1, 1) == make_rational(-1, 2));
}

TEST_CASE("ensemble errors name the offending token") {
  CHECK(token_of(R"({"n":2,"matrices":[[[1,0],[0,"x"]]]})", read_ensemble) == "x");
  CHECK(token_of(R"({"matrices":[]})", read_ensemble) == "n");
  CHECK(token_of(R"({"n":1,"matrices":[]})", read_ensemble) == "n = 1");
  CHECK(token_of(R"({"n":2,"matrices":[[[1,0]]]})", read_ensemble) == "matrices[0]");
  CHECK(token_of(R"({"n":2,"matrices":[[[1,0],[0]]]})", read_ensemble) == "matrices[0][1]");
  CHECK(token_of(R"({"n":2,"matrices":[[[1,0],[0,true]]]})", read_ensemble) == "matrices[0][1][1] = true");
  CHECK(token_of(R"({"n":2, "matrices": [}")", read_ensemble).find('}') != std::string::npos);
}

TEST_CASE("subspace round trip and errors") {
  const SubspaceFile f =
      subspaces_from_json(parse_json(read_text_file(data_dir() / "thm43_subspaces.json")));
  CHECK(f.n == 4);
  const SubspaceFile back = subspaces_from_json(parse_json(to_text(subspaces_to_json(f))));
  REQUIRE(back.subspaces.size() == f.subspaces.size());
  for (std::size_t i = 0; i < f.subspaces.size(); ++i) {
    CHECK(back.subspaces[i].projector() == f.subspaces[i].projector());
  }
  CHECK(token_of(R"({"n":2,"subspaces":[[]]})", read_subspaces) == "subspaces[0]");
  CHECK(token_of(R"({"n":2,"subspaces":[[[1,2],[2,4]]]})", read_subspaces) == "subspaces[0]");
}

TEST_CASE("certificate round trip") {
  const auto v = testing::vars({"a", "b"});
  Certificate c;
  c.verdict = Verdict::Injective;
  c.reason = "";
  c.n = 4;
  c.r = 1;
  c.m = 11;
  c.kept = {"a", "b"};
  c.f0 = testing::P("a^2+3*b^2", v);
  c.real_root_count = 0;
  c.slices = {{"x11", true}, {"x12", std::nullopt}};
  c.stats.linear_pivots = 11;
  const std::string text = to_text(certificate_to_json(c));
  const Certificate back = certificate_from_json(parse_json(text));
  CHECK(back.verdict == Verdict::Injective);
  REQUIRE(back.f0.has_value());
  CHECK(to_string(*back.f0) == to_string(*c.f0));
  CHECK(back.slices[1].contains_one == std::nullopt);
  CHECK(to_text(certificate_to_json(back)) == text);

  Json bad = parse_json(text);
  bad["verdict"] = "MAYBE";
  CHECK(token_of(bad.dump(), read_certificate) == "\"MAYBE\"");
}

TEST_CASE("files") {
  const auto dir = std::filesystem::temp_directory_path() / "lowrank_io_test";
  std::filesystem::create_directories(dir);
  write_text_file(dir / "x.json", "{}\n");
  CHECK(read_text_file(dir / "x.json") == "{}\n");
  CHECK_THROWS_AS(read_text_file(dir / "missing.json"), IoError);
  CHECK_THROWS_AS(write_text_file(dir / "no" / "such" / "dir.json", ""), IoError);
  std::filesystem::remove_all(dir);
}
