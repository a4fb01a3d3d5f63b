#include <doctest.h>

#include <fstream>
#include <sstream>

#include "nang/io.hpp"
#include "nang/workbench.hpp"

using namespace nang;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kGolden = NANG_GOLDEN_DIR;

}  // namespace

TEST_CASE("emit then parse is the identity on builtins") {
  for (const auto& name : builtin_names()) {
    auto d = builtin_document(name);
    std::string text = emit_document(d);
    auto back = parse_document(text);
    CHECK(emit_document(back) == text);
    CHECK(back.cat.dims() == d.cat.dims());
    CHECK(back.n == d.n);
    CHECK(back.subcategory == d.subcategory);
  }
}

TEST_CASE("frozen presentation files are byte stable") {
  CHECK(emit_document(builtin_document("a3-cluster-2ct")) == read_file(kGolden + "/a3-cluster-2ct.json"));
  CHECK(emit_document(builtin_document("stable-kx2")) == read_file(kGolden + "/stable-kx2.json"));
}

TEST_CASE("truncated documents report a position") {
  std::string text = read_file(kGolden + "/a3-cluster-2ct.json");
  std::string cut = text.substr(0, text.size() / 2);
  try {
    parse_document(cut);
    FAIL("expected a document error");
  } catch (const DocumentError& e) {
    CHECK(e.line > 1);
    CHECK(e.column > 0);
  }
}

TEST_CASE("unknown fields are rejected with a position") {
  std::string text = read_file(kGolden + "/stable-kx2.json");
  auto pos = text.find("\"name\"");
  REQUIRE(pos != std::string::npos);
  text.insert(pos, "\"colour\": \"red\",\n  ");
  try {
    parse_document(text);
    FAIL("expected a document error");
  } catch (const DocumentError& e) {
    CHECK(std::string(e.what()).find("colour") != std::string::npos);
    CHECK(e.line > 0);
  }
}

TEST_CASE("bad format and version") {
  CHECK_THROWS_AS(parse_document(R"({"format": "other", "version": 1})"), DocumentError);
  CHECK_THROWS_AS(parse_document(R"({"format": "nang-presentation", "version": 9})"), DocumentError);
  CHECK_THROWS_AS(load_document(kGolden + "/missing.json"), DocumentError);
}

TEST_CASE("object and morphism literals") {
  auto d = builtin_document("a3-cluster-2ct");
  const auto& c = d.cat;
  Obj a = parse_object(c, "S3+2*P1");
  CHECK(a.mult == std::vector<int>{1, 2, 0});
  CHECK(parse_object(c, "0").is_zero());
  CHECK(parse_object(c, object_literal(c, a)) == a);
  Mor f = parse_morphism(c, "S3+P1->P1:1,-2/3");
  CHECK(f.v.size() == 2);
  CHECK(to_string(f.v[1]) == "-2/3");
  CHECK(mor_equal(parse_morphism(c, morphism_literal(c, f)), f));
  CHECK_THROWS(parse_object(c, "Q7"));
  CHECK_THROWS(parse_morphism(c, "S3->P1:1,2"));
}

TEST_CASE("stored angles survive the round trip") {
  Workbench wb(builtin_document("a3-cluster-2ct"));
  AngleSpec s = spec_from_angle(wb.generators().front());
  NSequence back = angle_from_spec(wb.ambient(), s);
  for (std::size_t k = 0; k < back.maps.size(); ++k) CHECK(mor_equal(back.maps[k], wb.generators().front().maps[k]));
}
