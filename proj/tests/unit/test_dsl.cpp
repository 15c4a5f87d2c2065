#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <regex>

#include "ggr/corpus.hpp"
#include "ggr/dsl.hpp"
#include "ggr/errors.hpp"

using namespace ggr;
using namespace ggr::dsl;
namespace fs = std::filesystem;

namespace {

std::string fixture(const std::string& name) { return std::string(GGR_FIXTURES) + "/" + name; }

std::vector<fs::path> files(const std::string& dir) {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(fixture(dir)))
    if (e.path().extension() == ".ggr") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("one-component graduation") {
  auto s = parse("group R = Z2\ncomponent d1 = {(1)}");
  CHECK(s.kind == Kind::Graduation);
  REQUIRE(s.groups.size() == 1);
  CHECK(s.groups[0].components.size() == 1);
  auto e = elaborate(s);
  CHECK(e.report.passed());
  REQUIRE(e.graduation.has_value());
  CHECK(e.graduation->grade_count() == 1);
}

TEST_CASE("trivial group serializes to a short text") {
  auto s = parse("group R = 1\n");
  CHECK(s.kind == Kind::Group);
  CHECK(parse(serialize(s)) == s);
  CHECK(elaborate(s).group->size() == 1);
}

TEST_CASE("arity errors carry a position") {
  try {
    parse("group R = Z2\ngroup Gamma = Z2\ntriple (a, g) -> b\n");
    FAIL("accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 8);
  }
}

TEST_CASE("comments, aliases and zero") {
  auto s = parse(
      "# header\n"
      "version 1\n"
      "group R = Z2 x Z2   # two factors\n"
      "alias s = (1,0)\n"
      "alias i = (0,1)\n"
      "component A = {s}\n"
      "component B = {i}\n"
      "group Gamma = Z2\n"
      "alias g = (1)\n"
      "triple (s, g, s) -> s\n"
      "triple (s, g, i) -> i\n"
      "triple (i, g, s) -> i\n"
      "default triple -> 0\n");
  CHECK(s.kind == Kind::Anneid);
  auto e = elaborate(s);
  CHECK(e.report.passed());
  REQUIRE(e.anneid.has_value());
  CHECK(anneid::find_isomorphism(*e.anneid, corpus::sd3()).has_value());
  CHECK(parse(serialize(s)) == s);
}

TEST_CASE("empty tables with a default give the zero product") {
  auto e = elaborate(parse("group R = Z2 x Z2\ncomponent a = {(1,0)}\ncomponent b = {(0,1)}\n"
                           "group Gamma = Z2\ndefault triple -> 0\n"));
  REQUIRE(e.anneid.has_value());
  CHECK(e.report.passed());
  for (ElemId x = 0; x < e.anneid->size(); ++x)
    for (ElemId y = 0; y < e.anneid->size(); ++y) CHECK(e.anneid->product(x, 1, y) == 0);
}

TEST_CASE("incomplete tables and non-homogeneous entries are structural errors") {
  CHECK_THROWS_AS(elaborate(parse("group R = Z2\ngroup Gamma = Z2\n")), StructuralError);
  CHECK_THROWS_AS(elaborate(parse("group R = Z2 x Z2\ncomponent a = {(1,0)}\ncomponent b = {(0,1)}\n"
                                  "group Gamma = Z2\ntriple ((1,1), (1), (1,0)) -> 0\ndefault triple -> 0\n")),
                  StructuralError);
  CHECK_THROWS_AS(elaborate(parse("group R = Z2 x Z2\ncomponent a = {(1,0)}\ncomponent b = {(1,0)}\n"
                                  "group Gamma = Z2\ndefault triple -> 0\n")),
                  StructuralError);
}

TEST_CASE("shipped fixtures round trip and match the builders") {
  auto paths = files(".");
  REQUIRE(paths.size() >= 7);
  for (const auto& p : paths) {
    auto s = parse_file(p.string());
    CHECK_MESSAGE(parse(serialize(s)) == s, p);
    CHECK(serialize(parse(serialize(s))) == serialize(s));
  }
  auto sd = corpus::semidirect_f2();
  auto e = elaborate(parse_file(fixture("semidirect_f2.ggr")));
  REQUIRE(e.graded.has_value());
  CHECK(e.graded->ring == sd.ring.ring);
  CHECK(e.graded->grad_r == sd.ring.grad_r);
  CHECK(e.graded->grad_gamma == sd.ring.grad_gamma);

  auto mx = corpus::matrix_m2f2();
  auto em = elaborate(parse_file(fixture("matrix_m2f2.ggr")));
  REQUIRE(em.graded.has_value());
  CHECK(em.graded->ring == mx.ring.ring);
  CHECK(em.graded->grad_r == mx.ring.grad_r);

  auto gr = corpus::graded_ring_as_gamma();
  auto eg = elaborate(parse_file(fixture("graded_ring.ggr")));
  REQUIRE(eg.graded.has_value());
  CHECK(eg.graded->ring == gr.ring.ring);

  auto e3 = elaborate(parse_file(fixture("sd3.ggr")));
  REQUIRE(e3.anneid.has_value());
  // same elements under the same names; ids may be ordered differently
  auto sd3 = corpus::sd3();
  anneid::AnneidIsomorphism by_name;
  for (ElemId x = 0; x < sd3.size(); ++x) by_name.a_map.push_back(*e3.anneid->A().find(sd3.A().name(x)));
  for (ElemId x = 0; x < sd3.G().size(); ++x) by_name.g_map.push_back(*e3.anneid->G().find(sd3.G().name(x)));
  CHECK(anneid::is_isomorphism(sd3, *e3.anneid, by_name));
  CHECK(e3.report.passed());
}

TEST_CASE("builder output serializes and reparses identically") {
  auto mx = corpus::matrix_m2f2();
  auto s = spec_from_graded(mx.ring, "matrix", &mx.r_names, &mx.gamma_names);
  auto text = serialize(s);
  CHECK(parse(text) == s);
  CHECK(serialize(parse(text)) == text);
  auto full = spec_from_graded(mx.ring, "matrix", &mx.r_names, &mx.gamma_names, false);
  CHECK(elaborate(full).graded->ring == mx.ring.ring);
  for (const auto& e : corpus::generate_corpus({1, 8, 4, 20, false})) {
    auto spec = spec_from_anneid(e.anneid, e.name);
    auto back = elaborate(parse(serialize(spec)));
    REQUIRE(back.anneid.has_value());
    CHECK_MESSAGE(anneid::find_isomorphism(e.anneid, *back.anneid).has_value(), e.name);
  }
}

TEST_CASE("broken distributivity elaborates with a failing report") {
  auto e = elaborate(parse_file(fixture("broken_distributivity.ggr")));
  REQUIRE(e.graded.has_value());
  CHECK_FALSE(e.report.passed());
  bool witness = false;
  for (const auto& c : e.report.conditions())
    if (c.status == CheckStatus::Failed && !c.witness.empty()) witness = true;
  CHECK(witness);
}

TEST_CASE("malformed files are rejected at the recorded position") {
  auto paths = files("malformed");
  REQUIRE(paths.size() >= 15);
  const std::regex expect("# expect (\\d+):(\\d+)");
  for (const auto& p : paths) {
    std::ifstream in(p);
    std::string first;
    std::getline(in, first);
    std::smatch m;
    REQUIRE_MESSAGE(std::regex_search(first, m, expect), p);
    try {
      parse_file(p.string());
      FAIL("accepted " << p);
    } catch (const ParseError& e) {
      CHECK_MESSAGE(e.line() == std::stoi(m[1]), p << ": " << e.what());
      CHECK_MESSAGE(e.column() == std::stoi(m[2]), p << ": " << e.what());
    }
  }
}
