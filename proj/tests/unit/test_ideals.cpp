#include <doctest.h>

#include <algorithm>

#include "ggr/corpus.hpp"
#include "ggr/errors.hpp"
#include "ggr/ideals.hpp"
#include "oracles.hpp"

using namespace ggr;
using namespace ggr::ideals;

namespace {

const std::vector<corpus::Entry>& small() {
  static const auto c = [] {
    std::vector<corpus::Entry> out;
    for (auto& e : corpus::generate_corpus())
      if (e.anneid.size() <= 12) out.push_back(std::move(e));
    return out;
  }();
  return c;
}

oracle::Side to_oracle(Side s) {
  return s == Side::Right ? oracle::Side::Right : s == Side::Left ? oracle::Side::Left : oracle::Side::TwoSided;
}

std::vector<ElementSet> sorted(std::vector<ElementSet> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("ideal lattices match the subset filter") {
  REQUIRE(small().size() > 100);
  for (const auto& e : small())
    for (Side side : {Side::Right, Side::Left, Side::TwoSided}) {
      auto lib = enumerate_ideals(e.anneid, side);
      auto ref = oracle::ideals(e.anneid, to_oracle(side));
      CHECK_MESSAGE(sorted(lib) == sorted(ref), e.name);
      for (std::size_t k = 1; k < lib.size(); ++k) CHECK(lib[k - 1].size() <= lib[k].size());
    }
}

TEST_CASE("membership test matches the definition") {
  for (std::size_t k = 0; k < small().size(); k += 7) {
    const auto& a = small()[k].anneid;
    const std::size_t n = a.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
      ElementSet s(n, {0});
      for (std::size_t b = 0; b + 1 < n; ++b)
        if (mask >> b & 1) s.insert(static_cast<ElemId>(b + 1));
      CHECK(is_right_ideal(a, s) == oracle::is_ideal(a, s, oracle::Side::Right));
    }
  }
}

TEST_CASE("generated and principal ideals are the smallest containing ideals") {
  int formula_closed = 0;
  for (std::size_t k = 0; k < small().size(); k += 3) {
    const auto& a = small()[k].anneid;
    for (ElemId x = 0; x < a.size(); ++x)
      for (Side side : {Side::Right, Side::Left, Side::TwoSided}) {
        ElementSet seed(a.size(), {x});
        auto ref = oracle::smallest_ideal(a, seed, to_oracle(side));
        CHECK(principal_ideal(a, x, side) == ref);
        CHECK(generated_ideal(a, seed, side) == ref);
        auto f = principal_formula(a, x, side);
        CHECK(f.is_subset_of(ref));
        if (is_ideal(a, f, side)) {
          CHECK(f == ref);
          ++formula_closed;
        }
      }
  }
  CHECK(formula_closed > 0);
}

TEST_CASE("sum and intersection of right ideals") {
  for (std::size_t k = 0; k < small().size(); k += 11) {
    const auto& a = small()[k].anneid;
    auto lattice = enumerate_right_ideals(a);
    for (const auto& i : lattice)
      for (const auto& j : lattice) {
        auto meet = ideal_intersection(i, j);
        CHECK(is_right_ideal(a, meet));
        auto s = ideal_sum(a, i, j);
        auto joined = oracle::smallest_ideal(a, i | j, oracle::Side::Right);
        CHECK((i | j).is_subset_of(s));
        CHECK(s.is_subset_of(joined));
        if (is_right_ideal(a, s)) CHECK(s == joined);
      }
  }
}

TEST_CASE("modularity matches the congruence definition") {
  for (std::size_t k = 0; k < small().size(); k += 2) {
    const auto& a = small()[k].anneid;
    for (const auto& i : enumerate_right_ideals(a)) {
      CHECK(find_modularity(a, i).has_value() == oracle::is_modular(a, i));
      for (const auto& w : modularity_witnesses(a, i)) CHECK(oracle::is_left_identity_mod(a, w.u, w.alpha, i));
      for (ElemId u = 0; u < a.size(); ++u)
        for (ElemId al = 0; al < a.G().size(); ++al)
          CHECK(witness_requirements(a, {u, al}).is_subset_of(i) == oracle::is_left_identity_mod(a, u, al, i));
    }
    std::vector<ElementSet> lib;
    for (const auto& m : maximal_right_modular_ideals(a)) lib.push_back(m.ideal);
    CHECK(sorted(lib) == sorted(oracle::maximal_modular_right_ideals(a)));
  }
}

TEST_CASE("grade of a modular ideal in a regular anneid") {
  int seen = 0;
  for (const auto& e : small()) {
    if (!anneid::is_regular(e.anneid, anneid::Side::Both)) continue;
    for (const auto& m : maximal_right_modular_ideals(e.anneid)) {
      GradeId g = grade_of_modular_ideal(e.anneid, m.ideal);
      for (const auto& w : modularity_witnesses(e.anneid, m.ideal)) CHECK(e.anneid.grade(w.u) == g);
      ++seen;
    }
  }
  CHECK(seen > 0);
  auto a = corpus::sd3();
  CHECK_THROWS_AS(grade_of_modular_ideal(a, ElementSet::full(a.size())), PreconditionError);
}

TEST_CASE("factor anneids and colon ideals") {
  auto a = corpus::sd3();
  auto i = *a.A().find("i");
  ElementSet ideal(a.size(), {0, i});
  REQUIRE(is_ideal(a, ideal, Side::TwoSided));
  auto f = factor_anneid(a, ideal);
  CHECK(f.anneid.size() == 2);
  CHECK(anneid::verify_anneid(f.anneid).passed());
  CHECK(f.projection[i] == 0);
  for (const auto& e : small()) {
    for (const auto& j : enumerate_ideals(e.anneid, Side::TwoSided)) {
      auto q = factor_anneid(e.anneid, j);
      CHECK(anneid::verify_anneid(q.anneid).passed());
      for (ElemId x = 0; x < e.anneid.size(); ++x)
        for (ElemId al = 0; al < e.anneid.G().size(); ++al)
          for (ElemId y = 0; y < e.anneid.size(); ++y)
            CHECK(q.projection[e.anneid.product(x, al, y)] ==
                  q.anneid.product(q.projection[x], al, q.projection[y]));
    }
    for (const auto& m : maximal_right_modular_ideals(e.anneid)) {
      auto c = colon_anneid(e.anneid, m.ideal);
      CHECK(is_ideal(e.anneid, c, Side::TwoSided));
      CHECK(c.is_subset_of(m.ideal));
    }
    if (&e - small().data() > 60) break;
  }
  auto s = *a.A().find("s");
  CHECK_THROWS_AS(factor_anneid(a, ElementSet(a.size(), {0, s})), PreconditionError);
}

TEST_CASE("lattice bounds") {
  auto m = corpus::matrix_one_grade();
  CHECK_THROWS_AS(enumerate_right_ideals(m, {8, 8192}), ResourceError);
  CHECK_THROWS_AS(enumerate_right_ideals(m, {24, 2}), ResourceError);
}
