#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "ggr/errors.hpp"
#include "ggr/grading.hpp"
#include "oracles.hpp"

using namespace ggr;
using finabel::FiniteAbelianGroup;
using grading::Graduation;
using grading::Homogroupoid;

namespace {

// Every element is a unique sum of one element from each part.
bool direct_sum(const FiniteAbelianGroup& g, const std::vector<ElementSet>& parts) {
  std::vector<int> hits(g.size(), 0);
  std::function<void(std::size_t, ElemId)> go = [&](std::size_t k, ElemId acc) {
    if (k == parts.size()) {
      ++hits[acc];
      return;
    }
    parts[k].for_each([&](ElemId x) { go(k + 1, g.add(acc, x)); });
  };
  go(0, 0);
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

// All decompositions into nontrivial subgroups, as sorted component lists.
std::set<std::vector<ElementSet>> decompositions(const FiniteAbelianGroup& g) {
  std::vector<ElementSet> nontrivial;
  for (const auto& s : oracle::subgroups(g))
    if (s.size() > 1) nontrivial.push_back(s);
  std::set<std::vector<ElementSet>> out;
  const std::size_t n = nontrivial.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<ElementSet> parts;
    std::size_t order = 1;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) {
        parts.push_back(nontrivial[i]);
        order *= nontrivial[i].size();
      }
    if (order == g.size() && direct_sum(g, parts)) {
      std::sort(parts.begin(), parts.end());
      out.insert(parts);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("graduation enumeration matches brute-force decompositions") {
  for (auto orders : std::vector<std::vector<int>>{{2}, {4}, {6}, {2, 2}, {2, 4}, {2, 2, 2}, {3, 3}}) {
    FiniteAbelianGroup g(orders);
    std::set<std::vector<ElementSet>> lib;
    for (const auto& grad : grading::enumerate_graduations(g)) {
      auto c = grad.strict_components();
      std::sort(c.begin(), c.end());
      lib.insert(c);
    }
    CHECK_MESSAGE(lib == decompositions(g), g.describe());
  }
  CHECK(grading::enumerate_graduations(FiniteAbelianGroup({2, 2})).size() == 4);
}

TEST_CASE("homogeneous part axioms hold exactly on unions of graduations") {
  for (auto orders : std::vector<std::vector<int>>{{2, 2}, {4}, {2, 4}, {6}}) {
    FiniteAbelianGroup g(orders);
    std::set<ElementSet> parts;
    for (const auto& d : decompositions(g)) {
      ElementSet h(g.size(), {0});
      for (const auto& c : d) h |= c;
      parts.insert(h);
    }
    const std::size_t n = g.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
      ElementSet h(n, {0});
      for (std::size_t b = 0; b + 1 < n; ++b)
        if (mask >> b & 1) h.insert(static_cast<ElemId>(b + 1));
      bool lib = grading::verify_homogeneous_part_axioms(g, h).passed();
      CHECK_MESSAGE(lib == (parts.count(h) > 0), g.describe() << " mask " << mask);
      if (lib) {
        auto grad = grading::graduation_from_homogeneous_part(g, h);
        CHECK(grading::homogeneous_part(grad).carrier == h);
      }
    }
  }
}

TEST_CASE("graduation canonical order and decomposition") {
  FiniteAbelianGroup g({2, 2});
  Graduation grad(g, {ElementSet(4, {0, 2}), ElementSet(4, {0, 1})});
  CHECK(grad.grade_count() == 2);
  CHECK(grad.component(1) == ElementSet(4, {0, 1}));
  CHECK(grad.grade_of(3) == std::nullopt);
  CHECK(grad.grade_of(0) == grading::kZeroGrade);
  CHECK(grad.decompose(3) == std::vector<ElemId>{0, 1, 2});
  CHECK_THROWS_AS(Graduation(g, {ElementSet(4, {0, 1}), ElementSet(4, {0, 3}), ElementSet(4, {0, 2})}),
                  StructuralError);
  CHECK(grading::weakly_equivalent(grad, Graduation(g, {ElementSet(4, {0, 1}), ElementSet(4, {0, 2})})));
}

TEST_CASE("homogroupoid round trip through linearization") {
  for (auto orders : std::vector<std::vector<int>>{{2, 2}, {2, 4}, {2, 2, 2}, {3, 3}, {2, 3}}) {
    FiniteAbelianGroup g(orders);
    for (const auto& grad : grading::enumerate_graduations(g)) {
      auto h = Homogroupoid::from_graduation(grad);
      CHECK(grading::verify_homogroupoid(h).passed());
      CHECK(grading::roundtrip_check(h));
      auto lin = grading::linearize(h);
      CHECK(lin.group.size() == g.size());
      for (ElemId x = 0; x < h.size(); ++x)
        for (ElemId y = 0; y < h.size(); ++y)
          if (h.addible(x, y)) CHECK(lin.group.add(lin.embed[x], lin.embed[y]) == lin.embed[h.sum(x, y)]);
    }
  }
}

TEST_CASE("addibility classes and failing axioms") {
  FiniteAbelianGroup g({2, 2});
  Graduation grad(g, {ElementSet(4, {0, 1}), ElementSet(4, {0, 2})});
  auto h = Homogroupoid::from_graduation(grad);
  CHECK(h.size() == 3);
  CHECK(h.grade_count() == 2);
  CHECK_FALSE(h.addible(1, 2));
  CHECK(h.addible(1, 1));
  CHECK(h.sum(1, 1) == 0);
  CHECK(h.neg(1) == 1);

  // x + x defined but x # y, y # z and x, z not addible breaks transitivity
  std::vector<char> add(16, 0);
  std::vector<ElemId> sum(16, Homogroupoid::kUndefined);
  auto set = [&](ElemId x, ElemId y, ElemId s) {
    add[x * 4 + y] = add[y * 4 + x] = 1;
    sum[x * 4 + y] = sum[y * 4 + x] = s;
  };
  for (ElemId x = 0; x < 4; ++x) set(0, x, x);
  set(1, 1, 0);
  set(2, 2, 0);
  set(3, 3, 0);
  set(1, 2, 3);
  Homogroupoid bad({"0", "a", "b", "c"}, add, sum);
  CHECK_FALSE(grading::verify_homogroupoid(bad).passed());
  CHECK_THROWS_AS(grading::linearize(bad), StructuralError);
}

TEST_CASE("quotient by a sub-homogroupoid") {
  FiniteAbelianGroup g({4});
  auto h = Homogroupoid::from_graduation(Graduation(g));
  auto two = *h.find("(2)");
  auto q = grading::quotient(h, ElementSet(h.size(), {0, two}));
  CHECK(q.carrier.size() == 2);
  CHECK(q.projection[two] == 0);
  CHECK(grading::verify_homogroupoid(q.carrier).passed());
}
