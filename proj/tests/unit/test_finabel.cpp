#include <doctest.h>

#include <algorithm>

#include "ggr/errors.hpp"
#include "ggr/finabel.hpp"
#include "oracles.hpp"

using namespace ggr;
using finabel::FiniteAbelianGroup;

TEST_CASE("encode and decode are inverse") {
  FiniteAbelianGroup g({2, 3, 4});
  CHECK(g.size() == 24);
  for (ElemId x = 0; x < g.size(); ++x) CHECK(g.encode(g.decode(x)) == x);
  CHECK(g.encode(std::vector<int>{0, 0, 0}) == 0);
  CHECK(g.element_name(g.encode(std::vector<int>{1, 2, 3})) == "(1,2,3)");
  CHECK(g.describe() == "Z2 x Z3 x Z4");
  CHECK(FiniteAbelianGroup().describe() == "1");
  CHECK_THROWS_AS(g.encode(std::vector<int>{1, 2}), StructuralError);
}

TEST_CASE("group arithmetic") {
  FiniteAbelianGroup g({4, 6});
  for (ElemId x = 0; x < g.size(); ++x) {
    CHECK(g.add(x, g.neg(x)) == 0);
    CHECK(g.multiple(static_cast<long long>(g.order_of(x)), x) == 0);
    for (std::size_t k = 1; k < g.order_of(x); ++k) CHECK(g.multiple(static_cast<long long>(k), x) != 0);
    CHECK(g.multiple(-1, x) == g.neg(x));
  }
  CHECK(g.order_of(g.encode(std::vector<int>{1, 1})) == 12);
}

TEST_CASE("subgroup enumeration matches the subset filter") {
  for (auto orders : std::vector<std::vector<int>>{{}, {2}, {6}, {2, 2}, {2, 4}, {3, 3}, {2, 2, 2}, {12}, {2, 6}}) {
    FiniteAbelianGroup g(orders);
    auto lib = finabel::enumerate_subgroups(g);
    auto ref = oracle::subgroups(g);
    std::sort(lib.begin(), lib.end());
    std::sort(ref.begin(), ref.end());
    CHECK_MESSAGE(lib == ref, g.describe());
    for (const auto& s : ref) CHECK(finabel::is_subgroup(g, s));
  }
  CHECK(finabel::enumerate_subgroups(FiniteAbelianGroup({2, 2})).size() == 5);
  CHECK_THROWS_AS(finabel::enumerate_subgroups(FiniteAbelianGroup({2, 2, 2}), 4), ResourceError);
}

TEST_CASE("generated subgroup is the smallest containing subgroup") {
  FiniteAbelianGroup g({2, 4});
  auto all = oracle::subgroups(g);
  for (ElemId x = 0; x < g.size(); ++x)
    for (ElemId y = 0; y < g.size(); ++y) {
      ElementSet seeds(g.size(), {x, y});
      ElementSet expect = ElementSet::full(g.size());
      for (const auto& s : all)
        if (seeds.is_subset_of(s)) expect &= s;
      CHECK(finabel::subgroup_generate(g, seeds) == expect);
    }
}

TEST_CASE("internal direct sums") {
  FiniteAbelianGroup g({2, 2});
  ElementSet a(4, {0, 1}), b(4, {0, 2}), c(4, {0, 3});
  CHECK(finabel::is_internal_direct_sum(g, {a, b}));
  CHECK(finabel::is_internal_direct_sum(g, {b, c}));
  CHECK_FALSE(finabel::is_internal_direct_sum(g, {a, a}));
  CHECK_FALSE(finabel::is_internal_direct_sum(g, {a}));
}

TEST_CASE("cyclic decomposition of an abstract group") {
  // Z6 given by addition mod 6 decomposes as one factor of order 6 or Z3 x Z2
  auto d = finabel::cyclic_decomposition(6, [](ElemId x, ElemId y) { return (x + y) % 6; });
  int prod = 1;
  for (int o : d.orders) prod *= o;
  CHECK(prod == 6);
  FiniteAbelianGroup target(d.orders);
  for (ElemId x = 0; x < 6; ++x) {
    CHECK(d.from_group[d.to_group[x]] == x);
    for (ElemId y = 0; y < 6; ++y) CHECK(target.add(d.to_group[x], d.to_group[y]) == d.to_group[(x + y) % 6]);
  }
  CHECK_THROWS_AS(finabel::cyclic_decomposition(3, [](ElemId x, ElemId) { return x; }), StructuralError);
}
