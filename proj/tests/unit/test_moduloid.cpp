#include <doctest.h>

#include <algorithm>

#include "ggr/corpus.hpp"
#include "ggr/errors.hpp"
#include "ggr/ideals.hpp"
#include "ggr/moduloid.hpp"
#include "oracles.hpp"

using namespace ggr;
using namespace ggr::moduloid;

namespace {

const std::vector<corpus::Entry>& small() {
  static const auto c = [] {
    std::vector<corpus::Entry> out;
    for (auto& e : corpus::generate_corpus())
      if (e.anneid.size() <= 8) out.push_back(std::move(e));
    return out;
  }();
  return c;
}

// The moduloids under test: A itself and A/I for each proper right ideal.
std::vector<Moduloid> moduloids_of(const anneid::GammaAnneid& a) {
  std::vector<Moduloid> out{Moduloid::of_anneid(a)};
  for (const auto& i : ideals::enumerate_right_ideals(a))
    if (i.size() > 1 && i.size() < a.size()) out.push_back(factor_by_right_ideal(a, i).moduloid);
  return out;
}

bool brute_irreducible(const Moduloid& m) {
  bool mga = false;
  for (ElemId w = 0; w < m.size(); ++w)
    for (ElemId al = 0; al < m.over().G().size(); ++al)
      for (ElemId x = 0; x < m.over().size(); ++x) mga = mga || m.act(w, al, x) != 0;
  return mga && oracle::submoduloids(m).size() == 2;
}

}  // namespace

TEST_CASE("moduloids built from the corpus are valid") {
  int count = 0;
  for (std::size_t k = 0; k < small().size(); k += 4)
    for (const auto& m : moduloids_of(small()[k].anneid)) {
      CHECK_MESSAGE(verify_moduloid(m).passed(), small()[k].name);
      ++count;
    }
  CHECK(count > 100);
}

TEST_CASE("submoduloid lattice and irreducibility match the definitions") {
  int irreducible = 0;
  for (std::size_t k = 0; k < small().size(); k += 4)
    for (const auto& m : moduloids_of(small()[k].anneid)) {
      auto lib = enumerate_submoduloids(m);
      auto ref = oracle::submoduloids(m);
      std::sort(lib.begin(), lib.end());
      std::sort(ref.begin(), ref.end());
      CHECK(lib == ref);
      for (ElemId x = 0; x < m.size(); ++x) {
        ElementSet seed(m.size(), {x});
        ElementSet smallest = ElementSet::full(m.size());
        for (const auto& s : ref)
          if (s.contains(x)) smallest &= s;
        CHECK(generated_submoduloid(m, seed) == smallest);
      }
      bool irr = is_irreducible(m);
      CHECK(irr == brute_irreducible(m));
      irreducible += irr;
    }
  CHECK(irreducible > 0);
}

TEST_CASE("strict generators and annihilators") {
  for (std::size_t k = 0; k < small().size(); k += 5)
    for (const auto& m : moduloids_of(small()[k].anneid)) {
      const auto& a = m.over();
      for (ElemId x = 0; x < m.size(); ++x)
        for (ElemId al = 0; al < a.G().size(); ++al) {
          ElementSet xa(m.size()), ann(a.size());
          for (ElemId y = 0; y < a.size(); ++y) {
            xa.insert(m.act(x, al, y));
            if (m.act(x, al, y) == 0) ann.insert(y);
          }
          CHECK(x_alpha_a(m, x, al) == xa);
          CHECK(annihilator_at(m, x, al) == ann);
          CHECK(alpha_strict_generators(m, al).contains(x) == (xa.size() == m.size()));
        }
      ElementSet ann(a.size());
      for (ElemId y = 0; y < a.size(); ++y) {
        bool zero = true;
        for (ElemId w = 0; w < m.size(); ++w)
          for (ElemId al = 0; al < a.G().size(); ++al) zero = zero && m.act(w, al, y) == 0;
        if (zero) ann.insert(y);
      }
      CHECK(annihilator(m) == ann);
      CHECK(ideals::is_ideal(a, ann, ideals::Side::TwoSided));
    }
}

TEST_CASE("cyclic submoduloids of regular moduloids are factors of A") {
  int checked = 0;
  for (std::size_t k = 0; k < small().size(); k += 3)
    for (const auto& m : moduloids_of(small()[k].anneid)) {
      if (!is_regular_moduloid(m)) continue;
      for (ElemId x = 1; x < m.size(); ++x)
        for (ElemId al = 1; al < m.over().G().size(); ++al) {
          CHECK(check_cyclic_isomorphism(m, x, al));
          ++checked;
        }
    }
  CHECK(checked > 100);
}

TEST_CASE("strict generators give modular annihilators and back") {
  int forward = 0, backward = 0;
  for (const auto& e : small()) {
    const auto& a = e.anneid;
    for (const auto& m : moduloids_of(a)) {
      if (!is_regular_moduloid(m)) continue;
      for (ElemId al = 1; al < a.G().size(); ++al)
        alpha_strict_generators(m, al).for_each([&](ElemId x) {
          CHECK(oracle::is_modular(a, annihilator_at(m, x, al)));
          ++forward;
        });
    }
    for (const auto& i : ideals::enumerate_right_ideals(a)) {
      if (i.size() == a.size()) continue;
      for (const auto& w : ideals::modularity_witnesses(a, i)) {
        auto f = factor_by_right_ideal(a, i);
        ElemId gen = f.projection[w.u];
        CHECK(alpha_strict_generators(f.moduloid, w.alpha).contains(gen));
        ElementSet ann(a.size());
        for (ElemId y = 0; y < a.size(); ++y)
          if (f.moduloid.act(gen, w.alpha, y) == 0) ann.insert(y);
        CHECK(ann == i);
        ++backward;
      }
    }
  }
  CHECK(forward > 0);
  CHECK(backward > 0);
}

TEST_CASE("quotient ideals and factor moduloids") {
  auto a = corpus::sd3();
  auto m = Moduloid::of_anneid(a);
  auto i = *a.A().find("i");
  ElementSet n(a.size(), {0, i});
  CHECK(is_submoduloid(m, n));
  auto q = quotient_ideal(m, n, ElementSet::full(m.size()));
  CHECK(ideals::is_right_ideal(a, q));
  auto f = factor_moduloid(m, n);
  CHECK(f.moduloid.size() == 2);
  CHECK(verify_moduloid(f.moduloid).passed());
  auto s = *a.A().find("s");
  CHECK_THROWS_AS(factor_moduloid(m, ElementSet(a.size(), {0, s})), PreconditionError);
}
