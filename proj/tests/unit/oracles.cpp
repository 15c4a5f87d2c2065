#include "oracles.hpp"

namespace oracle {

namespace {

template <typename F>
void for_each_subset_with_zero(std::size_t n, F&& f) {
  const std::size_t free = n - 1;
  for (std::size_t mask = 0; mask < (std::size_t{1} << free); ++mask) {
    ElementSet s(n);
    s.insert(0);
    for (std::size_t b = 0; b < free; ++b)
      if (mask >> b & 1) s.insert(static_cast<ElemId>(b + 1));
    f(s);
  }
}

bool closed_under_differences(const ggr::grading::Homogroupoid& h, const ElementSet& s) {
  bool ok = true;
  s.for_each([&](ElemId x) {
    s.for_each([&](ElemId y) {
      if (!ok || !h.addible(x, y)) return;
      for (ElemId z = 0; z < h.size(); ++z)
        if (h.addible(y, z) && h.sum(y, z) == x && !s.contains(z)) ok = false;
    });
  });
  return ok;
}

}  // namespace

std::vector<ElementSet> subgroups(const ggr::finabel::FiniteAbelianGroup& g) {
  std::vector<ElementSet> out;
  for_each_subset_with_zero(g.size(), [&](const ElementSet& s) {
    bool ok = true;
    s.for_each([&](ElemId x) {
      s.for_each([&](ElemId y) { ok = ok && s.contains(g.add(x, g.neg(y))); });
    });
    if (ok) out.push_back(s);
  });
  return out;
}

bool is_ideal(const GammaAnneid& a, const ElementSet& s, Side side) {
  if (s.empty() || !closed_under_differences(a.A(), s)) return false;
  for (ElemId x = 0; x < a.size(); ++x) {
    if (!s.contains(x)) continue;
    for (ElemId al = 0; al < a.G().size(); ++al)
      for (ElemId y = 0; y < a.size(); ++y) {
        if (side != Side::Left && !s.contains(a.product(x, al, y))) return false;
        if (side != Side::Right && !s.contains(a.product(y, al, x))) return false;
      }
  }
  return true;
}

std::vector<ElementSet> ideals(const GammaAnneid& a, Side side) {
  std::vector<ElementSet> out;
  for_each_subset_with_zero(a.size(), [&](const ElementSet& s) {
    if (oracle::is_ideal(a, s, side)) out.push_back(s);
  });
  return out;
}

ElementSet smallest_ideal(const GammaAnneid& a, const ElementSet& seeds, Side side) {
  ElementSet out = ElementSet::full(a.size());
  for (const auto& i : ideals(a, side))
    if (seeds.is_subset_of(i)) out &= i;
  return out;
}

bool is_submoduloid(const ggr::moduloid::Moduloid& m, const ElementSet& s) {
  if (s.empty() || !closed_under_differences(m.M(), s)) return false;
  bool ok = true;
  s.for_each([&](ElemId w) {
    for (ElemId al = 0; al < m.over().G().size(); ++al)
      for (ElemId x = 0; x < m.over().size(); ++x) ok = ok && s.contains(m.act(w, al, x));
  });
  return ok;
}

std::vector<ElementSet> submoduloids(const ggr::moduloid::Moduloid& m) {
  std::vector<ElementSet> out;
  for_each_subset_with_zero(m.size(), [&](const ElementSet& s) {
    if (oracle::is_submoduloid(m, s)) out.push_back(s);
  });
  return out;
}

bool congruent(const GammaAnneid& a, ElemId x, ElemId y, const ElementSet& i) {
  if (i.contains(x) && i.contains(y)) return true;
  if (!a.A().addible(x, y)) return false;
  // x - y is the z with y + z = x
  for (ElemId z = 0; z < a.size(); ++z)
    if (a.A().addible(y, z) && a.A().sum(y, z) == x) return i.contains(z);
  return false;
}

bool is_left_identity_mod(const GammaAnneid& a, ElemId u, ElemId alpha, const ElementSet& i) {
  for (ElemId x = 0; x < a.size(); ++x)
    if (!congruent(a, x, a.product(u, alpha, x), i)) return false;
  return true;
}

bool is_modular(const GammaAnneid& a, const ElementSet& i) {
  for (ElemId u = 0; u < a.size(); ++u)
    for (ElemId al = 0; al < a.G().size(); ++al)
      if (is_left_identity_mod(a, u, al, i)) return true;
  return false;
}

std::vector<ElementSet> maximal_modular_right_ideals(const GammaAnneid& a) {
  auto all = ideals(a, Side::Right);
  std::vector<ElementSet> out;
  for (const auto& i : all) {
    if (i.size() == a.size()) continue;
    bool maximal = true;
    for (const auto& j : all)
      if (j.size() < a.size() && j.size() > i.size() && i.is_subset_of(j)) maximal = false;
    if (maximal && is_modular(a, i)) out.push_back(i);
  }
  return out;
}

ElementSet jacobson(const GammaAnneid& a) {
  ElementSet out = ElementSet::full(a.size());
  for (const auto& i : maximal_modular_right_ideals(a)) out &= i;
  return out;
}

bool is_alpha_rqr(const GammaAnneid& a, ElemId z, ElemId alpha) {
  for (const auto& i : ideals(a, Side::Right))
    if (i.size() < a.size() && is_left_identity_mod(a, z, alpha, i)) return false;
  return true;
}

ElementSet rqr(const GammaAnneid& a) {
  ElementSet out(a.size());
  for (ElemId z = 0; z < a.size(); ++z) {
    bool all = true;
    for (ElemId al = 1; al < a.G().size() && all; ++al) all = is_alpha_rqr(a, z, al);
    if (all) out.insert(z);
  }
  return out;
}

}  // namespace oracle
