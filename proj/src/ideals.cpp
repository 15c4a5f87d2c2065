#include "ggr/ideals.hpp"

#include <algorithm>
#include <unordered_set>

#include "closure.hpp"
#include "ggr/errors.hpp"

namespace ggr::ideals {

namespace {

constexpr ElemId U = grading::Homogroupoid::kUndefined;

// {s + t : s in S, t in T, s # t}
ElementSet addible_sums(const GammaAnneid& a, const ElementSet& s, const ElementSet& t) {
  ElementSet out(a.size());
  s.for_each([&](ElemId x) {
    t.for_each([&](ElemId y) {
      if (a.A().addible(x, y)) out.insert(a.A().sum(x, y));
    });
  });
  return out;
}

ElementSet right_products(const GammaAnneid& a, ElemId x) {
  ElementSet out(a.size());
  for (ElemId al = 0; al < a.G().size(); ++al)
    for (ElemId y = 0; y < a.size(); ++y) out.insert(a.product(x, al, y));
  return out;
}

ElementSet left_products(const GammaAnneid& a, ElemId x) {
  ElementSet out(a.size());
  for (ElemId al = 0; al < a.G().size(); ++al)
    for (ElemId y = 0; y < a.size(); ++y) out.insert(a.product(y, al, x));
  return out;
}

void sort_canonical(std::vector<ElementSet>& v) {
  std::sort(v.begin(), v.end(), [](const ElementSet& l, const ElementSet& r) {
    if (l.size() != r.size()) return l.size() < r.size();
    return l < r;
  });
}

}  // namespace

bool is_ideal(const GammaAnneid& a, const ElementSet& s, Side side) {
  if (!s.contains(0)) return false;
  const auto& A = a.A();
  bool ok = true;
  s.for_each([&](ElemId x) {
    if (!ok) return;
    s.for_each([&](ElemId y) {
      if (ok && A.addible(x, y) && !s.contains(A.difference(x, y))) ok = false;
    });
    for (ElemId al = 0; al < a.G().size() && ok; ++al)
      for (ElemId y = 0; y < a.size() && ok; ++y) {
        if (side != Side::Left && !s.contains(a.product(x, al, y))) ok = false;
        if (side != Side::Right && !s.contains(a.product(y, al, x))) ok = false;
      }
  });
  return ok;
}

ElementSet generated_ideal(const GammaAnneid& a, const ElementSet& seeds, Side side) {
  const ElemId n = static_cast<ElemId>(a.size()), m = static_cast<ElemId>(a.G().size());
  return detail::close_subset(a.A(), seeds, [&](ElemId x, auto& push) {
    for (ElemId al = 1; al < m; ++al)
      for (ElemId y = 1; y < n; ++y) {
        if (side != Side::Left) push(a.product(x, al, y));
        if (side != Side::Right) push(a.product(y, al, x));
      }
  });
}

ElementSet cyclic_multiples(const GammaAnneid& a, ElemId x) {
  ElementSet out(a.size());
  out.insert(0);
  for (ElemId s = x; !out.contains(s); s = a.A().sum(s, x)) out.insert(s);
  return out;
}

ElementSet principal_formula(const GammaAnneid& a, ElemId x, Side side) {
  ElementSet out = cyclic_multiples(a, x);
  if (side == Side::Right) return addible_sums(a, out, right_products(a, x));
  if (side == Side::Left) return addible_sums(a, out, left_products(a, x));
  ElementSet right = right_products(a, x), left = left_products(a, x);
  ElementSet both(a.size());
  left.for_each([&](ElemId y) { both |= right_products(a, y); });
  out = addible_sums(a, out, right);
  out = addible_sums(a, out, left);
  return addible_sums(a, out, both);
}

ElementSet principal_ideal(const GammaAnneid& a, ElemId x, Side side) {
  return generated_ideal(a, ElementSet(a.size(), {x}), side);
}

ElementSet ideal_sum(const GammaAnneid& a, const ElementSet& i, const ElementSet& j) { return addible_sums(a, i, j); }

ElementSet ideal_intersection(const ElementSet& i, const ElementSet& j) { return i & j; }

std::vector<ElementSet> enumerate_ideals(const GammaAnneid& a, Side side, const EnumerationBounds& bounds) {
  const std::size_t n = a.size();
  if (n > bounds.max_carrier)
    throw ResourceError("ideal enumeration: |A| = " + std::to_string(n) + " exceeds bound " +
                        std::to_string(bounds.max_carrier));
  std::vector<ElementSet> principal;
  for (ElemId x = 0; x < n; ++x) principal.push_back(principal_ideal(a, x, side));
  // Every ideal is the join of the principal ideals of its members, so
  // joining with principal ideals from {0} reaches the whole lattice.
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<ElementSet> out, work;
  ElementSet zero(n, {0});
  seen.insert(zero);
  work.push_back(zero);
  while (!work.empty()) {
    ElementSet cur = std::move(work.back());
    work.pop_back();
    for (ElemId x = 1; x < n; ++x) {
      if (cur.contains(x) || principal[x].is_subset_of(cur)) continue;
      ElementSet next = generated_ideal(a, cur | principal[x], side);
      if (seen.insert(next).second) {
        if (seen.size() > bounds.max_ideals)
          throw ResourceError("ideal enumeration: more than " + std::to_string(bounds.max_ideals) + " ideals");
        work.push_back(next);
      }
    }
    out.push_back(std::move(cur));
  }
  sort_canonical(out);
  return out;
}

Factor factor_anneid(const GammaAnneid& a, const ElementSet& i) {
  if (!is_ideal(a, i, Side::TwoSided)) throw PreconditionError("factor_anneid: not a two-sided ideal");
  auto q = grading::quotient(a.A(), i);
  const std::size_t n = q.carrier.size(), m = a.G().size();
  std::vector<ElemId> t(n * m * n);
  for (ElemId x = 0; x < n; ++x)
    for (ElemId al = 0; al < m; ++al)
      for (ElemId y = 0; y < n; ++y)
        t[(x * m + al) * n + y] = q.projection[a.product(q.representative[x], al, q.representative[y])];
  for (ElemId x = 0; x < a.size(); ++x)
    for (ElemId al = 0; al < m; ++al)
      for (ElemId y = 0; y < a.size(); ++y)
        if (t[(q.projection[x] * m + al) * n + q.projection[y]] != q.projection[a.product(x, al, y)])
          throw InvariantViolation("factor_anneid: product not well defined at (" + a.A().name(x) + ", " +
                                   a.G().name(al) + ", " + a.A().name(y) + ")");
  return {GammaAnneid(std::move(q.carrier), a.G(), std::move(t)), std::move(q.projection),
          std::move(q.representative)};
}

bool is_witness(const GammaAnneid& a, const ElementSet& i, ModularityWitness w) {
  return witness_requirements(a, w).is_subset_of(i);
}

ElementSet witness_requirements(const GammaAnneid& a, ModularityWitness w) {
  ElementSet out(a.size());
  for (ElemId x = 0; x < a.size(); ++x) {
    ElemId ux = a.product(w.u, w.alpha, x);
    if (a.A().addible(x, ux)) {
      out.insert(a.A().difference(x, ux));
    } else {
      out.insert(x);
      out.insert(ux);
    }
  }
  return out;
}

std::vector<ModularityWitness> modularity_witnesses(const GammaAnneid& a, const ElementSet& i) {
  std::vector<ModularityWitness> out;
  for (ElemId u = 0; u < a.size(); ++u)
    for (ElemId al = 0; al < a.G().size(); ++al)
      if (is_witness(a, i, {u, al})) out.push_back({u, al});
  return out;
}

std::optional<ModularityWitness> find_modularity(const GammaAnneid& a, const ElementSet& i) {
  for (ElemId u = 0; u < a.size(); ++u)
    for (ElemId al = 0; al < a.G().size(); ++al)
      if (is_witness(a, i, {u, al})) return ModularityWitness{u, al};
  return std::nullopt;
}

std::vector<ModularIdeal> maximal_right_modular_ideals(const GammaAnneid& a, const std::vector<ElementSet>& lattice) {
  std::vector<ModularIdeal> out;
  std::vector<const ElementSet*> proper;
  for (const auto& i : lattice)
    if (i.size() < a.size()) proper.push_back(&i);
  for (const ElementSet* i : proper) {
    bool maximal = true;
    for (const ElementSet* j : proper)
      if (j->size() > i->size() && i->is_subset_of(*j)) {
        maximal = false;
        break;
      }
    if (!maximal) continue;
    if (auto w = find_modularity(a, *i)) out.push_back({*i, *w});
  }
  return out;
}

std::vector<ModularIdeal> maximal_right_modular_ideals(const GammaAnneid& a, const EnumerationBounds& bounds) {
  return maximal_right_modular_ideals(a, enumerate_right_ideals(a, bounds));
}

GradeId grade_of_modular_ideal(const GammaAnneid& a, const ElementSet& i) {
  if (i.size() == a.size()) throw PreconditionError("grade_of_modular_ideal: ideal is not proper");
  auto ws = modularity_witnesses(a, i);
  if (ws.empty()) throw PreconditionError("grade_of_modular_ideal: ideal is not modular");
  GradeId g = a.grade(ws.front().u);
  for (const auto& w : ws)
    if (a.grade(w.u) != g)
      throw PreconditionError("grade_of_modular_ideal: left identities " + a.A().name(ws.front().u) + " and " +
                              a.A().name(w.u) + " have different grades");
  return g;
}

ElementSet colon_anneid(const GammaAnneid& a, const ElementSet& i) {
  ElementSet out(a.size());
  for (ElemId b = 0; b < a.size(); ++b) {
    bool in = true;
    for (ElemId x = 0; x < a.size() && in; ++x)
      for (ElemId al = 0; al < a.G().size() && in; ++al)
        if (!i.contains(a.product(x, al, b))) in = false;
    if (in) out.insert(b);
  }
  return out;
}

}  // namespace ggr::ideals
