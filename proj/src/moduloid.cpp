#include "ggr/moduloid.hpp"

#include <algorithm>
#include <unordered_set>

#include "closure.hpp"
#include "ggr/errors.hpp"

namespace ggr::moduloid {

namespace {
constexpr ElemId U = Homogroupoid::kUndefined;
}

Moduloid::Moduloid(Homogroupoid m, GammaAnneid over, std::vector<ElemId> action)
    : m_(std::move(m)), over_(std::move(over)), action_(std::move(action)) {
  const std::size_t n = m_.size(), g = over_.G().size(), a = over_.size();
  if (action_.size() != n * g * a) throw StructuralError("moduloid action table must be |M| x |G| x |A|");
  for (ElemId v : action_)
    if (v >= n) throw StructuralError("moduloid action value outside M");
  const int km = grade_count() + 1, kg = over_.gamma_grade_count() + 1, ka = over_.grade_count() + 1;
  grade_table_.assign(static_cast<std::size_t>(km * kg * ka), grading::kZeroGrade);
  std::vector<char> set(grade_table_.size(), 0);
  for (ElemId w = 1; w < n; ++w)
    for (ElemId al = 1; al < g; ++al)
      for (ElemId x = 1; x < a; ++x) {
        ElemId p = act(w, al, x);
        if (p == 0) continue;
        auto idx = static_cast<std::size_t>((grade(w) * kg + over_.gamma_grade(al)) * ka + over_.grade(x));
        if (!set[idx]) {
          set[idx] = 1;
          grade_table_[idx] = grade(p);
        } else if (grade_table_[idx] != grade(p)) {
          grade_table_[idx] = kInconsistentGrade;
        }
      }
}

Moduloid Moduloid::of_anneid(const GammaAnneid& a) { return Moduloid(a.A(), a, a.triple_table()); }

GradeId Moduloid::grade_table(GradeId xi, GradeId d, GradeId eta) const {
  const int kg = over_.gamma_grade_count() + 1, ka = over_.grade_count() + 1;
  return grade_table_[static_cast<std::size_t>((xi * kg + d) * ka + eta)];
}

CheckReport verify_moduloid(const Moduloid& m) {
  CheckReport rep("AG-moduloid");
  const auto& M = m.M();
  const auto& A = m.over().A();
  const auto& G = m.over().G();
  rep.merge(grading::verify_homogroupoid(M), "M");
  const ElemId nm = static_cast<ElemId>(M.size()), ng = static_cast<ElemId>(G.size()),
               na = static_cast<ElemId>(A.size());
  std::vector<std::string> w;
  for (ElemId x = 0; x < na && w.empty(); ++x)
    for (ElemId y = 0; y < na && w.empty(); ++y) {
      if (!A.addible(x, y)) continue;
      for (ElemId v = 0; v < nm && w.empty(); ++v)
        for (ElemId al = 0; al < ng && w.empty(); ++al) {
          ElemId p = m.act(v, al, x), q = m.act(v, al, y);
          if (!M.addible(p, q) || M.sum(p, q) != m.act(v, al, A.sum(x, y)))
            w = {M.name(v), G.name(al), A.name(x), A.name(y)};
        }
    }
  rep.record("i", w.empty(), w);
  w.clear();
  for (ElemId v = 0; v < nm && w.empty(); ++v)
    for (ElemId v2 = 0; v2 < nm && w.empty(); ++v2) {
      if (!M.addible(v, v2)) continue;
      for (ElemId al = 0; al < ng && w.empty(); ++al)
        for (ElemId x = 0; x < na && w.empty(); ++x) {
          ElemId p = m.act(v, al, x), q = m.act(v2, al, x);
          if (!M.addible(p, q) || M.sum(p, q) != m.act(M.sum(v, v2), al, x))
            w = {M.name(v), M.name(v2), G.name(al), A.name(x)};
        }
    }
  rep.record("ii", w.empty(), w);
  w.clear();
  for (ElemId v = 0; v < nm && w.empty(); ++v)
    for (ElemId be = 0; be < ng && w.empty(); ++be)
      for (ElemId x = 0; x < na && w.empty(); ++x)
        for (ElemId al = 0; al < ng && w.empty(); ++al)
          for (ElemId y = 0; y < na; ++y)
            if (m.act(v, be, m.over().product(x, al, y)) != m.act(m.act(v, be, x), al, y)) {
              w = {M.name(v), G.name(be), A.name(x), G.name(al), A.name(y)};
              break;
            }
  rep.record("iii", w.empty(), w);
  rep.pass("lemma.MGA_in_M", "the action is tabulated in M");
  w.clear();
  for (GradeId xi = 0; xi <= m.grade_count() && w.empty(); ++xi)
    for (GradeId d = 0; d <= m.over().gamma_grade_count() && w.empty(); ++d)
      for (GradeId eta = 0; eta <= m.over().grade_count() && w.empty(); ++eta)
        if (m.grade_table(xi, d, eta) == Moduloid::kInconsistentGrade)
          w = {"delta_" + std::to_string(xi), "d_" + std::to_string(d), "delta_" + std::to_string(eta)};
  rep.record("lemma.grade_coherence", w.empty(), w);
  return rep;
}

bool is_regular_moduloid(const Moduloid& m) {
  const auto& M = m.M();
  const auto& an = m.over();
  const ElemId ng = static_cast<ElemId>(an.G().size()), na = static_cast<ElemId>(an.size());
  for (ElemId x = 1; x < M.size(); ++x)
    for (ElemId al = 1; al < ng; ++al)
      for (ElemId a = 1; a < na; ++a) {
        ElemId p = m.act(x, al, a);
        if (p == 0) continue;
        for (ElemId be = 1; be < ng; ++be)
          for (ElemId b = 1; b < na; ++b) {
            ElemId q = m.act(x, be, b);
            if (q != 0 && M.addible(p, q) && (!an.G().addible(al, be) || !an.A().addible(a, b))) return false;
          }
      }
  return true;
}

bool is_submoduloid(const Moduloid& m, const ElementSet& n) {
  if (!n.contains(0)) return false;
  bool ok = true;
  n.for_each([&](ElemId x) {
    if (!ok) return;
    n.for_each([&](ElemId y) {
      if (ok && m.M().addible(x, y) && !n.contains(m.M().difference(x, y))) ok = false;
    });
    for (ElemId al = 0; al < m.over().G().size() && ok; ++al)
      for (ElemId a = 0; a < m.over().size() && ok; ++a)
        if (!n.contains(m.act(x, al, a))) ok = false;
  });
  return ok;
}

ElementSet generated_submoduloid(const Moduloid& m, const ElementSet& seeds) {
  const ElemId ng = static_cast<ElemId>(m.over().G().size()), na = static_cast<ElemId>(m.over().size());
  return detail::close_subset(m.M(), seeds, [&](ElemId x, auto& push) {
    for (ElemId al = 1; al < ng; ++al)
      for (ElemId a = 1; a < na; ++a) push(m.act(x, al, a));
  });
}

std::vector<ElementSet> enumerate_submoduloids(const Moduloid& m, std::size_t max_count) {
  const std::size_t n = m.size();
  std::vector<ElementSet> principal;
  for (ElemId x = 0; x < n; ++x) principal.push_back(generated_submoduloid(m, ElementSet(n, {x})));
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<ElementSet> out, work;
  ElementSet zero(n, {0});
  seen.insert(zero);
  work.push_back(zero);
  while (!work.empty()) {
    ElementSet cur = std::move(work.back());
    work.pop_back();
    for (ElemId x = 1; x < n; ++x) {
      if (cur.contains(x)) continue;
      ElementSet next = generated_submoduloid(m, cur | principal[x]);
      if (seen.insert(next).second) {
        if (seen.size() > max_count)
          throw ResourceError("submoduloid enumeration: more than " + std::to_string(max_count) + " submoduloids");
        work.push_back(next);
      }
    }
    out.push_back(std::move(cur));
  }
  std::sort(out.begin(), out.end(), [](const ElementSet& l, const ElementSet& r) {
    if (l.size() != r.size()) return l.size() < r.size();
    return l < r;
  });
  return out;
}

ElementSet x_alpha_a(const Moduloid& m, ElemId x, ElemId alpha) {
  ElementSet out(m.size());
  for (ElemId a = 0; a < m.over().size(); ++a) out.insert(m.act(x, alpha, a));
  return out;
}

ElementSet x_g_a(const Moduloid& m, ElemId x) {
  ElementSet out(m.size());
  for (ElemId al = 0; al < m.over().G().size(); ++al) out |= x_alpha_a(m, x, al);
  return out;
}

bool is_irreducible(const Moduloid& m) {
  const std::size_t n = m.size();
  if (n == 1) return false;
  bool mga_zero = true;
  for (ElemId x = 1; x < n && mga_zero; ++x)
    if (x_g_a(m, x).size() > 1) mga_zero = false;
  if (mga_zero) return false;
  const ElementSet full = ElementSet::full(n);
  bool by_lattice = true, by_generators = true;
  for (ElemId x = 1; x < n; ++x) {
    if (generated_submoduloid(m, ElementSet(n, {x})) != full) by_lattice = false;
    if (generated_submoduloid(m, x_g_a(m, x)) != full) by_generators = false;
  }
  if (by_lattice != by_generators)
    throw InvariantViolation("is_irreducible: submoduloid and strict-generator criteria disagree");
  return by_lattice;
}

ElementSet alpha_strict_generators(const Moduloid& m, ElemId alpha) {
  ElementSet out(m.size());
  for (ElemId x = 0; x < m.size(); ++x)
    if (x_alpha_a(m, x, alpha).size() == m.size()) out.insert(x);
  return out;
}

ElementSet strict_generators(const Moduloid& m) {
  if (m.over().G().size() == 1) return m.size() == 1 ? ElementSet(1, {0}) : ElementSet(m.size());
  ElementSet out = ElementSet::full(m.size());
  for (ElemId al = 1; al < m.over().G().size(); ++al) out &= alpha_strict_generators(m, al);
  return out;
}

bool is_alpha_strictly_cyclic(const Moduloid& m, ElemId alpha) { return !alpha_strict_generators(m, alpha).empty(); }
bool is_strictly_cyclic(const Moduloid& m) { return !strict_generators(m).empty(); }

ElementSet quotient_ideal(const Moduloid& m, const ElementSet& n, const ElementSet& s) {
  const auto& an = m.over();
  ElementSet out(an.size());
  for (ElemId a = 0; a < an.size(); ++a) {
    bool in = true;
    s.for_each([&](ElemId x) {
      for (ElemId al = 0; al < an.G().size() && in; ++al)
        if (!n.contains(m.act(x, al, a))) in = false;
    });
    if (in) out.insert(a);
  }
  return out;
}

ElementSet annihilator(const Moduloid& m) {
  return quotient_ideal(m, ElementSet(m.size(), {0}), ElementSet::full(m.size()));
}

ElementSet annihilator_at(const Moduloid& m, ElemId x, ElemId alpha) {
  ElementSet out(m.over().size());
  for (ElemId a = 0; a < m.over().size(); ++a)
    if (m.act(x, alpha, a) == 0) out.insert(a);
  return out;
}

FactorModuloid factor_moduloid(const Moduloid& m, const ElementSet& n) {
  if (!is_submoduloid(m, n)) throw PreconditionError("factor_moduloid: not a submoduloid");
  auto q = grading::quotient(m.M(), n);
  const std::size_t k = q.carrier.size(), ng = m.over().G().size(), na = m.over().size();
  std::vector<ElemId> t(k * ng * na);
  for (ElemId w = 0; w < k; ++w)
    for (ElemId al = 0; al < ng; ++al)
      for (ElemId a = 0; a < na; ++a) t[(w * ng + al) * na + a] = q.projection[m.act(q.representative[w], al, a)];
  for (ElemId w = 0; w < m.size(); ++w)
    for (ElemId al = 0; al < ng; ++al)
      for (ElemId a = 0; a < na; ++a)
        if (t[(q.projection[w] * ng + al) * na + a] != q.projection[m.act(w, al, a)])
          throw InvariantViolation("factor_moduloid: action not well defined");
  return {Moduloid(std::move(q.carrier), m.over(), std::move(t)), std::move(q.projection),
          std::move(q.representative)};
}

FactorModuloid factor_by_right_ideal(const GammaAnneid& a, const ElementSet& i) {
  return factor_moduloid(Moduloid::of_anneid(a), i);
}

bool check_cyclic_isomorphism(const Moduloid& m, ElemId x, ElemId alpha) {
  const auto& an = m.over();
  const ElementSet k = annihilator_at(m, x, alpha);
  auto f = factor_by_right_ideal(an, k);
  const auto& Q = f.moduloid.M();
  const auto& M = m.M();
  // kappa on representatives; well defined on classes
  std::vector<ElemId> kappa(Q.size(), U);
  for (ElemId a = 0; a < an.size(); ++a) {
    ElemId c = f.projection[a], v = m.act(x, alpha, a);
    if (kappa[c] == U)
      kappa[c] = v;
    else if (kappa[c] != v)
      return false;
  }
  ElementSet image(M.size());
  for (ElemId v : kappa) {
    if (image.contains(v)) return false;  // not injective
    image.insert(v);
  }
  if (image != x_alpha_a(m, x, alpha)) return false;
  for (ElemId p = 0; p < Q.size(); ++p)
    for (ElemId q = 0; q < Q.size(); ++q) {
      if (Q.addible(p, q) != M.addible(kappa[p], kappa[q])) return false;
      if (Q.addible(p, q) && M.sum(kappa[p], kappa[q]) != kappa[Q.sum(p, q)]) return false;
    }
  for (ElemId p = 0; p < Q.size(); ++p)
    for (ElemId be = 0; be < an.G().size(); ++be)
      for (ElemId b = 0; b < an.size(); ++b)
        if (kappa[f.moduloid.act(p, be, b)] != m.act(kappa[p], be, b)) return false;
  return true;
}

}  // namespace ggr::moduloid
