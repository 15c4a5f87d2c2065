#include "ggr/gammaring.hpp"

#include <functional>

#include "ggr/errors.hpp"

namespace ggr::gammaring {

namespace {

std::vector<ElemId> unit_generators(const FiniteAbelianGroup& g) {
  std::vector<ElemId> out;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    std::vector<int> r(g.rank(), 0);
    r[i] = 1;
    out.push_back(g.encode(r));
  }
  return out;
}

std::vector<ElemId> all_ids(const FiniteAbelianGroup& g) {
  std::vector<ElemId> out(g.size());
  for (ElemId i = 0; i < g.size(); ++i) out[i] = i;
  return out;
}

// Runs `f` over the cartesian product of `lists` until it returns a witness.
using Tuple = std::vector<ElemId>;
std::optional<Tuple> first_failure(const std::vector<std::vector<ElemId>>& lists,
                                   const std::function<bool(const Tuple&)>& ok) {
  Tuple t(lists.size(), 0);
  std::optional<Tuple> found;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (found) return;
    if (k == lists.size()) {
      if (!ok(t)) found = t;
      return;
    }
    for (ElemId v : lists[k]) {
      t[k] = v;
      rec(k + 1);
      if (found) return;
    }
  };
  rec(0);
  return found;
}

std::vector<std::string> name_tuple(const Tuple& t, const std::vector<const FiniteAbelianGroup*>& gs) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < t.size(); ++i) out.push_back(gs[i]->element_name(t[i]));
  return out;
}

}  // namespace

CheckReport FiniteRing::verify() const {
  CheckReport r("finite ring");
  const auto& g = group;
  if (mul.size() != g.size() * g.size()) throw StructuralError("ring multiplication table has wrong size");
  auto all = all_ids(g), gens = unit_generators(g);
  std::vector<const FiniteAbelianGroup*> gs{&g, &g, &g};
  auto left = first_failure({all, gens, all}, [&](const Tuple& t) {
    return multiply(g.add(t[0], t[1]), t[2]) == g.add(multiply(t[0], t[2]), multiply(t[1], t[2]));
  });
  r.record("distributive.left", !left, left ? name_tuple(*left, gs) : std::vector<std::string>{});
  auto right = first_failure({all, all, gens}, [&](const Tuple& t) {
    return multiply(t[0], g.add(t[1], t[2])) == g.add(multiply(t[0], t[1]), multiply(t[0], t[2]));
  });
  r.record("distributive.right", !right, right ? name_tuple(*right, gs) : std::vector<std::string>{});
  const bool additive = !left && !right;
  const auto& src = additive ? gens : all;
  auto assoc = first_failure({src, src, src}, [&](const Tuple& t) {
    return multiply(multiply(t[0], t[1]), t[2]) == multiply(t[0], multiply(t[1], t[2]));
  });
  r.record("associative", !assoc, assoc ? name_tuple(*assoc, gs) : std::vector<std::string>{});
  return r;
}

FiniteRing FiniteRing::zero_ring(FiniteAbelianGroup g) {
  std::vector<ElemId> mul(g.size() * g.size(), 0);
  return {std::move(g), std::move(mul)};
}

FiniteRing FiniteRing::integers_mod(int n) {
  FiniteAbelianGroup g({n});
  std::vector<ElemId> mul(g.size() * g.size());
  for (std::size_t x = 0; x < g.size(); ++x)
    for (std::size_t y = 0; y < g.size(); ++y) mul[x * g.size() + y] = static_cast<ElemId>((x * y) % g.size());
  return {std::move(g), std::move(mul)};
}

GammaRing::GammaRing(FiniteAbelianGroup r, FiniteAbelianGroup gamma, std::vector<ElemId> triple,
                     std::optional<std::vector<ElemId>> cotriple)
    : r_(std::move(r)), gamma_(std::move(gamma)), triple_(std::move(triple)), cotriple_(std::move(cotriple)) {
  const std::size_t n = r_.size(), m = gamma_.size();
  if (triple_.size() != n * m * n) throw StructuralError("triple table must be |R| x |Gamma| x |R|");
  for (ElemId v : triple_)
    if (v >= n) throw StructuralError("triple table value outside R");
  if (cotriple_) {
    if (cotriple_->size() != m * n * m) throw StructuralError("cotriple table must be |Gamma| x |R| x |Gamma|");
    for (ElemId v : *cotriple_)
      if (v >= m) throw StructuralError("cotriple table value outside Gamma");
  }
}

CheckReport verify_gamma_ring(const GammaRing& g) {
  CheckReport rep("gamma ring");
  const auto& R = g.r();
  const auto& G = g.gamma();
  auto rall = all_ids(R), gall = all_ids(G), rgen = unit_generators(R), ggen = unit_generators(G);
  std::vector<const FiniteAbelianGroup*> rgr{&R, &R, &G, &R};
  auto P = [&](ElemId x, ElemId a, ElemId y) { return g.product(x, a, y); };
  auto none = std::vector<std::string>{};

  // x, y, a, z
  auto left = first_failure({rall, rgen, gall, rall}, [&](const Tuple& t) {
    return P(R.add(t[0], t[1]), t[2], t[3]) == R.add(P(t[0], t[2], t[3]), P(t[1], t[2], t[3]));
  });
  rep.record("ii.left", !left, left ? name_tuple(*left, rgr) : none);
  // x, a, b, z
  std::vector<const FiniteAbelianGroup*> rggr{&R, &G, &G, &R};
  auto middle = first_failure({rall, gall, ggen, rall}, [&](const Tuple& t) {
    return P(t[0], G.add(t[1], t[2]), t[3]) == R.add(P(t[0], t[1], t[3]), P(t[0], t[2], t[3]));
  });
  rep.record("ii.middle", !middle, middle ? name_tuple(*middle, rggr) : none);
  // x, a, y, z
  std::vector<const FiniteAbelianGroup*> rgrr{&R, &G, &R, &R};
  auto right = first_failure({rall, gall, rall, rgen}, [&](const Tuple& t) {
    return P(t[0], t[1], R.add(t[2], t[3])) == R.add(P(t[0], t[1], t[2]), P(t[0], t[1], t[3]));
  });
  rep.record("ii.right", !right, right ? name_tuple(*right, rgrr) : none);
  const bool additive = !left && !middle && !right;

  // Both sides are multi-additive, so generators suffice once additivity holds.
  const auto& xs = additive ? rgen : rall;
  const auto& as = additive ? ggen : gall;
  std::vector<const FiniteAbelianGroup*> five{&R, &G, &R, &G, &R};
  auto assoc = first_failure({xs, as, xs, as, xs}, [&](const Tuple& t) {
    return P(P(t[0], t[1], t[2]), t[3], t[4]) == P(t[0], t[1], P(t[2], t[3], t[4]));
  });
  rep.record("iii", !assoc, assoc ? name_tuple(*assoc, five) : none);

  if (!g.is_nobusawa()) {
    for (const char* id : {"cotriple.additivity", "ii'", "iii'"})
      rep.not_applicable(id, "no cotriple: plain gamma ring");
    return rep;
  }
  auto C = [&](ElemId a, ElemId x, ElemId b) { return g.coproduct(a, x, b); };
  std::vector<const FiniteAbelianGroup*> ggrg{&G, &G, &R, &G};
  auto c1 = first_failure({gall, ggen, rall, gall}, [&](const Tuple& t) {
    return C(G.add(t[0], t[1]), t[2], t[3]) == G.add(C(t[0], t[2], t[3]), C(t[1], t[2], t[3]));
  });
  std::vector<const FiniteAbelianGroup*> grrg{&G, &R, &R, &G};
  auto c2 = c1 ? c1 : first_failure({gall, rall, rgen, gall}, [&](const Tuple& t) {
    return C(t[0], R.add(t[1], t[2]), t[3]) == G.add(C(t[0], t[1], t[3]), C(t[0], t[2], t[3]));
  });
  std::vector<const FiniteAbelianGroup*> grgg{&G, &R, &G, &G};
  auto c3 = c2 ? c2 : first_failure({gall, rall, gall, ggen}, [&](const Tuple& t) {
    return C(t[0], t[1], G.add(t[2], t[3])) == G.add(C(t[0], t[1], t[2]), C(t[0], t[1], t[3]));
  });
  if (c1)
    rep.fail("cotriple.additivity", name_tuple(*c1, ggrg), "left slot");
  else if (c2)
    rep.fail("cotriple.additivity", name_tuple(*c2, grrg), "middle slot");
  else if (c3)
    rep.fail("cotriple.additivity", name_tuple(*c3, grgg), "right slot");
  else
    rep.pass("cotriple.additivity");
  const bool co_additive = !c3;

  const bool reduce = additive && co_additive;
  const auto& xs2 = reduce ? rgen : rall;
  const auto& as2 = reduce ? ggen : gall;
  auto mixed = first_failure({xs2, as2, xs2, as2, xs2}, [&](const Tuple& t) {
    return P(P(t[0], t[1], t[2]), t[3], t[4]) == P(t[0], C(t[1], t[2], t[3]), t[4]);
  });
  rep.record("ii'", !mixed, mixed ? name_tuple(*mixed, five) : none);

  std::vector<std::string> w;
  for (ElemId a = 1; a < G.size() && w.empty(); ++a) {
    bool annihilates = true;
    for (ElemId x = 0; x < R.size() && annihilates; ++x)
      for (ElemId y = 0; y < R.size() && annihilates; ++y)
        if (P(x, a, y) != 0) annihilates = false;
    if (annihilates) w = {G.element_name(a)};
  }
  rep.record("iii'", w.empty(), w);
  return rep;
}

namespace {

// Grade of the component containing `set` (kZeroGrade for {0}), or nullopt.
std::optional<GradeId> containing_component(const Graduation& grad, const ElementSet& set) {
  if (set.size() <= 1 && (set.empty() || set.contains(0))) return grading::kZeroGrade;
  for (GradeId z = 1; z <= grad.grade_count(); ++z)
    if (set.is_subset_of(grad.component(z))) return z;
  return std::nullopt;
}

ElementSet triple_product_set(const GradedGammaRing& g, GradeId xi, GradeId d, GradeId eta) {
  ElementSet out(g.ring.r().size());
  auto xs = g.grad_r.component(xi).members();
  auto as = g.grad_gamma.component(d).members();
  auto ys = g.grad_r.component(eta).members();
  for (ElemId x : xs)
    for (ElemId a : as)
      for (ElemId y : ys) out.insert(g.ring.product(x, a, y));
  return out;
}

ElementSet cotriple_product_set(const GradedGammaRing& g, GradeId s, GradeId delta, GradeId t) {
  ElementSet out(g.ring.gamma().size());
  auto as = g.grad_gamma.component(s).members();
  auto xs = g.grad_r.component(delta).members();
  auto bs = g.grad_gamma.component(t).members();
  for (ElemId a : as)
    for (ElemId x : xs)
      for (ElemId b : bs) out.insert(g.ring.coproduct(a, x, b));
  return out;
}

}  // namespace

GradedCheck verify_graded(const GradedGammaRing& g) {
  if (!(g.grad_r.group() == g.ring.r()) || !(g.grad_gamma.group() == g.ring.gamma()))
    throw StructuralError("graduations do not match the gamma ring's groups");
  GradedCheck out{CheckReport("graded gamma ring"), std::nullopt};
  GradeTernaryTable table;
  table.r_grades = g.grad_r.grade_count();
  table.gamma_grades = g.grad_gamma.grade_count();
  const int kr = table.r_grades + 1, kg = table.gamma_grades + 1;
  table.triple.assign(static_cast<std::size_t>(kr * kg * kr), grading::kZeroGrade);

  std::vector<std::string> w;
  for (GradeId xi = 1; xi < kr && w.empty(); ++xi)
    for (GradeId d = 1; d < kg && w.empty(); ++d)
      for (GradeId eta = 1; eta < kr && w.empty(); ++eta) {
        auto z = containing_component(g.grad_r, triple_product_set(g, xi, d, eta));
        if (!z)
          w = {"R_" + std::to_string(xi), "Gamma_" + std::to_string(d), "R_" + std::to_string(eta)};
        else
          table.triple[static_cast<std::size_t>((xi * kg + d) * kr + eta)] = *z;
      }
  out.report.record("condition.1", w.empty(), w);

  if (g.ring.is_nobusawa()) {
    table.cotriple = std::vector<GradeId>(static_cast<std::size_t>(kg * kr * kg), grading::kZeroGrade);
    w.clear();
    for (GradeId s = 1; s < kg && w.empty(); ++s)
      for (GradeId delta = 1; delta < kr && w.empty(); ++delta)
        for (GradeId t = 1; t < kg && w.empty(); ++t) {
          auto z = containing_component(g.grad_gamma, cotriple_product_set(g, s, delta, t));
          if (!z)
            w = {"Gamma_" + std::to_string(s), "R_" + std::to_string(delta), "Gamma_" + std::to_string(t)};
          else
            (*table.cotriple)[static_cast<std::size_t>((s * kr + delta) * kg + t)] = *z;
        }
    out.report.record("condition.2", w.empty(), w);
  } else {
    out.report.not_applicable("condition.2", "no cotriple: plain gamma ring");
  }
  if (out.report.passed()) out.table = std::move(table);
  return out;
}

GradeId grade_ternary(const GradedGammaRing& g, GradeId xi, GradeId d, GradeId eta) {
  if (xi < 0 || eta < 0 || d < 0 || xi > g.grad_r.grade_count() || eta > g.grad_r.grade_count() ||
      d > g.grad_gamma.grade_count())
    throw PreconditionError("grade_ternary: grade out of range");
  auto z = containing_component(g.grad_r, triple_product_set(g, xi, d, eta));
  if (!z) throw PreconditionError("grade_ternary: product set spans several components");
  return *z;
}

CheckReport lemma_consistency_check(const GradedGammaRing& g) {
  CheckReport rep("graded gamma ring (element-level)");
  const auto& R = g.ring.r();
  const auto& G = g.ring.gamma();
  auto hr = grading::homogeneous_part(g.grad_r);
  auto hg = grading::homogeneous_part(g.grad_gamma);
  auto A = hr.carrier.members();
  auto Gm = hg.carrier.members();

  std::vector<std::string> closed_w, grade_w;
  const int kr = g.grad_r.grade_count() + 1, kg = g.grad_gamma.grade_count() + 1;
  std::vector<std::pair<GradeId, std::vector<ElemId>>> seen(static_cast<std::size_t>(kr * kg * kr),
                                                           {-1, {}});
  for (ElemId x : A)
    for (ElemId a : Gm)
      for (ElemId y : A) {
        ElemId p = g.ring.product(x, a, y);
        if (!hr.carrier.contains(p)) {
          if (closed_w.empty()) closed_w = {R.element_name(x), G.element_name(a), R.element_name(y)};
          continue;
        }
        if (p == 0) continue;
        auto& slot = seen[static_cast<std::size_t>((hr.grade_of[x] * kg + hg.grade_of[a]) * kr + hr.grade_of[y])];
        if (slot.first < 0) {
          slot = {hr.grade_of[p], {x, a, y}};
        } else if (slot.first != hr.grade_of[p] && grade_w.empty()) {
          const auto& s = slot.second;
          grade_w = {R.element_name(s[0]), G.element_name(s[1]), R.element_name(s[2]),
                     R.element_name(x),    G.element_name(a),    R.element_name(y)};
        }
      }
  rep.record("AGA_in_A", closed_w.empty(), closed_w);
  rep.record("grade_depends_on_grades", grade_w.empty(), grade_w);

  if (!g.ring.is_nobusawa()) {
    rep.not_applicable("GAG_in_G", "no cotriple");
    rep.not_applicable("cograde_depends_on_grades", "no cotriple");
    return rep;
  }
  closed_w.clear();
  grade_w.clear();
  std::vector<std::pair<GradeId, std::vector<ElemId>>> coseen(static_cast<std::size_t>(kg * kr * kg),
                                                             {-1, {}});
  for (ElemId a : Gm)
    for (ElemId x : A)
      for (ElemId b : Gm) {
        ElemId p = g.ring.coproduct(a, x, b);
        if (!hg.carrier.contains(p)) {
          if (closed_w.empty()) closed_w = {G.element_name(a), R.element_name(x), G.element_name(b)};
          continue;
        }
        if (p == 0) continue;
        auto& slot = coseen[static_cast<std::size_t>((hg.grade_of[a] * kr + hr.grade_of[x]) * kg + hg.grade_of[b])];
        if (slot.first < 0) {
          slot = {hg.grade_of[p], {a, x, b}};
        } else if (slot.first != hg.grade_of[p] && grade_w.empty()) {
          const auto& s = slot.second;
          grade_w = {G.element_name(s[0]), R.element_name(s[1]), G.element_name(s[2]),
                     G.element_name(a),    R.element_name(x),    G.element_name(b)};
        }
      }
  rep.record("GAG_in_G", closed_w.empty(), closed_w);
  rep.record("cograde_depends_on_grades", grade_w.empty(), grade_w);
  return rep;
}

}  // namespace ggr::gammaring
