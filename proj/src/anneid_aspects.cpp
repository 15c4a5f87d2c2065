#include <algorithm>
#include <array>
#include <functional>

#include "ggr/anneid.hpp"
#include "ggr/errors.hpp"

namespace ggr::anneid {

using gammaring::GammaRing;
using gammaring::GradedGammaRing;
using grading::Graduation;

namespace {

constexpr ElemId U = Homogroupoid::kUndefined;

std::vector<ElemId> invert(const std::vector<ElemId>& map, std::size_t n) {
  std::vector<ElemId> inv(n, U);
  for (ElemId i = 0; i < map.size(); ++i) inv[map[i]] = i;
  return inv;
}

bool subset_closed(const ElementSet& left, const ElementSet& mid, const ElementSet& right, const ElementSet& target,
                   const std::function<ElemId(ElemId, ElemId, ElemId)>& op, std::vector<ElemId>& witness) {
  bool ok = true;
  left.for_each([&](ElemId x) {
    if (!ok) return;
    mid.for_each([&](ElemId a) {
      if (!ok) return;
      right.for_each([&](ElemId y) {
        if (ok && !target.contains(op(x, a, y))) {
          ok = false;
          witness = {x, a, y};
        }
      });
    });
  });
  return ok;
}

}  // namespace

CheckReport verify_semihomogeneous(const SemihomogeneousQuadruple& q) {
  CheckReport rep("semihomogeneous quadruple");
  const GammaRing& ring = q.ring;
  rep.merge(grading::verify_homogeneous_part_axioms(ring.r(), q.a), "A");
  rep.merge(grading::verify_homogeneous_part_axioms(ring.gamma(), q.g), "G");
  std::vector<ElemId> w;
  if (subset_closed(q.a, q.g, q.a, q.a, [&](ElemId x, ElemId a, ElemId y) { return ring.product(x, a, y); }, w))
    rep.pass("vi");
  else
    rep.fail("vi", {ring.r().element_name(w[0]), ring.gamma().element_name(w[1]), ring.r().element_name(w[2])});
  if (!ring.is_nobusawa()) {
    rep.not_applicable("vi'", "no cotriple");
  } else if (subset_closed(q.g, q.a, q.g, q.g, [&](ElemId a, ElemId x, ElemId b) { return ring.coproduct(a, x, b); },
                           w)) {
    rep.pass("vi'");
  } else {
    rep.fail("vi'", {ring.gamma().element_name(w[0]), ring.r().element_name(w[1]), ring.gamma().element_name(w[2])});
  }
  // Cross-check with the graded-ring route once the parts are homogeneous parts.
  if (rep.passed()) {
    auto graded = graded_from_semihomogeneous(q);
    auto check = gammaring::verify_graded(graded);
    if (!check.report.passed())
      throw InvariantViolation("semihomogeneous conditions hold but the induced graduations are not graded:\n" +
                               check.report.to_text());
  }
  return rep;
}

GradedGammaRing graded_from_semihomogeneous(const SemihomogeneousQuadruple& q) {
  return {q.ring, grading::graduation_from_homogeneous_part(q.ring.r(), q.a),
          grading::graduation_from_homogeneous_part(q.ring.gamma(), q.g)};
}

HomogeneousView anneid_from_graded(const GradedGammaRing& g, const std::vector<std::string>* r_names,
                                   const std::vector<std::string>* gamma_names) {
  auto check = gammaring::verify_graded(g);
  if (!check.report.passed()) throw PreconditionError("anneid_from_graded: not graded\n" + check.report.to_text());
  std::vector<ElemId> amap, gmap;
  auto A = Homogroupoid::from_graduation(g.grad_r, &amap, r_names);
  auto G = Homogroupoid::from_graduation(g.grad_gamma, &gmap, gamma_names);
  auto ainv = invert(amap, g.ring.r().size());
  auto ginv = invert(gmap, g.ring.gamma().size());
  const std::size_t n = amap.size(), m = gmap.size();
  std::vector<ElemId> t(n * m * n);
  for (ElemId x = 0; x < n; ++x)
    for (ElemId a = 0; a < m; ++a)
      for (ElemId y = 0; y < n; ++y) t[(x * m + a) * n + y] = ainv[g.ring.product(amap[x], gmap[a], amap[y])];
  std::optional<std::vector<ElemId>> c;
  if (g.ring.is_nobusawa()) {
    c = std::vector<ElemId>(m * n * m);
    for (ElemId a = 0; a < m; ++a)
      for (ElemId x = 0; x < n; ++x)
        for (ElemId b = 0; b < m; ++b) (*c)[(a * n + x) * m + b] = ginv[g.ring.coproduct(gmap[a], amap[x], gmap[b])];
  }
  return {GammaAnneid(std::move(A), std::move(G), std::move(t), std::move(c)), std::move(amap), std::move(gmap)};
}

LinearizedAnneid linearize_anneid(const GammaAnneid& an) {
  auto report = verify_anneid(an);
  if (!report.passed()) throw StructuralError("linearize_anneid: anneid axioms fail\n" + report.to_text());
  auto la = grading::linearize(an.A());
  auto lg = grading::linearize(an.G());
  const auto& R = la.group;
  const auto& Gm = lg.group;
  auto ainv = invert(la.embed, R.size());
  auto ginv = invert(lg.embed, Gm.size());
  // Homogeneous components of each element, as anneid ids.
  auto parts = [](const Graduation& grad, const std::vector<ElemId>& inv, ElemId x) {
    std::vector<ElemId> out;
    for (ElemId c : grad.decompose(x))
      if (c != 0) out.push_back(inv[c]);
    return out;
  };
  std::vector<std::vector<ElemId>> rp(R.size()), gp(Gm.size());
  for (ElemId x = 0; x < R.size(); ++x) rp[x] = parts(la.graduation, ainv, x);
  for (ElemId a = 0; a < Gm.size(); ++a) gp[a] = parts(lg.graduation, ginv, a);

  const std::size_t n = R.size(), m = Gm.size();
  std::vector<ElemId> t(n * m * n, 0);
  for (ElemId x = 0; x < n; ++x)
    for (ElemId a = 0; a < m; ++a)
      for (ElemId y = 0; y < n; ++y) {
        ElemId s = 0;
        for (ElemId xi : rp[x])
          for (ElemId ad : gp[a])
            for (ElemId ye : rp[y]) s = R.add(s, la.embed[an.product(xi, ad, ye)]);
        t[(x * m + a) * n + y] = s;
      }
  std::optional<std::vector<ElemId>> c;
  if (an.is_nobusawa()) {
    c = std::vector<ElemId>(m * n * m, 0);
    for (ElemId a = 0; a < m; ++a)
      for (ElemId x = 0; x < n; ++x)
        for (ElemId b = 0; b < m; ++b) {
          ElemId s = 0;
          for (ElemId ad : gp[a])
            for (ElemId xi : rp[x])
              for (ElemId bd : gp[b]) s = Gm.add(s, lg.embed[an.coproduct(ad, xi, bd)]);
          (*c)[(a * n + x) * m + b] = s;
        }
  }
  GammaRing ring(R, Gm, std::move(t), std::move(c));
  return {GradedGammaRing{std::move(ring), std::move(la.graduation), std::move(lg.graduation)}, std::move(la.embed),
          std::move(lg.embed)};
}

GammaAnneid one_grade_view(const GammaRing& g) {
  return anneid_from_graded(GradedGammaRing{g, Graduation(g.r()), Graduation(g.gamma())}).anneid;
}

bool is_isomorphism(const GammaAnneid& from, const GammaAnneid& to, const AnneidIsomorphism& f) {
  const std::size_t n = from.size(), m = from.G().size();
  if (to.size() != n || to.G().size() != m || f.a_map.size() != n || f.g_map.size() != m) return false;
  if (from.is_nobusawa() != to.is_nobusawa()) return false;
  auto bijective = [](const std::vector<ElemId>& v, std::size_t k) {
    std::vector<char> seen(k, 0);
    for (ElemId x : v) {
      if (x >= k || seen[x]) return false;
      seen[x] = 1;
    }
    return true;
  };
  if (!bijective(f.a_map, n) || !bijective(f.g_map, m)) return false;
  auto additive = [](const Homogroupoid& s, const Homogroupoid& t, const std::vector<ElemId>& v) {
    for (ElemId x = 0; x < s.size(); ++x)
      for (ElemId y = 0; y < s.size(); ++y) {
        if (s.addible(x, y) != t.addible(v[x], v[y])) return false;
        if (s.addible(x, y) && t.sum(v[x], v[y]) != v[s.sum(x, y)]) return false;
      }
    return true;
  };
  if (!additive(from.A(), to.A(), f.a_map) || !additive(from.G(), to.G(), f.g_map)) return false;
  for (ElemId x = 0; x < n; ++x)
    for (ElemId a = 0; a < m; ++a)
      for (ElemId y = 0; y < n; ++y)
        if (to.product(f.a_map[x], f.g_map[a], f.a_map[y]) != f.a_map[from.product(x, a, y)]) return false;
  if (from.is_nobusawa())
    for (ElemId a = 0; a < m; ++a)
      for (ElemId x = 0; x < n; ++x)
        for (ElemId b = 0; b < m; ++b)
          if (to.coproduct(f.g_map[a], f.a_map[x], f.g_map[b]) != f.g_map[from.coproduct(a, x, b)]) return false;
  return true;
}

namespace {

using Signature = std::array<std::size_t, 4>;

std::size_t additive_order(const Homogroupoid& h, ElemId x) {
  std::size_t k = 1;
  for (ElemId s = x; s != 0; s = h.sum(s, x)) ++k;
  return x == 0 ? 1 : k - 1;
}

std::vector<Signature> a_signatures(const GammaAnneid& an) {
  std::vector<Signature> out(an.size());
  for (ElemId x = 0; x < an.size(); ++x) {
    std::size_t left = 0, right = 0;
    for (ElemId a = 0; a < an.G().size(); ++a)
      for (ElemId y = 0; y < an.size(); ++y) {
        left += an.product(x, a, y) != 0;
        right += an.product(y, a, x) != 0;
      }
    out[x] = {an.A().grade_class(an.grade(x)).size(), additive_order(an.A(), x), left, right};
  }
  return out;
}

std::vector<Signature> g_signatures(const GammaAnneid& an) {
  std::vector<Signature> out(an.G().size());
  for (ElemId a = 0; a < an.G().size(); ++a) {
    std::size_t nz = 0;
    for (ElemId x = 0; x < an.size(); ++x)
      for (ElemId y = 0; y < an.size(); ++y) nz += an.product(x, a, y) != 0;
    out[a] = {an.G().grade_class(an.gamma_grade(a)).size(), additive_order(an.G(), a), nz, 0};
  }
  return out;
}

// Assigns source ids 0..k-1 of one homogroupoid in order, checking addibility
// and sums against already assigned elements.
bool consistent_add(const Homogroupoid& s, const Homogroupoid& t, const std::vector<ElemId>& map, ElemId x) {
  for (ElemId y = 0; y <= x; ++y) {
    if (s.addible(x, y) != t.addible(map[x], map[y])) return false;
    if (!s.addible(x, y)) continue;
    ElemId sum = s.sum(x, y);
    if (sum <= x && t.sum(map[x], map[y]) != map[sum]) return false;
  }
  return true;
}

}  // namespace

std::optional<AnneidIsomorphism> find_isomorphism(const GammaAnneid& from, const GammaAnneid& to) {
  const std::size_t n = from.size(), m = from.G().size();
  if (to.size() != n || to.G().size() != m || from.is_nobusawa() != to.is_nobusawa()) return std::nullopt;
  if (from.grade_count() != to.grade_count() || from.gamma_grade_count() != to.gamma_grade_count())
    return std::nullopt;
  auto sa = a_signatures(from), ta = a_signatures(to);
  auto sg = g_signatures(from), tg = g_signatures(to);
  {
    auto a1 = sa, a2 = ta, g1 = sg, g2 = tg;
    std::sort(a1.begin(), a1.end());
    std::sort(a2.begin(), a2.end());
    std::sort(g1.begin(), g1.end());
    std::sort(g2.begin(), g2.end());
    if (a1 != a2 || g1 != g2) return std::nullopt;
  }
  AnneidIsomorphism f{std::vector<ElemId>(n, U), std::vector<ElemId>(m, U)};
  std::vector<char> used_a(n, 0), used_g(m, 0);
  f.a_map[0] = 0;
  f.g_map[0] = 0;
  used_a[0] = used_g[0] = 1;

  // Product checks for every triple whose members are all assigned and that
  // involves the newest A element x (G is complete by then).
  auto products_ok = [&](ElemId x) {
    for (ElemId u = 0; u <= x; ++u)
      for (ElemId a = 0; a < m; ++a)
        for (ElemId v = 0; v <= x; ++v) {
          if (u != x && v != x) continue;
          ElemId p = from.product(u, a, v);
          ElemId q = to.product(f.a_map[u], f.g_map[a], f.a_map[v]);
          if (p <= x && f.a_map[p] != q) return false;
          if (p > x && used_a[q]) return false;  // q must be the image of an unassigned element
        }
    return true;
  };

  std::function<bool(ElemId)> assign_a = [&](ElemId x) -> bool {
    if (x == n) return is_isomorphism(from, to, f);
    for (ElemId c = 1; c < n; ++c) {
      if (used_a[c] || sa[x] != ta[c]) continue;
      f.a_map[x] = c;
      used_a[c] = 1;
      if (consistent_add(from.A(), to.A(), f.a_map, x) && products_ok(x) && assign_a(x + 1)) return true;
      used_a[c] = 0;
    }
    f.a_map[x] = U;
    return false;
  };
  std::function<bool(ElemId)> assign_g = [&](ElemId a) -> bool {
    if (a == m) return assign_a(1);
    for (ElemId c = 1; c < m; ++c) {
      if (used_g[c] || sg[a] != tg[c]) continue;
      f.g_map[a] = c;
      used_g[c] = 1;
      if (consistent_add(from.G(), to.G(), f.g_map, a) && assign_g(a + 1)) return true;
      used_g[c] = 0;
    }
    f.g_map[a] = U;
    return false;
  };
  if (n == 1 && m == 1) return is_isomorphism(from, to, f) ? std::optional(f) : std::nullopt;
  if (!assign_g(1)) return std::nullopt;
  return f;
}

bool linearization_roundtrip(const GradedGammaRing& g) {
  auto view = anneid_from_graded(g);
  auto lin = linearize_anneid(view.anneid);
  const auto& R = g.ring.r();
  const auto& Gm = g.ring.gamma();
  const auto& LR = lin.ring.ring.r();
  const auto& LG = lin.ring.ring.gamma();
  if (LR.size() != R.size() || LG.size() != Gm.size()) return false;
  // phi extends the inclusion of homogeneous parts additively.
  auto extend = [](const Graduation& lgrad, const std::vector<ElemId>& embed, const std::vector<ElemId>& to_target,
                   const finabel::FiniteAbelianGroup& target) {
    auto inv = invert(embed, lgrad.group().size());
    std::vector<ElemId> phi(lgrad.group().size(), 0);
    for (ElemId x = 0; x < phi.size(); ++x)
      for (ElemId c : lgrad.decompose(x))
        if (c != 0) phi[x] = target.add(phi[x], to_target[inv[c]]);
    return phi;
  };
  auto phi = extend(lin.ring.grad_r, lin.embed_a, view.a_to_r, R);
  auto psi = extend(lin.ring.grad_gamma, lin.embed_g, view.g_to_gamma, Gm);
  auto bij = [](const std::vector<ElemId>& v) {
    std::vector<char> seen(v.size(), 0);
    for (ElemId x : v) {
      if (seen[x]) return false;
      seen[x] = 1;
    }
    return true;
  };
  if (!bij(phi) || !bij(psi)) return false;
  for (ElemId x = 0; x < LR.size(); ++x)
    for (ElemId y = 0; y < LR.size(); ++y)
      if (phi[LR.add(x, y)] != R.add(phi[x], phi[y])) return false;
  for (ElemId x = 0; x < LG.size(); ++x)
    for (ElemId y = 0; y < LG.size(); ++y)
      if (psi[LG.add(x, y)] != Gm.add(psi[x], psi[y])) return false;
  for (ElemId x = 0; x < LR.size(); ++x)
    for (ElemId a = 0; a < LG.size(); ++a)
      for (ElemId y = 0; y < LR.size(); ++y)
        if (phi[lin.ring.ring.product(x, a, y)] != g.ring.product(phi[x], psi[a], phi[y])) return false;
  if (g.ring.is_nobusawa() != lin.ring.ring.is_nobusawa()) return false;
  if (g.ring.is_nobusawa())
    for (ElemId a = 0; a < LG.size(); ++a)
      for (ElemId x = 0; x < LR.size(); ++x)
        for (ElemId b = 0; b < LG.size(); ++b)
          if (psi[lin.ring.ring.coproduct(a, x, b)] != g.ring.coproduct(psi[a], phi[x], psi[b])) return false;
  // Components correspond (weak equivalence through phi, psi).
  auto image_components = [](const Graduation& src, const std::vector<ElemId>& map, std::size_t n) {
    std::vector<ElementSet> out;
    for (const auto& c : src.strict_components()) {
      ElementSet s(n);
      c.for_each([&](ElemId x) { s.insert(map[x]); });
      out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  auto sorted = [](std::vector<ElementSet> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  return image_components(lin.ring.grad_r, phi, R.size()) == sorted(g.grad_r.strict_components()) &&
         image_components(lin.ring.grad_gamma, psi, Gm.size()) == sorted(g.grad_gamma.strict_components());
}

}  // namespace ggr::anneid
