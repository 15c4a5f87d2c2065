#include "ggr/anneid.hpp"

#include "ggr/errors.hpp"

namespace ggr::anneid {

namespace {
constexpr ElemId U = Homogroupoid::kUndefined;
}

GammaAnneid::GammaAnneid(Homogroupoid a, Homogroupoid g, std::vector<ElemId> triple,
                         std::optional<std::vector<ElemId>> cotriple)
    : a_(std::move(a)), g_(std::move(g)), triple_(std::move(triple)), cotriple_(std::move(cotriple)) {
  const std::size_t n = a_.size(), m = g_.size();
  if (triple_.size() != n * m * n) throw StructuralError("anneid triple table must be |A| x |G| x |A|");
  for (ElemId v : triple_)
    if (v >= n) throw StructuralError("anneid triple value outside A");
  if (cotriple_) {
    if (cotriple_->size() != m * n * m) throw StructuralError("anneid cotriple table must be |G| x |A| x |G|");
    for (ElemId v : *cotriple_)
      if (v >= m) throw StructuralError("anneid cotriple value outside G");
  }
  const int kr = grade_count() + 1, kg = gamma_grade_count() + 1;
  grade_table_.assign(static_cast<std::size_t>(kr * kg * kr), kZeroGrade);
  std::vector<char> set(grade_table_.size(), 0);
  for (ElemId x = 1; x < n; ++x)
    for (ElemId al = 1; al < m; ++al)
      for (ElemId y = 1; y < n; ++y) {
        ElemId p = product(x, al, y);
        if (p == 0) continue;
        auto idx = static_cast<std::size_t>((grade(x) * kg + gamma_grade(al)) * kr + grade(y));
        if (!set[idx]) {
          set[idx] = 1;
          grade_table_[idx] = grade(p);
        } else if (grade_table_[idx] != grade(p)) {
          grade_table_[idx] = kInconsistentGrade;
        }
      }
}

GammaAnneid GammaAnneid::opposite() const {
  const std::size_t n = a_.size(), m = g_.size();
  std::vector<ElemId> t(triple_.size());
  for (ElemId x = 0; x < n; ++x)
    for (ElemId al = 0; al < m; ++al)
      for (ElemId y = 0; y < n; ++y) t[(x * m + al) * n + y] = product(y, al, x);
  std::optional<std::vector<ElemId>> c;
  if (cotriple_) {
    c = std::vector<ElemId>(cotriple_->size());
    for (ElemId al = 0; al < m; ++al)
      for (ElemId x = 0; x < n; ++x)
        for (ElemId be = 0; be < m; ++be) (*c)[(al * n + x) * m + be] = coproduct(be, x, al);
  }
  return GammaAnneid(a_, g_, std::move(t), std::move(c));
}

GammaAnneid zero_product_anneid(Homogroupoid a, Homogroupoid g) {
  std::vector<ElemId> t(a.size() * g.size() * a.size(), 0);
  return GammaAnneid(std::move(a), std::move(g), std::move(t));
}

SubAnneid restrict_anneid(const GammaAnneid& a, const ElementSet& a_subset, const ElementSet& g_subset) {
  std::vector<ElemId> amap, gmap;
  auto sa = grading::subhomogroupoid(a.A(), a_subset, &amap);
  auto sg = grading::subhomogroupoid(a.G(), g_subset, &gmap);
  std::vector<ElemId> ainv(a.size(), U), ginv(a.G().size(), U);
  for (ElemId i = 0; i < amap.size(); ++i) ainv[amap[i]] = i;
  for (ElemId i = 0; i < gmap.size(); ++i) ginv[gmap[i]] = i;
  const std::size_t n = amap.size(), m = gmap.size();
  std::vector<ElemId> t(n * m * n);
  for (ElemId x = 0; x < n; ++x)
    for (ElemId al = 0; al < m; ++al)
      for (ElemId y = 0; y < n; ++y) {
        ElemId p = ainv[a.product(amap[x], gmap[al], amap[y])];
        if (p == U) throw StructuralError("restrict_anneid: subset not closed under the product");
        t[(x * m + al) * n + y] = p;
      }
  std::optional<std::vector<ElemId>> c;
  if (a.is_nobusawa()) {
    c = std::vector<ElemId>(m * n * m);
    bool closed = true;
    for (ElemId al = 0; al < m && closed; ++al)
      for (ElemId x = 0; x < n && closed; ++x)
        for (ElemId be = 0; be < m; ++be) {
          ElemId p = ginv[a.coproduct(gmap[al], amap[x], gmap[be])];
          if (p == U) {
            closed = false;
            break;
          }
          (*c)[(al * n + x) * m + be] = p;
        }
    if (!closed) c.reset();  // the restriction is a plain anneid
  }
  return {GammaAnneid(std::move(sa), std::move(sg), std::move(t), std::move(c)), std::move(amap), std::move(gmap)};
}

CheckReport verify_anneid(const GammaAnneid& an) {
  CheckReport rep("gamma anneid");
  const auto& A = an.A();
  const auto& G = an.G();
  rep.merge(grading::verify_homogroupoid(A), "A");
  rep.merge(grading::verify_homogroupoid(G), "G");
  const ElemId n = static_cast<ElemId>(A.size()), m = static_cast<ElemId>(G.size());
  auto P = [&](ElemId x, ElemId al, ElemId y) { return an.product(x, al, y); };
  auto nm = [&](std::initializer_list<std::pair<bool, ElemId>> xs) {
    std::vector<std::string> out;
    for (auto [in_a, id] : xs) out.push_back(in_a ? A.name(id) : G.name(id));
    return out;
  };

  rep.pass("i", "products are tabulated in A");
  if (an.is_nobusawa())
    rep.pass("ii", "coproducts are tabulated in G");
  else
    rep.not_applicable("ii", "no cotriple: plain anneid");

  std::vector<std::string> w;
  // (a + a') g b
  for (ElemId a = 0; a < n && w.empty(); ++a)
    for (ElemId a2 = 0; a2 < n && w.empty(); ++a2) {
      if (!A.addible(a, a2) || A.sum(a, a2) == U) continue;
      for (ElemId g = 0; g < m && w.empty(); ++g)
        for (ElemId b = 0; b < n && w.empty(); ++b) {
          ElemId p = P(a, g, b), q = P(a2, g, b);
          if (!A.addible(p, q) || A.sum(p, q) != P(A.sum(a, a2), g, b))
            w = nm({{true, a}, {true, a2}, {false, g}, {true, b}});
        }
    }
  rep.record("iii.left", w.empty(), w);
  w.clear();
  for (ElemId g = 0; g < m && w.empty(); ++g)
    for (ElemId g2 = 0; g2 < m && w.empty(); ++g2) {
      if (!G.addible(g, g2) || G.sum(g, g2) == U) continue;
      for (ElemId a = 0; a < n && w.empty(); ++a)
        for (ElemId b = 0; b < n && w.empty(); ++b) {
          ElemId p = P(a, g, b), q = P(a, g2, b);
          if (!A.addible(p, q) || A.sum(p, q) != P(a, G.sum(g, g2), b))
            w = nm({{true, a}, {false, g}, {false, g2}, {true, b}});
        }
    }
  rep.record("iii.middle", w.empty(), w);
  w.clear();
  for (ElemId b = 0; b < n && w.empty(); ++b)
    for (ElemId b2 = 0; b2 < n && w.empty(); ++b2) {
      if (!A.addible(b, b2) || A.sum(b, b2) == U) continue;
      for (ElemId a = 0; a < n && w.empty(); ++a)
        for (ElemId g = 0; g < m && w.empty(); ++g) {
          ElemId p = P(a, g, b), q = P(a, g, b2);
          if (!A.addible(p, q) || A.sum(p, q) != P(a, g, A.sum(b, b2)))
            w = nm({{true, a}, {false, g}, {true, b}, {true, b2}});
        }
    }
  rep.record("iii.right", w.empty(), w);

  w.clear();
  for (ElemId a = 0; a < n && w.empty(); ++a)
    for (ElemId g = 0; g < m && w.empty(); ++g)
      for (ElemId b = 0; b < n && w.empty(); ++b) {
        ElemId agb = P(a, g, b);
        for (ElemId be = 0; be < m && w.empty(); ++be)
          for (ElemId c = 0; c < n; ++c)
            if (P(agb, be, c) != P(a, g, P(b, be, c))) {
              w = nm({{true, a}, {false, g}, {true, b}, {false, be}, {true, c}});
              break;
            }
      }
  rep.record("iv.associative", w.empty(), w);

  w.clear();
  for (GradeId xi = 0; xi <= an.grade_count() && w.empty(); ++xi)
    for (GradeId d = 0; d <= an.gamma_grade_count() && w.empty(); ++d)
      for (GradeId eta = 0; eta <= an.grade_count() && w.empty(); ++eta)
        if (an.grade_table(xi, d, eta) == GammaAnneid::kInconsistentGrade)
          w = {"delta_" + std::to_string(xi), "d_" + std::to_string(d), "delta_" + std::to_string(eta)};
  rep.record("grade_coherence", w.empty(), w);

  if (!an.is_nobusawa()) {
    for (const char* id : {"iii.cotriple", "iv.mixed", "iv.faithful"})
      rep.not_applicable(id, "no cotriple: plain anneid");
    return rep;
  }
  auto C = [&](ElemId al, ElemId x, ElemId be) { return an.coproduct(al, x, be); };
  w.clear();
  for (ElemId g = 0; g < m && w.empty(); ++g)
    for (ElemId x = 0; x < n && w.empty(); ++x)
      for (ElemId h = 0; h < m && w.empty(); ++h) {
        for (ElemId g2 = 0; g2 < m && w.empty(); ++g2)
          if (G.addible(g, g2) && G.sum(g, g2) != U) {
            ElemId p = C(g, x, h), q = C(g2, x, h);
            if (!G.addible(p, q) || G.sum(p, q) != C(G.sum(g, g2), x, h))
              w = nm({{false, g}, {false, g2}, {true, x}, {false, h}});
          }
        for (ElemId x2 = 0; x2 < n && w.empty(); ++x2)
          if (A.addible(x, x2) && A.sum(x, x2) != U) {
            ElemId p = C(g, x, h), q = C(g, x2, h);
            if (!G.addible(p, q) || G.sum(p, q) != C(g, A.sum(x, x2), h))
              w = nm({{false, g}, {true, x}, {true, x2}, {false, h}});
          }
        for (ElemId h2 = 0; h2 < m && w.empty(); ++h2)
          if (G.addible(h, h2) && G.sum(h, h2) != U) {
            ElemId p = C(g, x, h), q = C(g, x, h2);
            if (!G.addible(p, q) || G.sum(p, q) != C(g, x, G.sum(h, h2)))
              w = nm({{false, g}, {true, x}, {false, h}, {false, h2}});
          }
      }
  rep.record("iii.cotriple", w.empty(), w);

  w.clear();
  for (ElemId a = 0; a < n && w.empty(); ++a)
    for (ElemId g = 0; g < m && w.empty(); ++g)
      for (ElemId b = 0; b < n && w.empty(); ++b)
        for (ElemId be = 0; be < m && w.empty(); ++be)
          for (ElemId c = 0; c < n; ++c)
            if (P(P(a, g, b), be, c) != P(a, C(g, b, be), c)) {
              w = nm({{true, a}, {false, g}, {true, b}, {false, be}, {true, c}});
              break;
            }
  rep.record("iv.mixed", w.empty(), w);

  w.clear();
  for (ElemId g = 1; g < m && w.empty(); ++g) {
    bool annihilates = true;
    for (ElemId a = 0; a < n && annihilates; ++a)
      for (ElemId b = 0; b < n && annihilates; ++b)
        if (P(a, g, b) != 0) annihilates = false;
    if (annihilates) w = {G.name(g)};
  }
  rep.record("iv.faithful", w.empty(), w);
  return rep;
}

bool is_alpha_idempotent(const GammaAnneid& a, GradeId e, ElemId alpha) {
  if (alpha == 0 || alpha >= a.G().size()) throw PreconditionError("is_alpha_idempotent: alpha must be nonzero");
  if (e <= 0 || e > a.grade_count()) return false;
  return a.grade_table(e, a.gamma_grade(alpha), e) == e;
}

SubAnneid local_ring_at(const GammaAnneid& a, GradeId e, ElemId alpha) {
  if (!is_alpha_idempotent(a, e, alpha))
    throw PreconditionError("local_ring_at: grade " + std::to_string(e) + " is not an alpha-idempotent");
  return restrict_anneid(a, a.A().grade_class(e), a.G().grade_class(a.gamma_grade(alpha)));
}

bool is_regular(const GammaAnneid& an, Side side) {
  if (side == Side::Both) return is_regular(an, Side::Left) && is_regular(an, Side::Right);
  const GammaAnneid& a = an;
  const ElemId n = static_cast<ElemId>(a.size()), m = static_cast<ElemId>(a.G().size());
  auto prod = [&](ElemId x, ElemId al, ElemId y) {
    return side == Side::Right ? a.product(x, al, y) : a.product(y, al, x);
  };
  for (ElemId x = 0; x < n; ++x)
    for (ElemId al = 1; al < m; ++al)
      for (ElemId y = 1; y < n; ++y) {
        ElemId p = prod(x, al, y);
        if (p == 0) continue;
        for (ElemId be = 1; be < m; ++be)
          for (ElemId z = 1; z < n; ++z) {
            ElemId q = prod(x, be, z);
            if (q != 0 && a.A().addible(p, q) && (!a.G().addible(al, be) || !a.A().addible(y, z))) return false;
          }
      }
  return true;
}

}  // namespace ggr::anneid
