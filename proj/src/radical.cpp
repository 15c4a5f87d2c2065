#include "ggr/radical.hpp"

#include "ggr/errors.hpp"

namespace ggr::radical {

using ideals::ModularityWitness;

namespace {

std::vector<std::string> names_of(const GammaAnneid& a, const ElementSet& s) {
  std::vector<std::string> out;
  s.for_each([&](ElemId x) { out.push_back(a.A().name(x)); });
  return out;
}

ElementSet lift(const anneid::SubAnneid& sub, const ElementSet& s, std::size_t universe) {
  ElementSet out(universe);
  s.for_each([&](ElemId x) { out.insert(sub.a_map[x]); });
  return out;
}

ElementSet xga(const GammaAnneid& a, ElemId x) {
  ElementSet out(a.size());
  for (ElemId al = 0; al < a.G().size(); ++al)
    for (ElemId y = 0; y < a.size(); ++y) out.insert(a.product(x, al, y));
  return out;
}

ElemId first_member(const ElementSet& s) {
  ElemId out = 0;
  bool found = false;
  s.for_each([&](ElemId x) {
    if (!found && x != 0) {
      out = x;
      found = true;
    }
  });
  return out;
}

}  // namespace

std::string set_name(const GammaAnneid& a, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](ElemId x) {
    out += (first ? "" : ", ") + a.A().name(x);
    first = false;
  });
  return out + "}";
}

bool is_alpha_rqr_fast(const GammaAnneid& a, ElemId z, ElemId alpha) {
  auto req = ideals::witness_requirements(a, {z, alpha});
  return ideals::generated_ideal(a, req, ideals::Side::Right).size() == a.size();
}

RqrCertificate is_alpha_rqr(const GammaAnneid& a, ElemId z, ElemId alpha, const std::vector<ElementSet>& lattice) {
  if (alpha == 0) throw PreconditionError("is_alpha_rqr: alpha must be nonzero");
  RqrCertificate cert{z, alpha, true, std::nullopt};
  for (const auto& i : lattice)
    if (i.size() < a.size() && ideals::is_witness(a, i, {z, alpha})) {
      cert.rqr = false;
      cert.ideal = i;
      break;
    }
  if (cert.rqr != is_alpha_rqr_fast(a, z, alpha))
    throw InvariantViolation("is_alpha_rqr: lattice scan and generated-ideal route disagree at " + a.A().name(z));
  return cert;
}

RqrCertificate is_alpha_rqr(const GammaAnneid& a, ElemId z, ElemId alpha, const ideals::EnumerationBounds& bounds) {
  return is_alpha_rqr(a, z, alpha, ideals::enumerate_right_ideals(a, bounds));
}

bool is_rqr(const GammaAnneid& a, ElemId z) {
  for (ElemId al = 1; al < a.G().size(); ++al)
    if (!is_alpha_rqr_fast(a, z, al)) return false;
  return true;
}

ElementSet rqr_elements(const GammaAnneid& a) {
  ElementSet out(a.size());
  for (ElemId z = 0; z < a.size(); ++z)
    if (is_rqr(a, z)) out.insert(z);
  return out;
}

ElementSet left_rqr_elements(const GammaAnneid& a) { return rqr_elements(a.opposite()); }

ElementSet nilpotent_elements(const GammaAnneid& a) {
  ElementSet out(a.size());
  for (ElemId z = 0; z < a.size(); ++z) {
    bool nil = true;
    for (ElemId al = 1; al < a.G().size() && nil; ++al) {
      ElemId p = z;
      for (std::size_t k = 0; k <= a.size() && p != 0; ++k) p = a.product(p, al, z);
      if (p != 0) nil = false;
    }
    if (nil) out.insert(z);
  }
  return out;
}

ElementSet j_modular(const GammaAnneid& a, const std::vector<ElementSet>& lattice) {
  ElementSet out = ElementSet::full(a.size());
  for (const auto& m : ideals::maximal_right_modular_ideals(a, lattice)) out &= m.ideal;
  return out;
}

ElementSet j_qr(const GammaAnneid& a) {
  ElementSet rqr = rqr_elements(a);
  ElementSet out(a.size());
  for (ElemId x = 0; x < a.size(); ++x)
    if (xga(a, x).is_subset_of(rqr)) out.insert(x);
  return out;
}

ElementSet local_radical(const GammaAnneid& a, GradeId e, ElemId alpha) {
  auto sub = anneid::local_ring_at(a, e, alpha);
  return lift(sub, j_qr(sub.anneid), a.size());
}

ElementSet j_local(const GammaAnneid& a) {
  ElementSet out = ElementSet::full(a.size());
  for (GradeId e = 1; e <= a.grade_count(); ++e)
    for (GradeId d = 1; d <= a.gamma_grade_count(); ++d) {
      if (a.grade_table(e, d, e) != e) continue;
      ElemId alpha = first_member(a.G().grade_class(d));
      ElementSet jl = local_radical(a, e, alpha);
      const ElementSet& ae = a.A().grade_class(e);
      for (ElemId x = 0; x < a.size(); ++x)
        if (out.contains(x) && !(xga(a, x) & ae).is_subset_of(jl)) out.erase(x);
    }
  return out;
}

LargeRadical large_jacobson_radical(const GammaAnneid& a, const RadicalOptions& options) {
  auto lin = anneid::linearize_anneid(a);
  const auto& ring = lin.ring.ring;
  LargeRadical out{ElementSet(a.size()), std::nullopt, ring.r().size()};
  if (ring.r().size() > options.max_linearized_carrier)
    throw ResourceError("large_jacobson_radical: linearization has " + std::to_string(ring.r().size()) +
                        " elements");
  // One-grade view keeps group ids, so A embeds through lin.embed_a directly.
  GammaAnneid view = anneid::one_grade_view(ring);
  ElementSet jr = j_qr(view);
  for (ElemId x = 0; x < a.size(); ++x)
    if (jr.contains(lin.embed_a[x])) out.j_large.insert(x);
  if (ring.r().size() <= options.max_linearized_lattice_carrier) {
    try {
      ideals::EnumerationBounds b = options.bounds;
      b.max_carrier = std::max(b.max_carrier, options.max_linearized_lattice_carrier);
      ElementSet jm = j_modular(view, ideals::enumerate_right_ideals(view, b));
      ElementSet restricted(a.size());
      for (ElemId x = 0; x < a.size(); ++x)
        if (jm.contains(lin.embed_a[x])) restricted.insert(x);
      out.j_linearized = restricted;
    } catch (const ResourceError&) {
    }
  }
  return out;
}

bool RadicalReport::consistent() const {
  for (const auto& ag : agreements)
    if (ag.applicable && !ag.agrees) return false;
  return true;
}

nlohmann::json RadicalReport::to_json(const GammaAnneid& a) const {
  nlohmann::json j;
  j["right_regular"] = right_regular;
  j["left_regular"] = left_regular;
  j["lattice_size"] = lattice_size;
  j["J_modular"] = names_of(a, j_modular);
  j["J_qr"] = names_of(a, j_qr);
  j["J_local"] = names_of(a, j_local);
  j["J_large"] = names_of(a, j_large);
  j["J_linearized"] = j_linearized ? nlohmann::json(names_of(a, *j_linearized)) : nlohmann::json(nullptr);
  j["J_left"] = names_of(a, j_left);
  j["J_qr_is_ideal"] = j_qr_is_ideal;
  j["J_qr_quasi_regular"] = j_qr_quasi_regular;
  auto ags = nlohmann::json::array();
  for (const auto& ag : agreements)
    ags.push_back({{"name", ag.name}, {"applicable", ag.applicable}, {"agrees", ag.agrees}, {"witness", ag.witness}});
  j["agreements"] = ags;
  j["consistent"] = consistent();
  return j;
}

RadicalReport jacobson_radical(const GammaAnneid& a, const RadicalOptions& options) {
  RadicalReport r;
  r.right_regular = anneid::is_regular(a, anneid::Side::Right);
  r.left_regular = anneid::is_regular(a, anneid::Side::Left);
  const bool regular = r.right_regular && r.left_regular;
  auto lattice = ideals::enumerate_right_ideals(a, options.bounds);
  r.lattice_size = lattice.size();
  r.j_modular = j_modular(a, lattice);
  r.j_qr = j_qr(a);
  r.j_local = j_local(a);
  auto large = large_jacobson_radical(a, options);
  r.j_large = large.j_large;
  r.j_linearized = large.j_linearized;
  GammaAnneid op = a.opposite();
  r.j_left = j_modular(op, ideals::enumerate_right_ideals(op, options.bounds));
  r.j_qr_is_ideal = ideals::is_ideal(a, r.j_qr, ideals::Side::TwoSided);
  r.j_qr_quasi_regular = r.j_qr.is_subset_of(rqr_elements(a) & left_rqr_elements(a));

  auto diff = [&](const ElementSet& x, const ElementSet& y) {
    std::vector<std::string> w;
    for (ElemId e = 0; e < a.size(); ++e)
      if (x.contains(e) != y.contains(e)) w.push_back(a.A().name(e));
    return w;
  };
  auto add = [&](std::string name, bool applicable, const ElementSet& x, const ElementSet& y) {
    Agreement ag{std::move(name), applicable, x == y, {}};
    if (!ag.agrees) ag.witness = diff(x, y);
    r.agreements.push_back(std::move(ag));
  };
  add("J_modular=J_qr", r.right_regular, r.j_modular, r.j_qr);
  add("J_local=J_modular", regular, r.j_local, r.j_modular);
  add("J_left=J_modular", regular, r.j_left, r.j_modular);
  {
    Agreement ag{"J_large<=J_modular", true, r.j_large.is_subset_of(r.j_modular), {}};
    if (!ag.agrees) {
      ElementSet out = r.j_large;
      r.j_large.for_each([&](ElemId x) {
        if (r.j_modular.contains(x)) out.erase(x);
      });
      ag.witness = names_of(a, out);
    }
    r.agreements.push_back(std::move(ag));
  }
  if (r.j_linearized) add("J_large=J_linearized", true, r.j_large, *r.j_linearized);
  r.agreements.push_back({"J_qr quasi-regular ideal", regular, r.j_qr_is_ideal && r.j_qr_quasi_regular, {}});
  {
    ElementSet nil = nilpotent_elements(a);
    Agreement ag{"nilpotent=>rqr", regular, nil.is_subset_of(rqr_elements(a)), {}};
    r.agreements.push_back(std::move(ag));
  }
  return r;
}

CheckReport check_regular_rqr_criterion(const GammaAnneid& a, const ideals::EnumerationBounds& bounds) {
  CheckReport rep("rqr criterion");
  auto lattice = ideals::enumerate_right_ideals(a, bounds);
  std::vector<std::string> w;
  for (ElemId z = 0; z < a.size() && w.empty(); ++z)
    for (ElemId al = 1; al < a.G().size() && w.empty(); ++al) {
      bool def = is_alpha_rqr(a, z, al, lattice).rqr;
      bool prop = true;
      GradeId e = a.grade(z);
      if (z != 0 && anneid::is_alpha_idempotent(a, e, al)) {
        auto sub = anneid::local_ring_at(a, e, al);
        ElemId zl = 0, all = 0;
        for (ElemId i = 0; i < sub.a_map.size(); ++i)
          if (sub.a_map[i] == z) zl = i;
        for (ElemId i = 0; i < sub.g_map.size(); ++i)
          if (sub.g_map[i] == al) all = i;
        prop = is_alpha_rqr_fast(sub.anneid, zl, all);
      }
      if (def != prop) w = {a.A().name(z), a.G().name(al)};
    }
  rep.record("dichotomy", w.empty(), w);
  return rep;
}

CheckReport correspondence_at_idempotent(const GammaAnneid& a, GradeId e, ElemId alpha,
                                         const ideals::EnumerationBounds& bounds) {
  if (!anneid::is_alpha_idempotent(a, e, alpha))
    throw PreconditionError("correspondence_at_idempotent: grade is not an alpha-idempotent");
  CheckReport rep("correspondence at idempotent");
  const GradeId d = a.gamma_grade(alpha);
  const ElementSet& ae = a.A().grade_class(e);

  std::vector<ElementSet> big;
  for (const auto& m : ideals::maximal_right_modular_ideals(a, ideals::enumerate_right_ideals(a, bounds))) {
    for (const auto& w : ideals::modularity_witnesses(a, m.ideal))
      if (a.grade(w.u) == e && a.gamma_grade(w.alpha) == d) {
        big.push_back(m.ideal);
        break;
      }
  }
  auto sub = anneid::local_ring_at(a, e, alpha);
  std::vector<ElementSet> small;
  for (const auto& m :
       ideals::maximal_right_modular_ideals(sub.anneid, ideals::enumerate_right_ideals(sub.anneid, bounds)))
    small.push_back(lift(sub, m.ideal, a.size()));

  auto contains = [](const std::vector<ElementSet>& v, const ElementSet& s) {
    for (const auto& x : v)
      if (x == s) return true;
    return false;
  };
  auto hat = [&](const ElementSet& s) {
    ElementSet out(a.size());
    for (ElemId x = 0; x < a.size(); ++x)
      if ((xga(a, x) & ae).is_subset_of(s)) out.insert(x);
    return out;
  };

  std::vector<std::string> w;
  for (const auto& i : big)
    if (w.empty() && !contains(small, i & ae)) w = {set_name(a, i)};
  rep.record("I_e_modular_maximal", w.empty(), w);
  w.clear();
  for (const auto& i : big)
    if (w.empty() && hat(i & ae) != i) w = {set_name(a, i)};
  rep.record("hat_of_I_e", w.empty(), w);
  w.clear();
  for (const auto& s : small)
    if (w.empty() && (hat(s) & ae) != s) w = {set_name(a, s)};
  rep.record("hat_S_cap_Ae", w.empty(), w);
  w.clear();
  for (const auto& s : small)
    if (w.empty() && !contains(big, hat(s))) w = {set_name(a, s)};
  rep.record("hat_S_modular_maximal", w.empty(), w);
  rep.record("bijection", big.size() == small.size(),
             {std::to_string(big.size()) + " ideals of grade e", std::to_string(small.size()) + " in A(e)"});
  return rep;
}

bool check_local_radical(const GammaAnneid& a, GradeId e, ElemId alpha) {
  return local_radical(a, e, alpha) == (j_qr(a) & a.A().grade_class(e));
}

bool check_ideal_radical(const GammaAnneid& a, const ElementSet& i) {
  if (!ideals::is_right_ideal(a, i)) throw PreconditionError("check_ideal_radical: not a right ideal");
  auto sub = anneid::restrict_anneid(a, i, ElementSet::full(a.G().size()));
  ElementSet ji = lift(sub, j_qr(sub.anneid), a.size());
  ElementSet ja = j_qr(a);
  ElementSet k(a.size());
  i.for_each([&](ElemId x) {
    bool in = true;
    for (ElemId al = 0; al < a.G().size() && in; ++al)
      i.for_each([&](ElemId y) {
        if (!ja.contains(a.product(x, al, y))) in = false;
      });
    if (in) k.insert(x);
  });
  if (ji != k) return false;
  if (ideals::is_ideal(a, i, ideals::Side::TwoSided) && ji != (i & ja)) return false;
  return true;
}

}  // namespace ggr::radical
