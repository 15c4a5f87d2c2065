#include <cctype>
#include <map>
#include <set>

#include "ggr/dsl.hpp"
#include "ggr/errors.hpp"

namespace ggr::dsl {

using anneid::GammaAnneid;
using finabel::FiniteAbelianGroup;
using grading::GradeId;
using grading::Graduation;
using grading::Homogroupoid;

namespace {

constexpr ElemId kMissing = Homogroupoid::kUndefined;

std::string text(const Residues& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s + ")";
}

std::string entry_text(const TableEntry& e) {
  return "(" + text(e.a) + ", " + text(e.b) + ", " + text(e.c) + ") -> " + text(e.value);
}

struct Built {
  FiniteAbelianGroup group;
  std::vector<std::string> names;  // by group id
  std::vector<ElementSet> parts;
};

Built build_group(const GroupSpec& g) {
  Built b{FiniteAbelianGroup(g.orders), {}, {}};
  b.names.resize(b.group.size());
  for (ElemId x = 0; x < b.group.size(); ++x) b.names[x] = x == 0 ? "0" : b.group.element_name(x);
  std::set<ElemId> named;
  for (const auto& a : g.aliases) {
    ElemId id = b.group.encode(a.value);
    if (id != 0 && named.insert(id).second) b.names[id] = a.name;
  }
  for (const auto& c : g.components) {
    ElementSet gens(b.group.size());
    for (const auto& r : c.generators) gens.insert(b.group.encode(r));
    b.parts.push_back(finabel::subgroup_generate(b.group, gens));
  }
  return b;
}

Graduation graduation_of(const Built& b, const std::string& role) {
  if (b.parts.empty()) return Graduation(b.group);
  try {
    return Graduation(b.group, b.parts);
  } catch (const StructuralError& e) {
    throw StructuralError("components of group " + role + " do not form a graduation: " + e.what());
  }
}

struct Carrier {
  Homogroupoid h;
  std::vector<ElemId> to_group;
  std::vector<ElemId> from_group;
};

Carrier carrier_of(const Built& b, const Graduation& grad) {
  Carrier c;
  c.h = Homogroupoid::from_graduation(grad, &c.to_group, &b.names);
  c.from_group.assign(b.group.size(), kMissing);
  for (ElemId i = 0; i < c.to_group.size(); ++i) c.from_group[c.to_group[i]] = i;
  return c;
}

// Table over homogeneous elements. Products with a zero argument default to 0.
std::vector<ElemId> partial_table(const std::vector<TableEntry>& entries, bool def, const char* what,
                                  const Built& b1, const Carrier& c1, const Built& b2, const Carrier& c2,
                                  const Built& b3, const Carrier& c3, const Built& bv, const Carrier& cv) {
  const std::size_t n1 = c1.h.size(), n2 = c2.h.size(), n3 = c3.h.size();
  std::vector<ElemId> t(n1 * n2 * n3, kMissing);
  for (const auto& e : entries) {
    ElemId x = c1.from_group[b1.group.encode(e.a)], y = c2.from_group[b2.group.encode(e.b)],
           z = c3.from_group[b3.group.encode(e.c)], v = cv.from_group[bv.group.encode(e.value)];
    if (x == kMissing || y == kMissing || z == kMissing || v == kMissing)
      throw StructuralError(std::string(what) + " entry is not homogeneous: " + entry_text(e));
    t[(x * n2 + y) * n3 + z] = v;
  }
  for (ElemId x = 0; x < n1; ++x)
    for (ElemId y = 0; y < n2; ++y)
      for (ElemId z = 0; z < n3; ++z) {
        auto& slot = t[(x * n2 + y) * n3 + z];
        if (slot != kMissing) continue;
        if (def || x == 0 || y == 0 || z == 0)
          slot = 0;
        else
          throw StructuralError(std::string("missing ") + what + " entry for (" + c1.h.name(x) + ", " +
                                c2.h.name(y) + ", " + c3.h.name(z) + ") and no default");
      }
  return t;
}

// Table over whole groups; in trilinear mode entries sit on unit vectors.
std::vector<ElemId> full_table(const std::vector<TableEntry>& entries, bool def, bool trilinear, const char* what,
                               const FiniteAbelianGroup& g1, const FiniteAbelianGroup& g2,
                               const FiniteAbelianGroup& g3, const FiniteAbelianGroup& gv) {
  const std::size_t n1 = g1.size(), n2 = g2.size(), n3 = g3.size();
  std::vector<ElemId> t(n1 * n2 * n3, kMissing);
  if (!trilinear) {
    for (const auto& e : entries)
      t[(g1.encode(e.a) * n2 + g2.encode(e.b)) * n3 + g3.encode(e.c)] = gv.encode(e.value);
    for (ElemId x = 0; x < n1; ++x)
      for (ElemId y = 0; y < n2; ++y)
        for (ElemId z = 0; z < n3; ++z) {
          auto& slot = t[(x * n2 + y) * n3 + z];
          if (slot != kMissing) continue;
          if (!def && x != 0 && y != 0 && z != 0)
            throw StructuralError(std::string("missing ") + what + " entry for (" + g1.element_name(x) + ", " +
                                  g2.element_name(y) + ", " + g3.element_name(z) + ") and no default");
          slot = 0;
        }
    return t;
  }
  auto unit_index = [](const Residues& r) {
    int at = -1;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r[i] == 0) continue;
      if (r[i] != 1 || at >= 0) return -1;
      at = static_cast<int>(i);
    }
    return at;
  };
  const std::size_t k1 = g1.rank(), k2 = g2.rank(), k3 = g3.rank();
  std::vector<ElemId> basis(k1 * k2 * k3, kMissing);
  for (const auto& e : entries) {
    int i = unit_index(e.a), j = unit_index(e.b), k = unit_index(e.c);
    if (i < 0 || j < 0 || k < 0)
      throw StructuralError(std::string("trilinear ") + what + " entry is not on unit vectors: " + entry_text(e));
    basis[(static_cast<std::size_t>(i) * k2 + static_cast<std::size_t>(j)) * k3 + static_cast<std::size_t>(k)] =
        gv.encode(e.value);
  }
  for (auto& v : basis) {
    if (v != kMissing) continue;
    if (!def) throw StructuralError(std::string("missing trilinear ") + what + " entry and no default");
    v = 0;
  }
  for (ElemId x = 0; x < n1; ++x) {
    auto rx = g1.decode(x).residues;
    for (ElemId y = 0; y < n2; ++y) {
      auto ry = g2.decode(y).residues;
      for (ElemId z = 0; z < n3; ++z) {
        auto rz = g3.decode(z).residues;
        ElemId acc = 0;
        for (std::size_t i = 0; i < k1; ++i)
          for (std::size_t j = 0; j < k2; ++j)
            for (std::size_t k = 0; k < k3; ++k) {
              long long c = static_cast<long long>(rx[i]) * ry[j] * rz[k];
              if (c) acc = gv.add(acc, gv.multiple(c, basis[(i * k2 + j) * k3 + k]));
            }
        t[(x * n2 + y) * n3 + z] = acc;
      }
    }
  }
  return t;
}

struct AnneidParts {
  Built r, gamma;
  Graduation grad_r, grad_g;
  Carrier a, g;
};

AnneidParts anneid_parts(const StructureSpec& spec) {
  Built r = build_group(*spec.group("R"));
  Built gm = build_group(*spec.group("Gamma"));
  Graduation gr = graduation_of(r, "R");
  Graduation gg = graduation_of(gm, "Gamma");
  Carrier a = carrier_of(r, gr), g = carrier_of(gm, gg);
  return {std::move(r), std::move(gm), std::move(gr), std::move(gg), std::move(a), std::move(g)};
}

GammaAnneid build_anneid(const StructureSpec& spec, const AnneidParts& p) {
  auto triple = partial_table(spec.triples, spec.default_triple, "triple", p.r, p.a, p.gamma, p.g, p.r, p.a,
                              p.r, p.a);
  std::optional<std::vector<ElemId>> cotriple;
  if (!spec.cotriples.empty() || spec.default_cotriple)
    cotriple = partial_table(spec.cotriples, spec.default_cotriple, "cotriple", p.gamma, p.g, p.r, p.a, p.gamma,
                             p.g, p.gamma, p.g);
  return GammaAnneid(p.a.h, p.g.h, std::move(triple), std::move(cotriple));
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '+' || c == '\'')) return false;
  return true;
}

Residues residues(const FiniteAbelianGroup& g, ElemId x) { return g.decode(x).residues; }

// Greedy generating set of a subgroup, in id order.
std::vector<Residues> generators(const FiniteAbelianGroup& g, const ElementSet& s) {
  std::vector<Residues> out;
  ElementSet span(g.size());
  span.insert(0);
  s.for_each([&](ElemId x) {
    if (span.contains(x)) return;
    out.push_back(residues(g, x));
    ElementSet gens(g.size());
    for (const auto& r : out) gens.insert(g.encode(r));
    span = finabel::subgroup_generate(g, gens);
  });
  return out;
}

GroupSpec group_spec(const std::string& role, const Graduation& grad, const std::vector<std::string>* names) {
  const auto& g = grad.group();
  GroupSpec out{role, g.cyclic_orders(), {}, {}};
  if (names) {
    std::set<std::string> used{"x"};
    for (ElemId x = 1; x < g.size() && x < names->size(); ++x) {
      const auto& n = (*names)[x];
      if (is_identifier(n) && used.insert(n).second) out.aliases.push_back({n, residues(g, x)});
    }
  }
  for (GradeId c = 1; c <= grad.grade_count(); ++c)
    out.components.push_back({role + std::to_string(c), generators(g, grad.component(c))});
  return out;
}

}  // namespace

Elaborated elaborate(const StructureSpec& spec) {
  Elaborated out;
  out.kind = spec.kind;
  out.name = spec.name;
  out.report = CheckReport(spec.name.empty() ? kind_name(spec.kind) : spec.name);
  switch (spec.kind) {
    case Kind::Group: {
      Built b = build_group(spec.groups.at(0));
      out.group = b.group;
      out.report.pass("group");
      break;
    }
    case Kind::Graduation: {
      Built b = build_group(spec.groups.at(0));
      out.group = b.group;
      ElementSet h(b.group.size());
      for (const auto& p : b.parts) h |= p;
      h.insert(0);
      out.report.merge(grading::verify_homogeneous_part_axioms(b.group, h), "H");
      bool direct = finabel::is_internal_direct_sum(b.group, b.parts);
      out.report.record("direct_sum", direct);
      if (direct) out.graduation = Graduation(b.group, b.parts);
      break;
    }
    case Kind::GammaRing: {
      Built r = build_group(*spec.group("R"));
      Built gm = build_group(*spec.group("Gamma"));
      out.group = r.group;
      auto triple =
          full_table(spec.triples, spec.default_triple, spec.trilinear, "triple", r.group, gm.group, r.group, r.group);
      std::optional<std::vector<ElemId>> cotriple;
      if (!spec.cotriples.empty() || spec.default_cotriple)
        cotriple = full_table(spec.cotriples, spec.default_cotriple, spec.trilinear, "cotriple", gm.group, r.group,
                              gm.group, gm.group);
      gammaring::GammaRing ring(r.group, gm.group, std::move(triple), std::move(cotriple));
      auto rep = gammaring::verify_gamma_ring(ring);
      out.report.merge(rep, "gammaring");
      Graduation gr = graduation_of(r, "R");
      Graduation gg = graduation_of(gm, "Gamma");
      gammaring::GradedGammaRing graded{ring, gr, gg};
      if (!rep.passed()) {
        out.report.not_applicable("graded", "not a gamma ring");
        out.graded = std::move(graded);
        break;
      }
      auto gc = gammaring::verify_graded(graded);
      out.report.merge(gc.report, "graded");
      if (gc.report.passed()) {
        auto view = anneid::anneid_from_graded(graded, &r.names, &gm.names);
        out.report.merge(anneid::verify_anneid(view.anneid), "anneid");
        anneid::SemihomogeneousQuadruple q{ring, grading::homogeneous_part(gr).carrier,
                                           grading::homogeneous_part(gg).carrier};
        out.report.merge(anneid::verify_semihomogeneous(q), "semihomogeneous");
        out.anneid = std::move(view.anneid);
      }
      out.graded = std::move(graded);
      break;
    }
    case Kind::Anneid: {
      auto p = anneid_parts(spec);
      GammaAnneid a = build_anneid(spec, p);
      out.report.merge(anneid::verify_anneid(a), "anneid");
      out.anneid = std::move(a);
      break;
    }
    case Kind::Moduloid: {
      auto p = anneid_parts(spec);
      GammaAnneid a = build_anneid(spec, p);
      out.report.merge(anneid::verify_anneid(a), "anneid");
      Built m = build_group(*spec.group("M"));
      Graduation gm = graduation_of(m, "M");
      Carrier cm = carrier_of(m, gm);
      auto action = partial_table(spec.actions, spec.default_action, "action", m, cm, p.gamma, p.g, p.r, p.a, m, cm);
      moduloid::Moduloid mod(cm.h, a, std::move(action));
      out.report.merge(moduloid::verify_moduloid(mod), "moduloid");
      out.anneid = std::move(a);
      out.moduloid = std::move(mod);
      break;
    }
  }
  return out;
}

StructureSpec spec_from_anneid(const GammaAnneid& a, const std::string& name) {
  auto lin = anneid::linearize_anneid(a);
  const auto& R = lin.ring.ring.r();
  const auto& Gm = lin.ring.ring.gamma();
  std::vector<std::string> r_names(R.size()), g_names(Gm.size());
  for (ElemId x = 0; x < a.size(); ++x) r_names[lin.embed_a[x]] = a.A().name(x);
  for (ElemId x = 0; x < a.G().size(); ++x) g_names[lin.embed_g[x]] = a.G().name(x);

  StructureSpec s;
  s.kind = Kind::Anneid;
  s.name = name;
  s.groups.push_back(group_spec("R", lin.ring.grad_r, &r_names));
  s.groups.push_back(group_spec("Gamma", lin.ring.grad_gamma, &g_names));
  for (ElemId x = 1; x < a.size(); ++x)
    for (ElemId al = 1; al < a.G().size(); ++al)
      for (ElemId y = 1; y < a.size(); ++y) {
        ElemId v = a.product(x, al, y);
        if (v != 0)
          s.triples.push_back({residues(R, lin.embed_a[x]), residues(Gm, lin.embed_g[al]),
                               residues(R, lin.embed_a[y]), residues(R, lin.embed_a[v])});
      }
  s.default_triple = true;
  if (a.is_nobusawa()) {
    for (ElemId al = 1; al < a.G().size(); ++al)
      for (ElemId x = 1; x < a.size(); ++x)
        for (ElemId be = 1; be < a.G().size(); ++be) {
          ElemId v = a.coproduct(al, x, be);
          if (v != 0)
            s.cotriples.push_back({residues(Gm, lin.embed_g[al]), residues(R, lin.embed_a[x]),
                                   residues(Gm, lin.embed_g[be]), residues(Gm, lin.embed_g[v])});
        }
    s.default_cotriple = true;
  }
  std::sort(s.triples.begin(), s.triples.end());
  std::sort(s.cotriples.begin(), s.cotriples.end());
  return s;
}

StructureSpec spec_from_graded(const gammaring::GradedGammaRing& g, const std::string& name,
                               const std::vector<std::string>* r_names,
                               const std::vector<std::string>* gamma_names, bool trilinear) {
  const auto& ring = g.ring;
  const auto& R = ring.r();
  const auto& Gm = ring.gamma();
  StructureSpec s;
  s.kind = Kind::GammaRing;
  s.name = name;
  s.trilinear = trilinear;
  s.groups.push_back(group_spec("R", g.grad_r, r_names));
  s.groups.push_back(group_spec("Gamma", g.grad_gamma, gamma_names));
  if (!trilinear) {
    for (ElemId x = 1; x < R.size(); ++x)
      for (ElemId a = 1; a < Gm.size(); ++a)
        for (ElemId y = 1; y < R.size(); ++y)
          if (ElemId v = ring.product(x, a, y); v != 0)
            s.triples.push_back({residues(R, x), residues(Gm, a), residues(R, y), residues(R, v)});
    s.default_triple = true;
    if (ring.is_nobusawa()) {
      for (ElemId a = 1; a < Gm.size(); ++a)
        for (ElemId x = 1; x < R.size(); ++x)
          for (ElemId b = 1; b < Gm.size(); ++b)
            if (ElemId v = ring.coproduct(a, x, b); v != 0)
              s.cotriples.push_back({residues(Gm, a), residues(R, x), residues(Gm, b), residues(Gm, v)});
      s.default_cotriple = true;
    }
    return s;
  }
  auto unit = [](const FiniteAbelianGroup& grp, std::size_t i) {
    Residues r(grp.rank(), 0);
    r[i] = 1;
    return r;
  };
  for (std::size_t i = 0; i < R.rank(); ++i)
    for (std::size_t j = 0; j < Gm.rank(); ++j)
      for (std::size_t k = 0; k < R.rank(); ++k) {
        ElemId v = ring.product(R.encode(unit(R, i)), Gm.encode(unit(Gm, j)), R.encode(unit(R, k)));
        if (v != 0) s.triples.push_back({unit(R, i), unit(Gm, j), unit(R, k), residues(R, v)});
      }
  s.default_triple = true;
  if (ring.is_nobusawa()) {
    for (std::size_t i = 0; i < Gm.rank(); ++i)
      for (std::size_t j = 0; j < R.rank(); ++j)
        for (std::size_t k = 0; k < Gm.rank(); ++k) {
          ElemId v = ring.coproduct(Gm.encode(unit(Gm, i)), R.encode(unit(R, j)), Gm.encode(unit(Gm, k)));
          if (v != 0) s.cotriples.push_back({unit(Gm, i), unit(R, j), unit(Gm, k), residues(Gm, v)});
        }
    s.default_cotriple = true;
  }
  std::sort(s.triples.begin(), s.triples.end());
  std::sort(s.cotriples.begin(), s.cotriples.end());
  return s;
}

}  // namespace ggr::dsl
