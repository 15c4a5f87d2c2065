#include "ggr/grading.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ggr/errors.hpp"

namespace ggr::grading {

namespace {

std::string set_name(const FiniteAbelianGroup& g, const std::vector<ElemId>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + g.element_name(xs[i]);
  return out + "}";
}

// Finds a sequence of >= 2 elements of H, pairwise with x_i + x_j outside H,
// summing to zero. Repetition is allowed when x + x is outside H.
std::optional<std::vector<ElemId>> vanishing_nonaddible_sum(const FiniteAbelianGroup& g,
                                                            const ElementSet& h) {
  std::vector<ElemId> nonzero;
  h.for_each([&](ElemId x) {
    if (x != 0) nonzero.push_back(x);
  });
  std::vector<ElemId> chosen;
  std::optional<std::vector<ElemId>> found;
  std::function<void(std::size_t, ElemId)> dfs = [&](std::size_t start, ElemId sum) {
    if (found) return;
    if (chosen.size() >= 2 && sum == 0) {
      found = chosen;
      return;
    }
    if (chosen.size() >= g.size()) return;
    for (std::size_t i = start; i < nonzero.size() && !found; ++i) {
      ElemId y = nonzero[i];
      bool ok = std::none_of(chosen.begin(), chosen.end(),
                             [&](ElemId c) { return h.contains(g.add(c, y)); });
      if (!ok) continue;
      chosen.push_back(y);
      dfs(i, g.add(sum, y));
      chosen.pop_back();
    }
  };
  dfs(0, 0);
  return found;
}

}  // namespace

CheckReport verify_homogeneous_part_axioms(const FiniteAbelianGroup& g, const ElementSet& h) {
  CheckReport r("homogeneous part axioms");
  if (h.universe() != g.size()) throw StructuralError("subset universe does not match group");
  auto hm = h.members();

  r.record("i", h.contains(0), {g.element_name(0)});

  std::vector<std::string> w;
  for (ElemId x : hm)
    if (!h.contains(g.neg(x))) {
      w = {g.element_name(x)};
      break;
    }
  r.record("ii", w.empty(), w);

  w.clear();
  for (ElemId x : hm) {
    for (ElemId y : hm) {
      if (y == 0 || !h.contains(g.add(x, y))) continue;
      for (ElemId z : hm)
        if (h.contains(g.add(y, z)) && !h.contains(g.add(x, z))) {
          w = {g.element_name(x), g.element_name(y), g.element_name(z)};
          break;
        }
      if (!w.empty()) break;
    }
    if (!w.empty()) break;
  }
  r.record("iii", w.empty(), w);

  r.pass("iv", "vacuous: the group is abelian");

  auto span = finabel::subgroup_generate(g, h);
  r.record("v", span.size() == g.size(), {"span " + std::to_string(span.size()) + " of " +
                                          std::to_string(g.size())});

  auto vanishing = vanishing_nonaddible_sum(g, h);
  if (vanishing)
    r.fail("vi", {set_name(g, *vanishing)});
  else
    r.pass("vi");
  return r;
}

Graduation graduation_from_homogeneous_part(const FiniteAbelianGroup& g, const ElementSet& h) {
  std::set<std::vector<ElemId>> seen;
  std::vector<Subgroup> parts;
  h.for_each([&](ElemId a) {
    if (a == 0) return;
    Subgroup comp(g.size());
    h.for_each([&](ElemId x) {
      if (h.contains(g.add(a, x))) comp.insert(x);
    });
    if (seen.insert(comp.members()).second) parts.push_back(std::move(comp));
  });
  return Graduation(g, std::move(parts));
}

CheckReport verify_homogroupoid(const Homogroupoid& h) {
  CheckReport r("homogroupoid");
  const ElemId n = static_cast<ElemId>(h.size());
  const auto U = Homogroupoid::kUndefined;
  auto nm = [&](std::initializer_list<ElemId> xs) {
    std::vector<std::string> out;
    for (ElemId x : xs) out.push_back(h.name(x));
    return out;
  };

  std::vector<std::string> w;
  for (ElemId x = 0; x < n && w.empty(); ++x)
    for (ElemId y = 0; y < n && w.empty(); ++y)
      if (h.addible(x, y) != (h.sum(x, y) != U)) w = nm({x, y});
  r.record("sum_defined_on_addible", w.empty(), w);
  const bool sums_ok = w.empty();

  w.clear();
  for (ElemId x = 0; x < n && w.empty(); ++x)
    if (!h.addible(x, 0) || !h.addible(0, x) || h.sum(x, 0) != x || h.sum(0, x) != x) w = nm({x});
  r.record("i", w.empty(), w);

  w.clear();
  for (ElemId x = 0; x < n && w.empty(); ++x)
    for (ElemId y = 0; y < n && w.empty(); ++y)
      if (h.addible(x, y) != h.addible(y, x) || h.sum(x, y) != h.sum(y, x)) w = nm({x, y});
  r.record("commutative", w.empty(), w);

  w.clear();
  for (ElemId x = 0; x < n && w.empty(); ++x)
    if (!h.addible(x, x)) w = nm({x});
  r.record("ii", w.empty(), w);

  w.clear();
  for (ElemId x = 0; x < n && w.empty(); ++x)
    for (ElemId y = 1; y < n && w.empty(); ++y)
      for (ElemId z = 0; z < n && w.empty(); ++z)
        if (h.addible(x, y) && h.addible(y, z) && !h.addible(x, z)) w = nm({x, y, z});
  r.record("iii", w.empty(), w);

  w.clear();
  std::string note;
  if (!sums_ok) {
    r.fail("iv", {}, "sum table inconsistent with addibility");
  } else {
    for (ElemId a = 1; a < n && w.empty(); ++a) {
      std::vector<ElemId> cls;
      for (ElemId x = 0; x < n; ++x)
        if (h.addible(a, x)) cls.push_back(x);
      auto in_cls = [&](ElemId v) { return v != U && std::find(cls.begin(), cls.end(), v) != cls.end(); };
      for (ElemId x : cls) {
        for (ElemId y : cls) {
          if (!h.addible(x, y) || !in_cls(h.sum(x, y))) {
            w = nm({a, x, y});
            note = "class of " + h.name(a) + " not closed";
            break;
          }
          for (ElemId z : cls) {
            ElemId xy = h.sum(x, y), yz = h.sum(y, z);
            if (!in_cls(yz) || !h.addible(xy, z) || !h.addible(x, yz) || h.sum(xy, z) != h.sum(x, yz)) {
              w = nm({a, x, y, z});
              note = "addition in class of " + h.name(a) + " not associative";
              break;
            }
          }
          if (!w.empty()) break;
        }
        if (!w.empty()) break;
        bool has_inverse = std::any_of(cls.begin(), cls.end(), [&](ElemId y) { return h.sum(x, y) == 0; });
        if (!has_inverse) {
          w = nm({a, x});
          note = "no inverse in class of " + h.name(a);
          break;
        }
      }
    }
    if (w.empty())
      r.pass("iv", std::to_string(h.grade_count()) + " addibility classes");
    else
      r.fail("iv", w, note);
  }
  return r;
}

Linearization linearize(const Homogroupoid& h) {
  auto report = verify_homogroupoid(h);
  if (!report.passed()) throw StructuralError("linearize: not a homogroupoid\n" + report.to_text());

  std::vector<int> orders;
  std::vector<std::vector<ElemId>> class_members(static_cast<std::size_t>(h.grade_count()) + 1);
  std::vector<finabel::CyclicDecomposition> decs(class_members.size());
  std::vector<std::size_t> offset(class_members.size(), 0);
  for (GradeId g = 1; g <= h.grade_count(); ++g) {
    auto& mem = class_members[static_cast<std::size_t>(g)];
    mem = h.grade_class(g).members();
    std::vector<ElemId> local(h.size(), 0);
    for (std::size_t i = 0; i < mem.size(); ++i) local[mem[i]] = static_cast<ElemId>(i);
    decs[static_cast<std::size_t>(g)] = finabel::cyclic_decomposition(
        mem.size(), [&](ElemId a, ElemId b) { return local[h.sum(mem[a], mem[b])]; });
    offset[static_cast<std::size_t>(g)] = orders.size();
    for (int o : decs[static_cast<std::size_t>(g)].orders) orders.push_back(o);
  }
  FiniteAbelianGroup group(orders);

  std::vector<ElemId> embed(h.size(), 0);
  std::vector<Subgroup> parts;
  for (GradeId g = 1; g <= h.grade_count(); ++g) {
    const auto gi = static_cast<std::size_t>(g);
    const auto& dec = decs[gi];
    Subgroup comp(group.size());
    for (std::size_t i = 0; i < class_members[gi].size(); ++i) {
      std::vector<int> residues(orders.size(), 0);
      auto coords = finabel::FiniteAbelianGroup(dec.orders).decode(dec.to_group[i]).residues;
      std::copy(coords.begin(), coords.end(), residues.begin() + static_cast<long>(offset[gi]));
      ElemId id = group.encode(residues);
      comp.insert(id);
      embed[class_members[gi][i]] = id;
    }
    parts.push_back(std::move(comp));
  }
  Graduation grad(group, std::move(parts));
  return {std::move(group), std::move(grad), std::move(embed)};
}

bool roundtrip_check(const Homogroupoid& h) {
  std::optional<Linearization> maybe;
  try {
    maybe = linearize(h);
  } catch (const StructuralError&) {
    return false;
  }
  const Linearization& lin = *maybe;
  auto hp = homogeneous_part(lin.graduation);
  if (hp.carrier.size() != h.size()) return false;
  ElementSet image(lin.group.size());
  for (ElemId x = 0; x < h.size(); ++x) {
    if (!hp.carrier.contains(lin.embed[x]) || image.contains(lin.embed[x])) return false;
    image.insert(lin.embed[x]);
  }
  for (ElemId x = 0; x < h.size(); ++x)
    for (ElemId y = 0; y < h.size(); ++y) {
      ElemId s = lin.group.add(lin.embed[x], lin.embed[y]);
      bool addible_image = hp.carrier.contains(s);
      if (addible_image != h.addible(x, y)) return false;
      if (addible_image && lin.embed[h.sum(x, y)] != s) return false;
      if (x != 0 && y != 0 && (hp.grade_of[lin.embed[x]] == hp.grade_of[lin.embed[y]]) !=
                                  (h.grade_of(x) == h.grade_of(y)))
        return false;
    }
  return true;
}

CheckReport verify_homomorphism(const PartialMap& f) {
  CheckReport r("homogroupoid map");
  if (!f.source || !f.target || f.value.size() != f.source->size())
    throw StructuralError("partial map must be total on its source");
  const auto& s = *f.source;
  const auto& t = *f.target;
  for (ElemId v : f.value)
    if (v >= t.size()) throw StructuralError("partial map value outside target");

  std::vector<std::string> w;
  for (ElemId x = 0; x < s.size() && w.empty(); ++x)
    for (ElemId y = 0; y < s.size() && w.empty(); ++y) {
      if (!s.addible(x, y)) continue;
      ElemId fx = f.value[x], fy = f.value[y];
      if (!t.addible(fx, fy) || f.value[s.sum(x, y)] != t.sum(fx, fy)) w = {s.name(x), s.name(y)};
    }
  r.record("quasihomomorphism", w.empty(), w);
  const bool quasi = w.empty();

  w.clear();
  for (ElemId x = 0; x < s.size() && w.empty(); ++x)
    for (ElemId y = 0; y < s.size() && w.empty(); ++y) {
      ElemId fx = f.value[x], fy = f.value[y];
      if (fx != 0 && fy != 0 && t.addible(fx, fy) && !s.addible(x, y)) w = {s.name(x), s.name(y)};
    }
  if (!quasi)
    r.fail("homomorphism", w, "not a quasihomomorphism");
  else
    r.record("homomorphism", w.empty(), w);
  return r;
}

std::vector<Graduation> enumerate_graduations(const FiniteAbelianGroup& g, std::size_t bound) {
  auto subgroups = finabel::enumerate_subgroups(g, bound);
  std::vector<Subgroup> nontrivial;
  for (auto& s : subgroups)
    if (s.size() > 1) nontrivial.push_back(s);

  std::vector<Graduation> out;
  std::vector<Subgroup> chosen;
  std::function<void(std::size_t, const ElementSet&)> dfs = [&](std::size_t start, const ElementSet& span) {
    if (span.size() == g.size()) {
      out.emplace_back(g, chosen);
      return;
    }
    for (std::size_t i = start; i < nontrivial.size(); ++i) {
      const auto& s = nontrivial[i];
      if (span.size() * s.size() > g.size() || g.size() % (span.size() * s.size()) != 0) continue;
      ElementSet next(g.size());
      auto sm = s.members();
      span.for_each([&](ElemId a) {
        for (ElemId b : sm) next.insert(g.add(a, b));
      });
      if (next.size() != span.size() * s.size()) continue;
      chosen.push_back(s);
      dfs(i + 1, next);
      chosen.pop_back();
    }
  };
  dfs(0, ElementSet(g.size(), {0}));
  return out;
}

}  // namespace ggr::grading
