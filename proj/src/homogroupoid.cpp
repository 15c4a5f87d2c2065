#include <algorithm>
#include <map>
#include <numeric>

#include "ggr/errors.hpp"
#include "ggr/grading.hpp"

namespace ggr::grading {

Graduation::Graduation(FiniteAbelianGroup group) : group_(std::move(group)) {
  components_.push_back(Subgroup(group_.size(), {0}));
  if (group_.size() > 1) components_.push_back(ElementSet::full(group_.size()));
  finish();
}

Graduation::Graduation(FiniteAbelianGroup group, std::vector<Subgroup> parts)
    : group_(std::move(group)) {
  std::vector<Subgroup> strict;
  for (auto& p : parts) {
    if (p.universe() != group_.size())
      throw StructuralError("graduation component has the wrong universe");
    if (!finabel::is_subgroup(group_, p))
      throw StructuralError("graduation component is not a subgroup");
    if (p.size() > 1) strict.push_back(std::move(p));
  }
  if (!finabel::is_internal_direct_sum(group_, strict))
    throw StructuralError("components do not form an internal direct sum of " + group_.describe());
  std::sort(strict.begin(), strict.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.members()[1] < b.members()[1];
  });
  components_.push_back(Subgroup(group_.size(), {0}));
  for (auto& s : strict) components_.push_back(std::move(s));
  finish();
}

void Graduation::finish() {
  const std::size_t n = group_.size();
  grade_of_.assign(n, -1);
  grade_of_[0] = kZeroGrade;
  for (std::size_t g = 1; g < components_.size(); ++g)
    components_[g].for_each([&](ElemId x) {
      if (x != 0) grade_of_[x] = static_cast<int>(g);
    });
  decomposition_.assign(n, std::vector<ElemId>(components_.size(), 0));
  // Walk the product of components; every group element is reached once.
  std::vector<std::pair<ElemId, std::vector<ElemId>>> partial{{0, std::vector<ElemId>(components_.size(), 0)}};
  for (std::size_t g = 1; g < components_.size(); ++g) {
    std::vector<std::pair<ElemId, std::vector<ElemId>>> next;
    auto members = components_[g].members();
    for (const auto& [sum, parts] : partial)
      for (ElemId x : members) {
        auto p = parts;
        p[g] = x;
        next.emplace_back(group_.add(sum, x), std::move(p));
      }
    partial = std::move(next);
  }
  for (auto& [sum, parts] : partial) decomposition_[sum] = std::move(parts);
}

std::optional<GradeId> Graduation::grade_of(ElemId x) const {
  int g = grade_of_.at(x);
  if (g < 0) return std::nullopt;
  return g;
}

bool weakly_equivalent(const Graduation& a, const Graduation& b) {
  if (!(a.group() == b.group())) return false;
  auto ca = a.strict_components(), cb = b.strict_components();
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  return ca == cb;
}

HomogeneousPart homogeneous_part(const Graduation& g) {
  HomogeneousPart hp{ElementSet(g.group().size()), std::vector<GradeId>(g.group().size(), -1)};
  for (GradeId d = 0; d <= g.grade_count(); ++d)
    g.component(d).for_each([&](ElemId x) {
      hp.carrier.insert(x);
      hp.grade_of[x] = x == 0 ? kZeroGrade : d;
    });
  return hp;
}

Homogroupoid::Homogroupoid()
    : Homogroupoid({"0"}, std::vector<char>{1}, std::vector<ElemId>{0}) {}

Homogroupoid::Homogroupoid(std::vector<std::string> names, std::vector<char> addible,
                           std::vector<ElemId> sum)
    : names_(std::move(names)), addible_(std::move(addible)), sum_(std::move(sum)) {
  const std::size_t n = names_.size();
  if (n == 0) throw StructuralError("homogroupoid carrier must contain 0");
  if (addible_.size() != n * n || sum_.size() != n * n)
    throw StructuralError("homogroupoid tables must be |H| x |H|");
  for (ElemId v : sum_)
    if (v != kUndefined && v >= n) throw StructuralError("homogroupoid sum out of range");
  derive();
}

void Homogroupoid::derive() {
  const std::size_t n = size();
  neg_.assign(n, kUndefined);
  for (ElemId x = 0; x < n; ++x)
    for (ElemId y = 0; y < n; ++y)
      if (addible(x, y) && sum(x, y) == 0) {
        neg_[x] = y;
        break;
      }
  std::vector<ElemId> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](ElemId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (ElemId x = 1; x < n; ++x)
    for (ElemId y = x + 1; y < n; ++y)
      if (addible(x, y) || addible(y, x)) {
        ElemId a = root(x), b = root(y);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  std::map<ElemId, GradeId> grade_by_root;
  grade_of_.assign(n, kZeroGrade);
  classes_.assign(1, ElementSet(n, {0}));
  for (ElemId x = 1; x < n; ++x) {
    ElemId r = root(x);
    auto [it, inserted] = grade_by_root.emplace(r, static_cast<GradeId>(classes_.size()));
    if (inserted) classes_.push_back(ElementSet(n, {0}));
    grade_of_[x] = it->second;
    classes_[static_cast<std::size_t>(it->second)].insert(x);
  }
}

std::optional<ElemId> Homogroupoid::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<ElemId>(it - names_.begin());
}

ElemId Homogroupoid::difference(ElemId x, ElemId y) const {
  ElemId ny = neg(y);
  if (ny == kUndefined || !addible(x, ny)) return kUndefined;
  return sum(x, ny);
}

ElemId Homogroupoid::multiple(long long n, ElemId x) const {
  if (x == 0 || n == 0) return 0;
  ElemId base = x;
  if (n < 0) {
    base = neg(x);
    n = -n;
    if (base == kUndefined) throw StructuralError("multiple: element has no negative");
  }
  std::size_t order = 1;
  for (ElemId y = base; y != 0; y = sum(y, base)) {
    if (y == kUndefined || ++order > size()) throw StructuralError("multiple: class is not a group");
  }
  n %= static_cast<long long>(order);
  ElemId acc = 0;
  for (long long i = 0; i < n; ++i) acc = sum(acc, base);
  return acc;
}

Homogroupoid Homogroupoid::from_subset(const FiniteAbelianGroup& group, const ElementSet& subset,
                                       std::vector<ElemId>* map_out,
                                       const std::vector<std::string>* names) {
  std::vector<ElemId> ids{0};
  subset.for_each([&](ElemId x) {
    if (x != 0) ids.push_back(x);
  });
  const std::size_t n = ids.size();
  std::vector<ElemId> index(group.size(), kUndefined);
  for (std::size_t i = 0; i < n; ++i) index[ids[i]] = static_cast<ElemId>(i);
  std::vector<std::string> carrier_names;
  for (ElemId x : ids) carrier_names.push_back(names ? (*names)[x] : group.element_name(x));
  std::vector<char> addible(n * n, 0);
  std::vector<ElemId> sum(n * n, kUndefined);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ElemId s = group.add(ids[i], ids[j]);
      if (index[s] != kUndefined) {
        addible[i * n + j] = 1;
        sum[i * n + j] = index[s];
      }
    }
  if (map_out) *map_out = ids;
  return Homogroupoid(std::move(carrier_names), std::move(addible), std::move(sum));
}

Homogroupoid Homogroupoid::from_graduation(const Graduation& g, std::vector<ElemId>* map_out,
                                           const std::vector<std::string>* names) {
  return from_subset(g.group(), homogeneous_part(g).carrier, map_out, names);
}

Homogroupoid subhomogroupoid(const Homogroupoid& h, const ElementSet& subset,
                             std::vector<ElemId>* map_out) {
  if (!subset.contains(0)) throw StructuralError("subhomogroupoid must contain 0");
  std::vector<ElemId> ids{0};
  subset.for_each([&](ElemId x) {
    if (x != 0) ids.push_back(x);
  });
  const std::size_t m = ids.size();
  std::vector<ElemId> index(h.size(), Homogroupoid::kUndefined);
  for (std::size_t i = 0; i < m; ++i) index[ids[i]] = static_cast<ElemId>(i);
  std::vector<std::string> names;
  for (ElemId x : ids) names.push_back(h.name(x));
  std::vector<char> addible(m * m, 0);
  std::vector<ElemId> sum(m * m, Homogroupoid::kUndefined);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (!h.addible(ids[i], ids[j])) continue;
      ElemId s = h.sum(ids[i], ids[j]);
      if (s == Homogroupoid::kUndefined || index[s] == Homogroupoid::kUndefined)
        throw StructuralError("subset is not closed under addible sums");
      addible[i * m + j] = 1;
      sum[i * m + j] = index[s];
    }
  if (map_out) *map_out = ids;
  return Homogroupoid(std::move(names), std::move(addible), std::move(sum));
}

Quotient quotient(const Homogroupoid& h, const ElementSet& k) {
  const std::size_t n = h.size();
  Quotient q;
  q.projection.assign(n, 0);
  std::vector<ElemId> rep_of(n, 0);
  for (ElemId x = 1; x < n; ++x) {
    if (k.contains(x)) continue;
    ElemId best = x;
    h.grade_class(h.grade_of(x)).for_each([&](ElemId y) {
      if (k.contains(y)) best = std::min(best, h.sum(x, y));
    });
    rep_of[x] = best;
  }
  q.representative.push_back(0);
  std::vector<ElemId> qid(n, Homogroupoid::kUndefined);
  for (ElemId x = 1; x < n; ++x)
    if (!k.contains(x) && rep_of[x] == x) {
      qid[x] = static_cast<ElemId>(q.representative.size());
      q.representative.push_back(x);
    }
  for (ElemId x = 1; x < n; ++x)
    if (!k.contains(x)) q.projection[x] = qid[rep_of[x]];

  const std::size_t m = q.representative.size();
  std::vector<std::string> names{h.name(0)};
  for (std::size_t i = 1; i < m; ++i) names.push_back("[" + h.name(q.representative[i]) + "]");
  std::vector<char> addible(m * m, 0);
  std::vector<ElemId> sum(m * m, Homogroupoid::kUndefined);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      ElemId a = q.representative[i], b = q.representative[j];
      if (!h.addible(a, b)) continue;
      addible[i * m + j] = 1;
      sum[i * m + j] = q.projection[h.sum(a, b)];
    }
  q.carrier = Homogroupoid(std::move(names), std::move(addible), std::move(sum));
  return q;
}

}  // namespace ggr::grading
