#include "ggr/finabel.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

#include "ggr/errors.hpp"

namespace ggr::finabel {

namespace {
constexpr std::size_t kMaxGroupSize = std::size_t{1} << 22;
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> cyclic_orders)
    : orders_(std::move(cyclic_orders)), strides_(orders_.size(), 1) {
  for (int n : orders_) {
    if (n < 2) throw StructuralError("cyclic factor order must be >= 2, got " + std::to_string(n));
    size_ *= static_cast<std::size_t>(n);
    if (size_ > kMaxGroupSize) throw ResourceError("group too large: " + describe());
  }
  for (std::size_t i = orders_.size(); i-- > 1;)
    strides_[i - 1] = strides_[i] * static_cast<std::size_t>(orders_[i]);
}

ElemId FiniteAbelianGroup::add(ElemId x, ElemId y) const {
  std::size_t out = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const auto n = static_cast<std::size_t>(orders_[i]);
    std::size_t a = (x / strides_[i]) % n;
    std::size_t b = (y / strides_[i]) % n;
    out += ((a + b) % n) * strides_[i];
  }
  return static_cast<ElemId>(out);
}

ElemId FiniteAbelianGroup::neg(ElemId x) const {
  std::size_t out = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const auto n = static_cast<std::size_t>(orders_[i]);
    std::size_t a = (x / strides_[i]) % n;
    out += ((n - a) % n) * strides_[i];
  }
  return static_cast<ElemId>(out);
}

ElemId FiniteAbelianGroup::multiple(long long n, ElemId x) const {
  std::size_t out = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const long long m = orders_[i];
    long long a = static_cast<long long>((x / strides_[i]) % static_cast<std::size_t>(m));
    long long r = ((a * (n % m)) % m + m) % m;
    out += static_cast<std::size_t>(r) * strides_[i];
  }
  return static_cast<ElemId>(out);
}

std::size_t FiniteAbelianGroup::order_of(ElemId x) const {
  std::size_t k = 1;
  for (ElemId y = x; y != 0; y = add(y, x)) ++k;
  return k;
}

GroupElement FiniteAbelianGroup::add(const GroupElement& x, const GroupElement& y) const {
  return decode(add(encode(x), encode(y)));
}

ElemId FiniteAbelianGroup::encode(const std::vector<int>& residues) const {
  if (residues.size() != orders_.size())
    throw StructuralError("element has " + std::to_string(residues.size()) +
                          " components, group " + describe() + " needs " +
                          std::to_string(orders_.size()));
  std::size_t out = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    int r = ((residues[i] % orders_[i]) + orders_[i]) % orders_[i];
    out += static_cast<std::size_t>(r) * strides_[i];
  }
  return static_cast<ElemId>(out);
}

GroupElement FiniteAbelianGroup::decode(ElemId id) const {
  GroupElement e;
  e.residues.reserve(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i)
    e.residues.push_back(static_cast<int>((id / strides_[i]) % static_cast<std::size_t>(orders_[i])));
  return e;
}

std::string FiniteAbelianGroup::element_name(ElemId id) const {
  std::ostringstream os;
  os << '(';
  auto e = decode(id);
  for (std::size_t i = 0; i < e.residues.size(); ++i) os << (i ? "," : "") << e.residues[i];
  os << ')';
  return os.str();
}

std::string FiniteAbelianGroup::describe() const {
  if (orders_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < orders_.size(); ++i) os << (i ? " x " : "") << 'Z' << orders_[i];
  return os.str();
}

Subgroup subgroup_generate(const FiniteAbelianGroup& g, const ElementSet& gens) {
  Subgroup s(g.size(), {0});
  std::vector<ElemId> frontier{0};
  auto gen_list = gens.members();
  while (!frontier.empty()) {
    ElemId x = frontier.back();
    frontier.pop_back();
    for (ElemId h : gen_list) {
      ElemId y = g.add(x, h);
      if (!s.contains(y)) {
        s.insert(y);
        frontier.push_back(y);
      }
    }
  }
  return s;
}

bool is_subgroup(const FiniteAbelianGroup& g, const ElementSet& s) {
  if (!s.contains(0)) return false;
  auto m = s.members();
  for (ElemId x : m)
    for (ElemId y : m)
      if (!s.contains(g.sub(x, y))) return false;
  return true;
}

std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& g, std::size_t bound) {
  if (g.size() > bound)
    throw ResourceError("enumerate_subgroups: |G| = " + std::to_string(g.size()) +
                        " exceeds bound " + std::to_string(bound));
  std::unordered_set<Subgroup, ElementSetHash> seen;
  std::vector<Subgroup> work{Subgroup(g.size(), {0})};
  seen.insert(work.front());
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (ElemId x = 0; x < g.size(); ++x) {
      if (work[i].contains(x)) continue;
      Subgroup gens = work[i];
      gens.insert(x);
      Subgroup next = subgroup_generate(g, gens);
      if (seen.insert(next).second) work.push_back(std::move(next));
    }
  }
  std::sort(work.begin(), work.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return work;
}

bool is_internal_direct_sum(const FiniteAbelianGroup& g, const std::vector<Subgroup>& parts) {
  std::size_t product = 1;
  for (const auto& p : parts) {
    product *= p.size();
    if (product > g.size()) return false;
  }
  if (product != g.size()) return false;
  // The sum map is injective iff partial sums never collide.
  ElementSet reached(g.size(), {0});
  for (const auto& p : parts) {
    ElementSet next(g.size());
    std::size_t expected = reached.size() * p.size();
    auto pm = p.members();
    reached.for_each([&](ElemId r) {
      for (ElemId x : pm) next.insert(g.add(r, x));
    });
    if (next.size() != expected) return false;
    reached = std::move(next);
  }
  return true;
}

namespace {

struct DecompositionSearch {
  std::size_t n;
  const std::function<ElemId(ElemId, ElemId)>& add;
  std::vector<std::size_t> order;

  std::vector<ElemId> cyclic(ElemId g) const {
    std::vector<ElemId> out{0};
    for (ElemId y = g; y != 0; y = add(y, g)) out.push_back(y);
    return out;
  }

  bool search(const ElementSet& span, std::vector<ElemId>& basis) const {
    if (span.size() == n) return true;
    std::vector<ElemId> candidates;
    for (ElemId x = 0; x < n; ++x) {
      if (span.contains(x)) continue;
      auto c = cyclic(x);
      bool trivial = std::all_of(c.begin() + 1, c.end(), [&](ElemId y) { return !span.contains(y); });
      if (trivial) candidates.push_back(x);
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](ElemId a, ElemId b) { return order[a] > order[b]; });
    for (ElemId x : candidates) {
      ElementSet next(n);
      auto c = cyclic(x);
      span.for_each([&](ElemId s) {
        for (ElemId y : c) next.insert(add(s, y));
      });
      if (next.size() != span.size() * c.size()) continue;
      basis.push_back(x);
      if (search(next, basis)) return true;
      basis.pop_back();
    }
    return false;
  }
};

}  // namespace

CyclicDecomposition cyclic_decomposition(std::size_t n,
                                         const std::function<ElemId(ElemId, ElemId)>& add) {
  if (n == 0) throw StructuralError("cyclic_decomposition: empty carrier");
  DecompositionSearch s{n, add, std::vector<std::size_t>(n, 1)};
  for (ElemId x = 0; x < n; ++x) {
    std::size_t k = 1;
    for (ElemId y = x; y != 0; y = add(y, x)) {
      if (++k > n) throw StructuralError("cyclic_decomposition: element of infinite order");
    }
    s.order[x] = k;
  }
  CyclicDecomposition out;
  if (!s.search(ElementSet(n, {0}), out.basis))
    throw StructuralError("cyclic_decomposition: no basis; operation is not an abelian group");
  for (ElemId b : out.basis) out.orders.push_back(static_cast<int>(s.order[b]));

  FiniteAbelianGroup target(out.orders);
  out.to_group.assign(n, 0);
  out.from_group.assign(target.size(), 0);
  for (ElemId t = 0; t < target.size(); ++t) {
    auto coords = target.decode(t).residues;
    ElemId x = 0;
    for (std::size_t i = 0; i < coords.size(); ++i)
      for (int k = 0; k < coords[i]; ++k) x = add(x, out.basis[i]);
    out.from_group[t] = x;
    out.to_group[x] = t;
  }
  return out;
}

}  // namespace ggr::finabel
