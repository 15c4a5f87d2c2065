#include "ggr/corpus.hpp"

#include <random>

#include "ggr/errors.hpp"

namespace ggr::corpus {

using finabel::FiniteAbelianGroup;
using finabel::Subgroup;
using gammaring::GammaRing;
using grading::Graduation;

FiniteRing algebra_over_fp(int p, int dim, const std::vector<std::vector<std::vector<int>>>& bp) {
  FiniteAbelianGroup g(std::vector<int>(static_cast<std::size_t>(dim), p));
  const std::size_t n = g.size();
  std::vector<std::vector<int>> coords(n);
  for (ElemId x = 0; x < n; ++x) coords[x] = g.decode(x).residues;
  std::vector<ElemId> mul(n * n);
  for (ElemId x = 0; x < n; ++x)
    for (ElemId y = 0; y < n; ++y) {
      std::vector<int> r(static_cast<std::size_t>(dim), 0);
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
          int c = coords[x][static_cast<std::size_t>(i)] * coords[y][static_cast<std::size_t>(j)];
          if (c == 0) continue;
          for (int k = 0; k < dim; ++k)
            r[static_cast<std::size_t>(k)] += c * bp[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                                                    [static_cast<std::size_t>(k)];
        }
      for (int& v : r) v = ((v % p) + p) % p;
      mul[x * n + y] = g.encode(r);
    }
  return {std::move(g), std::move(mul)};
}

std::vector<NamedRing> small_rings() {
  using V = std::vector<int>;
  std::vector<NamedRing> out;
  out.push_back({"F2", FiniteRing::integers_mod(2)});
  out.push_back({"F3", FiniteRing::integers_mod(3)});
  out.push_back({"Z4", FiniteRing::integers_mod(4)});
  out.push_back({"zero(Z2)", FiniteRing::zero_ring(FiniteAbelianGroup({2}))});
  out.push_back({"zero(Z3)", FiniteRing::zero_ring(FiniteAbelianGroup({3}))});
  out.push_back({"zero(Z2xZ2)", FiniteRing::zero_ring(FiniteAbelianGroup({2, 2}))});
  // basis e1, e2 orthogonal idempotents
  out.push_back({"F2xF2", algebra_over_fp(2, 2, {{V{1, 0}, V{0, 0}}, {V{0, 0}, V{0, 1}}})});
  // basis 1, x
  out.push_back({"F2[x]/(x^2)", algebra_over_fp(2, 2, {{V{1, 0}, V{0, 1}}, {V{0, 1}, V{0, 0}}})});
  out.push_back({"F4", algebra_over_fp(2, 2, {{V{1, 0}, V{0, 1}}, {V{0, 1}, V{1, 1}}})});
  // basis e, n with e idempotent, en = n, ne = 0, nn = 0
  out.push_back({"F2<e,n>", algebra_over_fp(2, 2, {{V{1, 0}, V{0, 1}}, {V{0, 0}, V{0, 0}}})});
  // basis x, x^2 (non-unital, x^3 = 0)
  out.push_back({"xF2[x]/(x^3)", algebra_over_fp(2, 2, {{V{0, 1}, V{0, 0}}, {V{0, 0}, V{0, 0}}})});
  // basis 1, x, x^2
  out.push_back({"F2[x]/(x^3)", algebra_over_fp(2, 3,
                                               {{V{1, 0, 0}, V{0, 1, 0}, V{0, 0, 1}},
                                                {V{0, 1, 0}, V{0, 0, 1}, V{0, 0, 0}},
                                                {V{0, 0, 1}, V{0, 0, 0}, V{0, 0, 0}}})});
  // upper triangular: basis e11, e12, e22
  out.push_back({"T2(F2)", algebra_over_fp(2, 3,
                                          {{V{1, 0, 0}, V{0, 1, 0}, V{0, 0, 0}},
                                           {V{0, 0, 0}, V{0, 0, 0}, V{0, 1, 0}},
                                           {V{0, 0, 0}, V{0, 0, 0}, V{0, 0, 1}}})});
  // F2 x F2 x F2
  out.push_back({"F2^3", algebra_over_fp(2, 3,
                                        {{V{1, 0, 0}, V{0, 0, 0}, V{0, 0, 0}},
                                         {V{0, 0, 0}, V{0, 1, 0}, V{0, 0, 0}},
                                         {V{0, 0, 0}, V{0, 0, 0}, V{0, 0, 1}}})});
  // basis 1, x over F3
  out.push_back({"F3[x]/(x^2)", algebra_over_fp(3, 2, {{V{1, 0}, V{0, 1}}, {V{0, 1}, V{0, 0}}})});
  return out;
}

namespace {

std::vector<std::string> matrix_names() {
  // factors R, V, W, S: id = r*8 + v*4 + w*2 + s
  const char* units[4] = {"e11", "e12", "e21", "e22"};
  std::vector<std::string> out(16);
  for (ElemId id = 0; id < 16; ++id) {
    std::string s;
    for (int k = 0; k < 4; ++k)
      if (id & (8u >> k)) s += (s.empty() ? "" : "+") + std::string(units[k]);
    out[id] = s.empty() ? "0" : s;
  }
  return out;
}

FiniteRing f2() { return FiniteRing::integers_mod(2); }

gammaring::Bimodule f2_bimodule() {
  return {FiniteAbelianGroup({2}), {0, 0, 0, 1}, {0, 0, 0, 1}};
}

}  // namespace

Named semidirect_f2() {
  gammaring::SemidirectSpec spec{f2(), FiniteRing::zero_ring(FiniteAbelianGroup({2})), {0, 0, 0, 1}, {0, 0, 0, 1}};
  return {gammaring::build_semidirect_sum(spec), {"0", "i", "s", "s+i"}, {"0", "g"}};
}

Named matrix_m2f2() {
  gammaring::MoritaContext m{f2(), f2(), f2_bimodule(), f2_bimodule(), {0, 0, 0, 1}, {0, 0, 0, 1}};
  return {gammaring::build_generalized_matrix_ring(m), matrix_names(), {"0", "g22", "g11", "g11+g22"}};
}

Named graded_ring_as_gamma() {
  using V = std::vector<int>;
  FiniteRing ring = algebra_over_fp(2, 2, {{V{1, 0}, V{0, 1}}, {V{0, 1}, V{0, 0}}});
  // ids: (a, b) -> 2a + b for a*1 + b*x
  Graduation grad(ring.group, {Subgroup(4, {0, 2}), Subgroup(4, {0, 1})});
  return {gammaring::gamma_from_graded_ring(ring, grad), {"0", "x", "1", "1+x"}, {"0", "gx", "g1", "g1+gx"}};
}

GammaAnneid sd3() {
  auto n = semidirect_f2();
  return anneid::anneid_from_graded(n.ring, &n.r_names, &n.gamma_names).anneid;
}

GammaAnneid matrix_anneid() {
  auto n = matrix_m2f2();
  return anneid::anneid_from_graded(n.ring, &n.r_names, &n.gamma_names).anneid;
}

GammaAnneid graded_ring_anneid() {
  auto n = graded_ring_as_gamma();
  return anneid::anneid_from_graded(n.ring, &n.r_names, &n.gamma_names).anneid;
}

GammaAnneid zero_product_abg() {
  FiniteAbelianGroup v4({2, 2});
  Graduation grad(v4, {Subgroup(4, {0, 2}), Subgroup(4, {0, 1})});
  std::vector<std::string> names{"0", "b", "a", "a+b"};
  auto a = grading::Homogroupoid::from_graduation(grad, nullptr, &names);
  FiniteAbelianGroup z2({2});
  std::vector<std::string> gnames{"0", "g"};
  auto g = grading::Homogroupoid::from_graduation(Graduation(z2), nullptr, &gnames);
  return anneid::zero_product_anneid(std::move(a), std::move(g));
}

GammaAnneid matrix_one_grade() {
  auto n = matrix_m2f2();
  gammaring::GradedGammaRing trivial{n.ring.ring, Graduation(n.ring.ring.r()), Graduation(n.ring.ring.gamma())};
  return anneid::anneid_from_graded(trivial, &n.r_names, &n.gamma_names).anneid;
}

namespace {

class Collector {
 public:
  Collector(const CorpusOptions& o, std::vector<Entry>& out) : o_(o), out_(out) {}

  bool add(std::string name, std::string family, GammaAnneid a) {
    if (a.size() > o_.max_a || a.G().size() > o_.max_g) return false;
    if (!anneid::verify_anneid(a).passed()) return false;
    for (const auto& e : out_)
      if (e.anneid == a) return false;
    out_.push_back({std::move(name), std::move(family), std::move(a)});
    return true;
  }

 private:
  const CorpusOptions& o_;
  std::vector<Entry>& out_;
};

// Homogeneous subgroups: one subgroup of each component, summed.
std::vector<Subgroup> homogeneous_subgroups(const Graduation& grad, std::size_t cap) {
  const auto& g = grad.group();
  auto all = finabel::enumerate_subgroups(g, 4096);
  std::vector<std::vector<Subgroup>> per;
  for (const auto& c : grad.strict_components()) {
    std::vector<Subgroup> inside;
    for (const auto& s : all)
      if (s.is_subset_of(c)) inside.push_back(s);
    per.push_back(std::move(inside));
  }
  std::vector<Subgroup> out{Subgroup(g.size(), {0})};
  for (const auto& choices : per) {
    std::vector<Subgroup> next;
    for (const auto& base : out)
      for (const auto& s : choices) {
        if (next.size() >= cap) break;
        next.push_back(finabel::subgroup_generate(g, base | s));
      }
    out = std::move(next);
  }
  return out;
}

void ring_family(Collector& c, const NamedRing& nr) {
  const auto& group = nr.ring.group;
  auto grads = grading::enumerate_graduations(group, 4096);
  int gi = 0;
  for (const auto& grad : grads) {
    ++gi;
    std::optional<GradedGammaRing> grr;
    try {
      grr = gammaring::gamma_from_graded_ring(nr.ring, grad);
    } catch (const StructuralError&) {
      continue;
    }
    const std::string base = nr.name + "/grad" + std::to_string(gi);
    auto view = anneid::anneid_from_graded(*grr).anneid;
    if (!anneid::verify_anneid(view).passed())
      view = GammaAnneid(view.A(), view.G(), view.triple_table());
    c.add(base + "/gamma=R", "ring", view);

    int si = 0;
    for (const auto& sub : homogeneous_subgroups(grad, 64)) {
      ++si;
      if (sub.size() == 1) continue;
      auto members = sub.members();
      std::vector<ElemId> local(group.size(), 0);
      for (ElemId i = 0; i < members.size(); ++i) local[members[i]] = i;
      auto dec = finabel::cyclic_decomposition(
          members.size(), [&](ElemId x, ElemId y) { return local[group.add(members[x], members[y])]; });
      FiniteAbelianGroup gamma(dec.orders);
      std::vector<ElemId> gamma_ids(gamma.size());
      for (ElemId gid = 0; gid < gamma.size(); ++gid) gamma_ids[gid] = members[dec.from_group[gid]];
      std::vector<Subgroup> parts;
      for (const auto& comp : grad.strict_components()) {
        Subgroup p(gamma.size());
        for (ElemId gid = 0; gid < gamma.size(); ++gid)
          if (comp.contains(gamma_ids[gid])) p.insert(gid);
        parts.push_back(std::move(p));
      }
      try {
        GradedGammaRing g{gammaring::gamma_ring_from_subgroup(nr.ring, gamma, gamma_ids), grad,
                          Graduation(gamma, parts)};
        c.add(base + "/gamma" + std::to_string(si), "ring", anneid::anneid_from_graded(g).anneid);
      } catch (const PreconditionError&) {
      } catch (const StructuralError&) {
      }
    }
  }
}

struct Shape {
  int p;
  std::vector<int> a_dims;
  std::vector<int> g_dims;
};

std::vector<Subgroup> block_parts(const FiniteAbelianGroup& g, const std::vector<int>& dims) {
  std::vector<Subgroup> parts;
  int offset = 0;
  for (int d : dims) {
    Subgroup s(g.size());
    for (ElemId x = 0; x < g.size(); ++x) {
      auto r = g.decode(x).residues;
      bool inside = true;
      for (int k = 0; k < static_cast<int>(r.size()); ++k)
        if ((k < offset || k >= offset + d) && r[static_cast<std::size_t>(k)] != 0) inside = false;
      if (inside) s.insert(x);
    }
    parts.push_back(std::move(s));
    offset += d;
  }
  return parts;
}

std::optional<GammaAnneid> random_anneid(std::mt19937_64& rng, const Shape& sh) {
  auto uni = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  std::vector<int> a_grade, g_grade;  // grade of each basis vector
  for (std::size_t k = 0; k < sh.a_dims.size(); ++k)
    for (int i = 0; i < sh.a_dims[k]; ++i) a_grade.push_back(static_cast<int>(k));
  for (std::size_t k = 0; k < sh.g_dims.size(); ++k)
    for (int i = 0; i < sh.g_dims[k]; ++i) g_grade.push_back(static_cast<int>(k));
  const int ra = static_cast<int>(a_grade.size()), rg = static_cast<int>(g_grade.size());
  const int ka = static_cast<int>(sh.a_dims.size()), kg = static_cast<int>(sh.g_dims.size());
  // target grade per (xi, d, eta); -1 means zero
  std::vector<int> target(static_cast<std::size_t>(ka * kg * ka));
  for (int& t : target) t = uni(100) < 50 ? -1 : uni(ka);
  std::vector<std::vector<int>> c(static_cast<std::size_t>(ra * rg * ra), std::vector<int>(ra, 0));
  for (int i = 0; i < ra; ++i)
    for (int a = 0; a < rg; ++a)
      for (int j = 0; j < ra; ++j) {
        int t = target[static_cast<std::size_t>((a_grade[i] * kg + g_grade[a]) * ka + a_grade[j])];
        if (t < 0) continue;
        auto& v = c[static_cast<std::size_t>((i * rg + a) * ra + j)];
        for (int k = 0; k < ra; ++k)
          if (a_grade[k] == t && uni(2) == 0) v[static_cast<std::size_t>(k)] = 1 + uni(sh.p - 1);
      }
  FiniteAbelianGroup R(std::vector<int>(static_cast<std::size_t>(ra), sh.p));
  FiniteAbelianGroup G(std::vector<int>(static_cast<std::size_t>(rg), sh.p));
  std::vector<std::vector<int>> rc(R.size()), gc(G.size());
  for (ElemId x = 0; x < R.size(); ++x) rc[x] = R.decode(x).residues;
  for (ElemId x = 0; x < G.size(); ++x) gc[x] = G.decode(x).residues;
  std::vector<ElemId> t(R.size() * G.size() * R.size());
  for (ElemId x = 0; x < R.size(); ++x)
    for (ElemId al = 0; al < G.size(); ++al)
      for (ElemId y = 0; y < R.size(); ++y) {
        std::vector<int> r(static_cast<std::size_t>(ra), 0);
        for (int i = 0; i < ra; ++i)
          for (int a = 0; a < rg; ++a)
            for (int j = 0; j < ra; ++j) {
              int coef = rc[x][static_cast<std::size_t>(i)] * gc[al][static_cast<std::size_t>(a)] *
                         rc[y][static_cast<std::size_t>(j)];
              if (coef == 0) continue;
              const auto& v = c[static_cast<std::size_t>((i * rg + a) * ra + j)];
              for (int k = 0; k < ra; ++k) r[static_cast<std::size_t>(k)] += coef * v[static_cast<std::size_t>(k)];
            }
        for (int& v : r) v %= sh.p;
        t[(x * G.size() + al) * R.size() + y] = R.encode(r);
      }
  GammaRing ring(R, G, std::move(t));
  if (!gammaring::verify_gamma_ring(ring).passed()) return std::nullopt;
  GradedGammaRing g{ring, Graduation(R, block_parts(R, sh.a_dims)), Graduation(G, block_parts(G, sh.g_dims))};
  try {
    return anneid::anneid_from_graded(g).anneid;
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
}

std::vector<Shape> random_shapes(std::size_t max_a, std::size_t max_g) {
  std::vector<Shape> out;
  const std::vector<std::vector<int>> a2 = {{1}, {2}, {1, 1}, {1, 2}, {2, 1}, {1, 1, 1}, {2, 2}, {1, 1, 1, 1},
                                            {3}, {1, 1, 2}};
  const std::vector<std::vector<int>> g2 = {{1}, {2}, {1, 1}};
  auto a_size = [](int p, const std::vector<int>& dims) {
    std::size_t s = 1;
    for (int d : dims) {
      std::size_t c = 1;
      for (int i = 0; i < d; ++i) c *= static_cast<std::size_t>(p);
      s += c - 1;
    }
    return s;
  };
  for (const auto& a : a2)
    for (const auto& g : g2)
      if (a_size(2, a) <= max_a && a_size(2, g) <= max_g) out.push_back({2, a, g});
  for (const auto& a : std::vector<std::vector<int>>{{1}, {1, 1}, {1, 1, 1}})
    if (a_size(3, a) <= max_a && a_size(3, {1}) <= max_g) out.push_back({3, a, {1}});
  return out;
}

}  // namespace

std::vector<Entry> generate_corpus(const CorpusOptions& options) {
  std::vector<Entry> out;
  Collector c(options, out);
  c.add("trivial", "fixture", anneid::zero_product_anneid(grading::Homogroupoid(), grading::Homogroupoid()));
  c.add("SD3", "fixture", sd3());
  c.add("matrix", "fixture", matrix_anneid());
  c.add("graded-ring", "fixture", graded_ring_anneid());
  c.add("zero-abg", "fixture", zero_product_abg());
  for (const auto& nr : small_rings()) ring_family(c, nr);

  std::mt19937_64 rng(options.seed);
  auto shapes = random_shapes(options.max_a, options.max_g);
  std::size_t accepted = 0;
  for (std::size_t attempt = 0; attempt < 40 * options.random_target && accepted < options.random_target && !shapes.empty();
       ++attempt) {
    const Shape& sh = shapes[rng() % shapes.size()];
    if (auto a = random_anneid(rng, sh))
      if (c.add("random" + std::to_string(attempt), "random", std::move(*a))) ++accepted;
  }
  if (options.with_opposites) {
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) {
      GammaAnneid op = out[i].anneid.opposite();
      std::string name = out[i].name + "/op";
      std::string family = out[i].family;
      c.add(std::move(name), std::move(family), std::move(op));
    }
  }
  return out;
}

std::vector<Mutation> fixture_mutations() {
  std::vector<Mutation> out;
  std::mt19937_64 rng(20);
  const std::vector<std::pair<std::string, Named>> fixtures = {
      {"semidirect", semidirect_f2()}, {"matrix", matrix_m2f2()}, {"graded-ring", graded_ring_as_gamma()}};
  const int quota[3] = {7, 7, 6};
  for (std::size_t f = 0; f < fixtures.size(); ++f) {
    const auto& [fname, fx] = fixtures[f];
    const auto& ring = fx.ring.ring;
    const std::size_t n = ring.r().size(), m = ring.gamma().size();
    for (int k = 0; k < quota[f]; ++k) {
      auto x = static_cast<ElemId>(1 + rng() % (n - 1));
      auto alpha = static_cast<ElemId>(1 + rng() % (m - 1));
      auto y = static_cast<ElemId>(1 + rng() % (n - 1));
      ElemId old_value = ring.product(x, alpha, y);
      auto new_value = static_cast<ElemId>((old_value + 1 + rng() % (n - 1)) % n);
      auto t = ring.triple_table();
      t[(x * m + alpha) * n + y] = new_value;
      Named mutated = fx;
      mutated.ring.ring = GammaRing(ring.r(), ring.gamma(), std::move(t), ring.cotriple_table());
      out.push_back({fname + "-" + std::to_string(k + 1), fname, x, alpha, y, old_value, new_value, std::move(mutated)});
    }
  }
  return out;
}

}  // namespace ggr::corpus
