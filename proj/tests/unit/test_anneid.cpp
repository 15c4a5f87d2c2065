#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ggr/anneid.hpp"
#include "ggr/corpus.hpp"
#include "ggr/errors.hpp"

using namespace ggr;
using namespace ggr::anneid;
using grading::Homogroupoid;

namespace {

const std::vector<corpus::Entry>& entries() {
  static const auto c = corpus::generate_corpus();
  return c;
}

// Additivity in each slot and associativity of the plain product.
bool brute_plain_axioms(const GammaAnneid& a) {
  const auto &A = a.A(), &G = a.G();
  for (ElemId x = 0; x < A.size(); ++x)
    for (ElemId al = 0; al < G.size(); ++al)
      for (ElemId y = 0; y < A.size(); ++y) {
        ElemId p = a.product(x, al, y);
        for (ElemId z = 0; z < A.size(); ++z) {
          if (A.addible(x, z)) {
            ElemId q = a.product(z, al, y);
            if (!A.addible(p, q) || a.product(A.sum(x, z), al, y) != A.sum(p, q)) return false;
          }
          if (A.addible(y, z)) {
            ElemId q = a.product(x, al, z);
            if (!A.addible(p, q) || a.product(x, al, A.sum(y, z)) != A.sum(p, q)) return false;
          }
          for (ElemId be = 0; be < G.size(); ++be)
            if (a.product(p, be, z) != a.product(x, al, a.product(y, be, z))) return false;
        }
        for (ElemId be = 0; be < G.size(); ++be)
          if (G.addible(al, be)) {
            ElemId q = a.product(x, be, y);
            if (!A.addible(p, q) || a.product(x, G.sum(al, be), y) != A.sum(p, q)) return false;
          }
      }
  return true;
}

bool brute_right_regular(const GammaAnneid& a) {
  for (ElemId x = 0; x < a.size(); ++x)
    for (ElemId al = 0; al < a.G().size(); ++al)
      for (ElemId p = 0; p < a.size(); ++p)
        for (ElemId be = 0; be < a.G().size(); ++be)
          for (ElemId q = 0; q < a.size(); ++q) {
            ElemId u = a.product(x, al, p), v = a.product(x, be, q);
            if (u != 0 && v != 0 && a.A().addible(u, v) && !(a.G().addible(al, be) && a.A().addible(p, q)))
              return false;
          }
  return true;
}

// Relabels the nonzero elements of A and G by the given permutations.
GammaAnneid relabel(const GammaAnneid& a, const std::vector<ElemId>& pa, const std::vector<ElemId>& pg) {
  auto remap_h = [](const Homogroupoid& h, const std::vector<ElemId>& p) {
    const std::size_t n = h.size();
    std::vector<std::string> names(n);
    std::vector<char> add(n * n);
    std::vector<ElemId> sum(n * n, Homogroupoid::kUndefined);
    for (ElemId x = 0; x < n; ++x) {
      names[p[x]] = h.name(x);
      for (ElemId y = 0; y < n; ++y) {
        add[p[x] * n + p[y]] = h.addible(x, y);
        if (h.addible(x, y)) sum[p[x] * n + p[y]] = p[h.sum(x, y)];
      }
    }
    return Homogroupoid(names, add, sum);
  };
  const std::size_t n = a.size(), m = a.G().size();
  std::vector<ElemId> t(n * m * n);
  for (ElemId x = 0; x < n; ++x)
    for (ElemId al = 0; al < m; ++al)
      for (ElemId y = 0; y < n; ++y) t[(pa[x] * m + pg[al]) * n + pa[y]] = pa[a.product(x, al, y)];
  std::optional<std::vector<ElemId>> c;
  if (a.is_nobusawa()) {
    c.emplace(m * n * m);
    for (ElemId al = 0; al < m; ++al)
      for (ElemId x = 0; x < n; ++x)
        for (ElemId be = 0; be < m; ++be) (*c)[(pg[al] * n + pa[x]) * m + pg[be]] = pg[a.coproduct(al, x, be)];
  }
  return GammaAnneid(remap_h(a.A(), pa), remap_h(a.G(), pg), t, c);
}

std::vector<ElemId> shuffled(std::size_t n, std::mt19937& rng) {
  std::vector<ElemId> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin() + 1, p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("corpus anneids pass the verifier and the direct check") {
  REQUIRE(entries().size() > 200);
  for (const auto& e : entries()) {
    CHECK_MESSAGE(verify_anneid(e.anneid).passed(), e.name);
    CHECK_MESSAGE(brute_plain_axioms(e.anneid), e.name);
  }
}

TEST_CASE("verifier agrees with the direct check on perturbed tables") {
  std::mt19937 rng(7);
  int broken = 0;
  for (std::size_t k = 0; k < entries().size(); k += 5) {
    const auto& a = entries()[k].anneid;
    if (a.size() < 2 || a.G().size() < 2) continue;
    auto t = a.triple_table();
    const std::size_t n = a.size(), m = a.G().size();
    ElemId x = 1 + rng() % (n - 1), al = 1 + rng() % (m - 1), y = 1 + rng() % (n - 1);
    t[(x * m + al) * n + y] = static_cast<ElemId>((t[(x * m + al) * n + y] + 1 + rng() % (n - 1)) % n);
    GammaAnneid b(a.A(), a.G(), t, a.cotriple_table());
    auto rep = verify_anneid(b);
    bool lib_plain = !rep.condition_failed("iii.left") && !rep.condition_failed("iii.middle") &&
                     !rep.condition_failed("iii.right") && !rep.condition_failed("iv.associative");
    CHECK_MESSAGE(lib_plain == brute_plain_axioms(b), entries()[k].name);
    broken += !rep.passed();
  }
  CHECK(broken > 50);
}

TEST_CASE("regularity matches the definition") {
  int regular = 0;
  for (const auto& e : entries()) {
    CHECK(is_regular(e.anneid, Side::Right) == brute_right_regular(e.anneid));
    CHECK(is_regular(e.anneid, Side::Left) == brute_right_regular(e.anneid.opposite()));
    regular += is_regular(e.anneid, Side::Both);
  }
  CHECK(regular > 0);
  CHECK(is_regular(corpus::sd3(), Side::Both));
  CHECK_FALSE(is_regular(corpus::graded_ring_anneid(), Side::Both));
}

TEST_CASE("isomorphism search finds relabelings") {
  std::mt19937 rng(11);
  for (std::size_t k = 0; k < entries().size(); k += 9) {
    const auto& a = entries()[k].anneid;
    auto pa = shuffled(a.size(), rng), pg = shuffled(a.G().size(), rng);
    auto b = relabel(a, pa, pg);
    CHECK(is_isomorphism(a, b, {pa, pg}));
    auto f = find_isomorphism(a, b);
    REQUIRE_MESSAGE(f.has_value(), entries()[k].name);
    CHECK(is_isomorphism(a, b, *f));
  }
  CHECK_FALSE(find_isomorphism(corpus::sd3(), corpus::zero_product_abg()).has_value());
}

TEST_CASE("homogeneous, linearized and trivially graded aspects") {
  for (const auto& named : {corpus::semidirect_f2(), corpus::matrix_m2f2(), corpus::graded_ring_as_gamma()}) {
    CHECK(linearization_roundtrip(named.ring));
    auto view = anneid_from_graded(named.ring, &named.r_names, &named.gamma_names);
    CHECK(verify_anneid(view.anneid).passed());
    auto lin = linearize_anneid(view.anneid);
    auto back = anneid_from_graded(lin.ring);
    CHECK(find_isomorphism(view.anneid, back.anneid).has_value());
    SemihomogeneousQuadruple q{named.ring.ring, grading::homogeneous_part(named.ring.grad_r).carrier,
                               grading::homogeneous_part(named.ring.grad_gamma).carrier};
    CHECK(verify_semihomogeneous(q).passed());
  }
  auto one = one_grade_view(corpus::semidirect_f2().ring.ring);
  CHECK(one.size() == 4);
  CHECK(one.grade_count() == 1);
  CHECK(verify_anneid(one).passed());
}

TEST_CASE("idempotent grades and local rings") {
  auto a = corpus::sd3();
  auto s = *a.A().find("s");
  auto i = *a.A().find("i");
  auto g = *a.G().find("g");
  CHECK(is_alpha_idempotent(a, a.grade(s), g));
  CHECK_FALSE(is_alpha_idempotent(a, a.grade(i), g));
  CHECK_THROWS_AS(is_alpha_idempotent(a, a.grade(s), 0), PreconditionError);
  auto local = local_ring_at(a, a.grade(s), g);
  CHECK(local.anneid.size() == 2);
  CHECK(verify_anneid(local.anneid).passed());
  CHECK_THROWS_AS(local_ring_at(a, a.grade(i), g), PreconditionError);
}

TEST_CASE("zero product anneid and sub-anneids") {
  auto z = corpus::zero_product_abg();
  CHECK(verify_anneid(z).passed());
  for (ElemId x = 0; x < z.size(); ++x) CHECK(z.product(x, 1, x) == 0);
  auto a = corpus::sd3();
  auto i = *a.A().find("i");
  auto sub = restrict_anneid(a, ElementSet(a.size(), {0, i}), ElementSet::full(a.G().size()));
  CHECK(sub.anneid.size() == 2);
  CHECK(verify_anneid(sub.anneid).passed());
}
