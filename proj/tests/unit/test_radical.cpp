#include <doctest.h>

#include "ggr/corpus.hpp"
#include "ggr/errors.hpp"
#include "ggr/radical.hpp"
#include "oracles.hpp"

using namespace ggr;
using namespace ggr::radical;

namespace {

const std::vector<corpus::Entry>& corpus_all() {
  static const auto c = corpus::generate_corpus();
  return c;
}

ElementSet named(const anneid::GammaAnneid& a, std::initializer_list<const char*> names) {
  ElementSet s(a.size(), {0});
  for (const char* n : names) s.insert(*a.A().find(n));
  return s;
}

}  // namespace

TEST_CASE("rqr elements match the definition") {
  int checked = 0;
  for (std::size_t k = 0; k < corpus_all().size(); k += 2) {
    const auto& a = corpus_all()[k].anneid;
    if (a.size() > 10) continue;
    for (ElemId z = 0; z < a.size(); ++z)
      for (ElemId al = 1; al < a.G().size(); ++al) {
        bool ref = oracle::is_alpha_rqr(a, z, al);
        CHECK(is_alpha_rqr_fast(a, z, al) == ref);
        auto cert = is_alpha_rqr(a, z, al);
        CHECK(cert.rqr == ref);
        if (!cert.rqr) {
          REQUIRE(cert.ideal.has_value());
          CHECK(cert.ideal->size() < a.size());
          CHECK(oracle::is_left_identity_mod(a, z, al, *cert.ideal));
        }
      }
    CHECK(rqr_elements(a) == oracle::rqr(a));
    ++checked;
  }
  CHECK(checked > 100);
  CHECK_THROWS_AS(is_alpha_rqr(corpus::sd3(), 1, 0), PreconditionError);
}

TEST_CASE("modular radical matches the definition") {
  for (const auto& e : corpus_all()) {
    if (e.anneid.size() > 10) continue;
    CHECK_MESSAGE(j_modular(e.anneid, ideals::enumerate_right_ideals(e.anneid)) == oracle::jacobson(e.anneid), e.name);
  }
}

TEST_CASE("routes agree on regular anneids") {
  int regular = 0;
  for (const auto& e : corpus_all()) {
    auto rep = jacobson_radical(e.anneid);
    CHECK_MESSAGE(rep.consistent(), e.name);
    if (rep.right_regular && rep.left_regular) {
      CHECK(rep.j_qr == rep.j_modular);
      CHECK(rep.j_local == rep.j_modular);
      CHECK(rep.j_left == rep.j_modular);
      CHECK(rep.j_qr_is_ideal);
      CHECK(rep.j_qr_quasi_regular);
      CHECK(nilpotent_elements(e.anneid).is_subset_of(rqr_elements(e.anneid)));
      ++regular;
    }
    CHECK(rep.j_large.is_subset_of(rep.j_modular));
  }
  CHECK(regular > 50);
}

TEST_CASE("fixture radicals") {
  auto sd = corpus::sd3();
  auto rep = jacobson_radical(sd);
  auto expect = named(sd, {"i"});
  CHECK(rep.j_modular == expect);
  CHECK(rep.j_qr == expect);
  CHECK(rep.j_local == expect);
  CHECK(rep.j_large == expect);
  CHECK(set_name(sd, rep.j_modular) == "{0, i}");

  auto z = corpus::zero_product_abg();
  auto zr = jacobson_radical(z);
  CHECK(zr.j_modular == ElementSet::full(z.size()));
  CHECK(zr.j_large == ElementSet::full(z.size()));

  auto m = corpus::matrix_anneid();
  auto mr = jacobson_radical(m);
  CHECK(mr.j_modular == ElementSet(m.size(), {0}));
  CHECK(mr.j_qr == ElementSet(m.size(), {0}));
  CHECK(mr.j_large == ElementSet(m.size(), {0}));
  CHECK(mr.consistent());
}

TEST_CASE("large radical matches the definition on the linearized ring") {
  int checked = 0;
  for (std::size_t k = 0; k < corpus_all().size(); k += 3) {
    const auto& a = corpus_all()[k].anneid;
    auto lin = anneid::linearize_anneid(a);
    if (lin.ring.ring.r().size() > 8) continue;
    auto flat = anneid::one_grade_view(lin.ring.ring);
    auto jr = oracle::jacobson(flat);
    ElementSet expect(a.size());
    for (ElemId x = 0; x < a.size(); ++x)
      if (jr.contains(lin.embed_a[x])) expect.insert(x);
    auto large = large_jacobson_radical(a);
    CHECK_MESSAGE(large.j_large == expect, corpus_all()[k].name);
    if (large.j_linearized) CHECK(*large.j_linearized == expect);
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("local structure at idempotents") {
  auto sd = corpus::sd3();
  auto s = *sd.A().find("s");
  auto g = *sd.G().find("g");
  auto rep = correspondence_at_idempotent(sd, sd.grade(s), g);
  CHECK(rep.passed());
  CHECK(local_radical(sd, sd.grade(s), g).size() == 1);
  CHECK(check_local_radical(sd, sd.grade(s), g));

  auto m = corpus::matrix_anneid();
  auto e11 = *m.A().find("e11");
  auto g11 = *m.G().find("g11");
  CHECK(correspondence_at_idempotent(m, m.grade(e11), g11).passed());

  int checked = 0;
  for (const auto& e : corpus_all()) {
    const auto& a = e.anneid;
    if (!anneid::is_regular(a, anneid::Side::Both)) continue;
    for (GradeId d = 1; d <= a.grade_count(); ++d)
      for (ElemId al = 1; al < a.G().size(); ++al)
        if (anneid::is_alpha_idempotent(a, d, al)) {
          CHECK_MESSAGE(check_local_radical(a, d, al), e.name);
          ++checked;
        }
  }
  CHECK(checked > 50);
}

TEST_CASE("radical of an ideal") {
  auto sd = corpus::sd3();
  CHECK(check_ideal_radical(sd, ElementSet(sd.size(), {0})));
  CHECK(check_ideal_radical(sd, named(sd, {"i"})));
  CHECK(check_ideal_radical(sd, ElementSet::full(sd.size())));
  int checked = 0;
  for (const auto& e : corpus_all()) {
    const auto& a = e.anneid;
    if (a.size() > 8 || !anneid::is_regular(a, anneid::Side::Both)) continue;
    for (const auto& i : ideals::enumerate_ideals(a, ideals::Side::TwoSided)) {
      CHECK_MESSAGE(check_ideal_radical(a, i), e.name);
      ++checked;
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("rqr dichotomy on regular anneids") {
  CHECK(check_regular_rqr_criterion(corpus::sd3()).passed());
  CHECK(check_regular_rqr_criterion(corpus::matrix_anneid()).passed());
}
