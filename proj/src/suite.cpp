#include "ggr/suite.hpp"

#include "ggr/dsl.hpp"
#include "ggr/errors.hpp"
#include "ggr/moduloid.hpp"

namespace ggr::suite {

namespace {

Tally& tally(SuiteResult& out, const std::string& check) {
  for (auto& t : out.tallies)
    if (t.check == check) return t;
  out.tallies.push_back({check, 0, 0});
  return out.tallies.back();
}

void record(SuiteResult& out, const corpus::Entry& e, const std::string& check, bool ok, const std::string& detail) {
  auto& t = tally(out, check);
  ++t.applicable;
  if (ok) {
    ++t.passed;
    return;
  }
  std::string text;
  try {
    text = dsl::serialize(dsl::spec_from_anneid(e.anneid, e.name));
  } catch (const std::exception&) {
    text.clear();
  }
  out.findings.push_back({e.name, check, detail, std::move(text)});
}

}  // namespace

void check_anneid(const corpus::Entry& e, const radical::RadicalOptions& options, SuiteResult& out) {
  const auto& a = e.anneid;
  ++out.anneids;
  record(out, e, "anneid", anneid::verify_anneid(a).passed(), "verify_anneid fails");

  auto lin = anneid::linearize_anneid(a);
  auto back = anneid::anneid_from_graded(lin.ring);
  record(out, e, "roundtrip", anneid::find_isomorphism(a, back.anneid).has_value(),
         "homogeneous part of the linearization is not isomorphic");

  auto rep = radical::jacobson_radical(a, options);
  std::string bad;
  for (const auto& ag : rep.agreements)
    if (ag.applicable && !ag.agrees) bad += (bad.empty() ? "" : ", ") + ag.name;
  record(out, e, "radical_agreement", rep.consistent(), "disagreement: " + bad);

  if (rep.right_regular) {
    auto m = moduloid::Moduloid::of_anneid(a);
    bool ok = true;
    for (ElemId x = 1; x < a.size() && ok; ++x)
      for (ElemId al = 1; al < a.G().size() && ok; ++al) ok = moduloid::check_cyclic_isomorphism(m, x, al);
    record(out, e, "cyclic_isomorphism", ok, "A/(0:x)_alpha is not isomorphic to x alpha A");
  }

  if (!(rep.right_regular && rep.left_regular)) return;
  ++out.regular;
  for (grading::GradeId d = 1; d <= a.grade_count(); ++d)
    for (ElemId al = 1; al < a.G().size(); ++al) {
      if (!anneid::is_alpha_idempotent(a, d, al)) continue;
      const std::string at = " at grade " + std::to_string(d) + ", " + a.G().name(al);
      record(out, e, "local_radical", radical::check_local_radical(a, d, al), "J(A(e)) differs from J(A) n A(e)" + at);
      record(out, e, "correspondence", radical::correspondence_at_idempotent(a, d, al, options.bounds).passed(),
             "correspondence fails" + at);
    }
  bool ideal_ok = true;
  for (const auto& i : ideals::enumerate_right_ideals(a, options.bounds))
    ideal_ok = ideal_ok && radical::check_ideal_radical(a, i);
  record(out, e, "ideal_radical", ideal_ok, "J(I) differs from {x in I : xGI in J(A)}");
  bool grades_ok = true;
  for (const auto& mi : ideals::maximal_right_modular_ideals(a, options.bounds))
    for (const auto& w : ideals::modularity_witnesses(a, mi.ideal))
      grades_ok = grades_ok && w.alpha != 0 && anneid::is_alpha_idempotent(a, a.grade(w.u), w.alpha);
  record(out, e, "modular_grade_idempotent", grades_ok, "a left identity grade is not alpha-idempotent");
}

SuiteResult run_suite(const corpus::CorpusOptions& corpus_options, const radical::RadicalOptions& options) {
  SuiteResult out;
  for (const auto& e : corpus::generate_corpus(corpus_options)) check_anneid(e, options, out);
  return out;
}

nlohmann::json SuiteResult::to_json() const {
  nlohmann::json j;
  j["anneids"] = anneids;
  j["regular"] = regular;
  j["checks"] = nlohmann::json::array();
  for (const auto& t : tallies)
    j["checks"].push_back({{"check", t.check}, {"applicable", t.applicable}, {"passed", t.passed}});
  j["findings"] = nlohmann::json::array();
  for (const auto& f : findings)
    j["findings"].push_back({{"entry", f.entry}, {"check", f.check}, {"detail", f.detail}, {"ggr", f.ggr}});
  return j;
}

}  // namespace ggr::suite
