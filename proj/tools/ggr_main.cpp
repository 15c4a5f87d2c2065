#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ggr/dsl.hpp"
#include "ggr/errors.hpp"
#include "ggr/radical.hpp"
#include "ggr/suite.hpp"

using namespace ggr;
using nlohmann::json;

namespace {

enum Exit { kPass = 0, kVerifyFail = 1, kInputError = 2, kResource = 3 };

struct Config {
  bool json = false;
  bool strict = false;
  bool require_agreement = false;
  std::optional<std::size_t> max_size;
  std::optional<std::size_t> max_ideals;
  std::uint64_t seed = 1;
  std::vector<std::string> paths;
  std::string out_dir;
};

std::size_t max_size(const Config& c, std::size_t fallback) {
  if (c.max_size) return *c.max_size;
  if (const char* env = std::getenv("GGR_MAX_SIZE")) {
    try {
      long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "ignoring invalid GGR_MAX_SIZE=" << env << "\n";
  }
  return fallback;
}

void emit(const Config& c, const json& j, const std::string& text) {
  if (c.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

json names(const anneid::GammaAnneid& a, const ElementSet& s) {
  json out = json::array();
  s.for_each([&](ElemId x) { out.push_back(a.A().name(x)); });
  return out;
}

dsl::Elaborated load(const std::string& path) {
  if (!std::filesystem::exists(path)) throw std::runtime_error("no such file: " + path);
  return dsl::elaborate(dsl::parse_file(path));
}

// The anneid carried by an elaborated file, or a PreconditionError.
const anneid::GammaAnneid& anneid_of(const dsl::Elaborated& e, const std::string& path) {
  if (e.anneid) return *e.anneid;
  if (e.moduloid) return e.moduloid->over();
  throw PreconditionError(path + ": " + dsl::kind_name(e.kind) + " does not define an anneid");
}

int cmd_check(const Config& c) {
  int code = kPass;
  json all = json::array();
  std::string text;
  for (const auto& path : c.paths) {
    json j{{"file", path}};
    try {
      auto e = load(path);
      bool ok = e.report.passed();
      j["kind"] = dsl::kind_name(e.kind);
      j["name"] = e.name;
      j["passed"] = ok;
      j["report"] = e.report.to_json();
      text += path + " (" + dsl::kind_name(e.kind) + ")\n" + e.report.to_text();
      if (!ok) code = std::max(code, static_cast<int>(kVerifyFail));
    } catch (const dsl::ParseError& err) {
      j["error"] = {{"line", err.line()}, {"column", err.column()}, {"message", err.message()}, {"token", err.token()}};
      text += path + ":" + err.what() + "\n";
      code = std::max(code, static_cast<int>(kInputError));
    } catch (const ResourceError& err) {
      j["error"] = {{"message", err.what()}};
      text += path + ": " + err.what() + "\n";
      code = std::max(code, static_cast<int>(kResource));
    } catch (const std::exception& err) {
      j["error"] = {{"message", err.what()}};
      text += path + ": " + err.what() + "\n";
      code = std::max(code, static_cast<int>(kInputError));
    }
    all.push_back(j);
  }
  emit(c, all, text);
  return code;
}

int cmd_radical(const Config& c) {
  const auto& path = c.paths.front();
  auto e = load(path);
  const auto& a = anneid_of(e, path);
  if (!anneid::verify_anneid(a).passed()) {
    emit(c, {{"file", path}, {"report", e.report.to_json()}}, e.report.to_text());
    return kVerifyFail;
  }
  radical::RadicalOptions opts;
  opts.bounds.max_carrier = max_size(c, opts.bounds.max_carrier);
  if (c.max_ideals) opts.bounds.max_ideals = *c.max_ideals;
  auto rep = radical::jacobson_radical(a, opts);
  json j = rep.to_json(a);
  j["file"] = path;
  std::string text = "J_modular = " + radical::set_name(a, rep.j_modular) + "\n" +
                     "J_qr = " + radical::set_name(a, rep.j_qr) + "\n" +
                     "J_local = " + radical::set_name(a, rep.j_local) + "\n" +
                     "J_large = " + radical::set_name(a, rep.j_large) + "\n" +
                     "J_left = " + radical::set_name(a, rep.j_left) + "\n" +
                     "right regular: " + (rep.right_regular ? "yes" : "no") +
                     ", left regular: " + (rep.left_regular ? "yes" : "no") +
                     ", right ideals: " + std::to_string(rep.lattice_size) + "\n";
  for (const auto& ag : rep.agreements) {
    text += "  " + std::string(!ag.applicable ? "[n/a]  " : ag.agrees ? "[agree]" : "[DIFFER]") + " " + ag.name;
    for (const auto& w : ag.witness) text += " " + w;
    text += "\n";
  }
  emit(c, j, text);
  return c.require_agreement && !rep.consistent() ? kVerifyFail : kPass;
}

int cmd_enumerate(const Config& c) {
  corpus::CorpusOptions co;
  co.seed = c.seed;
  co.max_a = max_size(c, co.max_a);
  radical::RadicalOptions ro;
  if (c.max_ideals) ro.bounds.max_ideals = *c.max_ideals;
  auto result = suite::run_suite(co, ro);
  if (!c.out_dir.empty()) {
    std::filesystem::create_directories(c.out_dir);
    for (std::size_t k = 0; k < result.findings.size(); ++k) {
      const auto& f = result.findings[k];
      std::ofstream(c.out_dir + "/finding-" + std::to_string(k + 1) + ".ggr")
          << "# " << f.check << ": " << f.detail << "\n" << f.ggr;
    }
  }
  json j = result.to_json();
  j["seed"] = co.seed;
  j["max_size"] = co.max_a;
  std::string text = "anneids: " + std::to_string(result.anneids) + ", regular: " + std::to_string(result.regular) + "\n";
  for (const auto& t : result.tallies)
    text += "  " + t.check + ": " + std::to_string(t.passed) + "/" + std::to_string(t.applicable) + "\n";
  text += "counterexamples: " + std::to_string(result.findings.size()) + "\n";
  for (const auto& f : result.findings) text += "# " + f.entry + " " + f.check + ": " + f.detail + "\n" + f.ggr;
  emit(c, j, text);
  return c.strict && !result.findings.empty() ? kVerifyFail : kPass;
}

int cmd_linearize(const Config& c) {
  const auto& path = c.paths.front();
  auto e = load(path);
  const auto& a = anneid_of(e, path);
  if (!anneid::verify_anneid(a).passed()) {
    emit(c, {{"file", path}, {"report", e.report.to_json()}}, e.report.to_text());
    return kVerifyFail;
  }
  auto lin = anneid::linearize_anneid(a);
  std::vector<std::string> r_names(lin.ring.ring.r().size()), g_names(lin.ring.ring.gamma().size());
  for (ElemId x = 0; x < a.size(); ++x) r_names[lin.embed_a[x]] = a.A().name(x);
  for (ElemId x = 0; x < a.G().size(); ++x) g_names[lin.embed_g[x]] = a.G().name(x);
  auto text = dsl::serialize(dsl::spec_from_graded(lin.ring, e.name, &r_names, &g_names));
  emit(c, {{"file", path}, {"ggr", text}}, text);
  return kPass;
}

int cmd_ideals(const Config& c) {
  const auto& path = c.paths.front();
  auto e = load(path);
  const auto& a = anneid_of(e, path);
  ideals::EnumerationBounds bounds;
  bounds.max_carrier = max_size(c, bounds.max_carrier);
  if (c.max_ideals) bounds.max_ideals = *c.max_ideals;
  json j{{"file", path}};
  std::string text;
  const std::pair<const char*, ideals::Side> sides[] = {
      {"right", ideals::Side::Right}, {"left", ideals::Side::Left}, {"two_sided", ideals::Side::TwoSided}};
  for (const auto& [label, side] : sides) {
    json list = json::array();
    text += std::string(label) + ":\n";
    for (const auto& i : ideals::enumerate_ideals(a, side, bounds)) {
      list.push_back(names(a, i));
      text += "  " + radical::set_name(a, i) + "\n";
    }
    j[label] = list;
  }
  emit(c, j, text);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite graded gamma rings and gamma anneids"};
  app.require_subcommand(1);
  Config c;
  app.add_flag("--json", c.json, "Print JSON instead of text");
  app.fallthrough();

  auto* check = app.add_subcommand("check", "Run every verifier on .ggr files");
  check->add_option("paths", c.paths, "Input files")->required();

  auto* rad = app.add_subcommand("radical", "Compute the Jacobson radicals of an anneid");
  rad->add_option("path", c.paths, "Input file")->required()->expected(1);
  rad->add_flag("--require-agreement", c.require_agreement, "Exit 1 on any theorem-backed disagreement");

  auto* en = app.add_subcommand("enumerate", "Run the invariant suite over a generated corpus");
  en->add_option("--seed", c.seed, "Seed for the random tables");
  en->add_flag("--strict", c.strict, "Exit 1 when a counterexample is found");
  en->add_option("--out", c.out_dir, "Directory for counterexample .ggr files");

  auto* lin = app.add_subcommand("linearize", "Print the linearization as a .ggr gamma ring");
  lin->add_option("path", c.paths, "Input file")->required()->expected(1);

  auto* idl = app.add_subcommand("ideals", "Print the right, left and two-sided ideal lattices");
  idl->add_option("path", c.paths, "Input file")->required()->expected(1);

  for (auto* sub : {check, rad, en, lin, idl})
    sub->add_option("--max-size", c.max_size, "Carrier bound (default from GGR_MAX_SIZE)")
        ->check(CLI::PositiveNumber);
  for (auto* sub : {rad, en, idl})
    sub->add_option("--max-ideals", c.max_ideals, "Bound on the size of an ideal lattice")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kInputError;
  }

  try {
    if (*check) return cmd_check(c);
    if (*rad) return cmd_radical(c);
    if (*en) return cmd_enumerate(c);
    if (*lin) return cmd_linearize(c);
    if (*idl) return cmd_ideals(c);
  } catch (const dsl::ParseError& e) {
    std::cerr << c.paths.front() << ":" << e.what() << "\n";
    return kInputError;
  } catch (const ResourceError& e) {
    std::cerr << "resource bound exceeded: " << e.what() << "\n";
    return kResource;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return kVerifyFail;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
