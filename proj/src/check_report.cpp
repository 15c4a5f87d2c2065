#include "ggr/check_report.hpp"

#include <algorithm>
#include <sstream>

namespace ggr {

void CheckReport::pass(std::string id, std::string note) {
  conditions_.push_back({std::move(id), CheckStatus::Passed, {}, std::move(note)});
}

void CheckReport::fail(std::string id, std::vector<std::string> witness, std::string note) {
  conditions_.push_back({std::move(id), CheckStatus::Failed, std::move(witness), std::move(note)});
}

void CheckReport::not_applicable(std::string id, std::string note) {
  conditions_.push_back({std::move(id), CheckStatus::NotApplicable, {}, std::move(note)});
}

void CheckReport::record(std::string id, bool ok, std::vector<std::string> witness) {
  if (ok)
    pass(std::move(id));
  else
    fail(std::move(id), std::move(witness));
}

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
  for (const auto& c : other.conditions_) {
    ConditionResult copy = c;
    if (!prefix.empty()) copy.condition_id = prefix + "." + copy.condition_id;
    conditions_.push_back(std::move(copy));
  }
}

bool CheckReport::passed() const {
  return std::none_of(conditions_.begin(), conditions_.end(),
                      [](const ConditionResult& c) { return c.status == CheckStatus::Failed; });
}

const ConditionResult* CheckReport::find(const std::string& id) const {
  for (const auto& c : conditions_)
    if (c.condition_id == id) return &c;
  return nullptr;
}

bool CheckReport::condition_passed(const std::string& id) const {
  const auto* c = find(id);
  return c && c->status == CheckStatus::Passed;
}

bool CheckReport::condition_failed(const std::string& id) const {
  const auto* c = find(id);
  return c && c->status == CheckStatus::Failed;
}

namespace {
const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Passed: return "passed";
    case CheckStatus::Failed: return "failed";
    case CheckStatus::NotApplicable: return "not_applicable";
  }
  return "?";
}
}  // namespace

nlohmann::json CheckReport::to_json() const {
  nlohmann::json conds = nlohmann::json::array();
  for (const auto& c : conditions_) {
    nlohmann::json j;
    j["condition_id"] = c.condition_id;
    j["passed"] = c.status != CheckStatus::Failed;
    j["status"] = status_name(c.status);
    j["witness"] = c.witness;
    if (!c.note.empty()) j["note"] = c.note;
    conds.push_back(std::move(j));
  }
  nlohmann::json out;
  out["subject"] = subject_;
  out["passed"] = passed();
  out["conditions"] = std::move(conds);
  return out;
}

std::string CheckReport::to_text() const {
  std::ostringstream os;
  os << subject_ << ": " << (passed() ? "PASS" : "FAIL") << '\n';
  for (const auto& c : conditions_) {
    os << "  [" << status_name(c.status) << "] " << c.condition_id;
    if (!c.witness.empty()) {
      os << "  witness:";
      for (const auto& w : c.witness) os << ' ' << w;
    }
    if (!c.note.empty()) os << "  (" << c.note << ')';
    os << '\n';
  }
  return os.str();
}

}  // namespace ggr
