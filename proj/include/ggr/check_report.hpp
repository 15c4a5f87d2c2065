#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace ggr {

enum class CheckStatus { Passed, Failed, NotApplicable };

/// One named condition of a verifier. `witness` is empty unless the
/// condition failed, in which case it holds the first counterexample in
/// element-id order.
struct ConditionResult {
  std::string condition_id;
  CheckStatus status = CheckStatus::Passed;
  std::vector<std::string> witness;
  std::string note;
};

class CheckReport {
 public:
  CheckReport() = default;
  explicit CheckReport(std::string subject) : subject_(std::move(subject)) {}

  void pass(std::string id, std::string note = {});
  void fail(std::string id, std::vector<std::string> witness, std::string note = {});
  void not_applicable(std::string id, std::string note = {});
  /// Records `id` as passed when `ok`, otherwise failed with `witness`.
  void record(std::string id, bool ok, std::vector<std::string> witness = {});

  /// Appends every condition of `other`, prefixing ids with `prefix.`.
  void merge(const CheckReport& other, const std::string& prefix = {});

  bool passed() const;
  const ConditionResult* find(const std::string& id) const;
  bool condition_passed(const std::string& id) const;
  bool condition_failed(const std::string& id) const;

  const std::string& subject() const { return subject_; }
  const std::vector<ConditionResult>& conditions() const { return conditions_; }

  nlohmann::json to_json() const;
  std::string to_text() const;

 private:
  std::string subject_;
  std::vector<ConditionResult> conditions_;
};

}  // namespace ggr
