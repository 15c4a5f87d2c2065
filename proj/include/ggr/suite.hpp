#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ggr/corpus.hpp"
#include "ggr/radical.hpp"

namespace ggr::suite {

struct Tally {
  std::string check;
  std::size_t applicable = 0;
  std::size_t passed = 0;
};

struct Finding {
  std::string entry;
  std::string check;
  std::string detail;
  std::string ggr;  // the anneid in canonical text form
};

struct SuiteResult {
  std::size_t anneids = 0;
  std::size_t regular = 0;
  std::vector<Tally> tallies;
  std::vector<Finding> findings;
  nlohmann::json to_json() const;
};

/// Invariant checks for one anneid; tallies are accumulated into `out`.
void check_anneid(const corpus::Entry& e, const radical::RadicalOptions& options, SuiteResult& out);

/// Generates the corpus and runs every check on each entry, in corpus order.
SuiteResult run_suite(const corpus::CorpusOptions& corpus_options = {},
                      const radical::RadicalOptions& options = {});

}  // namespace ggr::suite
