#pragma once

#include "wdual/isomorphism.hpp"

#include <functional>
#include <string>
#include <vector>

namespace wdual {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct ReproduceOptions {
  unsigned threads = 1;
  IsoOptions iso;
  /// Run only these criterion ids; empty means all.
  std::vector<int> only;
  /// Called after each criterion finishes.
  std::function<void(const CriterionResult &)> on_result;
};

std::vector<CriterionResult> run_reproduction(const ReproduceOptions &opts = {});
std::string reproduction_table(const std::vector<CriterionResult> &results);

} // namespace wdual
