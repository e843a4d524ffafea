#pragma once

#include "wdual/poset.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace wdual {

struct IsoOptions {
  /// Backtracking nodes allowed before giving up with BudgetExhausted.
  std::uint64_t node_budget = 50'000'000;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// A rank- and cover-preserving bijection P -> Q indexed by P's element ids,
/// or nullopt when none exists.
std::optional<std::vector<ElementId>>
are_isomorphic(const GradedPoset &P, const GradedPoset &Q,
               const IsoOptions &opts = {});

/// True when f is a bijection mapping covers of P exactly onto covers of Q.
bool is_isomorphism(const GradedPoset &P, const GradedPoset &Q,
                    const std::vector<ElementId> &f);

} // namespace wdual
