#pragma once

#include "wdual/partition_posets.hpp"

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace wdual::detail {

// Breadth-first closure from `start`; elements come out in rank order.
template <class Payload, class Succ>
FamilyPoset<Payload> closure(int n, Payload start, Succ successors) {
  FamilyPoset<Payload> F;
  F.n = n;
  std::unordered_map<std::string, ElementId> ids;
  std::vector<std::string> names;
  std::vector<Cover> covers;
  auto intern = [&](Payload p) {
    std::string key = p.encode();
    auto [it, fresh] = ids.emplace(key, static_cast<ElementId>(names.size()));
    if (fresh) {
      names.push_back(std::move(key));
      F.payload.push_back(std::move(p));
    }
    return it->second;
  };
  intern(std::move(start));
  for (std::size_t i = 0; i < F.payload.size(); ++i) {
    for (auto &[next, merge] : successors(F.payload[i])) {
      ElementId j = intern(std::move(next));
      covers.push_back({static_cast<ElementId>(i), j});
      F.merges.push_back(merge);
    }
  }
  F.poset = std::make_shared<const GradedPoset>(std::move(names), std::move(covers));
  return F;
}

} // namespace wdual::detail
