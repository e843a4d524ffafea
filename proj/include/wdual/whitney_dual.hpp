#pragma once

#include "wdual/labeling.hpp"

#include <json.hpp>

#include <memory>
#include <string>
#include <vector>

namespace wdual {

/// Swaps the leftmost ascent until none is left.
Word sort_word(const LabelPoset &L, Word w);

/// An ascent-free 0-chain, identified by its top and its word.
struct DualElement {
  ElementId top = 0;
  Word word;
  auto operator<=>(const DualElement &) const = default;
};

struct DualPoset {
  std::shared_ptr<const GradedPoset> poset;
  std::vector<DualElement> elements;
  /// False when built with the EW check bypassed.
  bool validated = true;
};

struct ConstructOptions {
  bool bypass_check = false;
  CheckOptions check;
};

/// Elements (x, w) with w the word of an ascent-free 0-x chain; (x, w) is
/// covered by (y, sort(w . label(x < y))). Requires an EW labeling unless
/// the check is bypassed.
DualPoset construct_R(const EdgeLabeling &L, const ConstructOptions &opts = {});

/// Ascent-free saturated chains from the minimum, grouped by top element.
std::vector<DualElement> ascent_free_zero_chains(const EdgeLabeling &L);

std::string dual_element_name(const EdgeLabeling &L, const DualElement &e);
nlohmann::json dual_element_to_json(const EdgeLabeling &L, const DualElement &e);

} // namespace wdual
