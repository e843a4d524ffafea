#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace wdual {

using ElementId = std::uint32_t;
using CoverId = std::uint32_t;

struct Cover {
  ElementId lower;
  ElementId upper;
};

/// Finite graded poset with a unique minimum, stored as its Hasse diagram.
/// Element and cover ids are dense and follow construction order.
class GradedPoset {
public:
  /// Validates the input: element names must be unique, the cover digraph
  /// must be acyclic with a single source, and every cover must raise rank
  /// by exactly one (rank is the longest path from the minimum).
  GradedPoset(std::vector<std::string> names, std::vector<Cover> covers);

  [[nodiscard]] std::size_t size() const { return names_.size(); }
  [[nodiscard]] std::size_t cover_count() const { return covers_.size(); }
  [[nodiscard]] const std::string &name(ElementId x) const;
  [[nodiscard]] const std::vector<std::string> &names() const {
    return names_;
  }
  [[nodiscard]] ElementId find(std::string_view name) const;
  [[nodiscard]] std::optional<ElementId> try_find(std::string_view name) const;

  [[nodiscard]] const Cover &cover(CoverId c) const { return covers_[c]; }
  [[nodiscard]] const std::vector<Cover> &covers() const { return covers_; }
  [[nodiscard]] std::span<const CoverId> up(ElementId x) const {
    return up_[x];
  }
  [[nodiscard]] std::span<const CoverId> down(ElementId x) const {
    return down_[x];
  }
  [[nodiscard]] std::optional<CoverId> find_cover(ElementId lower,
                                                  ElementId upper) const;

  [[nodiscard]] int rank(ElementId x) const { return rank_[x]; }
  [[nodiscard]] int max_rank() const { return max_rank_; }
  [[nodiscard]] ElementId bottom() const { return bottom_; }
  /// Elements sorted by (rank, id).
  [[nodiscard]] const std::vector<ElementId> &rank_order() const {
    return rank_order_;
  }
  [[nodiscard]] std::vector<ElementId> maximal_elements() const;

  [[nodiscard]] bool leq(ElementId x, ElementId y) const;
  [[nodiscard]] std::vector<ElementId> up_set(ElementId x) const;
  [[nodiscard]] std::vector<ElementId> down_set(ElementId x) const;

private:
  std::vector<std::string> names_;
  std::vector<Cover> covers_;
  std::vector<std::vector<CoverId>> up_;
  std::vector<std::vector<CoverId>> down_;
  std::vector<int> rank_;
  std::vector<ElementId> rank_order_;
  std::unordered_map<std::string, ElementId> index_;
  ElementId bottom_ = 0;
  int max_rank_ = 0;
};

/// An induced subposet together with the ids it had in its parent.
struct SubPoset {
  GradedPoset poset;
  std::vector<ElementId> parent_element;
  std::vector<CoverId> parent_cover;
};

/// mu(0, x).
std::int64_t mobius(const GradedPoset &P, ElementId x);
/// mu(0, x) for every x, indexed by element id.
std::vector<std::int64_t> mobius_values(const GradedPoset &P);
/// mu(x, y); zero when x is not below y.
std::int64_t mobius_between(const GradedPoset &P, ElementId x, ElementId y);

std::vector<std::int64_t> whitney_first(const GradedPoset &P);
std::vector<std::int64_t> whitney_second(const GradedPoset &P);
bool is_whitney_dual(const GradedPoset &P, const GradedPoset &Q);
bool is_whitney_twin(const GradedPoset &P, const GradedPoset &Q);

/// Reverses every cover. Cover ids are preserved. Requires a unique maximum.
GradedPoset order_dual(const GradedPoset &P);

SubPoset interval(const GradedPoset &P, ElementId x, ElementId y);
SubPoset upper_filter(const GradedPoset &P, ElementId x);
/// Subposet on `elements` keeping the covers between them; the result must
/// itself be graded with a unique minimum.
SubPoset induced_subposet(const GradedPoset &P,
                          const std::vector<ElementId> &elements);

/// Depth-first walk over saturated chains starting at x. The visitor sees
/// every chain (as its cover ids, plus its last element) and returns whether
/// to extend it further.
using ChainVisitor =
    std::function<bool(std::span<const CoverId> chain, ElementId last)>;
void walk_chains_from(const GradedPoset &P, ElementId x,
                      const ChainVisitor &visit);

/// Every saturated chain from x to y in depth-first order; the visitor
/// receives the elements and returns false to stop early.
void saturated_chains(
    const GradedPoset &P, ElementId x, ElementId y,
    const std::function<bool(std::span<const ElementId>)> &visit);

} // namespace wdual
