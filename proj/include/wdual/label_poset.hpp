#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace wdual {

using LabelId = std::uint32_t;
using Word = std::vector<LabelId>;

enum class LexOrder { Less, Greater, Equal, Incomparable };

const char *to_string(LexOrder o);

/// Finite partial order on edge labels, materialized as a bit matrix.
class LabelPoset {
public:
  /// `less` lists every strictly-less pair; it must already be transitive.
  LabelPoset(std::vector<std::string> names,
             const std::vector<std::pair<LabelId, LabelId>> &less);

  static LabelPoset from_predicate(std::vector<std::string> names,
                                   const std::function<bool(LabelId, LabelId)> &less);
  /// Total order following the order of `names`.
  static LabelPoset chain(std::vector<std::string> names);

  [[nodiscard]] std::size_t size() const { return names_.size(); }
  [[nodiscard]] const std::string &name(LabelId a) const { return names_[a]; }
  [[nodiscard]] const std::vector<std::string> &names() const { return names_; }
  [[nodiscard]] LabelId find(std::string_view name) const;

  [[nodiscard]] bool less(LabelId a, LabelId b) const {
    std::size_t i = static_cast<std::size_t>(a) * names_.size() + b;
    return (bits_[i / 64] >> (i % 64)) & 1U;
  }
  [[nodiscard]] bool comparable(LabelId a, LabelId b) const {
    return a == b || less(a, b) || less(b, a);
  }

  /// Same labels with every relation flipped.
  [[nodiscard]] LabelPoset reversed() const;
  [[nodiscard]] std::vector<std::pair<LabelId, LabelId>> relation() const;

  [[nodiscard]] std::string render(const Word &w, std::string_view sep = "") const;
  /// Parses a word written as concatenated label names; fails on ambiguity.
  [[nodiscard]] Word parse_word(std::string_view text) const;

private:
  LabelPoset() = default;
  void set(LabelId a, LabelId b);
  void validate_and_index();

  std::vector<std::string> names_;
  std::vector<std::uint64_t> bits_;
  std::unordered_map<std::string, LabelId> index_;
};

LexOrder lex_compare(const LabelPoset &L, const Word &w1, const Word &w2);

} // namespace wdual
