#include "wdual/label_poset.hpp"

#include "wdual/error.hpp"

namespace wdual {

const char *to_string(LexOrder o) {
  switch (o) {
  case LexOrder::Less: return "less";
  case LexOrder::Greater: return "greater";
  case LexOrder::Equal: return "equal";
  case LexOrder::Incomparable: return "incomparable";
  }
  return "?";
}

LabelPoset::LabelPoset(std::vector<std::string> names,
                       const std::vector<std::pair<LabelId, LabelId>> &less)
    : names_(std::move(names)) {
  const std::size_t n = names_.size();
  bits_.assign((n * n + 63) / 64, 0);
  for (auto [a, b] : less) {
    if (a >= n || b >= n)
      throw Error(ErrorKind::InvalidArgument, "label index out of range");
    set(a, b);
  }
  validate_and_index();
}

LabelPoset LabelPoset::from_predicate(
    std::vector<std::string> names,
    const std::function<bool(LabelId, LabelId)> &less) {
  LabelPoset L;
  L.names_ = std::move(names);
  const auto n = static_cast<LabelId>(L.names_.size());
  L.bits_.assign((static_cast<std::size_t>(n) * n + 63) / 64, 0);
  for (LabelId a = 0; a < n; ++a)
    for (LabelId b = 0; b < n; ++b)
      if (less(a, b))
        L.set(a, b);
  L.validate_and_index();
  return L;
}

LabelPoset LabelPoset::chain(std::vector<std::string> names) {
  return from_predicate(std::move(names),
                        [](LabelId a, LabelId b) { return a < b; });
}

void LabelPoset::set(LabelId a, LabelId b) {
  std::size_t i = static_cast<std::size_t>(a) * names_.size() + b;
  bits_[i / 64] |= std::uint64_t{1} << (i % 64);
}

void LabelPoset::validate_and_index() {
  const auto n = static_cast<LabelId>(names_.size());
  for (LabelId a = 0; a < n; ++a) {
    if (less(a, a))
      throw Error(ErrorKind::InvalidArgument,
                  "label order is not irreflexive at " + names_[a]);
    for (LabelId b = 0; b < n; ++b) {
      if (!less(a, b))
        continue;
      for (LabelId c = 0; c < n; ++c)
        if (less(b, c) && !less(a, c))
          throw Error(ErrorKind::InvalidArgument,
                      "label order is not transitive: " + names_[a] + " < " +
                          names_[b] + " < " + names_[c]);
    }
  }
  index_.clear();
  for (LabelId a = 0; a < n; ++a)
    if (!index_.emplace(names_[a], a).second)
      throw Error(ErrorKind::InvalidArgument, "duplicate label " + names_[a]);
}

LabelId LabelPoset::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end())
    throw Error(ErrorKind::ElementNotFound, "no label '" + std::string(name) + "'");
  return it->second;
}

LabelPoset LabelPoset::reversed() const {
  return from_predicate(names_, [this](LabelId a, LabelId b) { return less(b, a); });
}

std::vector<std::pair<LabelId, LabelId>> LabelPoset::relation() const {
  std::vector<std::pair<LabelId, LabelId>> out;
  const auto n = static_cast<LabelId>(names_.size());
  for (LabelId a = 0; a < n; ++a)
    for (LabelId b = 0; b < n; ++b)
      if (less(a, b))
        out.emplace_back(a, b);
  return out;
}

std::string LabelPoset::render(const Word &w, std::string_view sep) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i)
      out += sep;
    out += names_[w[i]];
  }
  return out;
}

Word LabelPoset::parse_word(std::string_view text) const {
  // Greedy longest match; label names here never share prefixes ambiguously.
  Word w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    std::size_t best = 0;
    LabelId best_id = 0;
    for (LabelId a = 0; a < names_.size(); ++a) {
      const auto &nm = names_[a];
      if (nm.size() > best && text.substr(pos, nm.size()) == nm) {
        best = nm.size();
        best_id = a;
      }
    }
    if (best == 0)
      throw Error(ErrorKind::Parse, "unknown label at '" +
                                        std::string(text.substr(pos)) + "'");
    w.push_back(best_id);
    pos += best;
  }
  return w;
}

LexOrder lex_compare(const LabelPoset &L, const Word &w1, const Word &w2) {
  std::size_t n = std::min(w1.size(), w2.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (w1[i] == w2[i])
      continue;
    if (L.less(w1[i], w2[i]))
      return LexOrder::Less;
    if (L.less(w2[i], w1[i]))
      return LexOrder::Greater;
    return LexOrder::Incomparable;
  }
  if (w1.size() == w2.size())
    return LexOrder::Equal;
  return w1.size() < w2.size() ? LexOrder::Less : LexOrder::Greater;
}

} // namespace wdual
