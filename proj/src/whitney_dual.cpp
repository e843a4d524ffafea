#include "wdual/whitney_dual.hpp"

#include "wdual/error.hpp"

#include <algorithm>
#include <map>

namespace wdual {

Word sort_word(const LabelPoset &L, Word w) {
  const std::size_t guard = w.size() * w.size();
  std::size_t steps = 0;
  for (;;) {
    std::size_t i = 0;
    while (i + 1 < w.size() && !L.less(w[i], w[i + 1]))
      ++i;
    if (i + 1 >= w.size())
      return w;
    if (++steps > guard)
      throw Error(ErrorKind::Internal, "sort_word exceeded its step guard");
    std::swap(w[i], w[i + 1]);
  }
}

std::string dual_element_name(const EdgeLabeling &L, const DualElement &e) {
  return L.poset().name(e.top) + " [" + L.labels().render(e.word) + "]";
}

nlohmann::json dual_element_to_json(const EdgeLabeling &L, const DualElement &e) {
  std::vector<std::string> word;
  for (LabelId a : e.word)
    word.push_back(L.labels().name(a));
  return {{"top", L.poset().name(e.top)}, {"word", word}};
}

DualPoset construct_R(const EdgeLabeling &L, const ConstructOptions &opts) {
  if (!opts.bypass_check) {
    Report r = check_EW(L, opts.check);
    if (!r.passed())
      throw Error(ErrorKind::Precondition,
                  "labeling is not EW (" + r.witnesses.front().check +
                      " fails); construction needs the bypass flag");
  }
  const GradedPoset &P = L.poset();
  DualPoset R;
  R.validated = !opts.bypass_check;
  std::map<DualElement, ElementId> ids;
  std::vector<std::string> names;
  std::vector<Cover> covers;
  auto intern = [&](DualElement e) {
    auto [it, fresh] = ids.emplace(e, static_cast<ElementId>(R.elements.size()));
    if (fresh) {
      names.push_back(dual_element_name(L, e));
      R.elements.push_back(std::move(e));
    }
    return it->second;
  };
  intern({P.bottom(), {}});
  for (std::size_t i = 0; i < R.elements.size(); ++i) {
    for (CoverId c : P.up(R.elements[i].top)) {
      Word w = R.elements[i].word;
      w.push_back(L.label(c));
      ElementId j = intern({P.cover(c).upper, sort_word(L.labels(), std::move(w))});
      covers.push_back({static_cast<ElementId>(i), j});
    }
  }
  R.poset = std::make_shared<const GradedPoset>(std::move(names), std::move(covers));
  return R;
}

std::vector<DualElement> ascent_free_zero_chains(const EdgeLabeling &L) {
  const GradedPoset &P = L.poset();
  std::vector<std::vector<DualElement>> by_top(P.size());
  walk_chains_from(P, P.bottom(), [&](std::span<const CoverId> chain, ElementId last) {
    std::size_t k = chain.size();
    if (k >= 2 && L.labels().less(L.label(chain[k - 2]), L.label(chain[k - 1])))
      return false;
    by_top[last].push_back({last, L.word(chain)});
    return true;
  });
  std::vector<DualElement> out;
  for (ElementId x : P.rank_order())
    for (auto &e : by_top[x])
      out.push_back(std::move(e));
  return out;
}

} // namespace wdual
