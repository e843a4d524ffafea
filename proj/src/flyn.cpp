#include "closure.hpp"
#include "wdual/error.hpp"
#include "wdual/forest.hpp"

#include <algorithm>
#include <functional>

namespace wdual {

ForestFamily build_flyn(int n, Flavor f, int max_n) {
  if (n < 1 || n > max_n || n > 9)
    throw Error(ErrorKind::LimitExceeded, "n = " + std::to_string(n) + " out of range");
  auto successors = [f](const BicoloredForest &F) {
    std::vector<std::pair<BicoloredForest, Merge>> out;
    const int blocks = static_cast<int>(F.trees.size());
    for (std::size_t i = 0; i < F.trees.size(); ++i)
      for (std::size_t j = i + 1; j < F.trees.size(); ++j)
        for (int u = 0; u <= 1; ++u)
          out.emplace_back(u_merge(F, i, j, u, f),
                           Merge{F.trees[i]->valency, F.trees[j]->valency, u, blocks});
    return out;
  };
  return detail::closure(n, BicoloredForest::isolated(n), successors);
}

std::vector<Tree> all_normalized_trees(Mask leaves) {
  if (mask_size(leaves) == 1)
    return {TreeNode::make_leaf(mask_min(leaves))};
  std::vector<Tree> out;
  const Mask low = Mask{1} << mask_min(leaves);
  const Mask rest = leaves & ~low;
  // Left side holds the least leaf plus any proper subset of the rest.
  for (Mask sub = rest;; sub = (sub - 1) & rest) {
    Mask left = low | sub, right = leaves & ~left;
    if (right) {
      auto ls = all_normalized_trees(left);
      auto rs = all_normalized_trees(right);
      for (const auto &l : ls)
        for (const auto &r : rs)
          for (int u = 0; u <= 1; ++u)
            out.push_back(TreeNode::join(l, r, u));
    }
    if (sub == 0)
      break;
  }
  return out;
}

std::vector<BicoloredForest> enumerate_valid_forests(int n, Flavor f) {
  std::vector<BicoloredForest> out;
  std::vector<Tree> current;
  std::function<void(Mask)> rec = [&](Mask remaining) {
    if (!remaining) {
      out.push_back(BicoloredForest::from_trees(current));
      return;
    }
    const Mask low = Mask{1} << mask_min(remaining);
    const Mask rest = remaining & ~low;
    for (Mask sub = rest;; sub = (sub - 1) & rest) {
      for (const auto &t : all_normalized_trees(low | sub)) {
        if (!is_valid(t, f))
          continue;
        current.push_back(t);
        rec(rest & ~sub);
        current.pop_back();
      }
      if (sub == 0)
        break;
    }
  };
  rec(full_mask(n));
  std::sort(out.begin(), out.end(), [](const auto &x, const auto &y) {
    return x.encode() < y.encode();
  });
  return out;
}

} // namespace wdual
