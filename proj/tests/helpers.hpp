#pragma once

#include "wdual/poset.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace testutil {

// mu(x, y) straight from the defining recursion over leq; slow on purpose.
inline std::int64_t naive_mobius(const wdual::GradedPoset &P, wdual::ElementId x,
                                 wdual::ElementId y) {
  std::map<wdual::ElementId, std::int64_t> memo;
  std::function<std::int64_t(wdual::ElementId)> mu = [&](wdual::ElementId z) -> std::int64_t {
    if (z == x)
      return 1;
    if (auto it = memo.find(z); it != memo.end())
      return it->second;
    std::int64_t s = 0;
    for (wdual::ElementId t = 0; t < P.size(); ++t)
      if (t != z && P.leq(x, t) && P.leq(t, z))
        s += mu(t);
    return memo[z] = -s;
  };
  return P.leq(x, y) ? mu(y) : 0;
}

inline std::vector<std::int64_t> naive_whitney_second(const wdual::GradedPoset &P) {
  std::vector<std::int64_t> W(static_cast<std::size_t>(P.max_rank()) + 1, 0);
  for (wdual::ElementId x = 0; x < P.size(); ++x)
    ++W[static_cast<std::size_t>(P.rank(x))];
  return W;
}

// Set partitions of {1..n} as block lists.
inline void set_partitions(int n, const std::function<void(const std::vector<std::vector<int>> &)> &fn) {
  std::vector<std::vector<int>> blocks;
  std::function<void(int)> rec = [&](int i) {
    if (i > n) {
      fn(blocks);
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(i);
      rec(i + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({i});
    rec(i + 1);
    blocks.pop_back();
  };
  rec(1);
}

inline std::int64_t binom(int n, int k) {
  if (k < 0 || k > n)
    return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

inline std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0)
    r *= b;
  return r;
}

} // namespace testutil
