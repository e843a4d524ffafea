#include "wdual/isomorphism.hpp"

#include "wdual/error.hpp"

#include <algorithm>
#include <map>

namespace wdual {

namespace {

// Colors both posets with a shared palette: first by local invariants, then
// by the multisets of neighbor colors until the partition stops splitting.
void refine(const GradedPoset &P, const GradedPoset &Q, std::vector<int> &cp,
            std::vector<int> &cq) {
  auto mp = mobius_values(P);
  auto mq = mobius_values(Q);
  using Key0 = std::tuple<int, std::size_t, std::size_t, std::int64_t>;
  std::map<Key0, int> palette0;
  auto key0 = [](const GradedPoset &R, const std::vector<std::int64_t> &mu,
                 ElementId x) {
    return Key0{R.rank(x), R.up(x).size(), R.down(x).size(), mu[x]};
  };
  for (ElementId x = 0; x < P.size(); ++x)
    palette0.emplace(key0(P, mp, x), 0);
  for (ElementId x = 0; x < Q.size(); ++x)
    palette0.emplace(key0(Q, mq, x), 0);
  int next = 0;
  for (auto &[k, v] : palette0)
    v = next++;
  cp.resize(P.size());
  cq.resize(Q.size());
  for (ElementId x = 0; x < P.size(); ++x)
    cp[x] = palette0[key0(P, mp, x)];
  for (ElementId x = 0; x < Q.size(); ++x)
    cq[x] = palette0[key0(Q, mq, x)];

  std::size_t classes = palette0.size();
  for (;;) {
    std::map<std::vector<int>, int> palette;
    auto key = [](const GradedPoset &R, const std::vector<int> &col,
                  ElementId x) {
      std::vector<int> k{col[x]};
      std::vector<int> ups, downs;
      for (CoverId c : R.up(x))
        ups.push_back(col[R.cover(c).upper]);
      for (CoverId c : R.down(x))
        downs.push_back(col[R.cover(c).lower]);
      std::sort(ups.begin(), ups.end());
      std::sort(downs.begin(), downs.end());
      k.insert(k.end(), ups.begin(), ups.end());
      k.push_back(-1);
      k.insert(k.end(), downs.begin(), downs.end());
      return k;
    };
    std::vector<std::vector<int>> kp(P.size()), kq(Q.size());
    for (ElementId x = 0; x < P.size(); ++x)
      palette.emplace(kp[x] = key(P, cp, x), 0);
    for (ElementId x = 0; x < Q.size(); ++x)
      palette.emplace(kq[x] = key(Q, cq, x), 0);
    next = 0;
    for (auto &[k, v] : palette)
      v = next++;
    for (ElementId x = 0; x < P.size(); ++x)
      cp[x] = palette[kp[x]];
    for (ElementId x = 0; x < Q.size(); ++x)
      cq[x] = palette[kq[x]];
    if (palette.size() == classes)
      break;
    classes = palette.size();
  }
}

struct Search {
  const GradedPoset &P;
  const GradedPoset &Q;
  const std::vector<int> &cp;
  const std::vector<std::vector<ElementId>> &by_color;
  const IsoOptions &opts;
  std::vector<ElementId> order;
  std::vector<ElementId> f;
  std::vector<char> used;
  std::vector<char> is_down_q;
  std::uint64_t nodes = 0;

  static constexpr ElementId kUnset = ~ElementId{0};

  bool consistent(ElementId p, ElementId q) {
    for (CoverId c : Q.down(q))
      is_down_q[Q.cover(c).lower] = 1;
    bool ok = true;
    for (CoverId c : P.down(p)) {
      ElementId img = f[P.cover(c).lower];
      if (img == kUnset || !is_down_q[img]) {
        ok = false;
        break;
      }
    }
    for (CoverId c : Q.down(q))
      is_down_q[Q.cover(c).lower] = 0;
    return ok;
  }

  bool run(std::size_t k) {
    if (k == order.size())
      return true;
    if (++nodes > opts.node_budget)
      throw Error(ErrorKind::BudgetExhausted,
                  "isomorphism search exceeded " +
                      std::to_string(opts.node_budget) + " nodes");
    if (opts.deadline && (nodes & 0xfff) == 0 &&
        std::chrono::steady_clock::now() > *opts.deadline)
      throw Error(ErrorKind::BudgetExhausted, "isomorphism search timed out");
    ElementId p = order[k];
    for (ElementId q : by_color[static_cast<std::size_t>(cp[p])]) {
      if (used[q] || !consistent(p, q))
        continue;
      f[p] = q;
      used[q] = 1;
      if (run(k + 1))
        return true;
      used[q] = 0;
      f[p] = kUnset;
    }
    return false;
  }
};

} // namespace

bool is_isomorphism(const GradedPoset &P, const GradedPoset &Q,
                    const std::vector<ElementId> &f) {
  if (P.size() != Q.size() || f.size() != P.size() ||
      P.cover_count() != Q.cover_count())
    return false;
  std::vector<char> hit(Q.size(), 0);
  for (ElementId q : f) {
    if (q >= Q.size() || hit[q])
      return false;
    hit[q] = 1;
  }
  for (const Cover &c : P.covers())
    if (!Q.find_cover(f[c.lower], f[c.upper]))
      return false;
  return true;
}

std::optional<std::vector<ElementId>>
are_isomorphic(const GradedPoset &P, const GradedPoset &Q,
               const IsoOptions &opts) {
  if (P.size() != Q.size() || P.cover_count() != Q.cover_count() ||
      whitney_second(P) != whitney_second(Q))
    return std::nullopt;
  std::vector<int> cp, cq;
  refine(P, Q, cp, cq);
  std::vector<int> hp(P.size() + Q.size(), 0), hq(P.size() + Q.size(), 0);
  for (int c : cp)
    ++hp[static_cast<std::size_t>(c)];
  for (int c : cq)
    ++hq[static_cast<std::size_t>(c)];
  if (hp != hq)
    return std::nullopt;

  std::vector<std::vector<ElementId>> by_color(P.size() + Q.size());
  for (ElementId q = 0; q < Q.size(); ++q)
    by_color[static_cast<std::size_t>(cq[q])].push_back(q);

  Search s{P, Q, cp, by_color, opts, P.rank_order(), {}, {}, {}};
  s.f.assign(P.size(), Search::kUnset);
  s.used.assign(Q.size(), 0);
  s.is_down_q.assign(Q.size(), 0);
  if (!s.run(0))
    return std::nullopt;
  return s.f;
}

} // namespace wdual
