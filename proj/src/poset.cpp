#include "wdual/poset.hpp"

#include "wdual/error.hpp"

#include <algorithm>
#include <deque>

namespace wdual {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(ErrorKind::Overflow, "Mobius value exceeds int64 range");
  return r;
}

std::int64_t checked_neg(std::int64_t a) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(std::int64_t{0}, a, &r))
    throw Error(ErrorKind::Overflow, "Mobius value exceeds int64 range");
  return r;
}

// mu(S[0], z) for every z in S. S must be sorted by rank, start with its
// minimum, and be convex in P.
std::vector<std::int64_t> mobius_on(const GradedPoset &P,
                                    const std::vector<ElementId> &S) {
  const std::size_t m = S.size();
  const std::size_t stride = (m + 63) / 64;
  std::vector<std::int32_t> local(P.size(), -1);
  for (std::size_t i = 0; i < m; ++i)
    local[S[i]] = static_cast<std::int32_t>(i);
  std::vector<std::uint64_t> below(m * stride, 0);
  std::vector<std::int64_t> mu(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    std::uint64_t *row = &below[i * stride];
    for (CoverId c : P.down(S[i])) {
      std::int32_t j = local[P.cover(c).lower];
      if (j < 0)
        continue;
      const std::uint64_t *other = &below[static_cast<std::size_t>(j) * stride];
      for (std::size_t w = 0; w < stride; ++w)
        row[w] |= other[w];
    }
    if (i == 0) {
      mu[0] = 1;
    } else {
      std::int64_t sum = 0;
      for (std::size_t w = 0; w < stride; ++w) {
        std::uint64_t bits = row[w];
        while (bits) {
          int b = __builtin_ctzll(bits);
          bits &= bits - 1;
          sum = checked_add(sum, mu[w * 64 + static_cast<std::size_t>(b)]);
        }
      }
      mu[i] = checked_neg(sum);
    }
    row[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  return mu;
}

std::vector<ElementId> sorted_by_rank(const GradedPoset &P,
                                      std::vector<ElementId> v) {
  std::sort(v.begin(), v.end(), [&](ElementId a, ElementId b) {
    return P.rank(a) != P.rank(b) ? P.rank(a) < P.rank(b) : a < b;
  });
  return v;
}

std::vector<std::int64_t> padded_abs(std::vector<std::int64_t> v,
                                     std::size_t n) {
  v.resize(n, 0);
  for (auto &x : v)
    x = x < 0 ? -x : x;
  return v;
}

} // namespace

GradedPoset::GradedPoset(std::vector<std::string> names,
                         std::vector<Cover> covers)
    : names_(std::move(names)), covers_(std::move(covers)) {
  const std::size_t n = names_.size();
  if (n == 0)
    throw Error(ErrorKind::NoMinimum, "poset has no elements");
  index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    if (!index_.emplace(names_[i], static_cast<ElementId>(i)).second)
      throw Error(ErrorKind::InvalidArgument,
                  "duplicate element name '" + names_[i] + "'");
  up_.assign(n, {});
  down_.assign(n, {});
  for (std::size_t c = 0; c < covers_.size(); ++c) {
    const Cover &cv = covers_[c];
    if (cv.lower >= n || cv.upper >= n)
      throw Error(ErrorKind::ElementNotFound, "cover index out of range");
    if (cv.lower == cv.upper)
      throw Error(ErrorKind::NotGraded, "self-loop at '" + names_[cv.lower] + "'");
    up_[cv.lower].push_back(static_cast<CoverId>(c));
    down_[cv.upper].push_back(static_cast<CoverId>(c));
  }
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<ElementId> tops;
    for (CoverId c : up_[x])
      tops.push_back(covers_[c].upper);
    std::sort(tops.begin(), tops.end());
    if (std::adjacent_find(tops.begin(), tops.end()) != tops.end())
      throw Error(ErrorKind::InvalidArgument,
                  "duplicate cover above '" + names_[x] + "'");
  }

  std::vector<ElementId> sources;
  for (std::size_t x = 0; x < n; ++x)
    if (down_[x].empty())
      sources.push_back(static_cast<ElementId>(x));
  if (sources.size() != 1)
    throw Error(ErrorKind::NoMinimum,
                std::to_string(sources.size()) + " minimal elements");
  bottom_ = sources[0];

  // Longest-path ranks via Kahn's algorithm.
  rank_.assign(n, 0);
  std::vector<std::size_t> indeg(n);
  for (std::size_t x = 0; x < n; ++x)
    indeg[x] = down_[x].size();
  std::deque<ElementId> queue{bottom_};
  std::size_t seen = 0;
  while (!queue.empty()) {
    ElementId x = queue.front();
    queue.pop_front();
    ++seen;
    for (CoverId c : up_[x]) {
      ElementId y = covers_[c].upper;
      rank_[y] = std::max(rank_[y], rank_[x] + 1);
      if (--indeg[y] == 0)
        queue.push_back(y);
    }
  }
  if (seen != n)
    throw Error(ErrorKind::NotGraded, "cover digraph has a cycle");

  for (const Cover &cv : covers_) {
    if (rank_[cv.upper] == rank_[cv.lower] + 1)
      continue;
    // Either the pair is implied by a longer path or the poset is not graded.
    std::vector<char> seen_up(n, 0);
    std::vector<ElementId> stack;
    for (CoverId c : up_[cv.lower])
      if (covers_[c].upper != cv.upper)
        stack.push_back(covers_[c].upper);
    bool implied = false;
    while (!stack.empty() && !implied) {
      ElementId z = stack.back();
      stack.pop_back();
      if (z == cv.upper) {
        implied = true;
        break;
      }
      if (seen_up[z])
        continue;
      seen_up[z] = 1;
      for (CoverId c : up_[z])
        stack.push_back(covers_[c].upper);
    }
    if (implied)
      throw Error(ErrorKind::NotReduced, "cover '" + names_[cv.lower] + "' < '" +
                                             names_[cv.upper] +
                                             "' is implied by other covers");
    throw Error(ErrorKind::NotGraded, "cover '" + names_[cv.lower] + "' < '" +
                                          names_[cv.upper] +
                                          "' skips a rank");
  }

  max_rank_ = *std::max_element(rank_.begin(), rank_.end());
  rank_order_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    rank_order_[i] = static_cast<ElementId>(i);
  std::stable_sort(rank_order_.begin(), rank_order_.end(),
                   [&](ElementId a, ElementId b) { return rank_[a] < rank_[b]; });
}

const std::string &GradedPoset::name(ElementId x) const {
  if (x >= names_.size())
    throw Error(ErrorKind::ElementNotFound, "element id " + std::to_string(x));
  return names_[x];
}

ElementId GradedPoset::find(std::string_view name) const {
  auto r = try_find(name);
  if (!r)
    throw Error(ErrorKind::ElementNotFound, "no element '" + std::string(name) + "'");
  return *r;
}

std::optional<ElementId> GradedPoset::try_find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

std::optional<CoverId> GradedPoset::find_cover(ElementId lower,
                                               ElementId upper) const {
  for (CoverId c : up_[lower])
    if (covers_[c].upper == upper)
      return c;
  return std::nullopt;
}

std::vector<ElementId> GradedPoset::maximal_elements() const {
  std::vector<ElementId> out;
  for (std::size_t x = 0; x < size(); ++x)
    if (up_[x].empty())
      out.push_back(static_cast<ElementId>(x));
  return out;
}

bool GradedPoset::leq(ElementId x, ElementId y) const {
  if (x == y)
    return true;
  if (rank_[x] >= rank_[y])
    return false;
  std::vector<char> seen(size(), 0);
  std::vector<ElementId> stack{x};
  while (!stack.empty()) {
    ElementId z = stack.back();
    stack.pop_back();
    for (CoverId c : up_[z]) {
      ElementId w = covers_[c].upper;
      if (w == y)
        return true;
      if (!seen[w] && rank_[w] < rank_[y]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return false;
}

std::vector<ElementId> GradedPoset::up_set(ElementId x) const {
  std::vector<char> seen(size(), 0);
  std::vector<ElementId> out{x}, stack{x};
  seen[x] = 1;
  while (!stack.empty()) {
    ElementId z = stack.back();
    stack.pop_back();
    for (CoverId c : up_[z]) {
      ElementId w = covers_[c].upper;
      if (!seen[w]) {
        seen[w] = 1;
        out.push_back(w);
        stack.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElementId> GradedPoset::down_set(ElementId x) const {
  std::vector<char> seen(size(), 0);
  std::vector<ElementId> out{x}, stack{x};
  seen[x] = 1;
  while (!stack.empty()) {
    ElementId z = stack.back();
    stack.pop_back();
    for (CoverId c : down_[z]) {
      ElementId w = covers_[c].lower;
      if (!seen[w]) {
        seen[w] = 1;
        out.push_back(w);
        stack.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t mobius(const GradedPoset &P, ElementId x) {
  if (x >= P.size())
    throw Error(ErrorKind::ElementNotFound, "element id " + std::to_string(x));
  auto S = sorted_by_rank(P, P.down_set(x));
  return mobius_on(P, S).back();
}

std::vector<std::int64_t> mobius_values(const GradedPoset &P) {
  const auto &order = P.rank_order();
  auto local = mobius_on(P, order);
  std::vector<std::int64_t> mu(P.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    mu[order[i]] = local[i];
  return mu;
}

std::int64_t mobius_between(const GradedPoset &P, ElementId x, ElementId y) {
  if (x >= P.size() || y >= P.size())
    throw Error(ErrorKind::ElementNotFound, "element id out of range");
  if (!P.leq(x, y))
    return 0;
  auto sub = interval(P, x, y);
  auto S = sorted_by_rank(P, sub.parent_element);
  return mobius_on(P, S).back();
}

std::vector<std::int64_t> whitney_first(const GradedPoset &P) {
  std::vector<std::int64_t> w(static_cast<std::size_t>(P.max_rank()) + 1, 0);
  auto mu = mobius_values(P);
  for (std::size_t x = 0; x < P.size(); ++x) {
    auto &slot = w[static_cast<std::size_t>(P.rank(static_cast<ElementId>(x)))];
    slot = checked_add(slot, mu[x]);
  }
  return w;
}

std::vector<std::int64_t> whitney_second(const GradedPoset &P) {
  std::vector<std::int64_t> W(static_cast<std::size_t>(P.max_rank()) + 1, 0);
  for (std::size_t x = 0; x < P.size(); ++x)
    ++W[static_cast<std::size_t>(P.rank(static_cast<ElementId>(x)))];
  return W;
}

bool is_whitney_dual(const GradedPoset &P, const GradedPoset &Q) {
  std::size_t n = static_cast<std::size_t>(std::max(P.max_rank(), Q.max_rank())) + 1;
  auto wp = padded_abs(whitney_first(P), n), wq = padded_abs(whitney_first(Q), n);
  auto Wp = whitney_second(P), Wq = whitney_second(Q);
  Wp.resize(n, 0);
  Wq.resize(n, 0);
  return wp == Wq && wq == Wp;
}

bool is_whitney_twin(const GradedPoset &P, const GradedPoset &Q) {
  return whitney_first(P) == whitney_first(Q) &&
         whitney_second(P) == whitney_second(Q);
}

GradedPoset order_dual(const GradedPoset &P) {
  auto tops = P.maximal_elements();
  if (tops.size() != 1)
    throw Error(ErrorKind::NoMaximum,
                "order dual needs a unique maximum, found " +
                    std::to_string(tops.size()) + " maximal elements");
  std::vector<Cover> covers;
  covers.reserve(P.cover_count());
  for (const Cover &c : P.covers())
    covers.push_back({c.upper, c.lower});
  return GradedPoset(P.names(), std::move(covers));
}

SubPoset induced_subposet(const GradedPoset &P,
                          const std::vector<ElementId> &elements) {
  std::vector<std::int32_t> local(P.size(), -1);
  std::vector<ElementId> parent = elements;
  std::sort(parent.begin(), parent.end());
  parent.erase(std::unique(parent.begin(), parent.end()), parent.end());
  std::vector<std::string> names;
  names.reserve(parent.size());
  for (std::size_t i = 0; i < parent.size(); ++i) {
    if (parent[i] >= P.size())
      throw Error(ErrorKind::ElementNotFound, "element id out of range");
    local[parent[i]] = static_cast<std::int32_t>(i);
    names.push_back(P.name(parent[i]));
  }
  std::vector<Cover> covers;
  std::vector<CoverId> parent_cover;
  for (std::size_t c = 0; c < P.cover_count(); ++c) {
    const Cover &cv = P.cover(static_cast<CoverId>(c));
    if (local[cv.lower] >= 0 && local[cv.upper] >= 0) {
      covers.push_back({static_cast<ElementId>(local[cv.lower]),
                        static_cast<ElementId>(local[cv.upper])});
      parent_cover.push_back(static_cast<CoverId>(c));
    }
  }
  return SubPoset{GradedPoset(std::move(names), std::move(covers)),
                  std::move(parent), std::move(parent_cover)};
}

SubPoset interval(const GradedPoset &P, ElementId x, ElementId y) {
  if (x >= P.size() || y >= P.size())
    throw Error(ErrorKind::ElementNotFound, "element id out of range");
  if (!P.leq(x, y))
    throw Error(ErrorKind::InvalidArgument,
                "'" + P.name(x) + "' is not below '" + P.name(y) + "'");
  auto ups = P.up_set(x);
  auto downs = P.down_set(y);
  std::vector<ElementId> both;
  std::set_intersection(ups.begin(), ups.end(), downs.begin(), downs.end(),
                        std::back_inserter(both));
  return induced_subposet(P, both);
}

SubPoset upper_filter(const GradedPoset &P, ElementId x) {
  if (x >= P.size())
    throw Error(ErrorKind::ElementNotFound, "element id out of range");
  return induced_subposet(P, P.up_set(x));
}

namespace {

void walk(const GradedPoset &P, ElementId x, std::vector<CoverId> &chain,
          const ChainVisitor &visit) {
  if (!visit(chain, x))
    return;
  for (CoverId c : P.up(x)) {
    chain.push_back(c);
    walk(P, P.cover(c).upper, chain, visit);
    chain.pop_back();
  }
}

} // namespace

void walk_chains_from(const GradedPoset &P, ElementId x,
                      const ChainVisitor &visit) {
  std::vector<CoverId> chain;
  walk(P, x, chain, visit);
}

void saturated_chains(
    const GradedPoset &P, ElementId x, ElementId y,
    const std::function<bool(std::span<const ElementId>)> &visit) {
  if (x >= P.size() || y >= P.size())
    throw Error(ErrorKind::ElementNotFound, "element id out of range");
  std::vector<char> below(P.size(), 0);
  for (ElementId z : P.down_set(y))
    below[z] = 1;
  if (!below[x])
    return;
  std::vector<ElementId> chain{x};
  bool stop = false;
  std::function<void(ElementId)> rec = [&](ElementId z) {
    if (z == y) {
      stop = !visit(chain);
      return;
    }
    for (CoverId c : P.up(z)) {
      ElementId w = P.cover(c).upper;
      if (!below[w])
        continue;
      chain.push_back(w);
      rec(w);
      chain.pop_back();
      if (stop)
        return;
    }
  };
  rec(x);
}

} // namespace wdual
