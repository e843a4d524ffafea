#include "wdual/partition_posets.hpp"

#include "closure.hpp"
#include "wdual/error.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <utility>

namespace wdual {

namespace {

void check_n(int n, int max_n) {
  if (n < 1 || n > max_n || n > 9)
    throw Error(ErrorKind::LimitExceeded,
                "n = " + std::to_string(n) + " outside 1.." +
                    std::to_string(std::min(max_n, 9)));
}

template <class Partition>
std::vector<std::pair<Partition, Merge>> partition_successors(const Partition &p) {
  std::vector<std::pair<Partition, Merge>> out;
  const int blocks = static_cast<int>(p.blocks.size());
  for (std::size_t i = 0; i < p.blocks.size(); ++i)
    for (std::size_t j = i + 1; j < p.blocks.size(); ++j)
      for (int u = 0; u <= 1; ++u)
        out.emplace_back(p.merged(i, j, u),
                         Merge{mask_min(p.blocks[i].mask),
                               mask_min(p.blocks[j].mask), u, blocks});
  return out;
}

std::vector<std::pair<RootedForest, Merge>> forest_successors(const RootedForest &f) {
  // Roots listed by the least vertex of their tree.
  std::vector<int> roots, least;
  std::vector<char> done(f.parent.size(), 0);
  for (int v = 1; v <= f.n(); ++v) {
    int r = f.root_of(v);
    if (!done[static_cast<std::size_t>(r)]) {
      done[static_cast<std::size_t>(r)] = 1;
      roots.push_back(r);
      least.push_back(v);
    }
  }
  const int blocks = static_cast<int>(roots.size());
  std::vector<std::pair<RootedForest, Merge>> out;
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      RootedForest keep_first = f, keep_second = f;
      keep_first.parent[static_cast<std::size_t>(roots[j])] = roots[i];
      keep_second.parent[static_cast<std::size_t>(roots[i])] = roots[j];
      out.emplace_back(std::move(keep_second), Merge{least[i], least[j], 0, blocks});
      out.emplace_back(std::move(keep_first), Merge{least[i], least[j], 1, blocks});
    }
  return out;
}

std::shared_ptr<const LabelPoset> shared_labels(LabelPoset L) {
  return std::make_shared<const LabelPoset>(std::move(L));
}

template <class Payload>
EdgeLabeling pair_labeling(const FamilyPoset<Payload> &P,
                           std::shared_ptr<const LabelPoset> labels) {
  std::vector<LabelId> label_of;
  label_of.reserve(P.merges.size());
  for (const Merge &m : P.merges)
    label_of.push_back(labels->find(m.label().str()));
  return EdgeLabeling(P.poset, std::move(labels), std::move(label_of));
}

} // namespace

WeightedPoset build_weighted(int n, int max_n) {
  check_n(n, max_n);
  return detail::closure(n, WeightedPartition::singletons(full_mask(n)),
                 partition_successors<WeightedPartition>);
}

PointedPoset build_pointed(int n, int max_n) {
  check_n(n, max_n);
  return build_pointed_on(full_mask(n));
}

PointedPoset build_pointed_on(Mask ground) {
  return build_pointed_filter(PointedPartition::singletons(ground));
}

PointedPoset build_pointed_filter(const PointedPartition &start) {
  // n is the largest ground element so the label alphabet covers every merge.
  return detail::closure(31 - __builtin_clz(start.ground()), start,
                 partition_successors<PointedPartition>);
}

GradedPoset build_partition_lattice(int n, int max_n) {
  WeightedPoset W = build_weighted(n, max_n);
  WeightedPartition top{{{full_mask(n), 0}}};
  auto sub = interval(*W.poset, W.poset->bottom(), W.poset->find(top.encode()));
  std::vector<std::string> names;
  for (ElementId x : sub.parent_element) {
    std::string s;
    for (const auto &b : W.payload[x].blocks) {
      if (!s.empty())
        s += '/';
      for (int i = 1; i <= n; ++i)
        if (mask_has(b.mask, i))
          s += static_cast<char>('0' + i);
    }
    names.push_back(std::move(s));
  }
  return GradedPoset(std::move(names), sub.poset.covers());
}

ForestPoset build_spanning_forest_poset(int n, int max_n) {
  check_n(n, max_n);
  return detail::closure(n, RootedForest::isolated(n), forest_successors);
}

std::vector<PairLabel> pair_labels(int n) {
  std::vector<PairLabel> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int u = 0; u <= 1; ++u)
        out.push_back({a, b, u});
  return out;
}

namespace {

LabelPoset pair_label_poset(int n, bool (*less)(const PairLabel &, const PairLabel &)) {
  auto labels = pair_labels(n);
  std::vector<std::string> names;
  for (const auto &l : labels)
    names.push_back(l.str());
  return LabelPoset::from_predicate(std::move(names), [&](LabelId x, LabelId y) {
    return less(labels[x], labels[y]);
  });
}

} // namespace

LabelPoset build_label_poset_w(int n) { return pair_label_poset(n, less_w); }

LabelPoset build_label_poset_bullet(int n) {
  return pair_label_poset(n, less_bullet);
}

EdgeLabeling label_lambda_w(const WeightedPoset &P) {
  return pair_labeling(P, shared_labels(build_label_poset_w(P.n)));
}

EdgeLabeling label_lambda_bullet(const PointedPoset &P) {
  return pair_labeling(P, shared_labels(build_label_poset_bullet(P.n)));
}

EdgeLabeling label_lambda_bullet2(const PointedPoset &P) {
  return pair_labeling(P, shared_labels(build_label_poset_w(P.n)));
}

EdgeLabeling label_lambda_bullet_star(const PointedPoset &P, ElementId top) {
  auto L = label_lambda_bullet(P);
  return dual_labeling(restrict_labeling(L, interval(*P.poset, P.poset->bottom(), top)));
}

EdgeLabeling label_lambda_tilde(const PointedPoset &P) {
  std::vector<std::pair<int, int>> raw;
  raw.reserve(P.merges.size());
  for (const Merge &m : P.merges) {
    int shift = P.n - m.blocks;
    raw.emplace_back(m.b, (m.u ? m.b : m.a) + shift);
  }
  std::vector<std::pair<int, int>> alphabet = raw;
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  std::vector<std::string> names;
  for (auto [x, y] : alphabet)
    names.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ")");
  auto labels = shared_labels(LabelPoset::chain(std::move(names)));
  std::vector<LabelId> label_of;
  for (const auto &r : raw)
    label_of.push_back(static_cast<LabelId>(
        std::lower_bound(alphabet.begin(), alphabet.end(), r) - alphabet.begin()));
  return EdgeLabeling(P.poset, labels, std::move(label_of));
}

std::vector<PairLabel> closed_form_increasing_word(int n, int p,
                                                   IncreasingVariant variant) {
  if (n < 1 || p < 1 || p > n)
    throw Error(ErrorKind::InvalidArgument, "need 1 <= p <= n");
  std::vector<PairLabel> w;
  if (variant == IncreasingVariant::Bullet2) {
    for (int k = 2; k <= n; ++k)
      w.push_back({1, k, k <= p ? 0 : 1});
    return w;
  }
  if (p > 1)
    w.push_back({1, p, 0});
  for (int k = 2; k <= n; ++k)
    if (k != p)
      w.push_back({1, k, 1});
  return w;
}

PointedPartition phi_map(const PointedPartition &alpha, const PointedPartition &pi) {
  PointedPartition out;
  for (const auto &C : pi.blocks) {
    PointedBlock img;
    Mask covered = 0;
    for (const auto &B : alpha.blocks) {
      if ((B.mask & C.mask) == 0)
        continue;
      if ((B.mask & C.mask) != B.mask)
        throw Error(ErrorKind::InvalidArgument,
                    pi.encode() + " is not above " + alpha.encode());
      covered |= B.mask;
      img.mask |= Mask{1} << mask_min(B.mask);
      if (mask_has(B.mask, C.point))
        img.point = mask_min(B.mask);
    }
    if (covered != C.mask)
      throw Error(ErrorKind::InvalidArgument,
                  pi.encode() + " and " + alpha.encode() + " differ in ground set");
    out.blocks.push_back(img);
  }
  return out;
}

PhiCheck phi_filter_isomorphism(const PointedPoset &P, ElementId alpha) {
  const GradedPoset &G = *P.poset;
  const PointedPartition &a = P.payload.at(alpha);
  auto sub = upper_filter(G, alpha);
  PhiCheck r;
  Mask mins = 0;
  for (const auto &B : a.blocks)
    mins |= Mask{1} << mask_min(B.mask);
  r.target = build_pointed_on(mins);
  const GradedPoset &T = *r.target.poset;

  r.map.reserve(sub.parent_element.size());
  std::vector<char> hit(T.size(), 0);
  r.bijective = sub.poset.size() == T.size();
  for (ElementId x : sub.parent_element) {
    ElementId y = T.find(phi_map(a, P.payload[x]).encode());
    if (hit[y])
      r.bijective = false;
    hit[y] = 1;
    r.map.push_back(y);
  }
  r.covers_preserved = sub.poset.cover_count() == T.cover_count();
  r.labels_preserved = true;
  for (CoverId c = 0; c < sub.poset.cover_count(); ++c) {
    const Cover &cv = sub.poset.cover(c);
    auto tc = T.find_cover(r.map[cv.lower], r.map[cv.upper]);
    if (!tc) {
      r.covers_preserved = false;
      r.labels_preserved = false;
      break;
    }
    if (P.merges[sub.parent_cover[c]].label() != r.target.merges[*tc].label())
      r.labels_preserved = false;
  }
  return r;
}

std::vector<ElementId> pointed_tops(const PointedPoset &P) {
  std::vector<ElementId> out;
  for (int p = 1; p <= P.n; ++p)
    out.push_back(P.poset->find(PointedPartition{{{full_mask(P.n), p}}}.encode()));
  return out;
}

std::vector<ElementId> weighted_tops(const WeightedPoset &P) {
  std::vector<ElementId> out;
  for (int k = 0; k < P.n; ++k)
    out.push_back(P.poset->find(WeightedPartition{{{full_mask(P.n), k}}}.encode()));
  return out;
}

} // namespace wdual
