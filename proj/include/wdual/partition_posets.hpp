#pragma once

#include "wdual/labeling.hpp"
#include "wdual/partitions.hpp"
#include "wdual/poset.hpp"

#include <memory>
#include <string>
#include <vector>

namespace wdual {

inline constexpr int kDefaultBuildLimit = 6;
inline constexpr int kDefaultSweepLimit = 5;

/// A poset whose elements carry a payload, plus the merge behind each cover.
template <class Payload> struct FamilyPoset {
  int n = 0;
  std::shared_ptr<const GradedPoset> poset;
  std::vector<Payload> payload;
  std::vector<Merge> merges;
};

using WeightedPoset = FamilyPoset<WeightedPartition>;
using PointedPoset = FamilyPoset<PointedPartition>;
using ForestPoset = FamilyPoset<RootedForest>;

WeightedPoset build_weighted(int n, int max_n = kDefaultBuildLimit);
PointedPoset build_pointed(int n, int max_n = kDefaultBuildLimit);
/// Pointed partitions of an arbitrary ground set above the singletons.
PointedPoset build_pointed_on(Mask ground);
/// Everything above `start` in the pointed poset of its ground set.
PointedPoset build_pointed_filter(const PointedPartition &start);
/// Set partitions of [n], taken as the interval below [n]^0 in the weighted
/// poset; element names drop the weights.
GradedPoset build_partition_lattice(int n, int max_n = kDefaultBuildLimit);
ForestPoset build_spanning_forest_poset(int n, int max_n = kDefaultBuildLimit);

/// Every (a,b)^u with 1 <= a < b <= n, ordered by (a, b, u).
std::vector<PairLabel> pair_labels(int n);
LabelPoset build_label_poset_w(int n);
LabelPoset build_label_poset_bullet(int n);

EdgeLabeling label_lambda_w(const WeightedPoset &P);
EdgeLabeling label_lambda_bullet(const PointedPoset &P);
/// Same label map as lambda_bullet, over the weighted label poset.
EdgeLabeling label_lambda_bullet2(const PointedPoset &P);
/// Dual of lambda_bullet on the order dual of [0, top].
EdgeLabeling label_lambda_bullet_star(const PointedPoset &P, ElementId top);
/// (b, a + n - |pi|) for u = 0 and (b, b + n - |pi|) for u = 1, totally
/// ordered lexicographically; |pi| counts blocks of the lower element.
EdgeLabeling label_lambda_tilde(const PointedPoset &P);

enum class IncreasingVariant { Bullet, Bullet2 };
/// Predicted word of the increasing maximal chain of [0, [n]^p].
std::vector<PairLabel> closed_form_increasing_word(int n, int p,
                                                   IncreasingVariant variant);

/// Collapses each block of alpha to its minimum; the point goes to the
/// minimum of the alpha-block holding it. `pi` must lie above alpha.
PointedPartition phi_map(const PointedPartition &alpha,
                         const PointedPartition &pi);

struct PhiCheck {
  /// Indexed by element of the filter poset; ids in the target poset.
  std::vector<ElementId> map;
  PointedPoset target;
  bool bijective = false;
  bool covers_preserved = false;
  bool labels_preserved = false;

  [[nodiscard]] bool ok() const {
    return bijective && covers_preserved && labels_preserved;
  }
};

/// Maps the upper filter of `alpha` in P onto the pointed poset of the
/// block minima and checks covers and lambda_bullet labels survive.
PhiCheck phi_filter_isomorphism(const PointedPoset &P, ElementId alpha);

/// Top elements [n]^p of the pointed poset (p = 1..n), in order of p.
std::vector<ElementId> pointed_tops(const PointedPoset &P);
/// Top elements [n]^k of the weighted poset (k = 0..n-1), in order of k.
std::vector<ElementId> weighted_tops(const WeightedPoset &P);

} // namespace wdual
