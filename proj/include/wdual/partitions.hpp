#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wdual {

/// Subset of {1,...,31}; bit i stands for element i.
using Mask = std::uint32_t;

inline int mask_min(Mask m) { return __builtin_ctz(m); }
inline int mask_size(Mask m) { return __builtin_popcount(m); }
inline bool mask_has(Mask m, int i) { return (m >> i) & 1U; }
Mask full_mask(int n);

/// Edge label (a, b)^u with a < b.
struct PairLabel {
  int a = 0;
  int b = 0;
  int u = 0;

  auto operator<=>(const PairLabel &) const = default;
  [[nodiscard]] std::string str() const;
  static PairLabel parse(std::string_view s);
};

/// Order of the weighted label poset: ordinal sum over a of the products
/// (chain of b) x (0 < 1).
bool less_w(const PairLabel &x, const PairLabel &y);
/// Order of the pointed label poset: for each a, the antichain of (a,b)^0
/// below the chain of (a,b)^1 ordered by b, stacked by a.
bool less_bullet(const PairLabel &x, const PairLabel &y);

/// What one cover does: merges the blocks with minima a < b.
struct Merge {
  int a = 0;
  int b = 0;
  int u = 0;
  /// Block count of the lower element.
  int blocks = 0;

  [[nodiscard]] PairLabel label() const { return {a, b, u}; }
};

struct WeightedBlock {
  Mask mask = 0;
  int weight = 0;
  auto operator<=>(const WeightedBlock &) const = default;
};

/// Blocks are kept sorted by minimum.
struct WeightedPartition {
  std::vector<WeightedBlock> blocks;

  static WeightedPartition singletons(Mask ground);
  static WeightedPartition parse(std::string_view s);
  [[nodiscard]] std::string encode() const;
  [[nodiscard]] Mask ground() const;
  [[nodiscard]] std::size_t block_of(int element) const;
  /// Merges blocks i < j adding u to the summed weights.
  [[nodiscard]] WeightedPartition merged(std::size_t i, std::size_t j, int u) const;
  auto operator<=>(const WeightedPartition &) const = default;
};

struct PointedBlock {
  Mask mask = 0;
  int point = 0;
  auto operator<=>(const PointedBlock &) const = default;
};

/// Blocks are kept sorted by minimum.
struct PointedPartition {
  std::vector<PointedBlock> blocks;

  static PointedPartition singletons(Mask ground);
  /// Accepts the `1~3/~2` encoding (the tilde precedes the point).
  static PointedPartition parse(std::string_view s);
  [[nodiscard]] std::string encode() const;
  [[nodiscard]] Mask ground() const;
  [[nodiscard]] std::size_t block_of(int element) const;
  /// Merges blocks i < j keeping the point of block i when u = 1 and of
  /// block j when u = 0.
  [[nodiscard]] PointedPartition merged(std::size_t i, std::size_t j, int u) const;
  auto operator<=>(const PointedPartition &) const = default;
};

/// Rooted spanning forest on [n] as a parent array (0 marks a root).
struct RootedForest {
  std::vector<int> parent;

  static RootedForest isolated(int n);
  [[nodiscard]] int n() const { return static_cast<int>(parent.size()) - 1; }
  [[nodiscard]] std::vector<int> roots() const;
  [[nodiscard]] int root_of(int v) const;
  /// Trees rendered as root(children...) with children ascending, joined by
  /// '/' in order of their least vertex.
  [[nodiscard]] std::string encode() const;
  auto operator<=>(const RootedForest &) const = default;
};

} // namespace wdual
