#pragma once

#include "wdual/partition_posets.hpp"
#include "wdual/partitions.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace wdual {

enum class Flavor { Pointed, Weighted };

const char *to_string(Flavor f);

struct TreeNode;
using Tree = std::shared_ptr<const TreeNode>;

/// Immutable binary tree node. Leaves carry a label > 0; internal vertices
/// carry a color in {0, 1}.
struct TreeNode {
  int leaf = 0;
  int color = 0;
  Tree left;
  Tree right;
  int valency = 0;
  Mask leaves = 0;
  int internal = 0;

  [[nodiscard]] bool is_leaf() const { return leaf != 0; }

  static Tree make_leaf(int label);
  static Tree join(Tree left, Tree right, int color);
};

std::string encode_tree(const Tree &t);
Tree parse_tree(std::string_view s);

/// Trees sorted by valency; leaves partition the ground set.
struct BicoloredForest {
  std::vector<Tree> trees;

  static BicoloredForest isolated(int n);
  static BicoloredForest isolated_on(Mask ground);
  static BicoloredForest from_trees(std::vector<Tree> trees);
  static BicoloredForest parse(std::string_view s);
  /// Trees encoded recursively as (left right)^u, joined by '|'.
  [[nodiscard]] std::string encode() const;
  [[nodiscard]] Mask ground() const;
  [[nodiscard]] std::size_t tree_with_min(int leaf) const;
};

bool is_normalized(const Tree &t);
bool is_lyndon_vertex(const TreeNode &v);
bool is_pointed_lyndon(const Tree &t);
bool is_bicolored_lyndon(const Tree &t);
bool is_pointed_lyndon(const BicoloredForest &F);
bool is_bicolored_lyndon(const BicoloredForest &F);
bool is_valid(const Tree &t, Flavor f);
bool is_valid(const BicoloredForest &F, Flavor f);

/// Internal vertices, children before parents, valencies weakly decreasing.
std::vector<const TreeNode *> reverse_minimal_extension(const BicoloredForest &F);

/// A saturated chain from the minimum, given by its labels and the encoded
/// elements it passes through (pointed or weighted partitions).
struct ForestChain {
  std::vector<PairLabel> word;
  std::vector<std::string> elements;
};

/// Merges blocks in reverse-minimal order; the i-th label is
/// (nu(L(v_i)), nu(R(v_i)))^color(v_i). With strict set, F must be valid.
ForestChain forest_to_chain(const BicoloredForest &F, Flavor f, bool strict = true);
/// Replays a word from n isolated leaves, joining the trees with minima a and
/// b under a u-colored vertex. With strict set the word must be ascent-free
/// in the flavor's label order.
BicoloredForest chain_to_forest(const std::vector<PairLabel> &word, int n,
                                Flavor f, bool strict = true);

/// Joins trees t1 < t2 (indices in F.trees) under a u-colored root, then
/// slides the new root down its left spine until the flavor predicate holds.
BicoloredForest u_merge(const BicoloredForest &F, std::size_t t1,
                        std::size_t t2, int u, Flavor f, int *slides = nullptr);

using ForestFamily = FamilyPoset<BicoloredForest>;

/// All valid forests on [n], built by closure under u-merges.
ForestFamily build_flyn(int n, Flavor f, int max_n = kDefaultBuildLimit);

/// Every normalized bicolored tree on the leaf set.
std::vector<Tree> all_normalized_trees(Mask leaves);
/// Generate-and-filter enumeration of the valid forests, sorted by encoding.
std::vector<BicoloredForest> enumerate_valid_forests(int n, Flavor f);

} // namespace wdual
