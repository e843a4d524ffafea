#include "helpers.hpp"

#include "wdual/error.hpp"
#include "wdual/forest.hpp"
#include "wdual/isomorphism.hpp"
#include "wdual/whitney_dual.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace wdual;

namespace {

const char *kNineLeafTree = "(((1 9)^1 (2 (5 8)^1)^0)^1 (3 (4 (6 7)^1)^1)^0)^0";
const char *kForestF = "((1 9)^1 (2 (5 8)^1)^0)^1|(3 (4 (6 7)^1)^1)^0";

std::string word_str(const std::vector<PairLabel> &w) {
  std::string s;
  for (const auto &l : w)
    s += l.str();
  return s;
}

std::vector<PairLabel> parse_word(const std::string &s) {
  std::vector<PairLabel> out;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = s.find(')', i) + 3;
    out.push_back(PairLabel::parse(s.substr(i, j - i)));
    i = j;
  }
  return out;
}

bool all_zero(const Tree &t) {
  if (t->is_leaf())
    return true;
  return t->color == 0 && all_zero(t->left) && all_zero(t->right);
}

// Increasing spanning forests on [n]: parent[v] < v or 0 (roots are tree
// minima). A cover joins two trees by an edge between their roots.
GradedPoset increasing_spanning_forests(int n) {
  std::map<std::vector<int>, ElementId> id;
  std::vector<std::vector<int>> queue{std::vector<int>(static_cast<std::size_t>(n) + 1, 0)};
  std::vector<std::string> names;
  std::vector<Cover> covers;
  auto root = [](const std::vector<int> &p, int v) {
    while (p[static_cast<std::size_t>(v)])
      v = p[static_cast<std::size_t>(v)];
    return v;
  };
  auto intern = [&](const std::vector<int> &p) {
    auto [it, fresh] = id.emplace(p, static_cast<ElementId>(names.size()));
    if (fresh) {
      std::string s;
      for (int v = 1; v <= n; ++v)
        s += std::to_string(p[static_cast<std::size_t>(v)]);
      names.push_back(s);
      queue.push_back(p);
    }
    return it->second;
  };
  intern(queue.front());
  queue.erase(queue.begin());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto p = queue[i];
    ElementId from = id.at(p);
    for (int v = 2; v <= n; ++v) {
      if (p[static_cast<std::size_t>(v)])
        continue;
      for (int a = 1; a < v; ++a) {
        if (p[static_cast<std::size_t>(a)] || root(p, a) == v)
          continue;
        auto q = p;
        q[static_cast<std::size_t>(v)] = a;
        covers.push_back({from, intern(q)});
      }
    }
  }
  return GradedPoset(names, covers);
}

std::int64_t stirling1(int n, int k) {
  if (n == 0)
    return k == 0;
  if (k == 0)
    return 0;
  return stirling1(n - 1, k - 1) + (n - 1) * stirling1(n - 1, k);
}

} // namespace

TEST(Trees, ParseEncode) {
  auto t = parse_tree(kNineLeafTree);
  EXPECT_EQ(encode_tree(t), kNineLeafTree);
  EXPECT_EQ(t->valency, 1);
  EXPECT_EQ(t->internal, 8);
  EXPECT_EQ(BicoloredForest::parse(kForestF).encode(), kForestF);
  EXPECT_THROW(parse_tree("(1 2"), Error);
  EXPECT_THROW(BicoloredForest::parse("(1 2)^0|(2 3)^0"), Error); // shared leaf
}

TEST(Trees, NineLeafTreePredicates) {
  auto t = parse_tree(kNineLeafTree);
  EXPECT_TRUE(is_normalized(t));
  EXPECT_TRUE(is_pointed_lyndon(t));
  EXPECT_TRUE(is_bicolored_lyndon(t));
  auto order = reverse_minimal_extension(BicoloredForest::from_trees({t}));
  ASSERT_EQ(order.size(), 8u);
  std::vector<int> val;
  for (const auto *v : order)
    val.push_back(v->valency);
  EXPECT_EQ(val, (std::vector<int>{6, 5, 4, 3, 2, 1, 1, 1}));
  EXPECT_EQ(order[4]->leaves, (Mask{1} << 2 | Mask{1} << 5 | Mask{1} << 8));
  EXPECT_TRUE(is_lyndon_vertex(*order[6]));
  EXPECT_FALSE(is_lyndon_vertex(*order[7]));
}

TEST(Trees, PredicatesDisagree) {
  auto t1 = parse_tree("((1 3)^0 2)^1");
  auto t2 = parse_tree("((1 2)^0 3)^0");
  EXPECT_TRUE(is_bicolored_lyndon(t1));
  EXPECT_FALSE(is_pointed_lyndon(t1));
  EXPECT_TRUE(is_pointed_lyndon(t2));
  EXPECT_FALSE(is_bicolored_lyndon(t2));
  EXPECT_TRUE(is_pointed_lyndon(TreeNode::make_leaf(4)));
}

TEST(ForestChain, PointedNineLeafForest) {
  auto F = BicoloredForest::parse(kForestF);
  auto c = forest_to_chain(F, Flavor::Pointed);
  EXPECT_EQ(word_str(c.word),
            "(6,7)^1(5,8)^1(4,6)^1(3,4)^0(2,5)^0(1,9)^1(1,2)^1");
  EXPECT_EQ(c.elements.back(), "~12589/3~467");
  EXPECT_EQ(chain_to_forest(c.word, 9, Flavor::Pointed).encode(), kForestF);
}

TEST(ForestChain, TrivialCases) {
  auto F = BicoloredForest::isolated(3);
  auto c = forest_to_chain(F, Flavor::Weighted);
  EXPECT_TRUE(c.word.empty());
  EXPECT_EQ(c.elements, std::vector<std::string>{"1^0/2^0/3^0"});
  auto G = chain_to_forest(parse_word("(1,2)^0"), 3, Flavor::Weighted);
  EXPECT_EQ(forest_to_chain(G, Flavor::Weighted).elements.back(), "12^0/3^0");
  // Not ascent-free: strict refuses, lax accepts.
  auto asc = parse_word("(1,2)^0(1,3)^1");
  EXPECT_THROW(chain_to_forest(asc, 3, Flavor::Weighted), Error);
  EXPECT_NO_THROW(chain_to_forest(asc, 3, Flavor::Weighted, false));
}

TEST(Merge, PointedTwoSlides) {
  auto F = BicoloredForest::parse("((1 4)^1 (2 3)^1)^0|((5 7)^1 6)^0");
  ASSERT_TRUE(is_valid(F, Flavor::Pointed));
  EXPECT_EQ(word_str(forest_to_chain(F, Flavor::Pointed).word),
            "(5,7)^1(5,6)^0(2,3)^1(1,4)^1(1,2)^0");
  int slides = -1;
  auto M = u_merge(F, 0, 1, 1, Flavor::Pointed, &slides);
  EXPECT_EQ(slides, 2);
  EXPECT_EQ(M.encode(), "(((1 ((5 7)^1 6)^0)^1 4)^1 (2 3)^1)^0");
  EXPECT_EQ(word_str(forest_to_chain(M, Flavor::Pointed).word),
            "(5,7)^1(5,6)^0(2,3)^1(1,5)^1(1,4)^1(1,2)^0");
}

TEST(Merge, BicoloredTwoSlides) {
  auto F = BicoloredForest::parse("((1 4)^0 (2 3)^0)^1|((5 7)^1 6)^0");
  ASSERT_TRUE(is_valid(F, Flavor::Weighted));
  int slides = -1;
  auto M = u_merge(F, 0, 1, 1, Flavor::Weighted, &slides);
  EXPECT_EQ(slides, 2);
  EXPECT_EQ(M.encode(), "(((1 ((5 7)^1 6)^0)^1 4)^0 (2 3)^0)^1");
  EXPECT_TRUE(is_bicolored_lyndon(M));
}

TEST(Merge, LeavesAndErrors) {
  auto F = BicoloredForest::isolated(2);
  int slides = -1;
  EXPECT_EQ(u_merge(F, 0, 1, 0, Flavor::Pointed, &slides).encode(), "(1 2)^0");
  EXPECT_EQ(slides, 0);
  EXPECT_THROW(u_merge(F, 0, 0, 0, Flavor::Pointed), Error);
}

TEST(Merge, SlideMatchesSortExhaustive) {
  for (Flavor f : {Flavor::Pointed, Flavor::Weighted}) {
    auto L = f == Flavor::Pointed ? build_label_poset_bullet(4) : build_label_poset_w(4);
    std::map<std::string, LabelId> lid;
    for (LabelId a = 0; a < L.size(); ++a)
      lid[L.name(a)] = a;
    for (const auto &F : enumerate_valid_forests(4, f)) {
      auto word = forest_to_chain(F, f).word;
      for (std::size_t i = 0; i < F.trees.size(); ++i)
        for (std::size_t j = i + 1; j < F.trees.size(); ++j)
          for (int u : {0, 1}) {
            Word w;
            for (const auto &l : word)
              w.push_back(lid.at(l.str()));
            PairLabel add{F.trees[i]->valency, F.trees[j]->valency, u};
            w.push_back(lid.at(add.str()));
            std::vector<PairLabel> sorted;
            for (LabelId a : sort_word(L, w))
              sorted.push_back(PairLabel::parse(L.name(a)));
            EXPECT_EQ(u_merge(F, i, j, u, f).encode(), chain_to_forest(sorted, 4, f).encode());
          }
    }
  }
}

TEST(Flyn, ClosureMatchesGenerateAndFilter) {
  for (Flavor f : {Flavor::Pointed, Flavor::Weighted})
    for (int n = 1; n <= 4; ++n) {
      auto F = build_flyn(n, f);
      std::set<std::string> closure;
      for (const auto &x : F.payload)
        closure.insert(x.encode());
      std::set<std::string> filtered;
      for (const auto &x : enumerate_valid_forests(n, f))
        filtered.insert(x.encode());
      EXPECT_EQ(closure, filtered);
    }
}

TEST(Flyn, RankCountsAndRoundTrip) {
  for (Flavor f : {Flavor::Pointed, Flavor::Weighted})
    for (int n = 1; n <= 5; ++n) {
      auto F = build_flyn(n, f);
      std::vector<std::int64_t> expect;
      for (int k = 0; k < n; ++k)
        expect.push_back(testutil::binom(n - 1, k) * testutil::ipow(n, k));
      EXPECT_EQ(whitney_second(*F.poset), expect);
      for (const auto &x : F.payload)
        EXPECT_EQ(chain_to_forest(forest_to_chain(x, f).word, n, f).encode(), x.encode());
    }
}

TEST(Flyn, AllZeroSubposetIsIncreasingSpanningForests) {
  for (int n = 1; n <= 4; ++n) {
    auto F = build_flyn(n, Flavor::Weighted);
    std::vector<ElementId> keep;
    for (ElementId x = 0; x < F.payload.size(); ++x) {
      bool ok = true;
      for (const auto &t : F.payload[x].trees)
        ok = ok && all_zero(t);
      if (ok)
        keep.push_back(x);
    }
    auto sub = induced_subposet(*F.poset, keep);
    std::vector<std::int64_t> stir;
    for (int k = 0; k < n; ++k)
      stir.push_back(stirling1(n, n - k));
    EXPECT_EQ(whitney_second(sub.poset), stir);
    EXPECT_TRUE(are_isomorphic(sub.poset, increasing_spanning_forests(n)).has_value()) << n;
  }
}
