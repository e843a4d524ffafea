#include "helpers.hpp"

#include "wdual/error.hpp"
#include "wdual/operad_bases.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace wdual;

TEST(Theta, SevenLeafTree) {
  auto t = parse_tree("(((1 ((5 7)^1 6)^0)^1 4)^1 (2 3)^1)^0");
  EXPECT_EQ(theta(t).str(), "(2∘3)∘((1∘(6∘(5∘7)))∘4)");
  EXPECT_EQ(theta(t).str(MonomialStyle::Machine), "(2 o 3) o ((1 o (6 o (5 o 7))) o 4)");
  EXPECT_EQ(theta(TreeNode::make_leaf(3)).str(), "3");
}

TEST(Monomial, Products) {
  auto m = Monomial::product(Monomial::leaf(1), Monomial::leaf(2), 0);
  EXPECT_EQ(m.str(), "1∘₀2");
  EXPECT_EQ(Monomial::product(m, Monomial::leaf(3), 1).str(MonomialStyle::Machine),
            "(1 o0 2) o1 3");
  EXPECT_THROW(Monomial::product(m, Monomial::leaf(2)), Error);
  EXPECT_TRUE(m == Monomial::product(Monomial::leaf(1), Monomial::leaf(2), 0));
}

TEST(Pbw, PermBasis) {
  std::vector<std::string> got;
  for (const auto &m : pbw_perm_basis(3))
    got.push_back(m.str());
  EXPECT_EQ(got, (std::vector<std::string>{"(1∘2)∘3", "(2∘1)∘3", "3∘(2∘1)"}));
  for (int n = 1; n <= 8; ++n) {
    auto b = pbw_perm_basis(n);
    std::set<std::string> d;
    for (const auto &m : b)
      d.insert(m.str());
    EXPECT_EQ(d.size(), static_cast<std::size_t>(n));
  }
}

TEST(Pbw, Com2Basis) {
  std::vector<std::string> got;
  for (const auto &m : pbw_com2_basis(3))
    got.push_back(m.str());
  EXPECT_EQ(got, (std::vector<std::string>{"(1∘₀2)∘₀3", "(1∘₀2)∘₁3", "(1∘₁2)∘₁3"}));
  EXPECT_EQ(left_comb_colorings(3),
            (std::vector<std::vector<int>>{{1, 1}, {0, 1}, {0, 0}}));
}

TEST(Counts, PerMaximalInterval) {
  auto c3 = tlyn_counts(3, Flavor::Pointed);
  EXPECT_EQ(c3.per_p, (std::map<int, std::int64_t>{{1, 3}, {2, 3}, {3, 3}}));
  EXPECT_EQ(c3.total, 9);
  for (int n = 1; n <= 5; ++n) {
    auto p = tlyn_counts(n, Flavor::Pointed);
    auto w = tlyn_counts(n, Flavor::Weighted);
    EXPECT_EQ(p.total, testutil::ipow(n, n - 1));
    EXPECT_EQ(w.total, p.total);
    for (auto [k, v] : p.per_p)
      EXPECT_EQ(v, testutil::ipow(n, n - 2 < 0 ? 0 : n - 2)) << n << " " << k;
  }
  EXPECT_EQ(counts_to_json(c3).dump(), R"({"n":3,"per_p":{"1":3,"2":3,"3":3},"total":9})");
  EXPECT_EQ(tlyn_trees(3, 2, Flavor::Pointed).size(), 3u);
}

TEST(Counts, ByWeightedTopSumsToTotal) {
  for (int n = 1; n <= 5; ++n) {
    auto c = tlyn_counts_by_weight(n, Flavor::Weighted);
    std::int64_t s = 0;
    for (auto [k, v] : c.per_p)
      s += v;
    EXPECT_EQ(s, testutil::ipow(n, n - 1));
    // Weight 0 and weight n-1 tops are partition lattices: (n-1)! chains each.
    std::int64_t f = 1;
    for (int i = 2; i < n; ++i)
      f *= i;
    EXPECT_EQ(c.per_p.at(0), f);
    EXPECT_EQ(c.per_p.at(n - 1), f);
  }
}

TEST(Counts, PrelieDimensions) {
  for (int n = 1; n <= 5; ++n) {
    auto d = prelie_dimension_check(n);
    EXPECT_TRUE(d.consistent()) << n;
    EXPECT_EQ(d.pointed, testutil::ipow(n, n - 1));
  }
}

TEST(Census, IncreasingChainsOnePerTop) {
  for (Flavor f : {Flavor::Pointed, Flavor::Weighted})
    for (int n = 1; n <= 4; ++n) {
      auto c = increasing_chain_census(n, f);
      for (auto k : c.counts)
        EXPECT_EQ(k, 1);
    }
  auto c = increasing_chain_census(4, Flavor::Pointed);
  std::string w;
  for (const auto &l : c.words[1])
    w += l.str();
  EXPECT_EQ(w, "(1,2)^0(1,3)^1(1,4)^1");
}
