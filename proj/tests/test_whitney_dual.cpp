#include "helpers.hpp"

#include "wdual/error.hpp"
#include "wdual/isomorphism.hpp"
#include "wdual/partition_posets.hpp"
#include "wdual/whitney_dual.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace wdual;

namespace {

// a < c, b < c, c < d, a and b incomparable.
LabelPoset diamond_labels() {
  return LabelPoset({"a", "b", "c", "d"}, {{0, 2}, {1, 2}, {2, 3}, {0, 3}, {1, 3}});
}

EdgeLabeling small_labeling() {
  auto P = std::make_shared<const GradedPoset>(
      GradedPoset({"0", "a", "b", "c", "1"},
                  {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}));
  auto L = std::make_shared<const LabelPoset>(LabelPoset::chain({"a", "b", "c"}));
  // 0<a:a 0<b:b 0<c:c a<1:b b<1:a c<1:a
  return EdgeLabeling(P, L, {0, 1, 2, 1, 0, 0});
}

} // namespace

TEST(Sort, Examples) {
  auto L = diamond_labels();
  EXPECT_EQ(L.render(sort_word(L, L.parse_word("adbca"))), "dcaba");
  EXPECT_EQ(L.render(sort_word(L, L.parse_word(""))), "");
  EXPECT_EQ(L.render(sort_word(L, L.parse_word("dcba"))), "dcba");
  EXPECT_EQ(L.render(sort_word(L, L.parse_word("ab"))), "ab"); // incomparable, not an ascent
  EXPECT_EQ(L.render(sort_word(L, L.parse_word("abcd"))), "dcab");
}

TEST(Sort, ResultIsAscentFreeAndAPermutation) {
  auto L = build_label_poset_bullet(4);
  auto P = build_pointed(4);
  auto lb = label_lambda_bullet(P);
  walk_chains_from(*P.poset, P.poset->bottom(), [&](std::span<const CoverId> c, ElementId) {
    Word w = lb.word(c);
    Word s = sort_word(lb.labels(), w);
    EXPECT_TRUE(classify_word(lb.labels(), s).ascent_free);
    std::sort(w.begin(), w.end());
    std::sort(s.begin(), s.end());
    EXPECT_EQ(w, s);
    return true;
  });
}

TEST(ConstructR, SmallPair) {
  auto L = small_labeling();
  EXPECT_TRUE(check_EW(L).passed());
  auto R = construct_R(L);
  EXPECT_EQ(R.poset->size(), 6u);
  std::map<std::string, std::int64_t> mu;
  auto mv = mobius_values(*R.poset);
  for (ElementId x = 0; x < R.poset->size(); ++x)
    mu[R.poset->name(x)] = mv[x];
  EXPECT_EQ(mu.at("0 []"), 1);
  EXPECT_EQ(mu.at("1 [ba]"), 1);
  EXPECT_EQ(mu.at("1 [ca]"), 0);
  EXPECT_TRUE(is_whitney_dual(L.poset(), *R.poset));
}

TEST(ConstructR, PartitionFamilies) {
  for (int n = 1; n <= 4; ++n) {
    auto W = build_weighted(n);
    auto lw = label_lambda_w(W);
    auto R = construct_R(lw);
    EXPECT_TRUE(R.validated);
    EXPECT_TRUE(is_whitney_dual(*W.poset, *R.poset)) << n;
    // Elements over x are the ascent-free chains to x, so there are |mu(0,x)|.
    std::vector<std::int64_t> fiber(W.poset->size(), 0);
    for (const auto &e : R.elements)
      ++fiber[e.top];
    for (ElementId x = 0; x < W.poset->size(); ++x)
      EXPECT_EQ(fiber[x], std::abs(mobius(*W.poset, x)));
    auto P = build_pointed(n);
    EXPECT_TRUE(is_whitney_dual(*P.poset, *construct_R(label_lambda_bullet(P)).poset));
  }
  auto R3 = construct_R(label_lambda_w(build_weighted(3)));
  EXPECT_EQ(whitney_second(*R3.poset), (std::vector<std::int64_t>{1, 6, 9}));
}

TEST(ConstructR, PreconditionAndBypass) {
  auto P = build_pointed(3);
  auto lt = label_lambda_tilde(P);
  try {
    construct_R(lt);
    FAIL() << "expected a precondition error";
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::Precondition);
  }
  ConstructOptions o;
  o.bypass_check = true;
  auto R = construct_R(lt, o);
  EXPECT_FALSE(R.validated);
}

TEST(ConstructR, ElementJson) {
  auto L = small_labeling();
  auto R = construct_R(L);
  for (const auto &e : R.elements) {
    auto j = dual_element_to_json(L, e);
    EXPECT_TRUE(j.contains("top"));
    EXPECT_TRUE(j["word"].is_array());
    EXPECT_EQ(j["word"].size(), e.word.size());
  }
}

TEST(Twins, DualsOfTheTwoFamiliesAreTwins) {
  for (int n = 1; n <= 4; ++n) {
    auto Rw = construct_R(label_lambda_w(build_weighted(n)));
    auto Rb = construct_R(label_lambda_bullet(build_pointed(n)));
    auto S = build_spanning_forest_poset(n);
    EXPECT_TRUE(is_whitney_twin(*Rw.poset, *Rb.poset));
    EXPECT_TRUE(is_whitney_twin(*Rw.poset, *S.poset));
  }
}
