#include "helpers.hpp"

#include "wdual/error.hpp"
#include "wdual/labeling.hpp"
#include "wdual/partition_posets.hpp"

#include <gtest/gtest.h>

using namespace wdual;

namespace {

std::vector<ElementId> chain_by_names(const GradedPoset &P,
                                      std::initializer_list<const char *> names) {
  std::vector<ElementId> out;
  for (const char *n : names)
    out.push_back(P.find(n));
  return out;
}

// Ascent-free maximal chains of [0, x], counted straight off the chain list.
std::int64_t ascent_free_count(const EdgeLabeling &L, ElementId x) {
  std::int64_t k = 0;
  saturated_chains(L.poset(), L.poset().bottom(), x, [&](std::span<const ElementId> c) {
    if (classify_chain(L, c).ascent_free)
      ++k;
    return true;
  });
  return k;
}

} // namespace

TEST(LabelPoset, ChainAndValidation) {
  auto L = LabelPoset::chain({"a", "b", "c"});
  EXPECT_TRUE(L.less(L.find("a"), L.find("c")));
  EXPECT_FALSE(L.less(L.find("c"), L.find("a")));
  EXPECT_THROW(LabelPoset({"a", "b", "c"}, {{0, 1}, {1, 2}}), Error); // not transitive
  EXPECT_THROW(LabelPoset({"a", "b"}, {{0, 0}}), Error);
  auto R = L.reversed();
  EXPECT_TRUE(R.less(R.find("c"), R.find("a")));
  EXPECT_EQ(L.render(L.parse_word("cab")), "cab");
}

TEST(LabelPoset, ClassifyWord) {
  auto L = LabelPoset::chain({"a", "b", "c"});
  auto inc = classify_word(L, L.parse_word("abc"));
  EXPECT_TRUE(inc.increasing);
  EXPECT_FALSE(inc.ascent_free);
  auto dec = classify_word(L, L.parse_word("cba"));
  EXPECT_FALSE(dec.increasing);
  EXPECT_TRUE(dec.ascent_free);
  // Repeated labels are neither ascents nor strict increases.
  auto flat = classify_word(L, L.parse_word("aa"));
  EXPECT_FALSE(flat.increasing);
  EXPECT_TRUE(flat.ascent_free);
}

TEST(LabelPoset, LexCompareOverPartialOrder) {
  auto L = build_label_poset_bullet(3);
  auto w = [&](const char *s) { return L.parse_word(s); };
  EXPECT_EQ(lex_compare(L, w("(1,2)^0(1,3)^1"), w("(1,3)^0(1,2)^1")), LexOrder::Incomparable);
  EXPECT_EQ(lex_compare(L, w("(1,2)^1(1,3)^1"), w("(1,3)^1(1,2)^1")), LexOrder::Less);
  EXPECT_EQ(lex_compare(L, w("(1,3)^1(1,2)^1"), w("(1,2)^1(1,3)^1")), LexOrder::Greater);
  EXPECT_EQ(lex_compare(L, w("(1,2)^0"), w("(1,2)^0")), LexOrder::Equal);
  // Incomparability only matters at the first difference.
  EXPECT_EQ(lex_compare(L, w("(1,2)^1(1,2)^0"), w("(1,3)^1(1,3)^0")), LexOrder::Less);
}

TEST(Checks, VerdictMatrixOnN3) {
  auto W = build_weighted(3);
  auto P = build_pointed(3);
  auto lw = label_lambda_w(W);
  auto lb = label_lambda_bullet(P);
  auto lb2 = label_lambda_bullet2(P);
  auto lt = label_lambda_tilde(P);

  EXPECT_TRUE(check_ER(lw).passed());
  EXPECT_TRUE(check_EL(lw).passed());
  EXPECT_TRUE(check_EW(lw).passed());

  EXPECT_TRUE(check_ER(lb).passed());
  EXPECT_FALSE(check_EL(lb).passed());
  EXPECT_TRUE(check_rank_two_switching(lb).passed());
  EXPECT_TRUE(check_ascent_free_injectivity(lb).passed());
  EXPECT_TRUE(check_EW(lb).passed());

  EXPECT_TRUE(check_EL(lb2).passed());
  EXPECT_FALSE(check_rank_two_switching(lb2).passed());
  EXPECT_FALSE(check_EW(lb2).passed());

  auto er = check_ER(lt);
  ASSERT_FALSE(er.passed());
  const Witness *wit = er.find(kCheckER);
  ASSERT_NE(wit, nullptr);
  EXPECT_EQ(P.poset->name(wit->top), "12~3");
  EXPECT_EQ(wit->chains.size(), 2u);
}

TEST(Checks, TildeWordsOnN3) {
  auto P = build_pointed(3);
  auto lt = label_lambda_tilde(P);
  const auto &G = *P.poset;
  auto c1 = chain_by_names(G, {"~1/~2/~3", "~12/~3", "12~3"});
  auto c2 = chain_by_names(G, {"~1/~2/~3", "1~2/~3", "12~3"});
  EXPECT_EQ(lt.labels().render(lt.word(lt.covers_of(c1))), "(2,2)(3,2)");
  EXPECT_EQ(lt.labels().render(lt.word(lt.covers_of(c2))), "(2,1)(3,2)");
  EXPECT_TRUE(classify_chain(lt, c1).increasing);
  EXPECT_TRUE(classify_chain(lt, c2).increasing);
}

TEST(Checks, CoverLabelsOnN3) {
  auto W = build_weighted(3);
  auto lw = label_lambda_w(W);
  auto c = lw.covers_of(chain_by_names(*W.poset, {"1^0/2^0/3^0", "13^1/2^0"}));
  EXPECT_EQ(lw.label_name(c[0]), "(1,3)^1");
  auto P = build_pointed(3);
  auto lb = label_lambda_bullet(P);
  EXPECT_EQ(lb.label_name(lb.covers_of(chain_by_names(*P.poset, {"~1/~2/~3", "~13/~2"}))[0]),
            "(1,3)^1");
  EXPECT_EQ(lb.label_name(lb.covers_of(chain_by_names(*P.poset, {"~1/~2/~3", "1~2/~3"}))[0]),
            "(1,2)^0");
}

TEST(Checks, StanleyIdentityAgainstDirectCount) {
  for (int n = 2; n <= 4; ++n) {
    auto W = build_weighted(n);
    auto lw = label_lambda_w(W);
    EXPECT_TRUE(stanley_mobius_check(lw).passed());
    for (ElementId x = 0; x < W.poset->size(); ++x)
      EXPECT_EQ(ascent_free_count(lw, x),
                std::abs(testutil::naive_mobius(*W.poset, W.poset->bottom(), x)));
  }
}

TEST(Checks, UniqueIncreasingChainMatchesClosedForm) {
  for (int n = 2; n <= 4; ++n) {
    auto P = build_pointed(n);
    auto lb2 = label_lambda_bullet2(P);
    auto tops = pointed_tops(P);
    for (int p = 1; p <= n; ++p) {
      auto chain = unique_increasing_chain(lb2, P.poset->bottom(), tops[p - 1]);
      ASSERT_TRUE(chain.has_value());
      std::vector<PairLabel> got;
      for (CoverId c : *chain)
        got.push_back(P.merges[c].label());
      EXPECT_EQ(got, closed_form_increasing_word(n, p, IncreasingVariant::Bullet2));
    }
  }
}

TEST(Checks, ThreadsGiveSameReport) {
  auto P = build_pointed(4);
  auto lb = label_lambda_bullet(P);
  auto a = check_EL(lb, {1});
  auto b = check_EL(lb, {4});
  ASSERT_EQ(a.witnesses.size(), b.witnesses.size());
  for (std::size_t i = 0; i < a.witnesses.size(); ++i) {
    EXPECT_EQ(a.witnesses[i].bottom, b.witnesses[i].bottom);
    EXPECT_EQ(a.witnesses[i].top, b.witnesses[i].top);
    EXPECT_EQ(a.witnesses[i].chains, b.witnesses[i].chains);
  }
}

TEST(Checks, DualOfMaximalIntervalsIsEL) {
  for (int n = 2; n <= 4; ++n) {
    auto P = build_pointed(n);
    for (ElementId top : pointed_tops(P)) {
      auto star = label_lambda_bullet_star(P, top);
      EXPECT_TRUE(check_EL(star).passed()) << "n=" << n << " top=" << P.poset->name(top);
    }
  }
}

TEST(Checks, JsonRoundTrip) {
  auto W = build_weighted(3);
  auto lw = label_lambda_w(W);
  auto back = labeling_from_json(labeling_to_json(lw));
  EXPECT_EQ(back.poset().names(), lw.poset().names());
  for (CoverId c = 0; c < lw.poset().cover_count(); ++c)
    EXPECT_EQ(back.label_name(c), lw.label_name(c));
  EXPECT_TRUE(check_EL(back).passed());
}
