#include "helpers.hpp"

#include "wdual/error.hpp"
#include "wdual/isomorphism.hpp"
#include "wdual/poset.hpp"
#include "wdual/poset_io.hpp"

#include <gtest/gtest.h>

using namespace wdual;

namespace {

// 0 < a,b,c < 1 with c only below 1 through nothing else: a, b, c all atoms.
GradedPoset small_p() {
  return GradedPoset({"0", "a", "b", "c", "1"},
                     {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

GradedPoset boolean3() {
  std::vector<std::string> names;
  std::vector<Cover> covers;
  for (int m = 0; m < 8; ++m)
    names.push_back(std::to_string(m));
  for (int m = 0; m < 8; ++m)
    for (int i = 0; i < 3; ++i)
      if (!(m >> i & 1))
        covers.push_back({static_cast<ElementId>(m), static_cast<ElementId>(m | 1 << i)});
  return GradedPoset(names, covers);
}

ErrorKind kind_of(const std::function<void()> &fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

} // namespace

TEST(Poset, RanksAndAccessors) {
  auto P = small_p();
  EXPECT_EQ(P.size(), 5u);
  EXPECT_EQ(P.cover_count(), 6u);
  EXPECT_EQ(P.max_rank(), 2);
  EXPECT_EQ(P.bottom(), P.find("0"));
  EXPECT_EQ(P.rank(P.find("b")), 1);
  EXPECT_TRUE(P.leq(P.find("0"), P.find("1")));
  EXPECT_FALSE(P.leq(P.find("a"), P.find("b")));
  EXPECT_EQ(P.maximal_elements(), std::vector<ElementId>{P.find("1")});
  EXPECT_FALSE(P.try_find("zz").has_value());
}

TEST(Poset, ValidationErrors) {
  EXPECT_EQ(kind_of([] { GradedPoset({"0", "0"}, {}); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { GradedPoset({"0", "a", "b"}, {{0, 1}}); }), ErrorKind::NoMinimum);
  EXPECT_EQ(kind_of([] { GradedPoset({"0", "a", "b"}, {{0, 1}, {1, 2}, {0, 2}}); }),
            ErrorKind::NotReduced);
  // 0 < a < b < 1 and 0 < c < 1: not graded.
  EXPECT_EQ(kind_of([] {
              GradedPoset({"0", "a", "b", "c", "1"},
                          {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
            }),
            ErrorKind::NotGraded);
  EXPECT_EQ(kind_of([] { (void)small_p().find("nope"); }), ErrorKind::ElementNotFound);
}

TEST(Poset, MobiusMatchesNaiveRecursion) {
  for (const auto &P : {small_p(), boolean3()})
    for (ElementId x = 0; x < P.size(); ++x)
      for (ElementId y = 0; y < P.size(); ++y)
        EXPECT_EQ(mobius_between(P, x, y), testutil::naive_mobius(P, x, y));
  auto B = boolean3();
  EXPECT_EQ(mobius(B, 7), -1);
  EXPECT_EQ(whitney_first(B), (std::vector<std::int64_t>{1, -3, 3, -1}));
  EXPECT_EQ(whitney_second(B), (std::vector<std::int64_t>{1, 3, 3, 1}));
}

TEST(Poset, WhitneyDualAndTwin) {
  auto B = boolean3();
  EXPECT_TRUE(is_whitney_dual(B, B));
  EXPECT_TRUE(is_whitney_twin(B, B));
  auto P = small_p();
  EXPECT_EQ(whitney_first(P), (std::vector<std::int64_t>{1, -3, 2}));
  EXPECT_FALSE(is_whitney_dual(P, P));
}

TEST(Poset, OrderDualKeepsCoverIds) {
  auto P = small_p();
  auto D = order_dual(P);
  ASSERT_EQ(D.cover_count(), P.cover_count());
  for (CoverId c = 0; c < P.cover_count(); ++c) {
    EXPECT_EQ(D.name(D.cover(c).lower), P.name(P.cover(c).upper));
    EXPECT_EQ(D.name(D.cover(c).upper), P.name(P.cover(c).lower));
  }
  EXPECT_EQ(D.name(D.bottom()), "1");
  GradedPoset two_tops({"0", "a", "b"}, {{0, 1}, {0, 2}});
  EXPECT_EQ(kind_of([&] { order_dual(two_tops); }), ErrorKind::NoMaximum);
}

TEST(Poset, IntervalsAndFilters) {
  auto B = boolean3();
  auto I = interval(B, 1, 7);
  EXPECT_EQ(I.poset.size(), 4u);
  EXPECT_EQ(whitney_first(I.poset), (std::vector<std::int64_t>{1, -2, 1}));
  for (CoverId c = 0; c < I.poset.cover_count(); ++c) {
    const Cover &k = B.cover(I.parent_cover[c]);
    EXPECT_EQ(k.lower, I.parent_element[I.poset.cover(c).lower]);
    EXPECT_EQ(k.upper, I.parent_element[I.poset.cover(c).upper]);
  }
  EXPECT_EQ(upper_filter(B, 3).poset.size(), 2u);
}

TEST(Poset, SaturatedChainCount) {
  auto B = boolean3();
  int count = 0;
  saturated_chains(B, 0, 7, [&](std::span<const ElementId> c) {
    EXPECT_EQ(c.size(), 4u);
    ++count;
    return true;
  });
  EXPECT_EQ(count, 6);
}

TEST(Isomorphism, RelabelledCopyAndNonIso) {
  auto B = boolean3();
  // Reverse the element order.
  std::vector<std::string> names;
  std::vector<Cover> covers;
  for (ElementId x = 0; x < 8; ++x)
    names.push_back("e" + std::to_string(7 - x));
  for (const auto &c : B.covers())
    covers.push_back({7 - c.lower, 7 - c.upper});
  GradedPoset C(names, covers);
  auto f = are_isomorphic(B, C);
  ASSERT_TRUE(f.has_value());
  EXPECT_TRUE(is_isomorphism(B, C, *f));

  // Same Whitney numbers, different shape.
  GradedPoset X({"0", "a", "b", "c", "x", "y", "z", "1"},
                {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 6}, {3, 6}, {3, 5},
                 {4, 7}, {5, 7}, {6, 7}});
  GradedPoset Y({"0", "a", "b", "c", "x", "y", "z", "1"},
                {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 4}, {3, 5},
                 {2, 6}, {4, 7}, {5, 7}, {6, 7}});
  EXPECT_EQ(whitney_second(X), whitney_second(Y));
  EXPECT_FALSE(are_isomorphic(X, Y).has_value());
}

TEST(PosetIo, JsonRoundTrip) {
  auto P = small_p();
  auto Q = poset_from_json(poset_to_json(P));
  EXPECT_EQ(Q.names(), P.names());
  EXPECT_EQ(Q.cover_count(), P.cover_count());
  std::string dot = poset_to_dot(P);
  EXPECT_NE(dot.find("rankdir=BT"), std::string::npos);
}
