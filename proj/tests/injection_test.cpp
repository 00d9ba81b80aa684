#include "sqcirc/injection.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace sqcirc {
namespace {

using testing::W;

std::set<SmallCircuit> images(const std::vector<Assignment>& assignments) {
  std::set<SmallCircuit> out;
  for (const auto& a : assignments) out.insert(a.circuit);
  return out;
}

std::set<SmallCircuit> circuits(std::initializer_list<std::pair<const char*, std::size_t>> ids) {
  std::set<SmallCircuit> out;
  for (const auto& [root, r] : ids) out.insert(SmallCircuit::of(W(root), r));
  return out;
}

TEST(ImageOrder, DistinctWithinClass) {
  for (std::size_t len = 1; len <= 12; ++len) {
    std::set<std::size_t> seen;
    for (std::size_t j = 1; j <= 6; ++j) {
      for (std::size_t i = 1; i <= len; ++i) {
        EXPECT_TRUE(seen.insert(image_order(i, j, len)).second) << i << "," << j << "," << len;
        EXPECT_GE(image_order(i, j, len), len);
      }
    }
  }
}

TEST(InjectClass, IndexOneClass) {
  const Word w = W("baababaababbbabbabbbab");
  for (const auto& cls : square_classes(w)) {
    if (cls.root != W("abb")) continue;
    ASSERT_EQ(cls.index, 1u);
    EXPECT_EQ(images(inject_class(cls)), circuits({{"abb", 3}, {"abb", 4}, {"abb", 5}}));
    return;
  }
  FAIL() << "Class(abb) missing";
}

TEST(InjectClass, SingletonClass) {
  const auto cls = square_classes(W("baababaababbbabbabbbab")).front();
  ASSERT_EQ(cls.root, W("a"));
  const auto mapped = inject_class(cls);
  ASSERT_EQ(mapped.size(), 1u);
  EXPECT_EQ(mapped[0].square.word(), W("aa"));
  EXPECT_EQ(mapped[0].circuit, SmallCircuit::of(W("a"), 1));
}

TEST(InjectClass, IndexTwoClass) {
  const Word w = W("abcabcabcabca");
  const auto cls = square_classes(w).front();
  ASSERT_EQ(cls.index, 2u);
  std::map<std::string, std::size_t> order_of;
  for (const auto& a : inject_class(cls)) order_of[a.square.word().str()] = a.circuit.order;
  // v(i, j) -> C(abc, 3j + i - 1).
  EXPECT_EQ(order_of.at("abcabc"), 3u);
  EXPECT_EQ(order_of.at("bcabca"), 4u);
  EXPECT_EQ(order_of.at("cabcab"), 5u);
  EXPECT_EQ(order_of.at("abcabcabcabc"), 6u);
  EXPECT_EQ(order_of.at("bcabcabcabca"), 7u);
  for (std::size_t r : {3u, 4u, 5u, 6u, 7u}) {
    EXPECT_TRUE(small_circuits(w, r).contains(SmallCircuit::of(W("abc"), r))) << r;
  }
}

TEST(InjectClass, RejectsForeignMember) {
  SquareClass broken{W("ab"), 2, {Square(W("aab"))}};
  EXPECT_THROW((void)inject_class(broken), std::logic_error);
  SquareClass too_long{W("ab"), 1, {Square(W("abab"))}};
  EXPECT_THROW((void)inject_class(too_long), std::logic_error);
}

TEST(BuildInjection, LongExample) {
  const auto report = build_injection(W("baababaababbbabbabbbab"));
  EXPECT_EQ(report.square_count, 13u);
  EXPECT_TRUE(report.injective);
  EXPECT_TRUE(report.all_images_exist);
  EXPECT_EQ(images(report.assignments),
            circuits({{"a", 1},
                      {"b", 1},
                      {"ab", 2},
                      {"ab", 3},
                      {"aba", 3},
                      {"abb", 3},
                      {"abb", 4},
                      {"abb", 5},
                      {"babb", 4},
                      {"babb", 5},
                      {"baaba", 5},
                      {"baaba", 6},
                      {"babbbab", 7}}));
}

TEST(BuildInjection, SquareFree) {
  const auto report = build_injection(W("abcacb"));
  EXPECT_TRUE(report.assignments.empty());
  EXPECT_TRUE(report.injective);
  EXPECT_TRUE(report.all_images_exist);
}

TEST(BuildInjection, FirstExample) {
  const auto report = build_injection(W("aababa"));
  EXPECT_EQ(report.assignments.size(), 3u);
  EXPECT_TRUE(report.injective);
  EXPECT_EQ(images(report.assignments), circuits({{"a", 1}, {"ab", 2}, {"ab", 3}}));
  EXPECT_EQ(report.circuit_count, 3u);
}

TEST(BuildInjection, InjectiveOnAllShortWords) {
  for (std::size_t k : {2u, 3u}) {
    for (std::size_t n = 1; n <= (k == 2 ? 12u : 8u); ++n) {
      for (const auto& s : testing::all_words(k, n)) {
        const auto report = build_injection(W(s));
        ASSERT_TRUE(report.injective) << s;
        ASSERT_TRUE(report.all_images_exist) << s;
        EXPECT_EQ(report.square_count, testing::brute_squares(s).size());
        EXPECT_LE(report.square_count, report.circuit_count) << s;
      }
    }
  }
}

}  // namespace
}  // namespace sqcirc
