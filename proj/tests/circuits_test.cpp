#include "sqcirc/circuits.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace sqcirc {
namespace {

using testing::W;

std::set<SmallCircuit> circuits(std::initializer_list<std::pair<const char*, std::size_t>> ids) {
  std::set<SmallCircuit> out;
  for (const auto& [root, r] : ids) out.insert(SmallCircuit::of(W(root), r));
  return out;
}

std::set<Word> words(std::initializer_list<const char*> items) {
  std::set<Word> out;
  for (const char* s : items) out.insert(W(s));
  return out;
}

TEST(SmallCircuit, Canonicalizes) {
  EXPECT_EQ(SmallCircuit::of(W("ba"), 2).root, W("ab"));
  EXPECT_EQ(SmallCircuit::of(W("baaba"), 5).root, W("aabab"));
  EXPECT_THROW((void)SmallCircuit::of(W("abab"), 4), std::invalid_argument);
  EXPECT_THROW((void)SmallCircuit::of(W("abc"), 2), std::invalid_argument);
}

TEST(SmallCircuits, FirstExample) {
  const Word u = W("aababa");
  EXPECT_EQ(small_circuits(u, 1), circuits({{"a", 1}}));
  EXPECT_EQ(small_circuits(u, 2), circuits({{"ab", 2}}));
  EXPECT_EQ(small_circuits(u, 3), circuits({{"ab", 3}}));
  const auto real = realize(*small_circuits(u, 3).begin());
  EXPECT_EQ(real.vertices, words({"aba", "bab"}));
  EXPECT_EQ(real.edges, words({"abab", "baba"}));
  EXPECT_EQ(all_small_circuits(u), circuits({{"a", 1}, {"ab", 2}, {"ab", 3}}));
}

TEST(SmallCircuits, SecondExample) {
  // The drawn Gamma_5 is that of abaaaabaabaaaba; the word printed beside it
  // lacks the factor aaaa and so only carries two of the three circuits.
  EXPECT_EQ(small_circuits(W("abaaaabaabaaaba"), 5),
            circuits({{"aaaab", 5}, {"aaab", 5}, {"aab", 5}}));
  EXPECT_EQ(small_circuits(W("abaaabaabaaaba"), 5), circuits({{"aaab", 5}, {"aab", 5}}));
}

TEST(SmallCircuits, EdgeCases) {
  EXPECT_TRUE(all_small_circuits(W("a")).empty());
  EXPECT_TRUE(all_small_circuits(W("")).empty());
  EXPECT_TRUE(small_circuits(W("aababa"), 6).empty());
  EXPECT_THROW((void)small_circuits(W("ab"), 0), std::out_of_range);
  EXPECT_THROW((void)small_circuits(W("ab"), 3), std::out_of_range);
}

TEST(SmallCircuits, EdgeWithShorterPeriodStillWitnessesRoot) {
  // In Gamma_5 of (abaab)^2 a the edge abaaba has smallest period 3, yet it is
  // also the edge of C(aabab, 5).
  const Word w = W("abaababaaba");
  EXPECT_TRUE(small_circuits(w, 5).contains(SmallCircuit::of(W("abaab"), 5)));
}

TEST(Realize, Examples) {
  auto real = realize(SmallCircuit::of(W("ab"), 2));
  EXPECT_EQ(real.vertices, words({"ab", "ba"}));
  EXPECT_EQ(real.edges, words({"aba", "bab"}));
  real = realize(SmallCircuit::of(W("a"), 1));
  EXPECT_EQ(real.vertices, words({"a"}));
  EXPECT_EQ(real.edges, words({"aa"}));
  real = realize(SmallCircuit::of(W("aab"), 5));
  EXPECT_EQ(real.edges, words({"aabaab", "abaaba", "baabaa"}));
  EXPECT_EQ(real.vertices.size(), 3u);
}

TEST(MaximalEdge, SecondExample) {
  const auto order = SymbolOrder::from_permutation("ba");
  EXPECT_EQ(maximal_edge(SmallCircuit::of(W("aaaab"), 5), order), W("aaaaba"));
  EXPECT_EQ(maximal_edge(SmallCircuit::of(W("aaab"), 5), order), W("aaabaa"));
  EXPECT_EQ(maximal_edge(SmallCircuit::of(W("aab"), 5), order), W("aabaab"));
  EXPECT_EQ(maximal_edge(SmallCircuit::of(W("a"), 1), order), W("aa"));
  EXPECT_EQ(maximal_edge(SmallCircuit::of(W("a"), 1), SymbolOrder{}), W("aa"));
  EXPECT_THROW((void)maximal_edge(SmallCircuit::of(W("ac"), 2), order), std::invalid_argument);
}

TEST(MaximalEdge, IsTheGreatestRealizedEdge) {
  for (const auto& perm : {"ab", "ba"}) {
    const auto order = SymbolOrder::from_permutation(perm);
    for (std::size_t n = 1; n <= 10; ++n) {
      for (const auto& s : testing::all_words(2, n)) {
        for (const auto& c : all_small_circuits(W(s))) {
          const auto real = realize(c);
          Word best = *real.edges.begin();
          for (const auto& e : real.edges) {
            if (order.less(best, e)) best = e;
          }
          EXPECT_EQ(maximal_edge(c, order), best) << s;
        }
      }
    }
  }
}

TEST(Cao, Examples) {
  const auto order = SymbolOrder::from_permutation("ba");
  const auto aab = SmallCircuit::of(W("aab"), 5);
  const auto aaab = SmallCircuit::of(W("aaab"), 5);
  EXPECT_TRUE(cao_less(aab, aaab, order));
  EXPECT_FALSE(cao_less(aaab, aab, order));
  EXPECT_FALSE(cao_less(aab, aab, order));
  EXPECT_THROW((void)cao_less(aab, SmallCircuit::of(W("aab"), 4), order),
               std::invalid_argument);

  const auto sorted = cao_sorted(small_circuits(W("abaaaabaabaaaba"), 5), order);
  ASSERT_EQ(sorted.size(), 3u);
  EXPECT_EQ(sorted[0].root, W("aab"));
  EXPECT_EQ(sorted[1].root, W("aaab"));
  EXPECT_EQ(sorted[2].root, W("aaaab"));
}

TEST(Cao, TotalOnEachGraph) {
  const auto order = SymbolOrder::from_permutation("cba");
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& s : testing::all_words(3, n)) {
      for (std::size_t r = 1; r <= n; ++r) {
        const auto found = small_circuits(W(s), r);
        for (const auto& a : found) {
          for (const auto& b : found) {
            if (a == b) continue;
            EXPECT_NE(cao_less(a, b, order), cao_less(b, a, order)) << s;
          }
        }
      }
    }
  }
}

TEST(VectorCycle, Examples) {
  const Word u = W("aababa");
  const auto v2 = vector_cycle(SmallCircuit::of(W("ab"), 2), build_rauzy(u, 2));
  EXPECT_EQ(v2, (VectorCycle{{W("aab"), 0}, {W("aba"), 1}, {W("bab"), 1}}));
  const auto v1 = vector_cycle(SmallCircuit::of(W("a"), 1), build_rauzy(u, 1));
  EXPECT_EQ(v1, (VectorCycle{{W("aa"), 1}, {W("ab"), 0}, {W("ba"), 0}}));
  EXPECT_THROW((void)vector_cycle(SmallCircuit::of(W("a"), 1), build_rauzy(u, 2)),
               std::invalid_argument);
  EXPECT_THROW((void)vector_cycle(SmallCircuit::of(W("b"), 1), build_rauzy(u, 1)),
               std::invalid_argument);
}

TEST(VectorCycle, SupportIsRootLength) {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const auto& s : testing::all_words(2, n)) {
      for (std::size_t r = 1; r <= n; ++r) {
        const auto g = build_rauzy(W(s), r);
        for (const auto& c : small_circuits(W(s), r)) {
          std::size_t support = 0;
          for (const auto& [label, visits] : vector_cycle(c, g)) {
            EXPECT_LE(visits, 1u);
            support += visits;
          }
          EXPECT_EQ(support, c.root.size()) << s;
        }
      }
    }
  }
}

TEST(ExactRank, Matrices) {
  EXPECT_EQ(exact_rank({}), 0u);
  EXPECT_EQ(exact_rank({{0, 0}, {0, 0}}), 0u);
  EXPECT_EQ(exact_rank({{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(exact_rank({{1, 1, 0}, {0, 1, 1}, {1, 0, -1}}), 2u);
  EXPECT_EQ(exact_rank({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}), 3u);
  EXPECT_EQ(exact_rank({{0, 1}, {1, 0}, {1, 1}}), 2u);
  EXPECT_EQ(exact_rank({{2, 4, 6}, {1, 2, 3}, {3, 6, 10}}), 2u);
  EXPECT_THROW((void)exact_rank({{1, 2}, {1}}), std::invalid_argument);
}

TEST(IndependenceRank, Examples) {
  EXPECT_EQ(independence_rank(W("abaaaabaabaaaba"), 5), 3u);
  EXPECT_EQ(independence_rank(W("abaaabaabaaaba"), 5), 2u);
  EXPECT_EQ(independence_rank(W("aababa"), 2), 1u);
  EXPECT_EQ(independence_rank(W("aababa"), 6), 0u);
}

TEST(ElementaryCyclesOracle, FirstExample) {
  const Word u = W("aababa");
  using Cycles = std::set<std::set<Word>>;
  EXPECT_EQ(elementary_cycles_oracle(build_rauzy(u, 1), 1), (Cycles{words({"aa"})}));
  EXPECT_EQ(elementary_cycles_oracle(build_rauzy(u, 1), 2),
            (Cycles{words({"aa"}), words({"ab", "ba"})}));
  EXPECT_EQ(elementary_cycles_oracle(build_rauzy(u, 2), 2), (Cycles{words({"aba", "bab"})}));
  EXPECT_TRUE(elementary_cycles_oracle(build_rauzy(u, 1), 0).empty());
}

TEST(ElementaryCyclesOracle, CapThrows) {
  EXPECT_THROW((void)elementary_cycles_oracle(build_rauzy(W("aababa"), 1), 2, 1),
               CycleLimitExceeded);
}

TEST(SmallCircuits, AgreeWithCycleSearch) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& s : testing::all_words(3, n)) {
      for (std::size_t r = 1; r <= n; ++r) {
        std::set<std::set<Word>> expected;
        for (const auto& c : small_circuits(W(s), r)) expected.insert(realize(c).edges);
        ASSERT_EQ(elementary_cycles_oracle(build_rauzy(W(s), r), r), expected)
            << s << " r=" << r;
      }
    }
  }
}

TEST(SmallCircuits, OrderIndependentAndBounded) {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const auto& s : testing::all_words(2, n)) {
      const Word w(s);
      std::size_t total = 0;
      for (std::size_t r = 1; r <= n; ++r) {
        const auto found = small_circuits(w, r);
        total += found.size();
        const auto cap = static_cast<std::ptrdiff_t>(complexity(w, r + 1)) -
                         static_cast<std::ptrdiff_t>(complexity(w, r)) + 1;
        EXPECT_LE(static_cast<std::ptrdiff_t>(found.size()), cap) << s;
        EXPECT_LE(static_cast<std::ptrdiff_t>(found.size()),
                  cyclomatic_number(build_rauzy(w, r)));
        EXPECT_EQ(independence_rank(w, r), found.size()) << s;
      }
      EXPECT_LE(total + w.alphabet_size(), w.size()) << s;
    }
  }
}

}  // namespace
}  // namespace sqcirc
