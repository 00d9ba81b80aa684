#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sqcirc/word.hpp"

namespace sqcirc {

struct SearchOptions {
  std::size_t jobs = 1;
  /// Upper limit on alphabet_size^max_len.
  std::uint64_t budget = 100'000'000;
  /// Extremal witnesses kept per length (the least ones).
  std::size_t witness_limit = 16;
};

struct LengthStats {
  std::size_t length = 0;
  std::uint64_t words = 0;
  std::size_t max_nonempty_squares = 0;
  /// Words of this length achieving the maximum, ascending, capped.
  std::vector<Word> witnesses;
  std::uint64_t witness_count = 0;
  std::ptrdiff_t min_slack = 0;
};

struct Violation {
  Word word;
  std::string what;
};

struct SearchSummary {
  std::size_t alphabet_size = 0;
  std::size_t max_len = 0;
  std::uint64_t words_checked = 0;
  std::uint64_t coordinate_checks = 0;
  std::vector<Violation> violations;
  /// Index k holds length k + 1.
  std::vector<LengthStats> per_length;

  /// Associative merge of two partial summaries over disjoint word sets.
  void merge(const SearchSummary& other, std::size_t witness_limit);
};

class BudgetExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Letters 'a', 'b', ... for symbol ids 0, 1, ...; k must be in 1..26.
[[nodiscard]] char letter(std::size_t id);

/// Visits every word of `length` over the first k letters in which each
/// letter first appears after all smaller ones (one word per renaming
/// orbit), in increasing order, starting from those extending `prefix`.
void for_each_canonical_word(std::size_t k, std::size_t length, const Word& prefix,
                             const std::function<void(const Word&)>& visit);

/// Runs audit_word on every canonical word of length 1..max_len over k
/// letters. Throws BudgetExceeded when k^max_len exceeds the budget and
/// std::invalid_argument on k outside 1..26 or max_len == 0.
[[nodiscard]] SearchSummary exhaustive_search(std::size_t alphabet_size, std::size_t max_len,
                                              const SearchOptions& options = {});

}  // namespace sqcirc
