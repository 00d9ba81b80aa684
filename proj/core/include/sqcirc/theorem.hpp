#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sqcirc/word.hpp"

namespace sqcirc {

/// sc_r against its cap C_w(r+1) - C_w(r) + 1 for one Rauzy graph.
struct OrderCount {
  std::size_t r = 0;
  std::size_t small_circuits = 0;
  std::ptrdiff_t cap = 0;

  friend bool operator==(const OrderCount&, const OrderCount&) = default;
};

/// Square count of a word against |w| - |Alph(w)| + 1. S counts the empty
/// square; every other count here is of nonempty objects.
struct TheoremReport {
  Word word;
  std::size_t square_count_with_empty = 0;
  std::size_t nonempty_squares = 0;
  std::size_t alphabet_size = 0;
  std::size_t bound = 0;
  bool holds = false;
  std::size_t small_circuit_total = 0;
  std::vector<OrderCount> per_order_counts;
  /// S(w) - 1 <= sc(w)
  bool squares_within_circuits = false;
  /// sc(w) <= |w| - |Alph(w)|
  bool circuits_within_bound = false;

  [[nodiscard]] std::ptrdiff_t slack() const noexcept {
    return static_cast<std::ptrdiff_t>(bound) -
           static_cast<std::ptrdiff_t>(square_count_with_empty);
  }
  [[nodiscard]] bool chain_holds() const noexcept {
    return holds && squares_within_circuits && circuits_within_bound;
  }

  friend bool operator==(const TheoremReport&, const TheoremReport&) = default;
};

/// Throws std::invalid_argument on the empty word.
[[nodiscard]] TheoremReport theorem_check(const Word& w);

/// Fills the derived fields (S, bound, verdicts) from the counted ones.
void finish_report(TheoremReport& report);

/// Full consistency audit of one word: the theorem chain, the injection,
/// the per-order caps, maximal-edge distinctness, independence rank, weak
/// connectivity and class-coordinate round trips.
struct WordAudit {
  TheoremReport theorem;
  std::vector<std::string> violations;
  std::size_t coordinate_checks = 0;
};

[[nodiscard]] WordAudit audit_word(const Word& w);

}  // namespace sqcirc
