#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sqcirc/circuits.hpp"
#include "sqcirc/squares.hpp"
#include "sqcirc/word.hpp"

namespace sqcirc {

struct Assignment {
  Square square;
  SmallCircuit circuit;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// The square-to-circuit map f over all classes of a word, with its checks.
/// Violations are recorded here, never thrown: a false flag means the
/// construction failed on this word.
struct InjectionReport {
  /// Grouped by class in square_classes order, members ascending.
  std::vector<Assignment> assignments;
  bool injective = true;
  bool all_images_exist = true;
  std::size_t square_count = 0;
  std::size_t circuit_count = 0;
};

/// Graph order j*l + i - 1 for the square v(i, j) of a class with |v| = l.
[[nodiscard]] constexpr std::size_t image_order(std::size_t i, std::size_t j,
                                                std::size_t root_len) noexcept {
  return j * root_len + i - 1;
}

/// f restricted to one class. Index >= 2 maps v(i, j) to C(v, jl + i - 1);
/// index 1 gives the t members, ascending, the orders l, l + 1, ..., l + t - 1.
/// Throws std::logic_error if a member has no coordinates in the class.
[[nodiscard]] std::vector<Assignment> inject_class(const SquareClass& cls);

[[nodiscard]] InjectionReport build_injection(const Word& w);

/// Same, reusing computed classes and circuits.
[[nodiscard]] InjectionReport build_injection(const std::vector<SquareClass>& classes,
                                              const std::set<SmallCircuit>& circuits);

}  // namespace sqcirc
