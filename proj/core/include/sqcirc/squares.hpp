#pragma once

#include <cstddef>
#include <vector>

#include "sqcirc/word.hpp"

namespace sqcirc {

/// A nonempty square uu, stored by its half u.
class Square {
 public:
  /// Throws std::invalid_argument on an empty half.
  explicit Square(Word half);

  [[nodiscard]] const Word& half() const noexcept { return half_; }
  [[nodiscard]] const Word& word() const noexcept { return word_; }
  [[nodiscard]] std::size_t size() const noexcept { return word_.size(); }

  friend bool operator==(const Square& a, const Square& b) { return a.half_ == b.half_; }
  /// Shortlex: shorter squares first, then the natural order.
  friend std::strong_ordering operator<=>(const Square& a, const Square& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.word_ <=> b.word_;
  }

 private:
  Word half_;
  Word word_;
};

/// Class(v): squares whose primitive root is conjugate to `root`.
struct SquareClass {
  /// Least rotation v of the class root with v^(2 index) a factor.
  Word root;
  std::size_t index = 0;
  /// Ascending shortlex order.
  std::vector<Square> members;

  friend bool operator==(const SquareClass&, const SquareClass&) = default;
};

/// Position of a square in its class: v_s(i) v^(2j-1) v_p(i), both 1-based.
struct ClassCoordinates {
  std::size_t i = 0;
  std::size_t j = 0;

  friend constexpr bool operator==(ClassCoordinates, ClassCoordinates) = default;
};

/// Distinct nonempty squares of w in shortlex order.
[[nodiscard]] std::vector<Square> distinct_squares(const Word& w);

/// Partition of distinct_squares(w) by conjugacy class of the primitive root,
/// sorted by (root length, root).
[[nodiscard]] std::vector<SquareClass> square_classes(const Word& w);

/// Groups an already computed square list the same way.
[[nodiscard]] std::vector<SquareClass> group_squares(const std::vector<Square>& squares);

/// Canonical name of the class containing squares of `any_root`.
/// Throws std::invalid_argument if `any_root` is not primitive or no square of
/// its class occurs in w.
[[nodiscard]] Word class_representative(const Word& w, const Word& any_root);

/// Throws std::invalid_argument when `sq` is not a member of `cls`.
[[nodiscard]] ClassCoordinates square_coordinates(const Square& sq, const SquareClass& cls);

/// v(i, j) = v_s(i) v^(2j-1) v_p(i).
[[nodiscard]] Word class_square(const Word& root, ClassCoordinates at);

}  // namespace sqcirc
