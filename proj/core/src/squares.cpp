#include "sqcirc/squares.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_set>

namespace sqcirc {

Square::Square(Word half) : half_(std::move(half)), word_(half_ + half_) {
  if (half_.empty()) throw std::invalid_argument("square with an empty half");
}

std::vector<Square> distinct_squares(const Word& w) {
  const auto text = w.view();
  const std::size_t n = text.size();
  std::unordered_set<std::string_view> seen;
  std::vector<Square> out;
  for (std::size_t half = 1; 2 * half <= n; ++half) {
    // run = number of consecutive positions k >= start with text[k] == text[k + half].
    std::size_t run = 0;
    for (std::size_t k = n - half; k-- > 0;) {
      run = text[k] == text[k + half] ? run + 1 : 0;
      if (run >= half) {
        auto sq = text.substr(k, 2 * half);
        if (seen.insert(sq).second) out.emplace_back(Word(sq.substr(0, half)));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SquareClass> square_classes(const Word& w) {
  return group_squares(distinct_squares(w));
}

std::vector<SquareClass> group_squares(const std::vector<Square>& squares) {
  std::map<Word, std::vector<Square>> grouped;
  for (const auto& sq : squares) {
    grouped[canonical_rotation(primitive_root(sq.half()).root)].push_back(sq);
  }

  std::vector<SquareClass> out;
  out.reserve(grouped.size());
  for (auto& [canonical, members] : grouped) {
    const std::size_t len = canonical.size();
    std::size_t index = 0;
    for (const auto& sq : members) index = std::max(index, sq.half().size() / len);

    // Qualifying names are the roots of members of maximal length.
    std::optional<Word> root;
    for (const auto& sq : members) {
      if (sq.half().size() != index * len) continue;
      Word candidate = sq.half().prefix(len);
      if (!root || candidate < *root) root = std::move(candidate);
    }
    std::sort(members.begin(), members.end());
    out.push_back(SquareClass{std::move(*root), index, std::move(members)});
  }
  std::sort(out.begin(), out.end(), [](const SquareClass& a, const SquareClass& b) {
    if (a.root.size() != b.root.size()) return a.root.size() < b.root.size();
    return a.root < b.root;
  });
  return out;
}

Word class_representative(const Word& w, const Word& any_root) {
  if (!is_primitive(any_root)) {
    throw std::invalid_argument("class representative needs a primitive root");
  }
  const Word canonical = canonical_rotation(any_root);
  for (auto& cls : square_classes(w)) {
    if (cls.root.size() == canonical.size() && canonical_rotation(cls.root) == canonical) {
      return std::move(cls.root);
    }
  }
  throw std::invalid_argument("no square of the class of '" + any_root.str() +
                              "' occurs in the word");
}

Word class_square(const Word& root, ClassCoordinates at) {
  return power_to_length(rotation(root, at.i), 2 * at.j * root.size());
}

ClassCoordinates square_coordinates(const Square& sq, const SquareClass& cls) {
  const std::size_t len = cls.root.size();
  const bool member = std::binary_search(cls.members.begin(), cls.members.end(), sq);
  if (!member || len == 0 || sq.half().size() % len != 0) {
    throw std::invalid_argument("square '" + sq.word().str() + "' is not in Class(" +
                                cls.root.str() + ")");
  }
  // v(i, j) = (rotation(v, i))^(2j), so the first |v| letters fix i.
  const Word lead = sq.half().prefix(len);
  for (std::size_t i = 1; i <= len; ++i) {
    if (rotation(cls.root, i) == lead) return {i, sq.half().size() / len};
  }
  throw std::invalid_argument("square '" + sq.word().str() +
                              "' has no coordinates in Class(" + cls.root.str() + ")");
}

}  // namespace sqcirc
