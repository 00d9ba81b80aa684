#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sqcirc {

/// A letter. Ids index the 256-entry byte alphabet, so the byte 'a' is the
/// symbol with id 97 and a word's text is its symbol sequence.
struct Symbol {
  std::uint8_t id = 0;

  friend constexpr auto operator<=>(Symbol, Symbol) = default;
};

/// Immutable finite word. Comparison operators give the natural order
/// (ascending symbol id), which is also the default SymbolOrder.
class Word {
 public:
  Word() = default;
  explicit Word(std::string_view text) : data_(text) {}
  explicit Word(std::string&& text) noexcept : data_(std::move(text)) {}
  explicit Word(const char* text) : data_(text) {}

  static Word from_symbols(std::span<const Symbol> symbols);

  [[nodiscard]] std::size_t size() const noexcept { return data_.size(); }
  [[nodiscard]] bool empty() const noexcept { return data_.empty(); }

  /// Zero-based access.
  [[nodiscard]] Symbol operator[](std::size_t pos) const noexcept {
    return Symbol{static_cast<std::uint8_t>(data_[pos])};
  }

  [[nodiscard]] std::string_view view() const noexcept { return data_; }
  [[nodiscard]] const std::string& str() const noexcept { return data_; }

  [[nodiscard]] Word substr(std::size_t pos, std::size_t len) const {
    return Word(std::string_view(data_).substr(pos, len));
  }
  [[nodiscard]] Word prefix(std::size_t len) const { return substr(0, len); }
  [[nodiscard]] Word suffix_from(std::size_t pos) const {
    return Word(std::string_view(data_).substr(pos));
  }

  /// Alph(w), ascending.
  [[nodiscard]] std::vector<Symbol> alphabet() const;
  [[nodiscard]] std::size_t alphabet_size() const;

  [[nodiscard]] bool contains(const Word& factor) const {
    return data_.find(factor.data_) != std::string::npos;
  }

  friend Word operator+(const Word& a, const Word& b) {
    return Word(a.data_ + b.data_);
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.view().compare(b.view()) <=> 0;
  }

 private:
  std::string data_;
};

/// Strict total order on symbols, given by rank. Symbols without a rank are
/// outside the order; comparing words that use them throws.
class SymbolOrder {
 public:
  /// Ascending id order over the whole byte alphabet.
  SymbolOrder();

  /// `perm` lists symbols from lowest to highest, e.g. "ba" for b < a.
  /// Throws std::invalid_argument on repeated symbols or an empty list.
  static SymbolOrder from_permutation(std::string_view perm);

  [[nodiscard]] bool ranks(Symbol s) const noexcept { return rank_[s.id] >= 0; }
  [[nodiscard]] bool covers(const Word& w) const noexcept;

  /// Throws std::invalid_argument when the symbol has no rank.
  [[nodiscard]] int rank(Symbol s) const;

  /// Lexicographic comparison (a proper prefix sorts first).
  [[nodiscard]] std::strong_ordering compare(const Word& a, const Word& b) const;
  [[nodiscard]] bool less(const Word& a, const Word& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }

  /// Ranked symbols, lowest first.
  [[nodiscard]] std::string permutation() const;

 private:
  std::array<std::int16_t, 256> rank_{};
};

/// alpha = integer_part + remainder_len / |u| for a base word u.
struct RationalExponent {
  std::size_t integer_part = 0;
  std::size_t remainder_len = 0;

  friend constexpr bool operator==(RationalExponent, RationalExponent) = default;
};

struct PrimitiveRoot {
  Word root;
  std::size_t exponent = 0;
};

enum class Extremum { least, greatest };

/// x = uv, y = (uv)^power u, z = vu with |u| > 0.
struct ConjugateSplit {
  Word u;
  Word v;
  std::size_t power = 0;
};

/// w_i ... w_t w_1 ... w_{i-1}; i is 1-based. Throws std::out_of_range.
[[nodiscard]] Word rotation(const Word& w, std::size_t i);

/// Distinct rotations of w. Throws std::invalid_argument on the empty word.
[[nodiscard]] std::set<Word> conjugacy_class(const Word& w);

/// Failure function: border[k] is the longest proper border of w[0, k].
[[nodiscard]] std::vector<std::size_t> border_array(const Word& w);

/// Smallest period via the longest border; 0 for the empty word.
[[nodiscard]] std::size_t smallest_period(const Word& w);

/// Every period p with 1 <= p <= |w|, ascending.
[[nodiscard]] std::vector<std::size_t> periods(const Word& w);

/// Throws std::invalid_argument on the empty word.
[[nodiscard]] PrimitiveRoot primitive_root(const Word& w);
[[nodiscard]] bool is_primitive(const Word& w);

/// Throws std::out_of_range unless 1 <= p <= |w|.
[[nodiscard]] bool has_period(const Word& w, std::size_t p);

/// u^alpha: u repeated integer_part times, then the prefix of length
/// remainder_len. Throws std::invalid_argument on an empty base or an
/// out-of-range remainder.
[[nodiscard]] Word fractional_power(const Word& u, RationalExponent alpha);

/// u^(length/|u|), i.e. the length-`length` prefix of u u u ...
[[nodiscard]] Word power_to_length(const Word& u, std::size_t length);

/// L_w(n). n == 0 yields {ε}; n > |w| yields the empty set.
[[nodiscard]] std::set<Word> factors(const Word& w, std::size_t n);

/// C_w(n) = |L_w(n)|.
[[nodiscard]] std::size_t complexity(const Word& w, std::size_t n);

/// The primitive p with x = p^i, y = p^j when xy = yx; absent otherwise.
[[nodiscard]] std::optional<Word> common_root(const Word& x, const Word& y);

/// Solves xy = yz for the decomposition in ConjugateSplit. Absent when the
/// equation does not hold or x is empty.
[[nodiscard]] std::optional<ConjugateSplit> solve_conjugate_equation(
    const Word& x, const Word& y, const Word& z);

/// Least or greatest rotation under `order`, in linear time.
/// Throws std::invalid_argument if w is empty or uses an unranked symbol.
[[nodiscard]] Word extremal_rotation(const Word& w, const SymbolOrder& order,
                                     Extremum direction);

/// Least rotation under the natural order.
[[nodiscard]] Word canonical_rotation(const Word& w);

}  // namespace sqcirc

template <>
struct std::hash<sqcirc::Word> {
  std::size_t operator()(const sqcirc::Word& w) const noexcept {
    return std::hash<std::string_view>{}(w.view());
  }
};
