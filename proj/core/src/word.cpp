#include "sqcirc/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace sqcirc {

Word Word::from_symbols(std::span<const Symbol> symbols) {
  std::string text;
  text.reserve(symbols.size());
  for (Symbol s : symbols) text.push_back(static_cast<char>(s.id));
  return Word(std::move(text));
}

std::vector<Symbol> Word::alphabet() const {
  std::array<bool, 256> seen{};
  for (char c : data_) seen[static_cast<std::uint8_t>(c)] = true;
  std::vector<Symbol> out;
  for (std::size_t id = 0; id < seen.size(); ++id) {
    if (seen[id]) out.push_back(Symbol{static_cast<std::uint8_t>(id)});
  }
  return out;
}

std::size_t Word::alphabet_size() const { return alphabet().size(); }

SymbolOrder::SymbolOrder() {
  for (std::size_t id = 0; id < rank_.size(); ++id) {
    rank_[id] = static_cast<std::int16_t>(id);
  }
}

SymbolOrder SymbolOrder::from_permutation(std::string_view perm) {
  if (perm.empty()) throw std::invalid_argument("symbol order is empty");
  SymbolOrder order;
  order.rank_.fill(-1);
  std::int16_t next = 0;
  for (char c : perm) {
    auto& slot = order.rank_[static_cast<std::uint8_t>(c)];
    if (slot >= 0) {
      throw std::invalid_argument(std::string("symbol order repeats '") + c + "'");
    }
    slot = next++;
  }
  return order;
}

bool SymbolOrder::covers(const Word& w) const noexcept {
  return std::all_of(w.view().begin(), w.view().end(), [this](char c) {
    return rank_[static_cast<std::uint8_t>(c)] >= 0;
  });
}

int SymbolOrder::rank(Symbol s) const {
  if (!ranks(s)) {
    throw std::invalid_argument("symbol order has no rank for symbol " +
                                std::to_string(s.id));
  }
  return rank_[s.id];
}

std::strong_ordering SymbolOrder::compare(const Word& a, const Word& b) const {
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < common; ++k) {
    const int ra = rank(a[k]);
    const int rb = rank(b[k]);
    if (ra != rb) return ra <=> rb;
  }
  if (!covers(a) || !covers(b)) {
    throw std::invalid_argument("symbol order does not cover compared words");
  }
  return a.size() <=> b.size();
}

std::string SymbolOrder::permutation() const {
  std::vector<std::pair<int, char>> ranked;
  for (std::size_t id = 0; id < rank_.size(); ++id) {
    if (rank_[id] >= 0) ranked.emplace_back(rank_[id], static_cast<char>(id));
  }
  std::sort(ranked.begin(), ranked.end());
  std::string out;
  for (const auto& [r, c] : ranked) out.push_back(c);
  return out;
}

Word rotation(const Word& w, std::size_t i) {
  if (w.empty() || i < 1 || i > w.size()) {
    throw std::out_of_range("rotation index " + std::to_string(i) +
                            " outside 1.." + std::to_string(w.size()));
  }
  return w.suffix_from(i - 1) + w.prefix(i - 1);
}

std::set<Word> conjugacy_class(const Word& w) {
  if (w.empty()) throw std::invalid_argument("conjugacy class of the empty word");
  std::set<Word> out;
  for (std::size_t i = 1; i <= w.size(); ++i) out.insert(rotation(w, i));
  return out;
}

std::vector<std::size_t> border_array(const Word& w) {
  const auto text = w.view();
  std::vector<std::size_t> border(text.size(), 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    while (k > 0 && text[i] != text[k]) k = border[k - 1];
    if (text[i] == text[k]) ++k;
    border[i] = k;
  }
  return border;
}

std::size_t smallest_period(const Word& w) {
  if (w.empty()) return 0;
  return w.size() - border_array(w).back();
}

std::vector<std::size_t> periods(const Word& w) {
  std::vector<std::size_t> out;
  if (w.empty()) return out;
  const auto border = border_array(w);
  // Walking the border chain from the longest border gives periods ascending.
  std::size_t b = border.back();
  while (b > 0) {
    out.push_back(w.size() - b);
    b = border[b - 1];
  }
  out.push_back(w.size());
  return out;
}

PrimitiveRoot primitive_root(const Word& w) {
  if (w.empty()) throw std::invalid_argument("primitive root of the empty word");
  const std::size_t p = smallest_period(w);
  if (w.size() % p != 0) return {w, 1};
  return {w.prefix(p), w.size() / p};
}

bool is_primitive(const Word& w) {
  return !w.empty() && primitive_root(w).exponent == 1;
}

bool has_period(const Word& w, std::size_t p) {
  if (p < 1 || p > w.size()) {
    throw std::out_of_range("period " + std::to_string(p) + " outside 1.." +
                            std::to_string(w.size()));
  }
  const auto text = w.view();
  for (std::size_t i = 0; i + p < text.size(); ++i) {
    if (text[i] != text[i + p]) return false;
  }
  return true;
}

Word fractional_power(const Word& u, RationalExponent alpha) {
  if (u.empty()) throw std::invalid_argument("fractional power of the empty word");
  if (alpha.remainder_len >= u.size()) {
    throw std::invalid_argument("fractional power remainder must be below |u|");
  }
  return power_to_length(u, alpha.integer_part * u.size() + alpha.remainder_len);
}

Word power_to_length(const Word& u, std::size_t length) {
  if (u.empty()) {
    if (length == 0) return {};
    throw std::invalid_argument("power of the empty word");
  }
  std::string out;
  out.reserve(length);
  while (out.size() < length) {
    out.append(u.view().substr(0, length - out.size()));
  }
  return Word(std::move(out));
}

std::set<Word> factors(const Word& w, std::size_t n) {
  std::set<Word> out;
  if (n > w.size()) return out;
  for (std::size_t i = 0; i + n <= w.size(); ++i) out.insert(w.substr(i, n));
  return out;
}

std::size_t complexity(const Word& w, std::size_t n) { return factors(w, n).size(); }

std::optional<Word> common_root(const Word& x, const Word& y) {
  if (x.empty() || y.empty()) return std::nullopt;
  if (x + y != y + x) return std::nullopt;
  return primitive_root(x).root;
}

std::optional<ConjugateSplit> solve_conjugate_equation(const Word& x, const Word& y,
                                                       const Word& z) {
  if (x.empty() || x.size() != z.size() || x + y != y + z) return std::nullopt;
  const std::size_t len = x.size();
  std::size_t u_len = y.size() % len;
  std::size_t power = y.size() / len;
  if (u_len == 0) {
    u_len = len;
    if (power == 0) return std::nullopt;
    --power;
  }
  ConjugateSplit split{x.prefix(u_len), x.suffix_from(u_len), power};
  if (power_to_length(x, power * len) + split.u != y || split.v + split.u != z) {
    return std::nullopt;
  }
  return split;
}

Word extremal_rotation(const Word& w, const SymbolOrder& order, Extremum direction) {
  if (w.empty()) throw std::invalid_argument("extremal rotation of the empty word");
  const std::size_t n = w.size();
  std::vector<int> key(n);
  for (std::size_t k = 0; k < n; ++k) {
    const int r = order.rank(w[k]);
    key[k] = direction == Extremum::least ? r : -r;
  }
  // Two-candidate scan for the least rotation of `key`.
  std::size_t i = 0;
  std::size_t j = 1;
  std::size_t k = 0;
  while (i < n && j < n && k < n) {
    const int a = key[(i + k) % n];
    const int b = key[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return rotation(w, std::min(i, j) + 1);
}

Word canonical_rotation(const Word& w) {
  static const SymbolOrder natural;
  return extremal_rotation(w, natural, Extremum::least);
}

}  // namespace sqcirc
