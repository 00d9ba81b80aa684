#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqcirc/circuits.hpp"
#include "sqcirc/injection.hpp"
#include "sqcirc/rauzy.hpp"
#include "sqcirc/squares.hpp"
#include "sqcirc/theorem.hpp"
#include "sqcirc/word.hpp"

namespace sqcirc {

struct CircuitEntry {
  SmallCircuit circuit;
  CircuitRealization realization;
  Word maximal_edge;

  friend bool operator==(const CircuitEntry&, const CircuitEntry&) = default;
};

/// Everything computed for one word: the machine-readable report.
struct Analysis {
  Word word;
  /// Alph(w) in ascending order.
  std::string alphabet;
  std::vector<Square> squares;
  std::vector<SquareClass> classes;
  /// By graph order, then by the circuit arrangement order.
  std::vector<CircuitEntry> circuits;
  std::vector<Assignment> injection;
  TheoremReport theorem;

  friend bool operator==(const Analysis&, const Analysis&) = default;
};

/// Throws std::invalid_argument on the empty word or an order that does not
/// rank every symbol of w.
[[nodiscard]] Analysis analyze(const Word& w, const SymbolOrder& order = {});

/// JSON document with the fields word, length, alphabet, squares, classes,
/// circuits, injection and theorem. Bytes that are not valid UTF-8 are
/// replaced, so only UTF-8 clean words survive a round trip.
[[nodiscard]] std::string to_json(const Analysis& analysis, int indent = 2);

/// Inverse of to_json. Throws std::invalid_argument on malformed input.
[[nodiscard]] Analysis analysis_from_json(std::string_view text);

/// Graphviz digraph of one Rauzy graph.
[[nodiscard]] std::string to_dot(const RauzyGraph& g);

/// All Rauzy graphs of w as clusters of one digraph.
[[nodiscard]] std::string to_dot_all(const Word& w);

/// Human-readable report: squares, class table, circuits per order,
/// injection table and the theorem verdict.
[[nodiscard]] std::string format_report(const Analysis& analysis);

/// Compact rendering such as "C(ab,2)".
[[nodiscard]] std::string format_circuit(const SmallCircuit& c);

}  // namespace sqcirc
