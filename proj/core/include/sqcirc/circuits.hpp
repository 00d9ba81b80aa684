#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "sqcirc/rauzy.hpp"
#include "sqcirc/word.hpp"

namespace sqcirc {

/// C(q, r): the small circuit of Gamma_r whose edges are the
/// (r+1)/|q|-powers of the rotations of the primitive word q.
struct SmallCircuit {
  /// Least rotation of q under the natural order.
  Word root;
  std::size_t order = 0;

  /// Canonicalizes `any_rotation`. Throws std::invalid_argument unless it is
  /// primitive with |q| <= order.
  static SmallCircuit of(const Word& any_rotation, std::size_t order);

  friend bool operator==(const SmallCircuit&, const SmallCircuit&) = default;
  /// By order, then root length, then root.
  friend std::strong_ordering operator<=>(const SmallCircuit& a, const SmallCircuit& b) {
    if (auto c = a.order <=> b.order; c != 0) return c;
    if (auto c = a.root.size() <=> b.root.size(); c != 0) return c;
    return a.root <=> b.root;
  }
};

struct CircuitRealization {
  std::set<Word> vertices;
  std::set<Word> edges;

  friend bool operator==(const CircuitRealization&, const CircuitRealization&) = default;
};

/// Small circuits of Gamma_r(w), found through edge periodicity.
/// Throws std::out_of_range unless 1 <= r <= |w|.
[[nodiscard]] std::set<SmallCircuit> small_circuits(const Word& w, std::size_t r);

/// Union over r = 1..|w|.
[[nodiscard]] std::set<SmallCircuit> all_small_circuits(const Word& w);

[[nodiscard]] CircuitRealization realize(const SmallCircuit& c);

/// Greatest edge of c under `order`. Throws std::invalid_argument when the
/// order misses a symbol of the root.
[[nodiscard]] Word maximal_edge(const SmallCircuit& c, const SymbolOrder& order);

/// Circuit arrangement order: compares maximal edges. Throws
/// std::invalid_argument for circuits of different graphs.
[[nodiscard]] bool cao_less(const SmallCircuit& a, const SmallCircuit& b,
                            const SymbolOrder& order);

/// Circuits of one graph sorted ascending under the circuit arrangement order.
[[nodiscard]] std::vector<SmallCircuit> cao_sorted(const std::set<SmallCircuit>& circuits,
                                                   const SymbolOrder& order);

/// Indicator of the circuit's edges over all edges of g. Throws
/// std::invalid_argument if g has another order or lacks an edge of c.
[[nodiscard]] VectorCycle vector_cycle(const SmallCircuit& c, const RauzyGraph& g);

/// Rank over Q of the vector cycles of the small circuits of Gamma_r(w).
[[nodiscard]] std::size_t independence_rank(const Word& w, std::size_t r);

/// Exact rank over Q by fraction-free elimination.
[[nodiscard]] std::size_t exact_rank(std::vector<std::vector<std::int64_t>> rows);

class CycleLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every elementary circuit of g with at most `max_size` vertices, each as its
/// set of edge labels. Plain bounded simple-cycle search rooted at the least
/// vertex of each cycle; throws CycleLimitExceeded past `max_cycles` results.
[[nodiscard]] std::set<std::set<Word>> elementary_cycles_oracle(
    const RauzyGraph& g, std::size_t max_size, std::size_t max_cycles = 1'000'000);

}  // namespace sqcirc
