#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "sqcirc/word.hpp"

namespace sqcirc {

/// An edge of a Rauzy graph is a factor of length n + 1 running from its
/// length-n prefix to its length-n suffix.
struct RauzyEdge {
  Word label;
  Word from;
  Word to;
};

/// Gamma_n(w): vertices L_w(n), edges L_w(n + 1).
class RauzyGraph {
 public:
  RauzyGraph(std::size_t order, std::set<Word> vertices, std::vector<RauzyEdge> edges);

  [[nodiscard]] std::size_t order() const noexcept { return order_; }
  [[nodiscard]] const std::set<Word>& vertices() const noexcept { return vertices_; }
  /// Sorted by label.
  [[nodiscard]] const std::vector<RauzyEdge>& edges() const noexcept { return edges_; }
  [[nodiscard]] bool has_edge(const Word& label) const;

 private:
  std::size_t order_;
  std::set<Word> vertices_;
  std::vector<RauzyEdge> edges_;
};

/// mu(C): visits per edge label, with every edge of the host graph present.
using VectorCycle = std::map<Word, std::size_t>;

/// Throws std::out_of_range unless 1 <= n <= |w|.
[[nodiscard]] RauzyGraph build_rauzy(const Word& w, std::size_t n);

/// Connectivity of the underlying undirected graph; the empty graph counts as
/// connected.
[[nodiscard]] bool is_weakly_connected(const RauzyGraph& g);

/// edges - vertices + 1. Throws std::invalid_argument on an empty or
/// disconnected graph.
[[nodiscard]] std::ptrdiff_t cyclomatic_number(const RauzyGraph& g);

}  // namespace sqcirc
