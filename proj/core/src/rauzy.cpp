#include "sqcirc/rauzy.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sqcirc {

RauzyGraph::RauzyGraph(std::size_t order, std::set<Word> vertices,
                       std::vector<RauzyEdge> edges)
    : order_(order), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end(),
            [](const RauzyEdge& a, const RauzyEdge& b) { return a.label < b.label; });
}

bool RauzyGraph::has_edge(const Word& label) const {
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), label,
      [](const RauzyEdge& e, const Word& key) { return e.label < key; });
  return it != edges_.end() && it->label == label;
}

RauzyGraph build_rauzy(const Word& w, std::size_t n) {
  if (n < 1 || n > w.size()) {
    throw std::out_of_range("Rauzy graph order " + std::to_string(n) + " outside 1.." +
                            std::to_string(w.size()));
  }
  std::vector<RauzyEdge> edges;
  for (auto& label : factors(w, n + 1)) {
    Word from = label.prefix(n);
    Word to = label.suffix_from(1);
    edges.push_back(RauzyEdge{label, std::move(from), std::move(to)});
  }
  return RauzyGraph(n, factors(w, n), std::move(edges));
}

bool is_weakly_connected(const RauzyGraph& g) {
  const auto& vertices = g.vertices();
  if (vertices.empty()) return true;
  std::vector<Word> order(vertices.begin(), vertices.end());
  auto index_of = [&order](const Word& v) {
    return static_cast<std::size_t>(std::lower_bound(order.begin(), order.end(), v) -
                                    order.begin());
  };

  std::vector<std::size_t> parent(order.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = order.size();
  for (const auto& e : g.edges()) {
    const std::size_t a = find(index_of(e.from));
    const std::size_t b = find(index_of(e.to));
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

std::ptrdiff_t cyclomatic_number(const RauzyGraph& g) {
  if (g.vertices().empty()) {
    throw std::invalid_argument("cyclomatic number of an empty graph");
  }
  if (!is_weakly_connected(g)) {
    throw std::invalid_argument("cyclomatic number of a disconnected graph");
  }
  return static_cast<std::ptrdiff_t>(g.edges().size()) -
         static_cast<std::ptrdiff_t>(g.vertices().size()) + 1;
}

}  // namespace sqcirc
