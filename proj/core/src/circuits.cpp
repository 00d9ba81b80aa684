#include "sqcirc/circuits.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace sqcirc {

SmallCircuit SmallCircuit::of(const Word& any_rotation, std::size_t order) {
  if (!is_primitive(any_rotation)) {
    throw std::invalid_argument("circuit root '" + any_rotation.str() + "' is not primitive");
  }
  if (any_rotation.size() > order) {
    throw std::invalid_argument("circuit root '" + any_rotation.str() +
                                "' is longer than the graph order " + std::to_string(order));
  }
  return SmallCircuit{canonical_rotation(any_rotation), order};
}

std::set<SmallCircuit> small_circuits(const Word& w, std::size_t r) {
  if (r < 1 || r > w.size()) {
    throw std::out_of_range("circuit order " + std::to_string(r) + " outside 1.." +
                            std::to_string(w.size()));
  }
  const std::set<Word> edges = factors(w, r + 1);

  // An edge of C(q, r) is a word of length r + 1 with period |q| <= r whose
  // prefix of that length is primitive; any such period may be the witness.
  std::set<Word> candidates;
  for (const auto& e : edges) {
    for (std::size_t p : periods(e)) {
      if (p > r) break;
      const Word q = e.prefix(p);
      if (is_primitive(q)) candidates.insert(canonical_rotation(q));
    }
  }

  std::set<SmallCircuit> out;
  for (const auto& q : candidates) {
    bool complete = true;
    for (std::size_t i = 1; i <= q.size() && complete; ++i) {
      complete = edges.contains(power_to_length(rotation(q, i), r + 1));
    }
    if (complete) out.insert(SmallCircuit{q, r});
  }
  return out;
}

std::set<SmallCircuit> all_small_circuits(const Word& w) {
  std::set<SmallCircuit> out;
  for (std::size_t r = 1; r <= w.size(); ++r) out.merge(small_circuits(w, r));
  return out;
}

CircuitRealization realize(const SmallCircuit& c) {
  CircuitRealization out;
  for (const auto& p : conjugacy_class(c.root)) {
    out.vertices.insert(power_to_length(p, c.order));
    out.edges.insert(power_to_length(p, c.order + 1));
  }
  return out;
}

Word maximal_edge(const SmallCircuit& c, const SymbolOrder& order) {
  return power_to_length(extremal_rotation(c.root, order, Extremum::greatest), c.order + 1);
}

bool cao_less(const SmallCircuit& a, const SmallCircuit& b, const SymbolOrder& order) {
  if (a.order != b.order) {
    throw std::invalid_argument("circuit arrangement order compares circuits of Gamma_" +
                                std::to_string(a.order) + " and Gamma_" +
                                std::to_string(b.order));
  }
  return order.less(maximal_edge(a, order), maximal_edge(b, order));
}

std::vector<SmallCircuit> cao_sorted(const std::set<SmallCircuit>& circuits,
                                     const SymbolOrder& order) {
  std::vector<SmallCircuit> out(circuits.begin(), circuits.end());
  std::sort(out.begin(), out.end(), [&order](const SmallCircuit& a, const SmallCircuit& b) {
    return cao_less(a, b, order);
  });
  return out;
}

VectorCycle vector_cycle(const SmallCircuit& c, const RauzyGraph& g) {
  if (g.order() != c.order) {
    throw std::invalid_argument("vector cycle of a circuit of Gamma_" +
                                std::to_string(c.order) + " over Gamma_" +
                                std::to_string(g.order()));
  }
  const auto realization = realize(c);
  VectorCycle out;
  for (const auto& e : g.edges()) out.emplace(e.label, realization.edges.count(e.label));
  for (const auto& e : realization.edges) {
    if (!g.has_edge(e)) {
      throw std::invalid_argument("circuit edge '" + e.str() + "' is not in the graph");
    }
  }
  return out;
}

std::size_t independence_rank(const Word& w, std::size_t r) {
  const auto circuits = small_circuits(w, r);
  if (circuits.empty()) return 0;
  const RauzyGraph g = build_rauzy(w, r);
  std::vector<std::vector<std::int64_t>> rows;
  rows.reserve(circuits.size());
  for (const auto& c : circuits) {
    std::vector<std::int64_t> row;
    row.reserve(g.edges().size());
    for (const auto& [label, visits] : vector_cycle(c, g)) {
      row.push_back(static_cast<std::int64_t>(visits));
    }
    rows.push_back(std::move(row));
  }
  return exact_rank(std::move(rows));
}

std::size_t exact_rank(std::vector<std::vector<std::int64_t>> rows) {
  using boost::multiprecision::cpp_int;
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::vector<std::vector<cpp_int>> m;
  m.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");
    m.emplace_back(row.begin(), row.end());
  }

  // Bareiss elimination; every division below is exact.
  std::size_t rank = 0;
  cpp_int prev_pivot = 1;
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    auto pivot = std::find_if(m.begin() + static_cast<std::ptrdiff_t>(rank), m.end(),
                              [col](const auto& row) { return row[col] != 0; });
    if (pivot == m.end()) continue;
    std::iter_swap(m.begin() + static_cast<std::ptrdiff_t>(rank), pivot);
    const auto& top = m[rank];
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        m[i][j] = (top[col] * m[i][j] - m[i][col] * top[j]) / prev_pivot;
      }
      m[i][col] = 0;
    }
    prev_pivot = top[col];
    ++rank;
  }
  return rank;
}

std::set<std::set<Word>> elementary_cycles_oracle(const RauzyGraph& g, std::size_t max_size,
                                                  std::size_t max_cycles) {
  const std::vector<Word> vertices(g.vertices().begin(), g.vertices().end());
  auto index_of = [&vertices](const Word& v) {
    return static_cast<std::size_t>(
        std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin());
  };
  struct Arc {
    std::size_t to;
    const Word* label;
  };
  std::vector<std::vector<Arc>> out_arcs(vertices.size());
  for (const auto& e : g.edges()) {
    out_arcs[index_of(e.from)].push_back(Arc{index_of(e.to), &e.label});
  }

  std::set<std::set<Word>> cycles;
  std::vector<bool> on_path(vertices.size(), false);
  std::vector<const Word*> path;

  // Each cycle is reported once, from its least vertex.
  auto dfs = [&](auto&& self, std::size_t start, std::size_t at) -> void {
    for (const auto& arc : out_arcs[at]) {
      if (arc.to == start) {
        std::set<Word> cycle;
        for (const Word* label : path) cycle.insert(*label);
        cycle.insert(*arc.label);
        cycles.insert(std::move(cycle));
        if (cycles.size() > max_cycles) {
          throw CycleLimitExceeded("more than " + std::to_string(max_cycles) +
                                   " elementary circuits");
        }
        continue;
      }
      if (arc.to < start || on_path[arc.to] || path.size() + 1 >= max_size) continue;
      on_path[arc.to] = true;
      path.push_back(arc.label);
      self(self, start, arc.to);
      path.pop_back();
      on_path[arc.to] = false;
    }
  };

  if (max_size == 0) return cycles;
  for (std::size_t start = 0; start < vertices.size(); ++start) {
    on_path[start] = true;
    dfs(dfs, start, start);
    on_path[start] = false;
  }
  return cycles;
}

}  // namespace sqcirc
