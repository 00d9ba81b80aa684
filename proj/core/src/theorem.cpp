#include "sqcirc/theorem.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sqcirc/circuits.hpp"
#include "sqcirc/injection.hpp"
#include "sqcirc/rauzy.hpp"
#include "sqcirc/squares.hpp"

namespace sqcirc {
namespace {

TheoremReport count_report(const Word& w, std::size_t nonempty_squares,
                           const std::vector<std::set<SmallCircuit>>& by_order) {
  TheoremReport report;
  report.word = w;
  report.nonempty_squares = nonempty_squares;
  report.alphabet_size = w.alphabet_size();
  std::size_t prev = complexity(w, 1);
  for (std::size_t r = 1; r <= w.size(); ++r) {
    const std::size_t next = complexity(w, r + 1);
    const std::size_t sc = by_order[r - 1].size();
    report.per_order_counts.push_back(OrderCount{
        r, sc,
        static_cast<std::ptrdiff_t>(next) - static_cast<std::ptrdiff_t>(prev) + 1});
    report.small_circuit_total += sc;
    prev = next;
  }
  finish_report(report);
  return report;
}

SymbolOrder reversed_order(const Word& w) {
  std::string perm;
  for (Symbol s : w.alphabet()) perm.push_back(static_cast<char>(s.id));
  std::reverse(perm.begin(), perm.end());
  return SymbolOrder::from_permutation(perm);
}

}  // namespace

void finish_report(TheoremReport& report) {
  const std::size_t length = report.word.size();
  report.square_count_with_empty = report.nonempty_squares + 1;
  report.bound = length - report.alphabet_size + 1;
  report.holds = report.square_count_with_empty <= report.bound;
  report.squares_within_circuits = report.nonempty_squares <= report.small_circuit_total;
  report.circuits_within_bound = report.small_circuit_total + report.alphabet_size <= length;
}

TheoremReport theorem_check(const Word& w) {
  if (w.empty()) throw std::invalid_argument("theorem check of the empty word");
  std::vector<std::set<SmallCircuit>> by_order;
  by_order.reserve(w.size());
  for (std::size_t r = 1; r <= w.size(); ++r) by_order.push_back(small_circuits(w, r));
  return count_report(w, distinct_squares(w).size(), by_order);
}

WordAudit audit_word(const Word& w) {
  if (w.empty()) throw std::invalid_argument("audit of the empty word");
  WordAudit audit;
  auto fail = [&audit](std::string what) { audit.violations.push_back(std::move(what)); };

  const auto squares = distinct_squares(w);
  const auto classes = group_squares(squares);
  std::vector<std::set<SmallCircuit>> by_order;
  std::set<SmallCircuit> all;
  by_order.reserve(w.size());
  for (std::size_t r = 1; r <= w.size(); ++r) {
    by_order.push_back(small_circuits(w, r));
    all.insert(by_order.back().begin(), by_order.back().end());
  }

  audit.theorem = count_report(w, squares.size(), by_order);
  const auto& th = audit.theorem;
  if (!th.holds) fail("S(w) exceeds |w| - |Alph(w)| + 1");
  if (!th.squares_within_circuits) fail("more nonempty squares than small circuits");
  if (!th.circuits_within_bound) fail("small circuits exceed |w| - |Alph(w)|");

  const auto injection = build_injection(classes, all);
  if (!injection.all_images_exist) fail("injection image is not a small circuit");
  if (!injection.injective) fail("injection images collide");

  const SymbolOrder natural;
  const SymbolOrder reversed = reversed_order(w);
  for (std::size_t r = 1; r <= w.size(); ++r) {
    const auto& circuits = by_order[r - 1];
    const auto& count = th.per_order_counts[r - 1];
    const std::string at = " in Gamma_" + std::to_string(r);
    if (static_cast<std::ptrdiff_t>(count.small_circuits) > count.cap) {
      fail("sc_r exceeds C(r+1) - C(r) + 1" + at);
    }

    const RauzyGraph g = build_rauzy(w, r);
    if (!is_weakly_connected(g)) fail("graph not weakly connected" + at);
    if (circuits.empty()) continue;

    for (const auto* order : {&natural, &reversed}) {
      std::set<Word> maximal;
      for (const auto& c : circuits) {
        Word e = maximal_edge(c, *order);
        if (!realize(c).edges.contains(e)) fail("maximal edge outside its circuit" + at);
        maximal.insert(std::move(e));
      }
      if (maximal.size() != circuits.size()) fail("maximal edges coincide" + at);
    }

    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& c : circuits) {
      std::vector<std::int64_t> row;
      for (const auto& [label, visits] : vector_cycle(c, g)) {
        row.push_back(static_cast<std::int64_t>(visits));
      }
      rows.push_back(std::move(row));
    }
    if (exact_rank(std::move(rows)) != circuits.size()) {
      fail("small circuits are linearly dependent" + at);
    }
  }

  for (const auto& cls : classes) {
    for (const auto& sq : cls.members) {
      ++audit.coordinate_checks;
      if (class_square(cls.root, square_coordinates(sq, cls)) != sq.word()) {
        fail("coordinates of '" + sq.word().str() + "' do not rebuild it");
      }
    }
  }
  return audit;
}

}  // namespace sqcirc
