// sqcirc: squares, Rauzy graphs and small circuits of words.
//
// Exit codes: 0 ok, 1 usage error, 2 I/O error, 3 invariant violation.

#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "sqcirc/sqcirc.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kIo = 2;
constexpr int kViolation = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

sqcirc::Word parse_word(const std::string& text) {
  if (text.empty()) throw UsageError("the word must be nonempty");
  return sqcirc::Word(text);
}

sqcirc::SymbolOrder parse_order(const std::string& perm, const sqcirc::Word& w) {
  if (perm.empty()) return {};
  sqcirc::SymbolOrder order;
  try {
    order = sqcirc::SymbolOrder::from_permutation(perm);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!order.covers(w)) throw UsageError("--order must rank every symbol of the word");
  return order;
}

/// "all" or a graph order in 1..|w|.
std::optional<std::size_t> parse_graph_order(const std::string& text, const sqcirc::Word& w) {
  if (text == "all") return std::nullopt;
  std::size_t r = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), r);
  if (ec != std::errc{} || end != text.data() + text.size() || r < 1 || r > w.size()) {
    throw UsageError("--n must be 'all' or an integer in 1.." + std::to_string(w.size()));
  }
  return r;
}

void print_graph(const sqcirc::RauzyGraph& g) {
  std::cout << "Gamma_" << g.order() << ": " << g.vertices().size() << " vertices, "
            << g.edges().size() << " edges";
  if (sqcirc::is_weakly_connected(g) && !g.vertices().empty()) {
    std::cout << ", cyclomatic number " << sqcirc::cyclomatic_number(g);
  }
  std::cout << "\n";
  for (const auto& e : g.edges()) {
    std::cout << "  " << e.from.str() << " -> " << e.to.str() << "  [" << e.label.str()
              << "]\n";
  }
}

void print_circuits(const sqcirc::Word& w, std::size_t r, const sqcirc::SymbolOrder& order) {
  const auto circuits = sqcirc::small_circuits(w, r);
  std::cout << "Gamma_" << r << ": " << circuits.size() << " small circuit"
            << (circuits.size() == 1 ? "" : "s") << "\n";
  for (const auto& c : sqcirc::cao_sorted(circuits, order)) {
    const auto real = sqcirc::realize(c);
    std::cout << "  " << sqcirc::format_circuit(c) << "  max " << sqcirc::maximal_edge(c, order)
              .str() << "  edges {";
    bool first = true;
    for (const auto& e : real.edges) {
      std::cout << (first ? "" : ", ") << e.str();
      first = false;
    }
    std::cout << "}\n";
  }
}

int run_search(std::size_t k, std::size_t max_len, std::size_t jobs, std::uint64_t budget) {
  sqcirc::SearchOptions options;
  options.jobs = jobs;
  options.budget = budget;
  const auto summary = sqcirc::exhaustive_search(k, max_len, options);
  std::cout << "alphabet " << k << ", lengths 1.." << max_len << ": " << summary.words_checked
            << " canonical words, " << summary.violations.size() << " violations\n";
  std::cout << std::setw(6) << "length" << std::setw(12) << "words" << std::setw(10)
            << "max S-1" << std::setw(10) << "min slack" << "  witnesses\n";
  for (const auto& row : summary.per_length) {
    std::cout << std::setw(6) << row.length << std::setw(12) << row.words << std::setw(10)
              << row.max_nonempty_squares << std::setw(10) << row.min_slack << "  ";
    for (const auto& w : row.witnesses) std::cout << w.str() << " ";
    if (row.witness_count > row.witnesses.size()) {
      std::cout << "(+" << row.witness_count - row.witnesses.size() << " more)";
    }
    std::cout << "\n";
  }
  for (const auto& v : summary.violations) {
    std::cout << "VIOLATION " << v.word.str() << ": " << v.what << "\n";
  }
  return summary.violations.empty() ? kOk : kViolation;
}

int run_corpus(const std::string& path, bool per_line, std::size_t cap,
               const std::string& separators) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "sqcirc: cannot read " << path << "\n";
    return kIo;
  }
  sqcirc::CorpusOptions options;
  options.mode = per_line ? sqcirc::CorpusMode::per_line : sqcirc::CorpusMode::whole;
  options.max_unit_length = cap;
  options.separators = separators;
  std::size_t unit = 0;
  const auto summary = sqcirc::corpus_analyze(in, options, [&unit](const auto& report) {
    std::cout << "unit " << unit++ << ": |w|=" << report.word.size()
              << " |Alph|=" << report.alphabet_size << " S=" << report.square_count_with_empty
              << " sc=" << report.small_circuit_total << " bound=" << report.bound
              << " slack=" << report.slack() << " " << (report.chain_holds() ? "holds" : "VIOLATED")
              << "\n";
  });
  auto list = [](const std::vector<std::size_t>& units) {
    std::string out;
    for (std::size_t i = 0; i < units.size() && i < 8; ++i) out += " " + std::to_string(units[i]);
    if (units.size() > 8) out += " ...";
    return out;
  };
  std::cout << "summary: " << summary.units << " units";
  if (summary.units > 0) {
    std::cout << ", min slack " << summary.min_slack << " (units" << list(summary.tightest_units)
              << "), max slack " << summary.max_slack << " (units"
              << list(summary.loosest_units) << ")";
  }
  std::cout << ", " << (summary.all_hold ? "all hold" : "VIOLATIONS") << "\n";
  return summary.all_hold ? kOk : kViolation;
}

int check_exit(const sqcirc::Analysis& a) {
  const auto injection = sqcirc::build_injection(a.word);
  const bool ok = a.theorem.chain_holds() && injection.injective && injection.all_images_exist;
  return ok ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Squares, Rauzy graphs and small circuits of finite words"};
  app.require_subcommand(1);
  std::string order_text;
  app.add_option("--order", order_text,
                 "Symbol order as a permutation, lowest first (e.g. ba for b < a)");

  std::string word_text;
  auto add_word = [&word_text](CLI::App* cmd) {
    cmd->add_option("word", word_text, "Input word; each byte is a symbol")->required();
  };

  auto* squares_cmd = app.add_subcommand("squares", "List distinct nonempty squares");
  add_word(squares_cmd);
  auto* classes_cmd = app.add_subcommand("classes", "Group squares into conjugacy classes");
  add_word(classes_cmd);

  auto* rauzy_cmd = app.add_subcommand("rauzy", "Print a Rauzy graph");
  add_word(rauzy_cmd);
  std::string n_text;
  bool dot = false;
  rauzy_cmd->add_option("--n", n_text, "Graph order, or 'all' with --dot")->required();
  rauzy_cmd->add_flag("--dot", dot, "Emit Graphviz DOT");

  auto* circuits_cmd = app.add_subcommand("circuits", "List small circuits");
  add_word(circuits_cmd);
  circuits_cmd->add_option("--n", n_text, "Graph order (default: all)");

  auto* inject_cmd = app.add_subcommand("inject", "Map squares to small circuits");
  add_word(inject_cmd);

  auto* check_cmd = app.add_subcommand("check", "Verify the square bound on one word");
  add_word(check_cmd);
  bool json = false;
  check_cmd->add_flag("--json", json, "Emit the full JSON report");

  auto* analyze_cmd = app.add_subcommand("analyze", "Full report in one of several formats");
  add_word(analyze_cmd);
  std::string emit = "report";
  analyze_cmd->add_option("--emit", emit, "report, dot or json")
      ->check(CLI::IsMember({"report", "dot", "json"}));
  analyze_cmd->add_option("--n", n_text, "Graph order for dot output, or 'all'");

  auto* search_cmd = app.add_subcommand("search", "Exhaustive sweep over canonical words");
  std::size_t alphabet = 2;
  std::size_t max_len = 10;
  std::size_t jobs = 1;
  std::uint64_t budget = sqcirc::SearchOptions{}.budget;
  search_cmd->add_option("--alphabet", alphabet, "Alphabet size k")
      ->required()
      ->check(CLI::Range(1, 26));
  search_cmd->add_option("--max-len", max_len, "Maximum word length N")
      ->required()
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  search_cmd->add_option("--budget", budget, "Upper limit on k^N");

  auto* corpus_cmd = app.add_subcommand("corpus", "Check every unit of a text file");
  std::string path;
  bool per_line = false;
  std::size_t cap = sqcirc::CorpusOptions{}.max_unit_length;
  std::string separators = sqcirc::CorpusOptions{}.separators;
  corpus_cmd->add_option("path", path, "Input file")->required();
  corpus_cmd->add_flag("--per-line", per_line, "One unit per line instead of the whole file");
  corpus_cmd->add_option("--max-unit", cap, "Longest accepted unit");
  corpus_cmd->add_option("--separators", separators, "Bytes that are not symbols");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*search_cmd) return run_search(alphabet, max_len, jobs, budget);
    if (*corpus_cmd) return run_corpus(path, per_line, cap, separators);

    const sqcirc::Word w = parse_word(word_text);
    const sqcirc::SymbolOrder order = parse_order(order_text, w);

    if (*squares_cmd) {
      for (const auto& sq : sqcirc::distinct_squares(w)) std::cout << sq.word().str() << "\n";
      return kOk;
    }
    if (*classes_cmd) {
      for (const auto& cls : sqcirc::square_classes(w)) {
        std::cout << "Class(" << cls.root.str() << ") index " << cls.index << " size "
                  << cls.members.size() << ":";
        for (const auto& sq : cls.members) {
          const auto at = sqcirc::square_coordinates(sq, cls);
          std::cout << " " << sq.word().str() << "=v(" << at.i << "," << at.j << ")";
        }
        std::cout << "\n";
      }
      return kOk;
    }
    if (*rauzy_cmd) {
      const auto r = parse_graph_order(n_text, w);
      if (!r && !dot) throw UsageError("--n all requires --dot");
      if (dot) {
        std::cout << (r ? sqcirc::to_dot(sqcirc::build_rauzy(w, *r)) : sqcirc::to_dot_all(w));
      } else {
        print_graph(sqcirc::build_rauzy(w, *r));
      }
      return kOk;
    }
    if (*circuits_cmd) {
      const auto r = n_text.empty() ? std::nullopt : parse_graph_order(n_text, w);
      if (r) {
        print_circuits(w, *r, order);
      } else {
        for (std::size_t k = 1; k <= w.size(); ++k) print_circuits(w, k, order);
      }
      return kOk;
    }
    if (*inject_cmd) {
      const auto report = sqcirc::build_injection(w);
      for (const auto& a : report.assignments) {
        std::cout << a.square.word().str() << " -> " << sqcirc::format_circuit(a.circuit) << "\n";
      }
      std::cout << report.square_count << " squares, " << report.circuit_count
                << " small circuits, injective " << (report.injective ? "yes" : "NO")
                << ", images exist " << (report.all_images_exist ? "yes" : "NO") << "\n";
      return report.injective && report.all_images_exist ? kOk : kViolation;
    }
    if (*check_cmd) {
      const auto a = sqcirc::analyze(w, order);
      std::cout << (json ? sqcirc::to_json(a) + "\n" : sqcirc::format_report(a));
      return check_exit(a);
    }
    if (*analyze_cmd) {
      if (emit == "dot") {
        const auto r = parse_graph_order(n_text.empty() ? "all" : n_text, w);
        std::cout << (r ? sqcirc::to_dot(sqcirc::build_rauzy(w, *r)) : sqcirc::to_dot_all(w));
        return kOk;
      }
      const auto a = sqcirc::analyze(w, order);
      std::cout << (emit == "json" ? sqcirc::to_json(a) + "\n" : sqcirc::format_report(a));
      return check_exit(a);
    }
  } catch (const UsageError& e) {
    std::cerr << "sqcirc: " << e.what() << "\n";
    return kUsage;
  } catch (const sqcirc::BudgetExceeded& e) {
    std::cerr << "sqcirc: " << e.what() << "\n";
    return kUsage;
  } catch (const sqcirc::UnitTooLong& e) {
    std::cerr << "sqcirc: " << e.what() << "\n";
    return kIo;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "sqcirc: " << e.what() << "\n";
    return kIo;
  } catch (const std::logic_error& e) {
    std::cerr << "sqcirc: internal invariant violated: " << e.what() << "\n";
    return kViolation;
  } catch (const std::runtime_error& e) {
    std::cerr << "sqcirc: " << e.what() << "\n";
    return kIo;
  }
  return kUsage;
}
