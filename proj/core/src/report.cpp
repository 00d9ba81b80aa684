#include "sqcirc/report.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sqcirc {
namespace {

using nlohmann::json;

json words_json(const std::set<Word>& words) {
  json out = json::array();
  for (const auto& w : words) out.push_back(w.str());
  return out;
}

std::set<Word> words_from(const json& array) {
  std::set<Word> out;
  for (const auto& item : array) out.insert(Word(item.get<std::string>()));
  return out;
}

json circuit_id_json(const SmallCircuit& c) {
  return json{{"root", c.root.str()}, {"order", c.order}};
}

SmallCircuit circuit_id_from(const json& j) {
  return SmallCircuit::of(Word(j.at("root").get<std::string>()),
                          j.at("order").get<std::size_t>());
}

Square square_from(const std::string& text) {
  const std::size_t half = text.size() / 2;
  if (text.empty() || text.size() % 2 != 0 ||
      text.compare(0, half, text, half, half) != 0) {
    throw std::invalid_argument("'" + text + "' is not a nonempty square");
  }
  return Square(Word(std::string_view(text).substr(0, half)));
}

std::string dot_quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void dot_body(std::ostringstream& out, const RauzyGraph& g, std::string_view indent) {
  for (const auto& v : g.vertices()) out << indent << dot_quote(v.view()) << ";\n";
  for (const auto& e : g.edges()) {
    out << indent << dot_quote(e.from.view()) << " -> " << dot_quote(e.to.view())
        << " [label=" << dot_quote(e.label.view()) << "];\n";
  }
}

std::string joined(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i != 0) out += sep;
    out += items[i];
  }
  return out;
}

}  // namespace

std::string format_circuit(const SmallCircuit& c) {
  return "C(" + c.root.str() + "," + std::to_string(c.order) + ")";
}

Analysis analyze(const Word& w, const SymbolOrder& order) {
  if (w.empty()) throw std::invalid_argument("analysis of the empty word");
  if (!order.covers(w)) {
    throw std::invalid_argument("symbol order does not rank every symbol of the word");
  }
  Analysis a;
  a.word = w;
  for (Symbol s : w.alphabet()) a.alphabet.push_back(static_cast<char>(s.id));
  a.squares = distinct_squares(w);
  a.classes = group_squares(a.squares);

  std::set<SmallCircuit> all;
  for (std::size_t r = 1; r <= w.size(); ++r) {
    const auto circuits = small_circuits(w, r);
    for (const auto& c : cao_sorted(circuits, order)) {
      a.circuits.push_back(CircuitEntry{c, realize(c), maximal_edge(c, order)});
    }
    all.insert(circuits.begin(), circuits.end());
  }
  a.injection = build_injection(a.classes, all).assignments;
  a.theorem = theorem_check(w);
  return a;
}

std::string to_json(const Analysis& a, int indent) {
  json doc;
  doc["word"] = a.word.str();
  doc["length"] = a.word.size();
  doc["alphabet"] = a.alphabet;

  json squares = json::array();
  for (const auto& sq : a.squares) {
    squares.push_back(json{{"half", sq.half().str()}, {"word", sq.word().str()}});
  }
  doc["squares"] = std::move(squares);

  json classes = json::array();
  for (const auto& cls : a.classes) {
    json members = json::array();
    for (const auto& sq : cls.members) members.push_back(sq.word().str());
    classes.push_back(
        json{{"root", cls.root.str()}, {"index", cls.index}, {"members", std::move(members)}});
  }
  doc["classes"] = std::move(classes);

  json circuits = json::array();
  for (const auto& entry : a.circuits) {
    circuits.push_back(json{{"root", entry.circuit.root.str()},
                            {"order", entry.circuit.order},
                            {"vertices", words_json(entry.realization.vertices)},
                            {"edges", words_json(entry.realization.edges)},
                            {"maximal_edge", entry.maximal_edge.str()}});
  }
  doc["circuits"] = std::move(circuits);

  json injection = json::array();
  for (const auto& as : a.injection) {
    injection.push_back(
        json{{"square", as.square.word().str()}, {"circuit", circuit_id_json(as.circuit)}});
  }
  doc["injection"] = std::move(injection);

  const auto& th = a.theorem;
  json per_order = json::array();
  for (const auto& oc : th.per_order_counts) {
    per_order.push_back(json{{"r", oc.r}, {"sc_r", oc.small_circuits}, {"cap", oc.cap}});
  }
  doc["theorem"] = json{{"S", th.square_count_with_empty},
                        {"bound", th.bound},
                        {"holds", th.holds},
                        {"sc_total", th.small_circuit_total},
                        {"per_order", std::move(per_order)}};
  return doc.dump(indent, ' ', false, json::error_handler_t::replace);
}

Analysis analysis_from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    Analysis a;
    a.word = Word(doc.at("word").get<std::string>());
    a.alphabet = doc.at("alphabet").get<std::string>();
    if (doc.at("length").get<std::size_t>() != a.word.size()) {
      throw std::invalid_argument("length does not match the word");
    }
    for (const auto& sq : doc.at("squares")) {
      Square parsed = square_from(sq.at("word").get<std::string>());
      if (parsed.half().str() != sq.at("half").get<std::string>()) {
        throw std::invalid_argument("square half does not match its word");
      }
      a.squares.push_back(std::move(parsed));
    }
    for (const auto& cls : doc.at("classes")) {
      SquareClass parsed{Word(cls.at("root").get<std::string>()),
                         cls.at("index").get<std::size_t>(),
                         {}};
      for (const auto& m : cls.at("members")) {
        parsed.members.push_back(square_from(m.get<std::string>()));
      }
      a.classes.push_back(std::move(parsed));
    }
    for (const auto& c : doc.at("circuits")) {
      a.circuits.push_back(CircuitEntry{
          circuit_id_from(c),
          CircuitRealization{words_from(c.at("vertices")), words_from(c.at("edges"))},
          Word(c.at("maximal_edge").get<std::string>())});
    }
    for (const auto& as : doc.at("injection")) {
      a.injection.push_back(Assignment{square_from(as.at("square").get<std::string>()),
                                       circuit_id_from(as.at("circuit"))});
    }

    const json& th = doc.at("theorem");
    TheoremReport& report = a.theorem;
    report.word = a.word;
    report.alphabet_size = a.alphabet.size();
    const std::size_t s = th.at("S").get<std::size_t>();
    if (s == 0) throw std::invalid_argument("S counts the empty square and is positive");
    report.nonempty_squares = s - 1;
    report.small_circuit_total = th.at("sc_total").get<std::size_t>();
    for (const auto& oc : th.at("per_order")) {
      report.per_order_counts.push_back(OrderCount{oc.at("r").get<std::size_t>(),
                                                   oc.at("sc_r").get<std::size_t>(),
                                                   oc.at("cap").get<std::ptrdiff_t>()});
    }
    finish_report(report);
    if (report.bound != th.at("bound").get<std::size_t>() ||
        report.holds != th.at("holds").get<bool>()) {
      throw std::invalid_argument("theorem verdict is inconsistent with its counts");
    }
    return a;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed analysis JSON: ") + e.what());
  }
}

std::string to_dot(const RauzyGraph& g) {
  std::ostringstream out;
  out << "digraph " << dot_quote("Gamma_" + std::to_string(g.order())) << " {\n";
  dot_body(out, g, "  ");
  out << "}\n";
  return out.str();
}

std::string to_dot_all(const Word& w) {
  std::ostringstream out;
  out << "digraph " << dot_quote("Rauzy(" + w.str() + ")") << " {\n";
  for (std::size_t r = 1; r <= w.size(); ++r) {
    out << "  subgraph " << dot_quote("cluster_" + std::to_string(r)) << " {\n";
    out << "    label=" << dot_quote("Gamma_" + std::to_string(r)) << ";\n";
    dot_body(out, build_rauzy(w, r), "    ");
    out << "  }\n";
  }
  out << "}\n";
  return out.str();
}

std::string format_report(const Analysis& a) {
  std::ostringstream out;
  const auto& th = a.theorem;
  out << "word      " << a.word.str() << "\n"
      << "length    " << a.word.size() << "\n"
      << "alphabet  " << a.alphabet << " (" << a.alphabet.size() << " symbols)\n\n";

  std::vector<std::string> squares;
  for (const auto& sq : a.squares) squares.push_back(sq.word().str());
  out << "squares (" << a.squares.size() << " nonempty, S(w) = "
      << th.square_count_with_empty << " with the empty square)\n";
  if (!squares.empty()) out << "  " << joined(squares, " ") << "\n";

  out << "\nclasses (" << a.classes.size() << ")\n";
  if (!a.classes.empty()) {
    std::vector<std::vector<std::string>> rows = {{"class"}, {"size"}, {"index"}};
    for (const auto& cls : a.classes) {
      rows[0].push_back(cls.root.str());
      rows[1].push_back(std::to_string(cls.members.size()));
      rows[2].push_back(std::to_string(cls.index));
    }
    std::vector<std::size_t> width(rows[0].size(), 0);
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    for (const auto& row : rows) {
      out << " ";
      for (std::size_t c = 0; c < row.size(); ++c) {
        out << " | " << std::setw(static_cast<int>(width[c])) << row[c];
      }
      out << " |\n";
    }
  }

  out << "\nsmall circuits (sc(w) = " << th.small_circuit_total << ")\n";
  std::map<std::size_t, std::vector<std::string>> by_order;
  for (const auto& e : a.circuits) {
    by_order[e.circuit.order].push_back(format_circuit(e.circuit) + " max " +
                                        e.maximal_edge.str());
  }
  for (const auto& oc : th.per_order_counts) {
    out << "  r=" << std::setw(3) << std::left << oc.r << std::right << " sc_r=" << oc.small_circuits
        << " cap=" << oc.cap;
    if (auto it = by_order.find(oc.r); it != by_order.end()) {
      out << "  " << joined(it->second, ", ");
    }
    out << "\n";
  }

  out << "\ninjection\n";
  for (const auto& as : a.injection) {
    out << "  " << std::setw(static_cast<int>(a.word.size())) << std::left
        << as.square.word().str() << std::right << " -> " << format_circuit(as.circuit) << "\n";
  }

  out << "\ntheorem\n"
      << "  S(w) = " << th.square_count_with_empty << " <= |w| - |Alph(w)| + 1 = " << th.bound
      << "  " << (th.holds ? "holds" : "VIOLATED") << " (slack " << th.slack() << ")\n"
      << "  S(w) - 1 = " << th.nonempty_squares << " <= sc(w) = " << th.small_circuit_total
      << " <= |w| - |Alph(w)| = " << a.word.size() - th.alphabet_size << "  "
      << (th.squares_within_circuits && th.circuits_within_bound ? "ok" : "VIOLATED") << "\n";
  return out.str();
}

}  // namespace sqcirc
