#include "sqcirc/corpus.hpp"

#include <iterator>

namespace sqcirc {

std::vector<Word> split_units(std::string_view text, const CorpusOptions& options) {
  auto is_separator = [&options](char c) {
    return options.separators.find(c) != std::string::npos;
  };
  std::vector<Word> units;
  std::string current;
  for (char c : text) {
    const bool newline = c == '\n';
    if (options.mode == CorpusMode::per_line && (newline || is_separator(c))) {
      if (!current.empty()) units.emplace_back(std::move(current));
      current.clear();
      continue;
    }
    if (newline || is_separator(c)) continue;
    current.push_back(c);
  }
  if (!current.empty()) units.emplace_back(std::move(current));
  return units;
}

CorpusSummary corpus_analyze(std::istream& in, const CorpusOptions& options,
                             const std::function<void(const TheoremReport&)>& sink) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) throw std::runtime_error("failed to read corpus input");

  const auto units = split_units(text, options);
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (units[i].size() > options.max_unit_length) {
      throw UnitTooLong("unit " + std::to_string(i) + " has " +
                        std::to_string(units[i].size()) + " symbols, above the cap of " +
                        std::to_string(options.max_unit_length));
    }
  }

  CorpusSummary summary;
  for (std::size_t i = 0; i < units.size(); ++i) {
    const TheoremReport report = theorem_check(units[i]);
    const std::ptrdiff_t slack = report.slack();
    if (summary.units == 0 || slack < summary.min_slack) {
      summary.min_slack = slack;
      summary.tightest_units.clear();
    }
    if (summary.units == 0 || slack > summary.max_slack) {
      summary.max_slack = slack;
      summary.loosest_units.clear();
    }
    if (slack == summary.min_slack) summary.tightest_units.push_back(i);
    if (slack == summary.max_slack) summary.loosest_units.push_back(i);
    summary.all_hold = summary.all_hold && report.chain_holds();
    ++summary.units;
    sink(report);
  }
  return summary;
}

}  // namespace sqcirc
