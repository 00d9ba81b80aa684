#pragma once

#include <cstddef>
#include <functional>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sqcirc/theorem.hpp"
#include "sqcirc/word.hpp"

namespace sqcirc {

enum class CorpusMode { per_line, whole };

struct CorpusOptions {
  CorpusMode mode = CorpusMode::per_line;
  /// Longer units are rejected with UnitTooLong.
  std::size_t max_unit_length = 1000;
  /// Bytes that never become symbols. Per line they also split units; in
  /// whole mode they are dropped. '\n' always separates lines.
  std::string separators = "\r";
};

class UnitTooLong : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CorpusSummary {
  std::size_t units = 0;
  bool all_hold = true;
  std::ptrdiff_t min_slack = 0;
  std::ptrdiff_t max_slack = 0;
  /// 0-based unit numbers reaching min_slack and max_slack.
  std::vector<std::size_t> tightest_units;
  std::vector<std::size_t> loosest_units;
};

/// Splits text into analysis units; empty units are skipped.
[[nodiscard]] std::vector<Word> split_units(std::string_view text, const CorpusOptions& options);

/// Runs theorem_check on each unit of the stream, handing each report to
/// `sink` in input order. Throws std::runtime_error if the stream fails and
/// UnitTooLong before analyzing anything if a unit exceeds the cap.
CorpusSummary corpus_analyze(std::istream& in, const CorpusOptions& options,
                             const std::function<void(const TheoremReport&)>& sink);

}  // namespace sqcirc
