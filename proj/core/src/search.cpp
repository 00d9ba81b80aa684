#include "sqcirc/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <utility>

#include "sqcirc/theorem.hpp"

namespace sqcirc {
namespace {

// Prefixes this long split each length into independent work units.
constexpr std::size_t kSplitLength = 6;

void merge_witnesses(std::vector<Word>& into, const std::vector<Word>& from,
                     std::size_t limit) {
  std::vector<Word> merged;
  merged.reserve(into.size() + from.size());
  std::merge(into.begin(), into.end(), from.begin(), from.end(), std::back_inserter(merged));
  if (merged.size() > limit) merged.resize(limit);
  into = std::move(merged);
}

void record(LengthStats& stats, const WordAudit& audit, std::size_t witness_limit) {
  const auto& th = audit.theorem;
  if (stats.words == 0 || th.nonempty_squares > stats.max_nonempty_squares) {
    stats.max_nonempty_squares = th.nonempty_squares;
    stats.witnesses.clear();
    stats.witness_count = 0;
  }
  if (th.nonempty_squares == stats.max_nonempty_squares) {
    ++stats.witness_count;
    // Words arrive in increasing order within a unit.
    if (stats.witnesses.size() < witness_limit) stats.witnesses.push_back(th.word);
  }
  stats.min_slack = stats.words == 0 ? th.slack() : std::min(stats.min_slack, th.slack());
  ++stats.words;
}

std::uint64_t checked_power(std::size_t base, std::size_t exponent, std::uint64_t limit) {
  std::uint64_t value = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (value > limit / base) return limit + 1;
    value *= base;
  }
  return value;
}

void extend(std::size_t k, std::size_t length, std::string& text, int max_used,
            const std::function<void(const Word&)>& visit) {
  if (text.size() == length) {
    visit(Word(std::string_view(text)));
    return;
  }
  const int top = std::min<int>(static_cast<int>(k) - 1, max_used + 1);
  for (int id = 0; id <= top; ++id) {
    text.push_back(letter(static_cast<std::size_t>(id)));
    extend(k, length, text, std::max(max_used, id), visit);
    text.pop_back();
  }
}

}  // namespace

char letter(std::size_t id) {
  if (id >= 26) throw std::invalid_argument("letter ids stop at 25");
  return static_cast<char>('a' + id);
}

void for_each_canonical_word(std::size_t k, std::size_t length, const Word& prefix,
                             const std::function<void(const Word&)>& visit) {
  if (k == 0 || k > 26) throw std::invalid_argument("alphabet size must be in 1..26");
  if (prefix.size() > length) return;
  int max_used = -1;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    const int id = prefix[i].id - 'a';
    if (id < 0 || id > max_used + 1 || id >= static_cast<int>(k)) {
      throw std::invalid_argument("prefix '" + prefix.str() + "' is not canonical");
    }
    max_used = std::max(max_used, id);
  }
  std::string text = prefix.str();
  extend(k, length, text, max_used, visit);
}

void SearchSummary::merge(const SearchSummary& other, std::size_t witness_limit) {
  words_checked += other.words_checked;
  coordinate_checks += other.coordinate_checks;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  if (per_length.size() < other.per_length.size()) per_length.resize(other.per_length.size());
  for (std::size_t i = 0; i < other.per_length.size(); ++i) {
    auto& mine = per_length[i];
    const auto& theirs = other.per_length[i];
    mine.length = i + 1;
    if (theirs.words == 0) continue;
    if (mine.words == 0 || theirs.max_nonempty_squares > mine.max_nonempty_squares) {
      const std::uint64_t words = mine.words;
      const std::ptrdiff_t slack = mine.min_slack;
      mine = theirs;
      mine.words += words;
      if (words != 0) mine.min_slack = std::min(slack, theirs.min_slack);
      continue;
    }
    if (theirs.max_nonempty_squares == mine.max_nonempty_squares) {
      mine.witness_count += theirs.witness_count;
      merge_witnesses(mine.witnesses, theirs.witnesses, witness_limit);
    }
    mine.words += theirs.words;
    mine.min_slack = std::min(mine.min_slack, theirs.min_slack);
  }
}

SearchSummary exhaustive_search(std::size_t alphabet_size, std::size_t max_len,
                                const SearchOptions& options) {
  if (alphabet_size == 0 || alphabet_size > 26) {
    throw std::invalid_argument("alphabet size must be in 1..26");
  }
  if (max_len == 0) throw std::invalid_argument("maximum length must be positive");
  if (checked_power(alphabet_size, max_len, options.budget) > options.budget) {
    throw BudgetExceeded(std::to_string(alphabet_size) + "^" + std::to_string(max_len) +
                         " words exceed the budget of " + std::to_string(options.budget));
  }

  struct Unit {
    std::size_t length;
    Word prefix;
  };
  std::vector<Unit> units;
  for (std::size_t n = 1; n <= max_len; ++n) {
    for_each_canonical_word(alphabet_size, std::min(n, kSplitLength), Word{},
                            [&](const Word& p) { units.push_back(Unit{n, p}); });
  }

  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, units.size()));
  std::vector<SearchSummary> partial(jobs);
  std::atomic<std::size_t> next{0};
  auto work = [&](SearchSummary& local) {
    local.per_length.resize(max_len);
    for (std::size_t u = next++; u < units.size(); u = next++) {
      const auto& unit = units[u];
      // Each unit is merged separately to keep witnesses the least ones.
      SearchSummary part;
      part.per_length.resize(max_len);
      auto& stats = part.per_length[unit.length - 1];
      for_each_canonical_word(alphabet_size, unit.length, unit.prefix, [&](const Word& w) {
        const WordAudit audit = audit_word(w);
        ++part.words_checked;
        part.coordinate_checks += audit.coordinate_checks;
        for (const auto& v : audit.violations) part.violations.push_back(Violation{w, v});
        record(stats, audit, options.witness_limit);
      });
      local.merge(part, options.witness_limit);
    }
  };

  if (jobs == 1) {
    work(partial[0]);
  } else {
    std::vector<std::exception_ptr> errors(jobs);
    {
      std::vector<std::jthread> pool;
      pool.reserve(jobs);
      for (std::size_t j = 0; j < jobs; ++j) {
        pool.emplace_back([&, j] {
          try {
            work(partial[j]);
          } catch (...) {
            errors[j] = std::current_exception();
          }
        });
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  SearchSummary summary;
  summary.alphabet_size = alphabet_size;
  summary.max_len = max_len;
  summary.per_length.resize(max_len);
  for (const auto& part : partial) summary.merge(part, options.witness_limit);
  for (std::size_t i = 0; i < summary.per_length.size(); ++i) {
    summary.per_length[i].length = i + 1;
  }
  std::sort(summary.violations.begin(), summary.violations.end(),
            [](const Violation& a, const Violation& b) {
              if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
              if (a.word != b.word) return a.word < b.word;
              return a.what < b.what;
            });
  return summary;
}

}  // namespace sqcirc
