#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tmbench/machine.hpp"

namespace tmbench {

// Membership predicate for a language over {0,1}.
class LanguageOracle {
 public:
  // contains-1, parity-even-ones, palindrome, all, empty, div3.
  // Throws DomainError for anything else.
  static LanguageOracle builtin(std::string_view name);
  // Throws DomainError for words with symbols other than 0 and 1.
  static LanguageOracle finite_set(std::set<std::string> words);
  // One word per line, "eps" for the empty word, '#' starts a comment.
  static LanguageOracle parse_word_list(std::string_view text);

  static const std::vector<std::string>& builtin_names();

  bool contains(std::string_view w) const;
  const std::string& name() const noexcept { return name_; }
  bool is_builtin() const noexcept { return !words_.has_value(); }

 private:
  enum class Builtin { Contains1, ParityEvenOnes, Palindrome, All, Empty, Div3 };

  std::string name_;
  Builtin kind_ = Builtin::Empty;
  std::optional<std::set<std::string>> words_;
};

// "q_" followed by the prefix read so far; "q_" alone is the start state.
std::string trie_state_name(std::string_view prefix);

inline constexpr unsigned kDefaultMaxTrieDepth = 20;

struct TrieMachineReport {
  Machine machine;
  unsigned n = 0;
  std::uint64_t oracle_queries = 0;
  std::size_t state_count = 0;
};

// Lookup-trie machine accepting exactly L restricted to words of length <= n,
// in |x|+1 steps. One state per bit-string prefix of length <= n plus accept
// and reject. Throws BudgetExceeded when n > max_depth.
TrieMachineReport build_trie_machine(const LanguageOracle& language, unsigned n,
                                     unsigned max_depth = kDefaultMaxTrieDepth);

struct RestrictionReport {
  bool ok = true;
  std::vector<std::string> counterexamples;
  std::uint64_t short_words_checked = 0;
  std::uint64_t long_words_checked = 0;
};

// Words of length n+1 are checked exhaustively up to this depth and sampled
// (kLongWordSamples, fixed seed) above it.
inline constexpr unsigned kExhaustiveLongWordDepth = 10;
inline constexpr std::size_t kLongWordSamples = 256;
inline constexpr std::uint64_t kLongWordSeed = 0x5eed'0001;

// Longer words used by the verifiers, in a reproducible order.
std::vector<std::string> longer_word_sample(unsigned n);

RestrictionReport verify_restriction(const TrieMachineReport& report, const LanguageOracle& language);

struct StepCountReport {
  bool ok = true;
  // "<word>: <observed> steps, expected <expected>"
  std::vector<std::string> violations;
};

// Every word of length <= n takes exactly |w|+1 steps; sampled longer words
// take exactly n+1 (n consumptions plus the length-cap rejection).
StepCountReport verify_step_count(const TrieMachineReport& report);

struct ConvergenceReport {
  unsigned k = 0;
  std::optional<unsigned> n_k;
  std::uint64_t verified_words = 0;
};

// Least n <= budget whose trie machine agrees with L on every word of length
// <= k, with the agreement re-checked for every index from n_k up to k.
ConvergenceReport find_convergence_index(const LanguageOracle& language, unsigned k, unsigned budget);

inline constexpr unsigned kMaxConvergenceLength = 12;

}  // namespace tmbench
