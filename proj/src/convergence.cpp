#include "tmbench/convergence.hpp"

#include <algorithm>
#include <cctype>
#include <random>

#include "tmbench/errors.hpp"
#include "tmbench/run.hpp"
#include "tmbench/words.hpp"

namespace tmbench {

namespace {

bool is_binary(std::string_view w) {
  return std::all_of(w.begin(), w.end(), [](char c) { return c == '0' || c == '1'; });
}

// Prefix of length `len` whose bits, read left to right, spell `value`.
std::string prefix_of(std::uint64_t value, unsigned len) {
  std::string s(len, '0');
  for (unsigned i = 0; i < len; ++i) {
    if ((value >> (len - 1 - i)) & 1U) s[i] = '1';
  }
  return s;
}

// Trie states are laid out level by level: prefixes of length l occupy
// ids [2^l - 1, 2^(l+1) - 1).
StateId trie_id(unsigned len, std::uint64_t value) {
  return static_cast<StateId>(((std::uint64_t{1} << len) - 1) + value);
}

}  // namespace

const std::vector<std::string>& LanguageOracle::builtin_names() {
  static const std::vector<std::string> names = {"contains-1", "parity-even-ones", "palindrome",
                                                 "all",        "empty",            "div3"};
  return names;
}

LanguageOracle LanguageOracle::builtin(std::string_view name) {
  LanguageOracle o;
  o.name_ = std::string(name);
  if (name == "contains-1") {
    o.kind_ = Builtin::Contains1;
  } else if (name == "parity-even-ones") {
    o.kind_ = Builtin::ParityEvenOnes;
  } else if (name == "palindrome") {
    o.kind_ = Builtin::Palindrome;
  } else if (name == "all") {
    o.kind_ = Builtin::All;
  } else if (name == "empty") {
    o.kind_ = Builtin::Empty;
  } else if (name == "div3") {
    o.kind_ = Builtin::Div3;
  } else {
    throw DomainError("unknown built-in language \"" + std::string(name) + "\"");
  }
  return o;
}

LanguageOracle LanguageOracle::finite_set(std::set<std::string> words) {
  for (const auto& w : words) {
    if (!is_binary(w)) throw DomainError("finite language word \"" + w + "\" is not over {0,1}");
  }
  LanguageOracle o;
  o.name_ = "finite(" + std::to_string(words.size()) + ")";
  o.words_ = std::move(words);
  return o;
}

LanguageOracle LanguageOracle::parse_word_list(std::string_view text) {
  std::set<std::string> words;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    if (line.empty()) continue;
    if (line == "eps") {
      words.insert("");
      continue;
    }
    if (!is_binary(line)) throw ParseError(line_no, "word \"" + std::string(line) + "\" is not over {0,1}");
    words.insert(std::string(line));
  }
  return finite_set(std::move(words));
}

bool LanguageOracle::contains(std::string_view w) const {
  if (words_) return words_->count(std::string(w)) > 0;
  switch (kind_) {
    case Builtin::Contains1:
      return w.find('1') != std::string_view::npos;
    case Builtin::ParityEvenOnes:
      return std::count(w.begin(), w.end(), '1') % 2 == 0;
    case Builtin::Palindrome:
      return std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(w.size() / 2), w.rbegin());
    case Builtin::All:
      return true;
    case Builtin::Empty:
      return false;
    case Builtin::Div3: {
      // Most significant bit first; the empty word is the numeral 0.
      unsigned r = 0;
      for (char c : w) r = (2 * r + (c == '1' ? 1U : 0U)) % 3;
      return r == 0;
    }
  }
  return false;
}

std::string trie_state_name(std::string_view prefix) { return "q_" + std::string(prefix); }

TrieMachineReport build_trie_machine(const LanguageOracle& language, unsigned n, unsigned max_depth) {
  if (n > max_depth) {
    throw BudgetExceeded("trie depth " + std::to_string(n) + " exceeds the limit of " + std::to_string(max_depth) +
                         " (" + std::to_string((std::uint64_t{1} << (std::min(n, 62U) + 1)) + 1) + " states)");
  }
  if (n > 30) throw BudgetExceeded("trie depth above 30 cannot be indexed");

  const std::uint64_t prefixes = (std::uint64_t{1} << (n + 1)) - 1;
  std::vector<std::string> states;
  states.reserve(prefixes + 2);
  for (unsigned len = 0; len <= n; ++len) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) states.push_back(trie_state_name(prefix_of(v, len)));
  }
  const auto accept = static_cast<StateId>(prefixes);
  const auto reject = static_cast<StateId>(prefixes + 1);
  states.emplace_back("q_accept");
  states.emplace_back("q_reject");

  TrieMachineReport report;
  report.n = n;
  report.machine = Machine("01", std::string("01") + kBlank, std::move(states), trie_id(0, 0), accept, reject);
  Machine& m = report.machine;

  for (unsigned len = 0; len <= n; ++len) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      const StateId q = trie_id(len, v);
      for (unsigned bit = 0; bit < 2; ++bit) {
        const char sym = bit ? '1' : '0';
        // At full depth the next symbol means the word is too long.
        const StateId next = len < n ? trie_id(len + 1, 2 * v + bit) : reject;
        m.set_transition(q, sym, {next, kBlank, Move::Right});
      }
      ++report.oracle_queries;
      const bool member = language.contains(prefix_of(v, len));
      m.set_transition(q, kBlank, {member ? accept : reject, kBlank, Move::Right});
    }
  }
  report.state_count = m.state_count();
  return report;
}

std::vector<std::string> longer_word_sample(unsigned n) {
  if (n <= kExhaustiveLongWordDepth) return words_of_length("01", n + 1);
  std::mt19937_64 rng(kLongWordSeed);
  std::vector<std::string> out;
  out.reserve(kLongWordSamples);
  for (std::size_t i = 0; i < kLongWordSamples; ++i) out.push_back(random_word("01", n + 1, rng));
  return out;
}

RestrictionReport verify_restriction(const TrieMachineReport& report, const LanguageOracle& language) {
  const Simulator sim(report.machine);
  const std::uint64_t fuel = report.n + 3;
  RestrictionReport out;
  for (const auto& w : words_up_to("01", report.n)) {
    ++out.short_words_checked;
    const auto r = sim.run(w, fuel);
    const bool expected = language.contains(w);
    if ((r.verdict == Verdict::Accepted) != expected || r.verdict == Verdict::FuelExhausted) {
      out.counterexamples.push_back(w);
    }
  }
  for (const auto& w : longer_word_sample(report.n)) {
    ++out.long_words_checked;
    if (sim.run(w, fuel).verdict != Verdict::Rejected) out.counterexamples.push_back(w);
  }
  out.ok = out.counterexamples.empty();
  return out;
}

StepCountReport verify_step_count(const TrieMachineReport& report) {
  const Simulator sim(report.machine);
  const std::uint64_t fuel = report.n + 3;
  StepCountReport out;
  auto expect = [&](const std::string& w, std::uint64_t expected) {
    const auto r = sim.run(w, fuel);
    if (r.total_steps != expected || r.verdict == Verdict::FuelExhausted) {
      out.violations.push_back(display_word(w) + ": " + std::to_string(r.total_steps) + " steps, expected " +
                               std::to_string(expected));
    }
  };
  for (const auto& w : words_up_to("01", report.n)) expect(w, w.size() + 1);
  for (const auto& w : longer_word_sample(report.n)) expect(w, std::uint64_t{report.n} + 1);
  out.ok = out.violations.empty();
  return out;
}

ConvergenceReport find_convergence_index(const LanguageOracle& language, unsigned k, unsigned budget) {
  if (k > kMaxConvergenceLength) {
    throw BudgetExceeded("convergence length bound " + std::to_string(k) + " exceeds " +
                         std::to_string(kMaxConvergenceLength));
  }
  const auto words = words_up_to("01", k);
  std::vector<bool> expected;
  expected.reserve(words.size());
  for (const auto& w : words) expected.push_back(language.contains(w));

  auto agrees = [&](unsigned n) {
    const auto trie = build_trie_machine(language, n, std::max(n, kDefaultMaxTrieDepth));
    const Simulator sim(trie.machine);
    for (std::size_t i = 0; i < words.size(); ++i) {
      if ((sim.run(words[i], n + 3).verdict == Verdict::Accepted) != expected[i]) return false;
    }
    return true;
  };

  ConvergenceReport report;
  report.k = k;
  for (unsigned n = 0; n <= budget; ++n) {
    if (!agrees(n)) continue;
    // Later members up to k must agree as well; beyond k agreement holds by
    // construction since every word of length <= k is then in the table.
    bool stable = true;
    for (unsigned later = n + 1; later <= std::min(k, budget) && stable; ++later) stable = agrees(later);
    if (!stable) continue;
    report.n_k = n;
    report.verified_words = words.size();
    break;
  }
  return report;
}

}  // namespace tmbench
