#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tmbench {

using StateId = std::uint32_t;

inline constexpr char kBlank = '_';

enum class Move : std::int8_t { Left = -1, Right = 1 };

inline constexpr int offset(Move m) noexcept { return static_cast<int>(m); }
inline constexpr char move_letter(Move m) noexcept { return m == Move::Left ? 'L' : 'R'; }

struct Action {
  StateId target = 0;
  char write = kBlank;
  Move move = Move::Right;

  friend bool operator==(const Action&, const Action&) = default;
};

struct TransitionKey {
  StateId state = 0;
  char symbol = kBlank;

  friend auto operator<=>(const TransitionKey&, const TransitionKey&) = default;
};

// Deterministic single-tape Turing machine.
//
// The transition table is stored densely, one slot per (state, tape symbol).
// A Machine may be constructed in an invalid shape (missing entries, halting
// states with outgoing transitions, ...); validate_machine() reports defects
// and the simulator refuses machines that have any.
class Machine {
 public:
  Machine() = default;
  Machine(std::string input_alphabet, std::string tape_alphabet, std::vector<std::string> states,
          StateId start, StateId accept, StateId reject);

  const std::string& input_alphabet() const noexcept { return input_alphabet_; }
  const std::string& tape_alphabet() const noexcept { return tape_alphabet_; }
  const std::vector<std::string>& states() const noexcept { return states_; }
  std::size_t state_count() const noexcept { return states_.size(); }
  const std::string& state_name(StateId q) const { return states_.at(q); }

  StateId start() const noexcept { return start_; }
  StateId accept() const noexcept { return accept_; }
  StateId reject() const noexcept { return reject_; }
  bool is_halting(StateId q) const noexcept { return q == accept_ || q == reject_; }

  std::optional<StateId> find_state(std::string_view name) const;

  // Position of c in the tape alphabet, or -1.
  int symbol_index(char c) const noexcept { return symbol_index_[static_cast<unsigned char>(c)]; }
  bool in_input_alphabet(char c) const noexcept;

  // Throws DomainError when q is out of range or c is not a tape symbol.
  void set_transition(StateId q, char c, Action a);
  void erase_transition(StateId q, char c);

  const Action* transition(StateId q, char c) const noexcept;
  const Action* transition_at(std::size_t slot) const noexcept {
    return table_[slot] ? &*table_[slot] : nullptr;
  }
  // Dense slot index; valid only for in-range q and tape symbol c.
  std::size_t slot(StateId q, int symbol_idx) const noexcept {
    return static_cast<std::size_t>(q) * tape_alphabet_.size() + static_cast<std::size_t>(symbol_idx);
  }
  std::size_t slot_count() const noexcept { return table_.size(); }

  // All present entries, ordered by (state id, tape-alphabet position).
  std::vector<std::pair<TransitionKey, Action>> transitions() const;
  std::size_t transition_count() const noexcept;

 private:
  std::string input_alphabet_;
  std::string tape_alphabet_;
  std::vector<std::string> states_;
  StateId start_ = 0;
  StateId accept_ = 0;
  StateId reject_ = 0;
  std::vector<std::optional<Action>> table_;
  std::array<std::int16_t, 256> symbol_index_{};
};

enum class DefectKind {
  HaltingStatesNotDistinct,
  UnknownDistinguishedState,
  DuplicateState,
  DuplicateSymbol,
  BlankMissing,
  BlankInInput,
  InputNotInTape,
  TableNotTotal,
  HaltingStateHasTransition,
  UnknownTargetState,
  UnknownWriteSymbol,
};

struct Defect {
  DefectKind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<Defect> defects;

  bool ok() const noexcept { return defects.empty(); }
  bool has(DefectKind kind) const noexcept;
  std::string summary() const;
};

ValidationReport validate_machine(const Machine& m);

// Throws PreconditionError listing the defects.
void require_valid(const Machine& m);

// Two-way infinite tape; unwritten cells read as blank.
class Tape {
 public:
  Tape() = default;

  char read(std::int64_t cell) const noexcept {
    const std::int64_t i = cell - origin_;
    if (i < 0 || i >= static_cast<std::int64_t>(cells_.size())) return kBlank;
    return cells_[static_cast<std::size_t>(i)];
  }
  void write(std::int64_t cell, char symbol);

  // Non-blank cells only.
  std::map<std::int64_t, char> contents() const;

  friend bool operator==(const Tape& a, const Tape& b) { return a.contents() == b.contents(); }

 private:
  std::vector<char> cells_;
  std::int64_t origin_ = 0;
};

struct Configuration {
  StateId state = 0;
  Tape tape;
  std::int64_t head = 0;
};

// Input in cells 0..|x|-1, head on cell 0. Throws InvalidInput for a symbol
// outside the input alphabet.
Configuration initial_configuration(const Machine& m, std::string_view input);

struct AppliedTransition {
  TransitionKey key;
  Action action;
  std::int64_t head = 0;  // head position before the move
};

// Applies one transition in place. Returns nullopt when c is in a halting
// state. The machine must be valid.
std::optional<AppliedTransition> step(const Machine& m, Configuration& c);

enum class Verdict { Accepted, Rejected, FuelExhausted };

std::string_view to_string(Verdict v) noexcept;

struct TraceEntry {
  StateId state = 0;
  std::int64_t head = 0;
  char read = kBlank;
  char write = kBlank;
  Move move = Move::Right;
  StateId target = 0;
  bool counted = true;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct RunResult {
  Verdict verdict = Verdict::FuelExhausted;
  std::uint64_t total_steps = 0;
  std::uint64_t counted_steps = 0;
  std::optional<std::vector<TraceEntry>> trace;

  friend bool operator==(const RunResult&, const RunResult&) = default;
};

}  // namespace tmbench
