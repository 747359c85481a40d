#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tmbench/machine.hpp"

namespace tmbench {

// What a cost predicate sees of one transition-table entry.
struct TransitionView {
  std::string_view source;
  char read;
  char write;
  Move move;
  std::string_view target;
};

// Returns true when the entry is counted.
using CostPredicate = std::function<bool(const TransitionView&)>;

// Selection function: decides, per transition-table entry, whether applying
// that entry contributes to the computation length. A property of the table
// only; never of tape contents, head position or step index.
class CostModel {
 public:
  enum class Kind { CountAll, FreeBlindMoves, FreeStates, CustomPredicate };

  static CostModel count_all() { return CostModel(Kind::CountAll); }
  static CostModel free_blind_moves() { return CostModel(Kind::FreeBlindMoves); }
  static CostModel free_states(std::vector<std::string> states);
  static CostModel custom(CostPredicate predicate);

  Kind kind() const noexcept { return kind_; }
  const std::vector<std::string>& free_state_names() const noexcept { return free_states_; }
  const CostPredicate& predicate() const noexcept { return predicate_; }

  // CLI spelling: "count-all", "free-blind", "free-states:q1,q2". Custom
  // predicates have no CLI spelling and render as "custom".
  std::string to_string() const;

 private:
  explicit CostModel(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::CountAll;
  std::vector<std::string> free_states_;
  CostPredicate predicate_;
};

// Throws DomainError on unrecognized syntax.
CostModel parse_cost_model(std::string_view text);

// A state is blind when every tape symbol leads to the same target and
// direction and is written back unchanged: pure head movement that ignores
// the scanned cell. Throws DomainError for unknown or halting states.
bool is_blind_state(const Machine& m, StateId q);
bool is_blind_state(const Machine& m, std::string_view state);

std::set<TransitionKey> counted_set(const Machine& m, const CostModel& cost);

// Same selection as counted_set, laid out per dense table slot (1 = counted).
std::vector<std::uint8_t> counted_mask(const Machine& m, const CostModel& cost);

// Counted length of a finished run. Recounts from the trace when present.
std::uint64_t counted_length(const RunResult& result) noexcept;

}  // namespace tmbench
