#include "tmbench/cost.hpp"

#include <algorithm>
#include <optional>

#include "tmbench/errors.hpp"

namespace tmbench {

CostModel CostModel::free_states(std::vector<std::string> states) {
  CostModel c(Kind::FreeStates);
  c.free_states_ = std::move(states);
  return c;
}

CostModel CostModel::custom(CostPredicate predicate) {
  if (!predicate) throw DomainError("custom cost model needs a predicate");
  CostModel c(Kind::CustomPredicate);
  c.predicate_ = std::move(predicate);
  return c;
}

std::string CostModel::to_string() const {
  switch (kind_) {
    case Kind::CountAll:
      return "count-all";
    case Kind::FreeBlindMoves:
      return "free-blind";
    case Kind::FreeStates: {
      std::string out = "free-states:";
      for (std::size_t i = 0; i < free_states_.size(); ++i) {
        if (i) out += ',';
        out += free_states_[i];
      }
      return out;
    }
    case Kind::CustomPredicate:
      return "custom";
  }
  return "?";
}

CostModel parse_cost_model(std::string_view text) {
  if (text == "count-all") return CostModel::count_all();
  if (text == "free-blind") return CostModel::free_blind_moves();
  constexpr std::string_view prefix = "free-states:";
  if (text.starts_with(prefix)) {
    std::vector<std::string> names;
    std::string_view rest = text.substr(prefix.size());
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      auto name = rest.substr(0, comma);
      if (name.empty()) throw DomainError("empty state name in cost model \"" + std::string(text) + "\"");
      names.emplace_back(name);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
      if (rest.empty()) throw DomainError("trailing comma in cost model \"" + std::string(text) + "\"");
    }
    if (names.empty()) throw DomainError("free-states needs at least one state");
    return CostModel::free_states(std::move(names));
  }
  throw DomainError("unknown cost model \"" + std::string(text) +
                    "\" (expected count-all, free-blind or free-states:q1,q2,...)");
}

bool is_blind_state(const Machine& m, StateId q) {
  if (q >= m.state_count()) throw DomainError("unknown state id " + std::to_string(q));
  if (m.is_halting(q)) throw DomainError("state '" + m.state_name(q) + "' is halting");
  const auto& gamma = m.tape_alphabet();
  std::optional<std::pair<StateId, Move>> shared;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    const Action* a = m.transition_at(m.slot(q, static_cast<int>(i)));
    if (!a || a->write != gamma[i]) return false;
    if (!shared) {
      shared = {a->target, a->move};
    } else if (shared->first != a->target || shared->second != a->move) {
      return false;
    }
  }
  return shared.has_value();
}

bool is_blind_state(const Machine& m, std::string_view state) {
  auto q = m.find_state(state);
  if (!q) throw DomainError("unknown state '" + std::string(state) + "'");
  return is_blind_state(m, *q);
}

std::vector<std::uint8_t> counted_mask(const Machine& m, const CostModel& cost) {
  std::vector<std::uint8_t> mask(m.slot_count(), 0);
  const std::size_t width = m.tape_alphabet().size();
  const auto n = m.state_count();

  // Per-state exemption, decided once from the table.
  std::vector<std::uint8_t> free_state(n, 0);
  switch (cost.kind()) {
    case CostModel::Kind::CountAll:
    case CostModel::Kind::CustomPredicate:
      break;
    case CostModel::Kind::FreeBlindMoves:
      for (StateId q = 0; q < n; ++q) {
        if (!m.is_halting(q) && is_blind_state(m, q)) free_state[q] = 1;
      }
      break;
    case CostModel::Kind::FreeStates:
      for (const auto& name : cost.free_state_names()) {
        auto q = m.find_state(name);
        if (!q) throw DomainError("free-states names unknown state '" + name + "'");
        free_state[*q] = 1;
      }
      break;
  }

  for (std::size_t i = 0; i < mask.size(); ++i) {
    const Action* a = m.transition_at(i);
    if (!a) continue;
    const auto q = static_cast<StateId>(i / width);
    if (cost.kind() == CostModel::Kind::CustomPredicate) {
      const TransitionView view{m.state_name(q), m.tape_alphabet()[i % width], a->write, a->move,
                                a->target < n ? std::string_view(m.state_name(a->target)) : std::string_view()};
      mask[i] = cost.predicate()(view) ? 1 : 0;
    } else {
      mask[i] = free_state[q] ? 0 : 1;
    }
  }
  return mask;
}

std::set<TransitionKey> counted_set(const Machine& m, const CostModel& cost) {
  require_valid(m);
  const auto mask = counted_mask(m, cost);
  const std::size_t width = m.tape_alphabet().size();
  std::set<TransitionKey> out;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) out.insert({static_cast<StateId>(i / width), m.tape_alphabet()[i % width]});
  }
  return out;
}

std::uint64_t counted_length(const RunResult& result) noexcept {
  if (!result.trace) return result.counted_steps;
  return static_cast<std::uint64_t>(
      std::count_if(result.trace->begin(), result.trace->end(), [](const TraceEntry& e) { return e.counted; }));
}

}  // namespace tmbench
