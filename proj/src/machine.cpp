#include "tmbench/machine.hpp"

#include <algorithm>
#include <set>

#include "tmbench/errors.hpp"

namespace tmbench {

namespace {

std::string describe_symbol(char c) { return std::string(1, c); }

}  // namespace

Machine::Machine(std::string input_alphabet, std::string tape_alphabet,
                 std::vector<std::string> states, StateId start, StateId accept, StateId reject)
    : input_alphabet_(std::move(input_alphabet)),
      tape_alphabet_(std::move(tape_alphabet)),
      states_(std::move(states)),
      start_(start),
      accept_(accept),
      reject_(reject),
      table_(states_.size() * tape_alphabet_.size()) {
  symbol_index_.fill(-1);
  for (std::size_t i = 0; i < tape_alphabet_.size(); ++i) {
    auto& idx = symbol_index_[static_cast<unsigned char>(tape_alphabet_[i])];
    if (idx < 0) idx = static_cast<std::int16_t>(i);
  }
}

std::optional<StateId> Machine::find_state(std::string_view name) const {
  auto it = std::find(states_.begin(), states_.end(), name);
  if (it == states_.end()) return std::nullopt;
  return static_cast<StateId>(it - states_.begin());
}

bool Machine::in_input_alphabet(char c) const noexcept {
  return input_alphabet_.find(c) != std::string::npos;
}

void Machine::set_transition(StateId q, char c, Action a) {
  const int idx = symbol_index(c);
  if (q >= states_.size()) throw DomainError("set_transition: state id out of range");
  if (idx < 0) throw DomainError("set_transition: '" + describe_symbol(c) + "' is not a tape symbol");
  table_[slot(q, idx)] = a;
}

void Machine::erase_transition(StateId q, char c) {
  const int idx = symbol_index(c);
  if (q >= states_.size() || idx < 0) return;
  table_[slot(q, idx)].reset();
}

const Action* Machine::transition(StateId q, char c) const noexcept {
  const int idx = symbol_index(c);
  if (q >= states_.size() || idx < 0) return nullptr;
  return transition_at(slot(q, idx));
}

std::vector<std::pair<TransitionKey, Action>> Machine::transitions() const {
  std::vector<std::pair<TransitionKey, Action>> out;
  out.reserve(transition_count());
  const std::size_t width = tape_alphabet_.size();
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (!table_[i]) continue;
    out.push_back({{static_cast<StateId>(i / width), tape_alphabet_[i % width]}, *table_[i]});
  }
  return out;
}

std::size_t Machine::transition_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(table_.begin(), table_.end(), [](const auto& a) { return a.has_value(); }));
}

bool ValidationReport::has(DefectKind kind) const noexcept {
  return std::any_of(defects.begin(), defects.end(), [kind](const Defect& d) { return d.kind == kind; });
}

std::string ValidationReport::summary() const {
  std::string out;
  for (const auto& d : defects) {
    if (!out.empty()) out += "; ";
    out += d.message;
  }
  return out;
}

ValidationReport validate_machine(const Machine& m) {
  ValidationReport report;
  auto defect = [&](DefectKind kind, std::string msg) { report.defects.push_back({kind, std::move(msg)}); };

  const auto n = m.state_count();
  const bool distinguished_known = m.start() < n && m.accept() < n && m.reject() < n;
  if (!distinguished_known) {
    defect(DefectKind::UnknownDistinguishedState, "start/accept/reject must name declared states");
  }
  if (m.start() == m.accept() || m.start() == m.reject() || m.accept() == m.reject()) {
    std::string which = m.accept() == m.reject() ? "accept_state = reject_state"
                        : m.start() == m.accept() ? "start_state = accept_state"
                                                  : "start_state = reject_state";
    defect(DefectKind::HaltingStatesNotDistinct, "halting states not distinct: " + which);
  }

  std::set<std::string_view> seen_states;
  for (const auto& s : m.states()) {
    if (!seen_states.insert(s).second) defect(DefectKind::DuplicateState, "duplicate state '" + s + "'");
  }

  const auto& gamma = m.tape_alphabet();
  const auto& sigma = m.input_alphabet();
  std::set<char> seen_symbols;
  for (char c : gamma) {
    if (!seen_symbols.insert(c).second) {
      defect(DefectKind::DuplicateSymbol, "duplicate tape symbol '" + describe_symbol(c) + "'");
    }
  }
  std::set<char> seen_input;
  for (char c : sigma) {
    if (!seen_input.insert(c).second) {
      defect(DefectKind::DuplicateSymbol, "duplicate input symbol '" + describe_symbol(c) + "'");
    }
  }
  if (gamma.find(kBlank) == std::string::npos) {
    defect(DefectKind::BlankMissing, "tape alphabet lacks the blank '_'");
  }
  if (sigma.find(kBlank) != std::string::npos) {
    defect(DefectKind::BlankInInput, "input alphabet contains the blank '_'");
  }
  for (char c : sigma) {
    if (gamma.find(c) == std::string::npos) {
      defect(DefectKind::InputNotInTape,
             "input symbol '" + describe_symbol(c) + "' missing from tape alphabet");
    }
  }

  for (StateId q = 0; q < n; ++q) {
    const bool halting = m.is_halting(q);
    for (std::size_t i = 0; i < gamma.size(); ++i) {
      const char c = gamma[i];
      const Action* a = m.transition_at(m.slot(q, static_cast<int>(i)));
      const std::string key = "(" + m.state_name(q) + ", " + describe_symbol(c) + ")";
      if (halting) {
        if (a) defect(DefectKind::HaltingStateHasTransition, "halting state has transition " + key);
        continue;
      }
      if (!a) {
        defect(DefectKind::TableNotTotal, "transition table not total: missing " + key);
        continue;
      }
      if (a->target >= n) {
        defect(DefectKind::UnknownTargetState, "transition " + key + " targets an unknown state");
      }
      if (m.symbol_index(a->write) < 0) {
        defect(DefectKind::UnknownWriteSymbol,
               "transition " + key + " writes '" + describe_symbol(a->write) + "' outside the tape alphabet");
      }
    }
  }
  return report;
}

void require_valid(const Machine& m) {
  auto report = validate_machine(m);
  if (!report.ok()) throw PreconditionError("invalid machine: " + report.summary());
}

void Tape::write(std::int64_t cell, char symbol) {
  if (cells_.empty()) {
    if (symbol == kBlank) return;
    origin_ = cell;
    cells_.assign(1, symbol);
    return;
  }
  std::int64_t i = cell - origin_;
  if (i < 0) {
    if (symbol == kBlank) return;
    const auto grow = static_cast<std::size_t>(std::max<std::int64_t>(-i, static_cast<std::int64_t>(cells_.size())));
    cells_.insert(cells_.begin(), grow, kBlank);
    origin_ -= static_cast<std::int64_t>(grow);
    i = cell - origin_;
  } else if (i >= static_cast<std::int64_t>(cells_.size())) {
    if (symbol == kBlank) return;
    const auto need = static_cast<std::size_t>(i) + 1;
    cells_.resize(std::max(need, cells_.size() * 2), kBlank);
  }
  cells_[static_cast<std::size_t>(i)] = symbol;
}

std::map<std::int64_t, char> Tape::contents() const {
  std::map<std::int64_t, char> out;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i] != kBlank) out.emplace(origin_ + static_cast<std::int64_t>(i), cells_[i]);
  }
  return out;
}

Configuration initial_configuration(const Machine& m, std::string_view input) {
  Configuration c;
  c.state = m.start();
  c.head = 0;
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (!m.in_input_alphabet(input[i])) {
      throw InvalidInput("input symbol '" + describe_symbol(input[i]) + "' at position " + std::to_string(i) +
                         " is outside the input alphabet \"" + m.input_alphabet() + "\"");
    }
    c.tape.write(static_cast<std::int64_t>(i), input[i]);
  }
  return c;
}

std::optional<AppliedTransition> step(const Machine& m, Configuration& c) {
  if (m.is_halting(c.state)) return std::nullopt;
  const char read = c.tape.read(c.head);
  const Action* a = m.transition(c.state, read);
  if (!a) throw PreconditionError("no transition for (" + m.state_name(c.state) + ", " + describe_symbol(read) + ")");
  AppliedTransition applied{{c.state, read}, *a, c.head};
  c.tape.write(c.head, a->write);
  c.head += offset(a->move);
  c.state = a->target;
  return applied;
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Accepted:
      return "Accepted";
    case Verdict::Rejected:
      return "Rejected";
    case Verdict::FuelExhausted:
      return "FuelExhausted";
  }
  return "?";
}

}  // namespace tmbench
