#include "tmbench/run.hpp"

#include "tmbench/errors.hpp"

namespace tmbench {

Simulator::Simulator(const Machine& m, const CostModel& cost) : machine_(&m) {
  require_valid(m);
  counted_ = counted_mask(m, cost);
}

bool Simulator::counts(TransitionKey key) const noexcept {
  const int idx = machine_->symbol_index(key.symbol);
  if (key.state >= machine_->state_count() || idx < 0) return false;
  return counted_[machine_->slot(key.state, idx)] != 0;
}

RunResult Simulator::run(std::string_view input, std::uint64_t fuel, bool record_trace) const {
  return run(initial_configuration(*machine_, input), fuel, record_trace);
}

RunResult Simulator::run(Configuration c, std::uint64_t fuel, bool record_trace) const {
  if (fuel == 0) throw PreconditionError("fuel must be positive");
  const Machine& m = *machine_;
  if (c.state >= m.state_count()) throw PreconditionError("configuration state out of range");

  RunResult result;
  if (record_trace) result.trace.emplace();

  while (!m.is_halting(c.state)) {
    if (result.total_steps == fuel) {
      result.verdict = Verdict::FuelExhausted;
      return result;
    }
    const char read = c.tape.read(c.head);
    const int idx = m.symbol_index(read);
    // Only reachable when a delivered tape carries a non-tape symbol.
    if (idx < 0) throw InvalidInput(std::string("tape holds symbol '") + read + "' outside the tape alphabet");
    const std::size_t slot = m.slot(c.state, idx);
    const Action& a = *m.transition_at(slot);
    const bool counted = counted_[slot] != 0;

    if (record_trace) result.trace->push_back({c.state, c.head, read, a.write, a.move, a.target, counted});
    c.tape.write(c.head, a.write);
    c.head += offset(a.move);
    c.state = a.target;
    ++result.total_steps;
    if (counted) ++result.counted_steps;
  }
  result.verdict = c.state == m.accept() ? Verdict::Accepted : Verdict::Rejected;
  return result;
}

RunResult run(const Machine& m, std::string_view input, const CostModel& cost, std::uint64_t fuel,
              bool record_trace) {
  return Simulator(m, cost).run(input, fuel, record_trace);
}

}  // namespace tmbench
