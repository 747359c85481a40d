#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "tmbench/cost.hpp"
#include "tmbench/machine.hpp"

namespace tmbench {

// Validated machine plus the counted mask of one cost model. Build once and
// run many inputs; the machine must outlive the simulator.
class Simulator {
 public:
  // Throws PreconditionError for an invalid machine, DomainError for a cost
  // model that names unknown states.
  Simulator(const Machine& m, const CostModel& cost);
  explicit Simulator(const Machine& m) : Simulator(m, CostModel::count_all()) {}

  const Machine& machine() const noexcept { return *machine_; }
  bool counts(TransitionKey key) const noexcept;

  // Fuel bounds total (not counted) steps and must be positive.
  RunResult run(std::string_view input, std::uint64_t fuel, bool record_trace = false) const;
  RunResult run(Configuration start, std::uint64_t fuel, bool record_trace = false) const;

 private:
  const Machine* machine_;
  std::vector<std::uint8_t> counted_;
};

RunResult run(const Machine& m, std::string_view input, const CostModel& cost, std::uint64_t fuel,
              bool record_trace = false);

}  // namespace tmbench
