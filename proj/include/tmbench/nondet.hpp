#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tmbench/cost.hpp"
#include "tmbench/machine.hpp"
#include "tmbench/measures.hpp"

namespace tmbench {

// How a certificate y reaches the checker alongside the input x.
enum class Delivery {
  // Tape holds x '#' y, head on cell 0.
  Inline,
  // Tape holds x alone; the head starts on cell value(y), y read as a base-2
  // numeral (empty y is cell 0). Models constant-time indexed access.
  Positioned,
};

inline constexpr char kSeparator = '#';

std::string_view to_string(Delivery d) noexcept;
Delivery parse_delivery(std::string_view text);

// Deterministic checker over (input, certificate) pairs.
class CheckingRelation {
 public:
  // Throws DomainError when the delivery invariants do not hold and
  // PreconditionError when the checker machine is invalid.
  CheckingRelation(Machine checker, Delivery delivery, std::string certificate_alphabet = "01");

  const Machine& checker() const noexcept { return checker_; }
  Delivery delivery() const noexcept { return delivery_; }
  const std::string& certificate_alphabet() const noexcept { return certificate_alphabet_; }

  Configuration deliver(std::string_view x, std::string_view y) const;

 private:
  Machine checker_;
  Delivery delivery_;
  std::string certificate_alphabet_;
};

// Binary numeral value of y (most significant bit first).
std::uint64_t certificate_position(std::string_view y);

struct CertificateSearchReport {
  bool accepted = false;
  // First accepting certificate in length-then-lexicographic order.
  std::optional<std::string> witness;
  std::uint64_t certificates_tried = 0;
  std::uint64_t max_checker_counted_steps = 0;
  // Longest certificate length admitted by the length bound, or -1 when none.
  std::int64_t max_certificate_length = -1;
  std::uint64_t fuel_exhausted_runs = 0;

  friend bool operator==(const CertificateSearchReport&, const CertificateSearchReport&) = default;
};

inline constexpr std::uint64_t kDefaultCertificateBudget = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kDefaultCheckerFuel = std::uint64_t{1} << 20;

struct SearchLimits {
  std::uint64_t fuel = kDefaultCheckerFuel;
  std::uint64_t budget = kDefaultCertificateBudget;
};

// x in L iff some y with |y| <= floor(g(max(|x|,1)) + slack) makes the checker
// accept. Throws BudgetExceeded when more than limits.budget certificates
// would be admissible.
CertificateSearchReport decide_nc(const CheckingRelation& rel, const MeasureFunction& g, std::string_view x,
                                  const CostModel& cost, SearchLimits limits = {});

// Same search with certificate lengths filtered by
// T(max(|y|,1)) <= g(T(max(|x|,1))) + slack. The empty certificate is always
// admissible, so T = identity reproduces decide_nc exactly.
CertificateSearchReport decide_nt(const CheckingRelation& rel, const MeasureFunction& g, const MeasureFunction& t,
                                  std::string_view x, const CostModel& cost, SearchLimits limits = {});

// The contains-a-1 pair: a scanner that walks right until it sees a '1'
// (accept) or a blank (reject), and a positioned checker that inspects the
// one cell its certificate points at.
struct DemoMachines {
  Machine scanner;
  CheckingRelation checker;
};

DemoMachines build_demo_machines();

struct DemoRow {
  std::size_t n = 0;
  std::uint64_t scanner_counted = 0;
  std::uint64_t checker_max_counted = 0;
  // Witness length for 0^(n-1)1.
  std::size_t witness_len = 0;
};

// Certificate bound used by the demo: log2(n+1) + 1.
MeasureFunction demo_certificate_bound();

// For n = 1..max_n: scanner counted steps on 0^n, the checker's maximum
// counted steps over the searches for 0^n and 0^(n-1)1, and the witness
// length found for 0^(n-1)1.
std::vector<DemoRow> demo_nlogtime(std::size_t max_n, const CostModel& cost = CostModel::count_all());

// n,scanner_counted,checker_max_counted,witness_len
std::string demo_csv(const std::vector<DemoRow>& rows);

}  // namespace tmbench
