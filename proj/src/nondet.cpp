#include "tmbench/nondet.hpp"

#include <algorithm>
#include <cmath>

#include "tmbench/errors.hpp"
#include "tmbench/run.hpp"
#include "tmbench/words.hpp"

namespace tmbench {

namespace {

// Positions are 64-bit cell indices.
constexpr std::size_t kMaxPositionedLength = 62;

CertificateSearchReport search(const CheckingRelation& rel, std::string_view x, const CostModel& cost,
                               std::int64_t max_length, const SearchLimits& limits) {
  CertificateSearchReport report;
  report.max_certificate_length = max_length;
  if (max_length < 0) return report;
  if (rel.delivery() == Delivery::Positioned && static_cast<std::size_t>(max_length) > kMaxPositionedLength) {
    throw BudgetExceeded("positioned certificates longer than " + std::to_string(kMaxPositionedLength) +
                         " symbols overflow the cell index");
  }

  // Reject bad inputs up front, even when no certificate would be tried.
  (void)initial_configuration(rel.checker(), x);
  const Simulator sim(rel.checker(), cost);
  const auto& alphabet = rel.certificate_alphabet();
  for (std::size_t len = 0; len <= static_cast<std::size_t>(max_length); ++len) {
    for (const auto& y : words_of_length(alphabet, len)) {
      ++report.certificates_tried;
      const auto r = sim.run(rel.deliver(x, y), limits.fuel);
      report.max_checker_counted_steps = std::max(report.max_checker_counted_steps, r.counted_steps);
      if (r.verdict == Verdict::FuelExhausted) ++report.fuel_exhausted_runs;
      if (r.verdict == Verdict::Accepted) {
        report.accepted = true;
        report.witness = y;
        return report;
      }
    }
  }
  return report;
}

void require_within_budget(const CheckingRelation& rel, std::uint64_t max_length, const SearchLimits& limits) {
  const auto count = count_words_up_to(rel.certificate_alphabet().size(), max_length);
  if (count > limits.budget) {
    throw BudgetExceeded("certificate search would try " + std::to_string(count) + " certificates (lengths <= " +
                         std::to_string(max_length) + "), above the budget of " + std::to_string(limits.budget));
  }
}

}  // namespace

std::string_view to_string(Delivery d) noexcept { return d == Delivery::Inline ? "inline" : "positioned"; }

Delivery parse_delivery(std::string_view text) {
  if (text == "inline") return Delivery::Inline;
  if (text == "positioned") return Delivery::Positioned;
  throw DomainError("unknown delivery \"" + std::string(text) + "\" (expected inline or positioned)");
}

CheckingRelation::CheckingRelation(Machine checker, Delivery delivery, std::string certificate_alphabet)
    : checker_(std::move(checker)), delivery_(delivery), certificate_alphabet_(std::move(certificate_alphabet)) {
  require_valid(checker_);
  std::sort(certificate_alphabet_.begin(), certificate_alphabet_.end());
  certificate_alphabet_.erase(std::unique(certificate_alphabet_.begin(), certificate_alphabet_.end()),
                              certificate_alphabet_.end());
  if (delivery_ == Delivery::Inline) {
    if (checker_.symbol_index(kSeparator) < 0) {
      throw DomainError("inline delivery needs '#' in the checker's tape alphabet");
    }
    if (checker_.in_input_alphabet(kSeparator)) {
      throw DomainError("inline delivery needs '#' outside the checker's input alphabet");
    }
    for (char c : certificate_alphabet_) {
      if (checker_.symbol_index(c) < 0 || c == kBlank || c == kSeparator) {
        throw DomainError(std::string("certificate symbol '") + c + "' cannot be written on the checker's tape");
      }
    }
  } else if (certificate_alphabet_ != "01") {
    throw DomainError("positioned delivery reads certificates as binary numerals; alphabet must be {0,1}");
  }
}

std::uint64_t certificate_position(std::string_view y) {
  if (y.size() > kMaxPositionedLength) throw DomainError("certificate numeral too long for a cell index");
  std::uint64_t v = 0;
  for (char c : y) {
    if (c != '0' && c != '1') throw InvalidInput(std::string("certificate symbol '") + c + "' is not a bit");
    v = 2 * v + (c == '1' ? 1U : 0U);
  }
  return v;
}

Configuration CheckingRelation::deliver(std::string_view x, std::string_view y) const {
  Configuration c = initial_configuration(checker_, x);
  if (delivery_ == Delivery::Positioned) {
    c.head = static_cast<std::int64_t>(certificate_position(y));
    return c;
  }
  auto cell = static_cast<std::int64_t>(x.size());
  c.tape.write(cell++, kSeparator);
  for (char s : y) {
    if (certificate_alphabet_.find(s) == std::string::npos) {
      throw InvalidInput(std::string("certificate symbol '") + s + "' outside the certificate alphabet");
    }
    c.tape.write(cell++, s);
  }
  return c;
}

CertificateSearchReport decide_nc(const CheckingRelation& rel, const MeasureFunction& g, std::string_view x,
                                  const CostModel& cost, SearchLimits limits) {
  const double limit = admitted_steps(g(static_cast<double>(std::max<std::size_t>(x.size(), 1))));
  // Even a unary alphabet yields limit+1 certificates.
  if (limit >= static_cast<double>(limits.budget)) {
    throw BudgetExceeded("certificate length bound " + format_double(limit) + " exceeds the budget of " +
                         std::to_string(limits.budget) + " certificates");
  }
  const auto max_length = static_cast<std::uint64_t>(limit);
  require_within_budget(rel, max_length, limits);
  return search(rel, x, cost, static_cast<std::int64_t>(max_length), limits);
}

CertificateSearchReport decide_nt(const CheckingRelation& rel, const MeasureFunction& g, const MeasureFunction& t,
                                  std::string_view x, const CostModel& cost, SearchLimits limits) {
  const double cap = g(t(static_cast<double>(std::max<std::size_t>(x.size(), 1)))) + kBoundSlack;
  // T is strictly increasing, so admissible lengths form a prefix 0..L.
  std::uint64_t max_length = 0;
  while (t(static_cast<double>(max_length + 1)) <= cap) {
    ++max_length;
    require_within_budget(rel, max_length, limits);
    if (max_length >= limits.budget) {
      throw BudgetExceeded("certificate length bound exceeds the budget of " + std::to_string(limits.budget));
    }
  }
  return search(rel, x, cost, static_cast<std::int64_t>(max_length), limits);
}

DemoMachines build_demo_machines() {
  const std::string tape = std::string("01") + kBlank;

  // q_start behaves exactly like q_scan; it exists so the start state is a
  // distinct name in the file format.
  Machine scanner("01", tape, {"q_start", "q_scan", "q_accept", "q_reject"}, 0, 2, 3);
  for (StateId q : {StateId{0}, StateId{1}}) {
    scanner.set_transition(q, '0', {1, '0', Move::Right});
    scanner.set_transition(q, '1', {2, '1', Move::Right});
    scanner.set_transition(q, kBlank, {3, kBlank, Move::Right});
  }

  Machine checker("01", tape, {"q_check", "q_accept", "q_reject"}, 0, 1, 2);
  checker.set_transition(0, '1', {1, '1', Move::Right});
  checker.set_transition(0, '0', {2, '0', Move::Right});
  checker.set_transition(0, kBlank, {2, kBlank, Move::Right});

  return {std::move(scanner), CheckingRelation(std::move(checker), Delivery::Positioned)};
}

MeasureFunction demo_certificate_bound() { return MeasureFunction::log_shift(1.0, 1.0); }

std::vector<DemoRow> demo_nlogtime(std::size_t max_n, const CostModel& cost) {
  const auto demo = build_demo_machines();
  const Simulator scanner(demo.scanner, cost);
  const auto g = demo_certificate_bound();
  std::vector<DemoRow> rows;
  for (std::size_t n = 1; n <= max_n; ++n) {
    DemoRow row;
    row.n = n;
    const std::string zeros(n, '0');
    row.scanner_counted = scanner.run(zeros, 4 * n + 8).counted_steps;

    const auto miss = decide_nc(demo.checker, g, zeros, cost);
    std::string hit = zeros;
    hit.back() = '1';
    const auto found = decide_nc(demo.checker, g, hit, cost);
    row.checker_max_counted = std::max(miss.max_checker_counted_steps, found.max_checker_counted_steps);
    row.witness_len = found.witness ? found.witness->size() : 0;
    rows.push_back(row);
  }
  return rows;
}

std::string demo_csv(const std::vector<DemoRow>& rows) {
  std::string out = "n,scanner_counted,checker_max_counted,witness_len\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + ',' + std::to_string(r.scanner_counted) + ',' +
           std::to_string(r.checker_max_counted) + ',' + std::to_string(r.witness_len) + '\n';
  }
  return out;
}

}  // namespace tmbench
