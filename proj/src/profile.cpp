#include "tmbench/profile.hpp"

#include <random>

#include "tmbench/errors.hpp"
#include "tmbench/run.hpp"
#include "tmbench/words.hpp"

namespace tmbench {

InputFamily parse_input_family(std::string_view text) {
  if (text == "all") return InputFamily::All;
  if (text == "zeros") return InputFamily::Zeros;
  if (text == "ones") return InputFamily::Ones;
  if (text == "random") return InputFamily::Random;
  throw DomainError("unknown input family \"" + std::string(text) + "\" (expected all, zeros, ones or random)");
}

std::string_view to_string(InputFamily f) noexcept {
  switch (f) {
    case InputFamily::All:
      return "all";
    case InputFamily::Zeros:
      return "zeros";
    case InputFamily::Ones:
      return "ones";
    case InputFamily::Random:
      return "random";
  }
  return "?";
}

std::vector<ProfileRow> profile(const Machine& m, const CostModel& cost, const ProfileOptions& options) {
  if (options.min_length > options.max_length) throw DomainError("profile: min length exceeds max length");
  if (options.family == InputFamily::All && options.max_length > kMaxExhaustiveLength) {
    throw BudgetExceeded("exhaustive profiling is limited to lengths <= " + std::to_string(kMaxExhaustiveLength));
  }
  if ((options.family == InputFamily::Zeros && !m.in_input_alphabet('0')) ||
      (options.family == InputFamily::Ones && !m.in_input_alphabet('1'))) {
    throw InvalidInput("input family \"" + std::string(to_string(options.family)) +
                       "\" is not over the machine's input alphabet");
  }
  if (options.family == InputFamily::Random && options.random_count == 0) {
    throw DomainError("random family needs a positive count");
  }

  const Simulator sim(m, cost);
  std::mt19937_64 rng(options.seed);
  std::vector<ProfileRow> rows;
  for (std::size_t len = options.min_length; len <= options.max_length; ++len) {
    std::vector<std::string> inputs;
    switch (options.family) {
      case InputFamily::All:
        inputs = words_of_length(m.input_alphabet(), len);
        break;
      case InputFamily::Zeros:
        inputs.emplace_back(len, '0');
        break;
      case InputFamily::Ones:
        inputs.emplace_back(len, '1');
        break;
      case InputFamily::Random:
        for (std::size_t i = 0; i < options.random_count; ++i) {
          inputs.push_back(random_word(m.input_alphabet(), len, rng));
        }
        break;
    }
    ProfileRow row;
    row.length = len;
    bool first = true;
    for (const auto& w : inputs) {
      const auto r = sim.run(w, options.fuel);
      if (r.verdict == Verdict::FuelExhausted) row.fuel_exhausted = true;
      if (first || r.counted_steps > row.max_counted_steps) {
        row.max_counted_steps = r.counted_steps;
        row.argmax_input = w;
        first = false;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string profile_csv(const std::vector<ProfileRow>& rows, const ProfileOptions& options, const CostModel& cost) {
  std::string out = "# family=" + std::string(to_string(options.family)) + " cost=" + cost.to_string();
  if (options.family == InputFamily::Random) {
    out += " count=" + std::to_string(options.random_count) + " seed=" + std::to_string(options.seed);
  }
  out += "\nlength,max_counted_steps,argmax_input\n";
  std::string exhausted;
  for (const auto& r : rows) {
    out += std::to_string(r.length) + ',' + std::to_string(r.max_counted_steps) + ',' + r.argmax_input + '\n';
    if (r.fuel_exhausted) exhausted += ' ' + std::to_string(r.length);
  }
  if (!exhausted.empty()) out += "# fuel exhausted at lengths:" + exhausted + '\n';
  return out;
}

}  // namespace tmbench
