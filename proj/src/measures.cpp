#include "tmbench/measures.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <map>

#include "tmbench/errors.hpp"
#include "tmbench/run.hpp"
#include "tmbench/words.hpp"

namespace tmbench {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be a finite value > 0");
}

void require_nonnegative(double v, const char* what) {
  if (!(v >= 0.0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be a finite value >= 0");
}

double parse_real(std::string_view text, std::string_view whole) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw DomainError("bad number \"" + std::string(text) + "\" in measure \"" + std::string(whole) + "\"");
  }
  return v;
}

}  // namespace

MeasureFunction MeasureFunction::linear(double a, double b) {
  require_positive(a, "linear: a");
  require_nonnegative(b, "linear: b");
  return MeasureFunction(Family::Linear, a, b, 1.0);
}

MeasureFunction MeasureFunction::log_shift(double a, double b) {
  require_positive(a, "log: a");
  require_nonnegative(b, "log: b");
  return MeasureFunction(Family::LogShift, a, b, 1.0);
}

MeasureFunction MeasureFunction::power(double a, double k) {
  require_positive(a, "power: a");
  require_positive(k, "power: k");
  return MeasureFunction(Family::Power, a, 0.0, k);
}

MeasureFunction MeasureFunction::exp2(double a) {
  require_positive(a, "exp2: a");
  return MeasureFunction(Family::Exp2, a, 0.0, 1.0);
}

double MeasureFunction::operator()(double x) const {
  if (!(x > 0.0)) throw DomainError("measure functions are defined on (0, inf); got " + format_double(x));
  switch (family_) {
    case Family::Identity:
      return x;
    case Family::Linear:
      return a_ * x + b_;
    case Family::LogShift:
      return a_ * std::log2(x + 1.0) + b_;
    case Family::Power:
      return a_ * std::pow(x, k_);
    case Family::Exp2:
      return a_ * std::exp2(x);
  }
  return x;
}

std::string MeasureFunction::to_string() const {
  switch (family_) {
    case Family::Identity:
      return "identity";
    case Family::Linear:
      return "linear:a=" + format_double(a_) + ",b=" + format_double(b_);
    case Family::LogShift:
      return "log:a=" + format_double(a_) + ",b=" + format_double(b_);
    case Family::Power:
      return "power:a=" + format_double(a_) + ",k=" + format_double(k_);
    case Family::Exp2:
      return "exp2:a=" + format_double(a_);
  }
  return "?";
}

MeasureFunction parse_measure(std::string_view text) {
  const auto colon = text.find(':');
  const auto family = text.substr(0, colon);
  std::map<std::string, double, std::less<>> params;
  if (colon != std::string_view::npos) {
    std::string_view rest = text.substr(colon + 1);
    while (true) {
      const auto comma = rest.find(',');
      const auto item = rest.substr(0, comma);
      const auto eq = item.find('=');
      if (eq == std::string_view::npos || eq == 0) {
        throw DomainError("expected key=value in measure \"" + std::string(text) + "\"");
      }
      const std::string key(item.substr(0, eq));
      if (!params.emplace(key, parse_real(item.substr(eq + 1), text)).second) {
        throw DomainError("repeated parameter '" + key + "' in measure \"" + std::string(text) + "\"");
      }
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  }

  auto take = [&](std::initializer_list<const char*> keys) {
    std::vector<double> values;
    for (const char* key : keys) {
      auto it = params.find(key);
      if (it == params.end()) {
        throw DomainError("measure \"" + std::string(text) + "\" is missing parameter '" + key + "'");
      }
      values.push_back(it->second);
      params.erase(it);
    }
    if (!params.empty()) {
      throw DomainError("unexpected parameter '" + params.begin()->first + "' in measure \"" + std::string(text) + "\"");
    }
    return values;
  };

  if (family == "identity") {
    take({});
    return MeasureFunction::identity();
  }
  if (family == "linear") {
    auto v = take({"a", "b"});
    return MeasureFunction::linear(v[0], v[1]);
  }
  if (family == "log") {
    auto v = take({"a", "b"});
    return MeasureFunction::log_shift(v[0], v[1]);
  }
  if (family == "power") {
    auto v = take({"a", "k"});
    return MeasureFunction::power(v[0], v[1]);
  }
  if (family == "exp2") {
    auto v = take({"a"});
    return MeasureFunction::exp2(v[0]);
  }
  throw DomainError("unknown measure family \"" + std::string(family) +
                    "\" (expected identity, linear, log, power or exp2)");
}

bool check_monotone_sample(const std::function<double(double)>& f, std::span<const double> xs) {
  if (xs.size() < 2) throw DomainError("monotonicity sample needs at least two points");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0.0)) throw DomainError("monotonicity sample points must be positive");
    if (i > 0 && !(xs[i - 1] < xs[i])) throw DomainError("monotonicity sample must be strictly increasing");
  }
  double prev = f(xs[0]);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double cur = f(xs[i]);
    if (!(prev < cur)) return false;
    prev = cur;
  }
  return true;
}

bool check_monotone_sample(const MeasureFunction& f, std::span<const double> xs) {
  return check_monotone_sample(std::function<double(double)>([&f](double x) { return f(x); }), xs);
}

double BoundSpec::operator()(double x) const {
  switch (mode_) {
    case BoundMode::Plain:
      return g_(x);
    case BoundMode::Outer:
      return g_((*transform_)(x));
    case BoundMode::Inner:
      return (*transform_)(g_(x));
  }
  return g_(x);
}

double admitted_steps(double bound) noexcept { return std::floor(bound + kBoundSlack); }

std::string BoundReport::to_csv() const {
  std::string out = "input,length,counted_steps,bound,pass\n";
  for (const auto& r : rows) {
    out += r.input;
    out += ',' + std::to_string(r.length);
    out += ',' + std::to_string(r.counted_steps);
    out += ',' + format_double(r.bound);
    out += r.pass ? ",true\n" : ",false\n";
  }
  return out;
}

BoundReport check_bound(const Simulator& sim, const BoundSpec& spec, std::span<const std::string> inputs,
                        std::uint64_t fuel) {
  if (inputs.empty()) throw PreconditionError("check_bound needs at least one input");
  BoundReport report;
  report.worst_margin = -std::numeric_limits<double>::infinity();
  for (const auto& x : inputs) {
    BoundRow row;
    row.input = x;
    row.length = x.size();
    row.evaluated_at = x.empty() ? 1.0 : static_cast<double>(x.size());
    row.bound = spec(row.evaluated_at);
    const auto result = sim.run(x, fuel);
    row.counted_steps = result.counted_steps;
    if (result.verdict == Verdict::FuelExhausted) {
      row.fuel_exhausted = true;
      row.pass = false;
      row.margin = std::numeric_limits<double>::infinity();
    } else {
      row.margin = static_cast<double>(row.counted_steps) - admitted_steps(row.bound);
      row.pass = row.margin <= 0.0;
    }
    report.verdict = report.verdict && row.pass;
    report.worst_margin = std::max(report.worst_margin, row.margin);
    report.rows.push_back(std::move(row));
  }
  return report;
}

BoundReport check_bound(const Machine& m, const CostModel& cost, const BoundSpec& spec,
                        std::span<const std::string> inputs, std::uint64_t fuel) {
  return check_bound(Simulator(m, cost), spec, inputs, fuel);
}

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace tmbench
