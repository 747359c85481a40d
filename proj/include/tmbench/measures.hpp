#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tmbench/cost.hpp"
#include "tmbench/machine.hpp"

namespace tmbench {

class Simulator;

// A strictly increasing positive function on (0, inf), drawn from a small set
// of parametric families so monotonicity follows from the parameter
// constraints (a > 0, k > 0, b >= 0).
class MeasureFunction {
 public:
  enum class Family { Identity, Linear, LogShift, Power, Exp2 };

  static MeasureFunction identity() { return MeasureFunction(Family::Identity, 1.0, 0.0, 1.0); }
  // x -> a*x + b
  static MeasureFunction linear(double a, double b);
  // x -> a*log2(x + 1) + b
  static MeasureFunction log_shift(double a, double b);
  // x -> a*x^k
  static MeasureFunction power(double a, double k);
  // x -> a*2^x
  static MeasureFunction exp2(double a);

  Family family() const noexcept { return family_; }
  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double k() const noexcept { return k_; }

  // Throws DomainError for x <= 0 (or NaN).
  double operator()(double x) const;

  // CLI spelling, e.g. "linear:a=1,b=1"; parse_measure(to_string()) == *this.
  std::string to_string() const;

  friend bool operator==(const MeasureFunction&, const MeasureFunction&) = default;

 private:
  MeasureFunction(Family f, double a, double b, double k) : family_(f), a_(a), b_(b), k_(k) {}

  Family family_;
  double a_;
  double b_;
  double k_;
};

inline double evaluate(const MeasureFunction& f, double x) { return f(x); }

// "identity", "linear:a=<r>,b=<r>", "log:a=<r>,b=<r>", "power:a=<r>,k=<r>",
// "exp2:a=<r>". Throws DomainError.
MeasureFunction parse_measure(std::string_view text);

// True iff f(xs[i]) < f(xs[i+1]) for every consecutive pair. The sample must
// be strictly increasing, positive and hold at least two points.
bool check_monotone_sample(const std::function<double(double)>& f, std::span<const double> xs);
bool check_monotone_sample(const MeasureFunction& f, std::span<const double> xs);

enum class BoundMode { Plain, Outer, Inner };

// Plain: g(x). Outer: g(T(x)). Inner: T(g(x)).
class BoundSpec {
 public:
  static BoundSpec plain(MeasureFunction g) { return BoundSpec(g, std::nullopt, BoundMode::Plain); }
  static BoundSpec outer(MeasureFunction g, MeasureFunction t) { return BoundSpec(g, t, BoundMode::Outer); }
  static BoundSpec inner(MeasureFunction g, MeasureFunction t) { return BoundSpec(g, t, BoundMode::Inner); }

  const MeasureFunction& g() const noexcept { return g_; }
  const std::optional<MeasureFunction>& transform() const noexcept { return transform_; }
  BoundMode mode() const noexcept { return mode_; }

  double operator()(double x) const;

 private:
  BoundSpec(MeasureFunction g, std::optional<MeasureFunction> t, BoundMode mode)
      : g_(g), transform_(t), mode_(mode) {}

  MeasureFunction g_;
  std::optional<MeasureFunction> transform_;
  BoundMode mode_;
};

// Absolute slack added before flooring a real-valued bound.
inline constexpr double kBoundSlack = 1e-9;

// Largest step count admitted by a real bound: floor(bound + slack).
double admitted_steps(double bound) noexcept;

struct BoundRow {
  std::string input;
  std::size_t length = 0;
  // Point the bound was evaluated at: length, or 1 for the empty word.
  double evaluated_at = 1.0;
  std::uint64_t counted_steps = 0;
  double bound = 0.0;
  bool pass = false;
  bool fuel_exhausted = false;
  // counted_steps - floor(bound + slack); +inf when fuel ran out.
  double margin = 0.0;
};

struct BoundReport {
  std::vector<BoundRow> rows;
  bool verdict = true;
  double worst_margin = 0.0;

  // input,length,counted_steps,bound,pass
  std::string to_csv() const;
};

// Runs the machine on every input and checks counted_steps <= bound(|x|).
// Inputs are reported in the order given.
BoundReport check_bound(const Simulator& sim, const BoundSpec& spec, std::span<const std::string> inputs,
                        std::uint64_t fuel);
BoundReport check_bound(const Machine& m, const CostModel& cost, const BoundSpec& spec,
                        std::span<const std::string> inputs, std::uint64_t fuel);

// Shortest decimal text that reads back as the same double.
std::string format_double(double v);

}  // namespace tmbench
