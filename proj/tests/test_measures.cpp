#include <cmath>
#include <cstring>
#include <limits>
#include <random>

#include "doctest.h"
#include "test_support.hpp"
#include "tmbench/convergence.hpp"
#include "tmbench/errors.hpp"
#include "tmbench/measures.hpp"
#include "tmbench/nondet.hpp"
#include "tmbench/words.hpp"

using namespace tmbench;

namespace {

// Independent integer log2 for exact powers of two.
int halvings(unsigned v) {
  int n = 0;
  while (v > 1) {
    v /= 2;
    ++n;
  }
  return n;
}

bool bit_identical(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_CASE("evaluate examples") {
  CHECK(evaluate(MeasureFunction::identity(), 7.0) == 7.0);
  CHECK(evaluate(MeasureFunction::linear(1, 1), 4.0) == 5.0);
  CHECK(evaluate(MeasureFunction::log_shift(1, 0), 7.0) == static_cast<double>(halvings(8)));
  CHECK(evaluate(MeasureFunction::power(2, 3), 2.0) == 16.0);
  CHECK(evaluate(MeasureFunction::exp2(0.5), 4.0) == 8.0);
}

TEST_CASE("evaluate rejects points outside (0, inf)") {
  CHECK_THROWS_AS(evaluate(MeasureFunction::identity(), 0.0), DomainError);
  CHECK_THROWS_AS(evaluate(MeasureFunction::linear(1, 0), -1.0), DomainError);
  CHECK_THROWS_AS(evaluate(MeasureFunction::identity(), std::nan("")), DomainError);
}

TEST_CASE("parameter constraints") {
  CHECK_THROWS_AS(MeasureFunction::linear(0, 1), DomainError);
  CHECK_THROWS_AS(MeasureFunction::linear(1, -0.5), DomainError);
  CHECK_THROWS_AS(MeasureFunction::log_shift(-1, 0), DomainError);
  CHECK_THROWS_AS(MeasureFunction::power(1, 0), DomainError);
  CHECK_THROWS_AS(MeasureFunction::exp2(0), DomainError);
  CHECK_NOTHROW(MeasureFunction::linear(1, 0));
}

TEST_CASE("check_monotone_sample examples") {
  const std::vector<double> xs{1, 2, 3};
  CHECK(check_monotone_sample(MeasureFunction::identity(), xs));

  // Exp2(0.5) at 1, 2, 4, 8 is 1, 2, 8, 128.
  const std::vector<double> ys{1, 2, 4, 8};
  CHECK(check_monotone_sample(MeasureFunction::exp2(0.5), ys));

  const std::vector<double> two{1, 2};
  CHECK_FALSE(check_monotone_sample([](double) { return 5.0; }, two));

  const std::vector<double> bad{2, 1};
  CHECK_THROWS_AS(check_monotone_sample(MeasureFunction::identity(), bad), DomainError);
  const std::vector<double> one{1};
  CHECK_THROWS_AS(check_monotone_sample(MeasureFunction::identity(), one), DomainError);
  const std::vector<double> nonpositive{0, 1};
  CHECK_THROWS_AS(check_monotone_sample(MeasureFunction::identity(), nonpositive), DomainError);
}

TEST_CASE("parse_measure round-trips and rejects malformed text") {
  for (const char* text : {"identity", "linear:a=1,b=1", "log:a=1,b=0", "power:a=1,k=2", "exp2:a=0.5",
                           "linear:a=2.5,b=0.125"}) {
    CHECK(parse_measure(text).to_string() == text);
  }
  CHECK(parse_measure("linear:b=3,a=2") == MeasureFunction::linear(2, 3));
  CHECK_THROWS_AS(parse_measure("linear:a=1"), DomainError);
  CHECK_THROWS_AS(parse_measure("linear:a=1,b=1,c=2"), DomainError);
  CHECK_THROWS_AS(parse_measure("linear:a=x,b=1"), DomainError);
  CHECK_THROWS_AS(parse_measure("linear:a=0,b=1"), DomainError);
  CHECK_THROWS_AS(parse_measure("cubic:a=1"), DomainError);
  CHECK_THROWS_AS(parse_measure("identity:a=1"), DomainError);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> pos(1e-3, 100.0);
  for (int i = 0; i < 200; ++i) {
    const auto f = MeasureFunction::linear(pos(rng), pos(rng));
    CHECK(parse_measure(f.to_string()) == f);
  }
}

TEST_CASE("composition order of outer and inner bounds") {
  const auto g = MeasureFunction::linear(2, 0);
  const auto t = MeasureFunction::power(1, 2);
  const auto outer = BoundSpec::outer(g, t);
  const auto inner = BoundSpec::inner(g, t);
  CHECK(outer(3.0) == 18.0);
  CHECK(inner(3.0) == 36.0);
  for (double x = 0.5; x < 40.0; x += 0.75) {
    CHECK(outer(x) == doctest::Approx(2 * x * x));
    CHECK(inner(x) == doctest::Approx(4 * x * x));
    CHECK(inner(x) == doctest::Approx(2 * outer(x)));
  }
}

TEST_CASE("evaluation is deterministic") {
  const auto f = MeasureFunction::log_shift(1.7, 0.3);
  for (double x = 0.1; x < 50; x += 1.3) CHECK(bit_identical(f(x), f(x)));
}

TEST_CASE("check_bound on the trie machine") {
  const auto trie = build_trie_machine(LanguageOracle::builtin("contains-1"), 3).machine;
  const auto inputs = words_up_to("01", 3);
  REQUIRE(inputs.size() == 15);

  const auto pass = check_bound(trie, CostModel::count_all(), BoundSpec::plain(MeasureFunction::linear(1, 1)),
                                inputs, 100);
  CHECK(pass.verdict);
  CHECK(pass.worst_margin <= 0.0);
  // Empty word: evaluated at 1.
  CHECK(pass.rows[0].input.empty());
  CHECK(pass.rows[0].evaluated_at == 1.0);
  CHECK(pass.rows[0].bound == 2.0);

  const auto fail =
      check_bound(trie, CostModel::count_all(), BoundSpec::plain(MeasureFunction::identity()), inputs, 100);
  CHECK_FALSE(fail.verdict);
  CHECK(fail.worst_margin > 0.0);
  for (const auto& row : fail.rows) {
    if (!row.input.empty()) CHECK_FALSE(row.pass);
  }
}

TEST_CASE("check_bound on the scanner under a log transform") {
  const auto scanner = build_demo_machines().scanner;
  const std::vector<std::string> inputs{std::string(4, '0'), std::string(8, '0'), std::string(16, '0')};
  const auto report = check_bound(
      scanner, CostModel::count_all(),
      BoundSpec::outer(MeasureFunction::linear(1, 1), MeasureFunction::log_shift(1, 0)), inputs, 100);
  CHECK_FALSE(report.verdict);
  REQUIRE(report.rows.size() == 3);
  // Independent bound: ln(n+1)/ln 2 + 1.
  for (std::size_t i = 0; i < 3; ++i) {
    const auto n = inputs[i].size();
    CHECK(report.rows[i].counted_steps == n + 1);
    CHECK(report.rows[i].bound == doctest::Approx(std::log(static_cast<double>(n + 1)) / std::log(2.0) + 1));
  }
  CHECK(report.rows[1].bound == doctest::Approx(4.169925).epsilon(1e-6));
  CHECK_FALSE(report.rows[1].pass);
  CHECK_FALSE(report.rows[2].pass);
}

TEST_CASE("check_bound report invariants") {
  std::mt19937_64 rng(11);
  const auto g_small = MeasureFunction::linear(1, 0);
  const auto g_large = MeasureFunction::linear(3, 2);
  for (int trial = 0; trial < 60; ++trial) {
    const auto m = testing::random_machine(rng, 3);
    std::vector<std::string> inputs;
    for (int i = 0; i < 10; ++i) inputs.push_back(random_word("01", rng() % 7, rng));

    const auto plain = check_bound(m, CostModel::count_all(), BoundSpec::plain(g_small), inputs, 60);
    bool all = true;
    for (const auto& r : plain.rows) all = all && r.pass;
    CHECK(plain.verdict == all);
    CHECK(plain.verdict == (plain.worst_margin <= 0.0));

    // Identity transform collapses to plain.
    for (auto spec : {BoundSpec::outer(g_small, MeasureFunction::identity()),
                      BoundSpec::inner(g_small, MeasureFunction::identity())}) {
      const auto other = check_bound(m, CostModel::count_all(), spec, inputs, 60);
      CHECK(other.to_csv() == plain.to_csv());
      CHECK(bit_identical(other.worst_margin, plain.worst_margin));
    }

    // Larger g passes a superset.
    const auto larger = check_bound(m, CostModel::count_all(), BoundSpec::plain(g_large), inputs, 60);
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      if (plain.rows[i].pass) CHECK(larger.rows[i].pass);
    }
  }
}

TEST_CASE("fuel exhaustion fails the row with infinite margin") {
  Machine m("0", "0_", {"loop", "a", "r"}, 0, 1, 2);
  m.set_transition(0, '0', {0, '0', Move::Right});
  m.set_transition(0, '_', {0, '_', Move::Right});
  const std::vector<std::string> inputs{"0"};
  const auto report =
      check_bound(m, CostModel::count_all(), BoundSpec::plain(MeasureFunction::exp2(100)), inputs, 10);
  CHECK_FALSE(report.verdict);
  CHECK(report.rows[0].fuel_exhausted);
  CHECK(report.worst_margin == std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(check_bound(m, CostModel::count_all(), BoundSpec::plain(MeasureFunction::identity()),
                              std::vector<std::string>{}, 10),
                  PreconditionError);
}

TEST_CASE("slack admits integer bounds computed through log") {
  // log2(8) may land a hair under 3 on some libm; floor(bound + 1e-9) is 3.
  CHECK(admitted_steps(3.0 - 1e-12) == 3.0);
  CHECK(admitted_steps(2.9999) == 2.0);
}

TEST_CASE("bound CSV layout") {
  const auto trie = build_trie_machine(LanguageOracle::builtin("all"), 1).machine;
  const std::vector<std::string> inputs{"", "1"};
  const auto csv =
      check_bound(trie, CostModel::count_all(), BoundSpec::plain(MeasureFunction::linear(1, 1)), inputs, 10)
          .to_csv();
  CHECK(csv == "input,length,counted_steps,bound,pass\n,0,1,2,true\n1,1,2,2,true\n");
}
