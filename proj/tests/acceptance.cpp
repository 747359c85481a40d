// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "tmbench/convergence.hpp"
#include "tmbench/cost.hpp"
#include "tmbench/machine_format.hpp"
#include "tmbench/measures.hpp"
#include "tmbench/nondet.hpp"
#include "tmbench/profile.hpp"
#include "tmbench/run.hpp"
#include "tmbench/words.hpp"

using namespace tmbench;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::uint64_t pow2(unsigned e) { return std::uint64_t{1} << e; }

std::vector<LanguageOracle> builtin_oracles() {
  std::vector<LanguageOracle> out;
  for (const auto& name : LanguageOracle::builtin_names()) out.push_back(LanguageOracle::builtin(name));
  return out;
}

std::string capture(const std::string& args) {
  const std::string cmd = std::string(TMBENCH_CLI) + " " + args + " 2>&1";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  out += "\nstatus=" + std::to_string(pclose(pipe));
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. L_n = L restricted to lengths <= n, zero counterexamples, < 10 s.
Outcome restriction_exactness() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& lang : builtin_oracles()) {
    for (unsigned n = 0; n <= 8; ++n) {
      const auto r = verify_restriction(build_trie_machine(lang, n), lang);
      if (!r.ok) o.fail(lang.name() + " n=" + std::to_string(n) + ": " + std::to_string(r.counterexamples.size()) +
                        " counterexamples");
      if (r.short_words_checked != pow2(n + 1) - 1 || r.long_words_checked != pow2(n + 1)) {
        o.fail(lang.name() + " n=" + std::to_string(n) + ": wrong coverage");
      }
    }
  }
  const double t = seconds_since(t0);
  if (t >= 10.0) o.fail("took " + std::to_string(t) + " s");
  if (o.pass) o.detail = "6 oracles x n=0..8, " + std::to_string(t) + " s";
  return o;
}

// 2. |w|+1 steps for |w| <= n, <= n+2 for longer words.
Outcome step_count_theorem() {
  Outcome o;
  for (const auto& lang : builtin_oracles()) {
    for (unsigned n = 0; n <= 8; ++n) {
      const auto trie = build_trie_machine(lang, n);
      const Simulator sim(trie.machine);
      for (const auto& w : words_up_to("01", n)) {
        const auto steps = sim.run(w, n + 3).total_steps;
        if (steps != w.size() + 1) o.fail(lang.name() + " n=" + std::to_string(n) + " w=" + display_word(w));
      }
      for (const auto& w : longer_word_sample(n)) {
        if (sim.run(w, n + 3).total_steps > n + 2) o.fail(lang.name() + " n=" + std::to_string(n) + " long w=" + w);
      }
      if (!verify_step_count(trie).ok) o.fail(lang.name() + " n=" + std::to_string(n) + ": verify_step_count");
    }
  }
  if (o.pass) o.detail = "exact |w|+1 on all short words, <= n+2 on all longer words";
  return o;
}

// 3. state_count = 2^(n+1)+1 and oracle_queries = 2^(n+1)-1 for n <= 12.
Outcome state_query_accounting() {
  Outcome o;
  for (const auto& lang : builtin_oracles()) {
    for (unsigned n = 0; n <= 12; ++n) {
      const auto r = build_trie_machine(lang, n);
      if (r.state_count != pow2(n + 1) + 1 || r.machine.state_count() != r.state_count) {
        o.fail(lang.name() + " n=" + std::to_string(n) + " state_count=" + std::to_string(r.state_count));
      }
      if (r.oracle_queries != pow2(n + 1) - 1) {
        o.fail(lang.name() + " n=" + std::to_string(n) + " oracle_queries=" + std::to_string(r.oracle_queries));
      }
    }
  }
  if (o.pass) o.detail = "n=0..12, all oracles";
  return o;
}

// 4. n_k <= k with exhaustive agreement; n_k = 0 for the empty language.
Outcome convergence() {
  Outcome o;
  for (const auto& lang : builtin_oracles()) {
    for (unsigned k = 0; k <= 8; ++k) {
      const auto r = find_convergence_index(lang, k, k);
      const std::string where = lang.name() + " k=" + std::to_string(k);
      if (!r.n_k) {
        o.fail(where + ": no index");
        continue;
      }
      if (*r.n_k > k) o.fail(where + ": n_k=" + std::to_string(*r.n_k));
      if (r.verified_words != pow2(k + 1) - 1) o.fail(where + ": verified_words");
      if (lang.name() == "empty" && *r.n_k != 0) o.fail(where + ": empty language n_k != 0");
      // Re-check agreement of every member from n_k to k independently.
      for (unsigned n = *r.n_k; n <= k; ++n) {
        const auto trie = build_trie_machine(lang, n);
        const Simulator sim(trie.machine);
        for (const auto& w : words_up_to("01", k)) {
          if ((sim.run(w, n + 3).verdict == Verdict::Accepted) != lang.contains(w)) {
            o.fail(where + ": member " + std::to_string(n) + " disagrees on " + display_word(w));
          }
        }
      }
    }
  }
  if (o.pass) o.detail = "6 oracles x k=0..8";
  return o;
}

// 5. Scanner n+1, checker <= 2, witness <= floor(log2 n)+1, < 30 s.
Outcome nlogtime_demo() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto rows = demo_nlogtime(64);
  if (rows.size() != 64) o.fail("expected 64 rows");
  for (const auto& r : rows) {
    const std::string where = "n=" + std::to_string(r.n);
    if (r.scanner_counted != r.n + 1) o.fail(where + ": scanner " + std::to_string(r.scanner_counted));
    if (r.checker_max_counted > 2) o.fail(where + ": checker " + std::to_string(r.checker_max_counted));
    const auto limit = static_cast<std::size_t>(std::floor(std::log2(static_cast<double>(r.n)))) + 1;
    if (r.witness_len > limit) o.fail(where + ": witness length " + std::to_string(r.witness_len));
  }

  const auto demo = build_demo_machines();
  ProfileOptions zeros;
  zeros.min_length = 1;
  zeros.max_length = 64;
  zeros.family = InputFamily::Zeros;
  for (const auto& row : profile(demo.scanner, CostModel::count_all(), zeros)) {
    if (row.max_counted_steps != row.length + 1) o.fail("zeros profile at " + std::to_string(row.length));
  }
  ProfileOptions all;
  all.min_length = 1;
  all.max_length = 12;
  all.family = InputFamily::All;
  for (const auto& row : profile(demo.scanner, CostModel::count_all(), all)) {
    if (row.max_counted_steps != row.length + 1) o.fail("exhaustive profile at " + std::to_string(row.length));
  }

  // Every x containing a '1' gets a short witness (exhaustive up to 12).
  const auto g = demo_certificate_bound();
  for (const auto& x : words_up_to("01", 12)) {
    if (x.find('1') == std::string::npos) continue;
    const auto r = decide_nc(demo.checker, g, x, CostModel::count_all());
    const auto limit = static_cast<std::size_t>(std::floor(std::log2(static_cast<double>(x.size())))) + 1;
    if (!r.witness || r.witness->size() > limit || r.max_checker_counted_steps > 2) o.fail("witness for " + x);
  }

  const double t = seconds_since(t0);
  if (t >= 30.0) o.fail("took " + std::to_string(t) + " s");
  if (o.pass) o.detail = "n=1..64, exhaustive worst case to n=12, " + std::to_string(t) + " s";
  return o;
}

// 6. decide_nc agrees with contains-1 on all 2047 words of length <= 10.
Outcome certificate_soundness() {
  Outcome o;
  const auto demo = build_demo_machines();
  const auto g = demo_certificate_bound();
  std::size_t checked = 0;
  for (const auto& x : words_up_to("01", 10)) {
    ++checked;
    const bool direct = x.find('1') != std::string::npos;
    if (decide_nc(demo.checker, g, x, CostModel::count_all()).accepted != direct) o.fail("disagrees on " + display_word(x));
  }
  if (checked != 2047) o.fail("checked " + std::to_string(checked) + " words");
  if (o.pass) o.detail = "2047 words, 0 disagreements";
  return o;
}

// 7. Identity transform reproduces plain mode; 18 and 36 at x = 3.
Outcome transform_coherence() {
  Outcome o;
  const std::vector<Machine> machines{build_demo_machines().scanner,
                                      build_trie_machine(LanguageOracle::builtin("parity-even-ones"), 4).machine,
                                      testing::there_and_back_machine()};
  std::mt19937_64 rng(7);
  std::vector<std::string> inputs;
  for (int i = 0; i < 20; ++i) inputs.push_back(random_word("01", i % 9, rng));
  const std::vector<MeasureFunction> gs{MeasureFunction::linear(1, 1), MeasureFunction::log_shift(2, 1),
                                        MeasureFunction::power(1.5, 1.2)};
  for (const auto& m : machines) {
    for (const auto& g : gs) {
      const auto plain = check_bound(m, CostModel::count_all(), BoundSpec::plain(g), inputs, 1000);
      for (const auto& spec : {BoundSpec::outer(g, MeasureFunction::identity()),
                               BoundSpec::inner(g, MeasureFunction::identity())}) {
        const auto other = check_bound(m, CostModel::count_all(), spec, inputs, 1000);
        if (other.rows.size() != plain.rows.size() || other.verdict != plain.verdict ||
            std::memcmp(&other.worst_margin, &plain.worst_margin, sizeof(double)) != 0) {
          o.fail("report mismatch");
          continue;
        }
        for (std::size_t i = 0; i < plain.rows.size(); ++i) {
          const auto& a = plain.rows[i];
          const auto& b = other.rows[i];
          if (std::memcmp(&a.bound, &b.bound, sizeof(double)) != 0 || a.counted_steps != b.counted_steps ||
              a.pass != b.pass || a.input != b.input) {
            o.fail("row mismatch on " + display_word(a.input));
          }
        }
      }
    }
  }
  const auto g = MeasureFunction::linear(2, 0);
  const auto t = MeasureFunction::power(1, 2);
  const double outer = BoundSpec::outer(g, t)(3.0);
  const double inner = BoundSpec::inner(g, t)(3.0);
  if (outer != 18.0) o.fail("outer(3) = " + format_double(outer));
  if (inner != 36.0) o.fail("inner(3) = " + format_double(inner));
  if (o.pass) o.detail = "3 machines x 20 inputs x 3 bounds; outer(3)=18, inner(3)=36";
  return o;
}

// 8. CountAll counts everything; FreeStates({s}) + s-occurrences = total.
Outcome cost_model_laws() {
  Outcome o;
  std::size_t battery = 0;
  auto check_count_all = [&](const Machine& m, const std::string& w) {
    const auto r = run(m, w, CostModel::count_all(), 500);
    ++battery;
    if (r.counted_steps != r.total_steps) o.fail("count-all mismatch");
  };
  const auto demo = build_demo_machines();
  for (const auto& w : words_up_to("01", 8)) {
    check_count_all(demo.scanner, w);
    check_count_all(demo.checker.checker(), w);
    check_count_all(testing::there_and_back_machine(), w);
    check_count_all(testing::skip_then_read_machine(), w);
  }
  for (const auto& lang : builtin_oracles()) {
    for (unsigned n = 0; n <= 6; ++n) {
      const auto trie = build_trie_machine(lang, n).machine;
      for (const auto& w : words_up_to("01", n + 1)) check_count_all(trie, w);
    }
  }

  std::mt19937_64 rng(0xC057);
  for (int i = 0; i < 100; ++i) {
    const auto m = testing::random_machine(rng, 2 + static_cast<unsigned>(rng() % 5));
    const auto w = random_word("01", rng() % 10, rng);
    check_count_all(m, w);
    const auto s = static_cast<StateId>(rng() % (m.state_count() - 2));
    const auto r = run(m, w, CostModel::free_states({m.state_name(s)}), 500, true);
    std::uint64_t from_s = 0;
    for (const auto& e : *r.trace) from_s += e.state == s;
    if (r.counted_steps + from_s != r.total_steps) o.fail("free-states law on random run " + std::to_string(i));
  }
  if (o.pass) o.detail = std::to_string(battery) + " count-all runs, 100 seeded free-states runs";
  return o;
}

// 9. 1000 random parameter draws, strictly monotone on 64 points.
Outcome cmf_validation() {
  Outcome o;
  std::mt19937_64 rng(0xC3F);
  std::uniform_real_distribution<double> pos(0.01, 10.0);
  std::uniform_real_distribution<double> nonneg(0.0, 10.0);
  std::uniform_real_distribution<double> expo(0.05, 4.0);
  std::vector<double> xs;
  for (int i = 0; i < 64; ++i) xs.push_back(0.25 + 0.75 * i);
  int failures = 0;
  for (int i = 0; i < 1000; ++i) {
    MeasureFunction f = MeasureFunction::identity();
    switch (rng() % 5) {
      case 0:
        f = MeasureFunction::identity();
        break;
      case 1:
        f = MeasureFunction::linear(pos(rng), nonneg(rng));
        break;
      case 2:
        f = MeasureFunction::log_shift(pos(rng), nonneg(rng));
        break;
      case 3:
        f = MeasureFunction::power(pos(rng), expo(rng));
        break;
      default:
        f = MeasureFunction::exp2(pos(rng));
        break;
    }
    bool positive = true;
    for (double x : xs) positive = positive && f(x) > 0.0;
    if (!positive || !check_monotone_sample(f, xs)) {
      ++failures;
      o.fail("draw " + std::to_string(i) + ": " + f.to_string());
    }
  }
  if (o.pass) o.detail = "1000 draws, 0 failures";
  return o;
}

// 10. Round-trip of every criterion-1 machine; byte-identical CLI CSV.
Outcome round_trip_and_determinism() {
  Outcome o;
  std::size_t machines = 0;
  for (const auto& lang : builtin_oracles()) {
    for (unsigned n = 0; n <= 8; ++n) {
      const auto trie = build_trie_machine(lang, n).machine;
      const auto text = emit_machine(trie);
      const auto back = parse_machine(text);
      ++machines;
      if (emit_machine(back) != text) o.fail(lang.name() + " n=" + std::to_string(n) + ": text differs");
      const Simulator a(trie);
      const Simulator b(back);
      for (const auto& w : words_up_to("01", 8)) {
        if (a.run(w, 20, true) != b.run(w, 20, true)) {
          o.fail(lang.name() + " n=" + std::to_string(n) + ": run differs on " + display_word(w));
        }
      }
    }
  }

  const auto demo = build_demo_machines();
  {
    std::ofstream("acceptance_scanner.tm") << emit_machine(demo.scanner);
    std::ofstream("acceptance_checker.tm") << emit_machine(demo.checker.checker());
  }
  const std::vector<std::string> invocations{
      "demo-nlogtime --max-n 64",
      "profile --machine acceptance_scanner.tm --family random --count 32 --seed 12345 --max-len 16",
      "profile --machine acceptance_scanner.tm --family all --max-len 12",
      "check-bound --machine acceptance_scanner.tm --g linear:a=1,b=1 --t log:a=1,b=0 --max-len 6",
      "nsearch --checker acceptance_checker.tm --delivery positioned --g log:a=1,b=1 --input 00000001",
  };
  for (const auto& args : invocations) {
    const auto first = capture(args);
    if (first.find("error") != std::string::npos) o.fail("CLI error: " + args);
    if (capture(args) != first) o.fail("output differs across runs: " + args);
  }
  if (o.pass) o.detail = std::to_string(machines) + " machines round-tripped; " +
                         std::to_string(invocations.size()) + " CLI invocations byte-identical";
  return o;
}

}  // namespace


int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 restriction exactness", restriction_exactness},
      {"2 step-count theorem", step_count_theorem},
      {"3 state/query accounting", state_query_accounting},
      {"4 convergence", convergence},
      {"5 contains-1 scanner vs positioned checker", nlogtime_demo},
      {"6 certificate-search soundness", certificate_soundness},
      {"7 transform coherence", transform_coherence},
      {"8 cost-model laws", cost_model_laws},
      {"9 CMF validation", cmf_validation},
      {"10 round-trip and determinism", round_trip_and_determinism},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << name << "  (" << o.detail << ")\n";
    failed += o.pass ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
