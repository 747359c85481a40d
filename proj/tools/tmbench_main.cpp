// tmbench: command-line front end for the Turing-machine workbench.
//
// Exit status: 0 success, 2 usage/parse/input error, 3 a verification
// command found a counterexample. `run --exit-status` maps Accepted to 0
// and Rejected to 1 instead.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tmbench/convergence.hpp"
#include "tmbench/cost.hpp"
#include "tmbench/errors.hpp"
#include "tmbench/machine_format.hpp"
#include "tmbench/measures.hpp"
#include "tmbench/nondet.hpp"
#include "tmbench/profile.hpp"
#include "tmbench/run.hpp"
#include "tmbench/words.hpp"

namespace {

using namespace tmbench;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCounterexample = 3;

const char* const kMachineFormatHelp = R"(Machine file format (line-oriented, '#' starts a comment):
  states: <id> <id> ...
  start: <id>
  accept: <id>
  reject: <id>
  input_alphabet: <sym> <sym> ...       # single-character symbols; '_' reserved for blank
  tape_alphabet: <sym> ... _            # must include '_'
  trans: <state> <sym> -> <state> <sym> <L|R>
One trans line per (state, symbol) pair; duplicates are an error.
The symbol '#' is written "\#" and '\' is written "\\".)";

const char* const kCostHelp = R"(Cost models: "count-all", "free-blind", "free-states:q1,q2,...")";

const char* const kMeasureHelp =
    R"(Measures: "identity", "linear:a=<r>,b=<r>", "log:a=<r>,b=<r>", "power:a=<r>,k=<r>", "exp2:a=<r>"
  (a > 0, k > 0, b >= 0; log is a*log2(x+1)+b))";

const char* const kLanguageHelp = R"(Languages: contains-1, parity-even-ones, palindrome, all, empty, div3,
or @<file> with one word per line over {0,1}; "eps" denotes the empty word; '#' comments.)";

const char* const kWordHelp = R"(Words: "eps" or "" denotes the empty word.)";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write \"" + path + "\"");
  out << text;
}

Machine load_machine(const std::string& path) {
  try {
    return parse_machine(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

LanguageOracle load_language(const std::string& spec) {
  if (!spec.empty() && spec.front() == '@') return LanguageOracle::parse_word_list(read_file(spec.substr(1)));
  return LanguageOracle::builtin(spec);
}

std::string join(const std::string& a, const std::string& b) { return a + "\n\n" + b; }

struct RunArgs {
  std::string machine;
  std::string input;
  std::string cost = "count-all";
  std::uint64_t fuel = 1'000'000;
  bool trace = false;
  bool exit_status = false;
};

int cmd_run(const RunArgs& a) {
  const Machine m = load_machine(a.machine);
  const auto r = run(m, parse_word_argument(a.input), parse_cost_model(a.cost), a.fuel, a.trace);
  std::cout << "verdict: " << to_string(r.verdict) << '\n'
            << "total_steps: " << r.total_steps << '\n'
            << "counted_steps: " << r.counted_steps << '\n';
  if (r.trace) {
    std::cout << "step,state,head,read,write,move,target,counted\n";
    std::uint64_t i = 0;
    for (const auto& e : *r.trace) {
      std::cout << ++i << ',' << m.state_name(e.state) << ',' << e.head << ',' << e.read << ',' << e.write << ','
                << move_letter(e.move) << ',' << m.state_name(e.target) << ',' << (e.counted ? 1 : 0) << '\n';
    }
  }
  if (!a.exit_status) return kExitOk;
  switch (r.verdict) {
    case Verdict::Accepted:
      return 0;
    case Verdict::Rejected:
      return 1;
    case Verdict::FuelExhausted:
      return kExitCounterexample;
  }
  return kExitOk;
}

struct TrieArgs {
  std::string lang;
  unsigned n = 0;
  unsigned max_depth = kDefaultMaxTrieDepth;
  std::string out;
};

int cmd_gen_trie(const TrieArgs& a) {
  const auto report = build_trie_machine(load_language(a.lang), a.n, a.max_depth);
  write_file(a.out, emit_machine(report.machine));
  if (a.out != "-") {
    std::cout << "n: " << report.n << '\n'
              << "state_count: " << report.state_count << '\n'
              << "oracle_queries: " << report.oracle_queries << '\n';
  }
  return kExitOk;
}

int cmd_verify_trie(const TrieArgs& a) {
  const auto language = load_language(a.lang);
  const auto report = build_trie_machine(language, a.n, a.max_depth);
  const auto restriction = verify_restriction(report, language);
  const auto steps = verify_step_count(report);
  std::cout << "n: " << report.n << '\n'
            << "state_count: " << report.state_count << '\n'
            << "oracle_queries: " << report.oracle_queries << '\n'
            << "short_words_checked: " << restriction.short_words_checked << '\n'
            << "long_words_checked: " << restriction.long_words_checked << '\n'
            << "restriction: " << (restriction.ok ? "ok" : "FAILED") << '\n'
            << "step_count: " << (steps.ok ? "ok" : "FAILED") << '\n';
  for (const auto& w : restriction.counterexamples) std::cout << "counterexample: " << display_word(w) << '\n';
  for (const auto& v : steps.violations) std::cout << "step violation: " << v << '\n';
  return restriction.ok && steps.ok ? kExitOk : kExitCounterexample;
}

struct ConvergeArgs {
  std::string lang;
  unsigned k = 0;
  std::optional<unsigned> budget;
};

int cmd_converge(const ConvergeArgs& a) {
  const auto report = find_convergence_index(load_language(a.lang), a.k, a.budget.value_or(a.k));
  std::cout << "k: " << report.k << '\n'
            << "n_k: " << (report.n_k ? std::to_string(*report.n_k) : std::string("none")) << '\n'
            << "verified_words: " << report.verified_words << '\n';
  return report.n_k ? kExitOk : kExitCounterexample;
}

struct ProfileArgs {
  std::string machine;
  std::string cost = "count-all";
  std::size_t min_len = 1;
  std::size_t max_len = 8;
  std::string family = "zeros";
  std::size_t count = 16;
  std::uint64_t seed = 1;
  std::uint64_t fuel = 1'000'000;
};

int cmd_profile(const ProfileArgs& a) {
  const Machine m = load_machine(a.machine);
  const auto cost = parse_cost_model(a.cost);
  ProfileOptions opts;
  opts.min_length = a.min_len;
  opts.max_length = a.max_len;
  opts.family = parse_input_family(a.family);
  opts.random_count = a.count;
  opts.seed = a.seed;
  opts.fuel = a.fuel;
  std::cout << profile_csv(profile(m, cost, opts), opts, cost);
  return kExitOk;
}

struct BoundArgs {
  std::string machine;
  std::string cost = "count-all";
  std::string g;
  std::string t;
  std::string mode;
  std::vector<std::string> inputs;
  std::optional<std::size_t> max_len;
  std::uint64_t fuel = 1'000'000;
};

int cmd_check_bound(const BoundArgs& a) {
  const Machine m = load_machine(a.machine);
  const auto g = parse_measure(a.g);
  std::string mode = a.mode.empty() ? (a.t.empty() ? "plain" : "outer") : a.mode;
  std::optional<BoundSpec> spec;
  if (mode == "plain") {
    if (!a.t.empty()) throw DomainError("--t requires --mode outer or inner");
    spec = BoundSpec::plain(g);
  } else if (mode == "outer" || mode == "inner") {
    if (a.t.empty()) throw DomainError("--mode " + mode + " requires --t");
    const auto t = parse_measure(a.t);
    spec = mode == "outer" ? BoundSpec::outer(g, t) : BoundSpec::inner(g, t);
  } else {
    throw DomainError("unknown mode \"" + mode + "\" (expected plain, outer or inner)");
  }

  std::vector<std::string> inputs;
  for (const auto& w : a.inputs) inputs.push_back(parse_word_argument(w));
  if (a.max_len) {
    auto all = words_up_to(m.input_alphabet(), *a.max_len);
    inputs.insert(inputs.end(), all.begin(), all.end());
  }
  if (inputs.empty()) throw DomainError("check-bound needs --input or --max-len");

  const auto report = check_bound(m, parse_cost_model(a.cost), *spec, inputs, a.fuel);
  std::cout << report.to_csv();
  return report.verdict ? kExitOk : kExitCounterexample;
}

struct SearchArgs {
  std::string checker;
  std::string delivery;
  std::string g;
  std::string t;
  std::string input;
  std::string cost = "count-all";
  std::string cert_alphabet = "01";
  std::uint64_t budget = kDefaultCertificateBudget;
  std::uint64_t fuel = kDefaultCheckerFuel;
};

int cmd_nsearch(const SearchArgs& a) {
  const CheckingRelation rel(load_machine(a.checker), parse_delivery(a.delivery), a.cert_alphabet);
  const auto g = parse_measure(a.g);
  const auto x = parse_word_argument(a.input);
  const auto cost = parse_cost_model(a.cost);
  const SearchLimits limits{a.fuel, a.budget};
  const auto report = a.t.empty() ? decide_nc(rel, g, x, cost, limits)
                                  : decide_nt(rel, g, parse_measure(a.t), x, cost, limits);
  std::cout << "accepted: " << (report.accepted ? "true" : "false") << '\n'
            << "witness: " << (report.witness ? display_word(*report.witness) : std::string("none")) << '\n'
            << "certificates_tried: " << report.certificates_tried << '\n'
            << "max_certificate_length: " << report.max_certificate_length << '\n'
            << "max_checker_counted_steps: " << report.max_checker_counted_steps << '\n';
  if (report.fuel_exhausted_runs) std::cout << "fuel_exhausted_runs: " << report.fuel_exhausted_runs << '\n';
  return kExitOk;
}

struct DemoArgs {
  std::size_t max_n = 64;
  std::string cost = "count-all";
  std::string emit_scanner;
  std::string emit_checker;
};

int cmd_demo(const DemoArgs& a) {
  if (!a.emit_scanner.empty() || !a.emit_checker.empty()) {
    const auto demo = build_demo_machines();
    if (!a.emit_scanner.empty()) write_file(a.emit_scanner, emit_machine(demo.scanner));
    if (!a.emit_checker.empty()) write_file(a.emit_checker, emit_machine(demo.checker.checker()));
  }
  std::cout << demo_csv(demo_nlogtime(a.max_n, parse_cost_model(a.cost)));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Turing-machine workbench: simulation under cost models, trie machines, certificate search"};
  app.require_subcommand(1);
  app.footer(join(kMachineFormatHelp, join(kCostHelp, join(kMeasureHelp, join(kLanguageHelp, kWordHelp)))));

  std::function<int()> action;

  RunArgs run_args;
  auto* run_cmd = app.add_subcommand("run", "Simulate a machine on one input");
  run_cmd->add_option("--machine", run_args.machine, "Machine file")->required();
  run_cmd->add_option("--input", run_args.input, "Input word")->required();
  run_cmd->add_option("--cost", run_args.cost, "Cost model")->capture_default_str();
  run_cmd->add_option("--fuel", run_args.fuel, "Maximum total steps")->capture_default_str()->check(
      CLI::PositiveNumber);
  run_cmd->add_flag("--trace", run_args.trace, "Print every applied transition");
  run_cmd->add_flag("--exit-status", run_args.exit_status, "Exit 0 on Accepted, 1 on Rejected");
  run_cmd->footer(join(kMachineFormatHelp, join(kCostHelp, kWordHelp)));
  run_cmd->callback([&] { action = [&] { return cmd_run(run_args); }; });

  TrieArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen-trie", "Emit the lookup-trie machine for a language and depth");
  gen_cmd->add_option("--lang", gen_args.lang, "Language")->required();
  gen_cmd->add_option("--n", gen_args.n, "Trie depth")->required();
  gen_cmd->add_option("--out", gen_args.out, "Output machine file ('-' for stdout)")->required();
  gen_cmd->add_option("--max-depth", gen_args.max_depth, "Refuse depths above this")->capture_default_str();
  gen_cmd->footer(join(kLanguageHelp, kMachineFormatHelp));
  gen_cmd->callback([&] { action = [&] { return cmd_gen_trie(gen_args); }; });

  TrieArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify-trie", "Check a trie machine's language and step counts");
  verify_cmd->add_option("--lang", verify_args.lang, "Language")->required();
  verify_cmd->add_option("--n", verify_args.n, "Trie depth")->required();
  verify_cmd->add_option("--max-depth", verify_args.max_depth, "Refuse depths above this")->capture_default_str();
  verify_cmd->footer(kLanguageHelp);
  verify_cmd->callback([&] { action = [&] { return cmd_verify_trie(verify_args); }; });

  ConvergeArgs conv_args;
  auto* conv_cmd = app.add_subcommand("converge", "Find the convergence index of the trie sequence");
  conv_cmd->add_option("--lang", conv_args.lang, "Language")->required();
  conv_cmd->add_option("--k", conv_args.k, "Inspected length bound (<= 12)")->required();
  conv_cmd->add_option("--budget", conv_args.budget, "Largest sequence index to try (default k)");
  conv_cmd->footer(kLanguageHelp);
  conv_cmd->callback([&] { action = [&] { return cmd_converge(conv_args); }; });

  ProfileArgs prof_args;
  auto* prof_cmd = app.add_subcommand("profile", "Worst-case counted steps per input length (CSV)");
  prof_cmd->add_option("--machine", prof_args.machine, "Machine file")->required();
  prof_cmd->add_option("--cost", prof_args.cost, "Cost model")->capture_default_str();
  prof_cmd->add_option("--min-len", prof_args.min_len, "Smallest length")->capture_default_str();
  prof_cmd->add_option("--max-len", prof_args.max_len, "Largest length")->capture_default_str();
  prof_cmd->add_option("--family", prof_args.family, "all | zeros | ones | random")->capture_default_str();
  prof_cmd->add_option("--count", prof_args.count, "Inputs per length for random")->capture_default_str();
  prof_cmd->add_option("--seed", prof_args.seed, "Seed for random")->capture_default_str();
  prof_cmd->add_option("--fuel", prof_args.fuel, "Maximum total steps per run")->capture_default_str()->check(
      CLI::PositiveNumber);
  prof_cmd->footer(join(kMachineFormatHelp, kCostHelp));
  prof_cmd->callback([&] { action = [&] { return cmd_profile(prof_args); }; });

  BoundArgs bound_args;
  auto* bound_cmd = app.add_subcommand("check-bound", "Check counted steps against a bound (CSV)");
  bound_cmd->add_option("--machine", bound_args.machine, "Machine file")->required();
  bound_cmd->add_option("--cost", bound_args.cost, "Cost model")->capture_default_str();
  bound_cmd->add_option("--g", bound_args.g, "Bound measure g")->required();
  bound_cmd->add_option("--t", bound_args.t, "Transform measure T");
  bound_cmd->add_option("--mode", bound_args.mode, "plain: g(x), outer: g(T(x)), inner: T(g(x))");
  bound_cmd->add_option("--input", bound_args.inputs, "Input word (repeatable)");
  bound_cmd->add_option("--max-len", bound_args.max_len, "Also check every word up to this length");
  bound_cmd->add_option("--fuel", bound_args.fuel, "Maximum total steps per run")->capture_default_str()->check(
      CLI::PositiveNumber);
  bound_cmd->footer(join(kMeasureHelp, join(kCostHelp, kWordHelp)));
  bound_cmd->callback([&] { action = [&] { return cmd_check_bound(bound_args); }; });

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand("nsearch", "Certificate search with a checking relation");
  search_cmd->add_option("--checker", search_args.checker, "Checker machine file")->required();
  search_cmd->add_option("--delivery", search_args.delivery, "inline | positioned")->required();
  search_cmd->add_option("--g", search_args.g, "Certificate length bound g")->required();
  search_cmd->add_option("--t", search_args.t, "Transform T (lengths filtered by T(|y|) <= g(T(|x|)))");
  search_cmd->add_option("--input", search_args.input, "Input word")->required();
  search_cmd->add_option("--cost", search_args.cost, "Cost model")->capture_default_str();
  search_cmd->add_option("--cert-alphabet", search_args.cert_alphabet, "Certificate symbols")->capture_default_str();
  search_cmd->add_option("--budget", search_args.budget, "Maximum certificates")->capture_default_str();
  search_cmd->add_option("--fuel", search_args.fuel, "Maximum total steps per checker run")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  search_cmd->footer(join(kMeasureHelp, join(kCostHelp, join(kWordHelp, kMachineFormatHelp))));
  search_cmd->callback([&] { action = [&] { return cmd_nsearch(search_args); }; });

  DemoArgs demo_args;
  auto* demo_cmd = app.add_subcommand("demo-nlogtime", "Scanner vs positioned checker for contains-1 (CSV)");
  demo_cmd->add_option("--max-n", demo_args.max_n, "Largest input length")->capture_default_str()->check(
      CLI::PositiveNumber);
  demo_cmd->add_option("--cost", demo_args.cost, "Cost model")->capture_default_str();
  demo_cmd->add_option("--emit-scanner", demo_args.emit_scanner, "Write the scanner machine file");
  demo_cmd->add_option("--emit-checker", demo_args.emit_checker, "Write the checker machine file");
  demo_cmd->footer(kCostHelp);
  demo_cmd->callback([&] { action = [&] { return cmd_demo(demo_args); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return action();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
