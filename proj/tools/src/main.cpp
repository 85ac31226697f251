// qprimes: run single computations or the verification suite.
//
// Exit status: 0 success, 1 verification failure, 2 usage or input error.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "qprimes/arith.hpp"
#include "qprimes/composite_stats.hpp"
#include "qprimes/diophantine.hpp"
#include "qprimes/lcm_psi.hpp"
#include "qprimes/prime_counts.hpp"
#include "qprimes/quad_congruence.hpp"
#include "qprimes/suite.hpp"
#include "qprimes/weighted_sums.hpp"
#include "table.hpp"

namespace {

using namespace qprimes;
using cli::Cell;
using cli::Table;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::optional<double> x;
  std::optional<double> n;
  double d = 1;
  double epsilon = kDefaultEpsilon;
  double alpha = kDefaultAlpha;
  std::optional<double> prime_bound;
  std::optional<std::string> format;
  std::optional<unsigned> threads;
  std::string out;
  std::string filter;
  bool timing = false;
  bool mass = false;
};

// Counts arrive as doubles so that 1e6 is accepted.
u64 to_count(double v, const char* flag) {
  if (!(v >= 0) || v != std::floor(v) || v >= 18446744073709551616.0) {
    throw UsageError(std::string(flag) + " must be a non-negative integer");
  }
  return static_cast<u64>(v);
}

u64 require(const std::optional<double>& v, const char* flag) {
  if (!v) throw UsageError(std::string(flag) + " is required");
  return to_count(*v, flag);
}

unsigned default_threads() {
  if (const char* env = std::getenv("QPRIMES_THREADS")) {
    char* end = nullptr;
    const unsigned long t = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && t > 0) return static_cast<unsigned>(t);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

cli::Format format_of(const Flags& f, cli::Format fallback) {
  if (!f.format) return fallback;
  return *f.format == "json" ? cli::Format::json : cli::Format::csv;
}

Table sum_table(const Flags& f, Exec exec) {
  if (!f.x) throw UsageError("--x is required");
  const double x = *f.x;
  const u64 d = to_count(f.d, "--d");
  const auto split = dyadic_split(x, d, f.epsilon, exec);
  const double lhs = f.alpha == kDefaultAlpha ? split.lhs : lhs_sum(x, d, f.alpha, exec);
  Table t{{"x", "d", "alpha", "epsilon", "lhs", "rhs", "small_part", "large_part", "large_low_omega",
           "large_high_omega", "small_cutoff", "omega_threshold"},
          {}};
  t.add({x, d, f.alpha, f.epsilon, lhs, split.rhs_total, split.small_part, split.large_part,
         split.large_low_omega, split.large_high_omega, split.small_cutoff,
         static_cast<u64>(split.omega_threshold)});
  return t;
}

Table roots_table(const Flags& f) {
  const u64 q = require(f.n, "--n");
  if (q == 0) throw UsageError("--n must be positive");
  const auto set = roots_mod(q, to_count(f.d, "--d"));
  Table t{{"q", "d", "root"}, {}};
  for (u64 r : set.roots) t.add({set.modulus, set.shift, r});
  return t;
}

Table primes_table(const Flags& f) {
  const auto list = quadratic_primes(require(f.n, "--n"), to_count(f.d, "--d"));
  Table t{{"n", "p"}, {}};
  for (std::size_t i = 0; i < list.primes.size(); ++i) t.add({list.members[i], list.primes[i]});
  return t;
}

void add_constant(Table& t, const ConstantEstimate& c) {
  t.add({c.name, c.prime_bound, c.raw, c.averaged, c.oscillation,
         c.reference ? Cell{*c.reference} : Cell{std::string()}});
}

Table constants_table(const Flags& f) {
  const u64 bound = f.prime_bound ? to_count(*f.prime_bound, "--prime-bound") : 10'000'000;
  Table t{{"name", "prime_bound", "raw", "averaged", "oscillation", "reference"}, {}};
  add_constant(t, hardy_littlewood_constant(to_count(f.d, "--d"), bound));
  add_constant(t, lcm_constant(bound));
  t.add({std::string("kappa_quadrature"), u64{0}, kappa_quadrature(), kappa_quadrature(), 0.0, kappa_gamma()});
  t.add({std::string("euler_gamma"), u64{0}, euler_gamma(), euler_gamma(), 0.0, std::string()});
  return t;
}

Table nagell_table(const Flags& f) {
  const u64 x_max = f.x ? to_count(*f.x, "--x") : 1'000'000;
  const unsigned n_max =
      f.n ? static_cast<unsigned>(std::min<u64>(to_count(*f.n, "--n"), 1000)) : kDefaultMaxExponent;
  Table t{{"x", "y", "n"}, {}};
  for (const auto& s : lebesgue_nagell_solve(to_count(f.d, "--d"), x_max, n_max)) {
    t.add({s.x, s.y, static_cast<u64>(s.n)});
  }
  return t;
}

Table psi_table(const Flags& f) {
  const u64 n_max = f.n ? to_count(*f.n, "--n") : 20'000;
  if (to_count(f.d, "--d") != 1) throw UsageError("psi supports --d 1 only");
  const auto trace = psi_residual_trend(n_max);
  Table t{{"n", "psi", "residual_over_n"}, {}};
  for (std::size_t i = 0; i < trace.n.size(); ++i) t.add({trace.n[i], trace.psi[i], trace.residual_over_n[i]});
  return t;
}

Table stats_table(const Flags& f) {
  const u64 x = f.x ? to_count(*f.x, "--x") : 1'000'000;
  if (x < 16) throw UsageError("--x must be at least 16");
  const FactorSieve sieve(x);
  if (f.mass) {
    const auto m = high_omega_mass(sieve, x, to_count(f.d, "--d"));
    Table t{{"x", "d", "loglog", "count", "rho_sum", "count_ceil", "rho_sum_ceil", "bound"}, {}};
    t.add({m.x, m.shift, m.loglog, m.count, m.rho_sum, m.count_ceil, m.rho_sum_ceil, m.bound});
    return t;
  }
  const auto h = omega_histogram(sieve, x);
  Table t{{"k", "count", "landau_ratio"}, {}};
  for (unsigned k = 0; k < h.counts.size(); ++k) {
    const Cell ratio = k == 0 ? Cell{std::string()} : Cell{landau_ratio(sieve, x, k)};
    t.add({static_cast<u64>(k), h.counts[k], ratio});
  }
  return t;
}

int run_verify(const Flags& f, Exec exec, std::ostream& out) {
  SuiteOptions opt;
  opt.exec = exec;
  opt.x = f.x;
  opt.d = to_count(f.d, "--d");
  opt.epsilon = f.epsilon;
  opt.filter = f.filter;
  opt.on_check = [](const CheckRecord& c) {
    std::cerr << to_string(c.status) << ' ' << c.id << " (" << static_cast<long long>(c.ms) << " ms)\n";
  };
  const auto report = run_verification(opt);
  if (format_of(f, cli::Format::json) == cli::Format::json) {
    out << to_json(report, f.timing).dump(2) << '\n';
  } else {
    Table t{{"id", "module", "status", "tol", "ms"}, {}};
    for (const auto& c : report.checks) {
      t.add({c.id, c.module, std::string(to_string(c.status)), c.tol ? Cell{*c.tol} : Cell{std::string()},
             f.timing ? Cell{c.ms} : Cell{std::string()}});
    }
    cli::write(out, t, cli::Format::csv);
  }
  return report.overall() == CheckStatus::pass ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Primes of the form n^2 + d: sums, tables and a verification suite", "qprimes"};
  app.require_subcommand(1);
  app.fallthrough();

  Flags f;
  app.add_option("--x", f.x, "Cutoff x");
  app.add_option("--n", f.n, "Index bound N, modulus q, or exponent cap");
  app.add_option("--d", f.d, "Shift d in n^2 + d")->capture_default_str();
  app.add_option("--epsilon", f.epsilon, "Dyadic split exponent")->capture_default_str();
  app.add_option("--alpha", f.alpha, "Weight exponent on log n")->capture_default_str();
  app.add_option("--prime-bound", f.prime_bound, "Prime bound for Euler products");
  app.add_option("--format", f.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--threads", f.threads, "Worker threads (default: QPRIMES_THREADS or all cores)")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", f.out, "Write output to FILE instead of stdout");

  auto* verify = app.add_subcommand("verify", "Run the verification suite and emit a report");
  verify->add_flag("--timing", f.timing, "Include per-check wall-clock times");
  verify->add_option("--filter", f.filter, "Only run checks whose id starts with this prefix");
  app.add_subcommand("sum", "Weighted sum and its Mobius expansion at --x");
  app.add_subcommand("roots", "Roots of r^2 + d = 0 mod --n");
  app.add_subcommand("primes", "Primes n^2 + d for 1 <= n <= --n");
  app.add_subcommand("constants", "Euler-product constants at --prime-bound");
  app.add_subcommand("nagell", "Solutions of x^2 + d = y^n with x <= --x");
  app.add_subcommand("psi", "log lcm(1^2 + 1, ..., n^2 + 1) samples up to --n");
  auto* stats = app.add_subcommand("stats", "Distribution of omega(n) for n <= --x");
  stats->add_flag("--mass", f.mass, "Report the high-omega root mass instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  const Exec exec{f.threads.value_or(default_threads())};

  std::ofstream file;
  if (!f.out.empty()) {
    file.open(f.out);
    if (!file) {
      std::cerr << "error: cannot open " << f.out << '\n';
      return kExitUsage;
    }
  }
  std::ostream& out = f.out.empty() ? std::cout : file;

  try {
    if (cmd == "verify") return run_verify(f, exec, out);
    Table t;
    if (cmd == "sum") t = sum_table(f, exec);
    else if (cmd == "roots") t = roots_table(f);
    else if (cmd == "primes") t = primes_table(f);
    else if (cmd == "constants") t = constants_table(f);
    else if (cmd == "nagell") t = nagell_table(f);
    else if (cmd == "psi") t = psi_table(f);
    else t = stats_table(f);
    cli::write(out, t, format_of(f, cli::Format::csv));
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
