// progmix: run one experiment and write its report.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "progmix/error.hpp"
#include "progmix/experiment.hpp"

namespace {

std::vector<std::int64_t> parse_primes(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw std::invalid_argument("bad prime '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("--primes is empty");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Progression mixing experiments on SL_d(F_p)"};
  app.require_subcommand(1, 1);

  std::string primes;
  bool big = false;
  int d = 2;
  std::int64_t k = 0;
  std::uint64_t seed = 1;
  std::string samples = "exact";
  double c0 = 4.0;
  std::string functions = "random-sign";
  std::string format = "csv";
  std::string out;
  int m = 2;
  std::int64_t n = 4;
  std::string set = "0,0;0,1;1,0";
  std::uint64_t trials = 20;
  int workers = 0;
  std::int64_t r = 2;
  std::int64_t t = 2;

  for (const auto& name : progmix::experiment_names()) {
    CLI::App* sub = app.add_subcommand(name, "run the " + name + " experiment");
    sub->add_option("--primes", primes, "comma-separated odd primes (default 3,5,7,11,13)");
    sub->add_flag("--big", big, "append 17,19,23,31 to the prime grid");
    sub->add_option("--d", d, "matrix size, 2 or 3")->check(CLI::IsMember({2, 3}));
    sub->add_option("--k", k, "conic parameter (conic, varieties) or grid radius (szemeredi)");
    sub->add_option("--seed", seed, "base seed");
    sub->add_option("--samples", samples, "'exact' or a Monte-Carlo sample count");
    sub->add_option("--c0", c0, "heavy-mass constant C0")->check(CLI::Range(1.0, 1e12));
    sub->add_option("--functions", functions, "random-sign, coset-borel or indicator:<density>");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", out, "output path (default stdout)");
    sub->add_option("--m", m, "pattern dimension")->check(CLI::Range(1, 8));
    sub->add_option("--n", n, "pattern modulus")->check(CLI::Range(1, 1 << 16));
    sub->add_option("--set", set, "pattern set, e.g. 0,0;0,1;1,0");
    sub->add_option("--trials", trials, "random instances per prime");
    sub->add_option("--workers", workers, "worker threads (default PROGMIX_WORKERS or all cores)");
    sub->add_option("--r", r, "elimination parameter r");
    sub->add_option("--t", t, "elimination parameter t");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  const std::string name = app.get_subcommands().front()->get_name();

  try {
    progmix::ExperimentConfig config;
    if (!primes.empty()) config.primes = parse_primes(primes);
    if (big) {
      std::cerr << "warning: --big adds primes 17,19,23,31; exact runs may take a long time\n";
      for (std::int64_t p : {17, 19, 23, 31}) config.primes.push_back(p);
    }
    config.d = d;
    const CLI::App* sub = app.get_subcommands().front();
    if (sub->count("--k") > 0) config.k = k;
    config.seed = seed;
    if (samples != "exact") {
      std::size_t used = 0;
      unsigned long long v = 0;
      try {
        v = std::stoull(samples, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != samples.size() || v == 0) {
        throw std::invalid_argument("--samples must be 'exact' or a positive integer");
      }
      config.samples = v;
    }
    config.c0 = c0;
    config.functions = progmix::FunctionSpec::parse(functions);
    config.m = m;
    config.n = n;
    config.set = set;
    config.trials = trials;
    config.r = r;
    config.t = t;
    if (workers > 0) setenv("PROGMIX_WORKERS", std::to_string(workers).c_str(), 1);

    std::ofstream file;
    if (!out.empty()) {
      file.open(out);
      if (!file) throw std::invalid_argument("cannot open output file '" + out + "'");
    }
    std::ostream& os = out.empty() ? std::cout : file;

    if (name == "elim-constants" && (format == "json" || sub->count("--format") == 0)) {
      os << progmix::elimination_constants_json(r, t) << '\n';
      return 0;
    }
    const progmix::ExperimentReport report = progmix::run_experiment(name, config);
    if (format == "json") {
      report.write_json(os);
    } else {
      report.write_csv(os);
    }
    return 0;
  } catch (const progmix::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n(set PROGMIX_BUDGET or pass --samples N)\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
