#pragma once

// Experiment runners behind the CLI and their CSV / JSON reports.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace progmix {

struct ReportRow {
  std::string experiment;
  std::int64_t p = 0;
  int d = 2;
  std::uint64_t group_order = 0;
  std::string statistic;
  double value = 0.0;
  std::optional<double> bound;
  std::optional<std::uint64_t> samples;  // nullopt prints "exact"
  std::uint64_t seed = 0;
};

class ExperimentReport {
 public:
  void add(ReportRow row) { rows_.push_back(std::move(row)); }
  const std::vector<ReportRow>& rows() const { return rows_; }

  void write_csv(std::ostream& os) const;
  void write_json(std::ostream& os) const;

 private:
  std::vector<ReportRow> rows_;
};

// %.17g
std::string format_number(double x);

enum class FunctionKind { kRandomSign, kCosetBorel, kIndicator };

struct FunctionSpec {
  FunctionKind kind = FunctionKind::kRandomSign;
  double density = 0.5;
  // "random-sign", "coset-borel", "indicator:<density>"; throws
  // std::invalid_argument otherwise.
  static FunctionSpec parse(const std::string& text);
};

struct ExperimentConfig {
  std::vector<std::int64_t> primes{3, 5, 7, 11, 13};
  int d = 2;
  std::optional<std::int64_t> k;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> samples;  // nullopt means exact
  double c0 = 4.0;
  FunctionSpec functions;
  int m = 2;
  std::int64_t n = 4;
  std::string set = "0,0;0,1;1,0";
  std::uint64_t trials = 20;
  std::int64_t r = 2;
  std::int64_t t = 2;
};

const std::vector<std::string>& experiment_names();

// Throws std::invalid_argument for an unknown name or inconsistent flags and
// BudgetExceeded when a computation would exceed the operation budget.
ExperimentReport run_experiment(const std::string& name, const ExperimentConfig& config);

// The elimination constants as a single JSON object.
std::string elimination_constants_json(std::int64_t r, std::int64_t t);

}  // namespace progmix
