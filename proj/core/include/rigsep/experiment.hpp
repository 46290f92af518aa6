#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rigsep/generators.hpp"
#include "rigsep/partition/balanced.hpp"

namespace rigsep {

struct ExperimentRecord {
  std::string generator;
  int size = 0;
  std::uint64_t seed = 0;
  std::string method;
  int n = 0;
  std::size_t m = 0;
  std::size_t separator_size = 0;
  double balance = 0.0;  // largest component measure / total measure
  double wall_seconds = 0.0;
  std::optional<double> lp_value;  // cspread_1 of the instance (lp+rounding only)
  std::map<std::string, double> params;
};

// Runs balanced_separator, re-validates the result and fills a record.
ExperimentRecord separate(const Instance& inst, SeparatorStrategy strategy, const BalancedOptions& opt,
                          BalancedSeparatorResult* result = nullptr);

struct LogLogFit {
  std::optional<double> exponent;  // empty when every x is equal
  double intercept = 0.0;
  double r_squared = 0.0;
};

// Least squares of log y against log x over positive pairs.
LogLogFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

struct ScalingPoint {
  int size = 0;
  double median_m = 0.0;
  double median_n = 0.0;
  double median_separator = 0.0;
  std::vector<ExperimentRecord> trials;
};

struct ScalingStudy {
  std::vector<ScalingPoint> points;
  LogLogFit fit_vs_m;
  LogLogFit fit_vs_n;
};

// Trials of one size run in parallel with seeds split per (size, trial).
ScalingStudy scaling_study(const std::string& kind, const std::vector<int>& sizes, int trials, std::uint64_t seed,
                           SeparatorStrategy strategy, const BalancedOptions& opt = {});

// One row per trial; the time column is included only on request so that
// output is reproducible.
std::string scaling_csv(const ScalingStudy& study, bool with_time = false);

double median(std::vector<double> xs);

}  // namespace rigsep
