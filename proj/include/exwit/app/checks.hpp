#pragma once

#include <functional>
#include <string>
#include <vector>

#include "exwit/analytics.hpp"

namespace exwit::app {

struct CheckResult {
  std::string group;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  std::string only;   // run one group; empty runs all
  std::string fault;  // deliberately break an expectation ("cos-exponent")
};

const std::vector<std::string>& check_groups();
const std::vector<std::string>& known_faults();
std::vector<CheckResult> run_checks(const VerifyOptions& options);

// Reference stage table: weights at eta = 0.1 and |G| magnitudes.
inline const std::vector<double> kTableMarkov{0.961, 0.951, 0.942, 0.932, 0.923, 0.914};
inline const std::vector<double> kTableF{0.961, 0.951, 0.942, 0.932, 0.923, 0.914};
inline const std::vector<double> kTableGAbs{9.7e-4, 9.3e-4, 1.3e-3, 3.7e-5, 9.4e-4, 8.3e-4};

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// Damping exponents read from Markov engine runs: slope of log|coefficient| against log cos(eta).
struct ExponentReport {
  int n = 0, m = 0;
  double hop12 = 0.0, chain_z = 0.0, chain_const = 0.0;  // fitted
  int hop12_expected = 0, chain_z_expected = 0, chain_const_expected = 0;
};
ExponentReport markov_exponents(int n, int m, int exponent_shift = 0);

// Max |raw coefficient| difference between the exact and order-2 engines.
double engine_coefficient_gap(double t, double eta = 0.1);

// Every normalized reference-structure term of the three-monomer photon state,
// engine versus coefficient pipeline.
struct TermComparison {
  std::string label;
  Complex engine;
  Complex pipeline;
};
std::vector<TermComparison> structural_terms(Environment env, const std::vector<double>& fields, double t = 1e-3);

}  // namespace exwit::app
