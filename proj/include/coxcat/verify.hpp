#pragma once

#include <functional>
#include <string>
#include <vector>

namespace coxcat::verify {

/// Empty means the check passed.
using Failures = std::vector<std::string>;

struct Job {
  std::string suite;
  std::string name;
  std::function<Failures()> run;
};

/// core, signed, models, interpret, typemaps, series, encode, examples.
const std::vector<std::string>& suite_names();

/// Instance checks of one suite ("all" for every suite), n up to max_n.
/// Enumerations over signed partitions stop at n = 8 regardless.
std::vector<Job> suite_jobs(const std::string& suite, int max_n);

/// Runs jobs on `workers` threads. Results line up with `jobs`; exceptions
/// thrown by a job become failures.
std::vector<Failures> run_jobs(const std::vector<Job>& jobs, int workers);

struct SuiteReport {
  std::string suite;
  int jobs = 0;
  int failed = 0;
  std::vector<std::string> messages;  // "<job>: <failure>"
};

/// One report per suite in first-appearance order.
std::vector<SuiteReport> summarize(const std::vector<Job>& jobs, const std::vector<Failures>& results);

// Single-instance checks; each covers one n.
Failures catalan_counts(int n);
Failures pattern_agreement(int n);
Failures signed_count(int n);
Failures triple_roundtrip(int n);
/// Filtered enumeration against the closed-form size.
Failures family_count(const std::string& family, int n);
Failures nc_b_constructive(int n, bool compare_with_filter);
Failures marked_class_counts(int n);
/// "A", "B" or "D": closed formula against exhaustive per-type counts.
Failures type_counts(const std::string& family, int n);
/// nc_b, nc_d, nn_b, nn_c, nn_d: bijection, exact image and type clause.
Failures interpretation(const std::string& map, int n);
Failures rho_check(int n);
Failures rho_bar_check(int n);
Failures xi_check(int n);
Failures xi_symmetry(int n);
Failures xi_bar_check(int n);
Failures iota_check(int n);
/// "B", "C" or "D".
Failures composed_check(const std::string& flavor, int n);
Failures psi_b_check(int n);
Failures psi_d_check(int n);
Failures kappa_check(int n);
Failures dyck_check(int n);
Failures g_check(int n);
Failures f_check(int n);
Failures pair_counts(int n);
/// Every line of the series cross check up to z^n_max.
Failures series_cross_check(int n_max);
/// Every worked example from the figures, pinned.
Failures golden_examples();

}  // namespace coxcat::verify
