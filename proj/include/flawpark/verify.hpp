#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flawpark/enumerate.hpp"

namespace flawpark {

// Outcome of one named check, usually aggregating many instances.  detail
// reports the instance count, plus the first few failures when pass is false.
struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
};

// Regenerates the five reference tables and compares each cell against the
// fixture files <data_dir>/table1.tsv .. table5.tsv.  Passing requires every
// recounted value to equal the stored one and the published-value annotations
// to be exactly the documented set (table 2, cell n=5 s=3 l=2).
std::vector<CheckResult> verify_tables(const std::string& data_dir,
                                       std::uint64_t budget = kDefaultBudget);

// Every closed counting formula against brute-force counts over all in-range
// parameters with cars <= max_n, plus the fixed spot values at cars = 7.
std::vector<CheckResult> verify_formulas(int max_n,
                                         std::uint64_t budget = kDefaultBudget);

// All identity families, one result per family, plus fixed spot values.
std::vector<CheckResult> verify_identity_suite(
    int max_n, std::uint64_t budget = kDefaultBudget);

// Certifies the sequence-forest bijection and the five surgeries as set
// bijections: round trips, image equality with the stated codomain, the
// leading-statistic partitions, the bounded-family window, and the two
// fixed worked instances.  Exhaustive for cars <= max_n (surgeries and
// forest generation capped at 4) and extra spaces <= max_k.
std::vector<CheckResult> verify_bijections(
    int max_n, int max_k, std::uint64_t budget = kDefaultBudget);

// Scaled series coefficients against brute-force counts: single-variable
// families up to degree max_degree, joint-variable families up to
// max_joint_degree, plus the finite-sum vs closed-form cross-checks.
std::vector<CheckResult> verify_series(int max_degree, int max_joint_degree,
                                       std::uint64_t budget = kDefaultBudget);

// x.P(x).e^(-x.P(x)) - x vanishes through the given degree.
std::vector<CheckResult> verify_exp_identity(int degree);

}  // namespace flawpark
