// Acceptance gate: one pass/fail line per criterion, exit code counts the
// failures.  Expects the fixture directory as argv[1].
#include <exception>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "flawpark/verify.hpp"

using flawpark::CheckResult;

int main(int argc, char** argv) {
  const std::string data_dir = argc > 1 ? argv[1] : "data";

  struct Criterion {
    std::string name;
    std::function<std::vector<CheckResult>()> run;
  };
  const std::vector<Criterion> criteria = {
      {"table-reproduction",
       [&] { return flawpark::verify_tables(data_dir); }},
      {"formula-oracle-equivalence",
       [] { return flawpark::verify_formulas(6); }},
      {"identity-suite", [] { return flawpark::verify_identity_suite(6); }},
      {"bijection-certification",
       [] { return flawpark::verify_bijections(5, 2); }},
      {"series-coefficients", [] { return flawpark::verify_series(7, 6); }},
      {"exp-identity", [] { return flawpark::verify_exp_identity(8); }},
  };

  int failed = 0;
  for (const auto& criterion : criteria) {
    std::vector<CheckResult> results;
    std::string error;
    try {
      results = criterion.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    bool pass = error.empty();
    for (const auto& r : results) {
      if (!r.pass) pass = false;
    }
    std::cout << (pass ? "PASS" : "FAIL") << "  " << criterion.name << "\n";
    if (!error.empty()) {
      std::cout << "      error: " << error << "\n";
    }
    for (const auto& r : results) {
      if (!r.pass) {
        std::cout << "      " << r.suite << "/" << r.name << ": " << r.detail
                  << "\n";
      }
    }
    if (!pass) ++failed;
  }
  return failed;
}
