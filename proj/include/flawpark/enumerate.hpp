#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "flawpark/parking.hpp"

namespace flawpark {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct BudgetExceeded : std::runtime_error {
  std::uint64_t required;
  std::uint64_t allowed;
  BudgetExceeded(std::uint64_t req, std::uint64_t cap)
      : std::runtime_error("enumeration budget exceeded"),
        required(req),
        allowed(cap) {}
};

// Candidate count s^n for the class, used for budget checks.
std::uint64_t candidate_count(const ClassSpec& spec);

// Visit every member of the class in lexicographic order of entries.
void for_each_in_class(const ClassSpec& spec,
                       const std::function<void(const PreferenceSet&)>& visit,
                       std::uint64_t budget = kDefaultBudget);

std::vector<PreferenceSet> class_members(const ClassSpec& spec,
                                         std::uint64_t budget = kDefaultBudget);

BigInt count_class(const ClassSpec& spec, std::uint64_t budget = kDefaultBudget);

// counts[k][l-1] = members of (cars, spaces, max_pref) with k flaws and first
// entry l; totals[k] sums over l.  Cached per (cars, spaces, max_pref).
struct CountReport {
  int cars = 0;
  int spaces = 0;
  int max_pref = 0;
  std::vector<std::vector<BigInt>> counts;
  std::vector<BigInt> totals;
};

const CountReport& tally(int cars, int spaces, int max_pref,
                         std::uint64_t budget = kDefaultBudget);

}  // namespace flawpark
