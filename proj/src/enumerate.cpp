#include "flawpark/enumerate.hpp"

#include <bit>
#include <limits>
#include <map>
#include <mutex>
#include <tuple>

namespace flawpark {

namespace {

std::uint64_t saturating_pow(std::uint64_t base, int exp) {
  std::uint64_t result = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base)
      return std::numeric_limits<std::uint64_t>::max();
    result *= base;
  }
  return base == 0 && exp > 0 ? 0 : result;
}

int flaws_only(const std::vector<int>& entries, int m) {
  int flaws = 0;
  if (m <= 63) {
    std::uint64_t free_mask = (m == 0) ? 0 : ((std::uint64_t{1} << m) - 1);
    for (int a : entries) {
      const std::uint64_t ahead = free_mask >> (a - 1);
      if (ahead == 0) {
        ++flaws;
        continue;
      }
      free_mask &= free_mask - (std::uint64_t{1} << (a - 1));
    }
  } else {
    thread_local std::vector<char> taken;
    taken.assign(m, 0);
    for (int a : entries) {
      int space = a;
      while (space <= m && taken[space - 1]) ++space;
      if (space > m)
        ++flaws;
      else
        taken[space - 1] = 1;
    }
  }
  return flaws;
}

}  // namespace

std::uint64_t candidate_count(const ClassSpec& spec) {
  if (spec.cars == 0) return 1;
  if (spec.leading) {
    if (*spec.leading > spec.max_pref) return 0;
    return saturating_pow(spec.max_pref, spec.cars - 1);
  }
  return saturating_pow(spec.max_pref, spec.cars);
}

void for_each_in_class(const ClassSpec& spec,
                       const std::function<void(const PreferenceSet&)>& visit,
                       std::uint64_t budget) {
  const std::uint64_t candidates = candidate_count(spec);
  if (candidates > budget) throw BudgetExceeded(candidates, budget);
  if (spec.cars == 0) {
    if (spec.flaws == 0) visit(PreferenceSet{spec.spaces, {}});
    return;
  }
  if (candidates == 0) return;

  const int n = spec.cars;
  const int s = spec.max_pref;
  const int first_varying = spec.leading ? 1 : 0;
  PreferenceSet pref;
  pref.spaces = spec.spaces;
  pref.entries.assign(n, 1);
  if (spec.leading) pref.entries[0] = *spec.leading;
  for (;;) {
    if (flaws_only(pref.entries, spec.spaces) == spec.flaws) visit(pref);
    int pos = n - 1;
    while (pos >= first_varying && pref.entries[pos] == s) {
      pref.entries[pos] = 1;
      --pos;
    }
    if (pos < first_varying) break;
    ++pref.entries[pos];
  }
}

std::vector<PreferenceSet> class_members(const ClassSpec& spec,
                                         std::uint64_t budget) {
  std::vector<PreferenceSet> members;
  for_each_in_class(
      spec, [&](const PreferenceSet& pref) { members.push_back(pref); },
      budget);
  return members;
}

namespace {

std::mutex tally_mutex;
std::map<std::tuple<int, int, int>, CountReport> tally_cache;

CountReport compute_tally(int cars, int spaces, int max_pref,
                          std::uint64_t budget) {
  CountReport report;
  report.cars = cars;
  report.spaces = spaces;
  report.max_pref = max_pref;
  report.totals.assign(cars + 1, BigInt(0));
  report.counts.assign(cars + 1, std::vector<BigInt>(max_pref, BigInt(0)));
  if (cars == 0) {
    report.totals[0] = 1;
    return report;
  }

  std::vector<std::vector<std::uint64_t>> raw(
      cars + 1, std::vector<std::uint64_t>(std::max(max_pref, 1), 0));
  const ClassSpec all = make_class_spec(cars, spaces, max_pref, 0);
  const std::uint64_t candidates = candidate_count(all);
  if (candidates > budget) throw BudgetExceeded(candidates, budget);
  if (candidates > 0) {
    const int n = cars;
    const int s = max_pref;
    std::vector<int> entries(n, 1);
    for (;;) {
      ++raw[flaws_only(entries, spaces)][entries[0] - 1];
      int pos = n - 1;
      while (pos >= 0 && entries[pos] == s) {
        entries[pos] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++entries[pos];
    }
  }
  for (int k = 0; k <= cars; ++k) {
    for (int l = 1; l <= max_pref; ++l) {
      report.counts[k][l - 1] = raw[k][l - 1];
      report.totals[k] += raw[k][l - 1];
    }
  }
  return report;
}

}  // namespace

const CountReport& tally(int cars, int spaces, int max_pref,
                         std::uint64_t budget) {
  const auto key = std::make_tuple(cars, spaces, max_pref);
  {
    std::lock_guard<std::mutex> lock(tally_mutex);
    auto it = tally_cache.find(key);
    if (it != tally_cache.end()) return it->second;
  }
  CountReport report = compute_tally(cars, spaces, max_pref, budget);
  std::lock_guard<std::mutex> lock(tally_mutex);
  return tally_cache.emplace(key, std::move(report)).first->second;
}

BigInt count_class(const ClassSpec& spec, std::uint64_t budget) {
  if (spec.cars == 0) return spec.flaws == 0 ? 1 : 0;
  if (spec.leading && *spec.leading > spec.max_pref) return 0;
  ClassSpec full = spec;
  full.leading.reset();
  if (candidate_count(full) <= budget) {
    const CountReport& report =
        tally(spec.cars, spec.spaces, spec.max_pref, budget);
    if (spec.leading) return report.counts[spec.flaws][*spec.leading - 1];
    return report.totals[spec.flaws];
  }
  BigInt total = 0;
  for_each_in_class(
      spec, [&](const PreferenceSet&) { ++total; }, budget);
  return total;
}

}  // namespace flawpark
