#include <vector>

#include "doctest.h"
#include "flawpark/enumerate.hpp"

using namespace flawpark;

namespace {

ClassSpec cls(int cars, int spaces, int max_pref, int flaws,
              std::optional<int> leading = std::nullopt) {
  return make_class_spec(cars, spaces, max_pref, flaws, leading);
}

}  // namespace

TEST_CASE("class members come out in lexicographic order") {
  auto members = class_members(cls(2, 2, 2, 0));
  REQUIRE(members.size() == 3);
  CHECK(members[0].entries == std::vector<int>{1, 1});
  CHECK(members[1].entries == std::vector<int>{1, 2});
  CHECK(members[2].entries == std::vector<int>{2, 1});

  auto flawed = class_members(cls(2, 2, 2, 1));
  REQUIRE(flawed.size() == 1);
  CHECK(flawed[0].entries == std::vector<int>{2, 2});
}

TEST_CASE("count_class matches frozen reference counts") {
  CHECK(count_class(cls(7, 7, 6, 2)) == 29870);
  CHECK(count_class(cls(5, 8, 8, 0, 5)) == 3520);
  CHECK(count_class(cls(3, 3, 3, 0)) == 16);
  CHECK(count_class(cls(4, 4, 4, 1, 4)) == 34);
}

TEST_CASE("empty classes count zero, the empty sequence counts one") {
  CHECK(count_class(cls(2, 2, 1, 1)) == 0);
  CHECK(count_class(cls(0, 0, 0, 0)) == 1);
  CHECK(count_class(cls(0, 3, 3, 0)) == 1);
  CHECK(count_class(cls(3, 3, 2, 0, 3)) == 0);  // leading above the bound
}

TEST_CASE("fixing the leading entry shrinks the candidate space") {
  CHECK(candidate_count(cls(3, 3, 3, 0)) == 27);
  CHECK(candidate_count(cls(3, 3, 3, 0, 2)) == 9);
  CHECK(candidate_count(cls(3, 3, 2, 0, 3)) == 0);
  CHECK(candidate_count(cls(0, 0, 0, 0)) == 1);
}

TEST_CASE("enumeration refuses work beyond the budget") {
  try {
    for_each_in_class(cls(7, 7, 7, 0), [](const PreferenceSet&) {}, 100);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.required == 823543);
    CHECK(e.allowed == 100);
  }

  // A candidate space exactly at the budget is still allowed.
  std::uint64_t visited = 0;
  for_each_in_class(cls(3, 3, 3, 0), [&](const PreferenceSet&) { ++visited; },
                    27);
  CHECK(visited == 16);
}

TEST_CASE("tally groups counts by flaws and leading entry") {
  const CountReport& report = tally(4, 4, 4);
  CHECK(report.totals[0] == 125);
  CHECK(report.totals[1] == 107);
  CHECK(report.counts[1][3] == 34);

  BigInt all = 0;
  for (const BigInt& t : report.totals) all += t;
  CHECK(all == 256);

  // Repeated calls reuse the cached report.
  CHECK(&tally(4, 4, 4) == &report);
}
