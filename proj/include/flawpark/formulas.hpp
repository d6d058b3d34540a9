#pragma once

#include "flawpark/enumerate.hpp"
#include "flawpark/numeric.hpp"

namespace flawpark {

// Closed count of sequences that park completely: n cars, m spaces, entries
// up to m.  (m+1-n)(m+1)^(n-1); requires 0 <= n <= m.
BigInt count_parking(int cars, int spaces);

// p_{n;<=s;k} summed over the position of the last empty space.
// Requires 1 <= s <= n and 1 <= k <= s-1.
BigInt count_by_last_empty(int cars, int max_pref, int flaws,
                           std::uint64_t budget = kDefaultBudget);

// Count of leading-entry-1 members of the widened class on cars+flaws spaces.
// flaws = 0 reduces to count_parking(cars-1, cars).
BigInt leading_one_embedded(int cars, int flaws);

// Count of widened-class members with leading l that have no counterpart with
// leading l+1.  Requires flaws+1 <= leading <= cars+flaws.
BigInt lead_replace_count(int cars, int flaws, int leading);

// p^l - p^(l+1) over the widened class; same value as lead_replace_count but
// restricted to leading <= cars+flaws-1 where both classes live.
BigInt leading_delta_embedded(int cars, int flaws, int leading);

// Count of leading-entry-1 members of the bounded class (spaces = cars,
// entries <= max_pref, exactly flaws cars unparked).  Requires flaws >= 1 and
// flaws+1 <= max_pref <= cars.
BigInt leading_one_bounded(int cars, int max_pref, int flaws,
                           std::uint64_t budget = kDefaultBudget);

// Members of the bounded class with leading l whose empty spaces (in the
// widened view) all lie below l.  Requires flaws >= 1, flaws <= leading <=
// max_pref, max_pref <= cars.
BigInt low_max_empty_count(int cars, int max_pref, int flaws, int leading,
                           std::uint64_t budget = kDefaultBudget);

// p^(l+1) - p^l over the bounded class.  Requires flaws >= 1 and
// flaws <= leading <= max_pref-1, max_pref <= cars.
BigInt leading_delta_bounded(int cars, int max_pref, int flaws, int leading,
                             std::uint64_t budget = kDefaultBudget);

// Count of bounded-class members with leading l that trade their leading
// entry against one more flaw.  Requires flaws >= 1 and
// flaws+1 <= leading <= max_pref-2.
BigInt lead_replace_count_bounded(int cars, int max_pref, int flaws,
                                  int leading,
                                  std::uint64_t budget = kDefaultBudget);

}  // namespace flawpark
