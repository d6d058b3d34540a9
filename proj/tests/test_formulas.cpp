#include <stdexcept>

#include "doctest.h"
#include "flawpark/enumerate.hpp"
#include "flawpark/formulas.hpp"

using namespace flawpark;

namespace {

BigInt cc(int cars, int spaces, int max_pref, int flaws,
          std::optional<int> leading = std::nullopt) {
  return count_class(make_class_spec(cars, spaces, max_pref, flaws, leading));
}

}  // namespace

TEST_CASE("count_parking closed form") {
  CHECK(count_parking(5, 5) == 1296);
  CHECK(count_parking(2, 3) == 8);
  CHECK(count_parking(3, 4) == 50);
  CHECK(count_parking(0, 0) == 1);
  CHECK(count_parking(0, 4) == 1);

  for (int n = 0; n <= 5; ++n) {
    for (int m = n; m <= n + 2; ++m) {
      CHECK(count_parking(n, m) == cc(n, m, m, 0));
    }
  }

  CHECK_THROWS_AS(count_parking(3, 2), std::domain_error);
  CHECK_THROWS_AS(count_parking(-1, 2), std::domain_error);
}

TEST_CASE("count_by_last_empty sums the bounded flawed class") {
  CHECK(count_by_last_empty(7, 6, 2) == 29870);
  CHECK(count_by_last_empty(4, 3, 1) == 19);
  CHECK(count_by_last_empty(3, 2, 1) == 1);

  for (int n = 1; n <= 5; ++n) {
    for (int s = 2; s <= n; ++s) {
      for (int k = 1; k <= s - 1; ++k) {
        CHECK(count_by_last_empty(n, s, k) == cc(n, n, s, k));
      }
    }
  }

  CHECK_THROWS_AS(count_by_last_empty(4, 3, 3), std::domain_error);
  CHECK_THROWS_AS(count_by_last_empty(4, 5, 1), std::domain_error);
  CHECK_THROWS_AS(count_by_last_empty(4, 3, 0), std::domain_error);
}

TEST_CASE("leading_one_embedded recursion") {
  CHECK(leading_one_embedded(4, 1) == 108);
  CHECK(leading_one_embedded(3, 2) == 24);
  CHECK(leading_one_embedded(1, 0) == 1);

  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k <= 2; ++k) {
      CHECK(leading_one_embedded(n, k) == cc(n, n + k, n + k, 0, 1));
      CHECK(leading_one_embedded(n, k) == count_parking(n - 1, n + k));
    }
  }

  CHECK_THROWS_AS(leading_one_embedded(0, 1), std::domain_error);
  CHECK_THROWS_AS(leading_one_embedded(3, -1), std::domain_error);
}

TEST_CASE("lead_replace_count and the embedded leading delta") {
  CHECK(lead_replace_count(3, 0, 2) == 2);
  CHECK(lead_replace_count(3, 0, 3) == 3);
  CHECK(lead_replace_count(1, 2, 3) == 1);
  CHECK(leading_delta_embedded(3, 1, 2) == 3);
  CHECK(leading_delta_embedded(4, 0, 1) == 16);
  CHECK(leading_delta_embedded(2, 0, 1) == 1);

  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k <= 2; ++k) {
      for (int l = k + 1; l <= n + k - 1; ++l) {
        CHECK(leading_delta_embedded(n, k, l) ==
              cc(n, n + k, n + k, 0, l) - cc(n, n + k, n + k, 0, l + 1));
      }
      // At the top entry nothing is left to replace against.
      CHECK(lead_replace_count(n, k, n + k) == cc(n, n + k, n + k, 0, n + k));
    }
  }

  CHECK_THROWS_AS(lead_replace_count(3, 0, 4), std::domain_error);
  CHECK_THROWS_AS(lead_replace_count(3, 1, 1), std::domain_error);
  CHECK_THROWS_AS(leading_delta_embedded(3, 0, 3), std::domain_error);
}

TEST_CASE("leading_one_bounded recursion") {
  CHECK(leading_one_bounded(6, 5, 1) == 436);
  CHECK(leading_one_bounded(4, 3, 1) == 1);
  CHECK(leading_one_bounded(5, 5, 2) == 27);

  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k <= 2; ++k) {
      for (int s = k + 1; s <= n; ++s) {
        CHECK(leading_one_bounded(n, s, k) == cc(n, n, s, k, 1));
      }
    }
  }

  CHECK_THROWS_AS(leading_one_bounded(4, 5, 1), std::domain_error);
  CHECK_THROWS_AS(leading_one_bounded(4, 4, 0), std::domain_error);
}

TEST_CASE("low_max_empty_count against a direct filter") {
  CHECK(low_max_empty_count(7, 6, 2, 4) == 6265);

  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k <= 2; ++k) {
      for (int s = k + 1; s <= n; ++s) {
        for (int l = k; l <= s - 1; ++l) {
          BigInt want = 0;
          for_each_in_class(make_class_spec(n, n, s, k, l),
                            [&](const PreferenceSet& pref) {
                              const auto wide = embed_with_flaws(pref);
                              const auto st =
                                  leading_stats(wide, park(wide));
                              if (st.max_empty < l) ++want;
                            });
          CHECK(low_max_empty_count(n, s, k, l) == want);
        }
      }
    }
  }

  CHECK_THROWS_AS(low_max_empty_count(4, 4, 1, 4), std::domain_error);
  CHECK_THROWS_AS(low_max_empty_count(4, 4, 0, 2), std::domain_error);
}

TEST_CASE("leading_delta_bounded against the class difference") {
  CHECK(leading_delta_bounded(7, 6, 1, 4) == 440);
  CHECK(leading_delta_bounded(5, 4, 1, 2) == 13);
  CHECK(leading_delta_bounded(4, 4, 2, 2) == 7);
  CHECK(leading_delta_bounded(4, 4, 2, 3) == 5);

  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k <= 2; ++k) {
      for (int s = k + 1; s <= n; ++s) {
        for (int l = k; l <= s - 1; ++l) {
          CHECK(leading_delta_bounded(n, s, k, l) ==
                cc(n, n, s, k, l + 1) - cc(n, n, s, k, l));
        }
      }
    }
  }

  CHECK_THROWS_AS(leading_delta_bounded(4, 4, 1, 4), std::domain_error);
}

TEST_CASE("lead_replace_count_bounded picks out entry-trading members") {
  CHECK(lead_replace_count_bounded(7, 6, 1, 4) == 320);

  // Members with leading l, all empties below l, and rank at the slack trade
  // their leading entry for the bound; the closed product counts them.
  for (int n = 3; n <= 5; ++n) {
    for (int k = 1; k <= 2; ++k) {
      for (int s = k + 3; s <= n; ++s) {
        for (int l = k + 1; l <= s - 2; ++l) {
          BigInt want = 0;
          for_each_in_class(make_class_spec(n, n, s, k, l),
                            [&](const PreferenceSet& pref) {
                              const auto wide = embed_with_flaws(pref);
                              const auto st =
                                  leading_stats(wide, park(wide));
                              if (st.multiplicity == 1 &&
                                  st.lead_rank == l - st.empties_below &&
                                  st.empties_below == k - 1)
                                ++want;
                            });
          CHECK(lead_replace_count_bounded(n, s, k, l) == want);
        }
      }
    }
  }

  CHECK_THROWS_AS(lead_replace_count_bounded(7, 6, 1, 5), std::domain_error);
  CHECK_THROWS_AS(lead_replace_count_bounded(7, 6, 0, 3), std::domain_error);
}
