#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "flawpark/parking.hpp"

using namespace flawpark;

namespace {

PreferenceSet seq(std::vector<int> entries, int spaces) {
  return make_preference_set(std::move(entries), spaces);
}

// Runs `fn` over every sequence of `cars` entries drawn from [1, spaces].
template <typename Fn>
void every_sequence(int cars, int spaces, Fn fn) {
  std::vector<int> entries(cars, 1);
  while (true) {
    fn(PreferenceSet{spaces, entries});
    int i = cars - 1;
    while (i >= 0 && entries[i] == spaces) entries[i--] = 1;
    if (i < 0) break;
    ++entries[i];
  }
}

}  // namespace

TEST_CASE("park fills one-way spaces and reports the leftovers") {
  auto out = park(seq({6, 1, 8, 12, 7, 12, 5, 8, 12, 2, 1, 5}, 14));
  CHECK(out.assignment ==
        std::vector<int>{6, 1, 8, 12, 7, 13, 5, 9, 14, 2, 3, 10});
  CHECK(out.empty_spaces == std::vector<int>{4, 11});
  CHECK(out.flaws == 0);
  CHECK(out.occupied[5] == 1);   // space 6 holds car 1
  CHECK(out.occupied[3] == 0);   // space 4 stays empty
}

TEST_CASE("park counts unparked cars") {
  auto out = park(seq({2, 2}, 2));
  CHECK(out.assignment == std::vector<int>{2, kUnparked});
  CHECK(out.flaws == 1);
  CHECK(out.empty_spaces == std::vector<int>{1});

  auto crowded = park(seq({3, 3, 3}, 3));
  CHECK(crowded.assignment == std::vector<int>{3, kUnparked, kUnparked});
  CHECK(crowded.flaws == 2);
  CHECK(crowded.empty_spaces == std::vector<int>{1, 2});

  // A car bumped off its choice can still park further right.
  auto slid = park(seq({1, 1}, 2));
  CHECK(slid.assignment == std::vector<int>{1, 2});
  CHECK(slid.flaws == 0);
}

TEST_CASE("park handles degenerate sizes") {
  auto none = park(seq({}, 0));
  CHECK(none.flaws == 0);
  CHECK(none.empty_spaces.empty());

  auto wide = park(seq({1}, 70));  // beyond the bitmask fast path
  CHECK(wide.assignment == std::vector<int>{1});
  CHECK(wide.empty_spaces.size() == 69);
}

TEST_CASE("empty spaces match the running count of low preferences") {
  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= 5; ++m) {
      every_sequence(n, m, [&](const PreferenceSet& pref) {
        const auto out = park(pref);
        const auto spec = specification(pref);
        int empties_below = 0;
        for (int j = 1; j <= m; ++j) {
          const bool empty = out.occupied[j - 1] == 0;
          CHECK(space_empty_by_counts(spec, j, empties_below) == empty);
          if (empty) ++empties_below;
        }
      });
    }
  }
}

TEST_CASE("rank permutation sorts by preference with index tiebreak") {
  auto pref = seq({6, 1, 8, 12, 7, 12, 5, 8, 12, 2, 1, 5}, 14);
  auto rp = rank_permutation(pref);
  CHECK(rp.pi_inverse == std::vector<int>{2, 11, 10, 7, 12, 1, 5, 3, 8, 4, 6, 9});
  for (int r = 1; r <= pref.cars(); ++r) {
    CHECK(rp.pi[rp.pi_inverse[r - 1] - 1] == r);
  }
}

TEST_CASE("leading stats summarize the first entry against the outcome") {
  auto pref = seq({6, 1, 8, 12, 7, 12, 5, 8, 12, 2, 1, 5}, 14);
  auto st = leading_stats(pref, park(pref));
  CHECK(st.leading == 6);
  CHECK(st.multiplicity == 1);
  CHECK(st.max_empty == 11);
  CHECK(st.max_empty_below == 4);
  CHECK(st.empties_below == 1);
  CHECK(st.lead_rank == 6);

  CHECK_THROWS_AS(leading_stats(seq({}, 3), park(seq({}, 3))),
                  std::invalid_argument);
}

TEST_CASE("decompose splits a complete outcome at its empty spaces") {
  auto pref = seq({6, 1, 8, 12, 7, 12, 5, 8, 12, 2, 1, 5}, 14);
  auto dec = decompose(pref, park(pref));
  CHECK(dec.mu == std::vector<int>{0, 3, 9});
  CHECK(dec.block_sizes == std::vector<int>{3, 6, 3});
  CHECK(dec.spec_blocks ==
        std::vector<std::vector<int>>{{2, 1, 0}, {2, 1, 1, 2, 0, 0}, {3, 0, 0}});
  CHECK(dec.order_blocks ==
        std::vector<std::vector<int>>{{2, 11, 10}, {7, 12, 1, 5, 3, 8}, {4, 6, 9}});
}

TEST_CASE("decompose covers flawed outcomes") {
  auto pref = seq({3, 3, 3}, 3);
  auto dec = decompose(pref, park(pref));
  CHECK(dec.mu == std::vector<int>{0, 0, 0});
  CHECK(dec.block_sizes == std::vector<int>{0, 0, 1});
  CHECK(dec.spec_blocks == std::vector<std::vector<int>>{{}, {}, {3}});
  CHECK(dec.order_blocks == std::vector<std::vector<int>>{{}, {}, {1}});
}

TEST_CASE("block sizes always sum to the number of parked cars") {
  every_sequence(4, 4, [&](const PreferenceSet& pref) {
    const auto out = park(pref);
    const auto dec = decompose(pref, out);
    int parked = 0;
    for (int t : dec.block_sizes) parked += t;
    CHECK(parked == pref.cars() - out.flaws);
  });
}

TEST_CASE("embedding widens by the flaw count and parks completely") {
  auto wide = embed_with_flaws(seq({2, 2}, 2));
  CHECK(wide.spaces == 3);
  CHECK(wide.entries == std::vector<int>{2, 2});
  CHECK(park(wide).flaws == 0);

  every_sequence(3, 3, [&](const PreferenceSet& pref) {
    const auto wide3 = embed_with_flaws(pref);
    CHECK(wide3.spaces == 3 + park(pref).flaws);
    CHECK(park(wide3).flaws == 0);
  });

  CHECK_THROWS_AS(embed_with_flaws(seq({1, 1}, 3)), std::invalid_argument);
}

TEST_CASE("class membership checks every constraint") {
  auto spec = make_class_spec(3, 3, 2, 1, 2);
  CHECK(in_class(seq({2, 2, 2}, 3), spec));
  CHECK_FALSE(in_class(seq({1, 2, 2}, 3), spec));   // wrong leading
  CHECK_FALSE(in_class(seq({2, 3, 1}, 3), spec));   // entry above the bound
  CHECK_FALSE(in_class(seq({2, 2, 1}, 3), spec));   // no flaw
  CHECK_FALSE(in_class(seq({2, 2, 2}, 4), spec));   // wrong space count

  auto open = make_class_spec(2, std::nullopt, std::nullopt, 0);
  CHECK(open.spaces == 2);
  CHECK(open.max_pref == 2);
  CHECK(in_class(seq({1, 1}, 2), open));
}

TEST_CASE("constructors reject malformed input") {
  CHECK_THROWS_AS(make_preference_set({0}, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_preference_set({3}, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_preference_set({1}, -1), std::invalid_argument);

  CHECK_THROWS_AS(make_class_spec(-1, std::nullopt, std::nullopt, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_class_spec(2, 2, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_class_spec(2, 2, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_class_spec(2, 2, 2, -1), std::invalid_argument);
  CHECK_THROWS_AS(make_class_spec(2, 2, 2, 0, 0), std::invalid_argument);

  // Bound zero with cars present is a legal, empty class.
  auto empty = make_class_spec(2, 2, 0, 0);
  CHECK(empty.max_pref == 0);
}
