#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "flawpark/enumerate.hpp"
#include "flawpark/surgery.hpp"

using namespace flawpark;

namespace {

PreferenceSet seq(std::vector<int> entries, int spaces) {
  return make_preference_set(std::move(entries), spaces);
}

TripletForest lift(const PreferenceSet& pref) {
  return triplet_forest(phi(pref));
}

std::vector<int> apply_move(const std::vector<int>& entries, int spaces,
                            Direction dir) {
  auto out = phi_inverse(psi_move(lift(seq(entries, spaces)), dir));
  return out.entries;
}

std::vector<int> apply_rootshift(const std::vector<int>& entries, int spaces,
                                 Direction dir) {
  auto out = phi_inverse(psi_rootshift(lift(seq(entries, spaces)), dir));
  return out.entries;
}

}  // namespace

TEST_CASE("triplet stats agree with the sequence-side statistics") {
  for_each_in_class(make_class_spec(4, 6, 6, 0),
                    [&](const PreferenceSet& pref) {
                      const auto ls = leading_stats(pref, park(pref));
                      const auto ts = triplet_stats(lift(pref));
                      CHECK(ts.leading == ls.leading);
                      CHECK(ts.lead_rank == ls.lead_rank);
                      CHECK(ts.multiplicity == ls.multiplicity);
                      CHECK(ts.max_empty == ls.max_empty);
                      CHECK(ts.max_empty_below == ls.max_empty_below);
                      CHECK(ts.tree == ls.empties_below);
                    });
}

TEST_CASE("psi_move reparents vertex 1 and nudges the lead entry") {
  const std::vector<int> before{2, 4, 8, 12, 9, 1, 12, 8, 4, 12, 1, 3};
  const std::vector<int> after{3, 4, 8, 12, 9, 1, 12, 8, 4, 12, 1, 3};
  CHECK(apply_move(before, 14, Direction::forward) == after);
  CHECK(apply_move(after, 14, Direction::backward) == before);
}

TEST_CASE("psi_rootshift renumbers entries around the moved subtree") {
  const std::vector<int> before{3, 10, 4, 10, 7, 1, 4, 1, 10, 7};
  const std::vector<int> after{4, 10, 5, 10, 4, 1, 5, 1, 10, 4};
  CHECK(apply_rootshift(before, 12, Direction::forward) == after);
  CHECK(apply_rootshift(after, 12, Direction::backward) == before);
}

TEST_CASE("psi_lead_replace swaps the lead entry against the top space") {
  auto up = psi_lead_replace(seq({2, 1, 3}, 3), Direction::forward);
  CHECK(up.spaces == 4);
  CHECK(up.entries == std::vector<int>{4, 1, 3});
  auto down = psi_lead_replace(up, Direction::backward);
  CHECK(down.spaces == 3);
  CHECK(down.entries == std::vector<int>{2, 1, 3});

  auto other = psi_lead_replace(seq({2, 3, 1}, 3), Direction::forward);
  CHECK(other.entries == std::vector<int>{4, 3, 1});

  // Only the lead entry moves; the rest of the multiset stays put.
  for_each_in_class(
      make_class_spec(4, 4, 4, 0), [&](const PreferenceSet& pref) {
        const auto st = leading_stats(pref, park(pref));
        if (st.multiplicity != 1 || st.lead_rank != st.leading) return;
        if (st.max_empty > st.leading) return;
        auto swapped = psi_lead_replace(pref, Direction::forward);
        CHECK(swapped.entries[0] == 5);
        CHECK(std::vector<int>(swapped.entries.begin() + 1,
                               swapped.entries.end()) ==
              std::vector<int>(pref.entries.begin() + 1, pref.entries.end()));
        auto back = psi_lead_replace(swapped, Direction::backward);
        CHECK(back.entries == pref.entries);
      });
}

TEST_CASE("surgery preconditions are enforced") {
  // Lead entry already at the top space, or no valid stats for a move.
  CHECK_THROWS_AS(psi_move(lift(seq({3, 1, 2}, 3)), Direction::forward),
                  std::domain_error);
  CHECK_THROWS_AS(psi_move(lift(seq({2, 1, 3}, 3)), Direction::forward),
                  std::domain_error);
  CHECK_THROWS_AS(psi_move(lift(seq({1, 1}, 2)), Direction::backward),
                  std::domain_error);

  // Root shift needs rank at the slack and a later tree to shift into.
  CHECK_THROWS_AS(psi_rootshift(lift(seq({2, 1, 3}, 3)), Direction::forward),
                  std::domain_error);
  CHECK_THROWS_AS(psi_rootshift(lift(seq({1, 1}, 2)), Direction::forward),
                  std::domain_error);

  // Lead replacement wants a unique lead at its slack, and room backward.
  CHECK_THROWS_AS(psi_lead_replace(seq({1, 1}, 2), Direction::forward),
                  std::domain_error);
  CHECK_THROWS_AS(psi_lead_replace(seq({2, 2}, 2), Direction::forward),
                  std::domain_error);
  CHECK_THROWS_AS(psi_lead_replace(seq({2, 1}, 2), Direction::backward),
                  std::domain_error);

  // Flaw trades need flaws to trade.
  CHECK_THROWS_AS(flaw_raise(lift(seq({1, 2, 3}, 3)), 3, Direction::forward),
                  std::domain_error);
  CHECK_THROWS_AS(flaw_seed(lift(seq({1, 1, 1}, 3)), Direction::forward),
                  std::domain_error);
}

TEST_CASE("flaw_raise trades a lead 1 for a lead at the bound") {
  auto member = seq({1, 3, 3, 3}, 4);
  REQUIRE(in_class(member, make_class_spec(4, 4, 3, 1, 1)));
  auto wide = embed_with_flaws(member);
  auto raised = flaw_raise(lift(wide), 3, Direction::forward);
  CHECK(raised.forest.extra_roots == 2);

  auto raised_seq = phi_inverse(raised);
  auto narrow = seq(raised_seq.entries, 4);
  CHECK(in_class(narrow, make_class_spec(4, 4, 3, 2, 3)));

  auto lowered = flaw_raise(raised, 3, Direction::backward);
  CHECK(phi_inverse(lowered).entries == wide.entries);
}

TEST_CASE("flaw_seed plants the first flaw in a complete sequence") {
  auto source = make_class_spec(3, 3, 3, 0, 2);
  auto target = make_class_spec(3, 3, 3, 1, 3);
  REQUIRE(count_class(source) == count_class(target));

  std::set<std::vector<int>> images;
  for_each_in_class(source, [&](const PreferenceSet& pref) {
    auto seeded = flaw_seed(lift(pref), Direction::forward);
    CHECK(seeded.forest.extra_roots == 1);
    auto narrow = seq(phi_inverse(seeded).entries, 3);
    CHECK(in_class(narrow, target));
    images.insert(narrow.entries);

    auto unseeded = flaw_seed(seeded, Direction::backward);
    CHECK(phi_inverse(unseeded).entries == pref.entries);
  });
  CHECK(images.size() == 5);

  std::set<std::vector<int>> codomain;
  for_each_in_class(target, [&](const PreferenceSet& pref) {
    codomain.insert(pref.entries);
  });
  CHECK(images == codomain);
}
