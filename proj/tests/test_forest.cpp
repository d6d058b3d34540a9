#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "flawpark/enumerate.hpp"
#include "flawpark/forest.hpp"

using namespace flawpark;

namespace {

PreferenceSet seq(std::vector<int> entries, int spaces) {
  return make_preference_set(std::move(entries), spaces);
}

const PreferenceSet& worked_sequence() {
  static const PreferenceSet pref =
      seq({6, 1, 8, 12, 7, 12, 5, 8, 12, 2, 1, 5}, 14);
  return pref;
}

}  // namespace

TEST_CASE("phi sends the worked sequence to its forest") {
  auto f = phi(worked_sequence());
  CHECK(f.extra_roots == 2);
  REQUIRE(f.size() == 12);
  CHECK(f.parent == std::vector<ParentRef>{
                        vertex_ref(7), root_ref(0), vertex_ref(1), root_ref(2),
                        vertex_ref(12), root_ref(2), root_ref(1), vertex_ref(1),
                        root_ref(2), vertex_ref(2), root_ref(0), root_ref(1)});

  CHECK(tree_of(f, 7) == 1);
  CHECK(tree_of(f, 4) == 2);
  CHECK(tree_of(f, 10) == 0);

  auto kids = children_lists(f);
  CHECK(kids.of_root[0] == std::vector<int>{2, 11});
  CHECK(kids.of_root[2] == std::vector<int>{4, 6, 9});
  CHECK(kids.of_vertex[0] == std::vector<int>{3, 8});
  CHECK(kids.of_vertex[1] == std::vector<int>{10});
}

TEST_CASE("traversal order walks tree by tree, level by level") {
  auto f = phi(worked_sequence());
  auto ord = forest_order(f);
  CHECK(ord.order == std::vector<int>{2, 11, 10, 7, 12, 1, 5, 3, 8, 4, 6, 9});
  CHECK(ord.tree_sizes == std::vector<int>{3, 6, 3});
  CHECK(ord.mu == std::vector<int>{0, 3, 9});
  for (int j = 0; j < f.size(); ++j) {
    CHECK(ord.position[ord.order[j] - 1] == j + 1);
  }
}

TEST_CASE("forest specification equals the sequence specification") {
  auto f = phi(worked_sequence());
  CHECK(forest_specification(f) == specification(worked_sequence()).counts);
}

TEST_CASE("phi_inverse undoes phi") {
  auto f = phi(worked_sequence());
  auto back = phi_inverse(f);
  CHECK(back.spaces == worked_sequence().spaces);
  CHECK(back.entries == worked_sequence().entries);

  auto tf = triplet_forest(f);
  CHECK(tf.pref[1] == 1);    // vertex 2 carries entry 1...
  CHECK(tf.rank[1] == 1);    // ...and sits first in the traversal
  CHECK(tf.pref[3] == 12);   // vertex 4 carries entry 12
  CHECK(tf.rank[3] == 10);
  CHECK(tf.mu == std::vector<int>{0, 3, 9});
  auto back2 = phi_inverse(tf);
  CHECK(back2.entries == worked_sequence().entries);
}

TEST_CASE("phi rejects sequences that do not park completely") {
  CHECK_THROWS_AS(phi(seq({2, 2}, 2)), std::domain_error);
  CHECK_THROWS_AS(phi(seq({3, 3, 3}, 3)), std::domain_error);
}

TEST_CASE("serialization round-trips and is line-exact") {
  auto f = phi(worked_sequence());
  CHECK(serialize_forest(f) ==
        "k 2\nn 12\n"
        "1 7\n2 R0\n3 1\n4 R2\n5 12\n6 R2\n7 R1\n8 1\n9 R2\n10 2\n11 R0\n"
        "12 R1\n");
  CHECK(parse_forest(serialize_forest(f)) == f);
}

TEST_CASE("parse and validate reject malformed forests") {
  CHECK_THROWS_AS(parse_forest("nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(parse_forest("k 0\nn 2\n1 2\n2 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_forest("k 0\nn 1\n1 R1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_forest("k 0\nn 2\n1 R0\n2 3\n"), std::invalid_argument);

  LabeledForest cycle{0, {vertex_ref(2), vertex_ref(1)}};
  CHECK_THROWS_AS(validate_forest(cycle), std::invalid_argument);
  LabeledForest stray{0, {root_ref(1)}};
  CHECK_THROWS_AS(validate_forest(stray), std::invalid_argument);
}

TEST_CASE("all_forests hits the closed count") {
  CHECK(all_forests(1, 0).size() == 1);
  CHECK(all_forests(2, 0).size() == 3);
  CHECK(all_forests(3, 0).size() == 16);
  CHECK(all_forests(2, 1).size() == 8);
  CHECK(all_forests(3, 1).size() == 50);
  CHECK(all_forests(2, 2).size() == 15);

  std::set<std::string> seen;
  for (const auto& f : all_forests(3, 1)) {
    validate_forest(f);
    CHECK(f.size() == 3);
    CHECK(f.extra_roots == 1);
    seen.insert(serialize_forest(f));
  }
  CHECK(seen.size() == 50);
}

TEST_CASE("forests of bounded sequences form a recognizable family") {
  // Image side: bounded by the max entry.
  auto f = phi(worked_sequence());
  CHECK(in_restricted_family(f, 12));
  CHECK_FALSE(in_restricted_family(f, 11));

  // A complete sequence that is not the widening of anything on fewer
  // spaces: the family test must fail it even though its entries are small.
  auto g = phi(seq({1, 1}, 3));
  CHECK_FALSE(in_restricted_family(g, 2));
  CHECK_FALSE(in_restricted_family(g, 3));

  // Over a whole widened class the test recognizes exactly the bound.
  for_each_in_class(make_class_spec(4, 4, 4, 1),
                    [&](const PreferenceSet& pref) {
                      auto wide = embed_with_flaws(pref);
                      auto h = phi(wide);
                      int max_entry = 0;
                      for (int a : pref.entries) max_entry = std::max(max_entry, a);
                      for (int s = 1; s <= 4; ++s) {
                        CHECK(in_restricted_family(h, s) == (max_entry <= s));
                      }
                    });
}
