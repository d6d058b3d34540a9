#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "flawpark/identities.hpp"

using namespace flawpark;

TEST_CASE("the family catalogue is stable") {
  const auto& families = identity_families();
  CHECK(families == std::vector<std::string>{
                        "eq_leading_embedded", "eq_leading_bounded",
                        "flaw_promotion", "strip_max_leading", "max_vs_two",
                        "strip_top_space", "top_pair_gap", "append_flaw"});
}

TEST_CASE("every family verifies over small classes") {
  for (const auto& family : identity_families()) {
    auto results = verify_identities(family, 5);
    CHECK(!results.empty());
    for (const auto& r : results) {
      INFO(r.identity_id, " ", r.params);
      CHECK(r.pass);
      CHECK(r.lhs == r.rhs);
    }
  }
}

TEST_CASE("running all families at once concatenates them in order") {
  auto all = verify_identities("all", 4);
  auto separate_total = 0u;
  for (const auto& family : identity_families()) {
    separate_total += verify_identities(family, 4).size();
  }
  CHECK(all.size() == separate_total);
  CHECK(all.front().identity_id == "eq_leading_embedded");
  CHECK(all.back().identity_id == "append_flaw");
}

TEST_CASE("spot values land where expected") {
  auto top = verify_identities("max_vs_two", 4);
  REQUIRE(!top.empty());
  CHECK(top.back().params == "n=4");
  CHECK(top.back().lhs == 34);

  auto gap = verify_identities("top_pair_gap", 4);
  REQUIRE(!gap.empty());
  CHECK(gap.back().rhs == 3);
  CHECK(gap.back().pass);

  auto promo = verify_identities("flaw_promotion", 5);
  bool seen = false;
  for (const auto& r : promo) {
    if (r.params == "n=5 s=4 k=1") {
      seen = true;
      CHECK(r.lhs == 23);
      CHECK(r.pass);
    }
  }
  CHECK(seen);
}

TEST_CASE("unknown families are rejected") {
  CHECK_THROWS_AS(verify_identities("no_such_family", 4),
                  std::invalid_argument);
}
