#pragma once

#include <string>
#include <vector>

#include "flawpark/enumerate.hpp"

namespace flawpark {

struct IdentityCheckResult {
  std::string identity_id;
  std::string params;
  BigInt lhs;
  BigInt rhs;
  bool pass = false;
};

// Known identity families between class counts:
//   eq_leading_embedded   widened classes share p^1..p^(k+1)
//   eq_leading_bounded    bounded classes share p^1..p^k
//   flaw_promotion        p^s with k+1 flaws = p^1 with k flaws
//   strip_max_leading     p^s with one more car = unrestricted count
//   max_vs_two            p^n one-flaw = p^2 flawless
//   strip_top_space       p^(n+k) widened = one car and one space fewer
//   top_pair_gap          p^n - p^(n-1) one-flaw = shorter flawless count
//   append_flaw           p^1 with one more car = one more flaw
const std::vector<std::string>& identity_families();

// Check one family ("all" for every family) over all in-range parameters with
// cars <= max_n, one result per instance.
std::vector<IdentityCheckResult> verify_identities(
    const std::string& family, int max_n,
    std::uint64_t budget = kDefaultBudget);

}  // namespace flawpark
