#include "flawpark/identities.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "flawpark/formulas.hpp"

namespace flawpark {

namespace {

constexpr int kMaxFlaws = 3;

BigInt cc(int cars, int spaces, int max_pref, int flaws,
          std::optional<int> leading, std::uint64_t budget) {
  return count_class(make_class_spec(cars, spaces, max_pref, flaws, leading),
                     budget);
}

std::string fmt_params(std::initializer_list<std::pair<const char*, int>> ps) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, value] : ps) {
    if (!first) os << ' ';
    os << key << '=' << value;
    first = false;
  }
  return os.str();
}

using Emit = std::function<void(std::string, BigInt, BigInt)>;

void eq_leading_embedded(int max_n, std::uint64_t budget, const Emit& emit) {
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 1; k <= kMaxFlaws; ++k) {
      const BigInt first = cc(n, n + k, n + k, 0, 1, budget);
      for (int l = 2; l <= k + 1; ++l) {
        emit(fmt_params({{"n", n}, {"k", k}, {"l", l}}), first,
             cc(n, n + k, n + k, 0, l, budget));
      }
    }
  }
}

void eq_leading_bounded(int max_n, std::uint64_t budget, const Emit& emit) {
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 2; k <= kMaxFlaws && k <= n; ++k) {
      for (int s = 1; s <= n; ++s) {
        const BigInt first = cc(n, n, s, k, 1, budget);
        for (int l = 2; l <= k && l <= s; ++l) {
          emit(fmt_params({{"n", n}, {"s", s}, {"k", k}, {"l", l}}), first,
               cc(n, n, s, k, l, budget));
        }
      }
    }
  }
}

void flaw_promotion(int max_n, std::uint64_t budget, const Emit& emit) {
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 1; k <= kMaxFlaws; ++k) {
      for (int s = k + 2; s <= n; ++s) {
        emit(fmt_params({{"n", n}, {"s", s}, {"k", k}}),
             cc(n, n, s, k + 1, s, budget), cc(n, n, s, k, 1, budget));
      }
    }
  }
}

void strip_max_leading(int max_n, std::uint64_t budget, const Emit& emit) {
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 0; k <= kMaxFlaws; ++k) {
      for (int s = k + 1; s <= n; ++s) {
        emit(fmt_params({{"n", n}, {"s", s}, {"k", k}}),
             cc(n + 1, n + 1, s, k, s, budget), cc(n, n, s, k, {}, budget));
      }
    }
  }
}

void max_vs_two(int max_n, std::uint64_t budget, const Emit& emit) {
  for (int n = 2; n <= max_n; ++n) {
    emit(fmt_params({{"n", n}}), cc(n, n, n, 1, n, budget),
         cc(n, n, n, 0, 2, budget));
  }
}

void strip_top_space(int max_n, std::uint64_t budget, const Emit& emit) {
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 0; k <= kMaxFlaws; ++k) {
      emit(fmt_params({{"n", n}, {"k", k}}),
           cc(n, n + k, n + k, 0, n + k, budget),
           cc(n - 1, n + k - 1, n + k - 1, 0, {}, budget));
    }
  }
}

void top_pair_gap(int max_n, std::uint64_t budget, const Emit& emit) {
  for (int n = 2; n <= max_n; ++n) {
    emit(fmt_params({{"n", n}}),
         cc(n, n, n, 1, n, budget) - cc(n, n, n, 1, n - 1, budget),
         count_parking(n - 2, n - 2));
  }
}

void append_flaw(int max_n, std::uint64_t budget, const Emit& emit) {
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 1; k <= kMaxFlaws; ++k) {
      for (int s = k + 2; s <= n; ++s) {
        emit(fmt_params({{"n", n}, {"s", s}, {"k", k}}),
             cc(n + 1, n + 1, s, k, 1, budget), cc(n, n, s, k + 1, {}, budget));
      }
    }
  }
}

struct Family {
  const char* name;
  void (*run)(int, std::uint64_t, const Emit&);
};

const Family kFamilies[] = {
    {"eq_leading_embedded", eq_leading_embedded},
    {"eq_leading_bounded", eq_leading_bounded},
    {"flaw_promotion", flaw_promotion},
    {"strip_max_leading", strip_max_leading},
    {"max_vs_two", max_vs_two},
    {"strip_top_space", strip_top_space},
    {"top_pair_gap", top_pair_gap},
    {"append_flaw", append_flaw},
};

}  // namespace

const std::vector<std::string>& identity_families() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& fam : kFamilies) out.emplace_back(fam.name);
    return out;
  }();
  return names;
}

std::vector<IdentityCheckResult> verify_identities(const std::string& family,
                                                   int max_n,
                                                   std::uint64_t budget) {
  std::vector<IdentityCheckResult> results;
  bool found = false;
  for (const auto& fam : kFamilies) {
    if (family != "all" && family != fam.name) continue;
    found = true;
    const Emit emit = [&](std::string params, BigInt lhs, BigInt rhs) {
      IdentityCheckResult r;
      r.identity_id = fam.name;
      r.params = std::move(params);
      r.pass = lhs == rhs;
      r.lhs = std::move(lhs);
      r.rhs = std::move(rhs);
      results.push_back(std::move(r));
    };
    fam.run(max_n, budget, emit);
  }
  if (!found) throw std::invalid_argument("unknown identity family: " + family);
  return results;
}

}  // namespace flawpark
