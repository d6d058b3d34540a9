#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "flawpark/enumerate.hpp"
#include "flawpark/genfun.hpp"

using namespace flawpark;

namespace {

BigInt cc(int cars, int spaces, int max_pref, int flaws,
          std::optional<int> leading = std::nullopt) {
  return count_class(make_class_spec(cars, spaces, max_pref, flaws, leading));
}

}  // namespace

TEST_CASE("series_P carries the complete-parking counts") {
  auto p = series_P(8);
  CHECK(sequence_count(p, 0) == 1);
  for (int n = 1; n <= 8; ++n) {
    CHECK(sequence_count(p, n) == int_pow(BigInt(n + 1), n - 1));
  }
}

TEST_CASE("series_Q counts complete sequences with surplus spaces") {
  auto q1 = series_Q(1, 5);
  CHECK(sequence_count(q1, 5) == 4802);
  for (int n = 0; n <= 5; ++n) {
    CHECK(sequence_count(q1, n) == cc(n, n + 1, n + 1, 0));
  }
}

TEST_CASE("series_R counts flawless bounded sequences") {
  auto r1 = series_R(1, 4);
  for (int n = 1; n <= 4; ++n) {
    CHECK(sequence_count(r1, n) == cc(n, n, n - 1, 0));
  }
  CHECK(sequence_count(series_R(0, 4), 4) == cc(4, 4, 4, 0));
}

TEST_CASE("series_D counts flawed bounded sequences") {
  CHECK(sequence_count(series_D(1, 0, 4), 4) == 107);
  for (int k = 1; k <= 2; ++k) {
    for (int s = 0; s <= 1; ++s) {
      auto d = series_D(k, s, 5);
      for (int n = k + s + 1; n <= 5; ++n) {
        CHECK(sequence_count(d, n) == cc(n, n, n - s, k));
      }
    }
  }
}

TEST_CASE("series_I counts lead-entry-1 embedded sequences") {
  CHECK(pointed_count(series_I(0, 3), 2) == 2);
  CHECK(pointed_count(series_I(0, 3), 3) == 8);
  CHECK(pointed_count(series_I(1, 3), 2) == 3);
  for (int k = 0; k <= 2; ++k) {
    auto i = series_I(k, 5);
    for (int n = 1; n <= 5; ++n) {
      CHECK(pointed_count(i, n) == cc(n, n + k, n + k, 0, 1));
    }
  }
}

TEST_CASE("series_H counts embedded sequences by lead gap") {
  CHECK(pointed_count(series_H(0, 3, 4), 2) == 4);
  for (int k = 0; k <= 2; ++k) {
    for (int l = 0; l <= 2; ++l) {
      auto h = series_H(l, k, 5);
      for (int n = 1; n <= 5; ++n) {
        INFO("k=", k, " l=", l, " n=", n);
        const BigInt want = n >= l + 1 ? cc(n, n + k, n + k, 0, n + k - l) : 0;
        CHECK(pointed_count(h, n) == want);
      }
    }
  }
}

TEST_CASE("series_M counts lead-entry-1 bounded sequences") {
  CHECK(pointed_count(series_M(0, 1, 5), 5) == 165);
  for (int k = 1; k <= 2; ++k) {
    for (int s = 0; s <= 1; ++s) {
      auto m = series_M(s, k, 5);
      for (int n = k + s + 1; n <= 5; ++n) {
        CHECK(pointed_count(m, n) == cc(n, n, n - s, k, 1));
      }
    }
  }
}

TEST_CASE("series_W counts bounded sequences by lead gap") {
  auto w = series_W(1, 0, 0, 4);
  CHECK(pointed_count(w, 4) == 34);
  CHECK(pointed_count(series_W(1, 0, 1, 4), 4) == 31);
  CHECK(pointed_count(series_W(1, 0, 2, 4), 4) == 29);
  CHECK(pointed_count(series_W(1, 0, 3, 4), 4) == 13);
  CHECK(pointed_count(series_W(1, 1, 1, 5), 5) == 107);
  CHECK(pointed_count(series_W(1, 1, 2, 5), 5) == 97);

  for (int k = 1; k <= 2; ++k) {
    for (int s = 0; s <= 1; ++s) {
      for (int l = s; l <= 3; ++l) {
        auto wk = series_W(k, s, l, 5);
        for (int n = std::max(k + s + 1, k + l); n <= 5; ++n) {
          INFO("k=", k, " s=", s, " l=", l, " n=", n);
          CHECK(pointed_count(wk, n) == cc(n, n, n - s, k, n - l));
        }
      }
    }
  }
}

TEST_CASE("series_F_xyz slices to lead and bound gaps") {
  auto f = series_F_xyz(5, 3, 3);
  for (int s = 0; s <= 3; ++s) {
    for (int k = 0; k <= s; ++k) {
      auto slice = coefficient_slice(coefficient_slice(f, kVarZ, k), kVarY, s);
      for (int n = s + 1; n <= 5; ++n) {
        CHECK(pointed_count(slice, n) == cc(n, n, n - k, 0, n - s));
      }
    }
  }
  auto base = coefficient_slice(coefficient_slice(f, kVarZ, 0), kVarY, 0);
  CHECK(pointed_count(base, 2) == 1);
}

TEST_CASE("closed forms hold inside a small box") {
  CHECK(check_D_xyz(5, 3, 2));
  CHECK(check_M_xyz(5, 3, 2));
  CHECK(check_W_xyzv(5, 3, 2, 2));
}

TEST_CASE("count extraction enforces integrality and range") {
  auto half = MultiSeries::monomial({2, 0, 0, 0}, {1, 0, 0, 0},
                                    Rational(1) / Rational(2));
  CHECK_THROWS_AS(sequence_count(half, 1), std::domain_error);
  CHECK_THROWS_AS(pointed_count(half, 1), std::domain_error);
  CHECK_THROWS_AS(pointed_count(half, 0), std::domain_error);
  CHECK_THROWS_AS(sequence_count(half, -1), std::domain_error);

  CHECK_THROWS_AS(coefficient_slice(half, 7, 0), std::invalid_argument);
  CHECK_THROWS_AS(coefficient_slice(half, kVarX, 3), std::out_of_range);
}
