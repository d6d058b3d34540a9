#include "flawpark/formulas.hpp"

#include <stdexcept>

namespace flawpark {

namespace {

// p_{a,b;<=b}: a cars park completely on b spaces.
BigInt p_full(int a, int b) { return count_parking(a, b); }

// p_{c;<=i}: c cars on c spaces, entries <= i, none unparked.
BigInt p_bounded(int c, int i, std::uint64_t budget) {
  return count_class(make_class_spec(c, {}, i, 0), budget);
}

// p^l_{c;<=i}: as above with a fixed leading entry.
BigInt p_bounded_lead(int c, int i, int l, std::uint64_t budget) {
  return count_class(make_class_spec(c, {}, i, 0, l), budget);
}

// p^l_{c;<=i;k}: bounded class with k cars unparked and a fixed leading entry.
BigInt p_flawed_lead(int c, int i, int k, int l, std::uint64_t budget) {
  return count_class(make_class_spec(c, {}, i, k, l), budget);
}

}  // namespace

BigInt count_parking(int cars, int spaces) {
  if (cars < 0 || spaces < 0)
    throw std::domain_error("count_parking: negative argument");
  if (cars > spaces) throw std::domain_error("count_parking: cars > spaces");
  if (cars == 0) return 1;
  return (spaces + 1 - cars) * int_pow(spaces + 1, cars - 1);
}

BigInt count_by_last_empty(int cars, int max_pref, int flaws,
                           std::uint64_t budget) {
  const int n = cars;
  const int s = max_pref;
  const int k = flaws;
  if (!(1 <= s && s <= n && 1 <= k && k <= s - 1))
    throw std::domain_error("count_by_last_empty: parameters out of range");
  BigInt total = 0;
  for (int i = 1; i <= s - k; ++i) {
    total += binomial(n, n - s + i + k) * p_full(s - i - k, s - i - 1) *
             p_bounded(n - s + i + k, i, budget);
  }
  return total;
}

BigInt leading_one_embedded(int cars, int flaws) {
  const int n = cars;
  const int k = flaws;
  if (n < 1 || k < 0)
    throw std::domain_error("leading_one_embedded: parameters out of range");
  if (k == 0) return count_parking(n - 1, n);
  BigInt total = 0;
  for (int i = 1; i <= n; ++i) {
    total += binomial(n - 1, i - 1) * leading_one_embedded(i, k - 1) *
             count_parking(n - i, n - i);
  }
  return total;
}

BigInt lead_replace_count(int cars, int flaws, int leading) {
  const int n = cars;
  const int k = flaws;
  const int l = leading;
  if (!(n >= 1 && k >= 0 && k + 1 <= l && l <= n + k))
    throw std::domain_error("lead_replace_count: parameters out of range");
  return binomial(n - 1, l - k - 1) * p_full(l - k - 1, l - 1) *
         count_parking(n + k - l, n + k - l);
}

BigInt leading_delta_embedded(int cars, int flaws, int leading) {
  if (leading > cars + flaws - 1)
    throw std::domain_error("leading_delta_embedded: leading too large");
  return lead_replace_count(cars, flaws, leading);
}

BigInt leading_one_bounded(int cars, int max_pref, int flaws,
                           std::uint64_t budget) {
  const int n = cars;
  const int s = max_pref;
  const int k = flaws;
  if (!(k >= 1 && k + 1 <= s && s <= n))
    throw std::domain_error("leading_one_bounded: parameters out of range");
  BigInt total = 0;
  for (int i = 1; i <= s - k - 1; ++i) {
    // p^1 of the shorter full class has k-1 surplus spaces
    total += binomial(n - 1, s - i - k - 1) *
             p_bounded(n + k - s + i, i, budget) *
             leading_one_embedded(s - k - i, k - 1);
  }
  return total;
}

BigInt low_max_empty_count(int cars, int max_pref, int flaws, int leading,
                           std::uint64_t budget) {
  const int n = cars;
  const int s = max_pref;
  const int k = flaws;
  const int l = leading;
  if (!(k >= 1 && k <= l && l <= s - 1 && s <= n))
    throw std::domain_error("low_max_empty_count: parameters out of range");
  BigInt total = 0;
  for (int i = k - 1; i <= l - 2; ++i) {
    total += binomial(n - 1, i + 1 - k) * p_full(i + 1 - k, i) *
             p_bounded_lead(n + k - i - 1, s - i - 1, l - i - 1, budget);
  }
  return total;
}

BigInt leading_delta_bounded(int cars, int max_pref, int flaws, int leading,
                             std::uint64_t budget) {
  const int n = cars;
  const int s = max_pref;
  const int k = flaws;
  const int l = leading;
  if (!(k >= 1 && k <= l && l <= s - 1 && s <= n))
    throw std::domain_error("leading_delta_bounded: parameters out of range");
  BigInt total = 0;
  for (int i = k - 1; i <= l - 2; ++i) {
    total += binomial(n - 1, i - k + 1) * p_full(i - k + 1, i) *
             (p_bounded_lead(n + k - i - 1, s - i - 1, l - i, budget) -
              p_bounded_lead(n + k - i - 1, s - i - 1, l - i - 1, budget));
  }
  total += binomial(n - 1, l - k) * p_full(l - k, l - 1) *
           (p_bounded_lead(n + k - l, s - l, 1, budget) -
            p_flawed_lead(n + k - l, s - l, 1, s - l, budget));
  return total;
}

BigInt lead_replace_count_bounded(int cars, int max_pref, int flaws,
                                  int leading, std::uint64_t budget) {
  const int n = cars;
  const int s = max_pref;
  const int k = flaws;
  const int l = leading;
  if (!(k >= 1 && k + 1 <= l && l <= s - 2))
    throw std::domain_error(
        "lead_replace_count_bounded: parameters out of range");
  return binomial(n - 1, l - k) * p_full(l - k, l - 1) *
         p_flawed_lead(n + k - l, s - l, 1, s - l, budget);
}

}  // namespace flawpark
