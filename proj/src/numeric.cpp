#include "flawpark/numeric.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace flawpark {

namespace {
std::mutex cache_mutex;
std::vector<BigInt> factorial_cache{BigInt(1)};
}  // namespace

BigInt factorial(int n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  std::lock_guard<std::mutex> lock(cache_mutex);
  while (static_cast<int>(factorial_cache.size()) <= n) {
    factorial_cache.push_back(factorial_cache.back() *
                              static_cast<int>(factorial_cache.size()));
  }
  return factorial_cache[n];
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (int i = 0; i < k; ++i) {
    result *= n - i;
    result /= i + 1;
  }
  return result;
}

BigInt int_pow(const BigInt& base, int exp) {
  if (exp < 0) throw std::domain_error("int_pow: negative exponent");
  BigInt result = 1;
  BigInt b = base;
  int e = exp;
  while (e > 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

}  // namespace flawpark
