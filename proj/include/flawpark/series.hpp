#pragma once

#include <array>
#include <map>

#include "flawpark/numeric.hpp"

namespace flawpark {

// Variable slots for multivariate series.
inline constexpr int kVarX = 0;
inline constexpr int kVarY = 1;
inline constexpr int kVarZ = 2;
inline constexpr int kVarV = 3;
inline constexpr int kVarCount = 4;

using Exponents = std::array<int, kVarCount>;

// Per-variable truncation box, inclusive.  A variable truncated at 0 is
// treated as absent from the series (known exactly, not merely dropped).
using Trunc = std::array<int, kVarCount>;

// Power series with exact rational coefficients, known exactly inside the
// truncation box and unknown outside it.  Asking for a coefficient outside
// the box is an error, not a zero.
class MultiSeries {
 public:
  explicit MultiSeries(Trunc trunc);

  static MultiSeries zero(Trunc trunc);
  static MultiSeries one(Trunc trunc);
  static MultiSeries monomial(Trunc trunc, Exponents exponents,
                              const Rational& coefficient);

  const Trunc& trunc() const { return trunc_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Throws std::out_of_range outside the box.
  Rational coefficient(const Exponents& exponents) const;
  void set_coefficient(const Exponents& exponents, const Rational& value);

  // Shrinking drops terms; growing is allowed only for variables truncated
  // at 0, which the series is exact in by convention.
  MultiSeries with_truncation(Trunc trunc) const;

  MultiSeries& operator+=(const MultiSeries& other);
  MultiSeries& operator-=(const MultiSeries& other);
  MultiSeries& operator*=(const Rational& scalar);
  friend MultiSeries operator+(MultiSeries a, const MultiSeries& b);
  friend MultiSeries operator-(MultiSeries a, const MultiSeries& b);
  friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
  friend MultiSeries operator*(MultiSeries a, const Rational& scalar);
  friend MultiSeries operator-(MultiSeries a);
  friend bool operator==(const MultiSeries& a, const MultiSeries& b);

 private:
  Trunc trunc_;
  std::map<Exponents, Rational> terms_;
};

// exp of a series with zero constant term.
MultiSeries exp_series(const MultiSeries& series);

// Reciprocal of a series with nonzero constant term.
MultiSeries inverse_unit(const MultiSeries& series);

// 1/(1-series) for a series with zero constant term.
MultiSeries geometric(const MultiSeries& series);

// Replaces one variable by an image series with zero constant term; the
// result lives in the image's box.  The image must vanish (within its box)
// at the power just past the source's truncation in that variable, and may
// not be coarser than the source in any other variable the source uses.
MultiSeries substitute(const MultiSeries& series, int var,
                       const MultiSeries& image);

// Quotient of two series.  Cancels the largest common monomial, then the
// denominator must be a unit; otherwise the quotient is not a power series
// and expand() throws std::domain_error.
struct SeriesFraction {
  MultiSeries num;
  MultiSeries den;
  MultiSeries expand() const;
};

}  // namespace flawpark
