#pragma once

#include "flawpark/numeric.hpp"
#include "flawpark/series.hpp"

namespace flawpark {

// Named exponential generating functions for the counting families, with
// counts recovered as n! (sequence_count) or (n-1)! (pointed_count) times an
// x-coefficient.  Multivariate variants attach the class parameters to the
// y, z, v slots; the check_* functions verify the denominator-cleared closed
// forms of the three-variable sums inside a truncation box.

// Complete sequences: n!.[x^n] counts sequences of n entries on n spaces
// that park fully.
MultiSeries series_P(int nx);

// Alternating polynomial companion to series_P of degree m.
MultiSeries series_A(int m, int nx);

// (k+1)-st power of series_P.
MultiSeries series_Q(int k, int nx);

// n!.[x^n] counts flawless sequences of n entries bounded by n-k.  Equals
// series_P * series_A(k) - series_A(k-1).
MultiSeries series_R(int k, int nx);

// Two-variable form of series_R; [y^k] recovers series_R(k).
MultiSeries series_R_xy(int nx, int ny);

// n!.[x^n] counts k-flaw sequences of n entries bounded by n-s.  Product of
// series_Q(k-1) and series_R(s+k).
MultiSeries series_D(int k, int s, int nx);

// Sum of series_D(k,s) y^s z^k over 1<=k<=nz, 0<=s<=ny.
MultiSeries series_D_sum(int nx, int ny, int nz);

// (y - z.series_P) * D == z.series_P * (R(x,y) - R(x,z.series_P)).
bool check_D_xyz(int nx, int ny, int nz);

// x times series_Q(k+1); (n-1)!.[x^n] counts lead-entry-1 sequences of n
// entries on n+k spaces that park fully.
MultiSeries series_I(int k, int nx);

// Two-variable form of series_I; [y^k] recovers series_I(k).
MultiSeries series_I_xy(int nx, int ny);

// (n-1)!.[x^n] counts complete sequences of n entries on n+k spaces whose
// lead entry is n+k-l, valid for n>=l+1; coefficients below x^{l+1} vanish.
MultiSeries series_H(int l, int k, int nx);

// Two-variable form; [y^l] recovers series_H(l,k).
MultiSeries series_H_xy(int k, int nx, int ny);

// Three-variable form; [y^l z^k] recovers series_H(l,k).
MultiSeries series_H_xyz(int nx, int ny, int nz);

// (n-1)!.[x^n] counts lead-entry-1 k-flaw sequences of n entries bounded by
// n-s.  Product of series_R(s+k) and series_I(k-1).
MultiSeries series_M(int s, int k, int nx);

// (y - z.series_P) * M == x.z.series_P^2 * (R(x,y) - R(x,z.series_P)).
bool check_M_xyz(int nx, int ny, int nz);

// (n-1)!.[x^n y^s z^k] counts flawless sequences of n entries with lead
// entry n-s and bound n-k, for 0<=k<=s<=n-1.
MultiSeries series_F_xyz(int nx, int ny, int nz);

// (n-1)!.[x^n] counts k-flaw sequences of n entries with lead entry n-l and
// bound n-s, for l>=s and lead entry >= k; coefficients below x^{k+l}
// vanish.  Built from the l==s base case by stepping l up.
MultiSeries series_W(int k, int s, int l, int nx);

// Sum of series_W(k,s,l) y^l z^s v^k over the box.
MultiSeries series_W_xyzv(int nx, int ny, int nz, int nv);

// Denominator-cleared form of the closed expression for series_W_xyzv.
bool check_W_xyzv(int nx, int ny, int nz, int nv);

// n!.[x^n]; throws std::domain_error when the scaled value is not integral.
BigInt sequence_count(const MultiSeries& series, int n);

// (n-1)!.[x^n] for n>=1; same integrality contract.
BigInt pointed_count(const MultiSeries& series, int n);

// Series of terms with the given degree in one variable, that variable
// removed.
MultiSeries coefficient_slice(const MultiSeries& series, int var, int degree);

}  // namespace flawpark
