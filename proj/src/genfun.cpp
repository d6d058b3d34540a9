#include "flawpark/genfun.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace flawpark {

namespace {

Trunc box_x(int nx) { return Trunc{nx, 0, 0, 0}; }

MultiSeries mono(const Trunc& box, int ex, int ey, int ez, int ev,
                 const Rational& c = 1) {
  return MultiSeries::monomial(box, Exponents{ex, ey, ez, ev}, c);
}

void require(bool ok, const char* what) {
  if (!ok) throw std::domain_error(what);
}

BigInt complete_count(int n) {
  return n == 0 ? BigInt(1) : int_pow(BigInt(n + 1), n - 1);
}

MultiSeries power(const MultiSeries& base, int exp) {
  MultiSeries out = MultiSeries::one(base.trunc());
  for (int j = 0; j < exp; ++j) out = out * base;
  return out;
}

// [y^sp z^kp] of a three-variable series, as a series in x alone.
MultiSeries slice_yz(const MultiSeries& series, int sp, int kp) {
  return coefficient_slice(coefficient_slice(series, kVarZ, kp), kVarY, sp);
}

const MultiSeries& f_series_cached(int nx, int ny, int nz) {
  static std::map<std::tuple<int, int, int>, MultiSeries> cache;
  static std::mutex guard;
  std::lock_guard<std::mutex> lock(guard);
  auto key = std::make_tuple(nx, ny, nz);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, series_F_xyz(nx, ny, nz)).first;
  }
  return it->second;
}

}  // namespace

MultiSeries series_P(int nx) {
  MultiSeries out = MultiSeries::zero(box_x(nx));
  for (int n = 0; n <= nx; ++n) {
    out.set_coefficient(Exponents{n, 0, 0, 0},
                        Rational(complete_count(n)) / Rational(factorial(n)));
  }
  return out;
}

MultiSeries series_A(int m, int nx) {
  require(m >= 0, "series_A: negative index");
  MultiSeries out = MultiSeries::zero(box_x(nx));
  for (int i = 0; i <= m && i <= nx; ++i) {
    Rational c = Rational(int_pow(BigInt(m + 1 - i), i)) /
                 Rational(factorial(i));
    out.set_coefficient(Exponents{i, 0, 0, 0}, i % 2 ? -c : c);
  }
  return out;
}

MultiSeries series_Q(int k, int nx) {
  require(k >= 0, "series_Q: negative index");
  return power(series_P(nx), k + 1);
}

MultiSeries series_R(int k, int nx) {
  require(k >= 0, "series_R: negative index");
  MultiSeries out = series_P(nx) * series_A(k, nx);
  if (k >= 1) out -= series_A(k - 1, nx);
  return out;
}

MultiSeries series_R_xy(int nx, int ny) {
  Trunc box{nx, ny, 0, 0};
  MultiSeries y = mono(box, 0, 1, 0, 0);
  MultiSeries num = series_P(nx).with_truncation(box) - y;
  MultiSeries den = exp_series(mono(box, 1, 1, 0, 0)) - y;
  return SeriesFraction{num, den}.expand();
}

MultiSeries series_D(int k, int s, int nx) {
  require(k >= 1 && s >= 0, "series_D: bad indices");
  return series_Q(k - 1, nx) * series_R(s + k, nx);
}

MultiSeries series_D_sum(int nx, int ny, int nz) {
  Trunc box{nx, ny, nz, 0};
  MultiSeries out = MultiSeries::zero(box);
  for (int k = 1; k <= nz; ++k) {
    for (int s = 0; s <= ny; ++s) {
      MultiSeries d = series_D(k, s, nx);
      for (const auto& [e, c] : d.terms()) {
        out.set_coefficient(Exponents{e[0], s, k, 0}, c);
      }
    }
  }
  return out;
}

bool check_D_xyz(int nx, int ny, int nz) {
  Trunc box{nx, ny, nz, 0};
  MultiSeries p = series_P(nx).with_truncation(box);
  MultiSeries zp = mono(box, 0, 0, 1, 0) * p;
  MultiSeries lhs = (mono(box, 0, 1, 0, 0) - zp) * series_D_sum(nx, ny, nz);
  MultiSeries r_y = series_R_xy(nx, ny).with_truncation(box);
  Trunc image_box{nx, 0, nz, 0};
  MultiSeries image =
      mono(image_box, 0, 0, 1, 0) * series_P(nx).with_truncation(image_box);
  MultiSeries r_zp =
      substitute(series_R_xy(nx, nz), kVarY, image).with_truncation(box);
  return lhs == zp * (r_y - r_zp);
}

MultiSeries series_I(int k, int nx) {
  require(k >= 0, "series_I: negative index");
  return mono(box_x(nx), 1, 0, 0, 0) * series_Q(k + 1, nx);
}

MultiSeries series_I_xy(int nx, int ny) {
  Trunc box{nx, ny, 0, 0};
  MultiSeries p = series_P(nx).with_truncation(box);
  return mono(box, 1, 0, 0, 0) * p * p *
         geometric(mono(box, 0, 1, 0, 0) * p);
}

MultiSeries series_H(int l, int k, int nx) {
  require(l >= 0 && k >= 0, "series_H: bad indices");
  Trunc box = box_x(nx);
  MultiSeries q = series_Q(k, nx);
  MultiSeries lead = series_I(k, nx);
  MultiSeries out = mono(box, 1, 0, 0, 0) * q;
  for (int j = 1; j <= l; ++j) {
    if (j <= nx) {
      out -= mono(box, j, 0, 0, 0, lead.coefficient(Exponents{j, 0, 0, 0}));
    }
    if (j + 1 <= nx) {
      Rational c = Rational(complete_count(j)) / Rational(factorial(j));
      out += q * mono(box, j + 1, 0, 0, 0, c);
    }
  }
  return out;
}

MultiSeries series_H_xy(int k, int nx, int ny) {
  require(k >= 0, "series_H_xy: negative index");
  Trunc box{nx, ny, 0, 0};
  MultiSeries y = mono(box, 0, 1, 0, 0);
  MultiSeries pxy = substitute(series_P(nx), kVarX, mono(box, 1, 1, 0, 0));
  MultiSeries qx = series_Q(k, nx).with_truncation(box);
  return mono(box, 1, 0, 0, 0) * pxy * (qx - y * power(pxy, k + 1)) *
         geometric(y);
}

MultiSeries series_H_xyz(int nx, int ny, int nz) {
  Trunc box{nx, ny, nz, 0};
  MultiSeries y = mono(box, 0, 1, 0, 0);
  MultiSeries z = mono(box, 0, 0, 1, 0);
  MultiSeries p = series_P(nx).with_truncation(box);
  MultiSeries pxy = substitute(series_P(nx), kVarX, mono(box, 1, 1, 0, 0));
  return mono(box, 1, 0, 0, 0) * pxy * geometric(y) *
         (p * geometric(z * p) - y * pxy * geometric(z * pxy));
}

MultiSeries series_M(int s, int k, int nx) {
  require(k >= 1 && s >= 0, "series_M: bad indices");
  return series_R(s + k, nx) * series_I(k - 1, nx);
}

bool check_M_xyz(int nx, int ny, int nz) {
  Trunc box{nx, ny, nz, 0};
  MultiSeries p = series_P(nx).with_truncation(box);
  MultiSeries zp = mono(box, 0, 0, 1, 0) * p;
  MultiSeries sum = MultiSeries::zero(box);
  for (int k = 1; k <= nz; ++k) {
    for (int s = 0; s <= ny; ++s) {
      MultiSeries m = series_M(s, k, nx);
      for (const auto& [e, c] : m.terms()) {
        sum.set_coefficient(Exponents{e[0], s, k, 0}, c);
      }
    }
  }
  MultiSeries lhs = (mono(box, 0, 1, 0, 0) - zp) * sum;
  MultiSeries r_y = series_R_xy(nx, ny).with_truncation(box);
  Trunc image_box{nx, 0, nz, 0};
  MultiSeries image =
      mono(image_box, 0, 0, 1, 0) * series_P(nx).with_truncation(image_box);
  MultiSeries r_zp =
      substitute(series_R_xy(nx, nz), kVarY, image).with_truncation(box);
  return lhs == mono(box, 1, 0, 0, 0) * zp * p * (r_y - r_zp);
}

MultiSeries series_F_xyz(int nx, int ny, int nz) {
  Trunc box{nx, ny, nz, 0};
  MultiSeries y = mono(box, 0, 1, 0, 0);
  MultiSeries z = mono(box, 0, 0, 1, 0);
  MultiSeries yz = mono(box, 0, 1, 1, 0);
  MultiSeries p = series_P(nx).with_truncation(box);
  MultiSeries pxy = substitute(series_P(nx), kVarX, mono(box, 1, 1, 0, 0));
  MultiSeries pxyz = substitute(series_P(nx), kVarX, mono(box, 1, 1, 1, 0));
  MultiSeries den = exp_series(mono(box, 1, 1, 1, 0)) - z;
  MultiSeries bracket =
      pxy * (p - y * pxy) * geometric(y) -
      z * pxyz * (p - yz * pxyz) * geometric(yz);
  return mono(box, 1, 0, 0, 0) * bracket * inverse_unit(den);
}

MultiSeries series_W(int k, int s, int l, int nx) {
  require(k >= 1 && s >= 0 && l >= s, "series_W: bad indices");
  Trunc box = box_x(nx);
  MultiSeries out = MultiSeries::zero(box);
  if (s == 0) {
    if (k == 1) {
      MultiSeries p = series_P(nx);
      out = mono(box, 1, 0, 0, 0) * (p * p - p);
    } else {
      out = series_M(0, k - 1, nx);
    }
  } else {
    out = mono(box, 1, 0, 0, 0) * series_D(k, s - 1, nx);
  }
  if (l == s) return out;
  const MultiSeries& f = f_series_cached(nx, k + l, s + k);
  MultiSeries m_sk = series_M(s, k, nx);
  MultiSeries d1 = series_D(1, k + s - 1, nx);
  MultiSeries q = series_Q(k - 1, nx);
  for (int step = s + 1; step <= l; ++step) {
    int m = k + step - 1;
    if (m <= nx) {
      out -= mono(box, m, 0, 0, 0, m_sk.coefficient(Exponents{m, 0, 0, 0}));
    }
    MultiSeries bracket = slice_yz(f, m, s + k) - slice_yz(f, m + 1, s + k);
    if (m + 1 <= nx) {
      bracket -=
          mono(box, m + 1, 0, 0, 0, d1.coefficient(Exponents{m, 0, 0, 0}));
    }
    out -= q * bracket;
  }
  return out;
}

MultiSeries series_W_xyzv(int nx, int ny, int nz, int nv) {
  Trunc box{nx, ny, nz, nv};
  MultiSeries out = MultiSeries::zero(box);
  for (int k = 1; k <= nv; ++k) {
    for (int s = 0; s <= nz; ++s) {
      for (int l = s; l <= ny; ++l) {
        MultiSeries w = series_W(k, s, l, nx);
        for (const auto& [e, c] : w.terms()) {
          out.set_coefficient(Exponents{e[0], l, s, k}, c);
        }
      }
    }
  }
  return out;
}

bool check_W_xyzv(int nx, int ny, int nz, int nv) {
  Trunc box{nx, ny, nz, nv};
  MultiSeries y = mono(box, 0, 1, 0, 0);
  MultiSeries v = mono(box, 0, 0, 0, 1);
  MultiSeries p = series_P(nx).with_truncation(box);
  MultiSeries pxy = substitute(series_P(nx), kVarX, mono(box, 1, 1, 0, 0));
  MultiSeries xvp = mono(box, 1, 0, 0, 1) * p;
  MultiSeries vp = v * p;
  MultiSeries vpxy = v * pxy;
  MultiSeries ypxy = y * pxy;
  MultiSeries g = mono(box, 0, 1, 1, 0) - vp;
  MultiSeries gp = mono(box, 0, 1, 1, 0) - vpxy;
  MultiSeries e = y * exp_series(xvp) - vp;
  MultiSeries ep = y * exp_series(mono(box, 1, 0, 0, 1) * pxy) - vpxy;
  MultiSeries r2 = substitute(series_R_xy(nx, nz), kVarY,
                              mono(Trunc{nx, 0, nz, 0}, 0, 0, 1, 0));
  MultiSeries rxyz =
      substitute(r2, kVarX, mono(Trunc{nx, ny, nz, 0}, 1, 1, 0, 0))
          .with_truncation(box);
  // series_F_xyz represents the lead-gap family only where the bound gap
  // stays at or below the lead gap; terms past that carry no counts and
  // must not enter the identity.
  MultiSeries fraw = series_F_xyz(nx, ny, nz).with_truncation(box);
  MultiSeries f = MultiSeries::zero(box);
  for (const auto& [exp, coef] : fraw.terms()) {
    if (exp[2] <= exp[1]) f.set_coefficient(exp, coef);
  }
  // f with z replaced by (v/y).series_P: x^n y^s z^k -> x^n y^(s-k) v^k P^k.
  MultiSeries f_sub = MultiSeries::zero(box);
  for (int k = 0; k <= std::min(nz, nv); ++k) {
    MultiSeries sheet = MultiSeries::zero(box);
    bool any = false;
    for (const auto& [exp, coef] : f.terms()) {
      if (exp[2] != k) continue;
      sheet.set_coefficient(Exponents{exp[0], exp[1] - k, 0, k}, coef);
      any = true;
    }
    if (!any) continue;
    MultiSeries pk = k >= 1 ? series_Q(k - 1, nx).with_truncation(box)
                            : MultiSeries::one(box);
    f_sub = f_sub + sheet * pk;
  }
  MultiSeries w = series_W_xyzv(nx, ny, nz, nv);
  MultiSeries ym1 = y - MultiSeries::one(box);
  MultiSeries lhs = ym1 * g * gp * e * ep * w;
  MultiSeries rhs =
      mono(box, 1, 1, 0, 1) * pxy *
          (e * ep * (ypxy * g - p * gp) * rxyz + gp * ep * p * (ypxy - vp) -
           g * e * ypxy * (ypxy - vpxy)) +
      ym1 * vp * gp * e * ep * (f - f_sub);
  return lhs == rhs;
}

BigInt sequence_count(const MultiSeries& series, int n) {
  require(n >= 0, "sequence_count: negative index");
  Rational value =
      series.coefficient(Exponents{n, 0, 0, 0}) * Rational(factorial(n));
  if (boost::multiprecision::denominator(value) != 1) {
    throw std::domain_error("sequence_count: coefficient is not integral");
  }
  return BigInt(boost::multiprecision::numerator(value));
}

BigInt pointed_count(const MultiSeries& series, int n) {
  require(n >= 1, "pointed_count: index below one");
  Rational value =
      series.coefficient(Exponents{n, 0, 0, 0}) * Rational(factorial(n - 1));
  if (boost::multiprecision::denominator(value) != 1) {
    throw std::domain_error("pointed_count: coefficient is not integral");
  }
  return BigInt(boost::multiprecision::numerator(value));
}

MultiSeries coefficient_slice(const MultiSeries& series, int var, int degree) {
  if (var < 0 || var >= kVarCount) {
    throw std::invalid_argument("coefficient_slice: bad variable");
  }
  if (degree < 0 || degree > series.trunc()[var]) {
    throw std::out_of_range("coefficient_slice: degree outside the box");
  }
  Trunc box = series.trunc();
  box[var] = 0;
  MultiSeries out = MultiSeries::zero(box);
  for (const auto& [e, c] : series.terms()) {
    if (e[var] != degree) continue;
    Exponents stripped = e;
    stripped[var] = 0;
    out.set_coefficient(stripped, c);
  }
  return out;
}

}  // namespace flawpark
