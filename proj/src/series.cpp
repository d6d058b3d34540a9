#include "flawpark/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace flawpark {

namespace {

const Exponents kOrigin{};

bool inside(const Exponents& e, const Trunc& box) {
  for (int v = 0; v < kVarCount; ++v) {
    if (e[v] < 0 || e[v] > box[v]) return false;
  }
  return true;
}

void require_same_box(const Trunc& a, const Trunc& b, const char* op) {
  if (a != b) {
    throw std::invalid_argument(std::string(op) + ": truncation mismatch");
  }
}

int total_degree(const Exponents& e) {
  int sum = 0;
  for (int v = 0; v < kVarCount; ++v) sum += e[v];
  return sum;
}

// Box lattice points, lowest total degree first.
std::vector<Exponents> graded_box(const Trunc& box) {
  std::vector<Exponents> points;
  Exponents e{};
  while (true) {
    points.push_back(e);
    int v = kVarCount - 1;
    while (v >= 0 && e[v] == box[v]) e[v--] = 0;
    if (v < 0) break;
    ++e[v];
  }
  std::stable_sort(points.begin(), points.end(),
                   [](const Exponents& a, const Exponents& b) {
                     return total_degree(a) < total_degree(b);
                   });
  return points;
}

Exponents minus(const Exponents& a, const Exponents& b) {
  Exponents out;
  for (int v = 0; v < kVarCount; ++v) out[v] = a[v] - b[v];
  return out;
}

bool dominates(const Exponents& a, const Exponents& b) {
  for (int v = 0; v < kVarCount; ++v) {
    if (a[v] < b[v]) return false;
  }
  return true;
}

}  // namespace

MultiSeries::MultiSeries(Trunc trunc) : trunc_(trunc) {
  for (int v = 0; v < kVarCount; ++v) {
    if (trunc_[v] < 0) {
      throw std::invalid_argument("series: negative truncation");
    }
  }
}

MultiSeries MultiSeries::zero(Trunc trunc) { return MultiSeries(trunc); }

MultiSeries MultiSeries::one(Trunc trunc) {
  MultiSeries out(trunc);
  out.terms_[kOrigin] = 1;
  return out;
}

MultiSeries MultiSeries::monomial(Trunc trunc, Exponents exponents,
                                  const Rational& coefficient) {
  MultiSeries out(trunc);
  out.set_coefficient(exponents, coefficient);
  return out;
}

Rational MultiSeries::coefficient(const Exponents& exponents) const {
  if (!inside(exponents, trunc_)) {
    throw std::out_of_range("series: coefficient outside the truncation box");
  }
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiSeries::set_coefficient(const Exponents& exponents,
                                  const Rational& value) {
  if (!inside(exponents, trunc_)) {
    throw std::out_of_range("series: coefficient outside the truncation box");
  }
  if (value == 0) {
    terms_.erase(exponents);
  } else {
    terms_[exponents] = value;
  }
}

MultiSeries MultiSeries::with_truncation(Trunc trunc) const {
  MultiSeries out(trunc);
  for (int v = 0; v < kVarCount; ++v) {
    if (trunc[v] > trunc_[v] && trunc_[v] != 0) {
      throw std::invalid_argument(
          "series: cannot grow the box of a truncated variable");
    }
  }
  for (const auto& [e, c] : terms_) {
    if (inside(e, trunc)) out.terms_[e] = c;
  }
  return out;
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& other) {
  require_same_box(trunc_, other.trunc_, "series add");
  for (const auto& [e, c] : other.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MultiSeries& MultiSeries::operator-=(const MultiSeries& other) {
  require_same_box(trunc_, other.trunc_, "series subtract");
  for (const auto& [e, c] : other.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = -c;
    } else {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MultiSeries& MultiSeries::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& [e, c] : terms_) c *= scalar;
  }
  return *this;
}

MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }

MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
  require_same_box(a.trunc_, b.trunc_, "series multiply");
  MultiSeries out(a.trunc_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      bool keep = true;
      for (int v = 0; v < kVarCount; ++v) {
        e[v] = ea[v] + eb[v];
        if (e[v] > a.trunc_[v]) {
          keep = false;
          break;
        }
      }
      if (!keep) continue;
      auto it = out.terms_.find(e);
      if (it == out.terms_.end()) {
        out.terms_[e] = ca * cb;
      } else {
        it->second += ca * cb;
      }
    }
  }
  for (auto it = out.terms_.begin(); it != out.terms_.end();) {
    it = it->second == 0 ? out.terms_.erase(it) : std::next(it);
  }
  return out;
}

MultiSeries operator*(MultiSeries a, const Rational& scalar) {
  return a *= scalar;
}

MultiSeries operator-(MultiSeries a) { return a *= Rational(-1); }

bool operator==(const MultiSeries& a, const MultiSeries& b) {
  return a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
}

MultiSeries exp_series(const MultiSeries& series) {
  if (series.coefficient(kOrigin) != 0) {
    throw std::invalid_argument("exp_series: nonzero constant term");
  }
  MultiSeries out = MultiSeries::one(series.trunc());
  for (const Exponents& e : graded_box(series.trunc())) {
    int degree = total_degree(e);
    if (degree == 0) continue;
    Rational sum = 0;
    for (const auto& [f, c] : series.terms()) {
      if (!dominates(e, f)) continue;
      Rational lower = out.coefficient(minus(e, f));
      if (lower != 0) sum += Rational(total_degree(f)) * c * lower;
    }
    out.set_coefficient(e, sum / degree);
  }
  return out;
}

MultiSeries inverse_unit(const MultiSeries& series) {
  Rational unit = series.coefficient(kOrigin);
  if (unit == 0) {
    throw std::invalid_argument("inverse_unit: zero constant term");
  }
  MultiSeries out = MultiSeries::zero(series.trunc());
  out.set_coefficient(kOrigin, Rational(1) / unit);
  for (const Exponents& e : graded_box(series.trunc())) {
    if (total_degree(e) == 0) continue;
    Rational sum = 0;
    for (const auto& [f, c] : series.terms()) {
      if (total_degree(f) == 0 || !dominates(e, f)) continue;
      Rational lower = out.coefficient(minus(e, f));
      if (lower != 0) sum += c * lower;
    }
    out.set_coefficient(e, -sum / unit);
  }
  return out;
}

MultiSeries geometric(const MultiSeries& series) {
  if (series.coefficient(kOrigin) != 0) {
    throw std::invalid_argument("geometric: nonzero constant term");
  }
  return inverse_unit(MultiSeries::one(series.trunc()) - series);
}

MultiSeries substitute(const MultiSeries& series, int var,
                       const MultiSeries& image) {
  if (var < 0 || var >= kVarCount) {
    throw std::invalid_argument("substitute: bad variable");
  }
  if (image.coefficient(kOrigin) != 0) {
    throw std::invalid_argument("substitute: image needs zero constant term");
  }
  const Trunc& sbox = series.trunc();
  const Trunc& rbox = image.trunc();
  for (int w = 0; w < kVarCount; ++w) {
    if (w != var && sbox[w] != 0 && rbox[w] > sbox[w]) {
      throw std::invalid_argument("substitute: image box exceeds source box");
    }
  }
  std::vector<MultiSeries> powers{MultiSeries::one(rbox)};
  for (int j = 1; j <= sbox[var]; ++j) {
    powers.push_back(powers.back() * image);
  }
  if (sbox[var] >= 1 && !(powers.back() * image).is_zero()) {
    throw std::invalid_argument(
        "substitute: source truncation too shallow for this image");
  }
  MultiSeries out = MultiSeries::zero(rbox);
  for (const auto& [e, c] : series.terms()) {
    for (const auto& [f, fc] : powers[e[var]].terms()) {
      Exponents g = f;
      bool keep = true;
      for (int w = 0; w < kVarCount; ++w) {
        if (w == var) continue;
        g[w] += e[w];
        if (g[w] > rbox[w]) {
          keep = false;
          break;
        }
      }
      if (keep) out.set_coefficient(g, out.coefficient(g) + c * fc);
    }
  }
  return out;
}

MultiSeries SeriesFraction::expand() const {
  require_same_box(num.trunc(), den.trunc(), "fraction");
  if (den.is_zero()) {
    throw std::domain_error("fraction: zero denominator");
  }
  Exponents shift = den.terms().begin()->first;
  for (const auto& [e, c] : den.terms()) {
    for (int v = 0; v < kVarCount; ++v) shift[v] = std::min(shift[v], e[v]);
  }
  for (const auto& [e, c] : num.terms()) {
    for (int v = 0; v < kVarCount; ++v) shift[v] = std::min(shift[v], e[v]);
  }
  Trunc reduced;
  for (int v = 0; v < kVarCount; ++v) reduced[v] = num.trunc()[v] - shift[v];
  MultiSeries a = MultiSeries::zero(reduced);
  MultiSeries b = MultiSeries::zero(reduced);
  for (const auto& [e, c] : num.terms()) a.set_coefficient(minus(e, shift), c);
  for (const auto& [e, c] : den.terms()) b.set_coefficient(minus(e, shift), c);
  if (b.coefficient(kOrigin) == 0) {
    throw std::domain_error("fraction: quotient is not a power series");
  }
  return a * inverse_unit(b);
}

}  // namespace flawpark
