#include "jmexpand/series.hpp"

#include <algorithm>

#include "jmexpand/dyck.hpp"
#include "jmexpand/errors.hpp"

namespace jmexpand {

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) throw InvalidInputError("negative truncation order");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rat(0));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  if (other.order() != order()) {
    throw InvalidInputError("truncation order mismatch");
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] += other.coeffs_[i];
  }
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rat& scalar) {
  for (Rat& c : coeffs_) c *= scalar;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& lhs,
                          const TruncatedSeries& rhs) {
  if (lhs.order() != rhs.order()) {
    throw InvalidInputError("truncation order mismatch");
  }
  TruncatedSeries out(lhs.order());
  for (int i = 0; i <= lhs.order(); ++i) {
    if (lhs[i] == 0) continue;
    for (int j = 0; i + j <= lhs.order(); ++j) {
      out[i + j] += lhs[i] * rhs[j];
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::shifted(int shift) const {
  if (shift < 0) throw InvalidInputError("negative shift");
  TruncatedSeries out(order());
  for (int i = 0; i + shift <= order(); ++i) out[i + shift] = (*this)[i];
  return out;
}

TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) {
  lhs += rhs;
  return lhs;
}

RationalFunctionZ::RationalFunctionZ(std::vector<Int> num,
                                     std::vector<Int> den)
    : numerator(std::move(num)), denominator(std::move(den)) {
  if (denominator.empty() || denominator.front() == 0) {
    throw InvalidInputError(
        "denominator must have a nonzero constant term");
  }
}

TruncatedSeries RationalFunctionZ::expand(int order) const {
  TruncatedSeries out(order);
  Rat lead(denominator.front());
  for (int i = 0; i <= order; ++i) {
    Rat value(0);
    if (i < static_cast<int>(numerator.size())) {
      value = Rat(numerator[static_cast<std::size_t>(i)]);
    }
    int reach = std::min<int>(i, static_cast<int>(denominator.size()) - 1);
    for (int j = 1; j <= reach; ++j) {
      value -= Rat(denominator[static_cast<std::size_t>(j)]) * out[i - j];
    }
    out[i] = value / lead;
  }
  return out;
}

std::string series_to_text(const TruncatedSeries& series) {
  std::string text;
  for (int i = 0; i <= series.order(); ++i) {
    if (series[i] == 0) continue;
    if (!text.empty()) text += " + ";
    text += to_decimal(series[i]);
    if (i > 0) text += "*z^" + std::to_string(i);
  }
  return text.empty() ? "0" : text;
}

namespace {

/// prod_{j=1}^{m} (1 - j^2 z^2) as integer polynomial coefficients.
std::vector<Int> square_denominator(int m) {
  std::vector<Int> poly{Int(1)};
  for (int j = 1; j <= m; ++j) {
    std::vector<Int> next(poly.size() + 2, Int(0));
    Int jj = Int(j) * j;
    for (std::size_t t = 0; t < poly.size(); ++t) {
      next[t] += poly[t];
      next[t + 2] -= jj * poly[t];
    }
    poly = std::move(next);
  }
  return poly;
}

std::vector<Int> monomial(int degree, Int coefficient) {
  std::vector<Int> poly(static_cast<std::size_t>(degree) + 1, Int(0));
  poly.back() = std::move(coefficient);
  return poly;
}

/// 1 / (1 - z^2) truncated.
TruncatedSeries geometric_even(int order) {
  return RationalFunctionZ({Int(1)}, {Int(1), Int(0), Int(-1)}).expand(order);
}

}  // namespace

TruncatedSeries cycle_series(int n, int order) {
  if (n < 2) throw InvalidInputError("cycle series needs n >= 2");
  return RationalFunctionZ(monomial(n - 1, catalan(n - 1)),
                           square_denominator(n - 1))
      .expand(order);
}

TruncatedSeries hook_series(int n, int order) {
  if (n < 3) throw InvalidInputError("hook series needs n >= 3");
  std::vector<Int> num(static_cast<std::size_t>(n) + 1, Int(0));
  num[static_cast<std::size_t>(n)] = Int(n - 1) * catalan(n - 1);
  num[static_cast<std::size_t>(n - 2)] += catalan(n - 2);
  num[static_cast<std::size_t>(n)] -= Int(n - 1) * (n - 1) * catalan(n - 2);
  return RationalFunctionZ(std::move(num), square_denominator(n - 1))
      .expand(order);
}

TruncatedSeries hook_c_series(int n, int order) {
  if (n < 2) throw InvalidInputError("hook series needs n >= 2");
  return RationalFunctionZ(monomial(n, Int(n - 1) * catalan(n - 1)),
                           square_denominator(n - 1))
      .expand(order);
}

SolvedShape parse_solved_shape(const std::string& name) {
  if (name == "F211") return SolvedShape::CycleOneOne;
  if (name == "F22") return SolvedShape::CycleTwo;
  throw InvalidInputError("unknown solved series shape: '" + name + "'");
}

TruncatedSeries solved_F_series(SolvedShape shape, int n, int order) {
  if (n < 4) throw InvalidInputError("solved series need n >= 4");
  TruncatedSeries f_n = cycle_series(n, order);
  TruncatedSeries f_n2 = cycle_series(n - 2, order);
  TruncatedSeries hook_n = hook_c_series(n, order);
  TruncatedSeries hook_n1 = hook_c_series(n - 1, order);

  // (n-2,2) solved out of the two coupled one-part-peeling relations
  TruncatedSeries numerator(order);
  {
    TruncatedSeries inner = f_n;
    inner *= Rat(n - 2);
    TruncatedSeries twice_hook = hook_n1;
    twice_hook *= Rat(2);
    inner += twice_hook;
    inner += f_n2;
    numerator += inner.shifted(1);
    TruncatedSeries tail = hook_n;
    tail *= Rat(n - 2);
    numerator += tail.shifted(2);
  }
  TruncatedSeries f22 = numerator * geometric_even(order);
  if (shape == SolvedShape::CycleTwo) return f22;

  // (n-2,1,1) = z * ((n-2) * hook(n) + (n-2,2))
  TruncatedSeries scaled_hook = hook_n;
  scaled_hook *= Rat(n - 2);
  return (scaled_hook + f22).shifted(1);
}

}  // namespace jmexpand
