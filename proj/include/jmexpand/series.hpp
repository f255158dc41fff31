#pragma once

#include <string>
#include <vector>

#include "jmexpand/exact.hpp"

namespace jmexpand {

/// A power series in z truncated at a fixed order, with exact rational
/// coefficients c[0..order].
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rat& operator[](int i) const {
    return coeffs_[static_cast<std::size_t>(i)];
  }
  Rat& operator[](int i) { return coeffs_[static_cast<std::size_t>(i)]; }
  const std::vector<Rat>& coefficients() const { return coeffs_; }

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const Rat& scalar);

  /// Truncated product.
  friend TruncatedSeries operator*(const TruncatedSeries& lhs,
                                   const TruncatedSeries& rhs);

  /// Multiplication by z^shift (coefficients beyond the order are dropped).
  TruncatedSeries shifted(int shift) const;

 private:
  std::vector<Rat> coeffs_;
};

TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs);

/// A rational function of z given by integer numerator and denominator
/// coefficient sequences; expandable at z = 0 when the denominator has a
/// nonzero constant term.
struct RationalFunctionZ {
  std::vector<Int> numerator;
  std::vector<Int> denominator;

  RationalFunctionZ(std::vector<Int> num, std::vector<Int> den);

  TruncatedSeries expand(int order) const;
};

/// Human-readable polynomial text, e.g. "5*z^3 + 70*z^5".
std::string series_to_text(const TruncatedSeries& series);

/// Generating series of the coefficients of a single cycle (n >= 2):
/// Cat_{n-1} z^{n-1} / prod_{j=1}^{n-1} (1 - j^2 z^2).
TruncatedSeries cycle_series(int n, int order);

/// Series of the hook (n-1, 1) for the class-sum coefficients (n >= 3):
/// ((n-1) Cat_{n-1} z^n + (1 - (n-1)^2 z^2) Cat_{n-2} z^{n-2}) over the same
/// denominator as cycle_series(n).
TruncatedSeries hook_series(int n, int order);

/// Series of the hook (n-1, 1) for the stripped-ones coefficients (n >= 2):
/// (n-1) Cat_{n-1} z^n over the cycle_series(n) denominator.
TruncatedSeries hook_c_series(int n, int order);

enum class SolvedShape { CycleOneOne, CycleTwo };
SolvedShape parse_solved_shape(const std::string& name);

/// Solved forms of the linear system tying the shapes (n-2, 1, 1) and
/// (n-2, 2) to cycle and hook series (stripped-ones coefficients, n >= 4).
TruncatedSeries solved_F_series(SolvedShape shape, int n, int order);

}  // namespace jmexpand
