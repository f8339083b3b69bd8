#pragma once

/// \file exact.hpp
/// Exact rational arithmetic: polynomials, rational functions, dense
/// rational matrices, determinants, characteristic polynomials and coronals.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace spectrajoin {

using Int = mpz_class;
using Rat = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational.
Rat parse_rat(const std::string& text);
std::string to_string(const Rat& value);

/// Dense univariate polynomial over Q, coefficient i multiplies x^i.
/// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  Poly(const Rat& constant);  // NOLINT: implicit lift of scalars is intended
  Poly(long constant) : Poly(Rat(constant)) {}  // NOLINT
  Poly(int constant) : Poly(Rat(constant)) {}  // NOLINT

  static Poly x();
  static Poly monomial(const Rat& coeff, std::size_t power);
  /// (x - root)
  static Poly linear_root(const Rat& root);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(std::size_t power) const;
  Rat leading() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }

  Rat operator()(const Rat& at) const;
  double eval(double at) const;

  Poly monic() const;
  Poly derivative() const;
  /// Polynomial long division; throws std::domain_error on a zero divisor.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& other) { return *this = *this + other; }
  Poly& operator-=(const Poly& other) { return *this = *this - other; }
  Poly& operator*=(const Poly& other) { return *this = *this * other; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form, highest power first, e.g. "x^5 - 4x^3".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

/// Monic greatest common divisor (primitive polynomial remainder sequence).
Poly gcd(const Poly& a, const Poly& b);

/// Integer polynomial with the same roots: denominators cleared, content removed,
/// positive leading coefficient.
Poly primitive_part(const Poly& p);

/// Exact interpolation through points with pairwise distinct abscissae.
/// Throws std::invalid_argument on a repeated x or an empty point set.
Poly interpolate(std::span<const std::pair<Rat, Rat>> points);

/// Reduced quotient num/den with den monic.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(Poly num, Poly den);  // NOLINT
  RatFunc(const Poly& p) : RatFunc(p, Poly(1)) {}  // NOLINT

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  /// Value at a point, absent at a pole.
  std::optional<Rat> eval_at(const Rat& at) const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  /// Throws std::domain_error when b is the zero function.
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  Poly num_;
  Poly den_;
};

/// Dense row-major matrix of rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix ones(std::size_t rows, std::size_t cols);
  static ExactMatrix diagonal(std::span<const Rat> values);
  static ExactMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  ExactMatrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;
  ExactMatrix transpose() const;
  Rat trace() const;
  std::vector<Rat> row_sums() const;
  /// Least common multiple of all entry denominators.
  Int common_denominator() const;

  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const Rat& s, const ExactMatrix& m);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

/// s*I - M for square M.
ExactMatrix shifted(const Rat& s, const ExactMatrix& m);

/// Fraction-free Bareiss determinant of an n x n integer matrix (row-major).
/// The argument is consumed as scratch space.
Int bareiss_determinant(std::vector<Int> entries, std::size_t n);

/// Exact determinant via an integer lift and Bareiss elimination.
Rat determinant(const ExactMatrix& m);

/// Solves m * x = rhs exactly; absent when m is singular.
std::optional<std::vector<Rat>> solve(const ExactMatrix& m, std::vector<Rat> rhs);

/// Exact inverse; absent when singular.
std::optional<ExactMatrix> inverse(const ExactMatrix& m);

/// det(xI - M) by evaluation at x = n+1, ..., 2n+1 and interpolation.
Poly charpoly(const ExactMatrix& m);

/// 1^T (xI - M)^{-1} 1 as a reduced rational function.
RatFunc coronal(const ExactMatrix& m);

/// Pointwise coronal 1^T (at*I - M)^{-1} 1; absent when at*I - M is singular.
/// The 0 x 0 matrix has coronal 0.
std::optional<Rat> coronal_at(const ExactMatrix& m, const Rat& at);

enum class SchurPivot { Leading, Trailing };

struct SchurCheck {
  bool pivot_invertible = false;  ///< false: identity not applicable for this partition
  bool holds = false;
  Rat det_full;
  Rat det_pivot;
  Rat det_complement;
};

/// Checks det M = det(M / P) det P for the 2 x 2 partition of M at `split`,
/// where P is the leading (A) or trailing (D) diagonal block.
SchurCheck schur_det_check(const ExactMatrix& m, std::size_t split, SchurPivot pivot);

}  // namespace spectrajoin
