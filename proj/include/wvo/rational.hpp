#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wvo {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

using Vec = std::vector<Rational>;

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class UnsupportedDimension : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check that the theory guarantees has failed.
/// Seeing one of these means a bug, not bad input.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Matrix column(const Vec& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  std::vector<Vec> row_list() const;
  void append_row(const Vec& r);

  Matrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Vec operator*(const Matrix& a, const Vec& x);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& a);

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Rational& s, const Vec& a);
Rational dot(const Vec& a, const Vec& b);
Vec zeros(std::size_t n);
bool is_zero(const Vec& v);

/// Rank via exact Gaussian elimination.
std::size_t rank(const Matrix& a);

/// Basis of {x : a x = 0}; each basis vector is scaled to a primitive integer vector.
std::vector<Vec> nullspace(const Matrix& a, std::size_t cols);

/// Scales v by a positive factor so that it has coprime integer entries.
Vec primitive(const Vec& v);

/// Outer product u vᵀ.
Matrix outer(const Vec& u, const Vec& v);

void require_dim(const Vec& v, std::size_t n, std::string_view what);

/// Parses "p", "-p/q" or a decimal literal such as "0.25" or "-1.5e-2" into an exact rational.
Rational parse_rational(std::string_view text);
/// Like parse_rational but rejects decimal points and exponents.
Rational parse_exact_rational(std::string_view text);
/// "p" when the denominator is one, "p/q" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const Vec& v);
double to_double(const Rational& r);

}  // namespace wvo
