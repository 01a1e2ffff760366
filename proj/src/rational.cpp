#include "wvo/rational.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace wvo {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_dim(rows[i], cols, "matrix row");
    std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * cols));
  }
  return m;
}

Matrix Matrix::column(const Vec& v) {
  Matrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

Vec Matrix::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec Matrix::col(std::size_t j) const {
  Vec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<Vec> Matrix::row_list() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

void Matrix::append_row(const Vec& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  require_dim(r, cols_, "appended row");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& r) { return r == 0; });
}

Vec operator*(const Matrix& a, const Vec& x) {
  require_dim(x, a.cols(), "matrix-vector product");
  Vec out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0 && x[j] != 0) s += a(i, j) * x[j];
    out[i] = s;
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix sum: shapes differ");
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + Rational(-1) * b; }

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = s * a(i, j);
  return out;
}

Vec operator+(const Vec& a, const Vec& b) {
  require_dim(b, a.size(), "vector sum");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec operator-(const Vec& a, const Vec& b) {
  require_dim(b, a.size(), "vector difference");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec operator-(const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

Vec operator*(const Rational& s, const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return out;
}

Rational dot(const Vec& a, const Vec& b) {
  require_dim(b, a.size(), "dot product");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

Vec zeros(std::size_t n) { return Vec(n, Rational(0)); }

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r == 0; });
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const Matrix& a) {
  Matrix m = a;
  return rref(m).size();
}

std::vector<Vec> nullspace(const Matrix& a, std::size_t cols) {
  if (a.rows() == 0) {
    std::vector<Vec> basis;
    for (std::size_t j = 0; j < cols; ++j) {
      Vec e = zeros(cols);
      e[j] = 1;
      basis.push_back(e);
    }
    return basis;
  }
  if (a.cols() != cols) throw DimensionError("nullspace: column count mismatch");
  Matrix m = a;
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v = zeros(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(primitive(v));
  }
  return basis;
}

Vec primitive(const Vec& v) {
  Integer lcm_den = 1;
  for (const auto& x : v) {
    if (x == 0) continue;
    const Integer d = denominator(x);
    lcm_den = lcm_den / boost::multiprecision::gcd(lcm_den, d) * d;
  }
  Integer g = 0;
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i] * Rational(lcm_den);
    if (out[i] != 0) g = boost::multiprecision::gcd(g, Integer(abs(numerator(out[i]))));
  }
  if (g > 1)
    for (auto& x : out) x /= Rational(g);
  return out;
}

Matrix outer(const Vec& u, const Vec& v) {
  Matrix m(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * v[j];
  return m;
}

void require_dim(const Vec& v, std::size_t n, std::string_view what) {
  if (v.size() != n) {
    std::ostringstream os;
    os << what << ": expected dimension " << n << ", got " << v.size();
    throw DimensionError(os.str());
  }
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// GMP reads a leading zero as an octal prefix.
Integer decimal_integer(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  return first == std::string_view::npos ? Integer(0) : Integer(std::string(digits.substr(first)));
}

Rational parse_integer(std::string_view s, std::string_view original) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw Error("malformed rational literal '" + std::string(original) + "'");
  const Integer v = decimal_integer(s);
  return Rational(neg ? Integer(-v) : v);
}

}  // namespace

Rational parse_exact_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_integer(text, text);
  const Rational num = parse_integer(text.substr(0, slash), text);
  const auto den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) throw Error("malformed rational literal '" + std::string(text) + "'");
  const Rational den = parse_integer(den_text, text);
  if (den == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  return num / den;
}

Rational parse_rational(std::string_view text) {
  if (text.find('/') != std::string_view::npos) return parse_exact_rational(text);
  std::string_view mant = text;
  long exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mant = text.substr(0, e);
    const auto exp_text = text.substr(e + 1);
    try {
      exponent = std::stol(std::string(exp_text));
    } catch (const std::exception&) {
      throw Error("malformed exponent in '" + std::string(text) + "'");
    }
  }
  bool neg = false;
  if (!mant.empty() && (mant.front() == '-' || mant.front() == '+')) {
    neg = mant.front() == '-';
    mant.remove_prefix(1);
  }
  std::string digits;
  long frac_digits = 0;
  if (const auto dot_pos = mant.find('.'); dot_pos != std::string_view::npos) {
    digits = std::string(mant.substr(0, dot_pos)) + std::string(mant.substr(dot_pos + 1));
    frac_digits = static_cast<long>(mant.size() - dot_pos - 1);
  } else {
    digits = std::string(mant);
  }
  if (!all_digits(digits)) throw Error("malformed number '" + std::string(text) + "'");
  Rational value{decimal_integer(digits)};
  const long shift = exponent - frac_digits;
  const Rational ten = 10;
  for (long i = 0; i < std::labs(shift); ++i) value = shift > 0 ? value * ten : value / ten;
  return neg ? Rational(-value) : value;
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_string(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace wvo
