#pragma once

// Exact rational arithmetic and the small dense linear-algebra kernel used by
// everything else: matrices over Z and Q, kernel bases, and signatures of
// symmetric bilinear forms by congruence diagonalization.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <initializer_list>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "meyer/error.hpp"

namespace meyer {

using BigInt = boost::multiprecision::cpp_int;
/// Always reduced, denominator positive, zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator_of(q) == 1; }

/// "p/q", or "p" when q == 1.
inline std::string to_string(const Rational& q) {
  std::string s = numerator_of(q).str();
  if (denominator_of(q) != 1) s += "/" + denominator_of(q).str();
  return s;
}

inline std::string to_string(const BigInt& n) { return n.str(); }

namespace detail {

inline bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

inline BigInt parse_integer(std::string_view s) {
  if (!is_integer_token(s)) throw Error(Errc::parse, "not an integer: '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return BigInt(std::string(s));
}

}  // namespace detail

/// Accepts "p" or "p/q" with q != 0.
inline Rational parse_rational(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(detail::parse_integer(s));
  BigInt num = detail::parse_integer(s.substr(0, slash));
  std::string_view den_tok = s.substr(slash + 1);
  if (!den_tok.empty() && (den_tok[0] == '-' || den_tok[0] == '+'))
    throw Error(Errc::parse, "signed denominator in '" + std::string(s) + "'");
  BigInt den = detail::parse_integer(den_tok);
  if (den == 0) throw Error(Errc::parse, "zero denominator in '" + std::string(s) + "'");
  return Rational(num, den);
}

/// Dense row-major matrix. Value type; no views or shared storage.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
      throw Error(Errc::dimension_mismatch, "entry count " + std::to_string(data_.size()) +
                                                " != rows*cols " + std::to_string(rows_ * cols_));
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error(Errc::dimension_mismatch, "ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const std::vector<T>& entries() const noexcept { return data_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == 0; });
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    Matrix s = a;
    for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
    return s;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    Matrix s = a;
    for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] -= b.data_[i];
    return s;
  }

  friend Matrix operator-(const Matrix& a) {
    Matrix s = a;
    for (auto& x : s.data_) x = -x;
    return s;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw Error(Errc::dimension_mismatch, "product of " + a.shape() + " and " + b.shape());
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
      }
    return p;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  static void require_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw Error(Errc::dimension_mismatch, a.shape() + " vs " + b.shape());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rational>;
using RatVector = std::vector<Rational>;

inline RatMatrix to_rational(const IntMatrix& m) {
  std::vector<Rational> e;
  e.reserve(m.entries().size());
  for (const auto& x : m.entries()) e.emplace_back(x);
  return RatMatrix(m.rows(), m.cols(), std::move(e));
}

/// Fails unless every entry is an integer.
inline IntMatrix to_integer(const RatMatrix& m) {
  std::vector<BigInt> e;
  e.reserve(m.entries().size());
  for (const auto& x : m.entries()) {
    if (!is_integer(x)) throw Error(Errc::invalid_argument, "non-integral entry " + to_string(x));
    e.push_back(numerator_of(x));
  }
  return IntMatrix(m.rows(), m.cols(), std::move(e));
}

/// Horizontal concatenation [a | b].
template <typename T>
Matrix<T> hconcat(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) throw Error(Errc::dimension_mismatch, "hconcat row counts differ");
  Matrix<T> m(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Text format: "rows cols" then row-major entries ("p" or "p/q"), whitespace
// separated. Trailing tokens are an error.

inline RatMatrix parse_matrix(std::istream& in) {
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(std::move(t));
  if (tokens.size() < 2) throw Error(Errc::parse, "matrix text needs a 'rows cols' header");
  auto dim = [&](const std::string& t, const char* what) {
    BigInt v = detail::parse_integer(t);
    if (v < 0 || v > 4096) throw Error(Errc::parse, std::string(what) + " out of range: " + t);
    return static_cast<std::size_t>(v);
  };
  std::size_t rows = dim(tokens[0], "rows");
  std::size_t cols = dim(tokens[1], "cols");
  if (tokens.size() - 2 != rows * cols)
    throw Error(Errc::parse, "expected " + std::to_string(rows * cols) + " entries, got " +
                                 std::to_string(tokens.size() - 2));
  std::vector<Rational> e;
  e.reserve(rows * cols);
  for (std::size_t i = 2; i < tokens.size(); ++i) e.push_back(parse_rational(tokens[i]));
  return RatMatrix(rows, cols, std::move(e));
}

inline RatMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_matrix(in);
}

template <typename T>
std::string format_matrix(const Matrix<T>& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << to_string(m(r, c));
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Row reduction

struct RowEchelon {
  RatMatrix reduced;                  // reduced row echelon form
  std::vector<std::size_t> pivots;    // pivot column of each nonzero row
};

/// Gauss-Jordan elimination over Q, first nonzero entry as pivot.
inline RowEchelon row_reduce(RatMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const RatMatrix& m) { return row_reduce(m).pivots.size(); }

/// Basis of {v : Mv = 0}. One vector per free column of the reduced row
/// echelon form, in increasing column order; the free coordinate is 1, other
/// free coordinates are 0. Output is therefore canonical for a given M.
inline std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  const RowEchelon ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivots) is_pivot[c] = true;

  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Symmetric forms

class SymmetricForm {
 public:
  explicit SymmetricForm(RatMatrix gram) : gram_(std::move(gram)) {
    if (!gram_.is_square()) throw Error(Errc::dimension_mismatch, "Gram matrix " + gram_.shape() + " is not square");
    if (gram_ != gram_.transpose()) throw Error(Errc::invalid_argument, "Gram matrix is not symmetric");
  }

  const RatMatrix& gram() const noexcept { return gram_; }
  std::size_t dim() const noexcept { return gram_.rows(); }

 private:
  RatMatrix gram_;
};

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  long signature() const { return static_cast<long>(positive) - static_cast<long>(negative); }
};

/// Sylvester inertia by symmetric congruence: pivot on the first nonzero
/// diagonal entry; when the remaining diagonal vanishes but some G[i][j] != 0,
/// replace b_i by b_i + b_j, which puts 2 G[i][j] on the diagonal.
inline Inertia inertia(const SymmetricForm& form) {
  RatMatrix g = form.gram();
  const std::size_t n = g.rows();
  Inertia out;

  auto swap_basis = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(g(a, c), g(b, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(g(r, a), g(r, b));
  };
  auto add_basis = [&](std::size_t target, std::size_t src, const Rational& f) {
    for (std::size_t c = 0; c < n; ++c) g(target, c) += f * g(src, c);
    for (std::size_t r = 0; r < n; ++r) g(r, target) += f * g(r, src);
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::optional<std::size_t> diag;
    for (std::size_t i = k; i < n && !diag; ++i)
      if (g(i, i) != 0) diag = i;

    if (!diag) {
      std::optional<std::pair<std::size_t, std::size_t>> off;
      for (std::size_t i = k; i < n && !off; ++i)
        for (std::size_t j = i + 1; j < n && !off; ++j)
          if (g(i, j) != 0) off = std::pair{i, j};
      if (!off) {
        out.zero += n - k;
        break;
      }
      add_basis(off->first, off->second, 1);
      diag = off->first;
    }

    swap_basis(k, *diag);
    const Rational pivot = g(k, k);
    (pivot > 0 ? out.positive : out.negative) += 1;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (g(r, k) == 0) continue;
      add_basis(r, k, -g(r, k) / pivot);
    }
  }
  return out;
}

inline long signature(const SymmetricForm& form) { return inertia(form).signature(); }

/// Bilinear form <u, v> = u^T B v on Q^n, given by its matrix B (not
/// necessarily symmetric on the whole space).
struct BilinearForm {
  RatMatrix matrix;

  Rational operator()(const RatVector& u, const RatVector& v) const {
    Rational s = 0;
    for (std::size_t i = 0; i < matrix.rows(); ++i) {
      if (u[i] == 0) continue;
      Rational row = 0;
      for (std::size_t j = 0; j < matrix.cols(); ++j)
        if (v[j] != 0) row += matrix(i, j) * v[j];
      s += u[i] * row;
    }
    return s;
  }
};

/// Gram matrix of `form` on `basis`. The restriction must be symmetric;
/// AsymmetricGram means the basis does not lie in the subspace on which the
/// form is symmetric.
inline SymmetricForm gram_restrict(const BilinearForm& form, const std::vector<RatVector>& basis) {
  const std::size_t n = basis.size();
  for (const auto& b : basis)
    if (b.size() != form.matrix.rows() || form.matrix.rows() != form.matrix.cols())
      throw Error(Errc::dimension_mismatch, "basis vector of length " + std::to_string(b.size()) +
                                                " for a form on dimension " + std::to_string(form.matrix.rows()));
  RatMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = form(basis[i], basis[j]);
  if (g != g.transpose()) throw Error(Errc::asymmetric_gram, "restricted form is not symmetric on the given basis");
  return SymmetricForm(std::move(g));
}

/// Block diagonal sum of two square matrices.
inline RatMatrix block_diag(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
  return m;
}

}  // namespace meyer
