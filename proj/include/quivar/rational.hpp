#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace quivar {

/// Exact rational scalar. Everything in the coproduct module and the exact
/// membership path is computed over this type; no floating point creeps in.
using Rat = boost::multiprecision::cpp_rational;

/// Exact conversion: every finite double is a dyadic rational.
Rat ratFromDouble(double x);
double ratToDouble(const Rat& x);
std::string ratToString(const Rat& x);

/// Gaussian rational a + b*i, the exact counterpart of std::complex<double>.
struct RatC {
  Rat re, im;

  RatC() = default;
  RatC(Rat r) : re(std::move(r)) {}
  RatC(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  bool isZero() const { return re == 0 && im == 0; }

  friend RatC operator+(const RatC& x, const RatC& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend RatC operator-(const RatC& x, const RatC& y) {
    return {x.re - y.re, x.im - y.im};
  }
  friend RatC operator-(const RatC& x) { return {-x.re, -x.im}; }
  friend RatC operator*(const RatC& x, const RatC& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend RatC operator/(const RatC& x, const RatC& y) {
    Rat n = y.re * y.re + y.im * y.im;
    if (n == 0) throw std::domain_error("division by zero");
    return {(x.re * y.re + x.im * y.im) / n, (x.im * y.re - x.re * y.im) / n};
  }
  friend bool operator==(const RatC& x, const RatC& y) {
    return x.re == y.re && x.im == y.im;
  }
  friend bool operator!=(const RatC& x, const RatC& y) { return !(x == y); }
};

inline bool scalarIsZero(const Rat& x) { return x == 0; }
inline bool scalarIsZero(const RatC& x) { return x.isZero(); }

/// Minimal dense matrix over an exact field. Row-major, sizes fixed at
/// construction. Only the operations the exact paths need.
template <class T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(sizeCheck(rows, cols)) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return a_[index(i, j)]; }
  const T& operator()(int i, int j) const { return a_[index(i, j)]; }

  bool isZero() const {
    for (const T& x : a_)
      if (!scalarIsZero(x)) return false;
    return true;
  }

  friend Mat operator+(const Mat& x, const Mat& y) {
    x.shapeCheck(y);
    Mat out(x.rows_, x.cols_);
    for (std::size_t k = 0; k < x.a_.size(); ++k) out.a_[k] = x.a_[k] + y.a_[k];
    return out;
  }
  friend Mat operator-(const Mat& x, const Mat& y) {
    x.shapeCheck(y);
    Mat out(x.rows_, x.cols_);
    for (std::size_t k = 0; k < x.a_.size(); ++k) out.a_[k] = x.a_[k] - y.a_[k];
    return out;
  }
  friend Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("matrix shape mismatch");
    Mat out(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int k = 0; k < x.cols_; ++k) {
        const T& xik = x(i, k);
        if (scalarIsZero(xik)) continue;
        for (int j = 0; j < y.cols_; ++j) out(i, j) = out(i, j) + xik * y(k, j);
      }
    return out;
  }
  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

 private:
  static std::size_t sizeCheck(int rows, int cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
    return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  }
  std::size_t index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
      throw std::out_of_range("matrix index out of range");
    return static_cast<std::size_t>(i) * cols_ + j;
  }
  void shapeCheck(const Mat& y) const {
    if (rows_ != y.rows_ || cols_ != y.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  int rows_, cols_;
  std::vector<T> a_;
};

using RatMat = Mat<Rat>;
using RatCMat = Mat<RatC>;

/// Rank by fraction-free-ish Gaussian elimination (exact field ops).
template <class T>
int rankOf(Mat<T> m) {
  int rank = 0;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!scalarIsZero(m(i, col))) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    for (int i = row + 1; i < m.rows(); ++i) {
      if (scalarIsZero(m(i, col))) continue;
      T f = m(i, col) / m(row, col);
      for (int j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(row, j);
    }
    ++row;
    ++rank;
  }
  return rank;
}

/// Inverse by Gauss-Jordan; throws std::domain_error on singular input.
template <class T>
Mat<T> inverseOf(Mat<T> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const int n = m.rows();
  Mat<T> inv = Mat<T>::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i)
      if (!scalarIsZero(m(i, col))) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw std::domain_error("singular matrix");
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(m(pivot, j), m(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    T d = m(col, col);
    for (int j = 0; j < n; ++j) {
      m(col, j) = m(col, j) / d;
      inv(col, j) = inv(col, j) / d;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || scalarIsZero(m(i, col))) continue;
      T f = m(i, col);
      for (int j = 0; j < n; ++j) {
        m(i, j) = m(i, j) - f * m(col, j);
        inv(i, j) = inv(i, j) - f * inv(col, j);
      }
    }
  }
  return inv;
}

/// Basis of the right kernel, returned as columns of a cols x k matrix.
template <class T>
Mat<T> nullspaceOf(Mat<T> m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<int> pivotCol;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = -1;
    for (int i = row; i < rows; ++i)
      if (!scalarIsZero(m(i, col))) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int j = 0; j < cols; ++j) std::swap(m(pivot, j), m(row, j));
    T d = m(row, col);
    for (int j = 0; j < cols; ++j) m(row, j) = m(row, j) / d;
    for (int i = 0; i < rows; ++i) {
      if (i == row || scalarIsZero(m(i, col))) continue;
      T f = m(i, col);
      for (int j = 0; j < cols; ++j) m(i, j) = m(i, j) - f * m(row, j);
    }
    pivotCol.push_back(col);
    ++row;
  }
  std::vector<int> freeCols;
  {
    std::size_t p = 0;
    for (int col = 0; col < cols; ++col) {
      if (p < pivotCol.size() && pivotCol[p] == col)
        ++p;
      else
        freeCols.push_back(col);
    }
  }
  Mat<T> basis(cols, static_cast<int>(freeCols.size()));
  for (std::size_t k = 0; k < freeCols.size(); ++k) {
    basis(freeCols[k], static_cast<int>(k)) = T(1);
    for (std::size_t p = 0; p < pivotCol.size(); ++p)
      basis(pivotCol[p], static_cast<int>(k)) = -m(static_cast<int>(p), freeCols[k]);
  }
  return basis;
}

}  // namespace quivar
