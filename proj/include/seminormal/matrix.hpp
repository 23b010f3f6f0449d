#pragma once

#include <cassert>
#include <vector>

namespace seminormal {

/// Dense square-ish matrix over an exact coefficient field (Rational or
/// RatFunc). Column j holds the action on basis vector j.
template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static Matrix identity(int n, const T& one) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& at(int i, int j) {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }
  const T& at(int i, int j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  Matrix operator*(const Matrix& o) const {
    assert(cols_ == o.rows_);
    Matrix out(rows_, o.cols_);
    const T zero{};
    for (int i = 0; i < rows_; ++i) {
      for (int k = 0; k < cols_; ++k) {
        const T& x = at(i, k);
        if (x == zero) continue; // generator matrices are sparse
        for (int j = 0; j < o.cols_; ++j) {
          const T& y = o.at(k, j);
          if (y == zero) continue;
          out.at(i, j) += x * y;
        }
      }
    }
    return out;
  }

  Matrix operator+(const Matrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
    return out;
  }

  Matrix operator-(const Matrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
    return out;
  }

  Matrix scaled(const T& c) const {
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * c;
    return out;
  }

  T trace() const {
    assert(rows_ == cols_);
    T acc{};
    for (int i = 0; i < rows_; ++i) acc += at(i, i);
    return acc;
  }

  bool is_diagonal() const {
    const T zero{};
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (i != j && !(at(i, j) == zero)) return false;
    return true;
  }

  bool is_zero() const {
    const T zero{};
    for (const T& v : a_)
      if (!(v == zero)) return false;
    return true;
  }

  template <class F>
  auto map(F&& f) const {
    using U = decltype(f(std::declval<const T&>()));
    Matrix<U> out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out.at(i, j) = f(at(i, j));
    return out;
  }

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> a_;
};

} // namespace seminormal
