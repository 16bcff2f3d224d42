#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyglue/rational.hpp"

namespace polyglue {

/// Dense square matrix over an exact coefficient ring.
template <typename T>
class Matrix {
 public:
  Matrix() : n_(0) {}
  explicit Matrix(int n) : n_(n), data_(static_cast<size_t>(n) * n) {}

  static Matrix identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int size() const { return n_; }

  T& operator()(int i, int j) { return data_[static_cast<size_t>(i) * n_ + j]; }
  const T& operator()(int i, int j) const {
    return data_[static_cast<size_t>(i) * n_ + j];
  }

  bool is_identity() const {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if ((*this)(i, j) != T(i == j ? 1 : 0)) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("Matrix: size mismatch");
    Matrix c(a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int k = 0; k < a.n_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (int j = 0; j < a.n_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("Matrix: size mismatch");
    Matrix c(a.n_);
    for (size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
    return c;
  }

  T trace() const {
    T t{};
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

 private:
  int n_;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;

/// Text format: first line N, then N rows of N entries, each `p/q` or integer.
inline RationalMatrix read_matrix(std::istream& in) {
  int n = 0;
  if (!(in >> n) || n <= 0) throw std::invalid_argument("matrix: bad size line");
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::string tok;
      if (!(in >> tok)) throw std::invalid_argument("matrix: missing entries");
      m(i, j) = Rational::parse(tok);
    }
  return m;
}

inline RationalMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("matrix: cannot open " + path);
  return read_matrix(in);
}

inline void write_matrix(std::ostream& out, const RationalMatrix& m) {
  out << m.size() << "\n";
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) out << (j ? " " : "") << m(i, j).str();
    out << "\n";
  }
}

}  // namespace polyglue
