// Copyright 2026 The Quasi Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QUASI_MATRIX_H_
#define QUASI_MATRIX_H_

#include <complex>
#include <cstddef>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "quasi/errors.h"

namespace quasi {

using Complex = std::complex<double>;

// Row-major dense matrix. Real matrices carry adjacency and weight data;
// complex ones appear only on the Fourier side.
template <typename T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(CheckedSize(rows, cols), fill) {}
  DenseMatrix(int rows, int cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != CheckedSize(rows, cols)) {
      throw ValidationError("matrix data length does not match rows*cols");
    }
  }

  static DenseMatrix Identity(int n) {
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }
  static DenseMatrix Ones(int rows, int cols) {
    return DenseMatrix(rows, cols, T{1});
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(int r, int c) { return data_[Index(r, c)]; }
  const T& operator()(int r, int c) const { return data_[Index(r, c)]; }

  std::span<T> row(int r) {
    return std::span<T>(data_).subspan(Index(r, 0), cols_);
  }
  std::span<const T> row(int r) const {
    return std::span<const T>(data_).subspan(Index(r, 0), cols_);
  }
  const std::vector<T>& data() const { return data_; }

  DenseMatrix Transposed() const {
    DenseMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  DenseMatrix Adjoint() const {
    DenseMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = Conj((*this)(r, c));
    return t;
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  static T Conj(const T& v) {
    if constexpr (std::is_same_v<T, Complex>) {
      return std::conj(v);
    } else {
      return v;
    }
  }
  static std::size_t CheckedSize(int rows, int cols) {
    if (rows < 0 || cols < 0) throw ValidationError("negative matrix size");
    return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  }
  std::size_t Index(int r, int c) const {
    return static_cast<std::size_t>(r) * cols_ + c;
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using Matrix = DenseMatrix<double>;
using CMatrix = DenseMatrix<Complex>;

template <typename T>
DenseMatrix<T> operator*(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  if (a.cols() != b.rows()) throw ValidationError("matrix product shape mismatch");
  DenseMatrix<T> out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const T aik = a(i, k);
      if (aik == T{}) continue;
      for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

template <typename T>
DenseMatrix<T> operator+(DenseMatrix<T> a, const DenseMatrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ValidationError("matrix sum shape mismatch");
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) a(i, j) += b(i, j);
  return a;
}

template <typename T>
DenseMatrix<T> operator-(DenseMatrix<T> a, const DenseMatrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ValidationError("matrix difference shape mismatch");
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) a(i, j) -= b(i, j);
  return a;
}

template <typename T>
DenseMatrix<T> operator*(T s, DenseMatrix<T> a) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) a(i, j) *= s;
  return a;
}

// y = A x
std::vector<double> Apply(const Matrix& a, std::span<const double> x);
// y = A^T x
std::vector<double> ApplyTransposed(const Matrix& a, std::span<const double> x);

double FrobeniusNorm(const Matrix& a);
double MaxAbsEntry(const Matrix& a);
bool IsSymmetric(const Matrix& a, double tol = 0.0);

// Real 2m x 2n embedding [[Re, -Im], [Im, Re]]; its singular values are
// those of the complex matrix, each repeated twice.
Matrix Realify(const CMatrix& a);

}  // namespace quasi

#endif  // QUASI_MATRIX_H_
