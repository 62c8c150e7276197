/* Copyright 2026 The Spinsys Authors. All Rights Reserved.
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "spin/errors.hpp"

namespace spin {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major storage. The single carrier type for
/// every concrete matrix in the library.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, cplx(0.0, 0.0)) {}
  CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> data);
  CMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static CMatrix identity(std::size_t d);
  static CMatrix zero(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }
  static CMatrix diagonal(const std::vector<cplx>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<cplx>& data() { return data_; }
  const std::vector<cplx>& data() const { return data_; }

  CMatrix adjoint() const;
  CMatrix transpose() const;
  CMatrix conjugate() const;

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(cplx s);

  cplx trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  bool all_finite() const;

  CMatrix block(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const;
  void set_block(std::size_t r0, std::size_t c0, const CMatrix& b);

  bool operator==(const CMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(cplx s, const CMatrix& a);
CMatrix operator*(const CMatrix& a, cplx s);
CMatrix operator*(double s, const CMatrix& a);
CMatrix operator*(const CMatrix& a, double s);
CMatrix operator-(const CMatrix& a);

/// Kronecker product; the left factor indexes the blocks.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Hilbert-Schmidt inner product tr(b* a).
cplx hs_inner(const CMatrix& a, const CMatrix& b);

CMatrix direct_sum(const CMatrix& a, const CMatrix& b);

/// Conjugation q* a q.
CMatrix conjugate_by(const CMatrix& a, const CMatrix& q);

/// (P^T a P)(i, j) = a(perm[i], perm[j]); perm maps new index -> old index.
CMatrix permute_conjugate(const CMatrix& a, const std::vector<std::size_t>& perm);

/// Column-stacking vectorisation: out[j*rows + i] = a(i, j).
std::vector<cplx> vec_columns(const CMatrix& a);
CMatrix unvec_columns(const std::vector<cplx>& v, std::size_t rows, std::size_t cols);

namespace detail {
// Reference kernels and their OpenMP counterparts. Both orderings of the
// inner accumulation are identical, so results agree bit for bit; the
// consistency test and the benchmark rely on that.
CMatrix mul_serial(const CMatrix& a, const CMatrix& b);
CMatrix mul_parallel(const CMatrix& a, const CMatrix& b);
CMatrix kron_serial(const CMatrix& a, const CMatrix& b);
CMatrix kron_parallel(const CMatrix& a, const CMatrix& b);
}  // namespace detail

}  // namespace spin
