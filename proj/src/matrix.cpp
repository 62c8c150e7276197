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

#include "spin/matrix.hpp"

#include <cmath>
#include <cstdint>
#include <utility>

#include "spin/parallel.hpp"

namespace spin {

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) {
    throw ShapeMismatch("CMatrix: data length does not match rows*cols");
  }
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeMismatch("CMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

CMatrix CMatrix::identity(std::size_t d) {
  CMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(const std::vector<cplx>& entries) {
  CMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

CMatrix CMatrix::transpose() const {
  CMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

CMatrix CMatrix::conjugate() const {
  CMatrix m(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = std::conj(data_[k]);
  return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("operator+=: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("operator-=: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
  for (auto& x : data_) x *= s;
  return *this;
}

cplx CMatrix::trace() const {
  if (!is_square()) throw ShapeMismatch("trace: matrix not square");
  cplx t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& x : data_) s += std::norm(x);
  return std::sqrt(s);
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& x : data_) m = std::max(m, std::abs(x));
  return m;
}

bool CMatrix::all_finite() const {
  for (const auto& x : data_) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
  }
  return true;
}

CMatrix CMatrix::block(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const {
  if (r0 + h > rows_ || c0 + w > cols_) throw ShapeMismatch("block: out of range");
  CMatrix b(h, w);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < w; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void CMatrix::set_block(std::size_t r0, std::size_t c0, const CMatrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw ShapeMismatch("set_block: out of range");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  CMatrix r = a;
  r += b;
  return r;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  CMatrix r = a;
  r -= b;
  return r;
}

CMatrix operator*(cplx s, const CMatrix& a) {
  CMatrix r = a;
  r *= s;
  return r;
}

CMatrix operator*(const CMatrix& a, cplx s) { return s * a; }
CMatrix operator*(double s, const CMatrix& a) { return cplx(s, 0.0) * a; }
CMatrix operator*(const CMatrix& a, double s) { return cplx(s, 0.0) * a; }
CMatrix operator-(const CMatrix& a) { return cplx(-1.0, 0.0) * a; }

namespace detail {

CMatrix mul_serial(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeMismatch("operator*: inner dimensions differ");
  const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
  CMatrix r(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 0; p < k; ++p) {
      const cplx aip = a(i, p);
      if (aip == cplx(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < m; ++j) r(i, j) += aip * b(p, j);
    }
  }
  return r;
}

CMatrix mul_parallel(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeMismatch("operator*: inner dimensions differ");
  const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
  CMatrix r(n, m);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    for (std::size_t p = 0; p < k; ++p) {
      const cplx aip = a(static_cast<std::size_t>(i), p);
      if (aip == cplx(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < m; ++j)
        r(static_cast<std::size_t>(i), j) += aip * b(p, j);
    }
  }
  return r;
}

CMatrix kron_serial(const CMatrix& a, const CMatrix& b) {
  CMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia)
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const cplx v = a(ia, ja);
      if (v == cplx(0.0, 0.0)) continue;
      for (std::size_t ib = 0; ib < b.rows(); ++ib)
        for (std::size_t jb = 0; jb < b.cols(); ++jb)
          r(ia * b.rows() + ib, ja * b.cols() + jb) = v * b(ib, jb);
    }
  return r;
}

CMatrix kron_parallel(const CMatrix& a, const CMatrix& b) {
  CMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
#pragma omp parallel for schedule(static)
  for (std::int64_t ia = 0; ia < static_cast<std::int64_t>(a.rows()); ++ia)
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const cplx v = a(static_cast<std::size_t>(ia), ja);
      if (v == cplx(0.0, 0.0)) continue;
      for (std::size_t ib = 0; ib < b.rows(); ++ib)
        for (std::size_t jb = 0; jb < b.cols(); ++jb)
          r(static_cast<std::size_t>(ia) * b.rows() + ib, ja * b.cols() + jb) = v * b(ib, jb);
    }
  return r;
}

}  // namespace detail

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  // Dispatch to the parallel kernel when the work amortises the fork.
  const std::size_t flops = a.rows() * a.cols() * b.cols();
  if (parallel_enabled() && flops >= 1u << 16) return detail::mul_parallel(a, b);
  return detail::mul_serial(a, b);
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  const std::size_t work = a.rows() * a.cols() * b.rows() * b.cols();
  if (parallel_enabled() && work >= 1u << 16) return detail::kron_parallel(a, b);
  return detail::kron_serial(a, b);
}

cplx hs_inner(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeMismatch("hs_inner: shape mismatch");
  cplx s = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) s += std::conj(b.data()[k]) * a.data()[k];
  return s;
}

CMatrix direct_sum(const CMatrix& a, const CMatrix& b) {
  CMatrix r(a.rows() + b.rows(), a.cols() + b.cols());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), a.cols(), b);
  return r;
}

CMatrix conjugate_by(const CMatrix& a, const CMatrix& q) { return q.adjoint() * a * q; }

CMatrix permute_conjugate(const CMatrix& a, const std::vector<std::size_t>& perm) {
  if (!a.is_square() || perm.size() != a.rows())
    throw ShapeMismatch("permute_conjugate: size mismatch");
  CMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(perm[i], perm[j]);
  return r;
}

std::vector<cplx> vec_columns(const CMatrix& a) {
  std::vector<cplx> v(a.rows() * a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) v[j * a.rows() + i] = a(i, j);
  return v;
}

CMatrix unvec_columns(const std::vector<cplx>& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw ShapeMismatch("unvec_columns: length mismatch");
  CMatrix a(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) a(i, j) = v[j * rows + i];
  return a;
}

}  // namespace spin
