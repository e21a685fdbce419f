/*
 * Copyright 2026 The parcross Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "parcross/linalg.hpp"

#include <algorithm>
#include <regex>
#include <stdexcept>

#include "parcross/error.hpp"

namespace parcross {

Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v = zero_vec(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rational& q) { return sgn(q) == 0; });
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::bad_shape, "vector sum");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::bad_shape, "vector diff");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec operator*(const Rational& c, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

void axpy(Vec& y, const Rational& c, const Vec& x) {
  if (y.size() != x.size()) throw Error(ErrorCode::bad_shape, "axpy");
  if (sgn(c) == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) != 0) y[i] += c * x[i];
  }
}

Rational parse_rational(std::string_view text) {
  static const std::regex pattern(R"([+-]?[0-9]+(/[0-9]+)?)");
  std::string s(text);
  if (!std::regex_match(s, pattern)) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
  if (s.front() == '+') s.erase(0, 1);
  auto slash = s.find('/');
  if (slash != std::string::npos &&
      s.find_first_not_of('0', slash + 1) == std::string::npos) {
    throw std::invalid_argument("zero denominator: '" + s + "'");
  }
  Rational q(s, 10);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

std::string format_vec(const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += format_rational(v[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::bad_shape, "row length");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

Vec Matrix::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec Matrix::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Matrix::set_column(std::size_t j, const Vec& v) {
  if (v.size() != rows_) throw Error(ErrorCode::bad_shape, "column length");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) {
    throw Error(ErrorCode::bad_shape,
                "matrix with " + std::to_string(cols_) +
                    " columns applied to vector of length " +
                    std::to_string(x.size()));
  }
  Vec y = zero_vec(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (sgn(x[j]) == 0) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rational& a = (*this)(i, j);
      if (sgn(a) != 0) y[i] += a * x[j];
    }
  }
  return y;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorCode::bad_shape, "matrix product");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Rational& b = rhs(k, j);
        if (sgn(b) != 0) out(i, j) += a * b;
      }
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix trimmed(r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) trimmed(i, j) = m(i, j);
  m = std::move(trimmed);
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix copy = *this;
  return row_reduce(copy).size();
}

std::vector<Vec> Matrix::nullspace() const {
  Matrix r = *this;
  auto pivots = row_reduce(r);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    Vec x = zero_vec(cols_);
    x[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -r(i, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<Vec> Matrix::solve(const Vec& b) const {
  if (b.size() != rows_) throw Error(ErrorCode::bad_shape, "solve rhs");
  Matrix aug(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_) = b[i];
  }
  auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  Vec x = zero_vec(cols_);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, cols_);
  return x;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const std::size_t n = rows_;
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = row_reduce(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) {
    return std::nullopt;
  }
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

// ---------------------------------------------------------------------------
// Subspace

void Subspace::check_len(const Vec& v) const {
  if (v.size() != ambient_) {
    throw Error(ErrorCode::dim_mismatch,
                "vector of length " + std::to_string(v.size()) +
                    " in ambient dimension " + std::to_string(ambient_));
  }
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& vs) {
  Subspace s(ambient_dim);
  for (const auto& v : vs) s.insert(v);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    s.basis_.push_back(unit_vec(ambient_dim, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Vec Subspace::reduce(const Vec& v) const {
  check_len(v);
  Vec r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Rational c = r[pivots_[i]];
    if (sgn(c) != 0) axpy(r, -c, basis_[i]);
  }
  return r;
}

bool Subspace::insert(const Vec& v) {
  Vec r = reduce(v);
  auto it = std::find_if(r.begin(), r.end(),
                         [](const Rational& q) { return sgn(q) != 0; });
  if (it == r.end()) return false;
  const auto p = static_cast<std::size_t>(it - r.begin());
  Rational inv = 1 / r[p];
  for (auto& q : r) q *= inv;
  for (auto& row : basis_) {
    Rational c = row[p];
    if (sgn(c) != 0) axpy(row, -c, r);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  auto idx = pos - pivots_.begin();
  pivots_.insert(pos, p);
  basis_.insert(basis_.begin() + idx, std::move(r));
  return true;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) {
    throw Error(ErrorCode::dim_mismatch, "subspace inclusion");
  }
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const Vec& v) { return contains(v); });
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) return std::nullopt;
  Vec c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Vec Subspace::from_coordinates(const Vec& coords) const {
  if (coords.size() != basis_.size()) {
    throw Error(ErrorCode::bad_shape, "coordinate vector length");
  }
  Vec v = zero_vec(ambient_);
  for (std::size_t i = 0; i < basis_.size(); ++i) axpy(v, coords[i], basis_[i]);
  return v;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error(ErrorCode::dim_mismatch, "sum");
  Subspace s = *this;
  for (const auto& v : other.basis_) s.insert(v);
  return s;
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) {
    throw Error(ErrorCode::dim_mismatch, "intersect");
  }
  // Kernel of [U^T | -W^T]: each null vector (a, b) gives sum a_i u_i.
  const std::size_t p = basis_.size();
  const std::size_t q = other.basis_.size();
  Matrix m(ambient_, p + q);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t k = 0; k < ambient_; ++k) m(k, i) = basis_[i][k];
  for (std::size_t j = 0; j < q; ++j)
    for (std::size_t k = 0; k < ambient_; ++k) m(k, p + j) = -other.basis_[j][k];
  Subspace out(ambient_);
  for (const auto& n : m.nullspace()) {
    Vec v = zero_vec(ambient_);
    for (std::size_t i = 0; i < p; ++i) axpy(v, n[i], basis_[i]);
    out.insert(v);
  }
  return out;
}

std::vector<std::size_t> Subspace::complement_indices() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < ambient_; ++i) {
    if (k < pivots_.size() && pivots_[k] == i) {
      ++k;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

}  // namespace parcross
