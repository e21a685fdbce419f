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

// Dense exact linear algebra over the rationals: vectors, matrices and
// subspaces kept in reduced row echelon form.

#ifndef PARCROSS_LINALG_HPP
#define PARCROSS_LINALG_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace parcross {

using Rational = mpq_class;
using Vec = std::vector<Rational>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& c, const Vec& v);
// y += c * x
void axpy(Vec& y, const Rational& c, const Vec& x);

/// "p/q" or "p"; throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);
std::string format_vec(const Vec& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::size_t cols, const std::vector<Vec>& rows);
  static Matrix from_columns(std::size_t rows, const std::vector<Vec>& cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Vec row(std::size_t i) const;
  Vec column(std::size_t j) const;
  void set_column(std::size_t j, const Vec& v);

  Vec apply(const Vec& x) const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix transpose() const;
  bool operator==(const Matrix& rhs) const = default;

  std::size_t rank() const;
  /// Basis of {x : Mx = 0}.
  std::vector<Vec> nullspace() const;
  /// Some x with Mx = b, or nullopt if inconsistent.
  std::optional<Vec> solve(const Vec& b) const;
  std::optional<Matrix> inverse() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduces m in place to reduced row echelon form, drops zero rows and
/// returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);

/// A linear subspace of Q^n. The basis is kept in reduced row echelon form,
/// so equal subspaces compare equal.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vs);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vec>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Adds v to the span; returns true if the dimension grew.
  bool insert(const Vec& v);

  /// v minus its component along the pivots; zero iff v is a member.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  std::optional<Vec> coordinates(const Vec& v) const;
  Vec from_coordinates(const Vec& coords) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  /// Indices of the standard basis vectors complementing this subspace.
  std::vector<std::size_t> complement_indices() const;

  bool operator==(const Subspace& rhs) const = default;

 private:
  void check_len(const Vec& v) const;

  std::size_t ambient_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace parcross

#endif  // PARCROSS_LINALG_HPP
