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

#include "parcross/algebra.hpp"

#include <random>

#include "parcross/error.hpp"

namespace parcross {

namespace {

SparseVec to_sparse(const Vec& v) {
  SparseVec s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (sgn(v[k]) != 0) s.emplace_back(k, v[k]);
  }
  return s;
}

void accumulate(Vec& acc, const Rational& c, const SparseVec& s) {
  for (const auto& [k, q] : s) acc[k] += c * q;
}

// e_i * v
Vec left_basis_mul(const StructureAlgebra& a, std::size_t i, const Vec& v) {
  Vec out = zero_vec(a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    if (sgn(v[j]) != 0) accumulate(out, v[j], a.product(i, j));
  }
  return out;
}

// v * e_i
Vec right_basis_mul(const StructureAlgebra& a, const Vec& v, std::size_t i) {
  Vec out = zero_vec(a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    if (sgn(v[j]) != 0) accumulate(out, v[j], a.product(j, i));
  }
  return out;
}

bool closed_under_product(const StructureAlgebra& a, const Subspace& x) {
  for (const auto& u : x.basis())
    for (const auto& v : x.basis())
      if (!x.contains(a.multiply(u, v))) return false;
  return true;
}

void require_closed(const StructureAlgebra& a, const Subspace& x) {
  if (x.ambient_dim() != a.dim()) {
    throw Error(ErrorCode::dim_mismatch, "subspace ambient dimension differs from algebra");
  }
  if (!closed_under_product(a, x)) {
    throw Error(ErrorCode::not_closed, "subspace is not closed under multiplication");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// StructureAlgebra

StructureAlgebra StructureAlgebra::from_constants(std::size_t dim,
                                                  const std::vector<Vec>& constants,
                                                  std::optional<Vec> unit) {
  if (constants.size() != dim * dim) {
    throw Error(ErrorCode::bad_shape, "expected " + std::to_string(dim * dim) +
                                          " structure-constant vectors, got " +
                                          std::to_string(constants.size()));
  }
  std::vector<SparseVec> table;
  table.reserve(constants.size());
  for (const auto& v : constants) {
    if (v.size() != dim) {
      throw Error(ErrorCode::bad_shape, "structure-constant vector of wrong length");
    }
    table.push_back(to_sparse(v));
  }
  return from_sparse(dim, std::move(table), std::move(unit));
}

StructureAlgebra StructureAlgebra::from_sparse(std::size_t dim,
                                               std::vector<SparseVec> constants,
                                               std::optional<Vec> unit) {
  if (constants.size() != dim * dim) {
    throw Error(ErrorCode::bad_shape, "structure constants have wrong count");
  }
  for (auto& s : constants) {
    SparseVec cleaned;
    for (auto& [k, q] : s) {
      if (k >= dim) throw Error(ErrorCode::bad_shape, "structure-constant index out of range");
      if (sgn(q) != 0) cleaned.emplace_back(k, q);
    }
    std::sort(cleaned.begin(), cleaned.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    s = std::move(cleaned);
  }
  StructureAlgebra a;
  a.dim_ = dim;
  a.table_ = std::move(constants);
  if (unit) {
    if (unit->size() != dim) throw Error(ErrorCode::bad_shape, "unit has wrong length");
    for (std::size_t i = 0; i < dim; ++i) {
      Vec e = unit_vec(dim, i);
      if (a.multiply(*unit, e) != e || a.multiply(e, *unit) != e) {
        throw Error(ErrorCode::not_unit,
                    "supplied unit fails on basis element " + std::to_string(i));
      }
    }
    a.unit_ = std::move(unit);
  }
  return a;
}

Vec StructureAlgebra::basis_product(std::size_t i, std::size_t j) const {
  Vec v = zero_vec(dim_);
  accumulate(v, 1, product(i, j));
  return v;
}

Vec StructureAlgebra::multiply(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_) {
    throw Error(ErrorCode::bad_shape, "operand length differs from algebra dimension");
  }
  Vec out = zero_vec(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      accumulate(out, x[i] * y[j], product(i, j));
    }
  }
  return out;
}

Matrix StructureAlgebra::left_mult(const Vec& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    m.set_column(j, multiply(x, unit_vec(dim_, j)));
  }
  return m;
}

StructureAlgebra StructureAlgebra::with_associativity(Associativity a) const {
  StructureAlgebra copy = *this;
  copy.assoc_ = a;
  return copy;
}

StructureAlgebra StructureAlgebra::with_unit(std::optional<Vec> unit) const {
  return from_sparse(dim_, table_, std::move(unit)).with_associativity(assoc_);
}

// ---------------------------------------------------------------------------
// Named algebras

StructureAlgebra field_algebra() {
  return StructureAlgebra::from_constants(1, {Vec{1}}, Vec{1})
      .with_associativity(Associativity::verified);
}

StructureAlgebra product_of_fields(std::size_t m) {
  std::vector<SparseVec> t(m * m);
  for (std::size_t i = 0; i < m; ++i) t[i * m + i] = {{i, Rational(1)}};
  return StructureAlgebra::from_sparse(m, std::move(t), Vec(m, Rational(1)))
      .with_associativity(Associativity::verified);
}

StructureAlgebra dual_numbers() {
  std::vector<SparseVec> t(4);
  t[0] = {{0, Rational(1)}};
  t[1] = {{1, Rational(1)}};
  t[2] = {{1, Rational(1)}};
  return StructureAlgebra::from_sparse(2, std::move(t), unit_vec(2, 0))
      .with_associativity(Associativity::verified);
}

StructureAlgebra matrix_algebra(std::size_t n) {
  const std::size_t d = n * n;
  std::vector<SparseVec> t(d * d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        t[(i * n + j) * d + (j * n + l)] = {{i * n + l, Rational(1)}};
  Vec unit = zero_vec(d);
  for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = 1;
  return StructureAlgebra::from_sparse(d, std::move(t), unit)
      .with_associativity(Associativity::verified);
}

StructureAlgebra zero_product_algebra(std::size_t k) {
  std::optional<Vec> unit;
  if (k == 0) unit = Vec{};
  return StructureAlgebra::from_sparse(k, std::vector<SparseVec>(k * k), unit)
      .with_associativity(Associativity::verified);
}

// ---------------------------------------------------------------------------
// Checks and constructions

AssociativityResult check_associative(const StructureAlgebra& a) {
  const std::size_t n = a.dim();
  Vec diff = zero_vec(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        for (const auto& [p, c] : a.product(i, j)) accumulate(diff, c, a.product(p, k));
        for (const auto& [q, d] : a.product(j, k)) accumulate(diff, -d, a.product(i, q));
        bool zero = true;
        for (auto& x : diff) {
          if (sgn(x) != 0) {
            zero = false;
            x = 0;
          }
        }
        if (!zero) return {false, std::array<std::size_t, 3>{i, j, k}};
      }
  return {};
}

StructureAlgebra checked(const StructureAlgebra& a) {
  if (a.associativity() != Associativity::unchecked) return a;
  return a.with_associativity(check_associative(a).associative
                                  ? Associativity::verified
                                  : Associativity::refuted);
}

Subspace ideal_closure(const StructureAlgebra& a, const std::vector<Vec>& generators) {
  Subspace s(a.dim());
  std::vector<Vec> pending;
  for (const auto& g : generators) {
    if (g.size() != a.dim()) throw Error(ErrorCode::bad_shape, "generator length");
    if (s.insert(g)) pending.push_back(g);
  }
  for (std::size_t idx = 0; idx < pending.size(); ++idx) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
      Vec l = left_basis_mul(a, i, pending[idx]);
      if (s.insert(l)) pending.push_back(std::move(l));
      Vec r = right_basis_mul(a, pending[idx], i);
      if (s.insert(r)) pending.push_back(std::move(r));
    }
  }
  return s;
}

std::optional<std::string> ideal_violation(const StructureAlgebra& a, const Subspace& x) {
  if (x.ambient_dim() != a.dim()) {
    throw Error(ErrorCode::dim_mismatch, "subspace ambient dimension differs from algebra");
  }
  for (std::size_t b = 0; b < x.dim(); ++b) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (!x.contains(left_basis_mul(a, i, x.basis()[b]))) {
        return "e_" + std::to_string(i) + " * " + format_vec(x.basis()[b]) +
               " leaves the subspace";
      }
      if (!x.contains(right_basis_mul(a, x.basis()[b], i))) {
        return format_vec(x.basis()[b]) + " * e_" + std::to_string(i) +
               " leaves the subspace";
      }
    }
  }
  return std::nullopt;
}

Vec Quotient::lift(const Vec& q) const {
  Vec v = zero_vec(kernel.ambient_dim());
  for (std::size_t k = 0; k < representatives.size(); ++k) v[representatives[k]] = q.at(k);
  return v;
}

Quotient quotient_algebra(const StructureAlgebra& a, const Subspace& i) {
  if (auto w = ideal_violation(a, i)) throw Error(ErrorCode::not_an_ideal, *w);
  Quotient q;
  q.kernel = i;
  q.representatives = i.complement_indices();
  const std::size_t qd = q.representatives.size();
  q.projection = Matrix(qd, a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    Vec r = i.reduce(unit_vec(a.dim(), j));
    for (std::size_t k = 0; k < qd; ++k) q.projection(k, j) = r[q.representatives[k]];
  }
  std::vector<SparseVec> t(qd * qd);
  for (std::size_t x = 0; x < qd; ++x)
    for (std::size_t y = 0; y < qd; ++y)
      t[x * qd + y] = to_sparse(q.project(
          a.basis_product(q.representatives[x], q.representatives[y])));
  std::optional<Vec> unit;
  if (a.unit()) unit = q.project(*a.unit());
  q.algebra = StructureAlgebra::from_sparse(qd, std::move(t), unit);

  // Spot check: other representatives of the same cosets give the same
  // product class. Guaranteed by the ideal property.
  if (i.dim() > 0 && qd > 0) {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 8; ++trial) {
      std::size_t x = rng() % qd, y = rng() % qd;
      Vec u = unit_vec(a.dim(), q.representatives[x]);
      Vec v = unit_vec(a.dim(), q.representatives[y]);
      axpy(u, Rational(static_cast<long>(rng() % 5) - 2), i.basis()[rng() % i.dim()]);
      axpy(v, Rational(static_cast<long>(rng() % 5) - 2), i.basis()[rng() % i.dim()]);
      if (q.project(a.multiply(u, v)) != q.algebra.basis_product(x, y)) {
        throw Error(ErrorCode::not_an_ideal,
                    "quotient product depends on coset representatives");
      }
    }
  }
  return q;
}

StructureAlgebra induced_algebra(const StructureAlgebra& a, const Subspace& x) {
  if (x.ambient_dim() != a.dim()) {
    throw Error(ErrorCode::dim_mismatch, "subspace ambient dimension differs from algebra");
  }
  const std::size_t k = x.dim();
  std::vector<SparseVec> t(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      auto c = x.coordinates(a.multiply(x.basis()[i], x.basis()[j]));
      if (!c) throw Error(ErrorCode::not_closed, "subspace is not closed under multiplication");
      t[i * k + j] = to_sparse(*c);
    }
  std::optional<Vec> unit;
  if (auto u = unit_of(a, x)) unit = x.coordinates(*u);
  auto out = StructureAlgebra::from_sparse(k, std::move(t), unit);
  if (a.associativity() == Associativity::verified) {
    out = out.with_associativity(Associativity::verified);
  }
  return out;
}

Subalgebra subalgebra_generated(const StructureAlgebra& a, const std::vector<Vec>& generators) {
  Subspace s(a.dim());
  std::vector<Vec> spanning;
  for (const auto& g : generators) {
    if (g.size() != a.dim()) throw Error(ErrorCode::bad_shape, "generator length");
    if (s.insert(g)) spanning.push_back(g);
  }
  for (std::size_t i = 0; i < spanning.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      Vec p = a.multiply(spanning[i], spanning[j]);
      if (s.insert(p)) spanning.push_back(std::move(p));
      Vec q = a.multiply(spanning[j], spanning[i]);
      if (s.insert(q)) spanning.push_back(std::move(q));
    }
  }
  Subalgebra out;
  out.algebra = induced_algebra(a, s);
  out.inclusion = Matrix::from_columns(a.dim(), s.basis());
  out.carrier = std::move(s);
  return out;
}

std::optional<Vec> unit_of(const StructureAlgebra& a, const Subspace& x) {
  require_closed(a, x);
  const std::size_t k = x.dim();
  const std::size_t n = a.dim();
  if (k == 0) return zero_vec(n);
  // Unknown coefficients c with (sum c_m b_m) b_j = b_j = b_j (sum c_m b_m).
  Matrix m(2 * k * n, k);
  Vec rhs(2 * k * n);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t mm = 0; mm < k; ++mm) {
      Vec l = a.multiply(x.basis()[mm], x.basis()[j]);
      Vec r = a.multiply(x.basis()[j], x.basis()[mm]);
      for (std::size_t row = 0; row < n; ++row) {
        m(j * n + row, mm) = l[row];
        m((k + j) * n + row, mm) = r[row];
      }
    }
    for (std::size_t row = 0; row < n; ++row) {
      rhs[j * n + row] = x.basis()[j][row];
      rhs[(k + j) * n + row] = x.basis()[j][row];
    }
  }
  auto c = m.solve(rhs);
  if (!c) return std::nullopt;
  return x.from_coordinates(*c);
}

IdealDiagnostics ideal_diagnostics(const StructureAlgebra& a, const Subspace& x) {
  if (auto w = ideal_violation(a, x)) throw Error(ErrorCode::not_an_ideal, *w);
  const std::size_t k = x.dim();
  const std::size_t n = a.dim();
  IdealDiagnostics d;
  Subspace squares(n);
  for (const auto& u : x.basis())
    for (const auto& v : x.basis()) squares.insert(a.multiply(u, v));
  d.idempotent = squares == x;

  // Left annihilator {c : (sum c_m b_m) b_j = 0 for all j}, and the right one.
  Matrix left(k * n, k), right(k * n, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t mm = 0; mm < k; ++mm) {
      Vec l = a.multiply(x.basis()[mm], x.basis()[j]);
      Vec r = a.multiply(x.basis()[j], x.basis()[mm]);
      for (std::size_t row = 0; row < n; ++row) {
        left(j * n + row, mm) = l[row];
        right(j * n + row, mm) = r[row];
      }
    }
  d.nondegenerate = left.rank() == k && right.rank() == k;
  return d;
}

std::vector<MultiplierPair> multiplier_space(const StructureAlgebra& x) {
  const std::size_t k = x.dim();
  const std::size_t unknowns = 2 * k * k;
  auto L = [k](std::size_t m, std::size_t p) { return m * k + p; };
  auto R = [k](std::size_t m, std::size_t p) { return k * k + m * k + p; };

  Subspace equations(unknowns);
  std::vector<Vec> rows(k);
  auto flush = [&]() {
    for (auto& row : rows) {
      if (!is_zero(row)) equations.insert(row);
      row = zero_vec(unknowns);
    }
  };
  for (auto& row : rows) row = zero_vec(unknowns);

  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      // L(e_i e_j) - L(e_i) e_j
      for (const auto& [p, c] : x.product(i, j))
        for (std::size_t m = 0; m < k; ++m) rows[m][L(m, p)] += c;
      for (std::size_t p = 0; p < k; ++p)
        for (const auto& [m, c] : x.product(p, j)) rows[m][L(p, i)] -= c;
      flush();
      // R(e_i e_j) - e_i R(e_j)
      for (const auto& [p, c] : x.product(i, j))
        for (std::size_t m = 0; m < k; ++m) rows[m][R(m, p)] += c;
      for (std::size_t p = 0; p < k; ++p)
        for (const auto& [m, c] : x.product(i, p)) rows[m][R(p, j)] -= c;
      flush();
      // R(e_i) e_j - e_i L(e_j)
      for (std::size_t p = 0; p < k; ++p) {
        for (const auto& [m, c] : x.product(p, j)) rows[m][R(p, i)] += c;
        for (const auto& [m, c] : x.product(i, p)) rows[m][L(p, j)] -= c;
      }
      flush();
    }
  }

  Matrix system = Matrix::from_rows(unknowns, equations.basis());
  std::vector<MultiplierPair> out;
  for (const auto& v : system.nullspace()) {
    MultiplierPair pair{Matrix(k, k), Matrix(k, k)};
    for (std::size_t m = 0; m < k; ++m)
      for (std::size_t p = 0; p < k; ++p) {
        pair.left(m, p) = v[L(m, p)];
        pair.right(m, p) = v[R(m, p)];
      }
    out.push_back(std::move(pair));
  }
  return out;
}

LrResult lr_associativity(const StructureAlgebra& x) {
  auto basis = multiplier_space(x);
  for (std::size_t p = 0; p < basis.size(); ++p)
    for (std::size_t q = 0; q < basis.size(); ++q) {
      if (basis[p].left * basis[q].right != basis[q].right * basis[p].left) {
        return {false, std::make_pair(p, q)};
      }
    }
  return {};
}

Subspace trace_radical(const StructureAlgebra& a) {
  StructureAlgebra c = checked(a);
  if (c.associativity() != Associativity::verified) {
    throw Error(ErrorCode::not_associative, "trace-form radical needs an associative algebra");
  }
  const std::size_t n = a.dim();
  StructureAlgebra plus = c;
  const bool adjoined = !c.unit().has_value();
  if (adjoined) {
    const std::size_t m = n + 1;
    std::vector<SparseVec> t(m * m);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) t[i * m + j] = c.product(i, j);
      t[i * m + n] = {{i, Rational(1)}};
      t[n * m + i] = {{i, Rational(1)}};
    }
    t[n * m + n] = {{n, Rational(1)}};
    plus = StructureAlgebra::from_sparse(m, std::move(t), unit_vec(m, n));
  }
  const std::size_t m = plus.dim();
  // T(e_i, e_j) = trace(L_i L_j) = sum_b sum_{(a, c) in e_i e_b} c * [e_j e_a]_b
  Matrix gram(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      Rational tr = 0;
      for (std::size_t b = 0; b < m; ++b)
        for (const auto& [x, coef] : plus.product(i, b))
          for (const auto& [y, d] : plus.product(j, x))
            if (y == b) tr += coef * d;
      gram(i, j) = tr;
      gram(j, i) = tr;
    }
  Subspace rad = Subspace::span(m, gram.nullspace());
  if (!adjoined) return rad;
  Subspace in_a(m);
  for (std::size_t i = 0; i < n; ++i) in_a.insert(unit_vec(m, i));
  Subspace both = rad.intersect(in_a);
  Subspace out(n);
  for (const auto& v : both.basis()) out.insert(Vec(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n)));
  return out;
}

HomCheck verify_linear_hom(const StructureAlgebra& source, const StructureAlgebra& target,
                           const Matrix& m, bool require_bijective) {
  if (m.rows() != target.dim() || m.cols() != source.dim()) {
    throw Error(ErrorCode::bad_shape, "map is " + std::to_string(m.rows()) + "x" +
                                          std::to_string(m.cols()) + ", expected " +
                                          std::to_string(target.dim()) + "x" +
                                          std::to_string(source.dim()));
  }
  std::vector<Vec> images(source.dim());
  for (std::size_t i = 0; i < source.dim(); ++i) images[i] = m.column(i);
  for (std::size_t i = 0; i < source.dim(); ++i)
    for (std::size_t j = 0; j < source.dim(); ++j) {
      if (m.apply(source.basis_product(i, j)) != target.multiply(images[i], images[j])) {
        return {false, "M(e_" + std::to_string(i) + " e_" + std::to_string(j) +
                           ") != M(e_" + std::to_string(i) + ") M(e_" +
                           std::to_string(j) + ")"};
      }
    }
  if (require_bijective) {
    if (source.dim() != target.dim() || m.rank() != source.dim()) {
      return {false, "map is not bijective (rank " + std::to_string(m.rank()) + ", dims " +
                         std::to_string(source.dim()) + " -> " +
                         std::to_string(target.dim()) + ")"};
    }
  }
  return {};
}

}  // namespace parcross
