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

// Finite-dimensional algebras over Q given by structure constants. Nothing
// here assumes associativity unless a function says so: the formal-sum
// algebra of a crossed product is built before its associativity is known.

#ifndef PARCROSS_ALGEBRA_HPP
#define PARCROSS_ALGEBRA_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parcross/linalg.hpp"

namespace parcross {

enum class Associativity { unchecked, verified, refuted };

using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

class StructureAlgebra {
 public:
  StructureAlgebra() = default;

  /// constants[i * dim + j] is the coordinate vector of e_i e_j.
  /// Throws BadShape, or NotUnit when the supplied unit fails.
  static StructureAlgebra from_constants(std::size_t dim,
                                         const std::vector<Vec>& constants,
                                         std::optional<Vec> unit = std::nullopt);
  static StructureAlgebra from_sparse(std::size_t dim,
                                      std::vector<SparseVec> constants,
                                      std::optional<Vec> unit = std::nullopt);

  std::size_t dim() const noexcept { return dim_; }
  const SparseVec& product(std::size_t i, std::size_t j) const {
    return table_[i * dim_ + j];
  }
  Vec basis_product(std::size_t i, std::size_t j) const;
  const std::optional<Vec>& unit() const noexcept { return unit_; }
  Associativity associativity() const noexcept { return assoc_; }

  /// Bilinear extension of the structure constants. Throws BadShape.
  Vec multiply(const Vec& x, const Vec& y) const;
  /// Left multiplication by x as a dim x dim matrix.
  Matrix left_mult(const Vec& x) const;

  StructureAlgebra with_associativity(Associativity a) const;
  StructureAlgebra with_unit(std::optional<Vec> unit) const;

  bool operator==(const StructureAlgebra& rhs) const {
    return dim_ == rhs.dim_ && table_ == rhs.table_ && unit_ == rhs.unit_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<SparseVec> table_;
  std::optional<Vec> unit_;
  Associativity assoc_ = Associativity::unchecked;
};

// Named instances used throughout the tests and the corpus.
StructureAlgebra field_algebra();
/// Q^m with componentwise product.
StructureAlgebra product_of_fields(std::size_t m);
/// Q[x]/(x^2), basis (1, x).
StructureAlgebra dual_numbers();
/// M_n(Q) on matrix units, E_ij at index i * n + j.
StructureAlgebra matrix_algebra(std::size_t n);
/// k-dimensional algebra with every product zero.
StructureAlgebra zero_product_algebra(std::size_t k);

struct AssociativityResult {
  bool associative = true;
  std::optional<std::array<std::size_t, 3>> witness;
};

/// Exhaustive basis-triple check.
AssociativityResult check_associative(const StructureAlgebra& a);
/// Copy of a with its associativity flag set by check_associative.
StructureAlgebra checked(const StructureAlgebra& a);

/// Smallest subspace containing the generators and closed under left and
/// right multiplication by every basis element.
Subspace ideal_closure(const StructureAlgebra& a, const std::vector<Vec>& generators);

/// Empty if a*X and X*a lie in X; otherwise a product that escapes.
std::optional<std::string> ideal_violation(const StructureAlgebra& a,
                                           const Subspace& x);

struct Quotient {
  StructureAlgebra algebra;
  /// quotient.dim x ambient.dim; the canonical surjection.
  Matrix projection;
  Subspace kernel;
  /// Ambient basis indices used as coset representatives.
  std::vector<std::size_t> representatives;

  Vec project(const Vec& v) const { return projection.apply(v); }
  /// The representative of a quotient vector in the ambient algebra.
  Vec lift(const Vec& q) const;
};

/// Throws NotAnIdeal with a witness when i is not two-sided.
Quotient quotient_algebra(const StructureAlgebra& a, const Subspace& i);

/// X as an algebra in its own echelon coordinates. Throws NotClosed.
StructureAlgebra induced_algebra(const StructureAlgebra& a, const Subspace& x);

struct Subalgebra {
  StructureAlgebra algebra;
  Subspace carrier;
  /// ambient.dim x sub.dim; column j is the j-th carrier basis vector.
  Matrix inclusion;
};

Subalgebra subalgebra_generated(const StructureAlgebra& a,
                                const std::vector<Vec>& generators);

/// The unit of X (in ambient coordinates), if X has one. The zero subspace
/// has the zero vector as unit. Throws NotClosed.
std::optional<Vec> unit_of(const StructureAlgebra& a, const Subspace& x);

struct IdealDiagnostics {
  bool idempotent = false;
  bool nondegenerate = false;
};

/// Throws NotAnIdeal.
IdealDiagnostics ideal_diagnostics(const StructureAlgebra& a, const Subspace& x);

/// (L, R) with L(ab) = L(a)b, R(ab) = aR(b), R(a)b = aL(b).
struct MultiplierPair {
  Matrix left;
  Matrix right;
};

std::vector<MultiplierPair> multiplier_space(const StructureAlgebra& x);

struct LrResult {
  bool lr_associative = true;
  /// Indices (p, q) of basis multipliers with L_p R'_q != R'_q L_p.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

LrResult lr_associativity(const StructureAlgebra& x);
inline bool is_lr_associative(const StructureAlgebra& x) {
  return lr_associativity(x).lr_associative;
}

/// Basis of the trace-form radical of a (after adjoining a unit if needed),
/// intersected with a. Throws NotAssociative.
Subspace trace_radical(const StructureAlgebra& a);
inline bool is_semiprime(const StructureAlgebra& a) {
  return trace_radical(a).dim() == 0;
}

struct HomCheck {
  bool ok = true;
  std::string witness;
};

/// m is target.dim x source.dim. Checks m(xy) = m(x)m(y) on basis pairs and,
/// if asked, that m is bijective. Throws BadShape.
HomCheck verify_linear_hom(const StructureAlgebra& source,
                           const StructureAlgebra& target, const Matrix& m,
                           bool require_bijective);

}  // namespace parcross

#endif  // PARCROSS_ALGEBRA_HPP
