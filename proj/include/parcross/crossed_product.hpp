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

// Algebraic crossed products A x_alpha S. The formal-sum algebra L has basis
// (s, j) for j running over the echelon basis of X_s, with product
//
//   (a d_s)(b d_t) = alpha_s(alpha_{s*}(a) b) d_{st},
//
// and the crossed product is L modulo the ideal generated by a d_r - a d_t
// for r <= t, a in X_r.

#ifndef PARCROSS_CROSSED_PRODUCT_HPP
#define PARCROSS_CROSSED_PRODUCT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "parcross/algebra.hpp"
#include "parcross/partial_action.hpp"

namespace parcross {

/// A finite sum of a_s d_s, each a_s held in the echelon coordinates of X_s.
/// Zero terms are never stored.
struct FormalSum {
  std::map<Element, Vec> terms;

  /// a d_s for a in X_s (ambient coordinates). Throws MembershipBreach.
  static FormalSum single(const PartialAction& alpha, Element s, const Vec& a);
  bool is_zero() const noexcept { return terms.empty(); }
  bool operator==(const FormalSum& rhs) const = default;
};

/// Product in L computed directly from the defining formula.
FormalSum multiply(const PartialAction& alpha, const FormalSum& x, const FormalSum& y);

struct FormalAlgebra {
  StructureAlgebra algebra;
  /// offsets[s] is the index of (s, 0); offsets.back() is dim L.
  std::vector<std::size_t> offsets;

  Vec embed(const FormalSum& x) const;
  FormalSum to_formal(const Vec& v) const;
};

/// Throws NotValidated (axioms fail), MissingUnit, or WellDefinednessBreach.
FormalAlgebra build_formal_algebra(const PartialAction& alpha);

/// Two-sided closure in L of a d_r - a d_t over r < t and basis a of X_r.
Subspace build_relation_ideal(const PartialAction& alpha, const FormalAlgebra& l);

struct CrossedProduct {
  PartialAction action;
  FormalAlgebra formal;
  Subspace relations;
  /// algebra is L / relations; projection is the quotient map.
  Quotient quotient;

  const StructureAlgebra& algebra() const noexcept { return quotient.algebra; }
  /// The coset of a d_s, a in X_s given in ambient coordinates.
  Vec coset(Element s, const Vec& a) const;
};

CrossedProduct build_crossed_product(const PartialAction& alpha);

/// The coset of a d_r equals that of a d_t whenever r <= t, a in X_r.
AxiomReport coset_identification(const CrossedProduct& cp);

struct IdealConditions {
  Element element = 0;
  std::size_t dim = 0;
  bool lr_associative = false;
  bool idempotent = false;
  bool nondegenerate = false;
  bool unital = false;
};

/// Hypotheses of the associativity criteria evaluated against the actual
/// associativity of the crossed product.
struct AssociativitySuite {
  std::vector<IdealConditions> ideals;
  bool semiprime = false;
  bool associative = false;
  std::optional<std::array<std::size_t, 3>> witness;
  std::size_t dim_l = 0;
  std::size_t dim_relations = 0;
  std::size_t dim_quotient = 0;

  bool all_lr_associative() const;
  bool all_idempotent_or_nondegenerate() const;
  bool all_unital() const;
  /// every X_s (L,R)-associative  =>  associative
  bool lr_implication_ok() const { return !all_lr_associative() || associative; }
  /// every X_s idempotent or non-degenerate  =>  associative
  bool ideal_implication_ok() const {
    return !all_idempotent_or_nondegenerate() || associative;
  }
  /// A semiprime  =>  associative
  bool semiprime_implication_ok() const { return !semiprime || associative; }
  /// per s: idempotent or non-degenerate  =>  (L,R)-associative
  bool conditions_imply_lr() const;
};

AssociativitySuite associativity_suite(const PartialAction& alpha);

}  // namespace parcross

#endif  // PARCROSS_CROSSED_PRODUCT_HPP
