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

// Partial representations s -> pi(s) of an inverse semigroup in a unital
// algebra B, and the passages between them and partial actions.

#ifndef PARCROSS_PARTIAL_REP_HPP
#define PARCROSS_PARTIAL_REP_HPP

#include <vector>

#include "parcross/algebra.hpp"
#include "parcross/crossed_product.hpp"
#include "parcross/partial_action.hpp"
#include "parcross/report.hpp"
#include "parcross/semigroup.hpp"

namespace parcross {

class PartialRep {
 public:
  /// Throws ConsistencyError on count or length mismatch.
  PartialRep(InverseSemigroup semigroup, StructureAlgebra target, std::vector<Vec> images);

  const InverseSemigroup& semigroup() const noexcept { return semigroup_; }
  const StructureAlgebra& target() const noexcept { return target_; }
  const Vec& operator()(Element s) const { return images_.at(s); }
  const std::vector<Vec>& images() const noexcept { return images_; }

  /// epsilon_s = pi(s) pi(s*)
  Vec epsilon(Element s) const;

 private:
  InverseSemigroup semigroup_;
  StructureAlgebra target_;
  std::vector<Vec> images_;
};

/// The target with its unit attached (computed if not declared). Throws
/// TargetNotUnital.
StructureAlgebra unital_target(const StructureAlgebra& b);

/// pi(s*)pi(s)pi(t) = pi(s*)pi(st), pi(s)pi(t)pi(t*) = pi(st)pi(t*),
/// pi(s)pi(s*)pi(s) = pi(s). Throws TargetNotUnital.
AxiomReport verify_partial_rep(const PartialRep& pi);

/// epsilon_s idempotent, epsilon_s epsilon_t = epsilon_t epsilon_s,
/// pi(s) epsilon_t = epsilon_{st} pi(s), and the product chain
/// epsilon_s epsilon_t = pi(ss*t) pi(t*s) pi(s*tt*).
AxiomReport idempotent_calculus(const PartialRep& pi);

/// The commutative subalgebra generated by the epsilon_s and the partial
/// action a -> pi(s) a pi(s*) on the ideals X_s = epsilon_s A.
struct RepAction {
  Subalgebra subalgebra;
  PartialAction action;
  /// epsilon_s in the coordinates of the subalgebra.
  std::vector<Vec> epsilons;
};

/// Throws ActionAxiomFailure if the result is not a partial action.
RepAction action_from_rep(const PartialRep& pi);

/// s -> coset of 1_s d_s in A x_alpha S.
struct ActionRep {
  CrossedProduct crossed;
  PartialRep rep;
  /// 1_s in ambient coordinates of A.
  std::vector<Vec> units;
};

/// Throws NonUnitalIdeal or NotAssociative.
ActionRep rep_from_action(const PartialAction& alpha);

/// phi : B' -> B is an isomorphism with pi(s) = phi(pi'(s)).
HomCheck verify_rep_equivalence(const PartialRep& pi, const PartialRep& other,
                                const Matrix& phi);

struct RepQuotient {
  Subspace ideal;  // J
  Quotient quotient;
  PartialRep rep;  // projection of pi
};

/// J is generated by a pi(s) - a pi(t), a a basis element of B, s < t.
RepQuotient rep_quotient(const PartialRep& pi);

struct PhiHom {
  /// quotient.dim x crossed.dim, a_s d_s -> a_s pi~(s).
  Matrix map;
  AxiomReport report;
};

/// The map from A x S (built on the subalgebra of B/J) to B/J. Throws
/// WellDefinednessBreach or HomomorphismBreach.
PhiHom phi_hom(const RepQuotient& rq, const RepAction& ra, const ActionRep& ar);

/// Realises S by partial bijections x -> sx on its own elements. The target
/// is M_n(Q), n = |S|, with E_ij at index i * n + j.
PartialRep wagner_preston(const InverseSemigroup& s);

}  // namespace parcross

#endif  // PARCROSS_PARTIAL_REP_HPP
