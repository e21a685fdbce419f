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

#ifndef PARCROSS_PARTIAL_ACTION_HPP
#define PARCROSS_PARTIAL_ACTION_HPP

#include <vector>

#include "parcross/algebra.hpp"
#include "parcross/report.hpp"
#include "parcross/semigroup.hpp"

namespace parcross {

/// A family of ideals X_s of A and linear maps alpha_s : X_{s*} -> X_s.
///
/// map(s) is the matrix of alpha_s from the echelon coordinates of X_{s*} to
/// the echelon coordinates of X_s. Construction checks shapes only; the
/// axioms are decided by verify_partial_action.
class PartialAction {
 public:
  /// Throws ConsistencyError when a map's shape does not match the ideals.
  PartialAction(InverseSemigroup semigroup, StructureAlgebra algebra,
                std::vector<Subspace> ideals, std::vector<Matrix> maps);

  const InverseSemigroup& semigroup() const noexcept { return semigroup_; }
  const StructureAlgebra& algebra() const noexcept { return algebra_; }
  const Subspace& ideal(Element s) const { return ideals_.at(s); }
  const Matrix& map(Element s) const { return maps_.at(s); }

  /// alpha_s(a) for a in X_{s*}, both in ambient coordinates. Throws
  /// MembershipBreach if a is outside X_{s*}.
  Vec apply(Element s, const Vec& a) const;

 private:
  InverseSemigroup semigroup_;
  StructureAlgebra algebra_;
  std::vector<Subspace> ideals_;
  std::vector<Matrix> maps_;
};

/// Axioms checked, each reported with an (s, t) witness:
///   ideal            X_s is a two-sided ideal of A
///   bijective        alpha_s : X_{s*} -> X_s is a linear bijection
///   multiplicative   alpha_s(ab) = alpha_s(a) alpha_s(b) on X_{s*}
///   inverse          alpha_{s*} alpha_s = id on X_{s*}
///   range            alpha_s(X_{s*} n X_t) = X_s n X_{st}
///   composition      alpha_s alpha_t = alpha_{st} on alpha_t^{-1}(X_t n X_{s*})
///   unit             X_1 = A and alpha_1 = id
/// All failures are reported, not just the first.
AxiomReport verify_partial_action(const PartialAction& alpha);

/// X_s = A, alpha_s = id. Throws NotAssociative.
PartialAction trivial_action(const InverseSemigroup& s, const StructureAlgebra& a);

/// The image alpha_s(V) of a subspace V of X_{s*}.
Subspace image(const PartialAction& alpha, Element s, const Subspace& v);

/// phi : A -> A' (A'.dim x A.dim) is an algebra isomorphism with
/// phi(X_s) = X'_s and phi alpha_s = alpha'_s phi on X_{s*}.
HomCheck verify_action_equivalence(const PartialAction& alpha,
                                   const PartialAction& other, const Matrix& phi);

}  // namespace parcross

#endif  // PARCROSS_PARTIAL_ACTION_HPP
