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

#include "parcross/partial_action.hpp"

#include "parcross/error.hpp"

namespace parcross {

namespace {

std::string st(Element s, Element t) {
  return "(s, t) = (" + std::to_string(s) + ", " + std::to_string(t) + ")";
}

std::string at(Element s) { return "s = " + std::to_string(s); }

}  // namespace

PartialAction::PartialAction(InverseSemigroup semigroup, StructureAlgebra algebra,
                             std::vector<Subspace> ideals, std::vector<Matrix> maps)
    : semigroup_(std::move(semigroup)),
      algebra_(std::move(algebra)),
      ideals_(std::move(ideals)),
      maps_(std::move(maps)) {
  const std::size_t n = semigroup_.size();
  if (ideals_.size() != n || maps_.size() != n) {
    throw Error(ErrorCode::consistency_error,
                "partial action needs one ideal and one map per semigroup element");
  }
  for (Element s = 0; s < n; ++s) {
    if (ideals_[s].ambient_dim() != algebra_.dim()) {
      throw Error(ErrorCode::consistency_error,
                  "ideal of element " + std::to_string(s) + " lives in dimension " +
                      std::to_string(ideals_[s].ambient_dim()) + ", algebra has " +
                      std::to_string(algebra_.dim()));
    }
  }
  for (Element s = 0; s < n; ++s) {
    const std::size_t rows = ideals_[s].dim();
    const std::size_t cols = ideals_[semigroup_.inverse(s)].dim();
    if (maps_[s].rows() != rows || maps_[s].cols() != cols) {
      throw Error(ErrorCode::consistency_error,
                  "map of element " + std::to_string(s) + " is " +
                      std::to_string(maps_[s].rows()) + "x" +
                      std::to_string(maps_[s].cols()) + ", ideals require " +
                      std::to_string(rows) + "x" + std::to_string(cols));
    }
  }
}

Vec PartialAction::apply(Element s, const Vec& a) const {
  const Subspace& dom = ideals_.at(semigroup_.inverse(s));
  auto c = dom.coordinates(a);
  if (!c) {
    throw Error(ErrorCode::membership_breach,
                format_vec(a) + " is outside the domain of alpha_" + std::to_string(s));
  }
  return ideals_[s].from_coordinates(maps_[s].apply(*c));
}

Subspace image(const PartialAction& alpha, Element s, const Subspace& v) {
  Subspace out(alpha.algebra().dim());
  for (const auto& b : v.basis()) out.insert(alpha.apply(s, b));
  return out;
}

AxiomReport verify_partial_action(const PartialAction& alpha) {
  const auto& S = alpha.semigroup();
  const auto& A = alpha.algebra();
  const std::size_t n = S.size();
  AxiomReport r;

  r.declare("ideal");
  for (Element s = 0; s < n; ++s) {
    if (auto w = ideal_violation(A, alpha.ideal(s))) r.fail("ideal", at(s) + ": " + *w);
  }

  r.declare("bijective");
  std::vector<std::optional<Matrix>> inverse_maps(n);
  for (Element s = 0; s < n; ++s) {
    inverse_maps[s] = alpha.map(s).inverse();
    if (!inverse_maps[s]) {
      r.fail("bijective", at(s) + ": alpha_s is not invertible (" +
                              std::to_string(alpha.map(s).rows()) + "x" +
                              std::to_string(alpha.map(s).cols()) + ", rank " +
                              std::to_string(alpha.map(s).rank()) + ")");
    }
  }

  r.declare("multiplicative");
  for (Element s = 0; s < n; ++s) {
    const Subspace& dom = alpha.ideal(S.inverse(s));
    for (std::size_t i = 0; i < dom.dim(); ++i)
      for (std::size_t j = 0; j < dom.dim(); ++j) {
        const Vec& a = dom.basis()[i];
        const Vec& b = dom.basis()[j];
        Vec ab = A.multiply(a, b);
        if (!dom.contains(ab)) continue;  // reported under "ideal"
        if (alpha.apply(s, ab) != A.multiply(alpha.apply(s, a), alpha.apply(s, b))) {
          r.fail("multiplicative", at(s) + ": basis pair (" + std::to_string(i) +
                                       ", " + std::to_string(j) + ") of X_{s*}");
        }
      }
  }

  r.declare("inverse");
  for (Element s = 0; s < n; ++s) {
    const Element si = S.inverse(s);
    const Matrix& there = alpha.map(s);
    const Matrix& back = alpha.map(si);
    if (back.cols() != there.rows() || back * there != Matrix::identity(there.cols())) {
      r.fail("inverse", at(s) + ": alpha_{s*} alpha_s != id on X_{s*}");
    }
  }

  r.declare("range");
  for (Element s = 0; s < n; ++s)
    for (Element t = 0; t < n; ++t) {
      const Element si = S.inverse(s);
      Subspace lhs = image(alpha, s, alpha.ideal(si).intersect(alpha.ideal(t)));
      Subspace rhs = alpha.ideal(s).intersect(alpha.ideal(S.mul(s, t)));
      if (lhs != rhs) {
        r.fail("range", st(s, t) + ": alpha_s(X_{s*} n X_t) has dim " +
                            std::to_string(lhs.dim()) + ", X_s n X_{st} has dim " +
                            std::to_string(rhs.dim()) +
                            (lhs.dim() == rhs.dim() ? " (different subspaces)" : ""));
      }
    }

  r.declare("composition");
  for (Element s = 0; s < n; ++s)
    for (Element t = 0; t < n; ++t) {
      if (!inverse_maps[t]) continue;  // reported under "bijective"
      const Element ti = S.inverse(t);
      const Element prod = S.mul(s, t);
      const Subspace& dom_t = alpha.ideal(ti);
      Subspace w = alpha.ideal(t).intersect(alpha.ideal(S.inverse(s)));
      for (const auto& y : w.basis()) {
        auto c = alpha.ideal(t).coordinates(y);
        Vec a = dom_t.from_coordinates(inverse_maps[t]->apply(*c));
        if (!alpha.ideal(S.inverse(prod)).contains(a)) {
          r.fail("composition", st(s, t) + ": " + format_vec(a) +
                                    " is outside the domain of alpha_{st}");
          continue;
        }
        if (alpha.apply(s, alpha.apply(t, a)) != alpha.apply(prod, a)) {
          r.fail("composition", st(s, t) + ": alpha_s alpha_t " + format_vec(a) +
                                    " != alpha_{st} " + format_vec(a));
        }
      }
    }

  if (S.unit()) {
    const Element one = *S.unit();
    r.declare("unit");
    if (alpha.ideal(one) != Subspace::full(A.dim())) {
      r.fail("unit", "X_1 != A");
    } else if (alpha.map(one) != Matrix::identity(A.dim())) {
      r.fail("unit", "alpha_1 != id");
    }
  }
  return r;
}

PartialAction trivial_action(const InverseSemigroup& s, const StructureAlgebra& a) {
  StructureAlgebra c = checked(a);
  if (c.associativity() != Associativity::verified) {
    throw Error(ErrorCode::not_associative, "partial actions need an associative algebra");
  }
  std::vector<Subspace> ideals(s.size(), Subspace::full(a.dim()));
  std::vector<Matrix> maps(s.size(), Matrix::identity(a.dim()));
  return PartialAction(s, c, std::move(ideals), std::move(maps));
}

HomCheck verify_action_equivalence(const PartialAction& alpha, const PartialAction& other,
                                   const Matrix& phi) {
  if (!(alpha.semigroup() == other.semigroup())) {
    return {false, "actions are over different semigroups"};
  }
  if (alpha.algebra().dim() != other.algebra().dim()) {
    return {false, "algebras have different dimensions (" +
                       std::to_string(alpha.algebra().dim()) + " vs " +
                       std::to_string(other.algebra().dim()) + ")"};
  }
  HomCheck h = verify_linear_hom(alpha.algebra(), other.algebra(), phi, true);
  if (!h.ok) return h;
  const auto& S = alpha.semigroup();
  for (Element s = 0; s < S.size(); ++s) {
    Subspace mapped(other.algebra().dim());
    for (const auto& b : alpha.ideal(s).basis()) mapped.insert(phi.apply(b));
    if (mapped != other.ideal(s)) return {false, at(s) + ": phi(X_s) != X'_s"};
    for (const auto& a : alpha.ideal(S.inverse(s)).basis()) {
      if (phi.apply(alpha.apply(s, a)) != other.apply(s, phi.apply(a))) {
        return {false, at(s) + ": phi alpha_s != alpha'_s phi on " + format_vec(a)};
      }
    }
  }
  return {};
}

}  // namespace parcross
