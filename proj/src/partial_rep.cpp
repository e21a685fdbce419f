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

#include "parcross/partial_rep.hpp"

#include "parcross/error.hpp"

namespace parcross {

namespace {

std::string st(Element s, Element t) {
  return "(s, t) = (" + std::to_string(s) + ", " + std::to_string(t) + ")";
}

}  // namespace

PartialRep::PartialRep(InverseSemigroup semigroup, StructureAlgebra target,
                       std::vector<Vec> images)
    : semigroup_(std::move(semigroup)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != semigroup_.size()) {
    throw Error(ErrorCode::consistency_error,
                "representation assigns " + std::to_string(images_.size()) +
                    " images to a semigroup of size " + std::to_string(semigroup_.size()));
  }
  for (Element s = 0; s < images_.size(); ++s) {
    if (images_[s].size() != target_.dim()) {
      throw Error(ErrorCode::consistency_error,
                  "image of element " + std::to_string(s) + " has length " +
                      std::to_string(images_[s].size()) + ", target has dimension " +
                      std::to_string(target_.dim()));
    }
  }
}

Vec PartialRep::epsilon(Element s) const {
  return target_.multiply(images_.at(s), images_.at(semigroup_.inverse(s)));
}

StructureAlgebra unital_target(const StructureAlgebra& b) {
  if (b.unit()) return b;
  if (auto u = unit_of(b, Subspace::full(b.dim()))) return b.with_unit(std::move(u));
  throw Error(ErrorCode::target_not_unital, "target algebra has no unit");
}

AxiomReport verify_partial_rep(const PartialRep& pi) {
  const StructureAlgebra b = unital_target(pi.target());
  const auto& S = pi.semigroup();
  auto m = [&](const Vec& x, const Vec& y) { return b.multiply(x, y); };
  AxiomReport r;
  const std::string i = "pi(s*)pi(s)pi(t) = pi(s*)pi(st)";
  const std::string ii = "pi(s)pi(t)pi(t*) = pi(st)pi(t*)";
  const std::string iii = "pi(s)pi(s*)pi(s) = pi(s)";
  r.declare(i);
  r.declare(ii);
  r.declare(iii);
  for (Element s = 0; s < S.size(); ++s) {
    const Element si = S.inverse(s);
    for (Element t = 0; t < S.size(); ++t) {
      const Element ti = S.inverse(t);
      if (m(m(pi(si), pi(s)), pi(t)) != m(pi(si), pi(S.mul(s, t)))) r.fail(i, st(s, t));
      if (m(m(pi(s), pi(t)), pi(ti)) != m(pi(S.mul(s, t)), pi(ti))) r.fail(ii, st(s, t));
    }
    if (m(m(pi(s), pi(si)), pi(s)) != pi(s)) r.fail(iii, "s = " + std::to_string(s));
  }
  return r;
}

AxiomReport idempotent_calculus(const PartialRep& pi) {
  const auto& b = pi.target();
  const auto& S = pi.semigroup();
  auto m = [&](const Vec& x, const Vec& y) { return b.multiply(x, y); };
  std::vector<Vec> eps(S.size());
  for (Element s = 0; s < S.size(); ++s) eps[s] = pi.epsilon(s);

  AxiomReport r;
  const std::string idem = "epsilon_s is idempotent";
  const std::string comm = "epsilon_s epsilon_t = epsilon_t epsilon_s";
  const std::string cov = "pi(s) epsilon_t = epsilon_{st} pi(s)";
  const std::string chain = "epsilon_s epsilon_t = pi(ss*t) pi(t*s) pi(s*tt*)";
  r.declare(idem);
  r.declare(comm);
  r.declare(cov);
  r.declare(chain);
  for (Element s = 0; s < S.size(); ++s) {
    if (m(eps[s], eps[s]) != eps[s]) r.fail(idem, "s = " + std::to_string(s));
    const Element si = S.inverse(s);
    for (Element t = 0; t < S.size(); ++t) {
      const Element ti = S.inverse(t);
      Vec et = m(eps[s], eps[t]);
      if (et != m(eps[t], eps[s])) r.fail(comm, st(s, t));
      if (m(pi(s), eps[t]) != m(eps[S.mul(s, t)], pi(s))) r.fail(cov, st(s, t));
      Vec rhs = m(m(pi(S.mul(s, si, t)), pi(S.mul(ti, s))), pi(S.mul(si, t, ti)));
      if (et != rhs) r.fail(chain, st(s, t));
    }
  }
  return r;
}

RepAction action_from_rep(const PartialRep& pi) {
  const auto& b = pi.target();
  const auto& S = pi.semigroup();
  std::vector<Vec> eps_b(S.size());
  for (Element s = 0; s < S.size(); ++s) eps_b[s] = pi.epsilon(s);

  Subalgebra sub = subalgebra_generated(b, eps_b);
  sub.algebra = checked(sub.algebra);
  const StructureAlgebra& a = sub.algebra;
  const std::size_t k = a.dim();

  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::action_axiom_failure, what);
  };

  std::vector<Vec> eps(S.size());
  std::vector<Subspace> ideals;
  for (Element s = 0; s < S.size(); ++s) {
    eps[s] = *sub.carrier.coordinates(eps_b[s]);
    Subspace x(k);
    for (std::size_t j = 0; j < k; ++j) x.insert(a.multiply(eps[s], unit_vec(k, j)));
    ideals.push_back(std::move(x));
  }

  std::vector<Matrix> maps;
  for (Element s = 0; s < S.size(); ++s) {
    const Subspace& dom = ideals[S.inverse(s)];
    const Subspace& range = ideals[s];
    Matrix m(range.dim(), dom.dim());
    for (std::size_t j = 0; j < dom.dim(); ++j) {
      Vec y = b.multiply(b.multiply(pi(s), sub.inclusion.apply(dom.basis()[j])),
                         pi(S.inverse(s)));
      auto in_a = sub.carrier.coordinates(y);
      if (!in_a) fail("pi(s) a pi(s*) leaves the subalgebra at s = " + std::to_string(s));
      auto in_x = range.coordinates(*in_a);
      if (!in_x) fail("pi(s) a pi(s*) leaves X_s at s = " + std::to_string(s));
      m.set_column(j, *in_x);
    }
    maps.push_back(std::move(m));
  }

  PartialAction action(S, a, std::move(ideals), std::move(maps));
  AxiomReport axioms = verify_partial_action(action);
  if (!axioms.passed()) fail("induced maps are not a partial action: " + axioms.first_failure());
  return RepAction{std::move(sub), std::move(action), std::move(eps)};
}

ActionRep rep_from_action(const PartialAction& alpha) {
  const auto& S = alpha.semigroup();
  std::vector<Vec> units;
  for (Element s = 0; s < S.size(); ++s) {
    auto u = unit_of(alpha.algebra(), alpha.ideal(s));
    if (!u) {
      throw Error(ErrorCode::non_unital_ideal, "X_" + std::to_string(s) + " has no unit");
    }
    units.push_back(std::move(*u));
  }
  CrossedProduct cp = build_crossed_product(alpha);
  if (cp.algebra().associativity() != Associativity::verified) {
    throw Error(ErrorCode::not_associative, "crossed product is not associative");
  }
  std::vector<Vec> images;
  for (Element s = 0; s < S.size(); ++s) images.push_back(cp.coset(s, units[s]));
  PartialRep rep(S, cp.algebra(), std::move(images));
  return ActionRep{std::move(cp), std::move(rep), std::move(units)};
}

HomCheck verify_rep_equivalence(const PartialRep& pi, const PartialRep& other, const Matrix& phi) {
  if (!(pi.semigroup() == other.semigroup())) {
    return {false, "representations are of different semigroups"};
  }
  if (pi.target().dim() != other.target().dim()) {
    return {false, "targets have different dimensions (" + std::to_string(pi.target().dim()) +
                       " vs " + std::to_string(other.target().dim()) + ")"};
  }
  HomCheck h = verify_linear_hom(other.target(), pi.target(), phi, true);
  if (!h.ok) return h;
  for (Element s = 0; s < pi.semigroup().size(); ++s) {
    if (phi.apply(other(s)) != pi(s)) {
      return {false, "pi(" + std::to_string(s) + ") != phi(pi'(" + std::to_string(s) + "))"};
    }
  }
  return {};
}

RepQuotient rep_quotient(const PartialRep& pi) {
  const StructureAlgebra b = unital_target(pi.target());
  const auto& S = pi.semigroup();
  std::vector<Vec> generators;
  for (Element s = 0; s < S.size(); ++s)
    for (Element t = 0; t < S.size(); ++t) {
      if (s == t || !S.natural_leq(s, t)) continue;
      Vec d = pi(s) - pi(t);
      for (std::size_t i = 0; i < b.dim(); ++i) {
        generators.push_back(b.multiply(unit_vec(b.dim(), i), d));
      }
    }
  Subspace j = ideal_closure(b, generators);
  Quotient q = quotient_algebra(b, j);
  q.algebra = b.associativity() == Associativity::verified
                  ? q.algebra.with_associativity(Associativity::verified)
                  : checked(q.algebra);
  std::vector<Vec> images;
  for (Element s = 0; s < S.size(); ++s) images.push_back(q.project(pi(s)));
  PartialRep rep(S, q.algebra, std::move(images));
  return RepQuotient{std::move(j), std::move(q), std::move(rep)};
}

PhiHom phi_hom(const RepQuotient& rq, const RepAction& ra, const ActionRep& ar) {
  const auto& S = rq.rep.semigroup();
  const StructureAlgebra& bj = rq.quotient.algebra;
  const CrossedProduct& cp = ar.crossed;
  const FormalAlgebra& l = cp.formal;
  const PartialAction& alpha = ra.action;

  // On L: (s, j) -> incl(b_j) pi~(s).
  Matrix on_l(bj.dim(), l.algebra.dim());
  for (Element s = 0; s < S.size(); ++s) {
    const Subspace& x = alpha.ideal(s);
    for (std::size_t j = 0; j < x.dim(); ++j) {
      Vec a = ra.subalgebra.inclusion.apply(x.basis()[j]);
      on_l.set_column(l.offsets[s] + j, bj.multiply(a, rq.rep(s)));
    }
  }
  for (const auto& g : cp.relations.basis()) {
    if (!is_zero(on_l.apply(g))) {
      throw Error(ErrorCode::well_definedness_breach,
                  "a_s pi~(s) does not vanish on the relation ideal");
    }
  }
  const auto& reps = cp.quotient.representatives;
  PhiHom out{Matrix(bj.dim(), reps.size()), {}};
  for (std::size_t k = 0; k < reps.size(); ++k) out.map.set_column(k, on_l.column(reps[k]));

  out.report.declare("well-defined on the relation ideal");
  HomCheck h = verify_linear_hom(cp.algebra(), bj, out.map, false);
  if (!h.ok) throw Error(ErrorCode::homomorphism_breach, h.witness);
  out.report.declare("multiplicative");

  const std::string compat = "phi(pi_alpha(s)) = pi~(s)";
  out.report.declare(compat);
  for (Element s = 0; s < S.size(); ++s) {
    if (out.map.apply(ar.rep(s)) != rq.rep(s)) out.report.fail(compat, "s = " + std::to_string(s));
  }
  const std::string defn = "phi(a_s d_s) = a_s pi~(s)";
  out.report.declare(defn);
  for (Element s = 0; s < S.size(); ++s) {
    for (const auto& a : alpha.ideal(s).basis()) {
      Vec lhs = out.map.apply(cp.coset(s, a));
      Vec rhs = bj.multiply(ra.subalgebra.inclusion.apply(a), rq.rep(s));
      if (lhs != rhs) out.report.fail(defn, "s = " + std::to_string(s));
    }
  }
  return out;
}

PartialRep wagner_preston(const InverseSemigroup& s) {
  const std::size_t n = s.size();
  StructureAlgebra b = matrix_algebra(n);
  std::vector<Vec> images;
  for (Element x = 0; x < n; ++x) {
    Vec m = zero_vec(n * n);
    const Element dom = s.mul(s.inverse(x), x);
    for (Element y = 0; y < n; ++y) {
      if (s.mul(dom, y) == y) m[s.mul(x, y) * n + y] = 1;
    }
    images.push_back(std::move(m));
  }
  return PartialRep(s, std::move(b), std::move(images));
}

}  // namespace parcross
