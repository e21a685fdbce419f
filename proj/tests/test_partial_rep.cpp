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

#include <set>

#include "doctest.h"
#include "parcross/error.hpp"
#include "parcross/partial_rep.hpp"

using namespace parcross;

namespace {

std::vector<InverseSemigroup> small_zoo() {
  return {InverseSemigroup::cyclic_group(1),
          InverseSemigroup::cyclic_group(2),
          InverseSemigroup::cyclic_group(3),
          InverseSemigroup::chain_semilattice(2),
          InverseSemigroup::chain_semilattice(3),
          InverseSemigroup::symmetric_inverse_monoid(1),
          InverseSemigroup::symmetric_inverse_monoid(2),
          InverseSemigroup::direct_product(InverseSemigroup::cyclic_group(2),
                                           InverseSemigroup::chain_semilattice(2))};
}

// Number of distinct nonempty sets among all intersections of the domains
// {y : s s* y = y}. Their indicators span the algebra generated by the
// epsilon_s of the Wagner-Preston representation.
std::size_t domain_lattice_size(const InverseSemigroup& s) {
  std::set<std::set<Element>> family;
  for (Element x = 0; x < s.size(); ++x) {
    std::set<Element> d;
    const Element e = s.mul(x, s.inverse(x));
    for (Element y = 0; y < s.size(); ++y)
      if (s.mul(e, y) == y) d.insert(y);
    family.insert(d);
  }
  for (bool grew = true; grew;) {
    grew = false;
    auto snapshot = family;
    for (const auto& a : snapshot)
      for (const auto& b : snapshot) {
        std::set<Element> c;
        for (Element y : a)
          if (b.count(y)) c.insert(y);
        grew |= family.insert(c).second;
      }
  }
  family.erase(std::set<Element>{});
  return family.size();
}

const AxiomOutcome& outcome(const AxiomReport& r, const std::string& name) {
  const AxiomOutcome* o = r.find(name);
  REQUIRE(o != nullptr);
  return *o;
}

}  // namespace

TEST_CASE("Wagner-Preston representations satisfy the axioms and the calculus") {
  for (const auto& s : small_zoo()) {
    PartialRep pi = wagner_preston(s);
    CHECK(verify_partial_rep(pi).passed());
    CHECK(idempotent_calculus(pi).passed());
    // it is even a homomorphism
    const auto& b = pi.target();
    for (Element x = 0; x < s.size(); ++x)
      for (Element y = 0; y < s.size(); ++y) CHECK(b.multiply(pi(x), pi(y)) == pi(s.mul(x, y)));
  }
}

TEST_CASE("a scalar that is not a partial representation") {
  auto z2 = InverseSemigroup::cyclic_group(2);
  PartialRep pi(z2, field_algebra(), {Vec{1}, Vec{2}});
  AxiomReport r = verify_partial_rep(pi);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(outcome(r, "pi(s)pi(s*)pi(s) = pi(s)").passed());
  CHECK_FALSE(idempotent_calculus(pi).passed());
  // a sign character is a global, hence partial, representation
  CHECK(verify_partial_rep(PartialRep(z2, field_algebra(), {Vec{1}, Vec{-1}})).passed());
}

TEST_CASE("partial representation that is not a homomorphism") {
  // Z2 -> Q^2, g -> (1, 0): epsilon_g = (1, 0) differs from pi(1) = (1, 1).
  auto z2 = InverseSemigroup::cyclic_group(2);
  PartialRep pi(z2, product_of_fields(2), {Vec{1, 1}, Vec{1, 0}});
  CHECK(verify_partial_rep(pi).passed());
  CHECK(idempotent_calculus(pi).passed());
  CHECK(product_of_fields(2).multiply(pi(1), pi(1)) != pi(0));
  CHECK(pi.epsilon(1) == Vec{1, 0});
}

TEST_CASE("construction and target errors") {
  auto z2 = InverseSemigroup::cyclic_group(2);
  CHECK_THROWS_AS(PartialRep(z2, field_algebra(), {Vec{1}}), Error);
  CHECK_THROWS_AS(PartialRep(z2, field_algebra(), {Vec{1}, Vec{1, 0}}), Error);
  PartialRep nil(z2, zero_product_algebra(1), {Vec{0}, Vec{0}});
  try {
    verify_partial_rep(nil);
    FAIL("expected TargetNotUnital");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::target_not_unital);
  }
}

TEST_CASE("action induced by a Wagner-Preston representation") {
  for (const auto& s : small_zoo()) {
    PartialRep pi = wagner_preston(s);
    RepAction ra = action_from_rep(pi);
    CHECK(verify_partial_action(ra.action).passed());
    CHECK(ra.subalgebra.algebra.dim() == domain_lattice_size(s));
    // the generated subalgebra is commutative
    const auto& a = ra.subalgebra.algebra;
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) CHECK(a.basis_product(i, j) == a.basis_product(j, i));
    // X_s contains epsilon_s
    for (Element x = 0; x < s.size(); ++x) CHECK(ra.action.ideal(x).contains(ra.epsilons[x]));
  }
  CHECK(action_from_rep(wagner_preston(InverseSemigroup::cyclic_group(3))).subalgebra.algebra.dim() == 1);
  CHECK(action_from_rep(wagner_preston(InverseSemigroup::chain_semilattice(3))).subalgebra.algebra.dim() == 3);
}

TEST_CASE("representation from an action") {
  auto s = InverseSemigroup::chain_semilattice(2);
  PartialAction alpha(s, product_of_fields(2), {Subspace::span(2, {unit_vec(2, 0)}), Subspace::full(2)},
                      {Matrix::identity(1), Matrix::identity(2)});
  ActionRep ar = rep_from_action(alpha);
  CHECK(verify_partial_rep(ar.rep).passed());
  CHECK(idempotent_calculus(ar.rep).passed());
  CHECK(ar.units[0] == Vec{1, 0});
  CHECK(ar.units[1] == Vec{1, 1});

  // ideal without a unit
  PartialAction nil(s, dual_numbers(), {Subspace::span(2, {unit_vec(2, 1)}), Subspace::full(2)},
                    {Matrix::identity(1), Matrix::identity(2)});
  try {
    rep_from_action(nil);
    FAIL("expected NonUnitalIdeal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::non_unital_ideal);
  }
}

TEST_CASE("round trip rep -> action -> rep is consistent") {
  for (const auto& s : small_zoo()) {
    RepAction ra = action_from_rep(wagner_preston(s));
    ActionRep ar = rep_from_action(ra.action);
    CHECK(verify_partial_rep(ar.rep).passed());
    // the epsilon of the new rep is the coset of 1_s d_1
    const Element one = *s.unit();
    for (Element x = 0; x < s.size(); ++x) CHECK(ar.rep.epsilon(x) == ar.crossed.coset(one, ar.units[x]));
  }
}

TEST_CASE("equivalence under a relabelling of matrix units") {
  auto s = InverseSemigroup::symmetric_inverse_monoid(2);
  PartialRep pi = wagner_preston(s);
  const std::size_t n = s.size();
  auto q = [n](std::size_t i) { return (i + 3) % n; };
  std::vector<Vec> moved;
  for (Element x = 0; x < n; ++x) {
    Vec v = zero_vec(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v[q(i) * n + q(j)] = pi(x)[i * n + j];
    moved.push_back(v);
  }
  PartialRep other(s, matrix_algebra(n), moved);
  Matrix phi(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) phi.set_column(q(i) * n + q(j), unit_vec(n * n, i * n + j));
  CHECK(verify_rep_equivalence(pi, other, phi).ok);
  CHECK_FALSE(verify_rep_equivalence(pi, other, Matrix::identity(n * n)).ok);
  CHECK_FALSE(verify_rep_equivalence(pi, wagner_preston(InverseSemigroup::symmetric_inverse_monoid(1)),
                                     Matrix::identity(4))
                  .ok);
}

TEST_CASE("quotient by the order relations") {
  // groups have a trivial natural order
  PartialRep z3 = wagner_preston(InverseSemigroup::cyclic_group(3));
  RepQuotient rq = rep_quotient(z3);
  CHECK(rq.ideal.dim() == 0);
  CHECK(rq.quotient.algebra.dim() == 9);

  // for a chain pi(r) - pi(t) generates a proper ideal of M_n, hence all of it
  RepQuotient rc = rep_quotient(wagner_preston(InverseSemigroup::chain_semilattice(2)));
  CHECK(rc.ideal.dim() == 4);
  CHECK(rc.quotient.algebra.dim() == 0);

  // a rep that already identifies r <= t
  auto c2 = InverseSemigroup::chain_semilattice(2);
  RepQuotient same = rep_quotient(PartialRep(c2, product_of_fields(2), {Vec{1, 1}, Vec{1, 1}}));
  CHECK(same.ideal.dim() == 0);
  // Q^2 with pi = ((1,0), (1,1)): J is spanned by (0,1)
  RepQuotient cut = rep_quotient(PartialRep(c2, product_of_fields(2), {Vec{1, 0}, Vec{1, 1}}));
  CHECK(cut.ideal.dim() == 1);
  CHECK(cut.ideal.contains(Vec{0, 1}));
  for (Element x = 0; x < 2; ++x) CHECK(cut.rep(x) == Vec{1});
}

TEST_CASE("phi from the crossed product to B/J") {
  for (const auto& s : small_zoo()) {
    RepQuotient rq = rep_quotient(wagner_preston(s));
    if (rq.quotient.algebra.dim() == 0) continue;
    RepAction ra = action_from_rep(rq.rep);
    ActionRep ar = rep_from_action(ra.action);
    PhiHom ph = phi_hom(rq, ra, ar);
    CHECK(ph.report.passed());
    CHECK(ph.map.rows() == rq.quotient.algebra.dim());
    CHECK(ph.map.cols() == ar.crossed.algebra().dim());
  }
}
