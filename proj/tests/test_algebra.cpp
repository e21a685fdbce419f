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

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "parcross/algebra.hpp"
#include "parcross/error.hpp"

using namespace parcross;

namespace {

oracle::Cube cube(const StructureAlgebra& a) {
  const std::size_t d = a.dim();
  oracle::Cube c(d, std::vector<oracle::QVec>(d, oracle::QVec(d, 0)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [k, q] : a.product(i, j)) c[i][j][k] = q;
  return c;
}

// Smallest subspace holding gens and closed under multiplication by basis
// elements on either side, by naive iteration to a fixpoint.
Subspace fixpoint_ideal(const StructureAlgebra& a, const std::vector<Vec>& gens) {
  Subspace x = Subspace::span(a.dim(), gens);
  bool grew = true;
  while (grew) {
    grew = false;
    auto basis = x.basis();
    for (const auto& v : basis)
      for (std::size_t i = 0; i < a.dim(); ++i) {
        grew |= x.insert(a.multiply(unit_vec(a.dim(), i), v));
        grew |= x.insert(a.multiply(v, unit_vec(a.dim(), i)));
      }
  }
  return x;
}

bool nilpotent(const StructureAlgebra& a, const Subspace& ideal) {
  Subspace power = ideal;
  for (std::size_t k = 0; k <= a.dim() + 1; ++k) {
    if (power.dim() == 0) return true;
    Subspace next(a.dim());
    for (const auto& u : power.basis())
      for (const auto& v : ideal.basis()) next.insert(a.multiply(u, v));
    power = next;
  }
  return false;
}

// Searches principal ideals generated by {-1, 0, 1} vectors for a nonzero
// nilpotent one. Complete for algebras whose radical contains such a vector.
bool has_nilpotent_ideal(const StructureAlgebra& a) {
  const std::size_t d = a.dim();
  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= 3;
  for (std::size_t code = 1; code < total; ++code) {
    Vec x(d);
    std::size_t c = code;
    for (std::size_t i = 0; i < d; ++i, c /= 3) x[i] = static_cast<long>(c % 3) - 1;
    if (is_zero(x)) continue;
    if (nilpotent(a, fixpoint_ideal(a, {x}))) return true;
  }
  return false;
}

StructureAlgebra two_dim_nonassociative() {
  std::vector<SparseVec> t(4);
  t[0 * 2 + 0] = {{1, 1}};  // e0 e0 = e1
  t[0 * 2 + 1] = {{0, 1}};  // e0 e1 = e0
  return StructureAlgebra::from_sparse(2, t);
}

}  // namespace

TEST_CASE("built-in algebras are associative with working units") {
  for (const auto& a : {field_algebra(), product_of_fields(3), dual_numbers(), matrix_algebra(2),
                        matrix_algebra(3), zero_product_algebra(2)}) {
    CHECK(check_associative(a).associative);
    CHECK(a.associativity() == Associativity::verified);
    if (a.unit()) {
      for (std::size_t i = 0; i < a.dim(); ++i) {
        CHECK(a.multiply(*a.unit(), unit_vec(a.dim(), i)) == unit_vec(a.dim(), i));
      }
    }
  }
  CHECK_FALSE(zero_product_algebra(2).unit().has_value());
  CHECK(zero_product_algebra(0).unit().has_value());
}

TEST_CASE("matrix units multiply as E_ij E_kl = delta_jk E_il") {
  auto m = matrix_algebra(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l) {
          Vec expect = j == k ? unit_vec(9, i * 3 + l) : zero_vec(9);
          CHECK(m.basis_product(i * 3 + j, k * 3 + l) == expect);
        }
}

TEST_CASE("associativity counterexample is found with its witness") {
  auto a = two_dim_nonassociative();
  auto r = check_associative(a);
  CHECK_FALSE(r.associative);
  REQUIRE(r.witness);
  const auto [i, j, k] = *r.witness;
  Vec ei = unit_vec(2, i), ej = unit_vec(2, j), ek = unit_vec(2, k);
  CHECK(a.multiply(a.multiply(ei, ej), ek) != a.multiply(ei, a.multiply(ej, ek)));
  CHECK(r.witness == std::array<std::size_t, 3>{0, 0, 0});
  CHECK(checked(a).associativity() == Associativity::refuted);
}

TEST_CASE("supplied units are validated") {
  std::vector<SparseVec> t(1, SparseVec{{0, 1}});
  CHECK_NOTHROW(StructureAlgebra::from_sparse(1, t, Vec{1}));
  try {
    StructureAlgebra::from_sparse(1, t, Vec{2});
    FAIL("expected NotUnit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_unit);
  }
  CHECK_THROWS_AS(StructureAlgebra::from_sparse(2, t), Error);
}

TEST_CASE("ideal closure agrees with the fixpoint oracle") {
  std::mt19937_64 rng(21);
  for (const auto& a : {matrix_algebra(2), dual_numbers(), product_of_fields(3), zero_product_algebra(3)}) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Vec> gens;
      for (std::size_t g = 0, n = 1 + rng() % 2; g < n; ++g) {
        Vec v(a.dim());
        for (auto& x : v) x = static_cast<long>(rng() % 3) - 1;
        gens.push_back(v);
      }
      Subspace i = ideal_closure(a, gens);
      CHECK(i == fixpoint_ideal(a, gens));
      CHECK_FALSE(ideal_violation(a, i).has_value());
    }
  }
  CHECK(ideal_closure(dual_numbers(), {Vec{0, 1}}).dim() == 1);
  CHECK(ideal_closure(matrix_algebra(2), {unit_vec(4, 1)}).dim() == 4);
}

TEST_CASE("quotients") {
  auto dual = dual_numbers();
  Subspace x = Subspace::span(2, {Vec{0, 1}});
  Quotient q = quotient_algebra(dual, x);
  CHECK(q.algebra.dim() == 1);
  REQUIRE(q.algebra.unit());
  CHECK(q.project(*dual.unit()) == *q.algebra.unit());
  CHECK(q.project(Vec{3, 5}) == Vec{3});
  CHECK(q.project(q.lift(Vec{7})) == Vec{7});
  try {
    quotient_algebra(dual, Subspace::span(2, {Vec{1, 0}}));
    FAIL("expected NotAnIdeal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_an_ideal);
  }
  // The projection is multiplicative (property).
  auto m = product_of_fields(3);
  Quotient qm = quotient_algebra(m, Subspace::span(3, {unit_vec(3, 1)}));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Vec ei = unit_vec(3, i), ej = unit_vec(3, j);
      CHECK(qm.project(m.multiply(ei, ej)) == qm.algebra.multiply(qm.project(ei), qm.project(ej)));
    }
  // Quotient by everything is the zero algebra, unital with the empty unit.
  Quotient all = quotient_algebra(m, Subspace::full(3));
  CHECK(all.algebra.dim() == 0);
}

TEST_CASE("induced algebras, subalgebras and units of ideals") {
  auto m = product_of_fields(3);
  Subspace x = Subspace::span(3, {unit_vec(3, 0), unit_vec(3, 1)});
  auto u = unit_of(m, x);
  REQUIRE(u);
  CHECK(*u == Vec{1, 1, 0});
  CHECK(induced_algebra(m, x).dim() == 2);
  CHECK(induced_algebra(m, x).unit().has_value());
  CHECK_FALSE(unit_of(dual_numbers(), Subspace::span(2, {Vec{0, 1}})).has_value());
  auto zero = unit_of(m, Subspace(3));
  REQUIRE(zero);
  CHECK(is_zero(*zero));
  try {
    induced_algebra(dual_numbers(), Subspace::span(2, {Vec{1, 1}}));
    FAIL("expected NotClosed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_closed);
  }
  Subalgebra s = subalgebra_generated(matrix_algebra(2), {unit_vec(4, 0)});
  CHECK(s.algebra.dim() == 1);
  Subalgebra t = subalgebra_generated(matrix_algebra(2), {unit_vec(4, 1), unit_vec(4, 2)});
  CHECK(t.algebra.dim() == 4);
  for (std::size_t j = 0; j < t.algebra.dim(); ++j) CHECK(t.carrier.contains(t.inclusion.column(j)));
}

TEST_CASE("ideal diagnostics") {
  auto d = ideal_diagnostics(dual_numbers(), Subspace::span(2, {Vec{0, 1}}));
  CHECK_FALSE(d.idempotent);
  CHECK_FALSE(d.nondegenerate);
  auto f = ideal_diagnostics(product_of_fields(2), Subspace::span(2, {unit_vec(2, 0)}));
  CHECK(f.idempotent);
  CHECK(f.nondegenerate);
  auto m = ideal_diagnostics(matrix_algebra(2), Subspace::full(4));
  CHECK(m.idempotent);
  CHECK(m.nondegenerate);
  CHECK_THROWS_AS(ideal_diagnostics(dual_numbers(), Subspace::span(2, {Vec{1, 0}})), Error);
}

TEST_CASE("multiplier space dimensions match the independent constraint solve") {
  CHECK(multiplier_space(field_algebra()).size() == 1);
  CHECK(multiplier_space(zero_product_algebra(1)).size() == 2);
  CHECK(multiplier_space(matrix_algebra(2)).size() == 4);
  for (const auto& a : {field_algebra(), zero_product_algebra(1), zero_product_algebra(2),
                        matrix_algebra(2), dual_numbers(), product_of_fields(3), two_dim_nonassociative()}) {
    CHECK(multiplier_space(a).size() == oracle::multiplier_dim(cube(a)));
  }
}

TEST_CASE("multiplier pairs satisfy their identities (property)") {
  for (const auto& a : {dual_numbers(), matrix_algebra(2), product_of_fields(2)}) {
    for (const auto& [l, r] : multiplier_space(a)) {
      for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
          Vec x = unit_vec(a.dim(), i), y = unit_vec(a.dim(), j);
          CHECK(l.apply(a.multiply(x, y)) == a.multiply(l.apply(x), y));
          CHECK(r.apply(a.multiply(x, y)) == a.multiply(x, r.apply(y)));
          CHECK(a.multiply(r.apply(x), y) == a.multiply(x, l.apply(y)));
        }
    }
  }
}

TEST_CASE("(L,R)-associativity") {
  // In the 2-dim zero-product algebra every pair of maps is a multiplier, so
  // L = E_01 and R = E_10 is a non-commuting choice.
  Matrix l = Matrix::from_rows(2, {{0, 1}, {0, 0}});
  Matrix r = Matrix::from_rows(2, {{0, 0}, {1, 0}});
  CHECK(l * r != r * l);
  auto z2 = zero_product_algebra(2);
  auto res = lr_associativity(z2);
  CHECK_FALSE(res.lr_associative);
  REQUIRE(res.witness);
  auto space = multiplier_space(z2);
  const auto [p, q] = *res.witness;
  CHECK(space[p].left * space[q].right != space[q].right * space[p].left);

  CHECK(is_lr_associative(field_algebra()));
  CHECK(is_lr_associative(matrix_algebra(2)));
  CHECK(is_lr_associative(product_of_fields(3)));
  CHECK(is_lr_associative(dual_numbers()));  // unital
  CHECK(is_lr_associative(zero_product_algebra(0)));
}

TEST_CASE("semiprimeness against a nilpotent-ideal search") {
  CHECK(is_semiprime(matrix_algebra(2)));
  CHECK(is_semiprime(field_algebra()));
  CHECK(is_semiprime(product_of_fields(3)));
  CHECK_FALSE(is_semiprime(dual_numbers()));
  CHECK_FALSE(is_semiprime(zero_product_algebra(1)));
  for (const auto& a : {matrix_algebra(2), field_algebra(), product_of_fields(2), product_of_fields(3),
                        dual_numbers(), zero_product_algebra(1), zero_product_algebra(2)}) {
    CHECK(is_semiprime(a) == !has_nilpotent_ideal(a));
  }
  CHECK(trace_radical(dual_numbers()) == Subspace::span(2, {Vec{0, 1}}));
  try {
    trace_radical(two_dim_nonassociative());
    FAIL("expected NotAssociative");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_associative);
  }
}

TEST_CASE("linear homomorphism checks") {
  auto f2 = product_of_fields(2);
  Matrix swap = Matrix::from_rows(2, {{0, 1}, {1, 0}});
  CHECK(verify_linear_hom(f2, f2, swap, true).ok);
  CHECK_FALSE(verify_linear_hom(f2, f2, Matrix(2, 2), true).ok);
  // Q[x]/(x^2) -> Q, x -> 0
  Matrix eval = Matrix::from_rows(2, {{1, 0}});
  CHECK(verify_linear_hom(dual_numbers(), field_algebra(), eval, false).ok);
  CHECK_FALSE(verify_linear_hom(dual_numbers(), field_algebra(), eval, true).ok);
  // x -> 1 is not multiplicative: x^2 = 0 but 1 * 1 = 1
  Matrix bad = Matrix::from_rows(2, {{1, 1}});
  auto h = verify_linear_hom(dual_numbers(), field_algebra(), bad, false);
  CHECK_FALSE(h.ok);
  CHECK_FALSE(h.witness.empty());
  CHECK_THROWS_AS(verify_linear_hom(f2, f2, Matrix(3, 2), false), Error);
}
