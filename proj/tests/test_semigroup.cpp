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

#include "doctest.h"
#include "oracles.hpp"
#include "parcross/error.hpp"
#include "parcross/semigroup.hpp"

using namespace parcross;

namespace {

std::vector<InverseSemigroup> zoo() {
  std::vector<InverseSemigroup> out;
  for (std::size_t n = 1; n <= 6; ++n) out.push_back(InverseSemigroup::cyclic_group(n));
  for (std::size_t n = 1; n <= 4; ++n) out.push_back(InverseSemigroup::chain_semilattice(n));
  for (std::size_t n = 1; n <= 3; ++n) out.push_back(InverseSemigroup::symmetric_inverse_monoid(n));
  out.push_back(InverseSemigroup::direct_product(InverseSemigroup::cyclic_group(2),
                                                 InverseSemigroup::chain_semilattice(2)));
  return out;
}

}  // namespace

TEST_CASE("symmetric inverse monoids have the partial-injection count") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto s = InverseSemigroup::symmetric_inverse_monoid(n);
    CHECK(s.size() == oracle::partial_injection_count(n));
  }
  CHECK(InverseSemigroup::symmetric_inverse_monoid(2).size() == 7);
}

TEST_CASE("SIM(2) composes as functions") {
  auto s = InverseSemigroup::symmetric_inverse_monoid(2);
  // labels are 1-based, e.g. {1->2}
  Element swap = s.size(), fix0 = s.size(), id = *s.unit();
  for (Element x = 0; x < s.size(); ++x) {
    if (s.label(x) == "{1->2,2->1}") swap = x;
    if (s.label(x) == "{1->1}") fix0 = x;
  }
  REQUIRE(swap < s.size());
  REQUIRE(fix0 < s.size());
  CHECK(s.mul(swap, swap) == id);
  // (swap . fix0)(1) = swap(1) = 2
  CHECK(s.label(s.mul(swap, fix0)) == "{1->2}");
  CHECK(s.label(s.mul(fix0, swap)) == "{2->1}");
}

TEST_CASE("every built-in semigroup passes the axioms") {
  for (const auto& s : zoo()) CHECK(verify_inverse_semigroup(s.table()).passed());
}

TEST_CASE("left-zero semigroup is rejected for non-commuting idempotents") {
  CayleyTable t{2, {{0, 0}, {1, 1}}, std::nullopt};
  AxiomReport r = verify_inverse_semigroup(t);
  CHECK_FALSE(r.passed());
  const AxiomOutcome* idem = nullptr;
  for (const auto& o : r.outcomes()) {
    if (o.axiom.find("idempotents commute") != std::string::npos) idem = &o;
  }
  REQUIRE(idem != nullptr);
  CHECK_FALSE(idem->passed());
  REQUIRE_FALSE(idem->witnesses.empty());
  CHECK_THROWS_AS(InverseSemigroup::from_table(t), Error);
  try {
    InverseSemigroup::from_table(t);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_inverse_semigroup);
  }
}

TEST_CASE("malformed tables") {
  CHECK_THROWS_AS(InverseSemigroup::from_table({2, {{0, 1}}, std::nullopt}), Error);
  CHECK_THROWS_AS(InverseSemigroup::from_table({2, {{0, 2}, {1, 0}}, std::nullopt}), Error);
  CHECK_THROWS_AS(InverseSemigroup::from_table({2, {{0, 1}, {1, 0}}, 5}), Error);
  // declared unit that is not one
  CayleyTable z2{2, {{0, 1}, {1, 0}}, 1};
  CHECK_FALSE(verify_inverse_semigroup(z2).passed());
}

TEST_CASE("inverse and natural order properties") {
  for (const auto& s : zoo()) {
    const std::size_t n = s.size();
    for (Element a = 0; a < n; ++a) {
      const Element ai = s.inverse(a);
      CHECK(s.mul(a, ai, a) == a);
      CHECK(s.mul(ai, a, ai) == ai);
      CHECK(s.inverse(ai) == a);
      CHECK(s.natural_leq(a, a));
      for (Element b = 0; b < n; ++b) {
        CHECK(s.inverse(s.mul(a, b)) == s.mul(s.inverse(b), ai));
        // antisymmetry
        if (a != b && s.natural_leq(a, b)) CHECK_FALSE(s.natural_leq(b, a));
        // on idempotents the order is e <= f iff e = ef
        if (s.is_idempotent(a) && s.is_idempotent(b)) {
          CHECK(s.natural_leq(a, b) == (a == s.mul(a, b)));
        }
        for (Element c = 0; c < n; ++c) {
          if (s.natural_leq(a, b) && s.natural_leq(b, c)) CHECK(s.natural_leq(a, c));
        }
      }
    }
  }
}

TEST_CASE("idempotents of a group and a chain") {
  CHECK(InverseSemigroup::cyclic_group(5).idempotents().size() == 1);
  CHECK(InverseSemigroup::chain_semilattice(4).idempotents().size() == 4);
  // idempotents of SIM(n) are the partial identities: 2^n of them
  CHECK(InverseSemigroup::symmetric_inverse_monoid(3).idempotents().size() == 8);
}

TEST_CASE("errors for out-of-range elements and missing units") {
  auto s = InverseSemigroup::cyclic_group(3);
  CHECK_THROWS_AS(s.inverse(3), Error);
  CHECK_THROWS_AS(s.natural_leq(0, 7), Error);
  CayleyTable zero{1, {{0}}, std::nullopt};
  auto t = InverseSemigroup::from_table(zero);
  try {
    t.require_unit();
    FAIL("expected MissingUnit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::missing_unit);
  }
}

TEST_CASE("direct product structure") {
  auto p = InverseSemigroup::direct_product(InverseSemigroup::cyclic_group(2),
                                            InverseSemigroup::chain_semilattice(3));
  CHECK(p.size() == 6);
  REQUIRE(p.unit());
  CHECK(p.idempotents().size() == 3);
}
