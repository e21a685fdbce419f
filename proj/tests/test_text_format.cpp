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

#include <filesystem>

#include "doctest.h"
#include "parcross/error.hpp"
#include "parcross/text_format.hpp"

using namespace parcross;

namespace {

const std::filesystem::path kData = PARCROSS_TEST_DATA;

std::string data(const char* name) { return (kData / name).string(); }

template <typename Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::usage_error;
}

}  // namespace

TEST_CASE("semigroup files") {
  auto z2 = load_semigroup(data("z2.sg"));
  CHECK(z2 == InverseSemigroup::cyclic_group(2));
  auto c2 = load_semigroup(data("chain2.sg"));
  CHECK(c2 == InverseSemigroup::chain_semilattice(2));
  CHECK(code_of([] { load_semigroup(data("leftzero.sg")); }) == ErrorCode::not_inverse_semigroup);
  // the raw table still loads for diagnosis
  CHECK(load_cayley_table(data("leftzero.sg")).size == 2);
}

TEST_CASE("parse errors carry line and column") {
  try {
    load_cayley_table(data("badrange.sg"));
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 17);  // after the 14-line licence header
    CHECK(e.column() == 3);
  }
  try {
    parse_algebra("dim 2\n0 0 x 1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 5);
  }
  CHECK_THROWS_AS(parse_cayley_table(""), ParseError);
  CHECK_THROWS_AS(parse_cayley_table("n 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_cayley_table("n 2\n0 1\n1 0\n0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra("dim 1\n0 0 0 1\n0 0 0 2\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra("dim 1\nunit 1 1\n"), ParseError);
}

TEST_CASE("comments and blank lines are ignored") {
  auto t = parse_cayley_table("# header\n\nn 1   # size\n0\n");
  CHECK(t.size == 1);
  CHECK(t.mul == std::vector<std::vector<Element>>{{0}});
}

TEST_CASE("formats round trip") {
  for (const auto& s : {InverseSemigroup::symmetric_inverse_monoid(2), InverseSemigroup::cyclic_group(3),
                        InverseSemigroup::chain_semilattice(3)}) {
    CHECK(parse_semigroup(format_semigroup(s.table())) == s);
  }
  for (const auto& a : {field_algebra(), dual_numbers(), matrix_algebra(2), zero_product_algebra(2),
                        product_of_fields(3)}) {
    CHECK(parse_algebra(format_algebra(a)) == a);
  }
  auto a = StructureAlgebra::from_sparse(1, {{{0, Rational(-3, 7)}}});
  CHECK(parse_algebra(format_algebra(a)) == a);

  auto alpha = load_action(data("padded.act"));
  auto again = parse_action(format_action(alpha, "chain:2", "fields:2"), kData);
  CHECK(again.semigroup() == alpha.semigroup());
  CHECK(again.algebra() == alpha.algebra());
  for (Element s = 0; s < 2; ++s) {
    CHECK(again.ideal(s) == alpha.ideal(s));
    CHECK(again.map(s) == alpha.map(s));
  }

  auto pi = load_rep(data("sign.rep"));
  auto pi2 = parse_rep(format_rep(pi, "cyclic:2", "field"), kData);
  CHECK(pi2.images() == pi.images());
}

TEST_CASE("action files") {
  auto alpha = load_action(data("padded.act"));
  CHECK(alpha.ideal(0).dim() == 1);
  CHECK(verify_partial_action(alpha).passed());
  auto twisted = load_action(data("twisted.act"));
  CHECK(verify_partial_action(twisted).passed());
  CHECK(twisted.map(1) == Matrix::from_rows(2, {{1, 1}, {0, -1}}));
  CHECK(code_of([] { load_action(data("baddims.act")); }) == ErrorCode::consistency_error);
  CHECK(code_of([] { load_action(data("missing.act")); }) == ErrorCode::io_error);
  CHECK_THROWS_AS(parse_action("semigroup cyclic:2\nalgebra field\nideal 0: 1\nideal 0: 1\n", kData), ParseError);
  CHECK_THROWS_AS(parse_action("ideal 0: 1\n", kData), ParseError);
  CHECK_THROWS_AS(parse_action("semigroup cyclic:2\nalgebra field\nideal 5: 1\n", kData), ParseError);
  // omitted elements get the zero ideal
  auto sparse = parse_action("semigroup chain:2\nalgebra field\nideal 1: 1\nmap 1: 1\n", kData);
  CHECK(sparse.ideal(0).dim() == 0);
}

TEST_CASE("rep files") {
  auto pi = load_rep(data("sign.rep"));
  CHECK(verify_partial_rep(pi).passed());
  CHECK_FALSE(verify_partial_rep(load_rep(data("notrep.rep"))).passed());
  CHECK_THROWS_AS(parse_rep("semigroup cyclic:2\nalgebra field\nrep 0: 1\n", kData), Error);
}

TEST_CASE("family names") {
  CHECK(semigroup_family("trivial").size() == 1);
  CHECK(semigroup_family("cyclic:4") == InverseSemigroup::cyclic_group(4));
  CHECK(semigroup_family("chain:3") == InverseSemigroup::chain_semilattice(3));
  CHECK(semigroup_family("sim:2").size() == 7);
  CHECK(semigroup_family("cyclic:2*chain:2").size() == 4);
  CHECK(algebra_family("m2") == matrix_algebra(2));
  CHECK(algebra_family("fields:3") == product_of_fields(3));
  CHECK(algebra_family("zero:2").dim() == 2);
  for (const char* bad : {"cyclic:0", "sim:0", "sim:9", "nope", "cyclic:", "chain:x"}) {
    CHECK(code_of([bad] { semigroup_family(bad); }) == ErrorCode::usage_error);
  }
  CHECK(code_of([] { algebra_family("matrix:99"); }) == ErrorCode::usage_error);
  CHECK(load_algebra("dual") == dual_numbers());
  CHECK(load_algebra(data("q2.alg")) == product_of_fields(2));
}
