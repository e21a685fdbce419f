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

#include <string>

#include "doctest.h"
#include "parcross/commands.hpp"
#include "parcross/text_format.hpp"
#include "json.hpp"

using namespace parcross;

namespace {

const std::filesystem::path kData = PARCROSS_TEST_DATA;

long long dim_of(const Report& r, const std::string& key) {
  for (const auto& [k, v] : r.dims)
    if (k == key) return v;
  FAIL("missing dim " << key);
  return -1;
}

const Check* check_named(const Report& r, const std::string& needle) {
  for (const auto& c : r.checks)
    if (c.name.find(needle) != std::string::npos) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("verify-semigroup") {
  Report ok = cmd_verify_semigroup(InverseSemigroup::symmetric_inverse_monoid(2).table());
  CHECK(ok.status() == Status::pass);
  CHECK(dim_of(ok, "size") == 7);
  CHECK(dim_of(ok, "idempotents") == 4);
  Report bad = cmd_verify_semigroup(load_cayley_table((kData / "leftzero.sg").string()));
  CHECK(bad.status() == Status::fail);
  const Check* c = check_named(bad, "idempotents commute");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->verdict);
  CHECK(c->witness.has_value());
  CHECK(bad.exit_code() == 1);
}

TEST_CASE("verify-action and crossed-product") {
  auto padded = load_action((kData / "padded.act").string());
  CHECK(cmd_verify_action(padded).status() == Status::pass);
  Report cp = cmd_crossed_product(padded);
  CHECK(cp.status() == Status::pass);
  CHECK(dim_of(cp, "dim L") == 3);
  CHECK(dim_of(cp, "dim crossed product") == 2);
  // the artifact is a loadable algebra of the reported dimension
  CHECK(parse_algebra(cp.artifact).dim() == 2);

  Report twisted = cmd_crossed_product(load_action((kData / "twisted.act").string()));
  CHECK(twisted.status() == Status::fail);
  const Check* a = check_named(twisted, "associative");
  REQUIRE(a != nullptr);
  CHECK_FALSE(a->verdict);
  CHECK(a->witness.has_value());
}

TEST_CASE("library errors become failing checks") {
  auto s = InverseSemigroup::chain_semilattice(2);
  PartialAction broken(s, product_of_fields(2), {Subspace::span(2, {unit_vec(2, 0)}), Subspace::full(2)},
                       {Matrix::from_rows(1, {{2}}), Matrix::identity(2)});
  Report r = cmd_crossed_product(broken);
  CHECK(r.status() == Status::fail);
  bool mentions = false;
  for (const auto& c : r.checks)
    if (c.witness && c.witness->find("NotValidated") != std::string::npos) mentions = true;
  CHECK(mentions);

  PartialRep nil(InverseSemigroup::cyclic_group(2), zero_product_algebra(1), {Vec{0}, Vec{0}});
  CHECK(cmd_verify_rep(nil).status() == Status::fail);
}

TEST_CASE("criterion commands over a corpus") {
  auto corpus = generate_corpus({7, 20, std::nullopt, std::nullopt});
  for (const auto& r : {cmd_lr_criterion(corpus), cmd_ideal_criterion(corpus), cmd_semiprime_criterion(corpus)}) {
    CHECK(r.status() == Status::pass);
    CHECK(dim_of(r, "instances") == 20);
  }
  // the twisted action is a genuine non-associative instance; the
  // implications still hold because the hypotheses fail
  std::vector<CorpusInstance> one{{"cyclic:2", "triangular", "file", load_action((kData / "twisted.act").string())}};
  Report lr = cmd_lr_criterion(one);
  CHECK(lr.status() == Status::pass);
  CHECK(dim_of(lr, "associative crossed products") == 0);
  CHECK(dim_of(lr, "all ideals (L,R)-associative") == 0);
  CHECK(cmd_ideal_criterion(one).status() == Status::pass);
  CHECK(cmd_corpus(corpus).status() == Status::pass);
}

TEST_CASE("representation commands") {
  PartialRep wp = wagner_preston(InverseSemigroup::symmetric_inverse_monoid(2));
  CHECK(cmd_verify_rep(wp).status() == Status::pass);
  CHECK(cmd_idempotent_calculus(wp).status() == Status::pass);
  CHECK(cmd_action_from_rep(wp).status() == Status::pass);
  CHECK(cmd_quotient_hom(wp).status() == Status::pass);
  CHECK(cmd_rep_from_action(load_action((kData / "padded.act").string())).status() == Status::pass);
  Report bad = cmd_idempotent_calculus(load_rep((kData / "notrep.rep").string()));
  CHECK(bad.status() == Status::fail);
}

TEST_CASE("expansion commands") {
  auto z2 = InverseSemigroup::cyclic_group(2);
  Report pr = cmd_build_pr(z2, {});
  CHECK(pr.status() == Status::pass);
  CHECK(dim_of(pr, "|Pr(S)|") == 3);
  CHECK(parse_cayley_table(pr.artifact).size == 3);
  Report capped = cmd_build_pr(InverseSemigroup::cyclic_group(4), {5, 12});
  CHECK(capped.status() == Status::cap_exceeded);
  CHECK(capped.exit_code() == 1);
  CHECK(cmd_build_kpar(z2, {}).status() == Status::pass);
  Report iso = cmd_expansion_iso(InverseSemigroup::symmetric_inverse_monoid(2), {});
  CHECK(iso.status() == Status::pass);
  CHECK(dim_of(iso, "|Pr(S)|") == 10);
  CHECK(dim_of(iso, "dim K_par(S)/J") == dim_of(iso, "dim crossed product"));
  CHECK(cmd_expansion_iso(z2, {2, 12}).status() == Status::cap_exceeded);
}

TEST_CASE("report rendering") {
  Report r = cmd_build_pr(InverseSemigroup::cyclic_group(2), {});
  auto j = nlohmann::json::parse(r.to_json());
  CHECK(j["status"] == "pass");
  CHECK(j["dims"]["|Pr(S)|"] == 3);
  CHECK(j["checks"].is_array());
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("verdict"));
  }
  const std::string text = r.to_text();
  CHECK(text.find("status: pass") != std::string::npos);
  CHECK(text.find("[pass]") != std::string::npos);
  CHECK(r.to_json() == cmd_build_pr(InverseSemigroup::cyclic_group(2), {}).to_json());
}
