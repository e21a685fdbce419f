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

// Exercises the shared library through parcross.h only.

#include <string>

#include "doctest.h"
#include "json.hpp"
#include "parcross/parcross.h"

namespace {

const std::string kData = PARCROSS_TEST_DATA;

std::string render(const pc_report* r, pc_format f) {
  char* s = nullptr;
  REQUIRE(pc_report_render(r, f, &s) == PC_OK);
  std::string out(s);
  pc_string_free(s);
  return out;
}

nlohmann::json as_json(const pc_report* r) { return nlohmann::json::parse(render(r, PC_FORMAT_JSON)); }

}  // namespace

TEST_CASE("options defaults") {
  pc_options o;
  pc_options_default(&o);
  CHECK(o.seed == 7);
  CHECK(o.corpus_size == 50);
  CHECK(o.cap == 10000);
  CHECK(o.max_word_length == 12);
}

TEST_CASE("loading and error reporting") {
  pc_semigroup* s = nullptr;
  REQUIRE(pc_semigroup_load("sim:2", &s) == PC_OK);
  CHECK(pc_semigroup_size(s) == 7);
  pc_semigroup_free(s);

  s = nullptr;
  CHECK(pc_semigroup_load((kData + "/leftzero.sg").c_str(), &s) == PC_NOT_INVERSE_SEMIGROUP);
  CHECK(s == nullptr);
  CHECK(std::string(pc_last_error()).size() > 0);
  CHECK(pc_semigroup_load((kData + "/badrange.sg").c_str(), &s) == PC_PARSE_ERROR);
  CHECK(std::string(pc_last_error()).find("line 17") != std::string::npos);
  CHECK(pc_semigroup_load("bogus:1", &s) == PC_USAGE_ERROR);
  CHECK(pc_semigroup_load(nullptr, &s) == PC_INVALID_ARGUMENT);

  pc_algebra* a = nullptr;
  REQUIRE(pc_algebra_load((kData + "/q2.alg").c_str(), &a) == PC_OK);
  CHECK(pc_algebra_dim(a) == 2);
  pc_algebra_free(a);

  pc_action* act = nullptr;
  CHECK(pc_action_load((kData + "/baddims.act").c_str(), &act) == PC_CONSISTENCY_ERROR);
  CHECK(pc_action_load((kData + "/nowhere.act").c_str(), &act) == PC_IO_ERROR);
  CHECK(std::string(pc_status_name(PC_CAP_EXCEEDED)).size() > 0);
  // freeing NULL is a no-op
  pc_semigroup_free(nullptr);
  pc_report_free(nullptr);
  pc_string_free(nullptr);
}

TEST_CASE("action commands through handles") {
  pc_action* act = nullptr;
  REQUIRE(pc_action_load((kData + "/padded.act").c_str(), &act) == PC_OK);
  pc_report* r = nullptr;
  REQUIRE(pc_cmd_crossed_product(act, &r) == PC_OK);
  CHECK(pc_report_outcome(r) == PC_PASS);
  auto j = as_json(r);
  CHECK(j["dims"]["dim crossed product"] == 2);
  char* art = nullptr;
  REQUIRE(pc_report_artifact(r, &art) == PC_OK);
  CHECK(std::string(art).rfind("dim 2", 0) == 0);
  pc_string_free(art);
  REQUIRE(pc_report_set_command(r, "crossed-product") == PC_OK);
  CHECK(as_json(r)["command"] == "crossed-product");
  CHECK(render(r, PC_FORMAT_TEXT).find("status: pass") != std::string::npos);
  pc_report_free(r);

  pc_corpus* one = nullptr;
  REQUIRE(pc_corpus_from_action(act, &one) == PC_OK);
  CHECK(pc_corpus_size(one) == 1);
  REQUIRE(pc_cmd_lr_criterion(one, &r) == PC_OK);
  CHECK(pc_report_outcome(r) == PC_PASS);
  pc_report_free(r);
  pc_corpus_free(one);
  pc_action_free(act);

  REQUIRE(pc_action_load((kData + "/twisted.act").c_str(), &act) == PC_OK);
  REQUIRE(pc_cmd_crossed_product(act, &r) == PC_OK);
  CHECK(pc_report_outcome(r) == PC_FAIL);
  pc_report_free(r);
  pc_action_free(act);
}

TEST_CASE("trivial action and corpus") {
  pc_semigroup* s = nullptr;
  pc_algebra* a = nullptr;
  REQUIRE(pc_semigroup_load("cyclic:3", &s) == PC_OK);
  REQUIRE(pc_algebra_load("field", &a) == PC_OK);
  pc_action* act = nullptr;
  REQUIRE(pc_action_trivial(s, a, &act) == PC_OK);
  pc_report* r = nullptr;
  REQUIRE(pc_cmd_crossed_product(act, &r) == PC_OK);
  CHECK(as_json(r)["dims"]["dim crossed product"] == 3);
  pc_report_free(r);
  pc_action_free(act);
  pc_algebra_free(a);
  pc_semigroup_free(s);

  pc_options o;
  pc_options_default(&o);
  o.corpus_size = 6;
  pc_corpus* c = nullptr;
  REQUIRE(pc_corpus_generate(&o, nullptr, nullptr, &c) == PC_OK);
  CHECK(pc_corpus_size(c) == 6);
  REQUIRE(pc_cmd_semiprime_criterion(c, &r) == PC_OK);
  CHECK(pc_report_outcome(r) == PC_PASS);
  const std::string first = render(r, PC_FORMAT_JSON);
  pc_report_free(r);
  REQUIRE(pc_cmd_semiprime_criterion(c, &r) == PC_OK);
  CHECK(render(r, PC_FORMAT_JSON) == first);
  pc_report_free(r);
  pc_corpus_free(c);
}

TEST_CASE("representations and the expansion") {
  pc_semigroup* s = nullptr;
  REQUIRE(pc_semigroup_load("cyclic:2", &s) == PC_OK);
  pc_options o;
  pc_options_default(&o);
  pc_rep* rep = nullptr;
  REQUIRE(pc_rep_wagner_preston(s, &rep) == PC_OK);
  pc_report* r = nullptr;
  REQUIRE(pc_cmd_quotient_hom(rep, &r) == PC_OK);
  CHECK(pc_report_outcome(r) == PC_PASS);
  pc_report_free(r);
  pc_rep_free(rep);

  REQUIRE(pc_rep_iota(s, &o, &rep) == PC_OK);
  REQUIRE(pc_cmd_idempotent_calculus(rep, &r) == PC_OK);
  CHECK(pc_report_outcome(r) == PC_PASS);
  pc_report_free(r);
  pc_rep_free(rep);

  REQUIRE(pc_cmd_expansion_iso(s, &o, &r) == PC_OK);
  CHECK(pc_report_outcome(r) == PC_PASS);
  CHECK(as_json(r)["dims"]["|Pr(S)|"] == 3);
  pc_report_free(r);

  o.cap = 1;
  REQUIRE(pc_cmd_build_pr(s, &o, &r) == PC_OK);
  CHECK(pc_report_outcome(r) == PC_CAP);
  CHECK(as_json(r)["status"] == "cap_exceeded");
  pc_report_free(r);
  CHECK(pc_rep_iota(s, &o, &rep) == PC_CAP_EXCEEDED);
  pc_semigroup_free(s);

  REQUIRE(pc_rep_load((kData + "/notrep.rep").c_str(), &rep) == PC_OK);
  REQUIRE(pc_cmd_verify_rep(rep, &r) == PC_OK);
  CHECK(pc_report_outcome(r) == PC_FAIL);
  pc_report_free(r);
  pc_rep_free(rep);

  REQUIRE(pc_cmd_verify_semigroup((kData + "/leftzero.sg").c_str(), &r) == PC_OK);
  CHECK(pc_report_outcome(r) == PC_FAIL);
  pc_report_free(r);
}
