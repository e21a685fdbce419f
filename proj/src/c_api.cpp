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

#include "parcross/parcross.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "parcross/commands.hpp"
#include "parcross/corpus.hpp"
#include "parcross/error.hpp"
#include "parcross/par_expansion.hpp"
#include "parcross/text_format.hpp"

struct pc_semigroup {
  parcross::InverseSemigroup value;
};
struct pc_algebra {
  parcross::StructureAlgebra value;
};
struct pc_action {
  parcross::PartialAction value;
};
struct pc_rep {
  parcross::PartialRep value;
};
struct pc_corpus {
  std::vector<parcross::CorpusInstance> value;
};
struct pc_report {
  parcross::Report value;
};

namespace {

using parcross::ErrorCode;

static_assert(static_cast<int>(ErrorCode::io_error) + 1 == PC_IO_ERROR,
              "pc_status must mirror ErrorCode");

thread_local std::string g_last_error;

pc_status to_status(ErrorCode c) { return static_cast<pc_status>(static_cast<int>(c) + 1); }

template <typename F>
pc_status guard(F&& f) noexcept {
  try {
    g_last_error.clear();
    f();
    return PC_OK;
  } catch (const parcross::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return PC_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PC_INTERNAL_ERROR;
  } catch (...) {
    g_last_error = "unknown exception";
    return PC_INTERNAL_ERROR;
  }
}

pc_status invalid(const char* what) {
  g_last_error = what;
  return PC_INVALID_ARGUMENT;
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

parcross::EnumerationLimits limits(const pc_options* opts) {
  pc_options o;
  pc_options_default(&o);
  if (opts) o = *opts;
  return {o.cap, o.max_word_length};
}

template <typename In, typename Cmd>
pc_status command(const In* in, pc_report** out, Cmd&& cmd) {
  if (!in || !out) return invalid("null argument");
  *out = nullptr;
  return guard([&] { *out = new pc_report{cmd(in->value)}; });
}

}  // namespace

extern "C" {

void pc_options_default(pc_options* opts) {
  if (!opts) return;
  opts->seed = 7;
  opts->corpus_size = 50;
  opts->cap = parcross::EnumerationLimits{}.max_elements;
  opts->max_word_length = parcross::EnumerationLimits{}.max_word_length;
}

const char* pc_status_name(pc_status s) {
  switch (s) {
    case PC_OK:
      return "Ok";
    case PC_INVALID_ARGUMENT:
      return "InvalidArgument";
    case PC_INTERNAL_ERROR:
      return "InternalError";
    default:
      if (s > PC_OK && s <= PC_IO_ERROR) {
        return parcross::error_code_name(static_cast<ErrorCode>(static_cast<int>(s) - 1));
      }
      return "Unknown";
  }
}

const char* pc_last_error(void) { return g_last_error.c_str(); }

void pc_string_free(char* s) { std::free(s); }

pc_status pc_semigroup_load(const char* ref, pc_semigroup** out) {
  if (!ref || !out) return invalid("null argument");
  *out = nullptr;
  return guard([&] { *out = new pc_semigroup{parcross::load_semigroup(ref)}; });
}

size_t pc_semigroup_size(const pc_semigroup* s) { return s ? s->value.size() : 0; }
void pc_semigroup_free(pc_semigroup* s) { delete s; }

pc_status pc_algebra_load(const char* ref, pc_algebra** out) {
  if (!ref || !out) return invalid("null argument");
  *out = nullptr;
  return guard([&] { *out = new pc_algebra{parcross::load_algebra(ref)}; });
}

size_t pc_algebra_dim(const pc_algebra* a) { return a ? a->value.dim() : 0; }
void pc_algebra_free(pc_algebra* a) { delete a; }

pc_status pc_action_load(const char* path, pc_action** out) {
  if (!path || !out) return invalid("null argument");
  *out = nullptr;
  return guard([&] { *out = new pc_action{parcross::load_action(path)}; });
}

pc_status pc_action_trivial(const pc_semigroup* s, const pc_algebra* a, pc_action** out) {
  if (!s || !a || !out) return invalid("null argument");
  *out = nullptr;
  return guard([&] { *out = new pc_action{parcross::trivial_action(s->value, a->value)}; });
}

void pc_action_free(pc_action* a) { delete a; }

pc_status pc_rep_load(const char* path, pc_rep** out) {
  if (!path || !out) return invalid("null argument");
  *out = nullptr;
  return guard([&] { *out = new pc_rep{parcross::load_rep(path)}; });
}

pc_status pc_rep_wagner_preston(const pc_semigroup* s, pc_rep** out) {
  if (!s || !out) return invalid("null argument");
  *out = nullptr;
  return guard([&] { *out = new pc_rep{parcross::wagner_preston(s->value)}; });
}

pc_status pc_rep_iota(const pc_semigroup* s, const pc_options* opts, pc_rep** out) {
  if (!s || !out) return invalid("null argument");
  *out = nullptr;
  return guard([&] { *out = new pc_rep{parcross::kpar(s->value, limits(opts)).iota_rep()}; });
}

void pc_rep_free(pc_rep* r) { delete r; }

pc_status pc_corpus_generate(const pc_options* opts, const char* semigroup_ref,
                             const char* algebra_ref, pc_corpus** out) {
  if (!out) return invalid("null argument");
  *out = nullptr;
  return guard([&] {
    pc_options o;
    pc_options_default(&o);
    if (opts) o = *opts;
    parcross::CorpusSpec spec;
    spec.seed = o.seed;
    spec.size = o.corpus_size;
    if (semigroup_ref) spec.semigroup = semigroup_ref;
    if (algebra_ref) spec.algebra = algebra_ref;
    *out = new pc_corpus{parcross::generate_corpus(spec)};
  });
}

pc_status pc_corpus_from_action(const pc_action* a, pc_corpus** out) {
  if (!a || !out) return invalid("null argument");
  *out = nullptr;
  return guard([&] {
    *out = new pc_corpus{{parcross::CorpusInstance{"given", "given", "file", a->value}}};
  });
}

size_t pc_corpus_size(const pc_corpus* c) { return c ? c->value.size() : 0; }
void pc_corpus_free(pc_corpus* c) { delete c; }

pc_status pc_cmd_verify_semigroup(const char* ref, pc_report** out) {
  if (!ref || !out) return invalid("null argument");
  *out = nullptr;
  return guard([&] {
    *out = new pc_report{parcross::cmd_verify_semigroup(parcross::load_cayley_table(ref))};
  });
}

pc_status pc_cmd_verify_action(const pc_action* a, pc_report** out) {
  return command(a, out, parcross::cmd_verify_action);
}
pc_status pc_cmd_crossed_product(const pc_action* a, pc_report** out) {
  return command(a, out, parcross::cmd_crossed_product);
}
pc_status pc_cmd_lr_criterion(const pc_corpus* c, pc_report** out) {
  return command(c, out, parcross::cmd_lr_criterion);
}
pc_status pc_cmd_ideal_criterion(const pc_corpus* c, pc_report** out) {
  return command(c, out, parcross::cmd_ideal_criterion);
}
pc_status pc_cmd_semiprime_criterion(const pc_corpus* c, pc_report** out) {
  return command(c, out, parcross::cmd_semiprime_criterion);
}
pc_status pc_cmd_verify_rep(const pc_rep* r, pc_report** out) {
  return command(r, out, parcross::cmd_verify_rep);
}
pc_status pc_cmd_idempotent_calculus(const pc_rep* r, pc_report** out) {
  return command(r, out, parcross::cmd_idempotent_calculus);
}
pc_status pc_cmd_action_from_rep(const pc_rep* r, pc_report** out) {
  return command(r, out, parcross::cmd_action_from_rep);
}
pc_status pc_cmd_rep_from_action(const pc_action* a, pc_report** out) {
  return command(a, out, parcross::cmd_rep_from_action);
}
pc_status pc_cmd_quotient_hom(const pc_rep* r, pc_report** out) {
  return command(r, out, parcross::cmd_quotient_hom);
}
pc_status pc_cmd_build_pr(const pc_semigroup* s, const pc_options* opts, pc_report** out) {
  return command(s, out, [&](const auto& v) { return parcross::cmd_build_pr(v, limits(opts)); });
}
pc_status pc_cmd_build_kpar(const pc_semigroup* s, const pc_options* opts, pc_report** out) {
  return command(s, out, [&](const auto& v) { return parcross::cmd_build_kpar(v, limits(opts)); });
}
pc_status pc_cmd_expansion_iso(const pc_semigroup* s, const pc_options* opts, pc_report** out) {
  return command(s, out, [&](const auto& v) { return parcross::cmd_expansion_iso(v, limits(opts)); });
}
pc_status pc_cmd_corpus(const pc_corpus* c, pc_report** out) {
  return command(c, out, parcross::cmd_corpus);
}

pc_outcome pc_report_outcome(const pc_report* r) {
  if (!r) return PC_FAIL;
  switch (r->value.status()) {
    case parcross::Status::pass:
      return PC_PASS;
    case parcross::Status::cap_exceeded:
      return PC_CAP;
    default:
      return PC_FAIL;
  }
}

pc_status pc_report_set_command(pc_report* r, const char* command) {
  if (!r || !command) return invalid("null argument");
  return guard([&] { r->value.command = command; });
}

pc_status pc_report_render(const pc_report* r, pc_format format, char** out) {
  if (!r || !out) return invalid("null argument");
  *out = nullptr;
  return guard([&] {
    *out = dup(format == PC_FORMAT_JSON ? r->value.to_json() : r->value.to_text());
    if (!*out) throw std::bad_alloc();
  });
}

pc_status pc_report_artifact(const pc_report* r, char** out) {
  if (!r || !out) return invalid("null argument");
  *out = nullptr;
  return guard([&] {
    *out = dup(r->value.artifact);
    if (!*out) throw std::bad_alloc();
  });
}

void pc_report_free(pc_report* r) { delete r; }

}  // extern "C"
