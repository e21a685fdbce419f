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

/* C interface to parcross. Every object is an opaque handle owned by the
 * caller and released with its _free function. Functions return PC_OK or an
 * error status; pc_last_error() describes the most recent failure on the
 * calling thread. Strings returned through char** are freed with
 * pc_string_free. */

#ifndef PARCROSS_H
#define PARCROSS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PC_API __declspec(dllexport)
#else
#define PC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pc_status {
  PC_OK = 0,
  PC_MALFORMED_TABLE,
  PC_NOT_INVERSE_SEMIGROUP,
  PC_OUT_OF_RANGE,
  PC_BAD_SHAPE,
  PC_NOT_UNIT,
  PC_DIM_MISMATCH,
  PC_NOT_AN_IDEAL,
  PC_NOT_CLOSED,
  PC_NOT_ASSOCIATIVE,
  PC_NOT_VALIDATED,
  PC_MISSING_UNIT,
  PC_WELL_DEFINEDNESS_BREACH,
  PC_MEMBERSHIP_BREACH,
  PC_TARGET_NOT_UNITAL,
  PC_ACTION_AXIOM_FAILURE,
  PC_NON_UNITAL_IDEAL,
  PC_HOMOMORPHISM_BREACH,
  PC_RELATION_BREACH,
  PC_ISO_BREACH,
  PC_CAP_EXCEEDED,
  PC_PARSE_ERROR,
  PC_CONSISTENCY_ERROR,
  PC_USAGE_ERROR,
  PC_IO_ERROR,
  PC_INVALID_ARGUMENT,
  PC_INTERNAL_ERROR
} pc_status;

typedef enum pc_format { PC_FORMAT_TEXT = 0, PC_FORMAT_JSON = 1 } pc_format;

/* Report outcome; mirrors the process exit code of the CLI. */
typedef enum pc_outcome { PC_PASS = 0, PC_FAIL = 1, PC_CAP = 2 } pc_outcome;

typedef struct pc_semigroup pc_semigroup;
typedef struct pc_algebra pc_algebra;
typedef struct pc_action pc_action;
typedef struct pc_rep pc_rep;
typedef struct pc_corpus pc_corpus;
typedef struct pc_report pc_report;

typedef struct pc_options {
  uint64_t seed;
  size_t corpus_size;
  size_t cap;             /* Pr(S) element cap */
  size_t max_word_length; /* Pr(S) normal-form length cap */
} pc_options;

PC_API void pc_options_default(pc_options* opts);
PC_API const char* pc_status_name(pc_status s);
PC_API const char* pc_last_error(void);
PC_API void pc_string_free(char* s);

/* A file path, or a family name such as "cyclic:2", "chain:3", "sim:2",
 * "cyclic:2*chain:2". */
PC_API pc_status pc_semigroup_load(const char* ref, pc_semigroup** out);
PC_API size_t pc_semigroup_size(const pc_semigroup* s);
PC_API void pc_semigroup_free(pc_semigroup* s);

/* A file path, or "field", "fields:m", "dual", "m2", "matrix:n", "zero:k". */
PC_API pc_status pc_algebra_load(const char* ref, pc_algebra** out);
PC_API size_t pc_algebra_dim(const pc_algebra* a);
PC_API void pc_algebra_free(pc_algebra* a);

PC_API pc_status pc_action_load(const char* path, pc_action** out);
/* X_s = A and alpha_s = id for every s. */
PC_API pc_status pc_action_trivial(const pc_semigroup* s, const pc_algebra* a, pc_action** out);
PC_API void pc_action_free(pc_action* a);

PC_API pc_status pc_rep_load(const char* path, pc_rep** out);
PC_API pc_status pc_rep_wagner_preston(const pc_semigroup* s, pc_rep** out);
/* s -> [s] in K_par(S). */
PC_API pc_status pc_rep_iota(const pc_semigroup* s, const pc_options* opts, pc_rep** out);
PC_API void pc_rep_free(pc_rep* r);

/* Seeded corpus; semigroup and algebra refs may be NULL (draw freely). */
PC_API pc_status pc_corpus_generate(const pc_options* opts, const char* semigroup_ref,
                                    const char* algebra_ref, pc_corpus** out);
/* A one-instance corpus. */
PC_API pc_status pc_corpus_from_action(const pc_action* a, pc_corpus** out);
PC_API size_t pc_corpus_size(const pc_corpus* c);
PC_API void pc_corpus_free(pc_corpus* c);

/* Commands. Each produces a report even when checks fail; the status is
 * non-OK only when the inputs are unusable. */
PC_API pc_status pc_cmd_verify_semigroup(const char* ref, pc_report** out);
PC_API pc_status pc_cmd_verify_action(const pc_action* a, pc_report** out);
PC_API pc_status pc_cmd_crossed_product(const pc_action* a, pc_report** out);
PC_API pc_status pc_cmd_lr_criterion(const pc_corpus* c, pc_report** out);
PC_API pc_status pc_cmd_ideal_criterion(const pc_corpus* c, pc_report** out);
PC_API pc_status pc_cmd_semiprime_criterion(const pc_corpus* c, pc_report** out);
PC_API pc_status pc_cmd_verify_rep(const pc_rep* r, pc_report** out);
PC_API pc_status pc_cmd_idempotent_calculus(const pc_rep* r, pc_report** out);
PC_API pc_status pc_cmd_action_from_rep(const pc_rep* r, pc_report** out);
PC_API pc_status pc_cmd_rep_from_action(const pc_action* a, pc_report** out);
PC_API pc_status pc_cmd_quotient_hom(const pc_rep* r, pc_report** out);
PC_API pc_status pc_cmd_build_pr(const pc_semigroup* s, const pc_options* opts, pc_report** out);
PC_API pc_status pc_cmd_build_kpar(const pc_semigroup* s, const pc_options* opts, pc_report** out);
PC_API pc_status pc_cmd_expansion_iso(const pc_semigroup* s, const pc_options* opts, pc_report** out);
PC_API pc_status pc_cmd_corpus(const pc_corpus* c, pc_report** out);

PC_API pc_outcome pc_report_outcome(const pc_report* r);
PC_API pc_status pc_report_set_command(pc_report* r, const char* command);
PC_API pc_status pc_report_render(const pc_report* r, pc_format format, char** out);
/* Empty string when the command has no artifact. */
PC_API pc_status pc_report_artifact(const pc_report* r, char** out);
PC_API void pc_report_free(pc_report* r);

#ifdef __cplusplus
}
#endif

#endif /* PARCROSS_H */
