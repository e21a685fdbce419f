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

// One report-producing function per CLI command. Library errors raised while
// a command runs become failing checks rather than escaping.

#ifndef PARCROSS_COMMANDS_HPP
#define PARCROSS_COMMANDS_HPP

#include <vector>

#include "parcross/corpus.hpp"
#include "parcross/par_expansion.hpp"
#include "parcross/partial_action.hpp"
#include "parcross/partial_rep.hpp"
#include "parcross/report.hpp"
#include "parcross/semigroup.hpp"

namespace parcross {

Report cmd_verify_semigroup(const CayleyTable& table);
Report cmd_verify_action(const PartialAction& alpha);
/// Artifact: the crossed product in the algebra text format.
Report cmd_crossed_product(const PartialAction& alpha);

/// all X_s (L,R)-associative => associative
Report cmd_lr_criterion(const std::vector<CorpusInstance>& corpus);
/// X_s idempotent or non-degenerate (or unital) => associative
Report cmd_ideal_criterion(const std::vector<CorpusInstance>& corpus);
/// A semiprime => associative
Report cmd_semiprime_criterion(const std::vector<CorpusInstance>& corpus);

Report cmd_verify_rep(const PartialRep& pi);
Report cmd_idempotent_calculus(const PartialRep& pi);
Report cmd_action_from_rep(const PartialRep& pi);
Report cmd_rep_from_action(const PartialAction& alpha);
Report cmd_quotient_hom(const PartialRep& pi);

/// Artifact: Pr(S) in the semigroup text format.
Report cmd_build_pr(const InverseSemigroup& s, const EnumerationLimits& limits);
/// Artifact: K_par(S) in the algebra text format.
Report cmd_build_kpar(const InverseSemigroup& s, const EnumerationLimits& limits);
Report cmd_expansion_iso(const InverseSemigroup& s, const EnumerationLimits& limits);

/// Artifact: every instance as an action file, separated by blank lines.
Report cmd_corpus(const std::vector<CorpusInstance>& corpus);

}  // namespace parcross

#endif  // PARCROSS_COMMANDS_HPP
