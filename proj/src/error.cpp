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

#include "parcross/error.hpp"

namespace parcross {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::malformed_table: return "MalformedTable";
    case ErrorCode::not_inverse_semigroup: return "NotInverseSemigroup";
    case ErrorCode::out_of_range: return "OutOfRange";
    case ErrorCode::bad_shape: return "BadShape";
    case ErrorCode::not_unit: return "NotUnit";
    case ErrorCode::dim_mismatch: return "DimMismatch";
    case ErrorCode::not_an_ideal: return "NotAnIdeal";
    case ErrorCode::not_closed: return "NotClosed";
    case ErrorCode::not_associative: return "NotAssociative";
    case ErrorCode::not_validated: return "NotValidated";
    case ErrorCode::missing_unit: return "MissingUnit";
    case ErrorCode::well_definedness_breach: return "WellDefinednessBreach";
    case ErrorCode::membership_breach: return "MembershipBreach";
    case ErrorCode::target_not_unital: return "TargetNotUnital";
    case ErrorCode::action_axiom_failure: return "ActionAxiomFailure";
    case ErrorCode::non_unital_ideal: return "NonUnitalIdeal";
    case ErrorCode::homomorphism_breach: return "HomomorphismBreach";
    case ErrorCode::relation_breach: return "RelationBreach";
    case ErrorCode::iso_breach: return "IsoBreach";
    case ErrorCode::cap_exceeded: return "CapExceeded";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::consistency_error: return "ConsistencyError";
    case ErrorCode::usage_error: return "UsageError";
    case ErrorCode::io_error: return "IOError";
  }
  return "Unknown";
}

}  // namespace parcross
