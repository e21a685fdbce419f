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

// Seeded instance corpus for the associativity criteria: small inverse
// semigroups acting on small algebras, trivially, through Wagner-Preston, or
// by identity maps on ideals padded with a fixed smaller ideal.

#ifndef PARCROSS_CORPUS_HPP
#define PARCROSS_CORPUS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parcross/partial_action.hpp"

namespace parcross {

struct CorpusInstance {
  std::string semigroup;  // family name
  std::string algebra;    // family name, or "wagner-preston"
  std::string kind;       // trivial, wagner-preston, padded
  PartialAction action;

  std::string describe() const { return semigroup + " / " + algebra + " / " + kind; }
};

struct CorpusSpec {
  std::uint64_t seed = 7;
  std::size_t size = 50;
  /// Restrict the draws to one semigroup or algebra (family name or path).
  std::optional<std::string> semigroup;
  std::optional<std::string> algebra;
};

/// Same spec, same instances, in the same order. Every instance passes
/// verify_partial_action.
std::vector<CorpusInstance> generate_corpus(const CorpusSpec& spec);

}  // namespace parcross

#endif  // PARCROSS_CORPUS_HPP
