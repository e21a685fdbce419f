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

// The universal semigroup Pr(S) on generators [s] subject to the three
// partial-representation relations, its semigroup algebra K_par(S), and the
// check that K_par(S)/J is isomorphic to the crossed product it induces.

#ifndef PARCROSS_PAR_EXPANSION_HPP
#define PARCROSS_PAR_EXPANSION_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "parcross/algebra.hpp"
#include "parcross/partial_rep.hpp"
#include "parcross/report.hpp"
#include "parcross/semigroup.hpp"

namespace parcross {

using Word = std::vector<std::size_t>;

struct SemigroupPresentation {
  std::size_t generator_count = 0;
  std::vector<std::pair<Word, Word>> relations;
};

/// [s*][s][t] = [s*][st], [s][t][t*] = [st][t*], [s][s*][s] = [s], with
/// duplicates and trivial pairs removed.
SemigroupPresentation pr_presentation(const InverseSemigroup& s);

struct EnumerationLimits {
  std::size_t max_elements = 10000;
  std::size_t max_word_length = 12;
};

enum class EnumerationStatus { complete, cap_exceeded };

struct EnumeratedSemigroup {
  /// Shortlex-least word of each element, in shortlex order.
  std::vector<Word> elements;
  std::vector<std::vector<std::size_t>> mul;
  std::vector<std::size_t> gen_map;
  EnumerationStatus status = EnumerationStatus::cap_exceeded;
  /// Why enumeration stopped, when it did not complete.
  std::string note;

  std::size_t size() const noexcept { return elements.size(); }
  /// Product of the generator images along w. w must be nonempty.
  std::size_t evaluate(const Word& w) const;
  CayleyTable table() const;
};

/// Coset enumeration on the presentation with an identity adjoined. Never
/// throws on budget; the status says whether the table is exact.
EnumeratedSemigroup enumerate_fp_semigroup(const SemigroupPresentation& p,
                                           const EnumerationLimits& limits = {});

/// Closure, associativity (Light's test over the generators), relations, and
/// that every normal form evaluates to its own element.
AxiomReport verify_enumeration(const SemigroupPresentation& p, const EnumeratedSemigroup& e);

struct ParAlgebra {
  InverseSemigroup source;
  SemigroupPresentation presentation;
  EnumeratedSemigroup base;
  StructureAlgebra algebra;
  /// iota[s] is the basis vector of [s].
  std::vector<Vec> iota;

  PartialRep iota_rep() const { return PartialRep(source, algebra, iota); }
};

/// Throws CapExceeded.
ParAlgebra kpar(const InverseSemigroup& s, const EnumerationLimits& limits = {});

struct Extension {
  /// B.dim x |Pr(S)|; column x is pi over the letters of x.
  Matrix psi;
  AxiomReport report;
};

/// The homomorphism K_par(S) -> B extending pi. Throws RelationBreach.
Extension extend_rep(const ParAlgebra& pa, const PartialRep& pi);

struct ExpansionIso {
  std::size_t pr_size = 0;
  std::size_t dim_j = 0;
  std::size_t dim_quotient = 0;
  std::size_t dim_a = 0;
  std::vector<std::size_t> dim_x;
  std::size_t dim_l = 0;
  std::size_t dim_i = 0;
  std::size_t dim_crossed = 0;
  /// crossed -> K_par/J and back.
  Matrix phi;
  Matrix psi;
  AxiomReport report;
};

/// Runs K_par(S) -> K_par(S)/J -> (A, alpha) -> A x S and checks that phi and
/// psi are mutually inverse. Throws CapExceeded or IsoBreach.
ExpansionIso expansion_iso(const InverseSemigroup& s, const EnumerationLimits& limits = {});

}  // namespace parcross

#endif  // PARCROSS_PAR_EXPANSION_HPP
