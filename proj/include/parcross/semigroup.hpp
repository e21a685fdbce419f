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

#ifndef PARCROSS_SEMIGROUP_HPP
#define PARCROSS_SEMIGROUP_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "parcross/report.hpp"

namespace parcross {

using Element = std::size_t;

/// A raw, unvalidated Cayley table. Rows are left factors: mul[s][t] = st.
struct CayleyTable {
  std::size_t size = 0;
  std::vector<std::vector<Element>> mul;
  std::optional<Element> unit;
};

/// Checks every inverse-semigroup axiom on a table and reports each failure
/// with a concrete witness. The table shape must already be valid.
AxiomReport verify_inverse_semigroup(const CayleyTable& table);

/// A finite inverse semigroup, validated on construction and immutable after.
/// Elements are the dense indices 0..size()-1.
class InverseSemigroup {
 public:
  /// Throws MalformedTable or NotInverseSemigroup (with witness).
  static InverseSemigroup from_table(CayleyTable table);

  /// Partial injections of {0..n-1}, composed as functions: (st)(x) = s(t(x)).
  /// Elements are ordered by their image vectors (undefined sorts first).
  static InverseSemigroup symmetric_inverse_monoid(std::size_t n);
  static InverseSemigroup cyclic_group(std::size_t n);
  /// 0 < 1 < ... < n-1 under min; the top element is the unit.
  static InverseSemigroup chain_semilattice(std::size_t n);
  static InverseSemigroup direct_product(const InverseSemigroup& a,
                                         const InverseSemigroup& b);

  std::size_t size() const noexcept { return table_.size; }
  Element mul(Element s, Element t) const { return table_.mul[s][t]; }
  Element mul(Element s, Element t, Element u) const {
    return mul(mul(s, t), u);
  }
  /// Throws OutOfRange.
  Element inverse(Element s) const;
  std::optional<Element> unit() const noexcept { return table_.unit; }
  /// Returns the unit or throws MissingUnit.
  Element require_unit() const;
  bool is_idempotent(Element s) const { return mul(s, s) == s; }
  std::vector<Element> idempotents() const;
  /// r <= t iff r = r r* t. Throws OutOfRange.
  bool natural_leq(Element r, Element t) const;

  const CayleyTable& table() const noexcept { return table_; }
  /// Human-readable element names, when the constructor knows them.
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(Element s) const;

  bool operator==(const InverseSemigroup& rhs) const {
    return table_.mul == rhs.table_.mul && table_.unit == rhs.table_.unit;
  }

 private:
  InverseSemigroup() = default;
  void check(Element s) const;

  CayleyTable table_;
  std::vector<Element> inv_;
  std::vector<std::string> labels_;
};

}  // namespace parcross

#endif  // PARCROSS_SEMIGROUP_HPP
