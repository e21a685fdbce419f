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

// Text formats for semigroups, algebras, actions and representations, plus
// the short family names accepted wherever a file path is.
//
//   semigroup:  n <size> / [unit <idx>] / size rows of size indices
//   algebra:    dim <d> / [unit <d rationals>] / lines "i j k p/q"
//   action:     semigroup <ref> / algebra <ref> / "ideal s: v ; v" /
//               "map s: row ; row" (rows in echelon coordinates)
//   rep:        semigroup <ref> / algebra <ref> / "rep s: <vector>"
//
// '#' starts a comment. References are resolved relative to the file.

#ifndef PARCROSS_TEXT_FORMAT_HPP
#define PARCROSS_TEXT_FORMAT_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "parcross/algebra.hpp"
#include "parcross/partial_action.hpp"
#include "parcross/partial_rep.hpp"
#include "parcross/semigroup.hpp"

namespace parcross {

/// Shape-checked but otherwise unvalidated table. Throws ParseError.
CayleyTable parse_cayley_table(std::string_view text);
/// Throws ParseError, or the semigroup's own validation errors.
InverseSemigroup parse_semigroup(std::string_view text);
/// Throws ParseError or NotUnit.
StructureAlgebra parse_algebra(std::string_view text);
/// Throws ParseError or ConsistencyError.
PartialAction parse_action(std::string_view text, const std::filesystem::path& base_dir);
PartialRep parse_rep(std::string_view text, const std::filesystem::path& base_dir);

std::string format_semigroup(const CayleyTable& table);
std::string format_algebra(const StructureAlgebra& a);
std::string format_action(const PartialAction& alpha, const std::string& semigroup_ref,
                          const std::string& algebra_ref);
std::string format_rep(const PartialRep& pi, const std::string& semigroup_ref,
                       const std::string& algebra_ref);

/// "trivial", "cyclic:n", "chain:n", "sim:n", and "a*b" for direct products.
/// Throws UsageError.
InverseSemigroup semigroup_family(std::string_view spec);
/// "field", "fields:m", "dual", "m2", "matrix:n", "zero:k". Throws UsageError.
StructureAlgebra algebra_family(std::string_view spec);

/// A file path if one exists there, otherwise a family name. Relative paths
/// are taken against base_dir. Throws IoError, ParseError or UsageError.
InverseSemigroup load_semigroup(const std::string& ref, const std::filesystem::path& base_dir = {});
CayleyTable load_cayley_table(const std::string& ref, const std::filesystem::path& base_dir = {});
StructureAlgebra load_algebra(const std::string& ref, const std::filesystem::path& base_dir = {});
PartialAction load_action(const std::string& path);
PartialRep load_rep(const std::string& path);

std::string read_file(const std::filesystem::path& path);

}  // namespace parcross

#endif  // PARCROSS_TEXT_FORMAT_HPP
