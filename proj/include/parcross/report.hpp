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

#ifndef PARCROSS_REPORT_HPP
#define PARCROSS_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace parcross {

/// One named axiom and every witness that refutes it.
struct AxiomOutcome {
  std::string axiom;
  std::vector<std::string> witnesses;  // at most kMaxWitnesses are kept
  std::size_t failures = 0;

  bool passed() const noexcept { return failures == 0; }
};

/// Pass/fail per axiom. Axioms keep the order in which they were declared.
class AxiomReport {
 public:
  static constexpr std::size_t kMaxWitnesses = 8;

  void declare(const std::string& axiom);
  void fail(const std::string& axiom, std::string witness);
  /// Declares the axiom and records a failure when !ok.
  template <typename WitnessFn>
  void check(const std::string& axiom, bool ok, WitnessFn&& witness) {
    if (ok) {
      declare(axiom);
    } else {
      fail(axiom, witness());
    }
  }

  bool passed() const noexcept;
  const std::vector<AxiomOutcome>& outcomes() const noexcept {
    return outcomes_;
  }
  const AxiomOutcome* find(const std::string& axiom) const;
  /// "axiom: witness" of the first failure, empty if everything passed.
  std::string first_failure() const;
  void append(const AxiomReport& other, const std::string& prefix = "");

 private:
  AxiomOutcome& entry(const std::string& axiom);

  std::vector<AxiomOutcome> outcomes_;
};

struct Check {
  std::string name;
  bool verdict = false;
  std::optional<std::string> witness;
};

enum class Status { pass, fail, cap_exceeded };

const char* status_name(Status s) noexcept;

/// Output of one CLI command. status is pass iff every check passed, unless
/// an enumeration ran out of budget.
struct Report {
  std::string command;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, long long>> dims;
  bool cap_exceeded = false;
  /// Optional payload written by --output (an algebra or semigroup file).
  std::string artifact;

  void add(std::string name, bool verdict,
           std::optional<std::string> witness = std::nullopt);
  void add(const AxiomReport& axioms, const std::string& prefix = "");
  void dim(std::string key, long long value);

  Status status() const noexcept;
  int exit_code() const noexcept { return status() == Status::pass ? 0 : 1; }

  std::string to_text() const;
  std::string to_json() const;
};

}  // namespace parcross

#endif  // PARCROSS_REPORT_HPP
