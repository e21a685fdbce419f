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

#include "parcross/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace parcross {

AxiomOutcome& AxiomReport::entry(const std::string& axiom) {
  auto it = std::find_if(outcomes_.begin(), outcomes_.end(),
                         [&](const AxiomOutcome& o) { return o.axiom == axiom; });
  if (it != outcomes_.end()) return *it;
  outcomes_.push_back(AxiomOutcome{axiom, {}, 0});
  return outcomes_.back();
}

void AxiomReport::declare(const std::string& axiom) { entry(axiom); }

void AxiomReport::fail(const std::string& axiom, std::string witness) {
  auto& e = entry(axiom);
  ++e.failures;
  if (e.witnesses.size() < kMaxWitnesses) e.witnesses.push_back(std::move(witness));
}

bool AxiomReport::passed() const noexcept {
  return std::all_of(outcomes_.begin(), outcomes_.end(),
                     [](const AxiomOutcome& o) { return o.passed(); });
}

const AxiomOutcome* AxiomReport::find(const std::string& axiom) const {
  for (const auto& o : outcomes_) {
    if (o.axiom == axiom) return &o;
  }
  return nullptr;
}

std::string AxiomReport::first_failure() const {
  for (const auto& o : outcomes_) {
    if (!o.passed()) {
      return o.axiom + (o.witnesses.empty() ? "" : ": " + o.witnesses.front());
    }
  }
  return {};
}

void AxiomReport::append(const AxiomReport& other, const std::string& prefix) {
  for (const auto& o : other.outcomes_) {
    auto& e = entry(prefix + o.axiom);
    e.failures += o.failures;
    for (const auto& w : o.witnesses) {
      if (e.witnesses.size() < kMaxWitnesses) e.witnesses.push_back(w);
    }
  }
}

const char* status_name(Status s) noexcept {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::cap_exceeded: return "cap_exceeded";
  }
  return "fail";
}

void Report::add(std::string name, bool verdict,
                 std::optional<std::string> witness) {
  checks.push_back(Check{std::move(name), verdict, std::move(witness)});
}

void Report::add(const AxiomReport& axioms, const std::string& prefix) {
  for (const auto& o : axioms.outcomes()) {
    std::optional<std::string> w;
    if (!o.passed()) {
      std::string text = o.witnesses.empty() ? "" : o.witnesses.front();
      if (o.failures > 1) {
        text += " (" + std::to_string(o.failures - 1) + " more)";
      }
      w = text;
    }
    add(prefix + o.axiom, o.passed(), std::move(w));
  }
}

void Report::dim(std::string key, long long value) {
  dims.emplace_back(std::move(key), value);
}

Status Report::status() const noexcept {
  if (cap_exceeded) return Status::cap_exceeded;
  bool ok = std::all_of(checks.begin(), checks.end(),
                        [](const Check& c) { return c.verdict; });
  return ok ? Status::pass : Status::fail;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "command: " << command << '\n';
  if (!dims.empty()) {
    out << "dims:\n";
    for (const auto& [k, v] : dims) out << "  " << k << " = " << v << '\n';
  }
  out << "checks:\n";
  for (const auto& c : checks) {
    out << "  [" << (c.verdict ? "pass" : "FAIL") << "] " << c.name;
    if (c.witness) out << " -- witness: " << *c.witness;
    out << '\n';
  }
  out << "status: " << status_name(status()) << '\n';
  return out.str();
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["status"] = status_name(status());
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["verdict"] = c.verdict ? "pass" : "fail";
    if (c.witness) cj["witness"] = *c.witness;
    j["checks"].push_back(std::move(cj));
  }
  j["dims"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : dims) j["dims"][k] = v;
  return j.dump(2) + "\n";
}

}  // namespace parcross
