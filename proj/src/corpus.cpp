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

#include "parcross/corpus.hpp"

#include <random>

#include "parcross/error.hpp"
#include "parcross/partial_rep.hpp"
#include "parcross/text_format.hpp"

namespace parcross {

namespace {

const std::vector<std::string> kSemigroups = {
    "trivial", "cyclic:2", "cyclic:3", "cyclic:4", "cyclic:5", "cyclic:6",
    "chain:2", "chain:3",  "chain:4",  "sim:1",    "sim:2",    "cyclic:2*chain:2",
    "chain:2*chain:2", "cyclic:3*chain:2", "sim:1*cyclic:2",
};

const std::vector<std::string> kAlgebras = {"field", "fields:2", "fields:3", "dual", "m2"};

// Wagner-Preston targets are |S|^2-dimensional; keep them small.
constexpr std::size_t kMaxWagnerPreston = 8;

std::size_t draw(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

// Proper ideals to pad with: zero, and each proper ideal spanned by a
// single basis vector.
std::vector<Subspace> padding_ideals(const StructureAlgebra& a) {
  std::vector<Subspace> out{Subspace(a.dim())};
  if (a.dim() < 2) return out;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Subspace x = Subspace::span(a.dim(), {unit_vec(a.dim(), i)});
    if (!ideal_violation(a, x)) out.push_back(std::move(x));
  }
  return out;
}

std::optional<PartialAction> padded(const InverseSemigroup& s, const StructureAlgebra& a,
                                    std::mt19937_64& rng) {
  auto pads = padding_ideals(a);
  const Subspace full = Subspace::full(a.dim());
  for (int attempt = 0; attempt < 64; ++attempt) {
    const Subspace& n = pads[draw(rng, pads.size())];
    std::vector<bool> in_f(s.size());
    for (Element x = 0; x < s.size(); ++x) in_f[x] = draw(rng, 2) == 1;
    if (s.unit()) in_f[*s.unit()] = true;
    std::vector<Subspace> ideals;
    std::vector<Matrix> maps;
    for (Element x = 0; x < s.size(); ++x) {
      ideals.push_back(in_f[x] ? full : n);
    }
    bool square = true;
    for (Element x = 0; x < s.size(); ++x) {
      if (ideals[x].dim() != ideals[s.inverse(x)].dim()) square = false;
      maps.push_back(Matrix::identity(ideals[x].dim()));
    }
    if (!square) continue;
    PartialAction alpha(s, a, std::move(ideals), std::move(maps));
    if (verify_partial_action(alpha).passed()) return alpha;
  }
  return std::nullopt;
}

}  // namespace

std::vector<CorpusInstance> generate_corpus(const CorpusSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::vector<CorpusInstance> out;
  while (out.size() < spec.size) {
    const std::string sname = spec.semigroup ? *spec.semigroup : kSemigroups[draw(rng, kSemigroups.size())];
    const std::string aname = spec.algebra ? *spec.algebra : kAlgebras[draw(rng, kAlgebras.size())];
    const InverseSemigroup s = load_semigroup(sname);
    const StructureAlgebra a = checked(load_algebra(aname));
    std::size_t kind = draw(rng, 3);
    if (kind == 1 && (spec.algebra || s.size() > kMaxWagnerPreston)) kind = 2;

    if (kind == 1) {
      RepAction ra = action_from_rep(wagner_preston(s));
      out.push_back({sname, "wagner-preston", "wagner-preston", std::move(ra.action)});
      continue;
    }
    if (kind == 2) {
      if (auto alpha = padded(s, a, rng)) {
        out.push_back({sname, aname, "padded", std::move(*alpha)});
        continue;
      }
    }
    out.push_back({sname, aname, "trivial", trivial_action(s, a)});
  }
  return out;
}

}  // namespace parcross
