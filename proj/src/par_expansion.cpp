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

#include "parcross/par_expansion.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

#include "parcross/error.hpp"

namespace parcross {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::string word_str(const Word& w) {
  std::string out;
  for (auto g : w) out += "[" + std::to_string(g) + "]";
  return out;
}

// HLT coset enumeration for a monoid presentation. Node 0 is the
// empty word. Coincidences are resolved with a union-find; table entries may
// point at dead nodes and are always read through find().
class CosetEnumerator {
 public:
  CosetEnumerator(const SemigroupPresentation& p, std::size_t node_budget,
                  std::size_t depth_limit)
      : p_(p), gens_(p.generator_count), budget_(node_budget), depth_limit_(depth_limit) {
    add_node(0);
  }

  bool run() {
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (find(c) != c) continue;
      for (const auto& [u, v] : p_.relations) {
        std::size_t x = trace(c, u);
        if (x == kNone) return false;
        std::size_t y = trace(find(c), v);
        if (y == kNone) return false;
        merge(x, y);
        if (find(c) != c) break;
      }
      if (find(c) != c) continue;
      for (std::size_t g = 0; g < gens_; ++g) {
        if (entry(c, g) == kNone && define(c, g) == kNone) return false;
      }
    }
    return true;
  }

  std::size_t find(std::size_t x) {
    std::size_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      std::size_t next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  std::size_t entry(std::size_t x, std::size_t g) {
    std::size_t y = table_[x * gens_ + g];
    return y == kNone ? kNone : find(y);
  }

  std::size_t live() const noexcept { return live_; }
  std::string note() const { return note_; }

 private:
  void add_node(std::size_t depth) {
    parent_.push_back(parent_.size());
    depth_.push_back(depth);
    table_.resize(table_.size() + gens_, kNone);
    ++live_;
  }

  std::size_t define(std::size_t x, std::size_t g) {
    if (parent_.size() >= budget_) {
      note_ = "coset table grew past " + std::to_string(budget_) + " nodes";
      return kNone;
    }
    if (depth_[x] + 1 > depth_limit_) {
      note_ = "definitions reached word length " + std::to_string(depth_limit_ + 1);
      return kNone;
    }
    std::size_t y = parent_.size();
    add_node(depth_[x] + 1);
    table_[x * gens_ + g] = y;
    return y;
  }

  std::size_t trace(std::size_t x, const Word& w) {
    for (auto g : w) {
      std::size_t y = entry(x, g);
      if (y == kNone) y = define(x, g);
      if (y == kNone) return kNone;
      x = y;
    }
    return x;
  }

  void merge(std::size_t x, std::size_t y) {
    std::deque<std::pair<std::size_t, std::size_t>> queue{{x, y}};
    while (!queue.empty()) {
      auto [a, b] = queue.front();
      queue.pop_front();
      a = find(a);
      b = find(b);
      if (a == b) continue;
      if (b < a) std::swap(a, b);
      parent_[b] = a;
      depth_[a] = std::min(depth_[a], depth_[b]);
      --live_;
      for (std::size_t g = 0; g < gens_; ++g) {
        std::size_t tb = table_[b * gens_ + g];
        if (tb == kNone) continue;
        std::size_t& ta = table_[a * gens_ + g];
        if (ta == kNone) {
          ta = tb;
        } else {
          queue.emplace_back(ta, tb);
        }
      }
    }
  }

  const SemigroupPresentation& p_;
  std::size_t gens_;
  std::size_t budget_;
  std::size_t depth_limit_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> depth_;
  std::vector<std::size_t> table_;
  std::size_t live_ = 0;
  std::string note_;
};

}  // namespace

SemigroupPresentation pr_presentation(const InverseSemigroup& s) {
  std::set<std::pair<Word, Word>> seen;
  SemigroupPresentation p;
  p.generator_count = s.size();
  auto add = [&](Word u, Word v) {
    if (u == v) return;
    if (v < u) std::swap(u, v);
    if (seen.insert({u, v}).second) p.relations.emplace_back(std::move(u), std::move(v));
  };
  for (Element a = 0; a < s.size(); ++a) {
    const Element ai = s.inverse(a);
    for (Element b = 0; b < s.size(); ++b) {
      const Element bi = s.inverse(b);
      add({ai, a, b}, {ai, s.mul(a, b)});
      add({a, b, bi}, {s.mul(a, b), bi});
    }
  }
  for (Element a = 0; a < s.size(); ++a) add({a, s.inverse(a), a}, {a});
  return p;
}

std::size_t EnumeratedSemigroup::evaluate(const Word& w) const {
  std::size_t x = gen_map.at(w.at(0));
  for (std::size_t i = 1; i < w.size(); ++i) x = mul[x][gen_map.at(w[i])];
  return x;
}

CayleyTable EnumeratedSemigroup::table() const {
  CayleyTable c;
  c.size = size();
  c.mul = mul;
  for (std::size_t e = 0; e < c.size; ++e) {
    bool unit = true;
    for (std::size_t x = 0; x < c.size && unit; ++x) unit = mul[e][x] == x && mul[x][e] == x;
    if (unit) {
      c.unit = e;
      break;
    }
  }
  return c;
}

EnumeratedSemigroup enumerate_fp_semigroup(const SemigroupPresentation& p,
                                           const EnumerationLimits& limits) {
  EnumeratedSemigroup out;
  const std::size_t gens = std::max<std::size_t>(p.generator_count, 1);
  std::size_t max_rel = 0;
  for (const auto& [u, v] : p.relations) max_rel = std::max({max_rel, u.size(), v.size()});
  // The element cap bounds the answer; the node budget bounds the work.
  const std::size_t cap = std::max<std::size_t>(limits.max_elements, 1);
  const std::size_t budget =
      std::min<std::size_t>(std::max<std::size_t>(1024, 64 * (cap + 1)), 8'000'000 / gens + 1024);
  CosetEnumerator tc(p, budget, 2 * limits.max_word_length + max_rel);
  if (!tc.run()) {
    out.note = tc.note();
    return out;
  }
  if (tc.live() - 1 > limits.max_elements) {
    out.note = std::to_string(tc.live() - 1) + " elements exceed the cap of " +
               std::to_string(limits.max_elements);
    return out;
  }

  // Breadth-first from the identity node yields shortlex-least words.
  std::vector<std::size_t> nodes;
  std::vector<Word> words;
  {
    std::vector<std::size_t> queue{0};
    std::vector<Word> queue_words{Word{}};
    std::set<std::size_t> visited{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (std::size_t g = 0; g < p.generator_count; ++g) {
        std::size_t y = tc.entry(queue[head], g);
        if (!visited.insert(y).second) continue;
        Word w = queue_words[head];
        w.push_back(g);
        queue.push_back(y);
        queue_words.push_back(w);
        nodes.push_back(y);
        words.push_back(std::move(w));
      }
    }
  }
  std::size_t longest = 0;
  for (const auto& w : words) longest = std::max(longest, w.size());
  if (longest > limits.max_word_length) {
    out.note = "normal forms reach length " + std::to_string(longest) + ", cap is " +
               std::to_string(limits.max_word_length);
    return out;
  }

  const std::size_t n = nodes.size();
  std::vector<std::size_t> elem_of_node;
  {
    std::size_t top = 0;
    for (auto x : nodes) top = std::max(top, x);
    elem_of_node.assign(top + 1, kNone);
    for (std::size_t i = 0; i < n; ++i) elem_of_node[nodes[i]] = i;
  }
  out.elements = words;
  out.gen_map.resize(p.generator_count);
  for (std::size_t g = 0; g < p.generator_count; ++g)
    out.gen_map[g] = elem_of_node[tc.entry(0, g)];
  out.mul.assign(n, std::vector<std::size_t>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t node = nodes[x];
      for (auto g : words[y]) node = tc.entry(node, g);
      out.mul[x][y] = elem_of_node[node];
    }
  out.status = EnumerationStatus::complete;
  return out;
}

AxiomReport verify_enumeration(const SemigroupPresentation& p, const EnumeratedSemigroup& e) {
  AxiomReport r;
  const std::size_t n = e.size();
  r.declare("closed");
  bool closed = e.mul.size() == n && e.gen_map.size() == p.generator_count;
  for (const auto& row : e.mul) {
    closed = closed && row.size() == n &&
             std::all_of(row.begin(), row.end(), [n](std::size_t v) { return v < n; });
  }
  for (auto g : e.gen_map) closed = closed && g < n;
  if (!closed) {
    r.fail("closed", "table entries or generator images out of range");
    return r;
  }
  // Light's test: generators that associate with everything generate
  // elements that do.
  r.declare("associative");
  for (auto a : e.gen_map)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (e.mul[e.mul[x][a]][y] != e.mul[x][e.mul[a][y]]) {
          r.fail("associative", "(" + std::to_string(x) + ", " + std::to_string(a) + ", " +
                                    std::to_string(y) + ")");
        }
      }
  r.declare("relations hold");
  for (const auto& [u, v] : p.relations) {
    if (e.evaluate(u) != e.evaluate(v)) r.fail("relations hold", word_str(u) + " = " + word_str(v));
  }
  r.declare("generated");
  for (std::size_t x = 0; x < n; ++x) {
    if (e.elements[x].empty() || e.evaluate(e.elements[x]) != x) {
      r.fail("generated", "element " + std::to_string(x));
    }
  }
  return r;
}

ParAlgebra kpar(const InverseSemigroup& s, const EnumerationLimits& limits) {
  SemigroupPresentation p = pr_presentation(s);
  EnumeratedSemigroup e = enumerate_fp_semigroup(p, limits);
  if (e.status != EnumerationStatus::complete) {
    throw Error(ErrorCode::cap_exceeded, "Pr(S) enumeration stopped: " + e.note);
  }
  AxiomReport checks = verify_enumeration(p, e);
  if (!checks.passed()) {
    throw Error(ErrorCode::relation_breach, "enumerated table fails: " + checks.first_failure());
  }
  const std::size_t n = e.size();
  std::vector<SparseVec> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) table[x * n + y].emplace_back(e.mul[x][y], 1);
  StructureAlgebra a =
      StructureAlgebra::from_sparse(n, std::move(table)).with_associativity(Associativity::verified);
  if (auto unit = e.table().unit) a = a.with_unit(unit_vec(n, *unit));
  std::vector<Vec> iota;
  for (Element g = 0; g < s.size(); ++g) iota.push_back(unit_vec(n, e.gen_map[g]));
  return ParAlgebra{s, std::move(p), std::move(e), std::move(a), std::move(iota)};
}

Extension extend_rep(const ParAlgebra& pa, const PartialRep& pi) {
  const StructureAlgebra& b = pi.target();
  const EnumeratedSemigroup& e = pa.base;
  auto letters = [&](const Word& w) {
    Vec x = pi(w.at(0));
    for (std::size_t i = 1; i < w.size(); ++i) x = b.multiply(x, pi(w[i]));
    return x;
  };
  for (const auto& [u, v] : pa.presentation.relations) {
    if (letters(u) != letters(v)) {
      throw Error(ErrorCode::relation_breach,
                  "relation " + word_str(u) + " = " + word_str(v) + " fails in the target");
    }
  }
  Extension out{Matrix(b.dim(), e.size()), {}};
  std::vector<Vec> image(e.size());
  for (std::size_t x = 0; x < e.size(); ++x) {
    image[x] = letters(e.elements[x]);
    out.psi.set_column(x, image[x]);
  }
  // Any word for x times a letter lands on the word for the product.
  const std::string consistent = "letter decompositions agree";
  out.report.declare(consistent);
  for (std::size_t x = 0; x < e.size(); ++x)
    for (Element g = 0; g < pa.source.size(); ++g) {
      if (b.multiply(image[x], pi(g)) != image[e.mul[x][e.gen_map[g]]]) {
        out.report.fail(consistent, "element " + std::to_string(x) + ", letter " +
                                        std::to_string(g));
      }
    }
  HomCheck h = verify_linear_hom(pa.algebra, b, out.psi, false);
  out.report.check("psi multiplicative", h.ok, [&] { return h.witness; });
  const std::string extends = "psi(iota(s)) = pi(s)";
  out.report.declare(extends);
  for (Element s = 0; s < pa.source.size(); ++s) {
    if (out.psi.apply(pa.iota[s]) != pi(s)) out.report.fail(extends, "s = " + std::to_string(s));
  }
  if (!out.report.passed()) {
    throw Error(ErrorCode::relation_breach, "extension fails: " + out.report.first_failure());
  }
  return out;
}

namespace {

std::optional<std::size_t> first_unfixed(const Matrix& m) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (m.column(j) != unit_vec(m.rows(), j)) return j;
  }
  return std::nullopt;
}

}  // namespace

ExpansionIso expansion_iso(const InverseSemigroup& s, const EnumerationLimits& limits) {
  s.require_unit();
  ParAlgebra pa = kpar(s, limits);
  ExpansionIso out;
  out.pr_size = pa.base.size();
  AxiomReport& r = out.report;

  PartialRep iota = pa.iota_rep();
  r.append(verify_partial_rep(iota), "iota: ");

  RepQuotient rq = rep_quotient(iota);
  out.dim_j = rq.ideal.dim();
  out.dim_quotient = rq.quotient.algebra.dim();

  RepAction ra = action_from_rep(rq.rep);
  out.dim_a = ra.subalgebra.algebra.dim();
  for (Element x = 0; x < s.size(); ++x) out.dim_x.push_back(ra.action.ideal(x).dim());

  ActionRep ar = rep_from_action(ra.action);
  out.dim_l = ar.crossed.formal.algebra.dim();
  out.dim_i = ar.crossed.relations.dim();
  out.dim_crossed = ar.crossed.algebra().dim();

  const std::string units = "1_s = epsilon~_s";
  r.declare(units);
  for (Element x = 0; x < s.size(); ++x) {
    if (ar.units[x] != ra.epsilons[x]) r.fail(units, "s = " + std::to_string(x));
  }

  PhiHom ph = phi_hom(rq, ra, ar);
  r.append(ph.report, "phi: ");
  out.phi = ph.map;

  // psi on K_par(S) sends [s] to epsilon~_s d_s; it must kill J.
  Extension ext = extend_rep(pa, ar.rep);
  r.append(ext.report, "psi: ");
  for (const auto& j : rq.ideal.basis()) {
    if (!is_zero(ext.psi.apply(j))) {
      throw Error(ErrorCode::iso_breach, "psi does not vanish on J at " + format_vec(j));
    }
  }
  const auto& reps = rq.quotient.representatives;
  out.psi = Matrix(out.dim_crossed, reps.size());
  for (std::size_t k = 0; k < reps.size(); ++k) out.psi.set_column(k, ext.psi.column(reps[k]));

  r.check("dim crossed = dim K_par/J", out.dim_crossed == out.dim_quotient, [&] {
    return std::to_string(out.dim_crossed) + " != " + std::to_string(out.dim_quotient);
  });
  if (out.dim_crossed != out.dim_quotient) {
    throw Error(ErrorCode::iso_breach, "dimensions differ: " + std::to_string(out.dim_crossed) +
                                           " vs " + std::to_string(out.dim_quotient));
  }
  if (auto j = first_unfixed(out.phi * out.psi)) {
    throw Error(ErrorCode::iso_breach,
                "phi psi moves basis element " + std::to_string(*j) + " of K_par/J");
  }
  r.declare("phi psi = id");
  if (auto j = first_unfixed(out.psi * out.phi)) {
    throw Error(ErrorCode::iso_breach,
                "psi phi moves basis element " + std::to_string(*j) + " of the crossed product");
  }
  r.declare("psi phi = id");
  return out;
}

}  // namespace parcross
