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

#include "parcross/crossed_product.hpp"

#include <algorithm>

#include "parcross/error.hpp"

namespace parcross {

namespace {

// alpha_s(alpha_{s*}(a) b), which lies in X_s n X_{st}.
Vec generator_product(const PartialAction& alpha, Element s, const Vec& a, const Vec& b) {
  const auto& S = alpha.semigroup();
  Vec c = alpha.algebra().multiply(alpha.apply(S.inverse(s), a), b);
  return alpha.apply(s, c);
}

}  // namespace

FormalSum FormalSum::single(const PartialAction& alpha, Element s, const Vec& a) {
  auto c = alpha.ideal(s).coordinates(a);
  if (!c) {
    throw Error(ErrorCode::membership_breach,
                format_vec(a) + " is not in X_" + std::to_string(s));
  }
  FormalSum f;
  if (!parcross::is_zero(*c)) f.terms.emplace(s, std::move(*c));
  return f;
}

FormalSum multiply(const PartialAction& alpha, const FormalSum& x, const FormalSum& y) {
  const auto& S = alpha.semigroup();
  std::map<Element, Vec> acc;
  for (const auto& [s, xs] : x.terms) {
    Vec a = alpha.ideal(s).from_coordinates(xs);
    for (const auto& [t, yt] : y.terms) {
      Vec b = alpha.ideal(t).from_coordinates(yt);
      const Element st = S.mul(s, t);
      auto c = alpha.ideal(st).coordinates(generator_product(alpha, s, a, b));
      if (!c) {
        throw Error(ErrorCode::membership_breach,
                    "product of terms at " + std::to_string(s) + " and " +
                        std::to_string(t) + " is outside X_st");
      }
      auto it = acc.find(st);
      if (it == acc.end()) {
        acc.emplace(st, std::move(*c));
      } else {
        it->second = it->second + *c;
      }
    }
  }
  FormalSum out;
  for (auto& [s, v] : acc) {
    if (!is_zero(v)) out.terms.emplace(s, std::move(v));
  }
  return out;
}

Vec FormalAlgebra::embed(const FormalSum& x) const {
  Vec v = zero_vec(offsets.back());
  for (const auto& [s, c] : x.terms) {
    for (std::size_t j = 0; j < c.size(); ++j) v[offsets[s] + j] = c[j];
  }
  return v;
}

FormalSum FormalAlgebra::to_formal(const Vec& v) const {
  FormalSum f;
  for (Element s = 0; s + 1 < offsets.size(); ++s) {
    Vec c(v.begin() + static_cast<std::ptrdiff_t>(offsets[s]),
          v.begin() + static_cast<std::ptrdiff_t>(offsets[s + 1]));
    if (!is_zero(c)) f.terms.emplace(s, std::move(c));
  }
  return f;
}

FormalAlgebra build_formal_algebra(const PartialAction& alpha) {
  const auto& S = alpha.semigroup();
  S.require_unit();
  AxiomReport axioms = verify_partial_action(alpha);
  if (!axioms.passed()) {
    throw Error(ErrorCode::not_validated,
                "partial action fails its axioms: " + axioms.first_failure());
  }
  const std::size_t n = S.size();
  FormalAlgebra l;
  l.offsets.assign(n + 1, 0);
  for (Element s = 0; s < n; ++s) l.offsets[s + 1] = l.offsets[s] + alpha.ideal(s).dim();
  const std::size_t dim = l.offsets.back();

  std::vector<SparseVec> table(dim * dim);
  for (Element s = 0; s < n; ++s) {
    const Subspace& xs = alpha.ideal(s);
    for (Element t = 0; t < n; ++t) {
      const Subspace& xt = alpha.ideal(t);
      const Element st = S.mul(s, t);
      const Subspace& range = xs.intersect(alpha.ideal(st));
      for (std::size_t i = 0; i < xs.dim(); ++i)
        for (std::size_t j = 0; j < xt.dim(); ++j) {
          Vec r = generator_product(alpha, s, xs.basis()[i], xt.basis()[j]);
          if (!range.contains(r)) {
            throw Error(ErrorCode::well_definedness_breach,
                        "(s, t) = (" + std::to_string(s) + ", " + std::to_string(t) +
                            "): product leaves X_s n X_st");
          }
          auto c = *alpha.ideal(st).coordinates(r);
          SparseVec& entry = table[(l.offsets[s] + i) * dim + (l.offsets[t] + j)];
          for (std::size_t k = 0; k < c.size(); ++k) {
            if (sgn(c[k]) != 0) entry.emplace_back(l.offsets[st] + k, c[k]);
          }
        }
    }
  }
  l.algebra = StructureAlgebra::from_sparse(dim, std::move(table));
  return l;
}

Subspace build_relation_ideal(const PartialAction& alpha, const FormalAlgebra& l) {
  const auto& S = alpha.semigroup();
  std::vector<Vec> generators;
  for (Element r = 0; r < S.size(); ++r)
    for (Element t = 0; t < S.size(); ++t) {
      if (r == t || !S.natural_leq(r, t)) continue;
      for (const auto& a : alpha.ideal(r).basis()) {
        Vec g = l.embed(FormalSum::single(alpha, r, a)) -
                l.embed(FormalSum::single(alpha, t, a));
        generators.push_back(std::move(g));
      }
    }
  return ideal_closure(l.algebra, generators);
}

Vec CrossedProduct::coset(Element s, const Vec& a) const {
  return quotient.project(formal.embed(FormalSum::single(action, s, a)));
}

CrossedProduct build_crossed_product(const PartialAction& alpha) {
  FormalAlgebra l = build_formal_algebra(alpha);
  Subspace rel = build_relation_ideal(alpha, l);
  Quotient q = quotient_algebra(l.algebra, rel);
  q.algebra = checked(q.algebra);
  if (auto u = unit_of(q.algebra, Subspace::full(q.algebra.dim()))) {
    q.algebra = q.algebra.with_unit(std::move(u));
  }
  return CrossedProduct{alpha, std::move(l), std::move(rel), std::move(q)};
}

AxiomReport coset_identification(const CrossedProduct& cp) {
  const auto& S = cp.action.semigroup();
  AxiomReport r;
  r.declare("coset of a d_r equals coset of a d_t for r <= t");
  for (Element s = 0; s < S.size(); ++s)
    for (Element t = 0; t < S.size(); ++t) {
      if (s == t || !S.natural_leq(s, t)) continue;
      for (const auto& a : cp.action.ideal(s).basis()) {
        if (cp.coset(s, a) != cp.coset(t, a)) {
          r.fail("coset of a d_r equals coset of a d_t for r <= t",
                 "(r, t) = (" + std::to_string(s) + ", " + std::to_string(t) + ")");
        }
      }
    }
  return r;
}

bool AssociativitySuite::all_lr_associative() const {
  return std::all_of(ideals.begin(), ideals.end(),
                     [](const IdealConditions& c) { return c.lr_associative; });
}

bool AssociativitySuite::all_idempotent_or_nondegenerate() const {
  return std::all_of(ideals.begin(), ideals.end(), [](const IdealConditions& c) {
    return c.idempotent || c.nondegenerate;
  });
}

bool AssociativitySuite::all_unital() const {
  return std::all_of(ideals.begin(), ideals.end(),
                     [](const IdealConditions& c) { return c.unital; });
}

bool AssociativitySuite::conditions_imply_lr() const {
  return std::all_of(ideals.begin(), ideals.end(), [](const IdealConditions& c) {
    return !(c.idempotent || c.nondegenerate) || c.lr_associative;
  });
}

AssociativitySuite associativity_suite(const PartialAction& alpha) {
  const auto& A = alpha.algebra();
  CrossedProduct cp = build_crossed_product(alpha);
  AssociativitySuite out;
  for (Element s = 0; s < alpha.semigroup().size(); ++s) {
    const Subspace& x = alpha.ideal(s);
    IdealConditions c;
    c.element = s;
    c.dim = x.dim();
    StructureAlgebra xa = induced_algebra(A, x);
    c.lr_associative = is_lr_associative(xa);
    auto d = ideal_diagnostics(A, x);
    c.idempotent = d.idempotent;
    c.nondegenerate = d.nondegenerate;
    c.unital = xa.unit().has_value();
    out.ideals.push_back(c);
  }
  out.semiprime = is_semiprime(A);
  auto assoc = check_associative(cp.algebra());
  out.associative = assoc.associative;
  out.witness = assoc.witness;
  out.dim_l = cp.formal.algebra.dim();
  out.dim_relations = cp.relations.dim();
  out.dim_quotient = cp.algebra().dim();
  return out;
}

}  // namespace parcross
