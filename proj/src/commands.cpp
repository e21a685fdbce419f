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

#include "parcross/commands.hpp"

#include "parcross/crossed_product.hpp"
#include "parcross/error.hpp"
#include "parcross/text_format.hpp"

namespace parcross {

namespace {

// Runs f; a library error becomes a failing check named after the step.
template <typename F>
void guarded(Report& r, const std::string& step, F&& f) {
  try {
    f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::cap_exceeded) r.cap_exceeded = true;
    r.add(step, false, std::string(error_code_name(e.code())) + ": " + e.what());
  }
}

long long ll(std::size_t v) { return static_cast<long long>(v); }

void ideal_dims(Report& r, const PartialAction& alpha) {
  r.dim("|S|", ll(alpha.semigroup().size()));
  r.dim("dim A", ll(alpha.algebra().dim()));
  for (Element s = 0; s < alpha.semigroup().size(); ++s) {
    r.dim("dim X_" + std::to_string(s), ll(alpha.ideal(s).dim()));
  }
}

std::string triple(const std::optional<std::array<std::size_t, 3>>& w) {
  if (!w) return "no witness";
  return "basis triple (" + std::to_string((*w)[0]) + ", " + std::to_string((*w)[1]) + ", " +
         std::to_string((*w)[2]) + ") of the crossed product";
}

std::string instance_name(std::size_t i, const CorpusInstance& c) {
  return "instance " + std::to_string(i) + " [" + c.describe() + "]";
}

template <typename F>
Report over_corpus(const std::string& command, const std::vector<CorpusInstance>& corpus, F&& per_instance) {
  Report r;
  r.command = command;
  std::size_t associative = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const std::string name = instance_name(i, corpus[i]);
    guarded(r, name, [&] {
      AssociativitySuite suite = associativity_suite(corpus[i].action);
      if (suite.associative) ++associative;
      per_instance(r, name, suite);
    });
  }
  r.dim("instances", ll(corpus.size()));
  r.dim("associative crossed products", ll(associative));
  if (corpus.empty()) r.add("corpus is nonempty", false, "no instances");
  return r;
}

}  // namespace

Report cmd_verify_semigroup(const CayleyTable& table) {
  Report r;
  r.command = "verify-semigroup";
  r.add(verify_inverse_semigroup(table));
  std::size_t idempotents = 0;
  for (std::size_t s = 0; s < table.size; ++s) idempotents += table.mul[s][s] == s;
  r.dim("size", ll(table.size));
  r.dim("idempotents", ll(idempotents));
  return r;
}

Report cmd_verify_action(const PartialAction& alpha) {
  Report r;
  r.command = "verify-action";
  r.add(verify_partial_action(alpha));
  ideal_dims(r, alpha);
  return r;
}

Report cmd_crossed_product(const PartialAction& alpha) {
  Report r;
  r.command = "crossed-product";
  ideal_dims(r, alpha);
  guarded(r, "crossed product built", [&] {
    CrossedProduct cp = build_crossed_product(alpha);
    r.add("crossed product built", true);
    r.add(coset_identification(cp));
    auto assoc = check_associative(cp.algebra());
    r.add("crossed product is associative", assoc.associative,
          assoc.associative ? std::nullopt : std::optional<std::string>(triple(assoc.witness)));
    r.dim("dim L", ll(cp.formal.algebra.dim()));
    r.dim("dim I", ll(cp.relations.dim()));
    r.dim("dim crossed product", ll(cp.algebra().dim()));
    r.dim("unital", cp.algebra().unit() ? 1 : 0);
    r.artifact = format_algebra(cp.algebra());
  });
  return r;
}

Report cmd_lr_criterion(const std::vector<CorpusInstance>& corpus) {
  std::size_t hypothesis = 0;
  Report r = over_corpus("check-thm-1.1", corpus, [&](Report& rr, const std::string& name,
                                                      const AssociativitySuite& s) {
    hypothesis += s.all_lr_associative();
    rr.add(name + ": every X_s (L,R)-associative => associative", s.lr_implication_ok(),
           s.lr_implication_ok() ? std::nullopt : std::optional<std::string>(triple(s.witness)));
  });
  r.dim("all ideals (L,R)-associative", ll(hypothesis));
  return r;
}

Report cmd_ideal_criterion(const std::vector<CorpusInstance>& corpus) {
  std::size_t hypothesis = 0;
  std::size_t unital = 0;
  Report r = over_corpus("check-cor-1.2", corpus, [&](Report& rr, const std::string& name,
                                                      const AssociativitySuite& s) {
    hypothesis += s.all_idempotent_or_nondegenerate();
    unital += s.all_unital();
    std::optional<std::string> w;
    if (!s.associative) w = triple(s.witness);
    rr.add(name + ": idempotent or non-degenerate X_s => (L,R)-associative", s.conditions_imply_lr());
    rr.add(name + ": every X_s idempotent or non-degenerate => associative", s.ideal_implication_ok(),
           s.ideal_implication_ok() ? std::nullopt : w);
    bool unital_ok = !s.all_unital() || s.associative;
    rr.add(name + ": every X_s unital => associative", unital_ok, unital_ok ? std::nullopt : w);
  });
  r.dim("all ideals idempotent or non-degenerate", ll(hypothesis));
  r.dim("all ideals unital", ll(unital));
  return r;
}

Report cmd_semiprime_criterion(const std::vector<CorpusInstance>& corpus) {
  std::size_t hypothesis = 0;
  Report r = over_corpus("check-cor-1.4", corpus, [&](Report& rr, const std::string& name,
                                                      const AssociativitySuite& s) {
    hypothesis += s.semiprime;
    rr.add(name + ": A semiprime => associative", s.semiprime_implication_ok(),
           s.semiprime_implication_ok() ? std::nullopt : std::optional<std::string>(triple(s.witness)));
  });
  r.dim("semiprime algebras", ll(hypothesis));
  return r;
}

Report cmd_verify_rep(const PartialRep& pi) {
  Report r;
  r.command = "verify-rep";
  r.dim("|S|", ll(pi.semigroup().size()));
  r.dim("dim B", ll(pi.target().dim()));
  guarded(r, "target is unital", [&] { r.add(verify_partial_rep(pi)); });
  return r;
}

Report cmd_idempotent_calculus(const PartialRep& pi) {
  Report r;
  r.command = "check-lemma-2.1";
  r.dim("|S|", ll(pi.semigroup().size()));
  r.dim("dim B", ll(pi.target().dim()));
  guarded(r, "target is unital", [&] { r.add(verify_partial_rep(pi), "partial representation: "); });
  r.add(idempotent_calculus(pi));
  return r;
}

Report cmd_action_from_rep(const PartialRep& pi) {
  Report r;
  r.command = "check-lemma-2.3";
  guarded(r, "induced partial action", [&] {
    RepAction ra = action_from_rep(pi);
    r.add(verify_partial_action(ra.action), "induced action: ");
    ideal_dims(r, ra.action);
  });
  return r;
}

Report cmd_rep_from_action(const PartialAction& alpha) {
  Report r;
  r.command = "check-lemma-2.4";
  ideal_dims(r, alpha);
  guarded(r, "induced partial representation", [&] {
    ActionRep ar = rep_from_action(alpha);
    r.add(verify_partial_rep(ar.rep), "induced representation: ");
    r.dim("dim L", ll(ar.crossed.formal.algebra.dim()));
    r.dim("dim I", ll(ar.crossed.relations.dim()));
    r.dim("dim crossed product", ll(ar.crossed.algebra().dim()));
  });
  return r;
}

Report cmd_quotient_hom(const PartialRep& pi) {
  Report r;
  r.command = "check-prop-2.5";
  r.dim("|S|", ll(pi.semigroup().size()));
  r.dim("dim B", ll(pi.target().dim()));
  guarded(r, "phi is a well-defined homomorphism", [&] {
    RepQuotient rq = rep_quotient(pi);
    r.dim("dim J", ll(rq.ideal.dim()));
    r.dim("dim B/J", ll(rq.quotient.algebra.dim()));
    RepAction ra = action_from_rep(rq.rep);
    r.dim("dim A", ll(ra.subalgebra.algebra.dim()));
    ActionRep ar = rep_from_action(ra.action);
    r.dim("dim crossed product", ll(ar.crossed.algebra().dim()));
    PhiHom ph = phi_hom(rq, ra, ar);
    r.add(ph.report);
  });
  return r;
}

Report cmd_build_pr(const InverseSemigroup& s, const EnumerationLimits& limits) {
  Report r;
  r.command = "build-pr";
  SemigroupPresentation p = pr_presentation(s);
  r.dim("generators", ll(p.generator_count));
  r.dim("relations", ll(p.relations.size()));
  EnumeratedSemigroup e = enumerate_fp_semigroup(p, limits);
  if (e.status != EnumerationStatus::complete) {
    r.cap_exceeded = true;
    r.add("enumeration complete", false, e.note);
    return r;
  }
  r.add("enumeration complete", true);
  r.add(verify_enumeration(p, e), "Pr(S) table: ");
  r.dim("|Pr(S)|", ll(e.size()));
  std::size_t longest = 0;
  for (const auto& w : e.elements) longest = std::max(longest, w.size());
  r.dim("longest normal form", ll(longest));
  r.artifact = format_semigroup(e.table());
  return r;
}

Report cmd_build_kpar(const InverseSemigroup& s, const EnumerationLimits& limits) {
  Report r;
  r.command = "build-kpar";
  guarded(r, "K_par(S) built", [&] {
    ParAlgebra pa = kpar(s, limits);
    r.add("K_par(S) built", true);
    r.dim("dim K_par(S)", ll(pa.algebra.dim()));
    r.add(verify_partial_rep(pa.iota_rep()), "iota: ");
    r.artifact = format_algebra(pa.algebra);
  });
  return r;
}

Report cmd_expansion_iso(const InverseSemigroup& s, const EnumerationLimits& limits) {
  Report r;
  r.command = "check-thm-2.7";
  guarded(r, "crossed product isomorphic to K_par(S)/J", [&] {
    ExpansionIso iso = expansion_iso(s, limits);
    r.dim("|Pr(S)|", ll(iso.pr_size));
    r.dim("dim J", ll(iso.dim_j));
    r.dim("dim K_par(S)/J", ll(iso.dim_quotient));
    r.dim("dim A", ll(iso.dim_a));
    for (Element x = 0; x < iso.dim_x.size(); ++x) r.dim("dim X_" + std::to_string(x), ll(iso.dim_x[x]));
    r.dim("dim L", ll(iso.dim_l));
    r.dim("dim I", ll(iso.dim_i));
    r.dim("dim crossed product", ll(iso.dim_crossed));
    r.add(iso.report);
  });
  return r;
}

Report cmd_corpus(const std::vector<CorpusInstance>& corpus) {
  Report r;
  r.command = "corpus";
  std::size_t trivial = 0, wp = 0, padded = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& c = corpus[i];
    trivial += c.kind == "trivial";
    wp += c.kind == "wagner-preston";
    padded += c.kind == "padded";
    AxiomReport axioms = verify_partial_action(c.action);
    r.add(instance_name(i, c) + ": action axioms", axioms.passed(),
          axioms.passed() ? std::nullopt : std::optional<std::string>(axioms.first_failure()));
    if (!r.artifact.empty()) r.artifact += "\n";
    r.artifact += "# " + instance_name(i, c) + "\n";
    const std::string algebra_ref = c.kind == "wagner-preston" ? "inline" : c.algebra;
    r.artifact += format_action(c.action, c.semigroup, algebra_ref);
    if (c.kind == "wagner-preston") {
      // The algebra is computed, so it is listed here rather than referenced.
      const std::string alg = format_algebra(c.action.algebra());
      r.artifact += "# inline algebra:\n";
      for (std::size_t pos = 0; pos < alg.size();) {
        std::size_t end = alg.find('\n', pos);
        r.artifact += "#   " + alg.substr(pos, end - pos) + "\n";
        pos = end + 1;
      }
    }
  }
  r.dim("instances", ll(corpus.size()));
  r.dim("trivial", ll(trivial));
  r.dim("wagner-preston", ll(wp));
  r.dim("padded", ll(padded));
  if (corpus.empty()) r.add("corpus is nonempty", false, "no instances");
  return r;
}

}  // namespace parcross
