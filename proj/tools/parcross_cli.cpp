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

// Command-line front end. Talks to the library only through parcross.h.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "parcross/parcross.h"

namespace {

constexpr int kUsage = 2;

struct Inputs {
  std::string command;
  std::optional<std::string> semigroup, algebra, action, rep, report, output;
  std::string format = "text";
  pc_options opts{};
};

struct UsageError {
  std::string what;
};

// Library failure while loading inputs.
struct LoadError {
  pc_status status;
  std::string what;
};

void check(pc_status s) {
  if (s != PC_OK) throw LoadError{s, pc_last_error()};
}

template <typename T>
using Owned = std::unique_ptr<T, void (*)(T*)>;

Owned<pc_semigroup> semigroup(const Inputs& in) {
  if (!in.semigroup) throw UsageError{in.command + " needs --semigroup"};
  pc_semigroup* s = nullptr;
  check(pc_semigroup_load(in.semigroup->c_str(), &s));
  return {s, pc_semigroup_free};
}

Owned<pc_algebra> algebra(const Inputs& in) {
  if (!in.algebra) throw UsageError{in.command + " needs --algebra"};
  pc_algebra* a = nullptr;
  check(pc_algebra_load(in.algebra->c_str(), &a));
  return {a, pc_algebra_free};
}

// --action, or the trivial action of --semigroup on --algebra.
Owned<pc_action> action(const Inputs& in) {
  pc_action* a = nullptr;
  if (in.action) {
    check(pc_action_load(in.action->c_str(), &a));
  } else if (in.semigroup && in.algebra) {
    auto s = semigroup(in);
    auto alg = algebra(in);
    check(pc_action_trivial(s.get(), alg.get(), &a));
  } else {
    throw UsageError{in.command + " needs --action, or --semigroup with --algebra"};
  }
  return {a, pc_action_free};
}

// --rep is a file, or "wagner-preston" / "iota" of --semigroup.
Owned<pc_rep> rep(const Inputs& in) {
  if (!in.rep) throw UsageError{in.command + " needs --rep"};
  pc_rep* r = nullptr;
  if (*in.rep == "wagner-preston") {
    check(pc_rep_wagner_preston(semigroup(in).get(), &r));
  } else if (*in.rep == "iota") {
    check(pc_rep_iota(semigroup(in).get(), &in.opts, &r));
  } else {
    check(pc_rep_load(in.rep->c_str(), &r));
  }
  return {r, pc_rep_free};
}

Owned<pc_corpus> corpus(const Inputs& in) {
  pc_corpus* c = nullptr;
  if (in.action) {
    check(pc_corpus_from_action(action(in).get(), &c));
  } else {
    check(pc_corpus_generate(&in.opts, in.semigroup ? in.semigroup->c_str() : nullptr,
                             in.algebra ? in.algebra->c_str() : nullptr, &c));
  }
  return {c, pc_corpus_free};
}

using Runner = std::function<pc_report*(const Inputs&)>;

template <typename H, typename Cmd>
pc_report* run(const Owned<H>& h, Cmd cmd) {
  pc_report* r = nullptr;
  check(cmd(h.get(), &r));
  return r;
}

template <typename H, typename Cmd>
pc_report* run_opts(const Owned<H>& h, const pc_options& o, Cmd cmd) {
  pc_report* r = nullptr;
  check(cmd(h.get(), &o, &r));
  return r;
}

const std::map<std::string, Runner>& commands() {
  static const std::map<std::string, Runner> table = {
      {"verify-semigroup",
       [](const Inputs& in) {
         if (!in.semigroup) throw UsageError{"verify-semigroup needs --semigroup"};
         pc_report* r = nullptr;
         check(pc_cmd_verify_semigroup(in.semigroup->c_str(), &r));
         return r;
       }},
      {"verify-action", [](const Inputs& in) { return run(action(in), pc_cmd_verify_action); }},
      {"crossed-product", [](const Inputs& in) { return run(action(in), pc_cmd_crossed_product); }},
      {"check-thm-1.1", [](const Inputs& in) { return run(corpus(in), pc_cmd_lr_criterion); }},
      {"check-cor-1.2", [](const Inputs& in) { return run(corpus(in), pc_cmd_ideal_criterion); }},
      {"check-cor-1.4", [](const Inputs& in) { return run(corpus(in), pc_cmd_semiprime_criterion); }},
      {"verify-rep", [](const Inputs& in) { return run(rep(in), pc_cmd_verify_rep); }},
      {"check-lemma-2.1", [](const Inputs& in) { return run(rep(in), pc_cmd_idempotent_calculus); }},
      {"check-lemma-2.3", [](const Inputs& in) { return run(rep(in), pc_cmd_action_from_rep); }},
      {"check-lemma-2.4", [](const Inputs& in) { return run(action(in), pc_cmd_rep_from_action); }},
      {"check-prop-2.5", [](const Inputs& in) { return run(rep(in), pc_cmd_quotient_hom); }},
      {"build-pr", [](const Inputs& in) { return run_opts(semigroup(in), in.opts, pc_cmd_build_pr); }},
      {"build-kpar",
       [](const Inputs& in) { return run_opts(semigroup(in), in.opts, pc_cmd_build_kpar); }},
      {"check-thm-2.7",
       [](const Inputs& in) { return run_opts(semigroup(in), in.opts, pc_cmd_expansion_iso); }},
      {"corpus", [](const Inputs& in) { return run(corpus(in), pc_cmd_corpus); }},
  };
  return table;
}

// The command and the inputs that determine the report; output paths are
// left out so reports written to different places still compare equal.
std::string echo(const Inputs& in, bool uses_corpus, bool uses_cap) {
  std::string s = in.command;
  auto add = [&](const char* flag, const std::optional<std::string>& v) {
    if (v) s += std::string(" ") + flag + " " + *v;
  };
  add("--semigroup", in.semigroup);
  add("--algebra", in.algebra);
  add("--action", in.action);
  add("--rep", in.rep);
  if (uses_cap) {
    s += " --cap " + std::to_string(in.opts.cap);
    s += " --max-word-length " + std::to_string(in.opts.max_word_length);
  }
  if (uses_corpus) {
    s += " --seed " + std::to_string(in.opts.seed);
    s += " --corpus-size " + std::to_string(in.opts.corpus_size);
  }
  return s;
}

std::string take(char* p) {
  std::string s = p ? p : "";
  pc_string_free(p);
  return s;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  Inputs in;
  pc_options_default(&in.opts);

  CLI::App app{"Partial actions of inverse semigroups on algebras, their crossed products, "
               "and partial representations."};
  std::string names;
  for (const auto& [name, _] : commands()) names += (names.empty() ? "" : ", ") + name;
  app.add_option("command", in.command, "One of: " + names)->required();
  app.add_option("--semigroup", in.semigroup, "Semigroup file or family (cyclic:n, chain:n, sim:n, a*b)");
  app.add_option("--algebra", in.algebra, "Algebra file or family (field, fields:m, dual, m2, zero:k)");
  app.add_option("--action", in.action, "Partial action file");
  app.add_option("--rep", in.rep, "Representation file, or wagner-preston / iota of --semigroup");
  app.add_option("--cap", in.opts.cap, "Element cap for Pr(S) enumeration")->check(CLI::PositiveNumber);
  app.add_option("--max-word-length", in.opts.max_word_length, "Normal-form length cap for Pr(S)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", in.opts.seed, "Corpus seed");
  app.add_option("--corpus-size", in.opts.corpus_size, "Number of corpus instances");
  app.add_option("--report", in.report, "Also write the report as JSON to this path");
  app.add_option("--format", in.format, "Standard output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output", in.output, "Write the command's artifact (semigroup or algebra file) here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  auto it = commands().find(in.command);
  if (it == commands().end()) {
    std::cerr << "error: unknown command '" << in.command << "' (expected one of: " << names << ")\n";
    return kUsage;
  }

  pc_report* raw = nullptr;
  try {
    raw = it->second(in);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what << '\n';
    return kUsage;
  } catch (const LoadError& e) {
    std::cerr << "error: " << pc_status_name(e.status) << ": " << e.what << '\n';
    return kUsage;
  }
  Owned<pc_report> report(raw, pc_report_free);

  const bool uses_corpus = in.command == "corpus" ||
                           ((in.command == "check-thm-1.1" || in.command == "check-cor-1.2" ||
                             in.command == "check-cor-1.4") && !in.action);
  const bool uses_cap = in.command == "build-pr" || in.command == "build-kpar" ||
                        in.command == "check-thm-2.7" || (in.rep && *in.rep == "iota");
  pc_report_set_command(report.get(), echo(in, uses_corpus, uses_cap).c_str());

  char* text = nullptr;
  pc_report_render(report.get(), in.format == "json" ? PC_FORMAT_JSON : PC_FORMAT_TEXT, &text);
  std::cout << take(text);

  if (in.report) {
    char* json = nullptr;
    pc_report_render(report.get(), PC_FORMAT_JSON, &json);
    if (!write_file(*in.report, take(json))) {
      std::cerr << "error: cannot write " << *in.report << '\n';
      return kUsage;
    }
  }
  if (in.output) {
    char* artifact = nullptr;
    pc_report_artifact(report.get(), &artifact);
    std::string a = take(artifact);
    if (a.empty()) {
      std::cerr << "warning: " << in.command << " produced no artifact; " << *in.output
                << " not written\n";
    } else if (!write_file(*in.output, a)) {
      std::cerr << "error: cannot write " << *in.output << '\n';
      return kUsage;
    }
  }
  return static_cast<int>(pc_report_outcome(report.get())) == PC_PASS ? 0 : 1;
}
