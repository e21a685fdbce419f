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

#include "parcross/text_format.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "parcross/error.hpp"

namespace parcross {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;
  std::string content;  // comment stripped, columns preserved
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string content(text.substr(pos, end - pos));
    ++number;
    if (auto hash = content.find('#'); hash != std::string::npos) content.resize(hash);
    if (!content.empty() && content.back() == '\r') content.pop_back();
    if (content.find_first_not_of(" \t") != std::string::npos) out.push_back({number, content});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

std::vector<Token> tokens(const std::string& s, std::size_t from = 0, std::size_t to = std::string::npos) {
  std::vector<Token> out;
  to = std::min(to, s.size());
  std::size_t i = from;
  while (i < to) {
    while (i < to && (s[i] == ' ' || s[i] == '\t')) ++i;
    if (i >= to) break;
    std::size_t j = i;
    while (j < to && s[j] != ' ' && s[j] != '\t') ++j;
    out.push_back({s.substr(i, j - i), i + 1});
    i = j;
  }
  return out;
}

std::size_t parse_index(const Line& l, const Token& t, std::size_t bound, const char* what) {
  if (t.text.empty() || t.text.find_first_not_of("0123456789") != std::string::npos ||
      t.text.size() > 9) {
    throw ParseError(l.number, t.column, std::string("expected ") + what + ", got '" + t.text + "'");
  }
  std::size_t v = std::stoul(t.text);
  if (v >= bound) {
    throw ParseError(l.number, t.column,
                     std::string(what) + " " + t.text + " out of range (bound " +
                         std::to_string(bound) + ")");
  }
  return v;
}

Rational parse_q(const Line& l, const Token& t) {
  try {
    return parse_rational(t.text);
  } catch (const std::invalid_argument&) {
    throw ParseError(l.number, t.column, "expected a rational, got '" + t.text + "'");
  }
}

Vec parse_vec(const Line& l, const std::vector<Token>& ts, std::size_t first = 0) {
  Vec v;
  for (std::size_t i = first; i < ts.size(); ++i) v.push_back(parse_q(l, ts[i]));
  return v;
}

void expect_count(const Line& l, const std::vector<Token>& ts, std::size_t n, const char* what) {
  if (ts.size() != n) {
    std::size_t col = ts.size() > n ? ts[n].column : l.content.size() + 1;
    throw ParseError(l.number, col,
                     std::string("expected ") + what + " (" + std::to_string(n) + " fields)");
  }
}

// "key s: a b ; c d" -> s and the groups of rationals.
struct Labelled {
  std::size_t element;
  std::vector<Vec> groups;
};

Labelled parse_labelled(const Line& l, std::size_t key_end, std::size_t size) {
  std::size_t colon = l.content.find(':', key_end);
  if (colon == std::string::npos) throw ParseError(l.number, key_end + 1, "missing ':'");
  auto label = tokens(l.content, key_end, colon);
  if (label.size() != 1) throw ParseError(l.number, key_end + 1, "expected one element index");
  Labelled out{parse_index(l, label[0], size, "element"), {}};
  std::size_t start = colon + 1;
  if (tokens(l.content, start).empty()) return out;
  while (true) {
    std::size_t semi = l.content.find(';', start);
    std::size_t end = semi == std::string::npos ? l.content.size() : semi;
    auto ts = tokens(l.content, start, end);
    if (ts.empty()) throw ParseError(l.number, start + 1, "empty vector");
    out.groups.push_back(parse_vec(l, ts));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return out;
}

std::string join(const Vec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += format_rational(v[i]);
  }
  return s;
}

std::string join_groups(const std::vector<Vec>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += " ; ";
    s += join(vs[i]);
  }
  return s;
}

std::string consistency(const Line& l, const std::string& what) {
  return "line " + std::to_string(l.number) + ": " + what;
}

// Shared header of action and rep files.
struct Header {
  std::optional<InverseSemigroup> semigroup;
  std::optional<StructureAlgebra> algebra;
};

bool parse_header_line(const Line& l, const std::vector<Token>& ts, Header& h,
                       const std::filesystem::path& base_dir) {
  if (ts[0].text == "semigroup") {
    if (h.semigroup) throw ParseError(l.number, ts[0].column, "duplicate semigroup line");
    expect_count(l, ts, 2, "semigroup <ref>");
    h.semigroup = load_semigroup(ts[1].text, base_dir);
    return true;
  }
  if (ts[0].text == "algebra") {
    if (h.algebra) throw ParseError(l.number, ts[0].column, "duplicate algebra line");
    expect_count(l, ts, 2, "algebra <ref>");
    h.algebra = load_algebra(ts[1].text, base_dir);
    return true;
  }
  return false;
}

void require_header(const Line& l, const Token& t, const Header& h) {
  if (!h.semigroup || !h.algebra) {
    throw ParseError(l.number, t.column, "semigroup and algebra must be given first");
  }
}

std::size_t parse_size(std::string_view spec, std::string_view family) {
  std::string arg(spec.substr(family.size() + 1));
  if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos || arg.size() > 4) {
    throw Error(ErrorCode::usage_error, "bad size in '" + std::string(spec) + "'");
  }
  return std::stoul(arg);
}

bool has_prefix(std::string_view s, std::string_view p) {
  return s.size() > p.size() && s.substr(0, p.size()) == p && s[p.size()] == ':';
}

InverseSemigroup semigroup_factor(std::string_view spec) {
  if (spec == "trivial") return InverseSemigroup::cyclic_group(1);
  auto bounded = [&](std::string_view name, std::size_t lo, std::size_t hi) {
    std::size_t n = parse_size(spec, name);
    if (n < lo || n > hi) {
      throw Error(ErrorCode::usage_error, "'" + std::string(spec) + "' needs " + std::to_string(lo) +
                                              " <= n <= " + std::to_string(hi));
    }
    return n;
  };
  if (has_prefix(spec, "cyclic")) return InverseSemigroup::cyclic_group(bounded("cyclic", 1, 64));
  if (has_prefix(spec, "chain")) return InverseSemigroup::chain_semilattice(bounded("chain", 1, 64));
  if (has_prefix(spec, "sim")) return InverseSemigroup::symmetric_inverse_monoid(bounded("sim", 1, 4));
  throw Error(ErrorCode::usage_error, "unknown semigroup '" + std::string(spec) + "'");
}

bool is_file(const std::filesystem::path& p) {
  std::error_code ec;
  return std::filesystem::is_regular_file(p, ec);
}

std::filesystem::path resolve(const std::string& ref, const std::filesystem::path& base_dir) {
  std::filesystem::path p(ref);
  if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
  return p;
}

bool looks_like_path(const std::string& ref) {
  return ref.find('/') != std::string::npos || ref.find('.') != std::string::npos;
}

template <typename T, typename Parse>
T with_path(const std::filesystem::path& p, Parse&& parse) {
  try {
    return parse();
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(),
                     p.string() + ": " + std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
  }
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CayleyTable parse_cayley_table(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "empty semigroup file");
  std::size_t li = 0;
  auto head = tokens(lines[li].content);
  if (head[0].text != "n") throw ParseError(lines[li].number, head[0].column, "expected 'n <size>'");
  expect_count(lines[li], head, 2, "n <size>");
  const std::size_t n = parse_index(lines[li], head[1], 100000, "size");
  if (n == 0) throw ParseError(lines[li].number, head[1].column, "size must be positive");
  ++li;
  CayleyTable c;
  c.size = n;
  if (li < lines.size()) {
    auto ts = tokens(lines[li].content);
    if (ts[0].text == "unit") {
      expect_count(lines[li], ts, 2, "unit <idx>");
      c.unit = parse_index(lines[li], ts[1], n, "unit");
      ++li;
    }
  }
  for (std::size_t row = 0; row < n; ++row, ++li) {
    if (li >= lines.size()) {
      throw ParseError(lines.back().number + 1, 1,
                       "expected " + std::to_string(n) + " table rows, found " + std::to_string(row));
    }
    auto ts = tokens(lines[li].content);
    if (!ts[0].text.empty() && !std::isdigit(static_cast<unsigned char>(ts[0].text[0]))) {
      throw ParseError(lines[li].number, ts[0].column, "unknown key '" + ts[0].text + "'");
    }
    expect_count(lines[li], ts, n, "a table row");
    std::vector<Element> r;
    for (const auto& t : ts) r.push_back(parse_index(lines[li], t, n, "entry"));
    c.mul.push_back(std::move(r));
  }
  if (li < lines.size()) throw ParseError(lines[li].number, 1, "unexpected line after the table");
  return c;
}

InverseSemigroup parse_semigroup(std::string_view text) {
  return InverseSemigroup::from_table(parse_cayley_table(text));
}

StructureAlgebra parse_algebra(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "empty algebra file");
  auto head = tokens(lines[0].content);
  if (head[0].text != "dim") throw ParseError(lines[0].number, head[0].column, "expected 'dim <d>'");
  expect_count(lines[0], head, 2, "dim <d>");
  const std::size_t d = parse_index(lines[0], head[1], 10000, "dimension");
  std::optional<Vec> unit;
  std::map<std::array<std::size_t, 3>, Rational> entries;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& l = lines[li];
    auto ts = tokens(l.content);
    if (ts[0].text == "unit") {
      if (unit) throw ParseError(l.number, ts[0].column, "duplicate unit line");
      if (!entries.empty()) throw ParseError(l.number, ts[0].column, "unit must precede the constants");
      expect_count(l, ts, d + 1, "unit <d rationals>");
      unit = parse_vec(l, ts, 1);
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(ts[0].text[0]))) {
      throw ParseError(l.number, ts[0].column, "unknown key '" + ts[0].text + "'");
    }
    expect_count(l, ts, 4, "i j k p/q");
    std::array<std::size_t, 3> key{parse_index(l, ts[0], d, "index"), parse_index(l, ts[1], d, "index"),
                                   parse_index(l, ts[2], d, "index")};
    if (entries.count(key)) throw ParseError(l.number, ts[0].column, "duplicate structure constant");
    entries.emplace(key, parse_q(l, ts[3]));
  }
  std::vector<SparseVec> table(d * d);
  for (const auto& [k, q] : entries) table[k[0] * d + k[1]].emplace_back(k[2], q);
  return StructureAlgebra::from_sparse(d, std::move(table), std::move(unit));
}

PartialAction parse_action(std::string_view text, const std::filesystem::path& base_dir) {
  Header h;
  std::map<Element, std::pair<Line, std::vector<Vec>>> ideal_lines;
  std::map<Element, std::pair<Line, std::vector<Vec>>> map_lines;
  for (const Line& l : split_lines(text)) {
    auto ts = tokens(l.content);
    if (parse_header_line(l, ts, h, base_dir)) continue;
    const std::string& key = ts[0].text;
    if (key != "ideal" && key != "map") {
      throw ParseError(l.number, ts[0].column, "unknown key '" + key + "'");
    }
    require_header(l, ts[0], h);
    Labelled lab = parse_labelled(l, ts[0].column - 1 + key.size(), h.semigroup->size());
    auto& target = key == "ideal" ? ideal_lines : map_lines;
    if (target.count(lab.element)) {
      throw ParseError(l.number, ts[0].column,
                       "duplicate " + key + " for element " + std::to_string(lab.element));
    }
    target.emplace(lab.element, std::make_pair(l, std::move(lab.groups)));
  }
  if (!h.semigroup || !h.algebra) throw ParseError(1, 1, "action file lacks semigroup or algebra");
  const auto& S = *h.semigroup;
  const std::size_t d = h.algebra->dim();

  std::vector<Subspace> ideals(S.size(), Subspace(d));
  for (auto& [s, entry] : ideal_lines) {
    for (const auto& v : entry.second) {
      if (v.size() != d) {
        throw Error(ErrorCode::consistency_error,
                    consistency(entry.first, "ideal vector of length " + std::to_string(v.size()) +
                                                 " in an algebra of dimension " + std::to_string(d)));
      }
      ideals[s].insert(v);
    }
  }
  std::vector<Matrix> maps;
  for (Element s = 0; s < S.size(); ++s) {
    const std::size_t rows = ideals[s].dim();
    const std::size_t cols = ideals[S.inverse(s)].dim();
    Matrix m(rows, cols);
    auto it = map_lines.find(s);
    const std::vector<Vec> none;
    const auto& given = it == map_lines.end() ? none : it->second.second;
    auto where = [&](const std::string& what) {
      return it == map_lines.end() ? "element " + std::to_string(s) + ": " + what
                                   : consistency(it->second.first, what);
    };
    if (given.size() != rows) {
      throw Error(ErrorCode::consistency_error,
                  where("map has " + std::to_string(given.size()) + " rows, X_" + std::to_string(s) +
                        " has dimension " + std::to_string(rows)));
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (given[i].size() != cols) {
        throw Error(ErrorCode::consistency_error,
                    where("map row of length " + std::to_string(given[i].size()) + ", X_{s*} has dimension " +
                          std::to_string(cols)));
      }
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = given[i][j];
    }
    maps.push_back(std::move(m));
  }
  return PartialAction(S, *h.algebra, std::move(ideals), std::move(maps));
}

PartialRep parse_rep(std::string_view text, const std::filesystem::path& base_dir) {
  Header h;
  std::map<Element, std::pair<Line, Vec>> images;
  for (const Line& l : split_lines(text)) {
    auto ts = tokens(l.content);
    if (parse_header_line(l, ts, h, base_dir)) continue;
    if (ts[0].text != "rep") throw ParseError(l.number, ts[0].column, "unknown key '" + ts[0].text + "'");
    require_header(l, ts[0], h);
    Labelled lab = parse_labelled(l, ts[0].column + 2, h.semigroup->size());
    if (lab.groups.size() != 1) throw ParseError(l.number, ts[0].column, "rep takes exactly one vector");
    if (images.count(lab.element)) {
      throw ParseError(l.number, ts[0].column, "duplicate rep for element " + std::to_string(lab.element));
    }
    if (lab.groups[0].size() != h.algebra->dim()) {
      throw Error(ErrorCode::consistency_error,
                  consistency(l, "vector of length " + std::to_string(lab.groups[0].size()) +
                                     " in an algebra of dimension " + std::to_string(h.algebra->dim())));
    }
    images.emplace(lab.element, std::make_pair(l, std::move(lab.groups[0])));
  }
  if (!h.semigroup || !h.algebra) throw ParseError(1, 1, "rep file lacks semigroup or algebra");
  std::vector<Vec> out;
  for (Element s = 0; s < h.semigroup->size(); ++s) {
    auto it = images.find(s);
    if (it == images.end()) {
      throw Error(ErrorCode::consistency_error, "no image given for element " + std::to_string(s));
    }
    out.push_back(it->second.second);
  }
  return PartialRep(*h.semigroup, *h.algebra, std::move(out));
}

std::string format_semigroup(const CayleyTable& table) {
  std::string s = "n " + std::to_string(table.size) + "\n";
  if (table.unit) s += "unit " + std::to_string(*table.unit) + "\n";
  for (const auto& row : table.mul) {
    for (std::size_t j = 0; j < row.size(); ++j) s += (j ? " " : "") + std::to_string(row[j]);
    s += "\n";
  }
  return s;
}

std::string format_algebra(const StructureAlgebra& a) {
  std::string s = "dim " + std::to_string(a.dim()) + "\n";
  if (a.unit() && a.dim() > 0) s += "unit " + join(*a.unit()) + "\n";
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (const auto& [k, q] : a.product(i, j)) {
        s += std::to_string(i) + " " + std::to_string(j) + " " + std::to_string(k) + " " +
             format_rational(q) + "\n";
      }
  return s;
}

std::string format_action(const PartialAction& alpha, const std::string& semigroup_ref,
                          const std::string& algebra_ref) {
  std::string s = "semigroup " + semigroup_ref + "\nalgebra " + algebra_ref + "\n";
  for (Element x = 0; x < alpha.semigroup().size(); ++x) {
    if (alpha.ideal(x).dim() == 0) continue;
    s += "ideal " + std::to_string(x) + ": " + join_groups(alpha.ideal(x).basis()) + "\n";
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < alpha.map(x).rows(); ++i) rows.push_back(alpha.map(x).row(i));
    s += "map " + std::to_string(x) + ": " + join_groups(rows) + "\n";
  }
  return s;
}

std::string format_rep(const PartialRep& pi, const std::string& semigroup_ref,
                       const std::string& algebra_ref) {
  std::string s = "semigroup " + semigroup_ref + "\nalgebra " + algebra_ref + "\n";
  for (Element x = 0; x < pi.semigroup().size(); ++x) {
    s += "rep " + std::to_string(x) + ": " + join(pi(x)) + "\n";
  }
  return s;
}

InverseSemigroup semigroup_family(std::string_view spec) {
  std::size_t star = spec.find('*');
  if (star == std::string_view::npos) return semigroup_factor(spec);
  InverseSemigroup acc = semigroup_factor(spec.substr(0, star));
  while (star != std::string_view::npos) {
    std::size_t next = spec.find('*', star + 1);
    std::string_view part =
        spec.substr(star + 1, next == std::string_view::npos ? std::string_view::npos : next - star - 1);
    acc = InverseSemigroup::direct_product(acc, semigroup_factor(part));
    star = next;
  }
  return acc;
}

StructureAlgebra algebra_family(std::string_view spec) {
  if (spec == "field") return field_algebra();
  if (spec == "dual") return dual_numbers();
  if (spec == "m2") return matrix_algebra(2);
  auto bounded = [&](std::string_view name, std::size_t lo, std::size_t hi) {
    std::size_t n = parse_size(spec, name);
    if (n < lo || n > hi) {
      throw Error(ErrorCode::usage_error, "'" + std::string(spec) + "' needs " + std::to_string(lo) +
                                              " <= n <= " + std::to_string(hi));
    }
    return n;
  };
  if (has_prefix(spec, "fields")) return product_of_fields(bounded("fields", 1, 64));
  if (has_prefix(spec, "matrix")) return matrix_algebra(bounded("matrix", 1, 8));
  if (has_prefix(spec, "zero")) return zero_product_algebra(bounded("zero", 0, 64));
  throw Error(ErrorCode::usage_error, "unknown algebra '" + std::string(spec) + "'");
}

CayleyTable load_cayley_table(const std::string& ref, const std::filesystem::path& base_dir) {
  auto p = resolve(ref, base_dir);
  if (is_file(p)) {
    return with_path<CayleyTable>(p, [&] { return parse_cayley_table(read_file(p)); });
  }
  if (looks_like_path(ref)) throw Error(ErrorCode::io_error, "cannot read " + p.string());
  return semigroup_family(ref).table();
}

InverseSemigroup load_semigroup(const std::string& ref, const std::filesystem::path& base_dir) {
  auto p = resolve(ref, base_dir);
  if (is_file(p)) {
    return with_path<InverseSemigroup>(p, [&] { return parse_semigroup(read_file(p)); });
  }
  if (looks_like_path(ref)) throw Error(ErrorCode::io_error, "cannot read " + p.string());
  return semigroup_family(ref);
}

StructureAlgebra load_algebra(const std::string& ref, const std::filesystem::path& base_dir) {
  auto p = resolve(ref, base_dir);
  if (is_file(p)) {
    return with_path<StructureAlgebra>(p, [&] { return parse_algebra(read_file(p)); });
  }
  if (looks_like_path(ref)) throw Error(ErrorCode::io_error, "cannot read " + p.string());
  return algebra_family(ref);
}

PartialAction load_action(const std::string& path) {
  std::filesystem::path p(path);
  std::string text = read_file(p);
  return with_path<PartialAction>(p, [&] { return parse_action(text, p.parent_path()); });
}

PartialRep load_rep(const std::string& path) {
  std::filesystem::path p(path);
  std::string text = read_file(p);
  return with_path<PartialRep>(p, [&] { return parse_rep(text, p.parent_path()); });
}

}  // namespace parcross
