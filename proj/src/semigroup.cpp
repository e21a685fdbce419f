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

#include "parcross/semigroup.hpp"

#include <algorithm>
#include <map>

#include "parcross/error.hpp"

namespace parcross {

namespace {

std::string triple(Element s, Element t, Element u) {
  return "(" + std::to_string(s) + ", " + std::to_string(t) + ", " +
         std::to_string(u) + ")";
}

std::string pair(Element s, Element t) {
  return "(" + std::to_string(s) + ", " + std::to_string(t) + ")";
}

// All t with sts = s and tst = t.
std::vector<Element> inverse_candidates(const CayleyTable& c, Element s) {
  std::vector<Element> out;
  for (Element t = 0; t < c.size; ++t) {
    if (c.mul[c.mul[s][t]][s] == s && c.mul[c.mul[t][s]][t] == t) {
      out.push_back(t);
    }
  }
  return out;
}

void check_shape(const CayleyTable& c) {
  if (c.size == 0) throw Error(ErrorCode::malformed_table, "empty table");
  if (c.mul.size() != c.size) {
    throw Error(ErrorCode::malformed_table,
                "table has " + std::to_string(c.mul.size()) + " rows, expected " +
                    std::to_string(c.size));
  }
  for (std::size_t i = 0; i < c.size; ++i) {
    if (c.mul[i].size() != c.size) {
      throw Error(ErrorCode::malformed_table,
                  "row " + std::to_string(i) + " has " +
                      std::to_string(c.mul[i].size()) + " entries");
    }
    for (std::size_t j = 0; j < c.size; ++j) {
      if (c.mul[i][j] >= c.size) {
        throw Error(ErrorCode::malformed_table,
                    "entry " + pair(i, j) + " = " + std::to_string(c.mul[i][j]) +
                        " out of range");
      }
    }
  }
  if (c.unit && *c.unit >= c.size) {
    throw Error(ErrorCode::malformed_table, "unit index out of range");
  }
}

}  // namespace

AxiomReport verify_inverse_semigroup(const CayleyTable& c) {
  AxiomReport r;
  const std::size_t n = c.size;
  auto m = [&](Element s, Element t) { return c.mul[s][t]; };

  r.declare("associativity");
  for (Element s = 0; s < n; ++s)
    for (Element t = 0; t < n; ++t)
      for (Element u = 0; u < n; ++u) {
        if (m(m(s, t), u) != m(s, m(t, u))) {
          r.fail("associativity",
                 triple(s, t, u) + ": (st)u = " + std::to_string(m(m(s, t), u)) +
                     ", s(tu) = " + std::to_string(m(s, m(t, u))));
        }
      }

  r.declare("regularity");
  for (Element s = 0; s < n; ++s) {
    bool found = false;
    for (Element t = 0; t < n && !found; ++t) found = m(m(s, t), s) == s;
    if (!found) r.fail("regularity", "s = " + std::to_string(s) + " has no t with sts = s");
  }

  r.declare("idempotents commute");
  std::vector<Element> idem;
  for (Element s = 0; s < n; ++s)
    if (m(s, s) == s) idem.push_back(s);
  for (std::size_t i = 0; i < idem.size(); ++i)
    for (std::size_t j = i + 1; j < idem.size(); ++j) {
      Element e = idem[i], f = idem[j];
      if (m(e, f) != m(f, e)) {
        r.fail("idempotents commute",
               "(e, f) = " + pair(e, f) + ": ef = " + std::to_string(m(e, f)) +
                   ", fe = " + std::to_string(m(f, e)));
      }
    }

  r.declare("unique inverses");
  std::vector<std::optional<Element>> inv(n);
  for (Element s = 0; s < n; ++s) {
    auto cands = inverse_candidates(c, s);
    if (cands.size() == 1) {
      inv[s] = cands.front();
    } else {
      r.fail("unique inverses", "s = " + std::to_string(s) + " has " +
                                    std::to_string(cands.size()) + " inverses");
    }
  }

  r.declare("inverse is an involution");
  r.declare("inverse reverses products");
  for (Element s = 0; s < n; ++s) {
    if (!inv[s]) continue;
    if (inv[*inv[s]] && *inv[*inv[s]] != s) {
      r.fail("inverse is an involution", "s = " + std::to_string(s));
    }
    for (Element t = 0; t < n; ++t) {
      auto st = inv[m(s, t)];
      if (!st || !inv[t]) continue;
      if (*st != m(*inv[t], *inv[s])) {
        r.fail("inverse reverses products", pair(s, t));
      }
    }
  }

  if (c.unit) {
    const Element one = *c.unit;
    r.declare("unit");
    for (Element s = 0; s < n; ++s) {
      if (m(one, s) != s || m(s, one) != s) {
        r.fail("unit", "s = " + std::to_string(s));
      }
    }
    if (inv[one] && *inv[one] != one) r.fail("unit", "unit is not self-inverse");
  }
  return r;
}

InverseSemigroup InverseSemigroup::from_table(CayleyTable table) {
  check_shape(table);
  AxiomReport report = verify_inverse_semigroup(table);
  if (!report.passed()) {
    throw Error(ErrorCode::not_inverse_semigroup, report.first_failure());
  }
  InverseSemigroup s;
  s.inv_.resize(table.size);
  for (Element x = 0; x < table.size; ++x) {
    s.inv_[x] = inverse_candidates(table, x).front();
  }
  s.table_ = std::move(table);
  return s;
}

InverseSemigroup InverseSemigroup::cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::malformed_table, "cyclic_group(0)");
  CayleyTable c{n, std::vector<std::vector<Element>>(n, std::vector<Element>(n)), 0};
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j) c.mul[i][j] = (i + j) % n;
  auto s = from_table(std::move(c));
  for (Element i = 0; i < n; ++i) {
    s.labels_.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i)));
  }
  return s;
}

InverseSemigroup InverseSemigroup::chain_semilattice(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::malformed_table, "chain_semilattice(0)");
  CayleyTable c{n, std::vector<std::vector<Element>>(n, std::vector<Element>(n)),
                n - 1};
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j) c.mul[i][j] = std::min(i, j);
  auto s = from_table(std::move(c));
  for (Element i = 0; i < n; ++i) {
    s.labels_.push_back(i + 1 == n ? "1" : "e" + std::to_string(i));
  }
  return s;
}

InverseSemigroup InverseSemigroup::symmetric_inverse_monoid(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::malformed_table, "symmetric_inverse_monoid(0)");
  // Image vectors: img[x] = -1 when x is outside the domain.
  std::vector<std::vector<int>> maps;
  std::vector<int> cur(n, -1);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, std::size_t x) -> void {
    if (x == n) {
      maps.push_back(cur);
      return;
    }
    cur[x] = -1;
    self(self, x + 1);
    for (std::size_t y = 0; y < n; ++y) {
      if (used[y]) continue;
      used[y] = true;
      cur[x] = static_cast<int>(y);
      self(self, x + 1);
      used[y] = false;
    }
    cur[x] = -1;
  };
  rec(rec, 0);
  std::sort(maps.begin(), maps.end());
  std::map<std::vector<int>, Element> index;
  for (Element i = 0; i < maps.size(); ++i) index[maps[i]] = i;

  const std::size_t size = maps.size();
  CayleyTable c{size, std::vector<std::vector<Element>>(size, std::vector<Element>(size)),
                std::nullopt};
  for (Element i = 0; i < size; ++i) {
    for (Element j = 0; j < size; ++j) {
      std::vector<int> comp(n, -1);
      for (std::size_t x = 0; x < n; ++x) {
        int y = maps[j][x];
        if (y >= 0) comp[x] = maps[i][static_cast<std::size_t>(y)];
      }
      c.mul[i][j] = index.at(comp);
    }
  }
  std::vector<int> id(n);
  for (std::size_t x = 0; x < n; ++x) id[x] = static_cast<int>(x);
  c.unit = index.at(id);
  auto s = from_table(std::move(c));
  for (const auto& m : maps) {
    std::string l = "{";
    bool first = true;
    for (std::size_t x = 0; x < n; ++x) {
      if (m[x] < 0) continue;
      if (!first) l += ",";
      l += std::to_string(x + 1) + "->" + std::to_string(m[x] + 1);
      first = false;
    }
    s.labels_.push_back(l + "}");
  }
  return s;
}

InverseSemigroup InverseSemigroup::direct_product(const InverseSemigroup& a,
                                                  const InverseSemigroup& b) {
  const std::size_t na = a.size(), nb = b.size();
  const std::size_t n = na * nb;
  CayleyTable c{n, std::vector<std::vector<Element>>(n, std::vector<Element>(n)),
                std::nullopt};
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      c.mul[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  if (a.unit() && b.unit()) c.unit = *a.unit() * nb + *b.unit();
  auto s = from_table(std::move(c));
  for (Element x = 0; x < n; ++x) {
    s.labels_.push_back("(" + a.label(x / nb) + "," + b.label(x % nb) + ")");
  }
  return s;
}

void InverseSemigroup::check(Element s) const {
  if (s >= size()) {
    throw Error(ErrorCode::out_of_range,
                "element " + std::to_string(s) + " not in semigroup of size " +
                    std::to_string(size()));
  }
}

Element InverseSemigroup::inverse(Element s) const {
  check(s);
  return inv_[s];
}

Element InverseSemigroup::require_unit() const {
  if (!table_.unit) {
    throw Error(ErrorCode::missing_unit, "semigroup has no unit element");
  }
  return *table_.unit;
}

std::vector<Element> InverseSemigroup::idempotents() const {
  std::vector<Element> out;
  for (Element s = 0; s < size(); ++s)
    if (is_idempotent(s)) out.push_back(s);
  return out;
}

bool InverseSemigroup::natural_leq(Element r, Element t) const {
  check(r);
  check(t);
  return mul(r, inv_[r], t) == r;
}

std::string InverseSemigroup::label(Element s) const {
  if (s < labels_.size()) return labels_[s];
  return std::to_string(s);
}

}  // namespace parcross
