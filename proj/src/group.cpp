#include "tcds/group.hpp"

#include <string>
#include <utility>

namespace tcds {

namespace {

std::string at(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void check_latin_square(const std::vector<std::vector<int>>& t) {
  const int n = static_cast<int>(t.size());
  std::vector<char> seen(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(t[i].size()) != n)
      throw not_a_group("row " + std::to_string(i) + " has length " +
                        std::to_string(t[i].size()) + ", expected " + std::to_string(n));
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      const int v = t[i][j];
      if (v < 0 || v >= n)
        throw not_a_group("entry " + std::to_string(v) + " at " + at(i, j) + " out of range");
      if (seen[v]) throw not_a_group("row " + std::to_string(i) + " is not a permutation");
      seen[v] = 1;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < n; ++i) {
      const int v = t[i][j];
      if (seen[v]) throw not_a_group("column " + std::to_string(j) + " is not a permutation");
      seen[v] = 1;
    }
  }
}

void check_associative(const std::vector<std::vector<int>>& t) {
  const int n = static_cast<int>(t.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (t[t[i][j]][k] != t[i][t[j][k]])
          throw not_a_group("not associative at (i,j,k)=(" + std::to_string(i) + "," +
                            std::to_string(j) + "," + std::to_string(k) + ")");
}

int find_identity(const std::vector<std::vector<int>>& t) {
  const int n = static_cast<int>(t.size());
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = (t[e][i] == i && t[i][e] == i);
    if (ok) return e;
  }
  throw not_a_group("no identity element");
}

std::vector<int> find_inverses(const std::vector<std::vector<int>>& t, int e) {
  const int n = static_cast<int>(t.size());
  std::vector<int> inv(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (t[i][j] == e && t[j][i] == e) {
        inv[i] = j;
        break;
      }
    }
    if (inv[i] < 0) throw not_a_group("element " + std::to_string(i) + " has no inverse");
  }
  return inv;
}

}  // namespace

FiniteGroup group_from_table(std::vector<std::vector<int>> table) {
  if (table.empty()) throw not_a_group("empty table");
  check_latin_square(table);
  check_associative(table);
  const int e = find_identity(table);
  std::vector<int> inv = find_inverses(table, e);
  FiniteGroup g;
  g.order = static_cast<int>(table.size());
  g.table = std::move(table);
  g.identity = e;
  g.inverses = std::move(inv);
  return g;
}

void check_group(const FiniteGroup& g) {
  if (g.order <= 0 || static_cast<int>(g.table.size()) != g.order)
    throw not_a_group("order/table size mismatch");
  check_latin_square(g.table);
  check_associative(g.table);
  if (find_identity(g.table) != g.identity) throw not_a_group("stored identity is wrong");
  if (find_inverses(g.table, g.identity) != g.inverses)
    throw not_a_group("stored inverses are wrong");
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw invalid_order("cyclic group order must be >= 1, got " + std::to_string(n));
  FiniteGroup g;
  g.order = n;
  g.identity = 0;
  g.table.assign(n, std::vector<int>(n));
  g.inverses.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g.table[i][j] = (i + j) % n;
    g.inverses[i] = (n - i) % n;
  }
  return g;
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int ng = g.order, nh = h.order;
  const int n = ng * nh;
  FiniteGroup p;
  p.order = n;
  p.table.assign(n, std::vector<int>(n));
  p.inverses.resize(n);
  for (int i1 = 0; i1 < ng; ++i1)
    for (int j1 = 0; j1 < nh; ++j1) {
      const int a = i1 * nh + j1;
      p.inverses[a] = g.inverses[i1] * nh + h.inverses[j1];
      for (int i2 = 0; i2 < ng; ++i2)
        for (int j2 = 0; j2 < nh; ++j2)
          p.table[a][i2 * nh + j2] = g.table[i1][i2] * nh + h.table[j1][j2];
    }
  p.identity = g.identity * nh + h.identity;
  return p;
}

}  // namespace tcds
