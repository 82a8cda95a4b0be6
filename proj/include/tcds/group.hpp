#pragma once

#include <vector>

#include "tcds/error.hpp"

namespace tcds {

// Finite group as a validated Cayley table. Elements are dense indices
// 0..order-1, so every higher layer works with plain ints and constant-time
// table lookups. Immutable after construction.
struct FiniteGroup {
  int order = 0;
  std::vector<std::vector<int>> table;  // table[i][j] = i * j
  int identity = 0;
  std::vector<int> inverses;

  int mul(int i, int j) const { return table[i][j]; }
  int inv(int i) const { return inverses[i]; }
};

// Validates the table (Latin square, associativity, identity, inverses) and
// derives identity/inverses from it. Throws not_a_group with the reason.
FiniteGroup group_from_table(std::vector<std::vector<int>> table);

// Structural re-check of an already-built group; throws not_a_group.
void check_group(const FiniteGroup& g);

// Z/n with table[i][j] = (i+j) mod n.
FiniteGroup cyclic_group(int n);

// Componentwise product on pairs; (g,h) is encoded as index g*|H| + h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

}  // namespace tcds
