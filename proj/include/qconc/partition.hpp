#pragma once

#include <vector>

namespace qconc {

/// An ordered bipartition of subsystems {0,...,n-1}. Canonical form keeps
/// subsystem 0 on side A, so each unordered cut appears exactly once.
struct Cut {
  std::vector<int> side_a;
  std::vector<int> side_b;
  int n = 0;
};

/// All 2^(n-1) - 1 canonical cuts, ordered by side A read as a bitmask
/// (bit i set means subsystem i is on side A), ascending.
std::vector<Cut> enumerate_cuts(int n);

/// All 2^n - 2 proper nonempty subsets of {0,...,n-1}, bitmask ascending.
/// These index the reduced density matrices of the n-partite formulas.
std::vector<std::vector<int>> enumerate_subsets(int n);

}  // namespace qconc
