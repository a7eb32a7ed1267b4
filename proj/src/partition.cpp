#include "qconc/partition.hpp"

#include <stdexcept>
#include <string>

namespace qconc {
namespace {

// Bitmask arithmetic stays trivially safe under this cap; dense matrices
// run out of memory long before it matters.
constexpr int kMaxParties = 16;

void check_n(int n) {
  if (n < 2) throw std::invalid_argument("need at least 2 subsystems, got " +
                                         std::to_string(n));
  if (n > kMaxParties)
    throw std::invalid_argument("subsystem count " + std::to_string(n) +
                                " exceeds the supported maximum of " +
                                std::to_string(kMaxParties));
}

std::vector<int> mask_members(unsigned mask, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i)) out.push_back(i);
  return out;
}

}  // namespace

std::vector<Cut> enumerate_cuts(int n) {
  check_n(n);
  const unsigned full = (1u << n) - 1u;
  std::vector<Cut> cuts;
  cuts.reserve((1u << (n - 1)) - 1u);
  // canonical: bit 0 always on side A, so masks are the odd ones below full
  for (unsigned mask = 1; mask < full; mask += 2)
    cuts.push_back(Cut{mask_members(mask, n), mask_members(full & ~mask, n), n});
  return cuts;
}

std::vector<std::vector<int>> enumerate_subsets(int n) {
  check_n(n);
  const unsigned full = (1u << n) - 1u;
  std::vector<std::vector<int>> subsets;
  subsets.reserve(full - 1u);
  for (unsigned mask = 1; mask < full; ++mask)
    subsets.push_back(mask_members(mask, n));
  return subsets;
}

}  // namespace qconc
