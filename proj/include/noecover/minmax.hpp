#pragma once

#include <vector>

#include "noecover/limits.hpp"
#include "noecover/mask.hpp"
#include "noecover/order.hpp"

namespace noecover {

struct QURPartition {
  SubsetMask q; // elements whose final segment is up-directed
  SubsetMask u; // ↓Q
  SubsetMask r; // complement; empty on every finite poset
};

QURPartition qur_partition(const Poset& p);

struct MinMaxReport {
  int max_up_independent = 0;
  SubsetMask up_independent_witness;
  std::vector<SubsetMask> ideal_cover;      // minimum cover of P by ideals
  std::vector<SubsetMask> consistent_cover; // minimum cover of P by consistent sets
  bool equal = false;
};

// The three parameters computed by independent exact searches: maximum
// up-independent set (branch and bound on the incompatibility relation),
// minimum ideal cover and minimum consistent cover (exact set cover over
// principal ideals resp. maximal consistent sets).
MinMaxReport minmax_report(const Poset& p, const Limits& limits = {});

// Minimum list of ideals of the subposet A whose union is A; A must be an
// initial segment.
std::vector<SubsetMask> ideal_decompose_downset(const Poset& p, SubsetMask a,
                                                const Limits& limits = {});

} // namespace noecover
