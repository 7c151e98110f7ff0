#pragma once

#include <string>
#include <vector>

#include "noecover/limits.hpp"
#include "noecover/mask.hpp"
#include "noecover/system.hpp"

namespace noecover {

struct HarnessCheck {
  std::string name;
  bool pass = false;
  std::string witness; // machine-checkable description of the first failure
  double elapsed_ms = 0.0;
};

struct HarnessReport {
  std::vector<HarnessCheck> checks;
  bool all_pass() const {
    for (const HarnessCheck& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Dense subset of the closed set C on which the induced topology is
// noetherian: the canonical well-founded cofinal set of the specialization
// order restricted to C.
SubsetMask construct_dense_noetherian(const ClosureSystem& s, SubsetMask c,
                                      const Limits& limits = {});

// Members of the longest strictly descending chain of closed sets.
int longest_closed_chain(const ClosureSystem& s, const Limits& limits = {});

// For every closed set: a re-validated minimum irreducible decomposition and
// a dense noetherian subset; plus the bound |X| ≤ #components(φ(X)) for every
// discrete X.
HarnessReport verify_theorem_main(const ClosureSystem& s, const Limits& limits = {});

// Round trip through the generating-set decomposition: construct, verify (*),
// check the ideal characterization, and recover a minimum irreducible cover
// from the blocks.
HarnessReport verify_prop_topo(const ClosureSystem& s, const Limits& limits = {});

} // namespace noecover
