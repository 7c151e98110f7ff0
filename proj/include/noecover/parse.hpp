#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "noecover/chains.hpp"
#include "noecover/gmp.hpp"
#include "noecover/limits.hpp"
#include "noecover/system.hpp"

namespace noecover {

// Parsed form of a system description file. Line-oriented, `#` comments,
// whitespace-separated tokens:
//   system moore|preorder|implications|powerset-union
//   elements <label>+
//   closed <label>*
//   le <a> <b>
//   rule <label>+ -> <label>
//   powerset-union <n>
struct SystemSpec {
  enum class Kind { moore, preorder, implications, powerset_union };
  Kind kind = Kind::moore;
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> closed_sets;
  std::vector<std::pair<std::string, std::string>> le_pairs;
  struct RuleSpec {
    std::vector<std::string> premise;
    std::string conclusion;
  };
  std::vector<RuleSpec> rules;
  int inner = -1;
  std::string source_name;
};

SystemSpec parse_system(std::string_view text, std::string_view name);

struct BuildOptions {
  // Close a non-intersection-closed Moore family instead of rejecting it.
  bool complete_moore = false;
  // Accept the raw family unchecked so axiom_report can judge it.
  bool lax_moore = false;
};

ClosureSystem build_system(const SystemSpec& spec, const BuildOptions& options = {},
                           const Limits& limits = {});

// Comma-separated labels; "-" is the empty set.
SubsetMask parse_subset(const ClosureSystem& s, std::string_view text);
// Semicolon-separated subset literals, validated as a descending closed chain.
ClosedChain parse_chain(const ClosureSystem& s, std::string_view text);
// Blocks separated by "|", each "A=<labels> N=<set;set;...>" with
// "N=implicit" allowed.
GMPDecomposition parse_decomposition(const ClosureSystem& s, std::string_view text);

} // namespace noecover
