#include "noecover/gmp.hpp"

#include <algorithm>

#include "noecover/errors.hpp"
#include "noecover/irreducible.hpp"

namespace noecover {

bool in_ideal(const ClosureSystem& s, const GMPBlock& block, SubsetMask y) {
  if (!y.subset_of(block.elements)) return false;
  if (block.ideal.kind == IdealDescriptor::Kind::explicit_sets)
    return std::binary_search(block.ideal.sets.begin(), block.ideal.sets.end(), y);
  return !block.ideal.target.subset_of(s.closure(y));
}

GMPDecomposition gmp_construct(const ClosureSystem& s, const Limits& limits) {
  if (!s.is_topological(limits)) throw InputError("gmp_construct requires a topological closure");
  const int n = s.size();
  Decomposition cover = decompose(s, s.full(), DecomposeStrategy::min, limits);
  GMPDecomposition d;
  for (std::size_t i = 0; i < cover.parts.size(); ++i) {
    SubsetMask xi = cover.parts[i];
    SubsetMask others = SubsetMask::empty_set(n);
    for (std::size_t j = 0; j < cover.parts.size(); ++j)
      if (j != i) others = others | cover.parts[j];
    GMPBlock block;
    block.elements = xi - others;
    block.ideal.kind = IdealDescriptor::Kind::implicit;
    // φ(A') ≠ X_i and φ(A') ⊉ X_i agree here, since A' ⊆ A_i forces φ(A') ⊆ X_i.
    block.ideal.target = xi;
    if (block.elements.count() <= limits.explicit_ideal_limit) {
      std::vector<SubsetMask> sets;
      for_each_submask(block.elements, [&](SubsetMask y) {
        if (s.closure(y) != xi) sets.push_back(y);
      });
      block.ideal.kind = IdealDescriptor::Kind::explicit_sets;
      block.ideal.sets = std::move(sets);
    }
    d.blocks.push_back(std::move(block));
  }
  return d;
}

namespace {

// Nonempty, downward closed, union closed, proper — within P(A_i).
std::optional<std::string> ideal_defect(const ClosureSystem& s, const GMPBlock& block,
                                        const Limits& limits) {
  limits.charge_subsets(block.elements.count(), "ideal validation");
  std::vector<SubsetMask> members;
  for_each_submask(block.elements, [&](SubsetMask y) {
    if (in_ideal(s, block, y)) members.push_back(y);
  });
  if (block.ideal.kind == IdealDescriptor::Kind::explicit_sets)
    for (SubsetMask y : block.ideal.sets)
      if (!y.subset_of(block.elements))
        return "ideal member " + set_to_string(s, y) + " is not a subset of its block";
  if (members.empty()) return std::string("ideal is empty");
  for (SubsetMask y : members)
    for (int e : y.elements())
      if (!in_ideal(s, block, y.without(e)))
        return "ideal is not downward closed at " + set_to_string(s, y);
  limits.charge(static_cast<std::uint64_t>(members.size()) * members.size(),
                "ideal union-closure");
  for (SubsetMask a : members)
    for (SubsetMask b : members)
      if (!in_ideal(s, block, a | b))
        return "ideal is not closed under the union " + set_to_string(s, a | b);
  if (in_ideal(s, block, block.elements)) return std::string("ideal is not proper");
  return std::nullopt;
}

} // namespace

GMPVerifyResult gmp_verify(const ClosureSystem& s, const GMPDecomposition& d,
                           const Limits& limits) {
  GMPVerifyResult r;
  if (d.blocks.empty()) {
    r.detail = "decomposition has no blocks";
    return r;
  }
  const int n = s.size();
  SubsetMask seen = SubsetMask::empty_set(n);
  for (const GMPBlock& b : d.blocks) {
    if (!(seen & b.elements).empty()) {
      r.detail = "blocks are not pairwise disjoint";
      return r;
    }
    seen = seen | b.elements;
  }
  const SubsetMask support = d.support(n);
  limits.charge_subsets(support.count(), "gmp_verify");
  bool ok = true;
  for_each_submask(support, [&](SubsetMask x) {
    if (!ok) return;
    bool generates = s.closure(x).is_full();
    bool clear = true;
    for (const GMPBlock& b : d.blocks)
      if (in_ideal(s, b, b.elements & x)) {
        clear = false;
        break;
      }
    if (generates != clear) {
      ok = false;
      r.counterexample = x;
      r.detail = generates ? "generates although some trace lies in its ideal"
                           : "all traces avoid the ideals although it does not generate";
    }
  });
  if (!ok) return r;

  for (const GMPBlock& b : d.blocks)
    if (auto defect = ideal_defect(s, b, limits)) {
      r.detail = "block " + set_to_string(s, b.elements) + ": " + *defect;
      return r;
    }
  r.ok = true;
  return r;
}

bool eq1_holds(const ClosureSystem& s, const GMPDecomposition& d) {
  const int n = s.size();
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    SubsetMask others = SubsetMask::empty_set(n);
    for (std::size_t j = 0; j < d.blocks.size(); ++j)
      if (j != i) others = others | d.blocks[j].elements;
    if (!(d.blocks[i].elements & s.closure(others)).empty()) return false;
  }
  return true;
}

GMPDecomposition gmp_normalize(const ClosureSystem& s, const GMPDecomposition& d,
                               const Limits& limits) {
  GMPVerifyResult pre = gmp_verify(s, d, limits);
  if (!pre.ok) throw InputError("gmp_normalize requires a decomposition satisfying (*): " + pre.detail);
  const int n = s.size();
  GMPDecomposition out;
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    SubsetMask others = SubsetMask::empty_set(n);
    for (std::size_t j = 0; j < d.blocks.size(); ++j)
      if (j != i) others = others | d.blocks[j].elements;
    GMPBlock block = d.blocks[i];
    block.elements = block.elements - s.closure(others);
    if (block.ideal.kind == IdealDescriptor::Kind::explicit_sets) {
      std::vector<SubsetMask> kept;
      for (SubsetMask y : block.ideal.sets)
        if (y.subset_of(block.elements)) kept.push_back(y);
      block.ideal.sets = std::move(kept);
    }
    // The implicit form keeps its target: N'_i is N_i restricted to the new
    // block, not the predicate re-read against it.
    if (block.elements.empty())
      throw std::logic_error("normalization emptied a block of a (*)-decomposition");
    out.blocks.push_back(std::move(block));
  }
  GMPVerifyResult post = gmp_verify(s, out, limits);
  if (!post.ok) throw std::logic_error("normalization broke (*): " + post.detail);
  return out;
}

Claim1Report claim1_check(const ClosureSystem& s, const GMPDecomposition& d,
                          const Limits& limits) {
  GMPVerifyResult pre = gmp_verify(s, d, limits);
  if (!pre.ok) throw InputError("claim1_check requires a decomposition satisfying (*): " + pre.detail);
  if (!eq1_holds(s, d))
    throw InputError("claim1_check requires the block-disjointness equation; run gmp_normalize first");
  DecomposeContext ctx = make_decompose_context(s, limits);
  Claim1Report rep;
  for (const GMPBlock& b : d.blocks) {
    Claim1BlockReport br;
    br.block = b.elements;
    br.membership_ok = true;
    limits.charge_subsets(b.elements.count(), "claim1 membership");
    for_each_submask(b.elements, [&](SubsetMask y) {
      if (!br.membership_ok) return;
      bool lhs = in_ideal(s, b, y);
      bool rhs = !b.elements.subset_of(s.closure(y));
      if (lhs != rhs) {
        br.membership_ok = false;
        br.membership_mismatch = y;
      }
    });
    br.closure_of_block = s.closure(b.elements);
    br.irreducible = is_irreducible_in(ctx, br.closure_of_block).irreducible;
    rep.blocks.push_back(std::move(br));
  }
  return rep;
}

} // namespace noecover
