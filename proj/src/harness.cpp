#include "noecover/harness.hpp"

#include <algorithm>
#include <chrono>

#include "noecover/errors.hpp"
#include "noecover/gmp.hpp"
#include "noecover/independence.hpp"
#include "noecover/irreducible.hpp"
#include "noecover/order.hpp"

namespace noecover {

namespace {

class CheckTimer {
public:
  explicit CheckTimer(HarnessCheck& check)
      : check_(check), start_(std::chrono::steady_clock::now()) {}
  ~CheckTimer() {
    check_.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
  }

private:
  HarnessCheck& check_;
  std::chrono::steady_clock::time_point start_;
};

} // namespace

SubsetMask construct_dense_noetherian(const ClosureSystem& s, SubsetMask c, const Limits& limits) {
  if (!s.is_topological(limits))
    throw InputError("construct_dense_noetherian requires a topological closure");
  if (!s.is_closed(c)) throw InputError("construct_dense_noetherian requires a closed set");
  if (c.empty()) return c;
  QuasiOrder restricted = specialization(s).restrict(c);
  SubsetMask local = well_founded_cofinal(restricted);
  const std::vector<int> ids = c.elements();
  SubsetMask out = SubsetMask::empty_set(s.size());
  for (int e : local.elements()) out = out.with(ids[static_cast<std::size_t>(e)]);
  return out;
}

int longest_closed_chain(const ClosureSystem& s, const Limits& limits) {
  std::vector<SubsetMask> family = closed_family(s, limits);
  limits.charge(static_cast<std::uint64_t>(family.size()) * family.size(),
                "longest closed chain");
  std::vector<int> len(family.size(), 1);
  int best = family.empty() ? 0 : 1;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (family[j].proper_subset_of(family[i])) len[i] = std::max(len[i], len[j] + 1);
    best = std::max(best, len[i]);
  }
  return best;
}

HarnessReport verify_theorem_main(const ClosureSystem& s, const Limits& limits) {
  if (!s.is_topological(limits))
    throw InputError("verify_theorem_main requires a topological closure");
  HarnessReport rep;
  DecomposeContext ctx = make_decompose_context(s, limits);

  {
    HarnessCheck check{"decompose-min-all-closed", true, "", 0.0};
    CheckTimer timer(check);
    for (SubsetMask c : ctx.family) {
      Decomposition d = decompose_in(ctx, c, DecomposeStrategy::min, limits);
      SubsetMask u = SubsetMask::empty_set(s.size());
      bool parts_ok = true;
      for (SubsetMask part : d.parts) {
        u = u | part;
        if (!part.subset_of(c) || !is_irreducible_in(ctx, part).irreducible) parts_ok = false;
      }
      if (!parts_ok || u != c) {
        check.pass = false;
        check.witness = "closed set " + set_to_string(s, c);
        break;
      }
    }
    rep.checks.push_back(check);
  }

  {
    HarnessCheck check{"dense-noetherian-all-closed", true, "", 0.0};
    CheckTimer timer(check);
    for (SubsetMask c : ctx.family) {
      SubsetMask d = construct_dense_noetherian(s, c, limits);
      if (!d.subset_of(c) || !c.subset_of(s.closure(d))) {
        check.pass = false;
        check.witness = "closed set " + set_to_string(s, c) + " with subset " + set_to_string(s, d);
        break;
      }
    }
    rep.checks.push_back(check);
  }

  {
    HarnessCheck check{"discrete-bound", true, "", 0.0};
    CheckTimer timer(check);
    limits.charge_subsets(s.size(), "discrete-bound");
    bool done = false;
    for_each_mask(s.size(), [&](SubsetMask x) {
      if (done || !is_independent(s, x)) return;
      Decomposition d = decompose_in(ctx, s.closure(x), DecomposeStrategy::components, limits);
      if (x.count() > static_cast<int>(d.parts.size())) {
        check.pass = false;
        check.witness = "discrete set " + set_to_string(s, x) + " exceeds " +
                        std::to_string(d.parts.size()) + " components";
        done = true;
      }
    });
    rep.checks.push_back(check);
  }
  return rep;
}

HarnessReport verify_prop_topo(const ClosureSystem& s, const Limits& limits) {
  if (!s.is_topological(limits))
    throw InputError("verify_prop_topo requires a topological closure");
  HarnessReport rep;
  GMPDecomposition d = gmp_construct(s, limits);

  {
    HarnessCheck check{"gmp-verify", true, "", 0.0};
    CheckTimer timer(check);
    GMPVerifyResult v = gmp_verify(s, d, limits);
    if (!v.ok) {
      check.pass = false;
      check.witness = v.counterexample ? set_to_string(s, *v.counterexample) + ": " + v.detail
                                       : v.detail;
    }
    rep.checks.push_back(check);
  }

  {
    HarnessCheck check{"gmp-eq1-unnormalized", eq1_holds(s, d), "", 0.0};
    rep.checks.push_back(check);
  }

  {
    HarnessCheck check{"gmp-claim1", true, "", 0.0};
    CheckTimer timer(check);
    Claim1Report c1 = claim1_check(s, d, limits);
    if (!c1.ok()) {
      check.pass = false;
      for (const Claim1BlockReport& b : c1.blocks)
        if (!b.membership_ok || !b.irreducible)
          check.witness = "block " + set_to_string(s, b.block);
    }
    rep.checks.push_back(check);
  }

  {
    HarnessCheck check{"gmp-normalize-idempotent", true, "", 0.0};
    CheckTimer timer(check);
    GMPDecomposition once = gmp_normalize(s, d, limits);
    GMPDecomposition twice = gmp_normalize(s, once, limits);
    bool same = once.blocks.size() == twice.blocks.size();
    for (std::size_t i = 0; same && i < once.blocks.size(); ++i)
      same = once.blocks[i].elements == twice.blocks[i].elements;
    if (!same || !eq1_holds(s, once)) {
      check.pass = false;
      check.witness = "normalization is not stable";
    }
    rep.checks.push_back(check);
  }

  {
    HarnessCheck check{"gmp-roundtrip-irreducibles", true, "", 0.0};
    CheckTimer timer(check);
    DecomposeContext ctx = make_decompose_context(s, limits);
    SubsetMask u = SubsetMask::empty_set(s.size());
    for (const GMPBlock& b : d.blocks) {
      SubsetMask xi = s.closure(b.elements);
      u = u | xi;
      if (!is_irreducible_in(ctx, xi).irreducible) {
        check.pass = false;
        check.witness = "closure of block " + set_to_string(s, b.elements) + " is reducible";
      }
    }
    Decomposition min_cover = decompose_in(ctx, s.full(), DecomposeStrategy::min, limits);
    if (!u.is_full() || d.blocks.size() != min_cover.parts.size()) {
      check.pass = false;
      if (check.witness.empty()) check.witness = "recovered cover does not match the minimum";
    }
    rep.checks.push_back(check);
  }
  return rep;
}

} // namespace noecover
