#include "noecover/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "noecover/chains.hpp"
#include "noecover/errors.hpp"
#include "noecover/gmp.hpp"
#include "noecover/harness.hpp"
#include "noecover/independence.hpp"
#include "noecover/irreducible.hpp"
#include "noecover/minmax.hpp"
#include "noecover/order.hpp"
#include "noecover/parse.hpp"
#include "noecover/render.hpp"
#include "noecover/system.hpp"

namespace noecover {

namespace {

Json labels_json(const std::vector<std::string>& labels, SubsetMask m) {
  Json arr = Json::array();
  for (int e : m.elements()) arr.push_back(labels[static_cast<std::size_t>(e)]);
  return arr;
}

Json mask_json(const ClosureSystem& s, SubsetMask m) { return labels_json(s.labels(), m); }

Json masks_json(const ClosureSystem& s, const std::vector<SubsetMask>& ms) {
  Json arr = Json::array();
  for (SubsetMask m : ms) arr.push_back(mask_json(s, m));
  return arr;
}

ClosureSystem load_system(const std::string& path, const BuildOptions& options,
                          const Limits& limits) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open \"" + path + "\"");
  std::stringstream buf;
  buf << in.rdbuf();
  return build_system(parse_system(buf.str(), path), options, limits);
}

Json axiom_json(const ClosureSystem& s, const AxiomReport& rep) {
  Json j = Json::object();
  j["extensive"] = rep.extensive;
  if (rep.extensive_witness) j["extensive_witness"] = mask_json(s, *rep.extensive_witness);
  j["monotone"] = rep.monotone;
  if (rep.monotone_witness) {
    j["monotone_witness"] = Json::object();
    j["monotone_witness"]["smaller"] = mask_json(s, rep.monotone_witness->first);
    j["monotone_witness"]["larger"] = mask_json(s, rep.monotone_witness->second);
  }
  j["idempotent"] = rep.idempotent;
  if (rep.idempotent_witness) j["idempotent_witness"] = mask_json(s, *rep.idempotent_witness);
  j["intersection_closed"] = rep.intersection_closed;
  if (rep.intersection_witness) {
    Json w = Json::object();
    w["a"] = mask_json(s, rep.intersection_witness->a);
    w["b"] = mask_json(s, rep.intersection_witness->b);
    w["missing"] = mask_json(s, rep.intersection_witness->missing);
    j["intersection_witness"] = w;
  }
  j["topological"] = rep.topological;
  if (rep.topology_witness) {
    Json w = Json::object();
    if (rep.topology_witness->closure_of_empty)
      w["closure_of_empty"] = mask_json(s, *rep.topology_witness->closure_of_empty);
    if (rep.topology_witness->pair) {
      w["a"] = mask_json(s, rep.topology_witness->pair->first);
      w["b"] = mask_json(s, rep.topology_witness->pair->second);
    }
    j["topological_witness"] = w;
  }
  return j;
}

// Poset input for the order commands: the specialization order of the file's
// system, optionally collapsed through the quotient.
struct PosetInput {
  Poset poset;
  std::vector<std::string> labels;
  bool quotient_applied = false;
};

PosetInput poset_input(const ClosureSystem& s, bool apply_quotient) {
  QuasiOrder q = specialization(s);
  if (q.is_antisymmetric()) return {Poset(q), s.labels(), false};
  if (!apply_quotient)
    throw InputError(
        "specialization order is not antisymmetric; pass --quotient to collapse equivalent "
        "elements");
  Quotient quo = quotient(q);
  std::vector<std::string> labels;
  labels.reserve(quo.classes.size());
  for (SubsetMask cls : quo.classes) labels.push_back(s.label(cls.least_element()));
  return {quo.poset, std::move(labels), true};
}

struct HarnessOptions {
  bool timings = false;
};

void append_checks(Json& arr, const std::string& prefix, const HarnessReport& rep,
                   const HarnessOptions& opts) {
  for (const HarnessCheck& c : rep.checks) {
    Json j = Json::object();
    j["name"] = prefix.empty() ? c.name : prefix + "/" + c.name;
    j["pass"] = c.pass;
    if (!c.witness.empty()) j["witness"] = c.witness;
    if (opts.timings) j["elapsed_ms"] = c.elapsed_ms;
    arr.push_back(j);
  }
}

HarnessCheck timed_check(const std::string& name, const std::function<bool(std::string&)>& body) {
  HarnessCheck check;
  check.name = name;
  auto start = std::chrono::steady_clock::now();
  check.pass = body(check.witness);
  check.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return check;
}

// The per-file harness pipeline: representation axioms, decompositions, the
// chain/independent-set round trip, and the topological theorem checks.
Json harness_file(const std::string& path, const Limits& limits, const HarnessOptions& opts,
                  bool& all_pass) {
  ClosureSystem s = load_system(path, BuildOptions{false, true}, limits);
  Json entry = Json::object();
  entry["file"] = path;
  entry["representation"] = s.repr_name();
  AxiomReport axioms = axiom_report(s, limits);
  entry["topological"] = axioms.topological;
  Json checks = Json::array();
  HarnessReport local;

  local.checks.push_back(timed_check("axioms", [&](std::string& witness) {
    if (axioms.closure_axioms_hold() && axioms.intersection_closed) return true;
    if (!axioms.intersection_closed && axioms.intersection_witness)
      witness = "missing intersection " + set_to_string(s, axioms.intersection_witness->missing);
    else
      witness = "closure axioms violated";
    return false;
  }));

  local.checks.push_back(timed_check("decomposition", [&](std::string& witness) {
    DecomposeContext ctx = make_decompose_context(s, limits);
    for (SubsetMask c : ctx.family)
      for (DecomposeStrategy strategy : {DecomposeStrategy::min, DecomposeStrategy::noether}) {
        Decomposition d = decompose_in(ctx, c, strategy, limits);
        SubsetMask u = SubsetMask::empty_set(s.size());
        for (SubsetMask part : d.parts) {
          u = u | part;
          if (!is_irreducible_in(ctx, part).irreducible) {
            witness = "reducible part " + set_to_string(s, part);
            return false;
          }
        }
        if (u != c) {
          witness = "parts of " + set_to_string(s, c) + " do not cover it";
          return false;
        }
      }
    return true;
  }));

  local.checks.push_back(timed_check("lemma1-roundtrip", [&](std::string& witness) {
    limits.charge_subsets(s.size(), "lemma1-roundtrip");
    std::vector<SubsetMask> independents;
    for_each_mask(s.size(), [&](SubsetMask x) {
      if (is_independent(s, x)) independents.push_back(x);
    });
    for (SubsetMask x : independents) {
      if (x.count() < 2) continue;
      bool maximal = true;
      for (SubsetMask y : independents)
        if (x.proper_subset_of(y)) {
          maximal = false;
          break;
        }
      if (!maximal) continue;
      ChainConstruction cc = chain_from_independent(s, x, ChainAmbient::induced_on_x, limits);
      if (!is_separating(cc.system, cc.chain, SeparationMode::to_depth, limits).separating) {
        witness = "chain from " + set_to_string(s, x) + " is not separating to depth";
        return false;
      }
      SubsetMask back = independent_from_separating(cc.system, cc.chain, limits);
      if (back.count() != x.count()) {
        witness = "extraction from " + set_to_string(s, x) + " returned " +
                  std::to_string(back.count()) + " elements";
        return false;
      }
    }
    return true;
  }));

  if (axioms.topological) {
    HarnessReport main_rep = verify_theorem_main(s, limits);
    for (HarnessCheck& c : main_rep.checks) c.name = "theorem-main/" + c.name;
    local.checks.insert(local.checks.end(), main_rep.checks.begin(), main_rep.checks.end());
    HarnessReport topo_rep = verify_prop_topo(s, limits);
    for (HarnessCheck& c : topo_rep.checks) c.name = "prop-topo/" + c.name;
    local.checks.insert(local.checks.end(), topo_rep.checks.begin(), topo_rep.checks.end());

    local.checks.push_back(timed_check("independent-discrete", [&](std::string& witness) {
      limits.charge_subsets(s.size(), "independent-discrete");
      bool ok = true;
      for_each_mask(s.size(), [&](SubsetMask x) {
        if (!ok) return;
        IndependenceReport r = independence_check(s, x, limits);
        if (!r.discrete.has_value() || *r.discrete != r.independent) {
          ok = false;
          witness = "subset " + set_to_string(s, x);
        }
      });
      return ok;
    }));

    local.checks.push_back(timed_check("min-equals-components", [&](std::string& witness) {
      DecomposeContext ctx = make_decompose_context(s, limits);
      for (SubsetMask c : ctx.family) {
        Decomposition mn = decompose_in(ctx, c, DecomposeStrategy::min, limits);
        Decomposition cp = decompose_in(ctx, c, DecomposeStrategy::components, limits);
        if (mn.parts != cp.parts) {
          witness = "closed set " + set_to_string(s, c);
          return false;
        }
      }
      return true;
    }));
  }

  append_checks(checks, "", local, opts);
  entry["checks"] = checks;
  bool pass = local.all_pass();
  entry["result"] = pass ? "pass" : "fail";
  if (!pass) all_pass = false;
  return entry;
}

} // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CliResult result;
  Limits limits;

  std::string format = "text";
  bool complete_moore = false;

  CLI::App app{"exact toolkit for finite closure systems and finite topologies", "noecover"};
  app.require_subcommand(1);
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--complete-moore", complete_moore,
               "close a non-intersection-closed Moore family instead of rejecting it");

  struct {
    std::string file, subset, chain, strategy = "min", mode = "full", decomposition;
    std::vector<std::string> files;
    bool embedding = false, normalize = false, quotient = false, timings = false;
  } opt;

  CLI::App* cmd_check = app.add_subcommand("check", "closure-axiom and representation report");
  cmd_check->add_option("file", opt.file)->required();

  CLI::App* cmd_closure = app.add_subcommand("closure", "evaluate the closure of a subset");
  cmd_closure->add_option("file", opt.file)->required();
  cmd_closure->add_option("subset", opt.subset)->required();

  CLI::App* cmd_closed = app.add_subcommand("closed", "list all closed sets");
  cmd_closed->add_option("file", opt.file)->required();

  CLI::App* cmd_decompose =
      app.add_subcommand("decompose", "split a closed set into irreducible closed subsets");
  cmd_decompose->add_option("file", opt.file)->required();
  cmd_decompose->add_option("subset", opt.subset)->required();
  cmd_decompose->add_option("--strategy", opt.strategy)
      ->check(CLI::IsMember({"min", "components", "noether"}));

  CLI::App* cmd_independent =
      app.add_subcommand("independent", "independence/generating report or extremal sets");
  cmd_independent->add_option("file", opt.file)->required();
  cmd_independent->add_option("subset", opt.subset);
  cmd_independent->add_flag("--embedding", opt.embedding,
                            "map the subsets of an independent set into the closed-set lattice");

  CLI::App* cmd_dense =
      app.add_subcommand("dense", "dense subset with noetherian induced topology");
  cmd_dense->add_option("file", opt.file)->required();
  cmd_dense->add_option("subset", opt.subset);

  CLI::App* cmd_separating = app.add_subcommand("separating", "separating-chain verdict");
  cmd_separating->add_option("file", opt.file)->required();
  cmd_separating->add_option("chain", opt.chain)->required();
  cmd_separating->add_option("--mode", opt.mode)->check(CLI::IsMember({"full", "to-depth"}));

  CLI::App* cmd_witness =
      app.add_subcommand("witness", "non-separating witness (index, finite set)");
  cmd_witness->add_option("file", opt.file)->required();
  cmd_witness->add_option("chain", opt.chain)->required();

  CLI::App* cmd_gmp = app.add_subcommand("gmp", "generating-set decomposition into blocks");
  cmd_gmp->add_option("file", opt.file)->required();
  cmd_gmp->add_option("--decomposition", opt.decomposition,
                      "verify this decomposition literal instead of constructing one");
  cmd_gmp->add_flag("--normalize", opt.normalize, "shrink blocks to satisfy the disjointness equation");

  CLI::App* cmd_minmax = app.add_subcommand("minmax", "up-independence/ideal-cover min-max report");
  cmd_minmax->add_option("file", opt.file)->required();
  cmd_minmax->add_flag("--quotient", opt.quotient, "collapse mutual pairs first");

  CLI::App* cmd_correspond =
      app.add_subcommand("correspond", "order/topology dictionary check over all subsets");
  cmd_correspond->add_option("file", opt.file)->required();
  cmd_correspond->add_flag("--quotient", opt.quotient, "collapse mutual pairs first");

  CLI::App* cmd_harness = app.add_subcommand("harness", "run every applicable check over files");
  cmd_harness->add_option("files", opt.files)->required();
  cmd_harness->add_flag("--timings", opt.timings, "include elapsed milliseconds per check");

  for (CLI::App* sub : app.get_subcommands({})) (void)sub;
  for (CLI::App* sub :
       {cmd_check, cmd_closure, cmd_closed, cmd_decompose, cmd_independent, cmd_dense,
        cmd_separating, cmd_witness, cmd_gmp, cmd_minmax, cmd_correspond, cmd_harness})
    sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    result.out = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.err = std::string("error: ") + e.what() + "\n" + app.help();
    result.exit_code = 2;
    return result;
  }

  Json out = Json::object();
  try {
    limits = Limits::from_env();
    const BuildOptions strict{complete_moore, false};

    if (app.got_subcommand(cmd_check)) {
      ClosureSystem s = load_system(opt.file, BuildOptions{complete_moore, true}, limits);
      out["command"] = "check";
      out["input"] = opt.file;
      out["representation"] = s.repr_name();
      out["ground"] = labels_json(s.labels(), s.full());
      AxiomReport rep = axiom_report(s, limits);
      Json axioms = axiom_json(s, rep);
      for (auto& [k, v] : axioms.items()) out[k] = v;
      bool ok = rep.closure_axioms_hold() && rep.intersection_closed;
      out["result"] = ok ? "ok" : "violated";
      result.exit_code = ok ? 0 : 1;
    } else if (app.got_subcommand(cmd_closure)) {
      ClosureSystem s = load_system(opt.file, strict, limits);
      SubsetMask x = parse_subset(s, opt.subset);
      out["command"] = "closure";
      out["input"] = opt.file;
      out["subset"] = mask_json(s, x);
      out["closure"] = mask_json(s, s.closure(x));
    } else if (app.got_subcommand(cmd_closed)) {
      ClosureSystem s = load_system(opt.file, strict, limits);
      std::vector<SubsetMask> family = closed_family(s, limits);
      out["command"] = "closed";
      out["input"] = opt.file;
      out["count"] = family.size();
      out["closed_sets"] = masks_json(s, family);
    } else if (app.got_subcommand(cmd_decompose)) {
      ClosureSystem s = load_system(opt.file, strict, limits);
      SubsetMask c = parse_subset(s, opt.subset);
      Decomposition d = decompose(s, c, *decompose_strategy_from_name(opt.strategy), limits);
      out["command"] = "decompose";
      out["input"] = opt.file;
      out["strategy"] = opt.strategy;
      out["target"] = mask_json(s, c);
      out["parts"] = masks_json(s, d.parts);
      out["part_count"] = d.parts.size();
      out["min_size"] = d.min_size;
      out["components_size"] = d.components_size;
    } else if (app.got_subcommand(cmd_independent)) {
      ClosureSystem s = load_system(opt.file, strict, limits);
      out["command"] = "independent";
      out["input"] = opt.file;
      if (cmd_independent->count("subset") == 0) {
        if (opt.embedding) throw InputError("--embedding needs an explicit subset");
        ExtremalSet mx = max_independent(s, limits);
        ExtremalSet mn = min_generating(s, limits);
        out["mode"] = "extremal";
        out["max_independent"] = mask_json(s, mx.set);
        out["max_independent_size"] = mx.size;
        out["min_generating"] = mask_json(s, mn.set);
        out["min_generating_size"] = mn.size;
      } else {
        SubsetMask x = parse_subset(s, opt.subset);
        IndependenceReport rep = independence_check(s, x, limits);
        out["subset"] = mask_json(s, x);
        out["independent"] = rep.independent;
        if (rep.violating_element) out["violating_element"] = s.label(*rep.violating_element);
        out["generating"] = rep.generating;
        if (rep.discrete) out["discrete"] = *rep.discrete;
        if (rep.non_closed_witness)
          out["non_closed_witness"] = mask_json(s, *rep.non_closed_witness);
        if (opt.embedding) {
          BooleanEmbedding emb = boolean_embedding(s, x, limits);
          Json pairs = Json::array();
          for (const auto& [sub, image] : emb.images) {
            Json p = Json::object();
            p["subset"] = mask_json(s, sub);
            p["image"] = mask_json(s, image);
            pairs.push_back(p);
          }
          out["embedding"] = pairs;
          out["embedding_verified"] = emb.verified;
        }
      }
    } else if (app.got_subcommand(cmd_dense)) {
      ClosureSystem s = load_system(opt.file, strict, limits);
      SubsetMask c = cmd_dense->count("subset") ? parse_subset(s, opt.subset) : s.full();
      SubsetMask d = construct_dense_noetherian(s, c, limits);
      out["command"] = "dense";
      out["input"] = opt.file;
      out["closed_set"] = mask_json(s, c);
      out["dense_subset"] = mask_json(s, d);
      out["induced_longest_closed_chain"] = longest_closed_chain(induce(s, d), limits);
    } else if (app.got_subcommand(cmd_separating)) {
      ClosureSystem s = load_system(opt.file, strict, limits);
      ClosedChain chain = parse_chain(s, opt.chain);
      SeparatingVerdict v = is_separating(s, chain, *separation_mode_from_name(opt.mode), limits);
      out["command"] = "separating";
      out["input"] = opt.file;
      out["chain"] = masks_json(s, chain.sets);
      out["mode"] = opt.mode;
      out["separating"] = v.separating;
      if (v.failure) {
        out["failure_index"] = v.failure->first;
        out["failure_set"] = mask_json(s, v.failure->second);
      }
    } else if (app.got_subcommand(cmd_witness)) {
      ClosureSystem s = load_system(opt.file, strict, limits);
      ClosedChain chain = parse_chain(s, opt.chain);
      auto w = nonseparating_witness(s, chain, limits);
      out["command"] = "witness";
      out["input"] = opt.file;
      out["chain"] = masks_json(s, chain.sets);
      out["found"] = w.has_value();
      if (w) {
        out["index"] = w->first;
        out["finite_set"] = mask_json(s, w->second);
      }
    } else if (app.got_subcommand(cmd_gmp)) {
      ClosureSystem s = load_system(opt.file, strict, limits);
      out["command"] = "gmp";
      out["input"] = opt.file;
      GMPDecomposition d;
      if (cmd_gmp->count("--decomposition")) {
        d = parse_decomposition(s, opt.decomposition);
        out["source"] = "literal";
      } else {
        d = gmp_construct(s, limits);
        out["source"] = "constructed";
      }
      auto blocks_json = [&](const GMPDecomposition& dec) {
        Json arr = Json::array();
        for (const GMPBlock& b : dec.blocks) {
          Json bj = Json::object();
          bj["elements"] = mask_json(s, b.elements);
          if (b.ideal.kind == IdealDescriptor::Kind::explicit_sets) {
            bj["ideal_kind"] = "explicit";
            bj["ideal"] = masks_json(s, b.ideal.sets);
          } else {
            bj["ideal_kind"] = "implicit";
            bj["ideal_target"] = mask_json(s, b.ideal.target);
          }
          arr.push_back(bj);
        }
        return arr;
      };
      out["blocks"] = blocks_json(d);
      GMPVerifyResult v = gmp_verify(s, d, limits);
      out["star_condition"] = v.ok;
      if (!v.ok) {
        if (v.counterexample) out["counterexample"] = mask_json(s, *v.counterexample);
        out["detail"] = v.detail;
        out["result"] = "violated";
        result.exit_code = 1;
      } else {
        GMPDecomposition checked = d;
        if (opt.normalize) {
          checked = gmp_normalize(s, d, limits);
          out["normalized_blocks"] = blocks_json(checked);
        }
        out["eq1"] = eq1_holds(s, checked);
        bool ok = true;
        if (eq1_holds(s, checked)) {
          Claim1Report c1 = claim1_check(s, checked, limits);
          out["claim1"] = c1.ok();
          Json arr = Json::array();
          for (const Claim1BlockReport& b : c1.blocks) {
            Json bj = Json::object();
            bj["block"] = mask_json(s, b.block);
            bj["membership_ok"] = b.membership_ok;
            if (b.membership_mismatch)
              bj["membership_mismatch"] = mask_json(s, *b.membership_mismatch);
            bj["closure"] = mask_json(s, b.closure_of_block);
            bj["irreducible"] = b.irreducible;
            arr.push_back(bj);
          }
          out["claim1_blocks"] = arr;
          ok = c1.ok();
        } else {
          out["claim1"] = "skipped (pass --normalize first)";
        }
        out["result"] = ok ? "ok" : "violated";
        result.exit_code = ok ? 0 : 1;
      }
    } else if (app.got_subcommand(cmd_minmax)) {
      ClosureSystem s = load_system(opt.file, strict, limits);
      PosetInput input = poset_input(s, opt.quotient);
      MinMaxReport rep = minmax_report(input.poset, limits);
      QURPartition part = qur_partition(input.poset);
      out["command"] = "minmax";
      out["input"] = opt.file;
      if (input.quotient_applied) out["quotient_applied"] = true;
      out["max_up_independent"] = rep.max_up_independent;
      out["up_independent_witness"] = labels_json(input.labels, rep.up_independent_witness);
      out["min_ideal_cover"] = rep.ideal_cover.size();
      Json ideals = Json::array();
      for (SubsetMask m : rep.ideal_cover) ideals.push_back(labels_json(input.labels, m));
      out["ideal_cover"] = ideals;
      out["min_consistent_cover"] = rep.consistent_cover.size();
      Json cons = Json::array();
      for (SubsetMask m : rep.consistent_cover) cons.push_back(labels_json(input.labels, m));
      out["consistent_cover"] = cons;
      out["equal"] = rep.equal;
      out["qur_q"] = labels_json(input.labels, part.q);
      out["qur_u"] = labels_json(input.labels, part.u);
      out["qur_r"] = labels_json(input.labels, part.r);
      out["result"] = rep.equal ? "ok" : "violated";
      result.exit_code = rep.equal ? 0 : 1;
    } else if (app.got_subcommand(cmd_correspond)) {
      ClosureSystem s = load_system(opt.file, strict, limits);
      PosetInput input = poset_input(s, opt.quotient);
      CorrespondenceReport rep = correspondence_check(input.poset, limits);
      out["command"] = "correspond";
      out["input"] = opt.file;
      if (input.quotient_applied) out["quotient_applied"] = true;
      out["subsets_checked"] = rep.subsets_checked;
      Json viols = Json::array();
      for (const CorrespondenceViolation& v : rep.violations) {
        Json vj = Json::object();
        vj["subset"] = labels_json(input.labels, v.subset);
        vj["equivalence"] = v.equivalence;
        vj["order_side"] = v.order_side;
        vj["topology_side"] = v.topology_side;
        viols.push_back(vj);
      }
      out["violations"] = viols;
      out["result"] = rep.ok() ? "ok" : "violated";
      result.exit_code = rep.ok() ? 0 : 1;
    } else if (app.got_subcommand(cmd_harness)) {
      out["command"] = "harness";
      bool all_pass = true;
      Json files = Json::array();
      for (const std::string& path : opt.files)
        files.push_back(harness_file(path, limits, HarnessOptions{opt.timings}, all_pass));
      out["files"] = files;
      out["result"] = all_pass ? "pass" : "fail";
      result.exit_code = all_pass ? 0 : 1;
    }
  } catch (const InputError& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = 2;
    return result;
  }

  result.out = format == "json" ? render_json(out) : render_text(out);
  return result;
}

} // namespace noecover
