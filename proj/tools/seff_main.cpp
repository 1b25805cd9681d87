// Command-line front end: batch verdicts over the JSON model format.
// Exit codes: 0 verdict true / success, 1 verdict false (witness on stdout),
// 2 input or format error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "seff/compose.hpp"
#include "seff/json_io.hpp"

namespace {

using namespace seff;

std::vector<std::string> split_names(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string current;
  for (const char c : text) {
    if (c == sep) {
      if (!current.empty()) out.push_back(current);
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current.push_back(c);
    }
  }
  if (!current.empty()) out.push_back(current);
  return out;
}

Partition parse_partition(const SpacePtr& space, const std::string& text) {
  std::vector<std::vector<std::string>> blocks;
  for (const auto& block : split_names(text, '|')) blocks.push_back(split_names(block, ','));
  return Partition(space, blocks);
}

EffectivityDoc load_effectivity(const std::string& path) {
  auto doc = load_model(path);
  if (auto* eff = std::get_if<EffectivityDoc>(&doc)) return std::move(*eff);
  throw Error(path + ": expected an effectivity model");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) std::cout << text;
  else write_file(out_path, text);
}

std::string describe(const ModelDoc& doc) {
  return std::visit(
      [](const auto& value) -> std::string {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, SpacePtr>)
          return "space with " + std::to_string(value->size()) + " states";
        else if constexpr (std::is_same_v<T, Kernel>)
          return "kernel " + std::to_string(value.dom()->size()) + " -> " +
                 std::to_string(value.cod()->size());
        else if constexpr (std::is_same_v<T, EffectivityDoc>)
          return "effectivity function " + std::to_string(value.eff.dom()->size()) +
                 " -> " + std::to_string(value.eff.cod()->size());
        else if constexpr (std::is_same_v<T, NeighborhoodModel>)
          return "neighborhood model with " + std::to_string(value.primitives().size()) +
                 " primitives";
        else if constexpr (std::is_same_v<T, CharRel>)
          return "characteristic relation over " + std::to_string(value.space()->size()) +
                 " states";
        else if constexpr (std::is_same_v<T, CongruenceDoc>)
          return "congruence with " +
                 std::to_string(value.congruence.alpha.blocks().size()) + "+" +
                 std::to_string(value.congruence.beta.blocks().size()) + " blocks";
        else if constexpr (std::is_same_v<T, TransitionSystemDoc>)
          return "transition system with " + std::to_string(value.edges.size()) + " edges";
        else
          return "nlmp over " + std::to_string(value.dom->size()) + " states";
      },
      doc);
}

void print_profiles(const EffFn& eff) {
  for (const auto& event : all_subsets(eff.cod())) {
    for (const Rel rel : {Rel::Greater, Rel::Geq}) {
      const Profile prof = profile(eff, event, rel);
      std::cout << "profile event=" << event.to_string() << " rel=" << rel_symbol(rel);
      for (std::size_t s = 0; s < eff.dom()->size(); ++s) {
        const auto& e = prof.entries[s];
        std::cout << ' ' << eff.dom()->name(s) << '=';
        if (e.empty) std::cout << "empty";
        else std::cout << to_string(e.critical);
      }
      std::cout << '\n';
    }
  }
}

int cmd_check(const std::string& path, bool profiles) {
  const ModelDoc doc = load_model(path);
  std::cout << "ok: " << describe(doc) << '\n';
  if (profiles) {
    if (const auto* eff = std::get_if<EffectivityDoc>(&doc)) print_profiles(eff->eff);
    else if (const auto* k = std::get_if<Kernel>(&doc)) print_profiles(lift_kernel(*k));
    else throw Error("--profiles needs an effectivity or kernel model");
  }
  return 0;
}

int cmd_modelcheck(const std::string& path, const std::string& formula_text) {
  const EffectivityDoc doc = load_effectivity(path);
  const FormulaPtr formula = parse_formula(formula_text);
  const StochModel model(doc.eff, doc.valuation);
  std::cout << eval_formula(model, formula).to_string() << '\n';
  return 0;
}

int cmd_gameeval(const std::string& path, const std::string& game_text,
                 const std::string& target_text) {
  auto doc = load_model(path);
  const auto* model = std::get_if<NeighborhoodModel>(&doc);
  if (!model) throw Error(path + ": expected a nbhd-model");
  const GameTermPtr game = parse_game(game_text);
  const Subset target(model->space(), split_names(target_text, ','));
  std::cout << eval_game(*model, game, target).to_string() << '\n';
  return 0;
}

int cmd_compose(const std::string& p_path, const std::string& q_path,
                const std::string& event_text, const std::string& bound_text,
                bool verify_kleisli) {
  const EffectivityDoc p = load_effectivity(p_path);
  const EffectivityDoc q = load_effectivity(q_path);
  const Subset event(q.eff.cod(), split_names(event_text, ','));
  const Rational bound = parse_rational(bound_text);
  if (!in_unit_interval(bound)) throw Error("--q must lie in [0,1]");
  std::cout << convolve(p.eff, q.eff, event, bound).to_string() << '\n';
  if (!verify_kleisli) return 0;

  const auto kp = detect_pointed(p.eff);
  const auto kq = detect_pointed(q.eff);
  if (!kp || !kq)
    throw Error("--verify-kleisli needs pointed inputs (principal ultrafilters)");
  const bool ok = check_conv_ok(*kp, *kq);
  std::cout << "kleisli-compatible: " << (ok ? "yes" : "no") << '\n';
  return ok ? 0 : 1;
}

int cmd_quotient(const std::string& path, const std::string& alpha_text,
                 const std::string& beta_text, const std::string& out_path) {
  const EffectivityDoc doc = load_effectivity(path);
  const Congruence c{parse_partition(doc.eff.dom(), alpha_text),
                     parse_partition(doc.eff.cod(), beta_text)};
  if (const auto witness = congruence_violation(doc.eff, c)) {
    std::cout << "not a congruence: states " << witness->first << " and "
              << witness->second << " push to different portfolios\n";
    return 1;
  }
  emit(save_effectivity({quotient(doc.eff, c), {}}), out_path);
  return 0;
}

void print_witness(const LogicalWitness& w) {
  std::cout << "alpha_P: " << w.cp.alpha.to_string() << '\n';
  std::cout << "beta_P: " << w.cp.beta.to_string() << '\n';
  std::cout << "alpha_Q: " << w.cq.alpha.to_string() << '\n';
  std::cout << "beta_Q: " << w.cq.beta.to_string() << '\n';
  const auto print_map = [](const char* label, const MeasMap& m) {
    std::cout << label;
    for (std::size_t i = 0; i < m.dom()->size(); ++i)
      std::cout << ' ' << m.dom()->name(i) << "->" << m.cod()->name(m.apply(i));
    std::cout << '\n';
  };
  print_map("iso state blocks:", w.iso.f);
  print_map("iso outcome blocks:", w.iso.g);
}

int cmd_equiv(const std::string& mode, const std::string& p_path,
              const std::string& q_path, std::uint64_t max_search) {
  if (mode != "logical" && mode != "behavioral")
    throw Error("equiv mode must be 'logical' or 'behavioral'");
  const EffectivityDoc p = load_effectivity(p_path);
  const EffectivityDoc q = load_effectivity(q_path);
  const char* noun = mode == "logical" ? "logically equivalent" : "behaviorally equivalent";

  const SearchResult result = logically_equivalent(p.eff, q.eff, max_search);
  if (result.status == SearchStatus::BoundExceeded) {
    std::cout << noun << ": unknown (search bound exceeded)\n";
    return 1;
  }
  if (result.status == SearchStatus::NoWitness) {
    std::cout << noun << ": no (search exhausted)\n";
    return 1;
  }
  std::cout << noun << ": yes\n";
  print_witness(*result.witness);
  if (mode == "behavioral") {
    // The witness converts into a co-span through the common quotient.
    const Cospan cospan = cospan_from_logical(p.eff, q.eff, result.witness->cp,
                                              result.witness->cq, result.witness->iso);
    std::cout << "mediator states:";
    for (const auto& name : cospan.mediator.dom()->states()) std::cout << ' ' << name;
    std::cout << '\n';
    const auto print_leg = [](const char* label, const EffMorphism& leg) {
      std::cout << label;
      for (std::size_t i = 0; i < leg.f.dom()->size(); ++i)
        std::cout << ' ' << leg.f.dom()->name(i) << "->" << leg.f.cod()->name(leg.f.apply(i));
      std::cout << '\n';
    };
    print_leg("leg from P:", cospan.from_p);
    print_leg("leg from Q:", cospan.from_q);
  }
  return 0;
}

int cmd_charrel_check(const std::string& path) {
  auto doc = load_model(path);
  const auto* r = std::get_if<CharRel>(&doc);
  if (!r) throw Error(path + ": expected a charrel model");
  const auto violations = check_rules(*r);
  if (violations.empty()) {
    std::cout << "ok: all rules hold\n";
    return 0;
  }
  for (const auto& v : violations)
    std::cout << "violation [" << v.rule << "] " << v.witness << '\n';
  return 1;
}

int cmd_charrel_extract(const std::string& path) {
  auto doc = load_model(path);
  const auto* r = std::get_if<CharRel>(&doc);
  if (!r) throw Error(path + ": expected a charrel model");
  const auto result = extract_measure(*r);
  if (result.valid) {
    std::cout << "measure:";
    const auto& mu = *result.measure;
    for (std::size_t i = 0; i < mu.space()->size(); ++i)
      std::cout << ' ' << mu.space()->name(i) << '=' << to_string(mu.weight(i));
    std::cout << "\nvalid: yes\n";
    return 0;
  }
  std::cout << "valid: no (" << result.detail << ")\n";
  return 1;
}

int cmd_lift(const std::string& mode, const std::string& path, const std::string& out_path) {
  auto doc = load_model(path);
  std::optional<EffFn> lifted;
  if (mode == "kernel") {
    const auto* k = std::get_if<Kernel>(&doc);
    if (!k) throw Error(path + ": expected a kernel model");
    lifted = lift_kernel(*k);
  } else if (mode == "ts") {
    const auto* ts = std::get_if<TransitionSystemDoc>(&doc);
    if (!ts) throw Error(path + ": expected a transition-system model");
    lifted = lift_transition_system(ts->space, ts->edges);
  } else if (mode == "nlmp") {
    const auto* nl = std::get_if<NlmpDoc>(&doc);
    if (!nl) throw Error(path + ": expected an nlmp model");
    lifted = lift_nlmp(nl->dom, nl->kappa);
  } else {
    throw Error("lift mode must be 'kernel', 'ts', or 'nlmp'");
  }
  emit(save_effectivity({*lifted, {}}), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite stochastic effectivity functions: exact queries, "
               "convolution, quotients, and equivalence checks"};
  app.require_subcommand(1);

  std::string model_path, second_path, formula_text, game_text, target_text;
  std::string event_text, bound_text, alpha_text, beta_text, out_path, mode;
  bool profiles = false, verify_kleisli = false;
  std::uint64_t max_search = 1000000;

  auto* check = app.add_subcommand("check", "validate a model file");
  check->add_option("model", model_path)->required();
  check->add_flag("--profiles", profiles, "print per-event t-measurability profiles");

  auto* modelcheck = app.add_subcommand("modelcheck", "evaluate a formula over a model");
  modelcheck->add_option("model", model_path)->required();
  modelcheck->add_option("--formula", formula_text)->required();

  auto* gameeval = app.add_subcommand("gameeval", "evaluate a game term over a target set");
  gameeval->add_option("model", model_path)->required();
  gameeval->add_option("--game", game_text)->required();
  gameeval->add_option("--target", target_text, "comma-separated target states")->required();

  auto* compose_cmd = app.add_subcommand("compose", "convolve two effectivity functions");
  compose_cmd->add_option("P", model_path)->required();
  compose_cmd->add_option("Q", second_path)->required();
  compose_cmd->add_option("--event", event_text)->required();
  compose_cmd->add_option("--q", bound_text)->required();
  compose_cmd->add_flag("--verify-kleisli", verify_kleisli,
                        "also check convolution compatibility for pointed inputs");

  auto* quotient_cmd = app.add_subcommand("quotient", "factor a model through a congruence");
  quotient_cmd->add_option("model", model_path)->required();
  quotient_cmd->add_option("--alpha", alpha_text, "state partition, e.g. a,b|c")->required();
  quotient_cmd->add_option("--beta", beta_text, "outcome partition")->required();
  quotient_cmd->add_option("--out", out_path, "write the quotient model here");

  auto* equiv_cmd = app.add_subcommand("equiv", "decide logical/behavioral equivalence");
  equiv_cmd->add_option("mode", mode, "logical or behavioral")->required();
  equiv_cmd->add_option("P", model_path)->required();
  equiv_cmd->add_option("Q", second_path)->required();
  equiv_cmd->add_option("--max-search", max_search, "search budget");

  auto* charrel_cmd = app.add_subcommand("charrel", "characteristic relation tools");
  auto* charrel_check = charrel_cmd->add_subcommand("check", "run the deduction rules");
  charrel_check->add_option("model", model_path)->required();
  auto* charrel_extract = charrel_cmd->add_subcommand("extract", "extract the measure");
  charrel_extract->add_option("model", second_path)->required();
  charrel_cmd->require_subcommand(1);

  auto* lift_cmd = app.add_subcommand("lift", "lift kernels/transition systems/NLMPs");
  lift_cmd->add_option("mode", mode, "kernel, ts, or nlmp")->required();
  lift_cmd->add_option("model", model_path)->required();
  lift_cmd->add_option("--out", out_path, "write the effectivity model here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return cmd_check(model_path, profiles);
    if (modelcheck->parsed()) return cmd_modelcheck(model_path, formula_text);
    if (gameeval->parsed()) return cmd_gameeval(model_path, game_text, target_text);
    if (compose_cmd->parsed())
      return cmd_compose(model_path, second_path, event_text, bound_text, verify_kleisli);
    if (quotient_cmd->parsed())
      return cmd_quotient(model_path, alpha_text, beta_text, out_path);
    if (equiv_cmd->parsed()) return cmd_equiv(mode, model_path, second_path, max_search);
    if (charrel_cmd->parsed()) {
      if (charrel_check->parsed()) return cmd_charrel_check(model_path);
      return cmd_charrel_extract(second_path);
    }
    if (lift_cmd->parsed()) return cmd_lift(mode, model_path, out_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
