#include "sepsub/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "sepsub/axiom_gen.hpp"
#include "sepsub/builtin_schemes.hpp"
#include "sepsub/direct.hpp"
#include "sepsub/errors.hpp"
#include "sepsub/eval.hpp"
#include "sepsub/game.hpp"
#include "sepsub/parser.hpp"
#include "sepsub/prenex.hpp"
#include "sepsub/pseudo.hpp"
#include "sepsub/scheme_io.hpp"
#include "sepsub/tptp.hpp"

namespace sepsub {

namespace {

using Clock = std::chrono::steady_clock;

struct Report {
  std::string command;
  std::string verdict;
  std::vector<std::pair<std::string, std::string>> detail;
  long long total_ms = 0;

  void add(const std::string& key, const std::string& value) {
    detail.emplace_back(key, value);
  }

  void emit(std::ostream& out, bool json) const {
    if (json) {
      nlohmann::ordered_json j;
      j["command"] = command;
      j["verdict"] = verdict;
      nlohmann::ordered_json d = nlohmann::ordered_json::object();
      for (const auto& [k, v] : detail) d[k] = v;
      j["detail"] = std::move(d);
      j["timings"] = {{"total_ms", total_ms}};
      out << j.dump() << "\n";
      return;
    }
    out << "command=" << command << "\n";
    out << "verdict=" << verdict << "\n";
    for (const auto& [k, v] : detail) out << "detail." << k << "=" << v << "\n";
    out << "timings.total_ms=" << total_ms << "\n";
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

/// max_index to use for one rule: the user's value if given, otherwise
/// everything an explicit list has. Generated rules insist on a value.
int rule_max_index(const SeparationRule& rule, std::optional<int> user) {
  if (user) return *user;
  if (rule.order() == 0) return 0;
  auto count = rule.tau().explicit_count();
  if (!count)
    throw Error("rule has a generated closure rule; --max-index is required");
  return std::max(0, *count - 1);
}

Verdict check_game(const FiniteStructure& a, const SeparationScheme& scheme,
                   std::optional<int> max_index, const GameOptions& gopts) {
  for (const auto& axiom : scheme.superclass)
    if (!eval_formula(a, Assignment{}, axiom))
      return Verdict::SuperclassViolation;
  for (const auto& rule : scheme.rules) {
    if (rule.order() == 0) {
      if (!eval_formula(a, Assignment{}, rule.sentence())) return Verdict::Out;
      continue;
    }
    if (!has_omega_strategy(a, rule, rule_max_index(rule, max_index), gopts))
      return Verdict::Out;
  }
  return Verdict::In;
}

Verdict check_direct(const FiniteStructure& a, const SeparationScheme& scheme,
                     std::optional<int> max_index, const DirectOptions& dopts) {
  for (const auto& axiom : scheme.superclass)
    if (!eval_formula(a, Assignment{}, axiom))
      return Verdict::SuperclassViolation;
  for (const auto& rule : scheme.rules)
    if (!eval_rule_direct(a, rule, rule_max_index(rule, max_index), dopts))
      return Verdict::Out;
  return Verdict::In;
}

SeparationScheme load_scheme(const std::string& path) {
  return parse_scheme(slurp(path));
}

FiniteStructure load_structure(const std::string& path,
                               const SeparationScheme& scheme) {
  return structure_from_json(slurp(path), scheme.signature);
}

struct Cli {
  CLI::App app{"separation-scheme toolkit", "sepsub"};
  std::ostream& out;
  std::ostream& err;
  int exit_code = 0;

  // common options
  bool json = false;

  explicit Cli(std::ostream& out, std::ostream& err) : out(out), err(err) {}
};

void finish(Cli& cli, Report& report, Clock::time_point started, int code) {
  report.total_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        Clock::now() - started)
                        .count();
  report.emit(cli.out, cli.json);
  cli.exit_code = code;
}

void add_check(Cli& cli) {
  auto* cmd = cli.app.add_subcommand("check", "decide membership of a structure");
  auto structure = std::make_shared<std::string>();
  auto scheme_path = std::make_shared<std::string>();
  auto method = std::make_shared<std::string>("direct");
  auto max_index = std::make_shared<int>(-1);
  auto size_cap = std::make_shared<int>(DirectOptions{}.size_cap);
  cmd->add_option("structure", *structure, "structure file (JSON)")->required();
  cmd->add_option("scheme", *scheme_path, "scheme file")->required();
  cmd->add_option("--max-index", *max_index, "closure-conjunct index bound");
  cmd->add_option("--method", *method, "direct | game | both")
      ->check(CLI::IsMember({"direct", "game", "both"}));
  cmd->add_option("--cap-size", *size_cap, "direct-check universe cap");
  cmd->add_flag("--json", cli.json, "JSON report");

  cmd->callback([&cli, structure, scheme_path, method, max_index, size_cap] {
    auto started = Clock::now();
    Report report;
    report.command = "check";
    auto scheme = load_scheme(*scheme_path);
    auto a = load_structure(*structure, scheme);
    std::optional<int> idx;
    if (*max_index >= 0) idx = *max_index;
    DirectOptions dopts;
    dopts.size_cap = *size_cap;
    GameOptions gopts;

    std::optional<Verdict> direct, game;
    if (*method == "direct" || *method == "both")
      direct = check_direct(a, scheme, idx, dopts);
    if (*method == "game" || *method == "both")
      game = check_game(a, scheme, idx, gopts);
    if (direct) report.add("direct", to_string(*direct));
    if (game) report.add("game", to_string(*game));

    if (direct && game && *direct != *game) {
      // The two decision procedures provably agree on finite structures;
      // divergence is an implementation defect, never a verdict.
      report.verdict = "mismatch";
      finish(cli, report, started, 1);
      return;
    }
    Verdict v = direct ? *direct : *game;
    report.verdict = to_string(v);
    finish(cli, report, started, v == Verdict::In ? 0 : 1);
  });
}

int pick_rule(const SeparationScheme& scheme, int requested) {
  if (requested >= 0) {
    if (requested >= static_cast<int>(scheme.rules.size()))
      throw Error("no rule with index " + std::to_string(requested));
    if (scheme.rules[requested].order() == 0)
      throw Error("rule " + std::to_string(requested) + " has order 0");
    return requested;
  }
  int found = -1;
  for (std::size_t i = 0; i < scheme.rules.size(); ++i)
    if (scheme.rules[i].order() > 0) {
      if (found >= 0) throw Error("several positive rules; pass --rule");
      found = static_cast<int>(i);
    }
  if (found < 0) throw Error("scheme has no rule of positive order");
  return found;
}

void add_game(Cli& cli) {
  auto* cmd = cli.app.add_subcommand("game", "solve the two-player game");
  auto structure = std::make_shared<std::string>();
  auto scheme_path = std::make_shared<std::string>();
  auto rule_index = std::make_shared<int>(-1);
  auto rounds = std::make_shared<int>(-1);
  auto omega = std::make_shared<bool>(false);
  auto survival = std::make_shared<bool>(false);
  auto max_index = std::make_shared<int>(-1);
  auto survival_cap = std::make_shared<int>(GameOptions{}.survival_cap);
  cmd->add_option("structure", *structure)->required();
  cmd->add_option("scheme", *scheme_path)->required();
  cmd->add_option("--rule", *rule_index, "rule index (default: the positive rule)");
  cmd->add_option("--rounds", *rounds, "test for an r-strategy in the simple game");
  cmd->add_flag("--omega", *omega, "test for an omega-strategy");
  cmd->add_flag("--survival", *survival, "maximal survival rounds");
  cmd->add_option("--max-index", *max_index);
  cmd->add_option("--cap-survival", *survival_cap);
  cmd->add_flag("--json", cli.json);

  cmd->callback([&cli, structure, scheme_path, rule_index, rounds, omega,
                 survival, max_index, survival_cap] {
    auto started = Clock::now();
    Report report;
    report.command = "game";
    auto scheme = load_scheme(*scheme_path);
    auto a = load_structure(*structure, scheme);
    int rule_at = pick_rule(scheme, *rule_index);
    const auto& rule = scheme.rules[rule_at];
    std::optional<int> idx;
    if (*max_index >= 0) idx = *max_index;
    int bound = rule_max_index(rule, idx);
    GameOptions gopts;
    gopts.survival_cap = *survival_cap;
    report.add("rule", std::to_string(rule_at));
    report.add("max_index", std::to_string(bound));

    int mode_count = (*rounds >= 0) + *omega + *survival;
    if (mode_count != 1)
      throw Error("pass exactly one of --rounds, --omega, --survival");

    GameSolver solver(a, rule, bound, gopts);
    if (*rounds >= 0) {
      bool ok = solver.has_r_strategy(solver.empty_position(), *rounds, true);
      report.add("rounds", std::to_string(*rounds));
      report.verdict = ok ? "true" : "false";
      finish(cli, report, started, ok ? 0 : 1);
      return;
    }
    if (*omega) {
      bool ok = solver.has_omega_strategy();
      report.verdict = ok ? "true" : "false";
      finish(cli, report, started, ok ? 0 : 1);
      return;
    }
    auto result = solver.max_survival_rounds();
    switch (result.kind) {
      case SurvivalKind::Omega:
        report.verdict = "omega";
        break;
      case SurvivalKind::Finite:
        report.verdict = std::to_string(result.rounds);
        break;
      case SurvivalKind::AtLeastCap:
        report.verdict = ">=" + std::to_string(result.rounds);
        break;
    }
    finish(cli, report, started, 0);
  });
}

void add_axioms(Cli& cli) {
  auto* cmd = cli.app.add_subcommand("axioms", "generate first-order axioms");
  auto scheme_path = std::make_shared<std::string>();
  auto rounds = std::make_shared<int>(1);
  auto max_index = std::make_shared<int>(-1);
  auto format = std::make_shared<std::string>("sexpr");
  auto simplify_flag = std::make_shared<bool>(false);
  auto output = std::make_shared<std::string>();
  auto node_cap = std::make_shared<std::uint64_t>(AxiomGenOptions{}.node_cap);
  cmd->add_option("scheme", *scheme_path)->required();
  cmd->add_option("--rounds", *rounds, "largest r (default 1)");
  cmd->add_option("--max-index", *max_index, "largest conjunct index");
  cmd->add_option("--format", *format)->check(CLI::IsMember({"sexpr", "tptp"}));
  cmd->add_flag("--simplify", *simplify_flag, "apply the cleanup pass");
  cmd->add_option("-o,--output", *output, "output file (default stdout)");
  cmd->add_option("--cap-nodes", *node_cap, "node-count guard");
  cmd->add_flag("--json", cli.json);

  cmd->callback([&cli, scheme_path, rounds, max_index, format, simplify_flag,
                 output, node_cap] {
    auto started = Clock::now();
    auto scheme = load_scheme(*scheme_path);
    int i_max = *max_index;
    if (i_max < 0) {
      i_max = 0;
      for (const auto& rule : scheme.rules)
        if (rule.order() > 0)
          i_max = std::max(i_max, rule_max_index(rule, std::nullopt));
    }
    AxiomGenOptions opts;
    opts.node_cap = *node_cap;
    auto axioms = generate_axioms(scheme, *rounds, i_max, opts);
    if (*simplify_flag)
      for (auto& axiom : axioms) axiom.sentence = simplify(axiom.sentence);
    std::string text = render_axioms(
        axioms, *format == "sexpr" ? AxiomFormat::Sexpr : AxiomFormat::Tptp);
    if (output->empty()) {
      cli.out << text;
      cli.exit_code = 0;
      return;
    }
    spill(*output, text);
    Report report;
    report.command = "axioms";
    bool universal = true;
    for (const auto& axiom : axioms)
      if (!is_universal(axiom.sentence)) universal = false;
    report.add("sentences", std::to_string(axioms.size()));
    report.add("universal", universal ? "yes" : "no");
    report.add("output", *output);
    report.verdict = "ok";
    finish(cli, report, started, 0);
  });
}

void add_eval(Cli& cli) {
  auto* cmd = cli.app.add_subcommand("eval", "evaluate sentences on a structure");
  auto structure = std::make_shared<std::string>();
  auto formula_path = std::make_shared<std::string>();
  auto scheme_path = std::make_shared<std::string>();
  cmd->add_option("structure", *structure)->required();
  cmd->add_option("formulas", *formula_path, "file of sentences")->required();
  cmd->add_option("--scheme", *scheme_path, "scheme supplying the signature");
  cmd->add_flag("--json", cli.json);

  cmd->callback([&cli, structure, formula_path, scheme_path] {
    auto started = Clock::now();
    Report report;
    report.command = "eval";
    FiniteStructure a = scheme_path->empty()
                            ? structure_from_json(slurp(*structure))
                            : load_structure(*structure,
                                             load_scheme(*scheme_path));
    auto formulas = parse_formulas(slurp(*formula_path), a.signature());
    bool all = true;
    for (std::size_t i = 0; i < formulas.size(); ++i) {
      if (!formulas[i].is_sentence())
        throw Error("formula " + std::to_string(i) + " has free variables");
      bool value = eval_formula(a, Assignment{}, formulas[i]);
      report.add("formula" + std::to_string(i), value ? "true" : "false");
      all = all && value;
    }
    report.verdict = all ? "true" : "false";
    finish(cli, report, started, all ? 0 : 1);
  });
}

void add_crosscheck(Cli& cli) {
  auto* cmd = cli.app.add_subcommand(
      "crosscheck", "compare generated axioms against the game solver");
  auto structure = std::make_shared<std::string>();
  auto scheme_path = std::make_shared<std::string>();
  auto rounds = std::make_shared<int>(1);
  auto max_index = std::make_shared<int>(-1);
  cmd->add_option("structure", *structure)->required();
  cmd->add_option("scheme", *scheme_path)->required();
  cmd->add_option("--rounds", *rounds, "largest r");
  cmd->add_option("--max-index", *max_index, "largest conjunct index");
  cmd->add_flag("--json", cli.json);

  cmd->callback([&cli, structure, scheme_path, rounds, max_index] {
    auto started = Clock::now();
    Report report;
    report.command = "crosscheck";
    auto scheme = load_scheme(*scheme_path);
    auto a = load_structure(*structure, scheme);
    std::optional<int> idx;
    if (*max_index >= 0) idx = *max_index;

    int cells = 0, mismatches = 0;
    for (std::size_t rule_at = 0; rule_at < scheme.rules.size(); ++rule_at) {
      const auto& rule = scheme.rules[rule_at];
      if (rule.order() == 0) continue;
      int i_hi = rule_max_index(rule, idx);
      GameSolver solver(a, rule, i_hi);
      for (int r = 0; r <= *rounds; ++r) {
        for (int i = 0; i <= i_hi; ++i) {
          Formula sentence =
              beta_hat(rule, r, i, {}, static_cast<int>(rule_at));
          bool by_formula = eval_formula(a, Assignment{}, sentence);
          bool by_game =
              has_r_strategy(a, rule, GamePosition(a.size(), rule.order()), r,
                             i, true);
          ++cells;
          if (by_formula != by_game) {
            ++mismatches;
            report.add("mismatch_rule" + std::to_string(rule_at) + "_r" +
                           std::to_string(r) + "_i" + std::to_string(i),
                       std::string(by_formula ? "true" : "false") + "/" +
                           (by_game ? "true" : "false"));
          }
        }
      }
    }
    report.add("cells", std::to_string(cells));
    report.add("mismatches", std::to_string(mismatches));
    report.verdict = mismatches == 0 ? "agree" : "mismatch";
    finish(cli, report, started, mismatches == 0 ? 0 : 1);
  });
}

void add_pseudo(Cli& cli) {
  auto* cmd = cli.app.add_subcommand(
      "pseudo", "emit the first-order theory over the extended signature");
  auto scheme_path = std::make_shared<std::string>();
  auto max_index = std::make_shared<int>(-1);
  auto output = std::make_shared<std::string>();
  cmd->add_option("scheme", *scheme_path)->required();
  cmd->add_option("--max-index", *max_index, "truncation for generated rules");
  cmd->add_option("-o,--output", *output);

  cmd->callback([&cli, scheme_path, max_index, output] {
    auto scheme = load_scheme(*scheme_path);
    if (!scheme.essentially_finite()) {
      if (*max_index < 0)
        throw Error("scheme has generated rules; --max-index is required");
      scheme = scheme.truncated(*max_index);
    }
    auto theory = to_pseudoelementary(scheme);
    std::string text = print_extended_theory(theory);
    if (output->empty())
      cli.out << text;
    else
      spill(*output, text);
    cli.exit_code = 0;
  });
}

void add_pseudo_check(Cli& cli) {
  auto* cmd = cli.app.add_subcommand(
      "pseudo-check", "membership via the extended-signature theory");
  auto structure = std::make_shared<std::string>();
  auto scheme_path = std::make_shared<std::string>();
  auto max_index = std::make_shared<int>(-1);
  auto bits_cap = std::make_shared<int>(PseudoOptions{}.interp_bits_cap);
  cmd->add_option("structure", *structure)->required();
  cmd->add_option("scheme", *scheme_path)->required();
  cmd->add_option("--max-index", *max_index);
  cmd->add_option("--cap-bits", *bits_cap);
  cmd->add_flag("--json", cli.json);

  cmd->callback([&cli, structure, scheme_path, max_index, bits_cap] {
    auto started = Clock::now();
    Report report;
    report.command = "pseudo-check";
    auto scheme = load_scheme(*scheme_path);
    auto a = load_structure(*structure, scheme);
    if (!scheme.essentially_finite()) {
      if (*max_index < 0)
        throw Error("scheme has generated rules; --max-index is required");
      scheme = scheme.truncated(*max_index);
    }
    for (const auto& axiom : scheme.superclass)
      if (!eval_formula(a, Assignment{}, axiom)) {
        report.verdict = to_string(Verdict::SuperclassViolation);
        finish(cli, report, started, 1);
        return;
      }
    PseudoOptions popts;
    popts.interp_bits_cap = *bits_cap;
    bool in = check_pseudoelementary(a, to_pseudoelementary(scheme), popts);
    report.verdict = in ? "in" : "out";
    finish(cli, report, started, in ? 0 : 1);
  });
}

void add_scheme(Cli& cli) {
  auto* cmd = cli.app.add_subcommand("scheme", "export a built-in scheme");
  auto name = std::make_shared<std::string>();
  auto params = std::make_shared<std::vector<std::string>>();
  auto output = std::make_shared<std::string>();
  cmd->add_option("name", *name,
                  "colouring | harmonious | clique-cover | dupa | poset")
      ->required();
  cmd->add_option("params", *params, "numeric parameters (or omega)");
  cmd->add_option("-o,--output", *output);

  cmd->callback([&cli, name, params, output] {
    auto int_param = [&params](std::size_t at) {
      if (at >= params->size()) throw Error("missing parameter");
      const std::string& p = (*params)[at];
      if (p == "omega" || p == "w") return kOmega;
      try {
        return std::stoi(p);
      } catch (const std::logic_error&) {
        throw Error("bad parameter '" + p + "'");
      }
    };

    SeparationScheme scheme;
    if (*name == "colouring") {
      scheme = colouring_scheme(int_param(0));
    } else if (*name == "harmonious") {
      scheme = harmonious_scheme(int_param(0));
    } else if (*name == "clique-cover") {
      scheme = clique_cover_scheme(int_param(0));
    } else if (*name == "dupa") {
      scheme = dupa_scheme();
    } else if (*name == "poset") {
      int alpha = int_param(0), beta = int_param(1);
      scheme = poset_scheme(alpha, beta);
      bool mixed = (alpha == kOmega) != (beta == kOmega);
      if (mixed)
        throw Error(
            "mixed finite/omega poset bounds cannot be exported as a scheme "
            "file (no named generator); use both-finite or omega omega");
    } else {
      throw Error("unknown scheme '" + *name + "'");
    }
    std::string text = print_scheme(scheme);
    if (output->empty())
      cli.out << text;
    else
      spill(*output, text);
    cli.exit_code = 0;
  });
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Cli cli(out, err);
  cli.app.require_subcommand(1);
  add_check(cli);
  add_game(cli);
  add_axioms(cli);
  add_eval(cli);
  add_crosscheck(cli);
  add_pseudo(cli);
  add_pseudo_check(cli);
  add_scheme(cli);

  std::vector<const char*> argv;
  argv.push_back("sepsub");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    cli.app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << cli.app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error=" << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error=" << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error=" << e.what() << "\n";
    return 2;
  }
  return cli.exit_code;
}

}  // namespace sepsub
