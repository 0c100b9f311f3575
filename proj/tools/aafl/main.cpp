/* Copyright 2026 The aafl Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Command-line front end.  Exit codes: 0 completed, 2 usage or input error,
// 3 normal form not constructed, 4 resource budget exceeded.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "aafl/action.hpp"
#include "aafl/bisim.hpp"
#include "aafl/check.hpp"
#include "aafl/correspond.hpp"
#include "aafl/normform.hpp"
#include "aafl/prover.hpp"
#include "aafl/reduce.hpp"
#include "aafl/synth.hpp"
#include "aafl/tau.hpp"

namespace {

using namespace aafl;

struct Options {
  std::string cls;
  std::vector<std::string> models;
  std::vector<std::string> action_models;
  std::vector<std::string> points;
  std::string formula;
  std::string formula_file;
  std::string action;
  std::string goal;
  std::string agents;
  std::string agents_b;
  std::string format = "json";
  std::string out;
  std::optional<int> depth;
  std::optional<int> n;
  std::optional<std::size_t> budget;
  bool via_reduction = false;
  bool verify = false;
  bool refines_flag = false;
  bool fastpath = false;
  bool minimal = false;
  int trials = 50;
  std::uint64_t seed = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw InputError("cannot write '" + o.out + "'");
  f << text;
}

std::string line(const std::string& s) { return s + "\n"; }

FrameClass need_class(const Options& o) {
  if (o.cls.empty()) throw InputError("--class is required");
  return parse_frame_class(o.cls);
}

AgentSet split_agents(const std::string& list) {
  AgentSet out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.insert(item);
  return out;
}

// Agents named in modal brackets and in L{...} or Cov{...} sets.
AgentSet infer_agents(const std::string& text) {
  AgentSet out;
  static const std::regex modal(R"([\[<]\s*([A-Za-z_][A-Za-z0-9_]*)\s*[\]>])");
  static const std::regex braces(R"(\{([^}]*)\})");
  for (std::sregex_iterator it(text.begin(), text.end(), modal), end; it != end; ++it) out.insert((*it)[1]);
  for (std::sregex_iterator it(text.begin(), text.end(), braces), end; it != end; ++it)
    for (std::string a : split_agents((*it)[1])) {
      a.erase(0, a.find_first_not_of(" \t"));
      a.erase(a.find_last_not_of(" \t") + 1);
      if (!a.empty()) out.insert(a);
    }
  return out;
}

// Explicit --agents, else the agents the text mentions, else {a}.
AgentSet agents_for(const Options& o, const std::string& text) {
  if (!o.agents.empty()) return split_agents(o.agents);
  AgentSet a = infer_agents(text);
  if (a.empty()) a.insert("a");
  return a;
}

std::string formula_text(const Options& o) {
  if (!o.formula_file.empty()) return read_file(o.formula_file);
  if (o.formula.empty()) throw InputError("--formula or --formula-file is required");
  return o.formula;
}

PointedKripkeModel load_model(const Options& o, std::size_t i = 0) {
  if (o.models.size() <= i) throw InputError("--model is required");
  PointedKripkeModel m = model_from_json(read_file(o.models[i]));
  if (!o.points.empty()) m = point(m.model, o.points);
  return m;
}

PointedActionModel load_action_model(const Options& o, std::size_t i = 0) {
  if (o.action_models.size() <= i) throw InputError("--action-model is required");
  PointedActionModel a = action_model_from_json(read_file(o.action_models[i]));
  if (!o.points.empty()) {
    a.designated.clear();
    for (const auto& p : o.points) {
      int t = a.model.index_of(p);
      if (t < 0) throw InputError("unknown action point '" + p + "'");
      a.designated.push_back(t);
    }
    std::sort(a.designated.begin(), a.designated.end());
    a.designated.erase(std::unique(a.designated.begin(), a.designated.end()), a.designated.end());
  }
  return a;
}

std::string render(const Options& o, const PointedKripkeModel& m) {
  return o.format == "dot" ? export_dot(m) : model_to_json(m);
}

std::string render(const Options& o, const PointedActionModel& a) {
  return o.format == "dot" ? export_dot(a) : action_model_to_json(a);
}

std::string verdict(bool b) { return b ? "true\n" : "false\n"; }

void run_parse(const Options& o) {
  if (!o.action.empty()) {
    emit(o, line(print_action(parse_action(o.action, agents_for(o, o.action)))));
    return;
  }
  const std::string text = formula_text(o);
  emit(o, line(print_formula(parse_formula(text, agents_for(o, text)))));
}

void run_check(const Options& o) {
  const FrameClass c = need_class(o);
  PointedKripkeModel m = load_model(o);
  Formula f = parse_formula(formula_text(o), m.model.agents);
  emit(o, verdict(o.via_reduction ? check_via_reduction(m, f, c) : check(m, f, c)));
}

void run_reduce(const Options& o) {
  const std::string text = formula_text(o);
  Formula f = parse_formula(text, agents_for(o, text));
  if (o.fastpath) {
    emit(o, line(print_formula(reduce_afl_fastpath(f, o.cls.empty() ? FrameClass::K : need_class(o)))));
    return;
  }
  emit(o, line(print_formula(reduce(f, need_class(o), o.budget.value_or(kDefaultReduceBudget)))));
}

void run_tau(const Options& o) {
  const FrameClass c = need_class(o);
  if (o.action.empty()) throw InputError("--action is required");
  const AgentSet agents = agents_for(o, o.action);
  emit(o, render(o, tau(parse_action(o.action, agents), c, agents, o.minimal)));
}

void run_exec(const Options& o) {
  const FrameClass c = need_class(o);
  PointedKripkeModel m = load_model(o);
  if (!frame_class_holds(m.model, c)) throw InputError("the model is not in class " + to_string(c));
  PointedActionModel a;
  if (!o.action.empty()) {
    a = tau(parse_action(o.action, m.model.agents), c, m.model.agents, o.minimal);
  } else {
    if (o.action_models.empty()) throw InputError("--action or --action-model is required");
    a = action_model_from_json(read_file(o.action_models[0]));
  }
  Checker pre(m.model, c);
  PointedKripkeModel r = execute(m, a, [&](int s, Formula f) { return pre.truth(f)[s] != 0; });
  if (r.designated.empty()) std::cerr << "execution failed: no designated pair survives\n";
  emit(o, render(o, r));
}

void run_bisim(const Options& o) {
  if (o.action_models.size() == 2) {
    const FrameClass c = need_class(o);
    PointedActionModel a1 = action_model_from_json(read_file(o.action_models[0]));
    PointedActionModel a2 = action_model_from_json(read_file(o.action_models[1]));
    emit(o, verdict(o.n ? am_n_bisimilar(a1, a2, *o.n, c) : am_bisimilar(a1, a2, c)));
    return;
  }
  if (o.models.size() != 2) throw InputError("bisim needs two --model or two --action-model files");
  PointedKripkeModel m1 = model_from_json(read_file(o.models[0]));
  PointedKripkeModel m2 = model_from_json(read_file(o.models[1]));
  bool r;
  if (o.refines_flag)
    r = refines(m1, m2);
  else if (!o.agents_b.empty())
    r = b_bisimilar(m1, m2, split_agents(o.agents_b));
  else if (o.n)
    r = n_bisimilar(m1, m2, *o.n);
  else
    r = bisimilar(m1, m2);
  emit(o, verdict(r));
}

void run_valid(const Options& o) {
  const FrameClass c = need_class(o);
  const std::string text = formula_text(o);
  Formula f = parse_formula(text, agents_for(o, text));
  emit(o, verdict(valid(f, c, o.budget.value_or(kDefaultProverBudget))));
}

void run_normal_form(const Options& o, const std::string& kind) {
  const std::string text = formula_text(o);
  Formula f = parse_formula(text, agents_for(o, text));
  if (!is_basic(f)) throw InputError("normal forms take basic formulae");
  if (kind == "dnf") {
    emit(o, line(print_formula(to_formula(*to_dnf(f)))));
  } else if (kind == "adnf") {
    emit(o, line(print_formula(to_formula(*to_adnf(f), true))));
  } else {
    std::vector<Formula> parts;
    for (const auto& e : to_explicit(f, o.budget.value_or(kDefaultExplicitBudget))) parts.push_back(to_formula(e));
    emit(o, line(print_formula(disj_all(parts))));
  }
}

void run_correspond(const Options& o) {
  const FrameClass c = need_class(o);
  PointedActionModel a = load_action_model(o);
  const int n = o.depth ? *o.depth : o.n.value_or(-1);
  if (n < 0) throw InputError("--depth is required");
  emit(o, line(print_action(correspond_multi(a, n, c))));
}

void run_synth(const Options& o) {
  const FrameClass c = need_class(o);
  if (o.goal.empty()) throw InputError("--goal is required");
  Formula goal = parse_formula(o.goal, agents_for(o, o.goal));
  Action alpha = synthesize(goal, c);
  std::string text = line(print_action(alpha));
  if (o.verify) {
    SynthesisReport r = verify_synthesis(goal, alpha, c, o.trials, o.seed);
    std::ostringstream ss;
    ss << "trials " << r.trials << ", achievable " << r.exists_true << ", succeeded " << r.succeeded
       << ", necessity failures " << r.necessity_failures << ", sufficiency failures " << r.sufficiency_failures
       << "\n"
       << r.counterexamples.size() << " counterexamples\n";
    for (const auto& m : r.counterexamples) ss << m;
    text += ss.str();
  }
  emit(o, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Action formulae for dynamic epistemic logic over K, K45 and S5"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_class = [&](CLI::App* s) { s->add_option("--class", o.cls, "frame class: k, k45 or s5"); };
  auto add_formula = [&](CLI::App* s) {
    s->add_option("--formula", o.formula, "formula text");
    s->add_option("--formula-file", o.formula_file, "file holding the formula");
  };
  auto add_agents = [&](CLI::App* s) {
    s->add_option("--agents", o.agents, "comma-separated agent set (default: agents named in the text)");
  };
  auto add_output = [&](CLI::App* s) {
    s->add_option("--out", o.out, "write output to FILE");
  };
  auto add_format = [&](CLI::App* s) {
    s->add_option("--format", o.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  };

  CLI::App* parse = app.add_subcommand("parse", "parse and pretty-print a formula or action");
  add_formula(parse);
  parse->add_option("--action", o.action, "action text");
  add_agents(parse);
  add_output(parse);

  CLI::App* check_cmd = app.add_subcommand("check", "model-check a formula");
  add_class(check_cmd);
  check_cmd->add_option("--model", o.models, "model JSON file");
  check_cmd->add_option("--point", o.points, "designated state (repeatable)");
  add_formula(check_cmd);
  check_cmd->add_flag("--via-reduction", o.via_reduction, "reduce to a basic formula first");
  add_output(check_cmd);

  CLI::App* reduce_cmd = app.add_subcommand("reduce", "rewrite into an equivalent basic formula");
  add_class(reduce_cmd);
  add_formula(reduce_cmd);
  add_agents(reduce_cmd);
  reduce_cmd->add_flag("--fastpath", o.fastpath, "use the learning-formula axioms of class K");
  reduce_cmd->add_option("--budget", o.budget, "rewrite step budget");
  add_output(reduce_cmd);

  CLI::App* tau_cmd = app.add_subcommand("tau", "translate an action formula into an action model");
  add_class(tau_cmd);
  tau_cmd->add_option("--action", o.action, "action text");
  add_agents(tau_cmd);
  tau_cmd->add_flag("--minimal", o.minimal, "reachable products with bisimulation quotients");
  add_format(tau_cmd);
  add_output(tau_cmd);

  CLI::App* exec_cmd = app.add_subcommand("exec", "product update");
  add_class(exec_cmd);
  exec_cmd->add_option("--model", o.models, "model JSON file");
  exec_cmd->add_option("--point", o.points, "designated state (repeatable)");
  exec_cmd->add_option("--action", o.action, "action text, translated for --class");
  exec_cmd->add_option("--action-model", o.action_models, "action model JSON file");
  exec_cmd->add_flag("--minimal", o.minimal, "reachable products with bisimulation quotients");
  add_format(exec_cmd);
  add_output(exec_cmd);

  CLI::App* bisim_cmd = app.add_subcommand("bisim", "compare two models or two action models");
  add_class(bisim_cmd);
  bisim_cmd->add_option("--model", o.models, "model JSON file (give two)");
  bisim_cmd->add_option("--action-model", o.action_models, "action model JSON file (give two)");
  bisim_cmd->add_option("-n,--n", o.n, "bounded depth");
  bisim_cmd->add_option("--agents-b", o.agents_b, "comma-separated agents for B-bisimulation");
  bisim_cmd->add_flag("--refines", o.refines_flag, "whether the first model refines the second");
  add_output(bisim_cmd);

  CLI::App* valid_cmd = app.add_subcommand("valid", "decide validity of a basic formula");
  add_class(valid_cmd);
  add_formula(valid_cmd);
  add_agents(valid_cmd);
  valid_cmd->add_option("--budget", o.budget, "prover step budget");
  add_output(valid_cmd);

  std::vector<std::pair<std::string, CLI::App*>> forms;
  for (const char* kind : {"dnf", "adnf", "explicit"}) {
    CLI::App* s = app.add_subcommand(kind, std::string(kind) + " normal form of a basic formula");
    add_formula(s);
    add_agents(s);
    if (std::string(kind) == "explicit") s->add_option("--budget", o.budget, "candidate budget");
    add_output(s);
    forms.emplace_back(kind, s);
  }

  CLI::App* corr = app.add_subcommand("correspond", "action formula for a pointed action model");
  add_class(corr);
  corr->add_option("--action-model", o.action_models, "action model JSON file");
  corr->add_option("--point", o.points, "designated point (repeatable)");
  corr->add_option("--depth", o.depth, "bisimulation depth");
  corr->add_option("-n,--n", o.n, "alias of --depth");
  add_output(corr);

  CLI::App* synth = app.add_subcommand("synth", "synthesize an action achieving a goal");
  add_class(synth);
  synth->add_option("--goal", o.goal, "basic goal formula");
  add_agents(synth);
  synth->add_flag("--verify", o.verify, "check both contracts on random models");
  synth->add_option("--trials", o.trials, "models sampled by --verify");
  synth->add_option("--seed", o.seed, "sampling seed");
  add_output(synth);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (parse->parsed()) run_parse(o);
    else if (check_cmd->parsed()) run_check(o);
    else if (reduce_cmd->parsed()) run_reduce(o);
    else if (tau_cmd->parsed()) run_tau(o);
    else if (exec_cmd->parsed()) run_exec(o);
    else if (bisim_cmd->parsed()) run_bisim(o);
    else if (valid_cmd->parsed()) run_valid(o);
    else if (corr->parsed()) run_correspond(o);
    else if (synth->parsed()) run_synth(o);
    else
      for (const auto& [kind, s] : forms)
        if (s->parsed()) run_normal_form(o, kind);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotConverted& e) {
    std::cerr << "normal form not constructed: " << e.what() << "\n";
    return 3;
  } catch (const ResourceExhausted& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
