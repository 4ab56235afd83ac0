#pragma once

// Command-line front end. Every subcommand parses its flags, calls one library
// entry point and prints the result; exit codes are 0 (success), 1 (check
// failed, formulas inequivalent, oracle disagreement) and 2 (usage, parse or
// file errors).

#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dtl/agreement.hpp"
#include "dtl/eval.hpp"
#include "dtl/formula.hpp"
#include "dtl/lab.hpp"
#include "dtl/signal_io.hpp"

namespace dtl::cli {

class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Environment from `--model` (binds P) and any number of `--bind NAME=path`.
inline Env load_env(const std::string& model, const std::vector<std::string>& binds) {
  if (model.empty() && binds.empty()) throw usage_error("need --model or --bind");
  Env env;
  bool have_domain = false;
  if (!model.empty()) {
    env = builtin_model(ModelSpec::parse(model));
    have_domain = true;
  }
  for (const auto& b : binds) {
    auto eq = b.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == b.size())
      throw usage_error("--bind expects NAME=path, got '" + b + "'");
    std::string name = b.substr(0, eq);
    std::string path = b.substr(eq + 1);
    Signal s = [&] {
      try {
        return parse_signal(read_file(path));
      } catch (const format_error& e) {
        throw format_error(path + ": " + e.what());
      }
    }();
    if (!have_domain) {
      env.domain = s.domain();
      have_domain = true;
    }
    if (env.bindings.count(name)) throw usage_error("atom '" + name + "' is bound twice");
    env.bind(name, std::move(s));
  }
  return env;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact dense-time temporal logic engine", "dtl"};
  app.require_subcommand(1);

  std::vector<std::string> formulas;
  std::string model, output = "text", logic, report_path, check;
  std::vector<std::string> binds;
  bool eventually = false;
  unsigned depth = 0;
  std::size_t budget = kCheckBudget, samples = 0;
  std::uint64_t seed = 0;

  auto add_env = [&](CLI::App* sub) {
    sub->add_option("--model", model, "builtin model: mk:<k>, thm2 or thm3:<n> (binds P)");
    sub->add_option("--bind", binds, "NAME=path of a signal file")->take_all();
  };

  CLI::App* eval_cmd = app.add_subcommand("eval", "print the truth set of a formula");
  eval_cmd->add_option("--formula", formulas, "formula text")->required()->expected(1);
  add_env(eval_cmd);
  eval_cmd->add_option("--output", output, "sig or text")->check(CLI::IsMember({"sig", "text"}));

  CLI::App* equiv_cmd = app.add_subcommand("equiv", "compare the truth sets of two formulas");
  equiv_cmd->add_option("--formula", formulas, "formula text (twice)")->required()->expected(2);
  add_env(equiv_cmd);
  equiv_cmd->add_flag("--eventually", eventually, "compare from some time on");

  CLI::App* trivial_cmd = app.add_subcommand("trivial", "classify a formula as True, False, P, NotP or None");
  trivial_cmd->add_option("--formula", formulas, "formula text")->required()->expected(1);
  trivial_cmd->add_option("--model", model, "builtin model")->required();
  trivial_cmd->add_flag("--eventually", eventually, "classify from some time on");

  CLI::App* enum_cmd = app.add_subcommand("enumerate", "enumerate formulas and write a trivialization report");
  enum_cmd->add_option("--logic", logic, "tl, qtl or qtl+p<m>")->required();
  enum_cmd->add_option("--depth", depth, "maximal modal depth")->required();
  enum_cmd->add_option("--model", model, "builtin model")->required();
  enum_cmd->add_option("--budget", budget, "maximal number of representatives");
  enum_cmd->add_option("--report", report_path, "report file")->required();
  enum_cmd->add_flag("--eventually", eventually, "classify from some time on");

  CLI::App* paper_cmd = app.add_subcommand("paper", "run a separation check");
  paper_cmd->add_option("--check", check, "pnueli, hierarchy:<n>, counting:<k> or triviality:<k>")->required();

  CLI::App* oracle_cmd = app.add_subcommand("oracle-check", "compare the engine with the pointwise oracle");
  oracle_cmd->add_option("--formula", formulas, "formula text")->required()->expected(1);
  add_env(oracle_cmd);
  oracle_cmd->add_option("--samples", samples, "number of sample times")->required();
  oracle_cmd->add_option("--seed", seed, "random seed")->required();

  std::vector<const char*> argv{"dtl"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (eval_cmd->parsed()) {
      Signal truth = evaluate(parse(formulas[0]), load_env(model, binds));
      out << (output == "sig" ? format_signal(truth) : describe_signal(truth));
      return 0;
    }
    if (equiv_cmd->parsed()) {
      Env env = load_env(model, binds);
      bool same = equal(evaluate(parse(formulas[0]), env), evaluate(parse(formulas[1]), env), eventually);
      out << (same ? "equivalent" : "not equivalent") << (eventually ? " eventually" : "") << "\n";
      return same ? 0 : 1;
    }
    if (trivial_cmd->parsed()) {
      Env env = load_env(model, {});
      out << to_string(classify_trivial(evaluate(parse(formulas[0]), env), env.lookup("P"), eventually)) << "\n";
      return 0;
    }
    if (enum_cmd->parsed()) {
      Logic l = Logic::parse(logic);
      Env env = load_env(model, {});
      Enumeration e = enumerate_formulas(l, depth, env, budget);
      std::string text = trivialization_report(env, e, eventually).to_string();
      std::ofstream file(report_path, std::ios::binary);
      if (!file || !(file << text)) throw usage_error("cannot write '" + report_path + "'");
      out << text.substr(text.rfind("total "));
      return 0;
    }
    if (paper_cmd->parsed()) {
      PaperCheck c = paper_check(check);
      out << c.to_string();
      return c.pass ? 0 : 1;
    }
    if (oracle_cmd->parsed()) {
      AgreementReport r = agreement_check(parse(formulas[0]), load_env(model, binds), samples, seed);
      out << r.to_string();
      return r.all_agree() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace dtl::cli
