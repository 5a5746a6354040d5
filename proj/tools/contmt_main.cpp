// contmt: command-line front door for the continuous model theory workbench.
//
// Exit codes: 0 everything passed, 1 a violation was found (failed suite,
// preservation counterexample, successful search), 2 usage or input error.

#include <cstdint>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cmt/classify.hpp"
#include "cmt/downup.hpp"
#include "cmt/errors.hpp"
#include "cmt/eval.hpp"
#include "cmt/gen.hpp"
#include "cmt/harness.hpp"
#include "cmt/io.hpp"
#include "cmt/parser.hpp"
#include "cmt/printer.hpp"
#include "cmt/product.hpp"
#include "cmt/translate.hpp"

using json = nlohmann::ordered_json;
using namespace cmt;

namespace {

struct Opts {
  std::uint64_t seed = 0;
  std::uint64_t trials = 1000;
  int grid = 3;
  std::size_t max_product_size = 4096;
  std::string out;
  std::string format = "text";

  bool json_out() const { return format == "json"; }
};

std::string utc_now() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_report(const Opts& g, json report) {
  if (g.out.empty()) return;
  report["generated_at"] = utc_now();
  std::ofstream f(g.out);
  if (!f) throw io_error("cannot open " + g.out + " for writing");
  f << report.dump(2) << "\n";
}

void emit(const Opts& g, const json& report, const std::string& text) {
  if (g.json_out())
    std::cout << report.dump(2) << "\n";
  else if (!text.empty())
    std::cout << text;
  write_report(g, report);
}

Value parse_value(const std::string& s, const char* what) {
  auto v = Value::parse(s);
  if (!v) throw std::runtime_error(std::string(what) + ": not a rational in [0,1]: " + s);
  return *v;
}

Assignment parse_assignment(const std::string& s) {
  Assignment a;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::runtime_error("bad assignment entry (want var=element): " + item);
    a[item.substr(0, eq)] = std::stoi(item.substr(eq + 1));
  }
  return a;
}

int cmd_parse(const Opts& g, const std::string& vocab_path, const std::string& text, bool fo) {
  VocabPtr v = load_vocabulary(vocab_path);
  std::string rendered;
  json extra;
  if (fo) {
    rendered = render_formula(parse_fo_formula(text, *v));
  } else {
    ContFormula f = parse_cont_formula(text, *v);
    rendered = render_formula(f);
    extra["sentence"] = is_sentence(f);
  }
  json rep{{"command", "parse"}, {"input", text}, {"rendered", rendered}};
  for (auto& [k, val] : extra.items()) rep[k] = val;
  emit(g, rep, rendered + "\n");
  return 0;
}

int cmd_eval(const Opts& g, const std::string& in, const std::string& text, const std::string& assign, bool fo) {
  Assignment a = parse_assignment(assign);
  json rep{{"command", "eval"}, {"formula", text}};
  std::string shown;
  if (fo) {
    FOStructure k = load_fo_structure(in);
    bool holds = eval_formula(k, parse_fo_formula(text, k.vocab()), a);
    rep["holds"] = holds;
    shown = holds ? "true\n" : "false\n";
  } else {
    GeneralStructure m = load_general_structure(in);
    Value val = eval_formula(m, parse_cont_formula(text, m.vocab()), a);
    rep["value"] = val.str();
    shown = val.str() + "\n";
  }
  emit(g, rep, shown);
  return 0;
}

int cmd_classify(const Opts& g, const std::string& vocab_path, const std::string& text, bool fo) {
  VocabPtr v = load_vocabulary(vocab_path);
  json rep{{"command", "classify"}, {"input", text}};
  std::ostringstream out;
  auto line = [&](const char* name, bool flag, const std::map<std::string, std::string>& w) {
    out << name << ": " << (flag ? "yes" : "no");
    auto it = w.find(name);
    if (it != w.end()) out << "  [" << it->second << "]";
    out << "\n";
    rep["classes"][name] = flag;
    if (it != w.end()) rep["witnesses"][name] = it->second;
  };
  if (fo) {
    HornClassification c = classify_horn(parse_fo_formula(text, *v));
    line("basic_horn", c.basic_horn, c.witnesses);
    line("horn", c.horn, c.witnesses);
  } else {
    ContClassification c = classify_cont(parse_cont_formula(text, *v));
    line("quantifier_free", c.quantifier_free, c.witnesses);
    line("restricted", c.restricted, c.witnesses);
    line("primitive_conditional", c.primitive_conditional, c.witnesses);
    line("conditional", c.conditional, c.witnesses);
    line("existential", c.existential, c.witnesses);
    line("universal", c.universal, c.witnesses);
    line("positive", c.positive, c.witnesses);
  }
  emit(g, rep, out.str());
  return 0;
}

int cmd_translate(const Opts& g, const std::string& vocab_path, const std::string& text) {
  VocabPtr v = load_vocabulary(vocab_path);
  ContFormula c = fo_to_cont(parse_fo_formula(text, *v));
  std::string rendered = render_formula(c);
  ContClassification cls = classify_cont(c);
  json rep{{"command", "translate"},
           {"input", text},
           {"rendered", rendered},
           {"conditional", cls.conditional}};
  emit(g, rep, rendered + "\n");
  return 0;
}

int cmd_down(const Opts& g, const std::string& in, const std::string& out) {
  GeneralStructure m = load_general_structure(in);
  std::vector<std::string> warnings;
  FOStructure k = structure_down(m, Grid(g.grid), &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  if (out.empty())
    write_fo_structure(std::cout, k);
  else
    save_fo_structure(out, k);
  json rep{{"command", "down"}, {"grid", g.grid}, {"universe", k.universe()}, {"warnings", warnings}};
  if (g.json_out()) std::cout << rep.dump(2) << "\n";
  write_report(g, rep);
  return 0;
}

int cmd_up(const Opts& g, const std::string& in, const std::string& out) {
  FOStructure k = load_fo_structure(in);
  GeneralStructure m = structure_up(k, Grid(g.grid));
  if (out.empty())
    write_general_structure(std::cout, m);
  else
    save_general_structure(out, m);
  json rep{{"command", "up"}, {"grid", g.grid}, {"universe", m.universe()}};
  if (g.json_out()) std::cout << rep.dump(2) << "\n";
  write_report(g, rep);
  return 0;
}

int cmd_product(const Opts& g, const std::string& kind, const std::string& filter_spec,
                const std::vector<std::string>& files, const std::string& out, bool serial) {
  ProductOptions popts;
  popts.max_universe = g.max_product_size;
  popts.parallel = !serial;
  json rep{{"command", "product"}, {"kind", kind}, {"filter", filter_spec}, {"factors", files.size()}};
  if (kind == "fo") {
    std::vector<FOStructure> factors;
    for (const auto& p : files) factors.push_back(load_fo_structure(p));
    Filter f = parse_filter_spec(filter_spec, (int)factors.size());
    FOStructure prod = fo_reduced_product(factors, f, popts);
    rep["universe"] = prod.universe();
    if (out.empty())
      write_fo_structure(std::cout, prod);
    else
      save_fo_structure(out, prod);
  } else if (kind == "pre" || kind == "reduced") {
    std::vector<GeneralStructure> factors;
    for (const auto& p : files) factors.push_back(load_general_structure(p));
    IndexedFamily fam(std::move(factors));
    Filter f = parse_filter_spec(filter_spec, fam.size());
    GeneralStructure prod =
        kind == "pre" ? pre_reduced_product(fam, f, popts) : reduced_product(fam, f, popts).first;
    rep["universe"] = prod.universe();
    if (out.empty())
      write_general_structure(std::cout, prod);
    else
      save_general_structure(out, prod);
  } else {
    throw std::runtime_error("unknown product kind (want pre|reduced|fo): " + kind);
  }
  if (g.json_out()) std::cout << rep.dump(2) << "\n";
  write_report(g, rep);
  return 0;
}

int cmd_check(const Opts& g, const std::string& formula, const std::string& filter_spec,
              const std::vector<std::string>& files, const std::string& eps_text) {
  std::vector<GeneralStructure> factors;
  for (const auto& p : files) factors.push_back(load_general_structure(p));
  IndexedFamily fam(std::move(factors));
  Filter f = parse_filter_spec(filter_spec, fam.size());
  ContFormula phi = parse_cont_formula(formula, *fam.vocab_ptr());
  ProductOptions popts;
  popts.max_universe = g.max_product_size;

  std::vector<Value> eps_list;
  if (!eps_text.empty()) {
    eps_list.push_back(parse_value(eps_text, "--eps"));
  } else {
    Grid grid(g.grid);
    for (long long j = 0; j < grid.den(); ++j) eps_list.push_back(grid.point(j));
    eps_list.push_back(Value::one());
    for (int i = 0; i < fam.size(); ++i) eps_list.push_back(eval_formula(fam.factor(i), phi));
    std::sort(eps_list.begin(), eps_list.end());
    eps_list.erase(std::unique(eps_list.begin(), eps_list.end()), eps_list.end());
  }

  json rep{{"command", "check"}, {"formula", formula}, {"filter", filter_spec}};
  json checks = json::array();
  std::ostringstream out;
  bool violated = false;
  for (Value eps : eps_list) {
    PreservationTrial t = check_preservation(fam, f, phi, eps, popts);
    violated = violated || t.violated;
    json c{{"eps", eps.str()},
           {"hypothesis", t.hypothesis},
           {"product_value", t.product_value.str()},
           {"verdict", t.violated ? "violated" : "preserved"}};
    checks.push_back(c);
    out << "eps=" << eps.str() << "  hypothesis=" << (t.hypothesis ? "yes" : "no ")
        << "  product=" << t.product_value.str() << "  " << (t.violated ? "VIOLATED" : "preserved") << "\n";
  }
  rep["checks"] = checks;
  rep["violated"] = violated;
  out << (violated ? "verdict: VIOLATED\n" : "verdict: preserved\n");
  emit(g, rep, out.str());
  return violated ? 1 : 0;
}

int cmd_search(const Opts& g, const std::string& vocab_path, const std::string& formula, int max_index,
               int max_universe) {
  VocabPtr v = load_vocabulary(vocab_path);
  ContFormula phi = parse_cont_formula(formula, *v);
  InstanceSpec budget;
  budget.seed = g.seed;
  budget.trials = g.trials;
  budget.grid_k = g.grid;
  budget.max_product_size = g.max_product_size;
  budget.max_index = max_index;
  budget.max_universe = max_universe;
  budget.min_universe = 1;

  auto w = search_counterexample(v, phi, budget);
  json rep{{"command", "search"}, {"formula", formula}, {"trials", g.trials}, {"found", w.has_value()}};
  std::ostringstream out;
  if (w) {
    json fv = json::array();
    for (const auto& val : w->factor_values) fv.push_back(val.str());
    rep["witness"] = {{"trial", w->trial},
                      {"seed", std::to_string(w->seed)},
                      {"index_size", w->filter.index_size()},
                      {"kernel", w->filter.kernel()},
                      {"eps", w->eps.str()},
                      {"factor_values", fv},
                      {"product_value", w->product_value.str()}};
    out << "violation at trial " << w->trial << " (seed " << w->seed << ")\n";
    out << "  index size " << w->filter.index_size() << ", kernel {";
    for (size_t i = 0; i < w->filter.kernel().size(); ++i) out << (i ? "," : "") << w->filter.kernel()[i];
    out << "}, eps " << w->eps.str() << "\n  factor values:";
    for (const auto& val : w->factor_values) out << " " << val.str();
    out << "\n  product value " << w->product_value.str() << "\n";
    for (size_t i = 0; i < w->factors.size(); ++i) {
      out << "factor " << i << ":\n";
      std::ostringstream s;
      write_general_structure(s, w->factors[i]);
      out << s.str();
    }
  } else {
    out << "no violation within " << g.trials << " trials\n";
  }
  emit(g, rep, out.str());
  return w ? 1 : 0;
}

int cmd_suite(const Opts& g, const std::string& name, const SuiteOptions& base) {
  std::vector<std::string> names;
  if (name == "all")
    names = suite_names();
  else
    names.push_back(name);

  json reports = json::array();
  bool all_pass = true;
  std::ostringstream out;
  for (const auto& n : names) {
    SuiteResult r = run_suite(n, base);
    all_pass = all_pass && r.pass;
    reports.push_back(json::parse(r.report_json));
    out << "suite " << n << ": " << (r.pass ? "pass" : "FAIL") << " (" << r.checks << " checks, " << r.violations
        << " violations)\n";
    if (!r.pass) out << "  first violation: " << r.first_violation << "\n";
  }
  json rep = names.size() == 1 ? reports[0] : json{{"command", "suite"}, {"suites", reports}};
  emit(g, rep, out.str());
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for [0,1]-valued model theory on finite structures"};
  app.require_subcommand(1);
  app.fallthrough();

  Opts g;
  app.add_option("--seed", g.seed, "master seed");
  app.add_option("--trials", g.trials, "trial count for seeded commands");
  app.add_option("--grid", g.grid, "grid exponent k; values move on multiples of 1/2^k")->check(CLI::Range(1, 20));
  app.add_option("--max-product-size", g.max_product_size, "cap on product universe size");
  app.add_option("--out", g.out, "write a JSON report here");
  app.add_option("--format", g.format, "stdout format")->check(CLI::IsMember({"text", "json"}));

  std::string vocab_path, formula, in_path, out_path, assign, filter_spec = "full", kind = "reduced", eps;
  std::vector<std::string> files;
  bool fo = false, serial = false;
  int max_index = 3, max_universe = 3;

  auto* parse_cmd = app.add_subcommand("parse", "parse a formula and print its canonical form");
  parse_cmd->add_option("--vocab", vocab_path, "vocabulary file")->required();
  parse_cmd->add_option("formula", formula, "formula text")->required();
  parse_cmd->add_flag("--fo", fo, "treat the formula as two-valued first-order");

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a formula on a structure");
  eval_cmd->add_option("--in", in_path, "structure file")->required();
  eval_cmd->add_option("formula", formula, "formula text")->required();
  eval_cmd->add_option("--assign", assign, "free-variable assignment, e.g. x=0,y=2");
  eval_cmd->add_flag("--fo", fo, "two-valued structure and formula");

  auto* classify_cmd = app.add_subcommand("classify", "report the syntactic classes of a formula");
  classify_cmd->add_option("--vocab", vocab_path, "vocabulary file")->required();
  classify_cmd->add_option("formula", formula, "formula text")->required();
  classify_cmd->add_flag("--fo", fo, "classify as a Horn candidate instead");

  auto* translate_cmd = app.add_subcommand("translate", "continuous counterpart of a first-order formula");
  translate_cmd->add_option("--vocab", vocab_path, "vocabulary file")->required();
  translate_cmd->add_option("formula", formula, "equality-free first-order formula")->required();

  auto* down_cmd = app.add_subcommand("down", "threshold expansion of a reduced structure");
  down_cmd->add_option("--in", in_path, "reduced structure file")->required();
  down_cmd->add_option("--out", out_path, "output file (stdout when omitted)");

  auto* up_cmd = app.add_subcommand("up", "rebuild a structure from its threshold expansion");
  up_cmd->add_option("--in", in_path, "two-valued threshold structure")->required();
  up_cmd->add_option("--out", out_path, "output file (stdout when omitted)");

  auto* product_cmd = app.add_subcommand("product", "product of finitely many structures along a filter");
  product_cmd->add_option("--kind", kind, "pre | reduced | fo")->check(CLI::IsMember({"pre", "reduced", "fo"}));
  product_cmd->add_option("--filter", filter_spec, "full | kernel=0,2 | subbasis={0,1};{1,2}");
  product_cmd->add_option("factors", files, "factor structure files")->required();
  product_cmd->add_option("--out", out_path, "output file (stdout when omitted)");
  product_cmd->add_flag("--serial", serial, "disable the parallel table fill");

  auto* check_cmd = app.add_subcommand("check", "preservation check for one family and sentence");
  check_cmd->add_option("--formula", formula, "sentence to check")->required();
  check_cmd->add_option("--filter", filter_spec, "full | kernel=0,2 | subbasis={0,1};{1,2}");
  check_cmd->add_option("factors", files, "factor structure files")->required();
  check_cmd->add_option("--eps", eps, "single threshold (default: sweep grid points and factor values)");

  auto* search_cmd = app.add_subcommand("search", "seeded search for a preservation counterexample");
  search_cmd->add_option("--vocab", vocab_path, "vocabulary file")->required();
  search_cmd->add_option("--formula", formula, "sentence to attack")->required();
  search_cmd->add_option("--max-index", max_index, "largest index set tried");
  search_cmd->add_option("--max-universe", max_universe, "largest factor universe tried");

  auto* suite_cmd = app.add_subcommand("suite", "run a named invariant suite");
  std::string suite_name = "all";
  {
    std::string choices;
    for (const auto& n : suite_names()) choices += (choices.empty() ? "" : " | ") + n;
    suite_cmd->add_option("name", suite_name, "all | " + choices);
  }
  suite_cmd->add_flag("--serial", serial, "run trials on one thread");
  int depth = 4, spec_max_universe = 3, spec_min_universe = 1, spec_max_index = 3;
  std::string formula_class = "conditional";
  suite_cmd->add_option("--depth", depth, "formula depth");
  suite_cmd->add_option("--class", formula_class, "formula class drawn by generator suites");
  suite_cmd->add_option("--max-universe", spec_max_universe, "largest factor universe");
  suite_cmd->add_option("--min-universe", spec_min_universe, "smallest factor universe");
  suite_cmd->add_option("--max-index", spec_max_index, "largest index set");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (parse_cmd->parsed()) return cmd_parse(g, vocab_path, formula, fo);
    if (eval_cmd->parsed()) return cmd_eval(g, in_path, formula, assign, fo);
    if (classify_cmd->parsed()) return cmd_classify(g, vocab_path, formula, fo);
    if (translate_cmd->parsed()) return cmd_translate(g, vocab_path, formula);
    if (down_cmd->parsed()) return cmd_down(g, in_path, out_path);
    if (up_cmd->parsed()) return cmd_up(g, in_path, out_path);
    if (product_cmd->parsed()) return cmd_product(g, kind, filter_spec, files, out_path, serial);
    if (check_cmd->parsed()) return cmd_check(g, formula, filter_spec, files, eps);
    if (search_cmd->parsed()) return cmd_search(g, vocab_path, formula, max_index, max_universe);
    if (suite_cmd->parsed()) {
      SuiteOptions opts;
      opts.parallel = !serial;
      opts.spec.seed = g.seed;
      opts.spec.trials = g.trials;
      opts.spec.grid_k = g.grid;
      opts.spec.max_product_size = g.max_product_size;
      opts.spec.depth = depth;
      opts.spec.max_universe = spec_max_universe;
      opts.spec.min_universe = spec_min_universe;
      opts.spec.max_index = spec_max_index;
      auto cls = formula_class_from_string(formula_class);
      if (!cls) throw std::runtime_error("unknown formula class: " + formula_class);
      opts.spec.formula_class = *cls;
      return cmd_suite(g, suite_name, opts);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
