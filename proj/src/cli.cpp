#include "serret/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <regex>

#include <CLI11.hpp>

#include "serret/errors.hpp"
#include "serret/expansion.hpp"
#include "serret/io.hpp"
#include "serret/transducer.hpp"

namespace serret {

namespace {

struct Options {
  std::string spec;
  std::string value;
  std::string window;
  std::string dot;
  bool json = false;
  bool strict = false;
  long long max_steps = 100000;
  long long bound = 0;
  int radius = 3;
  int depth = 3;
  int samples = 10000;
  int length = 64;
  std::uint64_t seed = 1;
};

struct Outcome {
  Json report;
  int code = kExitOk;
};

bool is_validation(ErrorKind k) {
  switch (k) {
    case ErrorKind::BadDeterminant:
    case ErrorKind::NegativeEntries:
    case ErrorKind::NotAPartition:
    case ErrorKind::WrongOrder:
    case ErrorKind::TooFewBranches:
    case ErrorKind::Parse:
      return true;
    default:
      return false;
  }
}

void write_dot(const std::string& path, const std::string& text) {
  if (path.empty()) return;
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::Domain, "cannot write " + path);
  f << text;
}

Window window_of(const Options& o, const SpecFile& s) {
  if (!o.window.empty()) return parse_window_text(o.window);
  if (s.window) return *s.window;
  throw Error(ErrorKind::Parse, "a window is needed: pass --window i,j or put one in the spec");
}

Point value_of(const Options& o) {
  if (o.value.empty()) throw Error(ErrorKind::Parse, "--value is required");
  return parse_value(o.value);
}

Json analyze_json(const SlowAlgorithm& t, const Options& o) {
  AlgGraph g = build_graph(t);
  Quotient q = schreier_quotient(g);
  Fingerprint f = fingerprint(t, q.schreier);
  Transducer gt = gt_transducer(g);
  Json j = {{"index", f.index}, {"class", f.group_class}};
  j["fingerprint"] = fingerprint_json(f);
  j["defect"] = defect_json(defect(t, g, q.fibration), g);
  j["serret"] = verdict_json(serret_check(t, o.bound, o.seed));
  j["sync"] = sync_json(sync_check(gt), gt);
  return j;
}

Outcome dispatch(const std::string& cmd, const Options& o, std::istream& in) {
  Outcome res;
  if (cmd == "convert") {
    std::string text = o.value;
    if (text.empty()) std::getline(in, text);
    text.erase(std::remove_if(text.begin(), text.end(), ::isspace), text.end());
    static const std::regex upword("[LN]*\\([LN]+\\)");
    if (std::regex_match(text, upword)) {
      UPWord z = UPWord::parse_letters(text);
      res.report = {{"word", z.to_letters()}, {"value", to_json(pi_value(z))}};
      return res;
    }
    Point x = parse_value(text);
    res.report["value"] = to_json(x);
    if (const auto* q = std::get_if<QuadIrr>(&x)) {
      res.report["ln"] = ln_expansion(*q).to_letters();
    } else {
      SlowAlgorithm ln = SlowAlgorithm::from_words({"L", "N"});
      OrbitResult r = orbit(ln, x, o.max_steps);
      res.report["ln"] = symbols_text(r.finite, true);
      if (r.alternative) res.report["ln_alternative"] = symbols_text(*r.alternative, true);
    }
    return res;
  }

  SpecFile spec = load_spec(o.spec);
  const SlowAlgorithm& t = spec.algorithm;

  if (cmd == "validate") {
    res.report = {{"valid", true}, {"branches", algorithm_json(t)["branches"]}};
  } else if (cmd == "analyze") {
    res.report = analyze_json(t, o);
    if (o.strict && res.report["serret"]["verdict"] == "undecided") res.code = kExitUndecided;
  } else if (cmd == "graph") {
    AlgGraph g = build_graph(t);
    Quotient q = schreier_quotient(g);
    res.report = graph_json(g, &q.fibration);
    write_dot(o.dot, export_dot(g));
  } else if (cmd == "schreier") {
    Quotient q = schreier_quotient(build_graph(t));
    res.report = schreier_json(q.schreier);
    write_dot(o.dot, export_dot(q.schreier));
  } else if (cmd == "transducer") {
    AlgGraph g = build_graph(t);
    Quotient q = schreier_quotient(g);
    CommutatorTransducers ft = build_ft(t, g, q.fibration);
    res.report = {{"graph", transducer_json(gt_transducer(g), true)},
                  {"full", transducer_json(ft.full, false)},
                  {"pruned", transducer_json(ft.pruned, false)}};
  } else if (cmd == "expand") {
    Point x = value_of(o);
    res.report = {{"value", to_json(x)}};
    Json orb = orbit_json(orbit(t, x, o.max_steps), !is_rational(x), t.size());
    res.report.update(orb);
  } else if (cmd == "serret") {
    SerretVerdict v = serret_check(t, o.bound, o.seed);
    res.report = verdict_json(v);
    if (o.strict && v.kind == SerretKind::Undecided) res.code = kExitUndecided;
  } else if (cmd == "sync") {
    AlgGraph g = build_graph(t);
    Transducer gt = gt_transducer(g);
    res.report = sync_json(sync_check(gt), gt);
    res.report["sampling"] = {{"samples", o.samples},
                              {"length", o.length},
                              {"unsynchronized_fraction", unsynchronized_fraction(gt, o.samples, o.length, o.seed)}};
  } else if (cmd == "accelerate") {
    Window w = window_of(o, spec);
    UnimodInterval e = window_interval(t, w);
    res.report["window"] = Json::array({e.left.to_string(), e.right.to_string()});
    Json branches = Json::array();
    for (const auto& m : accel_branches(t, w, o.depth)) branches.push_back(to_json(m));
    res.report["depth"] = o.depth;
    res.report["branches"] = branches;
    if (!o.value.empty()) {
      FirstReturn r = first_return(t, w, value_of(o), o.max_steps);
      res.report["first_return"] = {{"status", to_string(r.status)},
                                    {"value", to_json(r.value)},
                                    {"time", r.time},
                                    {"symbols", symbols_text(r.symbols)},
                                    {"ambiguous", r.ambiguous}};
    }
  } else if (cmd == "census") {
    Point x = value_of(o);
    const auto* q = std::get_if<QuadIrr>(&x);
    if (!q) throw Error(ErrorKind::Domain, "census needs a quadratic irrational");
    CensusResult c = census(t, *q, o.radius);
    Json classes = Json::array();
    for (const auto& p : c.classes) classes.push_back("(" + symbols_text(p) + ")");
    res.report = {{"radius", o.radius},
                  {"ball_size", c.ball_size},
                  {"points", c.points},
                  {"classes", c.classes.size()},
                  {"tails", classes}};
  }
  return res;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analysis of slow continued fraction algorithms", "serret-lab"};
  app.require_subcommand(1, 1);
  Options o;

  struct Cmd {
    const char* name;
    const char* help;
  };
  const Cmd cmds[] = {
      {"validate", "check a spec file"},
      {"analyze", "index, fingerprint, defect, tail property and synchronization"},
      {"graph", "the graph of left factors and its map to the Schreier graph"},
      {"schreier", "Schreier graph of the branch group"},
      {"transducer", "orbit transducers of the algorithm"},
      {"expand", "symbolic orbit of --value"},
      {"convert", "value to LN word, or LN word x(y) to value"},
      {"serret", "decide the tail property"},
      {"sync", "synchronizing word of the graph transducer"},
      {"accelerate", "branches of the first-return map to a window"},
      {"census", "tail classes in a ball around --value"},
  };
  for (const auto& c : cmds) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    std::string name = c.name;
    if (name == "convert") {
      sub->add_option("--value", o.value, "value or LN word; read from stdin when absent");
    } else {
      sub->add_option("spec", o.spec, "spec file (JSON)")->required();
      sub->add_option("--value", o.value, "exact value such as 3/7 or (1+sqrt(5))/2");
    }
    sub->add_flag("--json", o.json, "JSON output");
    sub->add_option("--max-steps", o.max_steps, "step bound for orbits")->check(CLI::PositiveNumber);
    if (name == "graph" || name == "schreier") sub->add_option("--dot", o.dot, "write a DOT graph to FILE");
    if (name == "accelerate") {
      sub->add_option("--window", o.window, "i,j[,open_right|open_left|open]");
      sub->add_option("--depth", o.depth, "longest excursion outside the window")->check(CLI::NonNegativeNumber);
    }
    if (name == "analyze" || name == "serret") {
      sub->add_option("--bound", o.bound, "longest cycle searched; 0 picks 4 x states")->check(CLI::NonNegativeNumber);
      sub->add_flag("--strict", o.strict, "exit 3 when undecided");
    }
    if (name == "analyze" || name == "serret" || name == "sync") sub->add_option("--seed", o.seed, "sampling seed");
    if (name == "sync") {
      sub->add_option("--samples", o.samples, "random inputs sampled")->check(CLI::NonNegativeNumber);
      sub->add_option("--length", o.length, "length of each random input")->check(CLI::NonNegativeNumber);
    }
    if (name == "census") sub->add_option("--radius", o.radius, "word length bound")->check(CLI::NonNegativeNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }
  std::string cmd = app.get_subcommands().front()->get_name();
  if (cmd == "expand" || cmd == "census") {
    if (o.value.empty()) {
      err << cmd << ": --value is required\n";
      return kExitUsage;
    }
  }

  try {
    Outcome res = dispatch(cmd, o, std::cin);
    out << (o.json ? res.report.dump(2) + "\n" : render_text(res.report));
    return res.code;
  } catch (const Error& e) {
    if (o.json) out << Json{{"error", to_string(e.kind())}, {"message", e.what()}}.dump(2) << "\n";
    err << e.what() << "\n";
    return is_validation(e.kind()) ? kExitInvalidSpec : kExitFailure;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace serret
