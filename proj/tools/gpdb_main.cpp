// Copyright 2026 The gpdb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// gpdb — command-line driver for the probabilistic deductive database
// engine. Loads a clause program, evaluates it under the selected semantics
// and reports exact interval answers as text or JSON.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gpdb/errors.hpp"
#include "gpdb/fixpoint.hpp"
#include "gpdb/ground.hpp"
#include "gpdb/interval.hpp"
#include "gpdb/lp.hpp"
#include "gpdb/parser.hpp"
#include "gpdb/stable.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitNegation = 3;
constexpr int kExitBudget = 4;
constexpr int kExitDivergence = 5;

struct Options {
  std::string file;
  bool json = false;
  gpdb::Limits limits;
  std::string query_text;
  std::string semantics = "stable";
  bool hoare = false;
  bool smyth = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open program file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ordered_json interval_json(const gpdb::Interval& v) {
  if (v.is_empty()) return "empty";
  return ordered_json{{"lo", v.lo().to_string()}, {"hi", v.hi().to_string()}};
}

ordered_json values_json(const gpdb::GroundProgram& g, const gpdb::FormulaFunction& h) {
  ordered_json out = ordered_json::object();
  for (std::size_t i = 0; i < g.tracked.size(); ++i)
    out[g.tracked[i].to_string()] = interval_json(h.at(i));
  return out;
}

void print_function(std::ostream& os, const gpdb::GroundProgram& g,
                    const gpdb::FormulaFunction& h, const std::string& indent) {
  for (std::size_t i = 0; i < g.tracked.size(); ++i)
    os << indent << g.tracked[i].to_string() << " |-> " << h.at(i).to_string() << "\n";
}

ordered_json diagnostics_json(const gpdb::EvalStats& stats) {
  return ordered_json{{"iterations", stats.iterations},
                      {"lp_calls", stats.lp_calls},
                      {"infeasible_steps", stats.infeasible_steps}};
}

ordered_json report_skeleton(const char* command, const Options& opt,
                             const gpdb::GroundProgram& g) {
  ordered_json report;
  report["command"] = command;
  report["program"] = opt.file;
  report["base_size"] = g.base.size();
  return report;
}

// Interval hull of a set of answers; the spread across stable functions is
// reported as-is, the hull is only a labeled convenience.
gpdb::Interval hull_of(const std::vector<gpdb::Interval>& vs) {
  gpdb::Interval out = gpdb::Interval::empty();
  for (const gpdb::Interval& v : vs) {
    if (v.is_empty()) continue;
    if (out.is_empty()) {
      out = v;
    } else {
      out = gpdb::Interval::closed(gpdb::min(out.lo(), v.lo()), gpdb::max(out.hi(), v.hi()));
    }
  }
  return out;
}

int run_check(const Options& opt, const gpdb::GpProgram& p, const gpdb::GroundProgram& g) {
  const std::size_t keys = gpdb::blocking_keys(g).size();
  const std::uint64_t worlds = gpdb::world_count(g.base.size(), opt.limits);
  if (opt.json) {
    ordered_json report = report_skeleton("check", opt, g);
    report["results"] = ordered_json::array({ordered_json{{"clauses", p.clauses.size()},
                                                          {"ground_clauses", g.clauses.size()},
                                                          {"worlds", worlds},
                                                          {"tracked", g.tracked.size()},
                                                          {"blocking_keys", keys},
                                                          {"is_pf", g.pf}}});
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "program: " << opt.file << "\n"
              << "clauses: " << p.clauses.size() << "\n"
              << "ground clauses: " << g.clauses.size() << "\n"
              << "base size: " << g.base.size() << " (" << worlds << " worlds)\n"
              << "tracked formulas: " << g.tracked.size() << "\n"
              << "blocking keys: " << keys << "\n"
              << "pf: " << (g.pf ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int run_lfp(const Options& opt, const gpdb::GroundProgram& g) {
  gpdb::EvalStats stats;
  const gpdb::FormulaFunction h = gpdb::lfp(g, opt.limits, &stats);
  if (opt.json) {
    ordered_json report = report_skeleton("lfp", opt, g);
    ordered_json results = ordered_json::array();
    for (std::size_t i = 0; i < g.tracked.size(); ++i)
      results.push_back(ordered_json{{"formula", g.tracked[i].to_string()},
                                     {"interval", interval_json(h.at(i))}});
    report["results"] = results;
    report["diagnostics"] = diagnostics_json(stats);
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "least fixpoint reached after " << stats.iterations << " iterations\n";
    print_function(std::cout, g, h, "  ");
  }
  return kExitOk;
}

int run_stable(const Options& opt, const gpdb::GroundProgram& g) {
  gpdb::EvalStats stats;
  const std::vector<gpdb::FormulaFunction> fns =
      gpdb::enumerate_stable_functions(g, opt.limits, &stats);
  const char* note =
      fns.empty() ? "no stable formula function; alternating class available" : "";
  if (opt.json) {
    ordered_json report = report_skeleton("stable", opt, g);
    ordered_json results = ordered_json::array();
    for (std::size_t i = 0; i < fns.size(); ++i)
      results.push_back(
          ordered_json{{"name", "h" + std::to_string(i + 1)}, {"values", values_json(g, fns[i])}});
    report["results"] = results;
    if (*note) report["note"] = note;
    report["diagnostics"] = diagnostics_json(stats);
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "stable formula functions: " << fns.size() << "\n";
    for (std::size_t i = 0; i < fns.size(); ++i) {
      std::cout << "h" << (i + 1) << ":\n";
      print_function(std::cout, g, fns[i], "  ");
    }
    if (*note) std::cout << note << "\n";
  }
  return kExitOk;
}

int run_classes(const Options& opt, const gpdb::GroundProgram& g) {
  gpdb::EvalStats stats;
  const std::vector<gpdb::StableClass> classes =
      gpdb::minimal_stable_classes(g, opt.limits, &stats);
  const std::vector<gpdb::StableClass> hoare = gpdb::hoare_minimal(classes);
  const std::vector<gpdb::StableClass> smyth = gpdb::smyth_minimal(classes);

  auto name_of = [&classes](const gpdb::StableClass& c) {
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (classes[i] == c) return "C" + std::to_string(i + 1);
    return std::string("?");
  };
  const std::vector<gpdb::StableClass>& selected =
      opt.hoare ? hoare : (opt.smyth ? smyth : classes);

  if (opt.json) {
    ordered_json report = report_skeleton("classes", opt, g);
    ordered_json results = ordered_json::array();
    for (const gpdb::StableClass& c : selected) {
      ordered_json fns = ordered_json::array();
      for (std::size_t i = 0; i < c.members().size(); ++i)
        fns.push_back(ordered_json{{"name", "h" + std::to_string(i + 1)},
                                   {"values", values_json(g, c.members()[i])}});
      results.push_back(ordered_json{{"name", name_of(c)}, {"functions", fns}});
    }
    report["results"] = results;
    ordered_json hoare_names = ordered_json::array();
    for (const auto& c : hoare) hoare_names.push_back(name_of(c));
    ordered_json smyth_names = ordered_json::array();
    for (const auto& c : smyth) smyth_names.push_back(name_of(c));
    report["hoare_minimal"] = hoare_names;
    report["smyth_minimal"] = smyth_names;
    report["diagnostics"] = diagnostics_json(stats);
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "minimal stable classes: " << classes.size() << "\n";
    for (const gpdb::StableClass& c : selected) {
      std::cout << name_of(c) << " (" << c.size() << " function" << (c.size() == 1 ? "" : "s")
                << "):\n";
      for (std::size_t i = 0; i < c.members().size(); ++i) {
        std::cout << "  h" << (i + 1) << ":\n";
        print_function(std::cout, g, c.members()[i], "    ");
      }
    }
    auto names = [&](const std::vector<gpdb::StableClass>& cs) {
      std::string out;
      for (const auto& c : cs) {
        if (!out.empty()) out += ", ";
        out += name_of(c);
      }
      return out.empty() ? std::string("none") : out;
    };
    std::cout << "hoare-minimal: " << names(hoare) << "\n";
    std::cout << "smyth-minimal: " << names(smyth) << "\n";
  }
  return kExitOk;
}

int run_query(const Options& opt, const gpdb::GroundProgram& g0) {
  const gpdb::BasicFormula query = gpdb::parse_basic_formula(opt.query_text);
  const gpdb::GroundProgram g = gpdb::with_extra_tracked(g0, {query});
  const std::size_t qidx = g.tracked_index(query);

  gpdb::EvalStats stats;
  std::vector<std::pair<std::string, gpdb::Interval>> answers;
  if (opt.semantics == "lfp") {
    answers.emplace_back("lfp", gpdb::lfp(g, opt.limits, &stats).at(qidx));
  } else if (opt.semantics == "stable") {
    const auto fns = gpdb::enumerate_stable_functions(g, opt.limits, &stats);
    for (std::size_t i = 0; i < fns.size(); ++i)
      answers.emplace_back("h" + std::to_string(i + 1), fns[i].at(qidx));
  } else {
    auto classes = gpdb::minimal_stable_classes(g, opt.limits, &stats);
    if (opt.semantics == "hoare") classes = gpdb::hoare_minimal(classes);
    if (opt.semantics == "smyth") classes = gpdb::smyth_minimal(classes);
    for (std::size_t ci = 0; ci < classes.size(); ++ci)
      for (std::size_t i = 0; i < classes[ci].members().size(); ++i)
        answers.emplace_back("C" + std::to_string(ci + 1) + "/h" + std::to_string(i + 1),
                             classes[ci].members()[i].at(qidx));
  }

  std::vector<gpdb::Interval> intervals;
  intervals.reserve(answers.size());
  for (const auto& [name, v] : answers) intervals.push_back(v);
  const gpdb::Interval hull = hull_of(intervals);

  if (opt.json) {
    ordered_json report = report_skeleton("query", opt, g);
    report["formula"] = query.to_string();
    report["semantics"] = opt.semantics;
    ordered_json results = ordered_json::array();
    for (const auto& [name, v] : answers)
      results.push_back(ordered_json{{"under", name}, {"interval", interval_json(v)}});
    report["results"] = results;
    report["hull"] = interval_json(hull);
    report["diagnostics"] = diagnostics_json(stats);
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "query: " << query.to_string() << " (semantics: " << opt.semantics << ")\n";
    if (answers.empty()) std::cout << "no answers under this semantics\n";
    for (const auto& [name, v] : answers)
      std::cout << "under " << name << ": " << query.to_string() << " |-> " << v.to_string()
                << "\n";
    if (!answers.empty()) std::cout << "hull: " << hull.to_string() << "\n";
  }
  return kExitOk;
}

int dispatch(const std::string& command, const Options& opt) {
  const std::string text = read_file(opt.file);
  const gpdb::GpProgram program = gpdb::parse_program(text);
  const gpdb::GroundProgram ground = gpdb::ground_program(program, opt.limits);
  if (command == "check") return run_check(opt, program, ground);
  if (command == "lfp") return run_lfp(opt, ground);
  if (command == "stable") return run_stable(opt, ground);
  if (command == "classes") return run_classes(opt, ground);
  if (command == "query") return run_query(opt, ground);
  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"probabilistic deductive database engine with non-monotonic negation"};
  app.require_subcommand(1);

  Options opt;
  std::string command;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", opt.file, "program file (.gp)")->required();
    sub->add_flag("--json", opt.json, "structured JSON output");
    sub->add_option("--max-atoms", opt.limits.max_atoms, "Herbrand base budget");
    sub->add_option("--max-neg", opt.limits.max_neg, "distinct negated literal budget");
    sub->add_option("--max-iters", opt.limits.max_iters, "fixpoint iteration budget");
    sub->callback([&command, sub] { command = sub->get_name(); });
    return sub;
  };

  add_common(app.add_subcommand("check", "parse and ground the program, print a summary"));
  add_common(app.add_subcommand("lfp", "least fixpoint of a negation-free program"));
  add_common(app.add_subcommand("stable", "enumerate stable formula functions"));
  CLI::App* classes = add_common(app.add_subcommand("classes", "minimal stable classes"));
  classes->add_flag("--hoare", opt.hoare, "print only Hoare-minimal classes");
  classes->add_flag("--smyth", opt.smyth, "print only Smyth-minimal classes");
  CLI::App* query =
      add_common(app.add_subcommand("query", "interval answer for one formula"));
  query->add_option("-F,--formula", opt.query_text, "ground basic formula, e.g. \"a ^ b\"")
      ->required();
  query->add_option("--semantics", opt.semantics, "lfp | stable | classes | hoare | smyth")
      ->check(CLI::IsMember({"lfp", "stable", "classes", "hoare", "smyth"}));

  CLI11_PARSE(app, argc, argv);

  try {
    return dispatch(command, opt);
  } catch (const gpdb::ParseError& e) {
    std::cerr << "parse error: " << opt.file << ":" << e.what() << "\n";
    return kExitParse;
  } catch (const gpdb::NegationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNegation;
  } catch (const gpdb::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const gpdb::DivergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDivergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
