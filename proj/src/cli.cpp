#include "orpath/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "orpath/generators.hpp"
#include "orpath/graph_io.hpp"
#include "orpath/harness.hpp"
#include "orpath/heavy.hpp"
#include "orpath/oracle.hpp"
#include "orpath/path_engine.hpp"

namespace orpath {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") {
    std::ostringstream ss;
    ss << stdin_stream.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) raise(Errc::bad_parameter, "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

GraphFormat parse_format(const std::string& s) {
  if (s == "auto") return GraphFormat::auto_detect;
  if (s == "g6" || s == "graph6") return GraphFormat::graph6;
  if (s == "edgelist" || s == "el") return GraphFormat::edge_list;
  raise(Errc::bad_parameter, "unknown format " + s);
}

Hypothesis parse_hypothesis(const std::string& s) {
  if (s == "p3") return Hypothesis::p3;
  if (s == "claw-z1" || s == "z1") return Hypothesis::claw_z1;
  if (s == "claw-p4" || s == "p4") return Hypothesis::claw_p4;
  if (s == "auto") return Hypothesis::auto_detect;
  raise(Errc::bad_parameter, "unknown hypothesis " + s);
}

void emit(std::ostream& out, const json& j, bool pretty) { out << (pretty ? j.dump(2) : j.dump()) << '\n'; }

}  // namespace

int cli_dispatch(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"certify-or-refute Hamilton path engine for degree-heavy claw conditions"};
  app.require_subcommand(1);

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "emit a generated graph as graph6 (or edge list)");
  std::string family;
  int gk = 3, gn = 9, genm = 1;
  double gp = 0.5;
  std::uint64_t gseed = 1;
  std::string gformat = "g6";
  gen->add_option("--family", family, "pattern name (p5, c3, z1, bull, net, wounded, claw, k5, k3,5) or g1|g2|random|all-connected")
      ->required();
  gen->add_option("--k", gk, "gadget count/size for g1 and g2");
  gen->add_option("--n", gn, "vertex count");
  gen->add_option("--m", genm, "unused placeholder for symmetric options");
  gen->add_option("--p", gp, "edge probability for random");
  gen->add_option("--seed", gseed, "random seed");
  gen->add_option("--format", gformat, "g6 or edgelist");

  // ---- classify ----
  auto* classify_cmd = app.add_subcommand("classify", "hypothesis flags with witnesses");
  std::string cin_path = "-", cformat = "auto";
  int cr = -1;
  bool cjson = false;
  classify_cmd->add_option("--in", cin_path, "input file or - for stdin");
  classify_cmd->add_option("--format", cformat, "auto|g6|edgelist");
  classify_cmd->add_option("--r", cr, "relaxation level (default -1)");
  classify_cmd->add_flag("--json", cjson, "pretty JSON");

  // ---- find ----
  auto* find_cmd = app.add_subcommand("find", "find induced occurrences of a pattern");
  std::string fin_path = "-", fpattern, fformat = "auto";
  bool fall = false, fjson = false;
  find_cmd->add_option("--in", fin_path, "input file or -");
  find_cmd->add_option("--pattern", fpattern, "pattern name")->required();
  find_cmd->add_option("--format", fformat, "auto|g6|edgelist");
  find_cmd->add_flag("--all", fall, "list every occurrence");
  find_cmd->add_flag("--json", fjson, "pretty JSON");

  // ---- solve ----
  auto* solve_cmd = app.add_subcommand("solve", "construct a Hamilton path or refute the hypothesis");
  std::string sin_path = "-", shyp = "auto", sformat = "auto";
  bool sjson = false;
  solve_cmd->add_option("--in", sin_path, "input file or -");
  solve_cmd->add_option("--hypothesis", shyp, "p3|claw-z1|claw-p4|auto");
  solve_cmd->add_option("--format", sformat, "auto|g6|edgelist");
  solve_cmd->add_flag("--json", sjson, "pretty JSON");

  // ---- oracle ----
  auto* oracle_cmd = app.add_subcommand("oracle", "ground-truth traceability");
  std::string oin_path = "-", oformat = "auto";
  int obudget = 1000;
  bool ojson = false;
  oracle_cmd->add_option("--in", oin_path, "input file or -");
  oracle_cmd->add_option("--budget-ms", obudget, "search budget in milliseconds");
  oracle_cmd->add_option("--format", oformat, "auto|g6|edgelist");
  oracle_cmd->add_flag("--json", ojson, "pretty JSON");

  // ---- verify ----
  auto* verify_cmd = app.add_subcommand("verify", "reproduce theorem sweeps and counterexample claims");
  int vtheorem = 0, vmax_n = 0, vsamples = 0, vmin_n = 8, vmax_sample_n = 14, vthreads = 0;
  std::uint64_t vseed = 42;
  bool vcounter = false, vjson = false;
  std::string vcsv;
  verify_cmd->add_option("--theorem", vtheorem, "theorem id: 5, 7 or 8");
  verify_cmd->add_option("--exhaustive-max-n", vmax_n, "exhaustive sweep bound (<= 8)");
  verify_cmd->add_option("--samples", vsamples, "number of sampled graphs");
  verify_cmd->add_option("--min-n", vmin_n, "sample range lower bound");
  verify_cmd->add_option("--max-n", vmax_sample_n, "sample range upper bound");
  verify_cmd->add_option("--seed", vseed, "sample seed");
  verify_cmd->add_option("--threads", vthreads, "worker threads (0 = auto)");
  verify_cmd->add_option("--csv", vcsv, "write per-graph CSV rows to this file");
  verify_cmd->add_flag("--counterexamples", vcounter, "run the counterexample checklist");
  verify_cmd->add_flag("--json", vjson, "pretty JSON");

  // ---- report ----
  auto* report_cmd = app.add_subcommand("report", "combined verification report");
  int rmax_n = 6, rsamples = 1000, rthreads = 0;
  std::uint64_t rseed = 42;
  bool rjson = false;
  report_cmd->add_option("--exhaustive-max-n", rmax_n, "exhaustive bound per theorem");
  report_cmd->add_option("--samples", rsamples, "sampled graphs per theorem");
  report_cmd->add_option("--seed", rseed, "sample seed");
  report_cmd->add_option("--threads", rthreads, "worker threads");
  report_cmd->add_flag("--json", rjson, "pretty JSON");

  try {
    std::vector<const char*> argv;
    argv.push_back("orpath");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (gen->parsed()) {
      if (family == "all-connected") {
        ConnectedEnumerator en(gn);
        while (auto next = en.next()) out << write_graph6(*next) << '\n';
        return 0;
      }
      Graph g = [&]() -> Graph {
        if (family == "g1") {
          if (!in_g1_paper_range(gk, gn))
            err << "warning: G1 parameters outside the intended range (k >= 3, n >= 4k-3)\n";
          return gen_g1(gk, gn);
        }
        if (family == "g2") {
          if (!in_g2_paper_range(gk, gn))
            err << "warning: G2 parameters outside the intended range (k >= 5, n >= 6k+9)\n";
          return gen_g2(gk, gn);
        }
        if (family == "random") return random_connected(gn, gp, gseed);
        auto pid = PatternId::parse(family);
        if (!pid) raise(Errc::bad_parameter, "unknown family " + family);
        return gen_pattern(*pid);
      }();
      out << (parse_format(gformat) == GraphFormat::edge_list ? write_edge_list(g) : write_graph6(g) + "\n");
      return 0;
    }
    if (classify_cmd->parsed()) {
      Graph g = read_graph(slurp(cin_path, in), parse_format(cformat));
      emit(out, to_json(classify(g, cr)), cjson);
      return 0;
    }
    if (find_cmd->parsed()) {
      Graph g = read_graph(slurp(fin_path, in), parse_format(fformat));
      auto pid = PatternId::parse(fpattern);
      if (!pid) raise(Errc::bad_parameter, "unknown pattern " + fpattern);
      json j;
      if (fall) {
        json arr = json::array();
        for (const auto& e : enumerate_induced(g, *pid)) arr.push_back(to_json(e));
        j = json{{"pattern", pid->name()}, {"count", arr.size()}, {"embeddings", arr}};
      } else {
        auto hit = find_free_violation(g, *pid);
        j = json{{"pattern", pid->name()}, {"free", !hit.has_value()}};
        if (hit) j["violation"] = to_json(*hit);
      }
      emit(out, j, fjson);
      return 0;
    }
    if (solve_cmd->parsed()) {
      Graph g = read_graph(slurp(sin_path, in), parse_format(sformat));
      Outcome o = solve(g, parse_hypothesis(shyp));
      emit(out, to_json(g, o), sjson);
      return 0;
    }
    if (oracle_cmd->parsed()) {
      Graph g = read_graph(slurp(oin_path, in), parse_format(oformat));
      SearchResult s = traceable_search(g, obudget);
      emit(out, to_json(g, s), ojson);
      return 0;
    }
    if (verify_cmd->parsed()) {
      bool any_fail = false;
      json j = json::object();
      if (vtheorem != 0) {
        SweepConfig cfg;
        cfg.theorem = vtheorem;
        cfg.exhaustive_max_n = vmax_n;
        cfg.sample_count = vsamples;
        cfg.sample_min_n = vmin_n;
        cfg.sample_max_n = vmax_sample_n;
        cfg.seed = vseed;
        cfg.threads = vthreads;
        cfg.csv = !vcsv.empty();
        SweepReport rep = verify_theorem(cfg);
        err << "sweep wall time: " << rep.wall_ms << " ms\n";
        if (!vcsv.empty()) {
          std::ofstream f(vcsv);
          f << "graph6,n,outcome\n" << rep.csv_rows;
        }
        j["sweep"] = to_json(rep);
        if (!sweep_clean(rep)) any_fail = true;
      }
      if (vcounter) {
        CounterexampleReport rep = verify_counterexamples();
        j["counterexamples"] = to_json(rep);
        if (!rep.all_pass) any_fail = true;
      }
      if (vtheorem == 0 && !vcounter) raise(Errc::bad_config, "verify needs --theorem or --counterexamples");
      emit(out, j, vjson);
      return any_fail ? 1 : 0;
    }
    if (report_cmd->parsed()) {
      bool any_fail = false;
      json sweeps = json::array();
      for (int t : {5, 7, 8}) {
        SweepConfig cfg;
        cfg.theorem = t;
        cfg.exhaustive_max_n = rmax_n;
        cfg.sample_count = rsamples;
        cfg.seed = rseed;
        cfg.threads = rthreads;
        SweepReport rep = verify_theorem(cfg);
        err << "theorem " << t << " wall time: " << rep.wall_ms << " ms\n";
        sweeps.push_back(to_json(rep));
        if (!sweep_clean(rep)) any_fail = true;
      }
      CounterexampleReport crep = verify_counterexamples();
      if (!crep.all_pass) any_fail = true;
      json j{{"sweeps", sweeps}, {"counterexamples", to_json(crep)}};
      emit(out, j, rjson);
      return any_fail ? 1 : 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace orpath
