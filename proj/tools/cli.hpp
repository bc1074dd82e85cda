#pragma once

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mineo/mineo.hpp"

namespace mineo::cli {

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_validation = 1;
inline constexpr int exit_limit = 2;

struct io_context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

namespace detail {

inline std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw validation_error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw validation_error("cannot write '" + path + "'");
  f << text;
}

inline biased_tie parse_biased_tie(const std::string& s) {
  for (const auto t : all_biased_ties) {
    if (to_string(t) == s) return t;
  }
  throw validation_error("tie policy '" + s + "' does not apply to the biased method");
}

inline greedy_tie parse_greedy_tie(const std::string& s) {
  for (const auto t : all_greedy_ties) {
    if (to_string(t) == s) return t;
  }
  throw validation_error("tie policy '" + s + "' does not apply to the greedy method");
}

template <typename F>
double time_ms(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

inline report to_report(const solve_result& r, double gap_bound, double lower_bound, double ms) {
  report rep;
  rep.method = r.method;
  rep.entropy_bits = r.entropy;
  rep.opt_gap_bound = gap_bound;
  rep.lower_bound_bits = lower_bound;
  rep.elapsed_ms = ms;
  rep.nodes_explored = r.nodes_explored;
  rep.optimal = r.optimal;
  return rep;
}

struct solve_options {
  std::string method = "biased";
  std::string tie;
  double time_limit = 60.0;
};

// Runs one solver and reports it. Returns the exit code the run implies.
inline int run_method(const multigraph& g, const solve_options& opt, solve_result& result, report& rep) {
  const double lb = lp_lower_bound(g);
  double ms = 0.0;
  if (opt.method == "biased") {
    const auto tie = opt.tie.empty() ? biased_tie::toward_lower_id : parse_biased_tie(opt.tie);
    ms = time_ms([&] { result = orient_biased(g, tie); });
    rep = to_report(result, 1.0, lb, ms);
  } else if (opt.method == "greedy") {
    const auto tie = opt.tie.empty() ? greedy_tie::lowest_id_first : parse_greedy_tie(opt.tie);
    ms = time_ms([&] { result = orient_greedy(g, tie); });
    rep = to_report(result, log2_e, lb, ms);
  } else if (opt.method == "exact") {
    if (!opt.tie.empty()) throw validation_error("--tie does not apply to the exact method");
    ms = time_ms([&] { result = solve_exact_bruteforce(g); });
    rep = to_report(result, 0.0, lb, ms);
  } else if (opt.method == "bnb") {
    if (!opt.tie.empty()) throw validation_error("--tie does not apply to the bnb method");
    if (!(opt.time_limit > 0.0)) throw validation_error("--time-limit must be positive");
    ms = time_ms([&] { result = solve_exact_bnb(g, std::chrono::duration<double>(opt.time_limit)); });
    const double bound = result.lower_bound_used.value_or(lb);
    const bool proven = result.optimal == optimality::yes;
    rep = to_report(result, proven ? 0.0 : result.entropy - bound, bound, ms);
    if (!proven) return exit_limit;
  } else {
    throw validation_error("unknown method '" + opt.method + "'");
  }
  return exit_ok;
}

}  // namespace detail

// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, io_context io) {
  CLI::App app{"Minimum-entropy orientation of multigraphs", "mineo"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph file");
  gen->require_subcommand(1);
  std::string gen_out;
  std::string cert_dir;
  std::size_t cycle_n = 0;
  auto* gen_cycle_cmd = gen->add_subcommand("cycle", "Cycle C_n");
  gen_cycle_cmd->add_option("--n", cycle_n)->required();
  std::size_t tight_t = 0;
  auto* gen_tight_cmd = gen->add_subcommand("tight", "Greedy tight example for parameter t");
  gen_tight_cmd->add_option("--t", tight_t)->required();
  std::string cover_file;
  std::vector<std::uint32_t> cover_sets;
  auto* gen_red_cmd = gen->add_subcommand("reduction", "Exact Cover reduction graph");
  gen_red_cmd->add_option("--cover", cover_file, "Exact Cover instance file")->required();
  gen_red_cmd->add_option("--sets", cover_sets, "Set ids of an exact cover, used for --emit-certificates")
      ->delimiter(',');
  std::size_t rnd_n = 0;
  std::size_t rnd_m = 0;
  std::uint64_t rnd_seed = 0;
  auto* gen_rnd_cmd = gen->add_subcommand("random", "Uniform random multigraph");
  gen_rnd_cmd->add_option("--n", rnd_n)->required();
  gen_rnd_cmd->add_option("--m", rnd_m)->required();
  gen_rnd_cmd->add_option("--seed", rnd_seed)->required();
  for (auto* sub : {gen_cycle_cmd, gen_tight_cmd, gen_red_cmd, gen_rnd_cmd}) {
    sub->add_option("-o,--output", gen_out, "Output graph file (default: stdout)");
    sub->add_option("--emit-certificates", cert_dir, "Directory for certificate orientation files");
  }

  // solve
  detail::solve_options solve_opt;
  std::string solve_graph;
  std::string solve_out;
  auto* solve = app.add_subcommand("solve", "Orient a graph and report its entropy");
  solve->add_option("--method", solve_opt.method)->check(CLI::IsMember({"biased", "greedy", "exact", "bnb"}));
  solve->add_option("--tie", solve_opt.tie, "Tie-break policy");
  solve->add_option("--time-limit", solve_opt.time_limit, "Seconds (bnb only)");
  solve->add_option("graph", solve_graph, "Graph file or -")->required();
  solve->add_option("-o,--output", solve_out, "Orientation output file");

  std::string bound_graph;
  auto* bound = app.add_subcommand("bound", "LP lower bound on the minimum entropy");
  bound->add_option("graph", bound_graph)->required();

  std::string eval_graph;
  std::string eval_orient;
  auto* eval = app.add_subcommand("eval", "Entropy of a given orientation");
  eval->add_option("graph", eval_graph)->required();
  eval->add_option("orientation", eval_orient)->required();

  std::string verify_what;
  auto* verify = app.add_subcommand("verify", "Exhaustive self-checks");
  verify->add_option("check", verify_what)->required()->check(CLI::IsMember({"claim1"}));

  std::string compare_graph;
  auto* compare = app.add_subcommand("compare", "Run every method on one graph");
  compare->add_option("graph", compare_graph)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    io.out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp& e) {
    io.out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    io.err << "mineo: " << e.what() << "\n";
    return exit_validation;
  }

  try {
    if (*gen) {
      std::string text;
      if (*gen_cycle_cmd) {
        text = serialize_graph(gen_cycle(cycle_n));
        if (!cert_dir.empty()) throw validation_error("cycle has no certificates");
      } else if (*gen_tight_cmd) {
        const auto b = gen_tight_greedy(tight_t);
        text = serialize_graph(b.graph);
        if (!cert_dir.empty()) {
          std::filesystem::create_directories(cert_dir);
          detail::write_output(cert_dir + "/optimal.orient", serialize_orientation(b.optimal_orientation), io.out);
          detail::write_output(cert_dir + "/bad_greedy.orient", serialize_orientation(b.bad_greedy_orientation), io.out);
        }
      } else if (*gen_red_cmd) {
        const auto xc = parse_exact_cover(detail::read_input(cover_file, io.in));
        const auto b = gen_reduction(xc);
        text = serialize_graph(b.graph);
        if (!cert_dir.empty()) {
          if (cover_sets.empty()) throw validation_error("--emit-certificates needs --sets with an exact cover");
          const auto cert = certificate_orientation(b, cover_sets);
          std::filesystem::create_directories(cert_dir);
          detail::write_output(cert_dir + "/certificate.orient", serialize_orientation(cert), io.out);
        }
      } else {
        text = serialize_graph(gen_random_multigraph(rnd_n, rnd_m, rnd_seed));
        if (!cert_dir.empty()) throw validation_error("random graphs have no certificates");
      }
      detail::write_output(gen_out, text, io.out);
      return exit_ok;
    }

    if (*solve) {
      const auto g = parse_graph(detail::read_input(solve_graph, io.in));
      solve_result result;
      report rep;
      const int code = detail::run_method(g, solve_opt, result, rep);
      io.out << serialize_report(rep);
      if (!solve_out.empty()) detail::write_output(solve_out, serialize_orientation(result.orient), io.out);
      return code;
    }

    if (*bound) {
      const auto g = parse_graph(detail::read_input(bound_graph, io.in));
      report rep;
      rep.method = "lp_bound";
      double lb = 0.0;
      rep.elapsed_ms = detail::time_ms([&] { lb = lp_lower_bound(g); });
      rep.lower_bound_bits = lb;
      io.out << serialize_report(rep);
      return exit_ok;
    }

    if (*eval) {
      if (eval_graph == "-" && eval_orient == "-") throw validation_error("only one input may be standard input");
      const auto g = parse_graph(detail::read_input(eval_graph, io.in));
      const auto o = parse_orientation(detail::read_input(eval_orient, io.in), g);
      report rep;
      rep.method = "eval";
      rep.entropy_bits = entropy_bits(o);
      io.out << serialize_report(rep);
      return exit_ok;
    }

    if (*verify) {
      const auto results = check_claim1_table(gadget());
      bool ok = true;
      for (const auto& r : results) {
        io.out << "pattern=" << r.boundary << " delta=" << r.delta << " best=(";
        for (std::size_t i = 0; i < r.best.size(); ++i) io.out << (i ? "," : "") << r.best[i];
        io.out << ") sequences=" << r.distinct_sequences << " ok=" << (r.matches ? "true" : "false") << "\n";
        ok = ok && r.matches;
      }
      io.out << "claim1=" << (ok ? "true" : "false") << "\n";
      return ok ? exit_ok : exit_validation;
    }

    if (*compare) {
      const auto g = parse_graph(detail::read_input(compare_graph, io.in));
      std::vector<std::string> methods = {"biased", "greedy"};
      if (g.edge_count() <= max_bruteforce_edges) methods.push_back("exact");
      bool first = true;
      for (const auto& method : methods) {
        solve_result result;
        report rep;
        detail::solve_options opt;
        opt.method = method;
        detail::run_method(g, opt, result, rep);
        if (!first) io.out << "\n";
        io.out << serialize_report(rep);
        first = false;
        if (method == "greedy") {
          report b;
          b.method = "lp_bound";
          double lb = 0.0;
          b.elapsed_ms = detail::time_ms([&] { lb = lp_lower_bound(g); });
          b.lower_bound_bits = lb;
          io.out << "\n" << serialize_report(b);
        }
      }
      return exit_ok;
    }
  } catch (const limit_error& e) {
    io.err << "mineo: " << e.what() << "\n";
    return exit_limit;
  } catch (const validation_error& e) {
    io.err << "mineo: " << e.what() << "\n";
    return exit_validation;
  }
  return exit_validation;
}

}  // namespace mineo::cli
