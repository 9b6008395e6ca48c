#include "ba/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ba/config.hpp"
#include "ba/error.hpp"
#include "ba/search.hpp"
#include "ba/sexpr.hpp"
#include "ba/tree.hpp"
#include "ba/unfold.hpp"

namespace ba {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorKind::Parse, "cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

Nat parse_nat(const std::string& s, const char* what) {
  if (s.empty()) raise(ErrorKind::Parse, std::string(what) + " is empty");
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      raise(ErrorKind::Parse, std::string(what) + " must be decimal, got " + s);
  return Nat(s);
}

int cmd_check(const std::string& file, const std::string& vars_csv) {
  auto d = read_deriv(read_file(file));
  auto vars = split_csv(vars_csv);
  std::cout << "script: " << file << "\n";
  std::cout << "size: " << d->sz << "\n";
  std::cout << "height: " << d->hgt << "\n";
  if (auto diag = var_deriv_diag(d, vars)) {
    std::cout << "well-formed: no\n";
    std::cout << "violation: " << *diag << "\n";
    return 3;
  }
  std::cout << "well-formed: yes (variables:";
  for (const auto& v : vars) std::cout << ' ' << v;
  std::cout << ")\n";
  std::cout << "endsequent:\n";
  for (const auto& f : d->gamma) std::cout << "  " << f->text << "\n";
  if (d->closed()) {
    std::cout << "ord: " << to_string(ord(d)) << "\n";
    std::cout << "bd: " << to_string(bd(d)) << "\n";
    std::cout << "ibd: " << to_string(ibd(d)) << "\n";
    for (uint32_t lvl = 0; lvl <= 2; ++lvl)
      std::cout << "crk[" << lvl << "]: " << crk(d, lvl) << "\n";
  } else {
    std::cout << "ord/bd/ibd: skipped, script is open\n";
  }
  return 0;
}

int cmd_explore(const std::string& file, uint32_t e_count,
                const std::string& path_csv, uint32_t depth, uint32_t width,
                bool depth_given, bool as_json) {
  auto h = read_notation(read_file(file));
  for (uint32_t k = 0; k < e_count; ++k) h = n_e(h);
  if (!path_csv.empty()) {
    std::vector<Nat> path;
    for (const auto& part : split_csv(path_csv))
      path.push_back(parse_nat(part, "path index"));
    Nat s(max_base_sz(h));
    auto res = explore(h, path);
    NotationPtr cur = h;
    std::cout << "step 0: " << tp(h).text() << " size " << h->sz << "\n";
    for (size_t m = 0; m < path.size(); ++m) {
      cur = child(cur, path[m]);
      std::cout << "step " << (m + 1) << ": slot " << to_string(path[m]) << " -> "
                << tp(cur).text() << " size " << cur->sz << "\n";
    }
    std::cout << "final: " << res.final->text << "\n";
    if (e_count > 0) {
      for (size_t m = 0; m < res.sizes.size(); ++m) {
        Nat bound = szf_k(h, s, Nat(m));
        if (Nat(res.sizes[m]) > bound) {
          std::cout << "size bound violated at step " << m << ": size "
                    << res.sizes[m] << " exceeds " << to_string(bound) << "\n";
          return 4;
        }
      }
      std::cout << "size bound: every step within the step-counted estimate\n";
    }
    return 0;
  }
  auto t = denote(h, width, depth_given ? depth : limits().explore_depth);
  if (as_json)
    std::cout << tree_dump_json(t).dump(2) << "\n";
  else
    std::cout << tree_dump_text(t);
  return 0;
}

int cmd_witness(const std::string& file, const std::string& recipe_str,
                const std::string& a_str, uint32_t ilevel, uint32_t jcount,
                const std::string& trace_path) {
  auto d = read_deriv(read_file(file));
  auto kind = recipe_by_name(recipe_str);
  if (!kind)
    raise(ErrorKind::Precondition, "unknown recipe " + recipe_str +
                                       " (direct|single|double|iterated)");
  auto p = recipe(*kind, d, ilevel, jcount);
  Nat a = parse_nat(a_str, "instance");
  auto w = run_search(p, a);
  std::cout << "witness: " << to_string(w.value) << "\n";
  std::cout << "pathLength: " << w.path_length << "\n";
  std::cout << "ordInitial: " << to_string(w.ord_initial) << "\n";
  std::cout << "maxSize: " << w.max_size << "\n";
  std::cout << "truthBatches: " << w.truth_batches << "\n";
  if (!trace_path.empty()) {
    std::ofstream out(trace_path);
    if (!out) raise(ErrorKind::Parse, "cannot write " + trace_path);
    out << witness_json(a, w).dump(2) << "\n";
    std::cout << "trace: " << trace_path << "\n";
  }
  return 0;
}

int cmd_bench(const std::string& file, const std::string& recipe_str,
              uint32_t ilevel, uint32_t jcount, const std::string& sweep_csv) {
  auto d = read_deriv(read_file(file));
  auto kind = recipe_by_name(recipe_str);
  if (!kind)
    raise(ErrorKind::Precondition, "unknown recipe " + recipe_str +
                                       " (direct|single|double|iterated)");
  auto p = recipe(*kind, d, ilevel, jcount);
  std::vector<Nat> sweep;
  if (sweep_csv.empty()) {
    for (uint32_t e = 4; e <= 12; ++e) sweep.push_back(Nat(1) << e);
  } else {
    for (const auto& part : split_csv(sweep_csv))
      sweep.push_back(parse_nat(part, "sweep value"));
  }
  std::cout << "a,ord_initial,path_length,max_size,truth_batches\n";
  double sxx = 0, sxy = 0;
  double max_resid = 0;
  bool ord_exact = true;
  for (const auto& a : sweep) {
    auto w = run_search(p, a);
    std::cout << to_string(a) << ',' << to_string(w.ord_initial) << ','
              << w.path_length << ',' << w.max_size << ',' << w.truth_batches
              << "\n";
    double x = static_cast<double>(bit_length(a));
    double y = static_cast<double>(w.path_length);
    sxx += x * x;
    sxy += x * y;
    if (p.e_count >= 1) {
      DerivPtr inst = p.x.empty() ? p.base : substitute(p.base, num(a), p.x);
      Nat expect = ord(n_base(inst));
      for (uint32_t k = 0; k < p.e_count; ++k) expect = pow2_minus1(expect);
      ord_exact = ord_exact && w.ord_initial == expect;
    }
  }
  if (p.e_count == 0 && sxx > 0) {
    double c = sxy / sxx;
    for (const auto& a : sweep) {
      auto w = run_search(p, a);
      double resid = static_cast<double>(w.path_length) -
                     c * static_cast<double>(bit_length(a));
      max_resid = std::max(max_resid, std::abs(resid));
    }
    std::cout << "fit: pathLength ~ " << c << " * bitlen(a), max residual "
              << max_resid << "\n";
  } else if (p.e_count >= 1) {
    std::cout << "ord check: " << (ord_exact ? "exact tower of the base ord"
                                             : "MISMATCH against the base ord")
              << "\n";
  }
  std::cout << "predicted: " << p.predicted << "\n";
  return ord_exact ? 0 : 4;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"proof notation workbench: scripts, lazy unfolding, reduction, witness search"};
  app.require_subcommand(1);

  std::string config_path;
  uint64_t opt_seed = 0, opt_truth = 0, opt_magnitude = 0, opt_tower = 0;
  uint32_t opt_term_depth = 0;
  bool assume = false;
  app.add_option("--config", config_path, "JSON config file");
  auto* o_seed = app.add_option("--seed", opt_seed, "sampling seed");
  auto* o_truth = app.add_option("--truth-budget", opt_truth,
                                 "instantiation budget per truth query");
  auto* o_depth = app.add_option("--term-depth", opt_term_depth, "parser nesting cap");
  auto* o_mag = app.add_option("--magnitude-cap", opt_magnitude,
                               "bit length cap for evaluated values");
  auto* o_tower = app.add_option("--tower-cap", opt_tower,
                                 "bit length cap for iterated exponents");
  app.add_flag("--assume-basic", assume, "accept axiom clauses without the truth check");

  auto* check = app.add_subcommand("check", "parse a script and report well-formedness");
  std::string check_file, check_vars;
  check->add_option("script", check_file, "script file")->required();
  check->add_option("--vars", check_vars, "allowed free variables, comma separated");

  auto* explore = app.add_subcommand("explore", "walk the denoted derivation");
  std::string ex_file, ex_path;
  uint32_t ex_e = 0, ex_depth = 0, ex_width = 0;
  bool ex_json = false;
  explore->add_option("script", ex_file, "script or operator-term file")->required();
  explore->add_option("--e", ex_e, "elimination prefixes to apply");
  explore->add_option("--path", ex_path, "child slots to follow, comma separated");
  auto* depth_opt = explore->add_option("--depth", ex_depth, "materialization depth");
  explore->add_option("--width", ex_width, "materialized width of omega nodes");
  explore->add_flag("--json", ex_json, "dump the tree as JSON");

  auto* witness = app.add_subcommand("witness", "run the canonical search");
  std::string wi_file, wi_recipe, wi_a, wi_trace;
  uint32_t wi_i = 1, wi_j = 1;
  witness->add_option("script", wi_file, "script file")->required();
  witness->add_option("--recipe", wi_recipe, "direct|single|double|iterated")->required();
  witness->add_option("--a", wi_a, "instance value")->required();
  witness->add_option("--i", wi_i, "class index");
  witness->add_option("--j", wi_j, "prefix count for the iterated recipe");
  witness->add_option("--trace", wi_trace, "write the JSON trace here");

  auto* bench = app.add_subcommand("bench", "sweep instances and report costs");
  std::string be_file, be_recipe, be_sweep;
  uint32_t be_i = 1, be_j = 1;
  bench->add_option("script", be_file, "script file")->required();
  bench->add_option("--recipe", be_recipe, "direct|single|double|iterated")->required();
  bench->add_option("--i", be_i, "class index");
  bench->add_option("--j", be_j, "prefix count for the iterated recipe");
  bench->add_option("--sweep", be_sweep, "instance values, comma separated");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Limits base = limits();
    if (!config_path.empty()) base = load_config(config_path, base);
    if (o_seed->count()) base.seed = opt_seed;
    if (o_truth->count()) base.truth_budget = opt_truth;
    if (o_depth->count()) base.term_depth = opt_term_depth;
    if (o_mag->count()) base.magnitude_bits = opt_magnitude;
    if (o_tower->count()) base.tower_bits = opt_tower;
    base.assume_basic = assume;
    ScopedLimits guard(base);
    std::cerr << "config " << config_to_json(limits()).dump() << "\n";
    if (check->parsed()) return cmd_check(check_file, check_vars);
    if (explore->parsed()) {
      if (ex_width == 0) ex_width = limits().oracle_width;
      return cmd_explore(ex_file, ex_e, ex_path, ex_depth, ex_width,
                         depth_opt->count() > 0, ex_json);
    }
    if (witness->parsed())
      return cmd_witness(wi_file, wi_recipe, wi_a, wi_i, wi_j, wi_trace);
    if (bench->parsed()) return cmd_bench(be_file, be_recipe, be_i, be_j, be_sweep);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace ba
