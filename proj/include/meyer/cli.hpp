#pragma once

// Command-line front end. run() is the whole program minus process setup so
// tests can drive it in-process.
//
// Exit codes: 0 success, 2 input error, 3 contract violation.

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "meyer/cocycle.hpp"
#include "meyer/error.hpp"
#include "meyer/exactnum.hpp"
#include "meyer/ledger_io.hpp"
#include "meyer/localsig.hpp"
#include "meyer/symplectic.hpp"
#include "meyer/varieties.hpp"

namespace meyer::cli {

constexpr int exit_ok = 0;
constexpr int exit_input = 2;
constexpr int exit_contract = 3;

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::invalid_argument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline SymplecticElement read_symplectic(const std::string& path) {
  try {
    return SymplecticElement::from_rational(parse_matrix(read_file(path)));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

// Key/value pairs, emitted either as one "k=v k=v" line or as JSON members.
using Fields = std::vector<std::pair<std::string, std::string>>;

inline void emit_line(std::ostream& out, const Fields& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? " " : "") << fields[i].first << '=' << fields[i].second;
  out << '\n';
}

inline void emit_json(std::ostream& out, const std::vector<Fields>& groups) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& g : groups)
    for (const auto& [k, v] : g) j[k] = v;
  out << j.dump() << '\n';
}

inline void emit(std::ostream& out, bool json, const std::vector<Fields>& groups) {
  if (json) {
    emit_json(out, groups);
  } else {
    for (const auto& g : groups) emit_line(out, g);
  }
}

inline Fields invariant_fields(const SurfaceInvariants& inv) {
  return {{"sign", inv.sign.str()}, {"chi", inv.chi.str()}, {"deg", inv.deg.str()}, {"genus", inv.genus.str()}};
}

inline Fields lasso_fields(const LassoReport& r) {
  return {{"deg_DX", r.deg_DX.str()}, {"phi", to_string(r.phi)}, {"alpha", to_string(r.alpha)},
          {"beta", to_string(r.beta)}};
}

inline long parse_long(const std::string& s, const char* what) {
  const BigInt v = meyer::detail::parse_integer(s);
  if (v > 1'000'000'000 || v < -1'000'000'000) throw Error(Errc::invalid_argument, std::string(what) + " out of range");
  return static_cast<long>(v);
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Meyer signature cocycle, Meyer functions, and local signatures", "meyer"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit JSON instead of key=value lines");

  auto* tau_cmd = app.add_subcommand("tau", "Signature cocycle tau(A1, A2) of two symplectic matrices");
  std::string a1_path, a2_path, many_path;
  tau_cmd->add_option("--a1", a1_path, "First matrix file");
  tau_cmd->add_option("--a2", a2_path, "Second matrix file");
  tau_cmd->add_option("--many", many_path, "File of 'A1 A2' path pairs, one per line; output keeps input order");

  auto* phi_cmd = app.add_subcommand("phi1", "Meyer function on SL(2;Z)");
  std::string matrix_path, mode = "floor";
  bool show_word = false;
  phi_cmd->add_option("--matrix", matrix_path, "2x2 matrix file")->required();
  phi_cmd->add_option("--reduction", mode, "Word decomposition: floor, nearest, row")
      ->check(CLI::IsMember({"floor", "nearest", "row"}));
  phi_cmd->add_flag("--word", show_word, "Also print the S/T word used");

  auto* ci_cmd = app.add_subcommand("ci", "Complete intersection surface in P_{m+2}");
  std::string m_arg, degrees_arg, n_arg, d_arg;
  ci_cmd->add_option("--m", m_arg, "Number of defining equations")->required();
  ci_cmd->add_option("--degrees", degrees_arg, "Comma-separated degrees")->required();

  auto* ver_cmd = app.add_subcommand("veronese", "Veronese image of a complete intersection");
  ver_cmd->add_option("--m", m_arg, "Number of defining equations")->required();
  ver_cmd->add_option("--degrees", degrees_arg, "Comma-separated degrees (may be empty)")->required();
  ver_cmd->add_option("--n", n_arg, "Dimension of X")->required();
  ver_cmd->add_option("--d", d_arg, "Veronese degree")->required();

  auto* lp_cmd = app.add_subcommand("lasso-power", "phi(sigma^n) = n phi(sigma) + n - 1");
  std::string phi_arg, power_arg;
  lp_cmd->add_option("--phi", phi_arg, "phi on the lasso, p/q")->required();
  lp_cmd->add_option("--n", power_arg, "Power n >= 1")->required();

  auto* germ_cmd = app.add_subcommand("germ", "Look up a built-in fiber germ");
  std::string germ_name;
  germ_cmd->add_option("--name", germ_name, "Germ name, e.g. R4/F_31")->required();

  auto* fib_cmd = app.add_subcommand("fibration", "Check a fibration ledger against the global signature formula");
  std::string ledger_path;
  bool solve = false;
  fib_cmd->add_option("--ledger", ledger_path, "Ledger JSON file")->required();
  fib_cmd->add_flag("--solve", solve, "Solve for the single germ marked unknown");

  auto* presets_cmd = app.add_subcommand("presets", "List named variety presets");
  std::string show_preset;
  presets_cmd->add_option("--show", show_preset, "Evaluate one preset");

  for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", json, "Emit JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return exit_ok;
    }
    err << "error: " << e.what() << '\n' << app.help();
    return exit_input;
  }

  try {
    if (tau_cmd->parsed()) {
      if (!many_path.empty()) {
        if (!a1_path.empty() || !a2_path.empty()) throw Error(Errc::invalid_argument, "--many excludes --a1/--a2");
        std::istringstream lines(detail::read_file(many_path));
        std::vector<std::future<long>> jobs;
        for (std::string line; std::getline(lines, line);) {
          std::istringstream ls(line);
          std::string p1, p2, extra;
          if (!(ls >> p1)) continue;
          if (!(ls >> p2) || (ls >> extra)) throw Error(Errc::parse, "--many line needs exactly two paths: '" + line + "'");
          jobs.push_back(std::async(std::launch::async, [p1, p2] {
            return tau(detail::read_symplectic(p1), detail::read_symplectic(p2));
          }));
        }
        std::vector<long> values;
        for (auto& j : jobs) values.push_back(j.get());
        for (long v : values) out << v << '\n';
        return exit_ok;
      }
      if (a1_path.empty() || a2_path.empty()) throw Error(Errc::invalid_argument, "tau needs --a1 and --a2 (or --many)");
      const long t = tau(detail::read_symplectic(a1_path), detail::read_symplectic(a2_path));
      if (json) {
        detail::emit_json(out, {{{"tau", std::to_string(t)}}});
      } else {
        out << t << '\n';
      }
      return exit_ok;
    }

    if (phi_cmd->parsed()) {
      const auto a = detail::read_symplectic(matrix_path);
      if (a.genus() != 1) throw Error(Errc::genus_mismatch, "phi1 needs a 2x2 matrix");
      const Reduction r = mode == "nearest" ? Reduction::nearest : mode == "row" ? Reduction::row : Reduction::floor;
      const SL2Word w = sl2_word(a, r);
      const Rational v = phi1_word(w);
      if (json) {
        detail::Fields f{{"phi", to_string(v)}};
        if (show_word) f.emplace_back("word", w.str());
        detail::emit_json(out, {f});
      } else {
        out << to_string(v) << '\n';
        if (show_word) out << "word=" << w.str() << '\n';
      }
      return exit_ok;
    }

    if (ci_cmd->parsed()) {
      const auto r = ci_surface_invariants(parse_count(m_arg), parse_degrees(degrees_arg));
      detail::emit(out, json, {detail::invariant_fields(r.invariants), detail::lasso_fields(r.lasso)});
      return exit_ok;
    }

    if (ver_cmd->parsed()) {
      const CISpec spec{parse_count(m_arg), parse_degrees(degrees_arg), meyer::detail::parse_integer(n_arg),
                        meyer::detail::parse_integer(d_arg)};
      const auto lasso = veronese_ci_lasso(spec);
      const auto inv = veronese_section_invariants(spec);
      detail::emit(out, json, {detail::invariant_fields(inv), detail::lasso_fields(lasso)});
      return exit_ok;
    }

    if (lp_cmd->parsed()) {
      const Rational v = lasso_power(parse_rational(phi_arg), detail::parse_long(power_arg, "--n"));
      if (json) {
        detail::emit_json(out, {{{"phi", to_string(v)}}});
      } else {
        out << to_string(v) << '\n';
      }
      return exit_ok;
    }

    if (germ_cmd->parsed()) {
      const FiberGerm& g = germ(germ_name);
      detail::Fields f{{"phi", to_string(g.phi)}, {"nbhd_sign", g.nbhd_sign.str()}, {"sigma", to_string(g.sigma)}};
      if (json) f.insert(f.begin(), {"name", g.name});
      detail::emit(out, json, {f});
      return exit_ok;
    }

    if (fib_cmd->parsed()) {
      const FibrationLedger ledger = parse_ledger_json(detail::read_file(ledger_path));
      if (solve) {
        const auto s = solve_unknown_germ(ledger);
        detail::emit(out, json, {{{"name", s.name}, {"sigma", to_string(s.sigma)}, {"phi", to_string(s.phi)}}});
      } else {
        const auto r = check_fibration(ledger);
        detail::emit(out, json,
                     {{{"germ_sum", to_string(r.germ_sum)}, {"total_sign", r.total_sign.str()},
                       {"residual", to_string(r.residual)}}});
      }
      return exit_ok;
    }

    if (presets_cmd->parsed()) {
      if (!show_preset.empty()) {
        const auto p = resolve_preset(show_preset);
        std::vector<detail::Fields> groups;
        if (p.invariants) groups.push_back(detail::invariant_fields(*p.invariants));
        groups.push_back(detail::lasso_fields(p.lasso));
        detail::emit(out, json, groups);
        return exit_ok;
      }
      for (const auto& [name, what] : list_presets()) out << name << "  " << what << '\n';
      return exit_ok;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_contract_violation(e.code()) ? exit_contract : exit_input;
  }
  return exit_input;
}

}  // namespace meyer::cli
