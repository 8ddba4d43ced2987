#pragma once

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nilorbit/verify.hpp"

namespace nilorbit {

namespace detail {

inline Family cli_family(const std::string& s) {
  if (s.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(s[0]))) {
      case 'A': return Family::A;
      case 'B': return Family::B;
      case 'C': return Family::C;
      case 'D': return Family::D;
      default: break;
    }
  }
  throw std::invalid_argument("family must be one of A, B, C, D");
}

inline std::vector<NilradicalId> resolve_nilradicals(const RootSystemType& t,
                                                     const std::string& which) {
  std::vector<NilradicalId> all = abelian_nilradicals(t);
  if (which.empty() || which == "all") return all;
  for (const NilradicalId& id : all)
    if (id.to_string() == which) return {id};
  std::string options;
  for (const NilradicalId& id : all) {
    if (!options.empty()) options += ", ";
    options += id.to_string();
  }
  throw std::invalid_argument("unknown nilradical " + which + " for " + t.to_string() +
                              "; available: " + options);
}

inline std::vector<Root> parse_root_set(const std::string& text, int dim) {
  std::vector<Root> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t b = tok.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    size_t e = tok.find_last_not_of(" \t");
    out.push_back(parse_root(tok.substr(b, e - b + 1), dim));
  }
  return out;
}

inline void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot open output file " + path);
  f << content;
}

}  // namespace detail

inline nlohmann::json poset_to_json(const OrbitPoset& p) {
  nlohmann::json orbits = nlohmann::json::array();
  for (size_t k = 0; k < p.labels.size(); ++k)
    orbits.push_back({{"label", p.labels[k].to_string()},
                      {"size", p.labels[k].roots.size()},
                      {"dimension", p.dims[k]},
                      {"dual_dimension", p.coadjoint_dims[k]}});
  nlohmann::json covers = nlohmann::json::array();
  for (auto [lo, hi] : p.covers)
    covers.push_back({{"lower", p.labels[static_cast<size_t>(lo)].to_string()},
                      {"upper", p.labels[static_cast<size_t>(hi)].to_string()}});
  return {{"type", p.id.type.to_string()},
          {"nilradical", p.id.to_string()},
          {"orbits", orbits},
          {"covers", covers}};
}

inline std::string poset_to_dot(const OrbitPoset& p, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  rankdir=BT;\n";
  for (size_t k = 0; k < p.labels.size(); ++k)
    os << "  n" << k << " [label=\"" << p.labels[k].to_string() << " : " << p.dims[k]
       << "\"];\n";
  for (auto [lo, hi] : p.covers) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

namespace detail {

inline int cmd_enumerate(const std::string& family_s, int rank, const std::string& nil_s,
                         const std::string& format, const std::string& out_path) {
  RootSystemType t(cli_family(family_s), rank);
  std::vector<NilradicalId> ids = resolve_nilradicals(t, nil_s);
  nlohmann::json jout = nlohmann::json::array();
  std::ostringstream text;
  for (const NilradicalId& id : ids) {
    std::vector<OrbitLabel> labels = enumerate_orbits(id);
    SignedPermutation w_hat = longest_parabolic(id);
    text << "nilradical " << id.to_string() << " in " << t.to_string() << ": "
         << nilradical_positive_roots(id).size() << " roots, " << labels.size()
         << " orbits\n";
    nlohmann::json orbits = nlohmann::json::array();
    for (const OrbitLabel& l : labels) {
      SignedPermutation sig = sigma_of(id, l);
      int d = predicted_dimension(id, l, w_hat);
      int dd = predicted_coadjoint_dimension(id, l);
      text << "  " << l.to_string() << "  size=" << l.roots.size() << " dim=" << d
           << " dual=" << dd << " sigma=" << sig.to_string() << "\n";
      orbits.push_back({{"label", l.to_string()},
                        {"size", l.roots.size()},
                        {"dimension", d},
                        {"dual_dimension", dd},
                        {"involution", sig.to_string()}});
    }
    jout.push_back(
        {{"type", t.to_string()}, {"nilradical", id.to_string()}, {"orbits", orbits}});
  }
  write_output(out_path, format == "json" ? jout.dump(2) + "\n" : text.str());
  return 0;
}

inline int cmd_poset(const std::string& family_s, int rank, const std::string& nil_s,
                     const std::string& order_s, const std::string& format,
                     const std::string& out_path) {
  RootSystemType t(cli_family(family_s), rank);
  std::vector<NilradicalId> ids = resolve_nilradicals(t, nil_s);
  OrderKind kind = order_s == "bruhat"      ? OrderKind::bruhat
                   : order_s == "coadjoint" ? OrderKind::coadjoint
                                            : OrderKind::geometric;
  nlohmann::json jout = nlohmann::json::array();
  std::ostringstream text;
  for (const NilradicalId& id : ids) {
    OrbitPoset p = build_poset(id, kind);
    if (format == "dot") {
      text << poset_to_dot(p, t.to_string() + " " + id.to_string() + " " + order_s);
      continue;
    }
    text << "poset for nilradical " << id.to_string() << " in " << t.to_string() << " ("
         << order_kind_name(kind) << " order): " << p.labels.size() << " orbits, "
         << p.covers.size() << " covers\n";
    for (size_t k = 0; k < p.labels.size(); ++k)
      text << "  " << p.labels[k].to_string() << "  dim=" << p.dims[k]
           << " dual=" << p.coadjoint_dims[k] << "\n";
    for (auto [lo, hi] : p.covers)
      text << "  " << p.labels[static_cast<size_t>(lo)].to_string() << " < "
           << p.labels[static_cast<size_t>(hi)].to_string() << "\n";
    nlohmann::json j = poset_to_json(p);
    j["order"] = order_kind_name(kind);
    jout.push_back(std::move(j));
  }
  write_output(out_path, format == "json" ? jout.dump(2) + "\n" : text.str());
  return 0;
}

inline int cmd_lengths(const std::string& family_s, int rank, const std::string& set_s,
                       const std::string& format, const std::string& out_path) {
  Family f = cli_family(family_s);
  RootSystemType t(f, rank);
  RootSystemType lattice = f == Family::D ? RootSystemType(Family::B, rank) : t;
  std::vector<Root> s = parse_root_set(set_s, t.coord_dim());
  for (const Root& r : s)
    if (!is_positive_root(r, lattice))
      throw std::invalid_argument("not a positive root here: " + r.to_string());

  LinkPattern p = pattern_of(lattice, s);
  ShapeCounts shapes = count_shapes(s);
  int formula = 0;
  switch (f) {
    case Family::A: formula = length_formula_A(t, s); break;
    case Family::B:
    case Family::C: formula = length_formula_C(t, s); break;
    case Family::D: formula = length_formula_D(t, s); break;
  }
  int direct = length(t, involution_of_set(lattice, s));
  bool agree = formula == direct;

  if (format == "json") {
    nlohmann::json j{{"type", t.to_string()},
                     {"set", nlohmann::json::array()},
                     {"pattern", p.to_string()},
                     {"arcs", p.arc_count()},
                     {"crossings", stat_c(p)},
                     {"right_of_pairs", stat_r(p)},
                     {"covered_fixed", stat_b(p)},
                     {"different_shape", shapes.a},
                     {"shape_excess", shapes.x()},
                     {"formula_length", formula},
                     {"direct_length", direct},
                     {"agree", agree}};
    for (const Root& r : s) j["set"].push_back(r.to_string());
    write_output(out_path, j.dump(2) + "\n");
  } else {
    std::ostringstream text;
    text << "set:";
    for (const Root& r : s) text << " " << r.to_string();
    if (s.empty()) text << " (empty)";
    text << "\n" << p.render_ascii();
    text << "pattern: " << p.to_string() << "\n";
    text << "arcs=" << p.arc_count() << " crossings=" << stat_c(p)
         << " right_of_pairs=" << stat_r(p) << " covered_fixed=" << stat_b(p);
    if (f != Family::A) text << " different_shape=" << shapes.a << " excess=" << shapes.x();
    text << "\n";
    text << "formula length: " << formula << "\n";
    text << "direct length:  " << direct << "\n";
    text << "agreement: " << (agree ? "yes" : "NO") << "\n";
    write_output(out_path, text.str());
  }
  return agree ? 0 : 1;
}

inline int cmd_verify(const std::vector<std::string>& checks, const std::string& family_s,
                      int rank, bool inject_fault, int max_oracle_rank,
                      const std::string& out_path) {
  VerifyOptions vo;
  vo.checks.insert(checks.begin(), checks.end());
  if (!family_s.empty()) vo.family = cli_family(family_s);
  if (rank > 0) vo.rank = rank;
  vo.inject_fault = inject_fault;
  vo.bruhat_oracle_max_rank = max_oracle_rank;

  std::vector<VerificationReport> reports;
  bool ok = run_verify(vo, reports);

  std::ostringstream body;
  for (const VerificationReport& r : reports) body << report_to_json(r).dump() << "\n";
  write_output(out_path, body.str());

  for (const VerificationReport& r : reports) {
    std::cerr << (r.pass ? "[pass] " : "[FAIL] ") << r.check << " " << r.family << r.rank;
    if (!r.nilradical.empty()) std::cerr << " m[" << r.nilradical << "]";
    std::cerr << ": " << r.detail << " (" << r.millis << " ms)\n";
  }
  std::cerr << (ok ? "all checks passed" : "FAILURES detected") << " across "
            << reports.size() << " cases\n";
  return ok ? 0 : 1;
}

}  // namespace detail

// Entry point shared by the command line tool and the test suite. Returns the
// process exit code: 0 on success, 1 when a verification or agreement check
// fails, 2 on usage or domain errors.
inline int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"exact combinatorics of Borel orbits in abelian nilradicals"};
  app.require_subcommand(1);

  std::string e_family, e_nil = "all", e_format = "text", e_out;
  int e_rank = 0;
  CLI::App* enumerate = app.add_subcommand("enumerate", "list the orbits of a nilradical");
  enumerate->add_option("--family", e_family, "root system family (A, B, C, D)")->required();
  enumerate->add_option("--rank", e_rank, "root system rank")->required();
  enumerate->add_option("--nilradical", e_nil,
                        "abelian nilradical by its simple root, or 'all'");
  enumerate->add_option("--format", e_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  enumerate->add_option("--out", e_out, "write output to a file");

  std::string p_family, p_nil = "all", p_order = "geometric", p_format = "text", p_out;
  int p_rank = 0;
  CLI::App* poset = app.add_subcommand("poset", "print an orbit order with its covers");
  poset->add_option("--family", p_family, "root system family (A, B, C, D)")->required();
  poset->add_option("--rank", p_rank, "root system rank")->required();
  poset->add_option("--nilradical", p_nil, "abelian nilradical by its simple root, or 'all'");
  poset->add_option("--order", p_order, "which order to build")
      ->check(CLI::IsMember({"geometric", "bruhat", "coadjoint"}));
  poset->add_option("--format", p_format, "output format")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  poset->add_option("--out", p_out, "write output to a file");

  std::string l_family, l_set, l_format = "text", l_out;
  int l_rank = 0;
  CLI::App* lengths = app.add_subcommand(
      "lengths", "link pattern, statistics and length of one commuting set");
  lengths->add_option("--family", l_family, "root system family (A, B, C, D)")->required();
  lengths->add_option("--rank", l_rank, "root system rank")->required();
  lengths->add_option("--set", l_set, "comma separated roots, e.g. 'e2-e1,e6+e3,2e4'")
      ->required();
  lengths->add_option("--format", l_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  lengths->add_option("--out", l_out, "write output to a file");

  std::vector<std::string> v_checks;
  std::string v_family, v_out;
  int v_rank = 0, v_oracle = 4;
  bool v_fault = false;
  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--check", v_checks, "check names to run (default: all)");
  verify->add_option("--family", v_family, "restrict to one family");
  verify->add_option("--rank", v_rank, "restrict to one rank");
  verify->add_flag("--inject-fault", v_fault,
                   "flip one hard-coded closure relation to exercise failure reporting");
  verify->add_option("--max-rank-bruhat-oracle", v_oracle,
                     "largest rank for the full Weyl group cover oracle");
  verify->add_option("--out", v_out, "write the JSONL report to a file");

  std::vector<const char*> argv;
  argv.push_back("nilorbit");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(enumerate))
      return detail::cmd_enumerate(e_family, e_rank, e_nil, e_format, e_out);
    if (app.got_subcommand(poset))
      return detail::cmd_poset(p_family, p_rank, p_nil, p_order, p_format, p_out);
    if (app.got_subcommand(lengths))
      return detail::cmd_lengths(l_family, l_rank, l_set, l_format, l_out);
    if (app.got_subcommand(verify))
      return detail::cmd_verify(v_checks, v_family, v_rank, v_fault, v_oracle, v_out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace nilorbit
