// Command-line front end: dihedral dossiers, Nielsen enumeration, pair
// verdicts, composite branch cycles, the candidate search, and the
// conjecture checker. Exit codes: 0 ok, 1 usage, 2 bound exceeded,
// 3 internal invariant violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "schinzel/dihedral.hpp"
#include "schinzel/errors.hpp"
#include "schinzel/json_io.hpp"
#include "schinzel/nielsen.hpp"
#include "schinzel/perm_group.hpp"
#include "schinzel/schinzel.hpp"
#include "schinzel/search.hpp"
#include "schinzel/wreath.hpp"

namespace {

using schinzel::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return json::parse(in);
}

std::string default_cache_dir() {
  if (const char* env = std::getenv("SCHINZEL_CACHE_DIR")) return env;
  return "";
}

json dihedral_dossier(int n) {
  using namespace schinzel;
  json out;
  out["n"] = n;

  PermGroup d = dihedral_group(n);
  out["group"] = group_to_json(d);

  BranchTuple t = cheby_tuple(n);
  out["tuple"] = tuple_to_json(t);
  json cycles = json::array();
  json indices = json::array();
  json labels = json::array();
  for (const Perm& e : t.entries) {
    cycles.push_back(e.cycle_string());
    indices.push_back(e.index());
    labels.push_back(dihedral_class_label(n, e));
  }
  out["tuple_cycles"] = cycles;
  out["indices"] = indices;
  out["class_labels"] = labels;
  out["genus"] = genus(t);
  out["galois_closure_genus"] = galois_closure_genus(t, d);

  NielsenClassSpec spec{d, {cheby_sigma2(n), cheby_sigma1(n), cheby_sigma_infinity(n)},
                        Equivalence::absolute};
  out["nielsen_absolute"] = nielsen_report_to_json(spec, enumerate_nielsen(spec));

  GroupAutomorphism caz = caz_dihedral(n);
  auto [preserving, induced] = is_class_preserving(d, caz);
  out["caz_class_preserving"] = preserving;
  out["caz_class_permutation"] = induced;

  PermGroup h_f = PermGroup::generate(n, {cheby_sigma2(n)});
  std::vector<Perm> image;
  for (const Perm& x : h_f.elements()) image.push_back(caz.apply(x));
  PermGroup h_g = PermGroup::from_elements(n, std::move(image));
  PairSetup pair = make_pair_setup(d, h_f, h_g, caz);
  ReducibilityVerdict verdict = is_newly_reducible(pair);
  CharSchinzelReport cs = charschinzel_check(d, t, caz, 2);
  out["pair_verdict"] = verdict_to_json(verdict, &cs);
  out["positive_trace_criterion"] = positive_trace_criterion(pair);

  ExtGroup ext = build_ext_group(d, caz, cheby_sigma_infinity(n), 2);
  out["ext_group_order"] = ext.order();
  out["sigma_star_order"] = ext.element_order(ext.sigma_star());
  if (n <= 8)
    out["caz_outside_symmetric"] =
        caz_outside_symmetric(d, caz, coset_action(d, h_f));

  BranchTuple modular = modular_tuple(n);
  out["modular_fiber_genus"] = genus(modular);
  out["modular_closure_genus"] = galois_closure_genus(modular, d);
  out["gusic_sigma_inf_normal"] = gusic_criterion(t, d);
  return out;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Branch-cycle computations for variables-separated Schinzel pairs"};
  app.require_subcommand(1);

  auto* dihedral = app.add_subcommand("dihedral", "full dossier for the degree-n family");
  int n = 4;
  bool as_json = false;
  dihedral->add_option("--n", n, "even degree >= 4")->required();
  dihedral->add_flag("--json", as_json, "emit JSON");

  auto* nielsen = app.add_subcommand("nielsen", "enumerate Nielsen-class representatives");
  std::string group_path, class_spec, equivalence = "abs";
  nielsen->add_option("--group", group_path, "group JSON file")->required();
  nielsen->add_option("--classes", class_spec,
                      "';'-separated class representatives, cycle notation or "
                      "C_{-1,0} / C_{-1,1} / C_inf")
      ->required();
  nielsen->add_option("--equivalence", equivalence, "abs|inner");

  auto* schinzel_cmd = app.add_subcommand("schinzel", "pair verdicts for a tuple and gamma");
  std::string tuple_path, gamma_path;
  int v = 2;
  schinzel_cmd->add_option("--tuple", tuple_path, "tuple JSON file")->required();
  schinzel_cmd->add_option("--gamma", gamma_path, "automorphism JSON file")->required();
  schinzel_cmd->add_option("--v", v, "extension degree");

  auto* compbranch = app.add_subcommand("compbranch", "composite branch cycles over mu = z^2");
  int cb_n = 4;
  compbranch->add_option("--n", cb_n, "even degree >= 4")->required();

  auto* search = app.add_subcommand("search", "candidate search up to a degree bound");
  schinzel::SearchConfig config;
  config.cache_dir = default_cache_dir();
  bool no_cache = false;
  bool timings = false;
  search->add_option("--max-n", config.max_degree, "max degree")->required();
  search->add_option("--v", config.v, "extension degree");
  search->add_option("--jobs", config.jobs, "worker threads");
  search->add_option("--order-bound", config.order_bound, "group order bound");
  search->add_option("--cache-dir", config.cache_dir, "verdict cache directory");
  search->add_flag("--no-cache", no_cache, "disable the verdict cache");
  search->add_flag("--timings", timings, "log per-candidate timings to stderr");

  auto* conjecture = app.add_subcommand("conjecture", "normal-sigma_inf conjecture evidence");
  schinzel::SearchConfig cj_config;
  cj_config.cache_dir = default_cache_dir();
  conjecture->add_option("--max-n", cj_config.max_degree, "max degree")->required();
  conjecture->add_option("--v", cj_config.v, "extension degree");
  conjecture->add_option("--jobs", cj_config.jobs, "worker threads");

  CLI11_PARSE(app, argc, argv);

  if (dihedral->parsed()) {
    json out = dihedral_dossier(n);
    if (as_json) {
      std::cout << out.dump(2) << '\n';
    } else {
      std::cout << "degree " << n << " dihedral family\n";
      std::cout << "  tuple: " << out["tuple_cycles"].dump()
                << "  indices " << out["indices"].dump() << "  genus "
                << out["genus"] << '\n';
      std::cout << "  nielsen classes (absolute): "
                << out["nielsen_absolute"]["count"] << '\n';
      std::cout << "  orbit lengths: " << out["pair_verdict"]["orbit_lengths"].dump()
                << "  verdict: " << out["pair_verdict"]["verdict"].get<std::string>()
                << '\n';
      std::cout << "  ext group order " << out["ext_group_order"]
                << ", sigma* order " << out["sigma_star_order"] << '\n';
      std::cout << "  modular closure genus " << out["modular_closure_genus"] << '\n';
    }
    return 0;
  }

  if (nielsen->parsed()) {
    schinzel::PermGroup g = schinzel::group_from_json(load_json(group_path));
    schinzel::NielsenClassSpec spec;
    spec.group = g;
    spec.equivalence = equivalence == "inner" ? schinzel::Equivalence::inner
                                              : schinzel::Equivalence::absolute;
    std::size_t pos = 0;
    while (pos <= class_spec.size()) {
      std::size_t next = class_spec.find(';', pos);
      std::string token = class_spec.substr(
          pos, next == std::string::npos ? std::string::npos : next - pos);
      if (!token.empty()) {
        auto rep = schinzel::dihedral_class_rep(g.degree(), token);
        spec.class_reps.push_back(rep ? *rep
                                      : schinzel::Perm::parse(token, g.degree()));
      }
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    auto enumeration = schinzel::enumerate_nielsen(spec);
    std::cout << schinzel::nielsen_report_to_json(spec, enumeration).dump(2) << '\n';
    return 0;
  }

  if (schinzel_cmd->parsed()) {
    schinzel::BranchTuple t = schinzel::tuple_from_json(load_json(tuple_path));
    schinzel::GroupAutomorphism gamma =
        schinzel::automorphism_from_json(load_json(gamma_path));
    const schinzel::PermGroup& g = gamma.domain();
    schinzel::CharSchinzelReport cs = schinzel::charschinzel_check(g, t, gamma, v);
    schinzel::PermGroup h_f = schinzel::point_stabilizer(g, 1);
    std::vector<schinzel::Perm> image;
    for (const schinzel::Perm& x : h_f.elements()) image.push_back(gamma.apply(x));
    schinzel::PermGroup h_g =
        schinzel::PermGroup::from_elements(g.degree(), std::move(image));
    auto setup = schinzel::make_pair_setup(g, h_f, h_g, gamma);
    auto verdict = schinzel::is_newly_reducible(setup);
    std::cout << schinzel::verdict_to_json(verdict, &cs).dump(2) << '\n';
    return 0;
  }

  if (compbranch->parsed()) {
    auto result = schinzel::solve_comp_branch(cb_n, 2);
    std::cout << schinzel::compbranch_to_json(result).dump(2) << '\n';
    return 0;
  }

  if (search->parsed()) {
    if (no_cache) config.cache_dir.clear();
    auto reports = schinzel::search_schinzel(config);
    json out = json::array();
    for (const auto& r : reports) {
      out.push_back(schinzel::candidate_to_json(r));
      if (timings)
        std::cerr << "candidate n=" << r.degree << " " << r.tuple.entries[0].cycle_string()
                  << " took " << r.elapsed_seconds << "s\n";
    }
    std::cout << out.dump(2) << '\n';
    return 0;
  }

  if (conjecture->parsed()) {
    auto report = schinzel::verify_gusic_conjecture(cj_config.max_degree,
                                                    cj_config.v, cj_config);
    json out = schinzel::conjecture_to_json(report);
    if (cj_config.v == 2 && cj_config.max_degree >= 4)
      out["modular_pairing_n4"] =
          schinzel::modular_pairing_to_json(schinzel::modular_pairing_report(4));
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const schinzel::BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << '\n';
    return 2;
  } catch (const schinzel::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
