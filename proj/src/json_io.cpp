#include "schinzel/json_io.hpp"

#include <sstream>

namespace schinzel {

json perm_to_json(const Perm& p) { return json(p.images()); }

Perm perm_from_json(const json& j) {
  return Perm(j.get<std::vector<int>>());
}

json group_to_json(const PermGroup& g) {
  json out;
  out["degree"] = g.degree();
  json gens = json::array();
  for (const Perm& s : g.generators()) gens.push_back(perm_to_json(s));
  out["generators"] = gens;
  out["order"] = g.order();
  return out;
}

PermGroup group_from_json(const json& j, std::size_t order_bound) {
  int degree = j.at("degree").get<int>();
  std::vector<Perm> gens;
  for (const auto& item : j.at("generators")) gens.push_back(perm_from_json(item));
  PermGroup g = PermGroup::generate(degree, std::move(gens), order_bound);
  if (j.contains("order") && j["order"].get<std::size_t>() != g.order())
    throw std::invalid_argument("group json: declared order does not match closure");
  return g;
}

json tuple_to_json(const BranchTuple& t) {
  json out;
  out["degree"] = t.degree;
  json entries = json::array();
  for (const Perm& e : t.entries) entries.push_back(perm_to_json(e));
  out["entries"] = entries;
  if (t.infinity_slot)
    out["infinity_slot"] = *t.infinity_slot;
  else
    out["infinity_slot"] = nullptr;
  return out;
}

BranchTuple tuple_from_json(const json& j) {
  BranchTuple t;
  t.degree = j.at("degree").get<int>();
  for (const auto& item : j.at("entries")) t.entries.push_back(perm_from_json(item));
  for (const Perm& e : t.entries)
    if (e.degree() != t.degree)
      throw std::invalid_argument("tuple json: entry degree mismatch");
  if (j.contains("infinity_slot") && !j["infinity_slot"].is_null())
    t.infinity_slot = j["infinity_slot"].get<int>();
  return t;
}

json automorphism_to_json(const GroupAutomorphism& a) {
  json out;
  out["group"] = group_to_json(a.domain());
  json gens = json::array(), images = json::array();
  for (const Perm& s : a.domain().generators()) gens.push_back(perm_to_json(s));
  for (const Perm& s : a.generator_images()) images.push_back(perm_to_json(s));
  out["generators"] = gens;
  out["images"] = images;
  return out;
}

GroupAutomorphism automorphism_from_json(const json& j) {
  PermGroup g = group_from_json(j.at("group"));
  std::vector<Perm> gens, images;
  for (const auto& item : j.at("generators")) gens.push_back(perm_from_json(item));
  for (const auto& item : j.at("images")) images.push_back(perm_from_json(item));
  return automorphism_from_images(g, gens, images);
}

json nielsen_report_to_json(const NielsenClassSpec& spec,
                            const NielsenEnumeration& e) {
  json out;
  out["group"] = group_to_json(spec.group);
  json classes = json::array();
  for (const Perm& rep : spec.class_reps) classes.push_back(rep.cycle_string());
  out["classes"] = classes;
  out["equivalence"] =
      spec.equivalence == Equivalence::absolute ? "absolute" : "inner";
  out["count"] = e.representatives.size();
  json reps = json::array();
  for (const BranchTuple& t : e.representatives) reps.push_back(tuple_to_json(t));
  out["representatives"] = reps;
  out["raw_tuples"] = e.raw_tuple_count;
  out["used_full_normalizer"] = e.used_full_normalizer;
  return out;
}

json verdict_to_json(const ReducibilityVerdict& verdict,
                     const CharSchinzelReport* charschinzel) {
  json out;
  out["reducible"] = verdict.orbit_lengths.size() >= 2;
  out["orbit_lengths"] = verdict.orbit_lengths;
  out["newly_reducible"] = verdict.verdict == Reducibility::newly_reducible;
  out["verdict"] = to_string(verdict.verdict);
  if (verdict.witness) {
    json w;
    w["order"] = verdict.witness->order();
    json gens = json::array();
    for (const Perm& s : verdict.witness->generators())
      gens.push_back(s.cycle_string());
    w["generators"] = gens;
    w["side"] = verdict.witness_side;
    out["witness_intermediate"] = w;
  } else {
    out["witness_intermediate"] = nullptr;
  }
  if (charschinzel) {
    json c;
    c["cond_i"] = charschinzel->cond_i;
    c["cond_ii"] = charschinzel->cond_ii;
    c["cond_iii"] = charschinzel->cond_iii;
    c["conjugator"] = charschinzel->conjugator
                          ? json(charschinzel->conjugator->cycle_string())
                          : json(nullptr);
    out["charschinzel"] = c;
  }
  return out;
}

json candidate_to_json(const CandidateReport& r) {
  json out;
  out["degree"] = r.degree;
  out["v"] = r.v;
  out["tuple"] = tuple_to_json(r.tuple);
  out["group_order"] = r.group_order;
  out["group_generators"] = r.group_generators;
  out["class_labels"] = r.class_labels;
  out["genus"] = r.genus;
  json c;
  c["cond_i"] = r.charschinzel_i;
  c["cond_ii"] = r.charschinzel_ii;
  c["cond_iii"] = r.charschinzel_iii;
  c["conjugator"] = r.conjugator.empty() ? json(nullptr) : json(r.conjugator);
  c["gamma_image_of_sigma1"] = r.gamma_image_of_sigma1;
  out["charschinzel"] = c;
  out["orbit_lengths"] = r.orbit_lengths;
  out["reducible"] = r.reducible;
  out["verdict"] = r.verdict;
  out["witness_order"] = r.witness_order;
  out["witness_side"] = r.witness_side;
  out["sigma_inf_normal"] = r.sigma_inf_normal;
  return out;
}

CandidateReport candidate_from_json(const json& j) {
  CandidateReport r;
  r.degree = j.at("degree").get<int>();
  r.v = j.at("v").get<int>();
  r.tuple = tuple_from_json(j.at("tuple"));
  r.group_order = j.at("group_order").get<std::size_t>();
  r.group_generators = j.at("group_generators").get<std::vector<std::string>>();
  r.class_labels = j.at("class_labels").get<std::vector<std::string>>();
  r.genus = j.at("genus").get<int>();
  const auto& c = j.at("charschinzel");
  r.charschinzel_i = c.at("cond_i").get<bool>();
  r.charschinzel_ii = c.at("cond_ii").get<bool>();
  r.charschinzel_iii = c.at("cond_iii").get<bool>();
  if (!c.at("conjugator").is_null()) r.conjugator = c["conjugator"].get<std::string>();
  r.gamma_image_of_sigma1 = c.at("gamma_image_of_sigma1").get<std::string>();
  r.orbit_lengths = j.at("orbit_lengths").get<std::vector<int>>();
  r.reducible = j.at("reducible").get<bool>();
  r.verdict = j.at("verdict").get<std::string>();
  r.witness_order = j.at("witness_order").get<std::size_t>();
  r.witness_side = j.at("witness_side").get<std::string>();
  r.sigma_inf_normal = j.at("sigma_inf_normal").get<bool>();
  return r;
}

json compbranch_to_json(const CompBranchResult& result) {
  json out;
  out["n"] = result.n;
  out["v"] = result.v;
  out["group_order"] = result.group_order;
  json sols = json::array();
  for (const auto& sol : result.solutions) {
    json s;
    json entries = json::array();
    for (const Perm& e : sol.tuple.entries) entries.push_back(e.cycle_string());
    s["tuple"] = entries;
    json fibers = json::array();
    for (const Perm& f : sol.fiber_cycles) fibers.push_back(f.cycle_string());
    s["fiber_cycles"] = fibers;
    s["roundtrip"] = sol.roundtrip;
    sols.push_back(s);
  }
  out["solutions"] = sols;
  out["solution_count"] = result.solutions.size();
  out["restriction_roundtrip"] = result.any_roundtrip ? "pass" : "fail";
  return out;
}

json conjecture_to_json(const ConjectureReport& report) {
  json out;
  out["max_degree"] = report.max_degree;
  out["v"] = report.v;
  json survivors = json::array();
  for (const auto& s : report.survivors) survivors.push_back(candidate_to_json(s));
  out["survivors"] = survivors;
  out["survivor_cases"] = report.survivor_cases;
  out["unique_dihedral_degree4"] = report.unique_dihedral_degree4;
  json unexplained = json::array();
  for (const auto& s : report.unexplained) unexplained.push_back(candidate_to_json(s));
  out["unexplained"] = unexplained;
  return out;
}

json modular_pairing_to_json(const ModularPairingReport& report) {
  json out;
  out["n"] = report.n;
  out["inner_classes"] = report.inner_classes;
  out["qualifying_classes"] = report.qualifying_classes;
  out["qualifying_pairs"] = report.qualifying_pairs;
  return out;
}

std::string candidate_cache_key(int degree, int v, const BranchTuple& tuple,
                                std::size_t order_bound) {
  json key;
  key["degree"] = degree;
  key["v"] = v;
  key["tuple"] = tuple_to_json(tuple);
  key["order_bound"] = order_bound;
  return key.dump();
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex;
  for (int i = 15; i >= 0; --i) os << ((h >> (4 * i)) & 0xF);
  return os.str();
}

}  // namespace schinzel
