// Acceptance suite: runs every criterion and prints one pass/fail line each.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "schinzel/dihedral.hpp"
#include "schinzel/json_io.hpp"
#include "schinzel/nielsen.hpp"
#include "schinzel/perm_group.hpp"
#include "schinzel/schinzel.hpp"
#include "schinzel/search.hpp"
#include "schinzel/wreath.hpp"

using namespace schinzel;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool()>& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string error;
  try {
    ok = body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream line;
  line << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << name << " ("
       << secs << "s)";
  if (!ok && !error.empty()) line << " [" << error << "]";
  std::cout << line.str() << std::endl;
  if (!ok) ++failures;
}

NielsenClassSpec cheby_spec(int n) {
  NielsenClassSpec spec;
  spec.group = dihedral_group(n);
  spec.class_reps = {cheby_sigma1(n), cheby_sigma2(n), cheby_sigma_infinity(n)};
  spec.equivalence = Equivalence::absolute;
  return spec;
}

PairSetup dihedral_pair(int n) {
  PermGroup d = dihedral_group(n);
  GroupAutomorphism caz = caz_dihedral(n);
  PermGroup h_f = PermGroup::generate(n, {cheby_sigma2(n)});
  std::vector<Perm> image;
  for (const Perm& x : h_f.elements()) image.push_back(caz.apply(x));
  PermGroup h_g = PermGroup::from_elements(n, std::move(image));
  return make_pair_setup(d, h_f, h_g, caz);
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  int n = a.degree() + b.degree();
  std::vector<Perm> gens;
  for (const Perm& s : a.generators()) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    for (int k = 1; k <= a.degree(); ++k) img[k - 1] = s(k);
    gens.push_back(Perm(std::move(img)));
  }
  for (const Perm& s : b.generators()) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    for (int k = 1; k <= b.degree(); ++k) img[a.degree() + k - 1] = a.degree() + s(k);
    gens.push_back(Perm(std::move(img)));
  }
  return PermGroup::generate(n, std::move(gens));
}

}  // namespace

int main() {
  criterion(1, "dihedral indices (n/2, n/2-1, n-1) and genus 0 for n in {4..12}", [] {
    for (int n : {4, 6, 8, 10, 12}) {
      BranchTuple t = cheby_tuple(n);
      if (t.entries[0].index() != n / 2) return false;
      if (t.entries[1].index() != n / 2 - 1) return false;
      if (t.entries[2].index() != n - 1) return false;
      if (genus(t) != 0) return false;
    }
    return true;
  });

  criterion(2, "6 absolute Nielsen classes for n in {4, 6, 8}", [] {
    for (int n : {4, 6, 8}) {
      auto enumeration = enumerate_nielsen(cheby_spec(n));
      if (enumeration.representatives.size() != 6) return false;
      if (!enumeration.used_full_normalizer) return false;
    }
    return true;
  });

  criterion(3, "factor orbits all of length 2 for even n <= 12", [] {
    for (int n : {4, 6, 8, 10, 12})
      if (factor_orbit_lengths(dihedral_pair(n)) != std::vector<int>(n / 2, 2))
        return false;
    return true;
  });

  criterion(4, "newly reducible exactly at n = 4, composite with witness beyond", [] {
    auto v4 = is_newly_reducible(dihedral_pair(4));
    if (v4.verdict != Reducibility::newly_reducible) return false;
    for (int n : {6, 8, 10, 12}) {
      auto v = is_newly_reducible(dihedral_pair(n));
      if (v.verdict != Reducibility::reducible_composite) return false;
      if (!v.witness || v.witness->order() == 0 || v.witness_side.empty()) return false;
    }
    return true;
  });

  criterion(5, "trace lemma over groups of order <= 48, all subgroups, all class-preserving automorphisms", [] {
    std::vector<PermGroup> test_set = {
        PermGroup::cyclic(6),
        PermGroup::symmetric(3),
        dihedral_group(4),
        PermGroup::generate(4, {Perm::parse("(1 2 3)", 4), Perm::parse("(1 2)(3 4)", 4)}),  // A_4
        dihedral_group(6),
        dihedral_group(8),
        PermGroup::symmetric(4),
        dihedral_group(12),
        direct_product(PermGroup::symmetric(4), PermGroup::cyclic(2)),  // order 48
    };
    for (const PermGroup& g : test_set) {
      if (g.order() > 48) return false;
      std::vector<PermGroup> subgroups = intermediate_subgroups(g, PermGroup::trivial(g.degree()));
      subgroups.push_back(PermGroup::trivial(g.degree()));
      std::vector<GroupAutomorphism> preserving;
      for (const GroupAutomorphism& gamma : all_automorphisms(g))
        if (is_class_preserving(g, gamma).first) preserving.push_back(gamma);
      for (const PermGroup& h : subgroups) {
        CosetAction action = coset_action(g, h);
        for (const GroupAutomorphism& gamma : preserving)
          if (!trace_profile_equal(action, gamma)) return false;
      }
    }
    return true;
  });

  criterion(6, "extension group: order 4n, sigma* of order 2n, associative, outside S_n at n = 4", [] {
    for (int n : {4, 6, 8, 10, 12}) {
      ExtGroup ext = build_ext_group(dihedral_group(n), caz_dihedral(n),
                                     cheby_sigma_infinity(n), 2);
      if (ext.order() != 4 * static_cast<std::size_t>(n)) return false;
      if (ext.element_order(ext.sigma_star()) != 2 * n) return false;
      if (!(ext.power(ext.sigma_star(), 2) == ext.embed(cheby_sigma_infinity(n))))
        return false;
    }
    ExtGroup e4 = build_ext_group(dihedral_group(4), caz_dihedral(4),
                                  cheby_sigma_infinity(4), 2);
    if (!e4.associativity_exhaustive()) return false;
    PermGroup d4 = dihedral_group(4);
    PermGroup h = PermGroup::generate(4, {cheby_sigma2(4)});
    return caz_outside_symmetric(d4, caz_dihedral(4), coset_action(d4, h));
  });

  criterion(7, "gamma-image of the n = 4 tuple is inner-equivalent to its rotation, conjugators include s2", [] {
    auto report = charschinzel_check(dihedral_group(4), cheby_tuple(4),
                                     caz_dihedral(4), 2);
    if (!report.ok()) return false;
    return std::find(report.conjugators.begin(), report.conjugators.end(),
                     cheby_sigma2(4)) != report.conjugators.end();
  });

  criterion(8, "composite branch cycles with the prescribed shapes and fiber round-trip, n in {4, 6, 8}", [] {
    for (int n : {4, 6, 8}) {
      auto result = solve_comp_branch(n, 2);
      if (result.solutions.empty()) return false;
      if (!result.any_roundtrip) return false;
      std::vector<int> shape0(n, 2);
      std::vector<int> shape1(n - 1, 2);
      shape1.push_back(1);
      shape1.push_back(1);
      for (const auto& sol : result.solutions) {
        if (sol.tuple.entries[0].cycle_type() != shape0) return false;
        if (sol.tuple.entries[1].cycle_type() != shape1) return false;
        if (!(sol.tuple.entries[2] == sigma_star_infinity(n, 2))) return false;
      }
    }
    return true;
  });

  criterion(9, "modular example: fiber genus 0, Galois closure genus 1, even n <= 12", [] {
    for (int n : {4, 6, 8, 10, 12}) {
      BranchTuple t = modular_tuple(n);
      if (genus(t) != 0) return false;
      if (galois_closure_genus(t, dihedral_group(n)) != 1) return false;
    }
    return true;
  });

  criterion(10, "rotation applied r-1 times is the identity on every enumerated tuple", [] {
    for (int n : {4, 6, 8}) {
      auto enumeration = enumerate_nielsen(cheby_spec(n));
      for (BranchTuple t : enumeration.representatives) {
        if (!t.entries.back().is_n_cycle()) {
          // Re-anchor: rotation needs the infinity slot last; all class
          // orderings occur among representatives, use those ending in C_inf.
          continue;
        }
        t.infinity_slot = t.r();
        BranchTuple acc = t;
        for (int i = 0; i + 1 < t.r(); ++i) acc = rotate_tuple(acc);
        if (!(acc == t)) return false;
      }
    }
    return true;
  });

  criterion(11, "conjecture evidence: unique degree-4 survivor up to degree 7; modular pairing count 2", [] {
    auto report = verify_gusic_conjecture(7, 2);
    if (!report.unique_dihedral_degree4) return false;
    if (report.survivor_cases != 1) return false;
    if (!report.unexplained.empty()) return false;
    auto modular = modular_pairing_report(4);
    return modular.qualifying_pairs == 2;
  });

  criterion(12, "search output byte-identical for 1 and 8 jobs (max-n 6, v 2)", [] {
    SearchConfig one;
    one.max_degree = 6;
    one.v = 2;
    one.jobs = 1;
    SearchConfig eight = one;
    eight.jobs = 8;
    json ja = json::array(), jb = json::array();
    for (const auto& r : search_schinzel(one)) ja.push_back(candidate_to_json(r));
    for (const auto& r : search_schinzel(eight)) jb.push_back(candidate_to_json(r));
    return ja.dump() == jb.dump();
  });

  if (failures == 0)
    std::cout << "all criteria passed" << std::endl;
  else
    std::cout << failures << " criteria failed" << std::endl;
  return failures;
}
