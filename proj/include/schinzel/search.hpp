#ifndef SCHINZEL_SEARCH_HPP
#define SCHINZEL_SEARCH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "schinzel/nielsen.hpp"
#include "schinzel/perm.hpp"
#include "schinzel/perm_group.hpp"
#include "schinzel/schinzel.hpp"

namespace schinzel {

// Small-degree search for Schinzel-pair candidates (f, zeta_v f), the
// normal-<sigma_inf> conjecture checker, and the modular-example pairing
// count. All outputs are deterministic and independent of the job count.

struct SearchConfig {
  int max_degree = 8;
  int v = 2;
  std::size_t order_bound = default_order_bound();
  int jobs = 1;
  std::string cache_dir;  // empty: no cache
};

struct CandidateReport {
  int degree = 0;
  int v = 2;
  BranchTuple tuple;  // canonical representative, sigma_inf last
  std::size_t group_order = 0;
  std::vector<std::string> group_generators;  // cycle strings
  std::vector<std::string> class_labels;      // per slot
  int genus = 0;
  bool charschinzel_i = false;
  bool charschinzel_ii = false;
  bool charschinzel_iii = false;
  std::string conjugator;  // cycle string, empty when cond iii fails
  std::string gamma_image_of_sigma1;  // identifies the qualifying gamma
  std::vector<int> orbit_lengths;
  bool reducible = false;
  std::string verdict;  // irreducible | reducible_composite | newly_reducible
  std::size_t witness_order = 0;
  std::string witness_side;
  bool sigma_inf_normal = false;
  double elapsed_seconds = 0.0;  // excluded from canonical serialization
};

// True iff <sigma_inf> is normal in g; t must have an identified infinity
// slot (or be a polynomial tuple).
bool gusic_criterion(const BranchTuple& t, const PermGroup& g);

// Index of x -> kx on Z/n (letter n <-> residue 0); requires gcd(k,n) = 1.
int mult_map_index(int k, int n);

struct NormalSigmaClassification {
  int n = 0;
  int v = 2;
  std::size_t surviving_classes = 0;
  std::size_t dihedral_classes = 0;
  std::size_t cyclic_classes = 0;
  std::vector<BranchTuple> exceptions;  // conjecture counterexample candidates
  // ind(sigma_i) >= mult_map_index(k, n) for sigma_i sigma_inf sigma_i^-1 =
  // sigma_inf^k, verified on every surviving tuple.
  bool index_bound_verified = true;
};

// Genus-0 polynomial tuples (r = v+1, sigma_inf the standard n-cycle inverse)
// whose sigma_inf generates a normal subgroup, classified as dihedral-type,
// cyclic-type, or exceptions.
NormalSigmaClassification classify_normal_sigma_infty(int n, int v,
                                                      std::size_t order_bound = default_order_bound());

// Enumerate candidate classes with a qualifying gamma (the same-closure
// automorphism) and run the reducibility pipeline; one report per class.
std::vector<CandidateReport> search_schinzel(const SearchConfig& config);

struct ConjectureReport {
  int max_degree = 0;
  int v = 2;
  std::vector<CandidateReport> survivors;  // newly-reducible classes
  // Survivors grouped up to the zeta_v slot rotation; each component is one
  // (f, zeta_v f) case.
  std::size_t survivor_cases = 0;
  bool unique_dihedral_degree4 = false;
  std::vector<CandidateReport> unexplained;  // survivors without normal <sigma_inf>
};

ConjectureReport verify_gusic_conjecture(int max_degree, int v,
                                         const SearchConfig& base = {});

struct ModularPairingReport {
  int n = 0;
  std::size_t inner_classes = 0;
  std::size_t qualifying_classes = 0;
  // Qualifying classes grouped under the branch-point flip (t -> reversed t);
  // each pair is one (f, -f) candidate with a shared Galois closure.
  std::size_t qualifying_pairs = 0;
};

// The r = 4 modular data: inner classes admitting an involutive outer gamma
// with gamma(t) inner-equivalent to the zeta_2-flipped tuple.
ModularPairingReport modular_pairing_report(int n);

}  // namespace schinzel

#endif
