#ifndef SCHINZEL_NIELSEN_HPP
#define SCHINZEL_NIELSEN_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schinzel/perm.hpp"
#include "schinzel/perm_group.hpp"

namespace schinzel {

// Branch-cycle tuples, the class conditions defining a Nielsen class,
// Riemann-Hurwitz genus, absolute/inner equivalence, and the zeta_v rotation
// on tuples with the infinity slot last.

struct BranchTuple {
  int degree = 0;
  std::vector<Perm> entries;
  std::optional<int> infinity_slot;  // 1-based

  int r() const { return static_cast<int>(entries.size()); }
  bool product_one() const;
  // Whether <entries> acts transitively on {1..degree}.
  bool transitive() const;
  Perm product() const;  // entries[0] * entries[1] * ... (rightmost applied first)

  auto operator<=>(const BranchTuple& other) const {
    return entries <=> other.entries;
  }
  bool operator==(const BranchTuple& other) const { return entries == other.entries; }
};

enum class Equivalence { absolute, inner };

struct NielsenClassSpec {
  PermGroup group;
  std::vector<Perm> class_reps;  // multiset, one rep per slot class
  Equivalence equivalence = Equivalence::absolute;
};

struct VerifyResult {
  bool ok = false;
  std::string diagnosis;  // names the first failed condition; "ok" otherwise
};

// Product-one, exact generation of spec.group, and class-multiset match.
VerifyResult verify_nielsen(const BranchTuple& t, const PermGroup& g,
                            const NielsenClassSpec& spec);

// Riemann-Hurwitz: 2(n + g - 1) = sum of entry indices. Requires product-one
// and transitivity; throws std::invalid_argument on parity violation or
// negative genus.
int genus(const BranchTuple& t);

struct PolyCheck {
  bool is_polynomial = false;
  std::optional<int> slot;  // last n-cycle slot when polynomial
};

// Genus 0 with an n-cycle entry (the cover is a polynomial's).
PolyCheck is_polynomial_tuple(const BranchTuple& t);

struct NielsenEnumeration {
  std::size_t raw_tuple_count = 0;
  std::vector<BranchTuple> representatives;  // canonical, sorted
  // False when the acting group fell back from N_{S_n}(G,C) to G because the
  // degree exceeds the brute-force bound.
  bool used_full_normalizer = true;
};

// One lexicographically-minimal representative per equivalence class.
NielsenEnumeration enumerate_nielsen(const NielsenClassSpec& spec,
                                     std::size_t tuple_bound = 2000000);

// The canonical surjection from inner classes onto absolute classes for the
// same (G, C); fibers keyed by the absolute representative.
struct ClassMapReport {
  std::vector<BranchTuple> inner_reps;
  std::vector<BranchTuple> absolute_reps;
  std::map<BranchTuple, std::vector<BranchTuple>> fibers;
};

ClassMapReport equivalence_class_map(const NielsenClassSpec& spec);

// (s1, ..., sr) -> (s2, ..., s_{r-1}, s1, s1^{-1} sr s1): branch cycles of
// zeta_v f relative to the same classical generators served by a one-orbit
// rotation. Requires r >= 3 and the infinity slot last.
BranchTuple rotate_tuple(const BranchTuple& t);

// Simultaneous conjugation of all entries.
BranchTuple conjugate_tuple(const BranchTuple& t, const Perm& by);

// All g in G with conjugate_tuple(a, g) == b.
std::vector<Perm> inner_conjugators(const BranchTuple& a, const BranchTuple& b,
                                    const PermGroup& g);

// Lexicographic minimum of the tuple's orbit under conjugation by `acting`.
BranchTuple canonical_tuple(const BranchTuple& t, const std::vector<Perm>& acting);

// How multiplication by zeta_v permutes the r-1 finite branch-point slots;
// under the one-orbit condition this is the (r-1)-cycle (1 2 ... r-1).
struct BranchSlotMap {
  int v = 0;
  Perm slot_permutation;
};

BranchSlotMap one_orbit_slot_map(int v);

}  // namespace schinzel

#endif
