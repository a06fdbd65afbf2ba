#ifndef SCHINZEL_SCHINZEL_HPP
#define SCHINZEL_SCHINZEL_HPP

#include <optional>
#include <string>
#include <vector>

#include "schinzel/nielsen.hpp"
#include "schinzel/perm.hpp"
#include "schinzel/perm_group.hpp"

namespace schinzel {

// The decision layer for variables-separated pairs: reducibility of
// f(x) - g(y) via coset orbits, the trace lemma, the newly-reducible test
// through systems of imprimitivity, and the degree-v extension group G* with
// its outer conjugation.

// A pair of same-index subgroups of G defining the coset representations T_f
// and T_g; gamma, when present, maps h_f onto h_g element-wise.
struct PairSetup {
  PermGroup group;
  PermGroup h_f;
  PermGroup h_g;
  std::optional<GroupAutomorphism> gamma;
};

PairSetup make_pair_setup(PermGroup g, PermGroup h_f, PermGroup h_g,
                          std::optional<GroupAutomorphism> gamma = std::nullopt);

// Sorted orbit lengths of h_g acting through T_f on the cosets of h_f; each
// length is the degree of one irreducible factor of f(x) - g(y).
std::vector<int> factor_orbit_lengths(const PairSetup& setup);

bool is_reducible_pair(const PairSetup& setup);

// Number of cosets fixed by g in the action.
int trace(const CosetAction& action, const Perm& g);

// tr(T(s)) == tr(T(gamma(s))) for every s in G.
bool trace_profile_equal(const CosetAction& action, const GroupAutomorphism& gamma);

// Whether { s : tr(T_f(s)) > 0 } equals { s : tr(T_g(s)) > 0 }. A sufficient
// condition for reducibility (it always holds when the two representations
// are linked by a class-preserving automorphism).
bool positive_trace_criterion(const PairSetup& setup);

enum class Reducibility { irreducible, reducible_composite, newly_reducible };

std::string to_string(Reducibility r);

struct ReducibilityVerdict {
  Reducibility verdict = Reducibility::irreducible;
  std::vector<int> orbit_lengths;
  // The intermediate group witnessing composite reducibility, and which side
  // ("f" or "g") it interposes on.
  std::optional<PermGroup> witness;
  std::string witness_side;
};

// newly_reducible iff reducible and h_g acts transitively on the cosets of
// every group strictly between h_f and G, and symmetrically with f and g
// switched.
ReducibilityVerdict is_newly_reducible(const PairSetup& setup);

// G* = union of (sigma*_inf)^j G for j in Z/v, as formal pairs (j, s) with
//   (j', s') (j'', s'') = (j' + j'', gamma^{-j''}(s') s'')
// reduced by (sigma*)^v = sigma_inf; gamma is realized inside G* as
// conjugation by sigma*_inf.
class ExtGroup {
public:
  struct Elem {
    int j = 0;
    int g_index = 0;
    bool operator==(const Elem&) const = default;
  };

  // Requires gamma(sigma_inf) = sigma_inf and gamma^v = conjugation by
  // sigma_inf; throws std::invalid_argument otherwise.
  ExtGroup(PermGroup base, GroupAutomorphism gamma, Perm sigma_inf, int v);

  std::size_t order() const { return static_cast<std::size_t>(v_) * base_.order(); }
  int v() const { return v_; }
  const PermGroup& base() const { return base_; }
  const Perm& sigma_infinity() const { return sigma_inf_; }

  Elem identity() const;
  Elem sigma_star() const;          // (1, e); sigma_star()^v = (0, sigma_inf)
  Elem embed(const Perm& s) const;  // (0, s)

  Elem multiply(const Elem& x, const Elem& y) const;
  Elem inverse(const Elem& x) const;
  Elem power(const Elem& x, int k) const;
  int element_order(const Elem& x) const;
  Elem conjugate_elem(const Elem& x, const Elem& by) const;  // by * x * by^-1

  const Perm& base_part(const Elem& x) const { return base_.elements()[x.g_index]; }

  std::vector<Elem> all_elements() const;
  bool associativity_exhaustive() const;  // all |G*|^3 triples

private:
  PermGroup base_;
  GroupAutomorphism gamma_;
  std::vector<GroupAutomorphism> gamma_neg_pow_;  // gamma^0, gamma^-1, ..., gamma^{-(v-1)}
  Perm sigma_inf_;
  int v_ = 1;
};

ExtGroup build_ext_group(const PermGroup& g, const GroupAutomorphism& gamma,
                         const Perm& sigma_inf, int v);

// True iff no alpha in S_n conjugates the action onto its gamma-twist, i.e.
// the outer twist is invisible inside S_n. Brute force over S_n.
bool caz_outside_symmetric(const PermGroup& g, const GroupAutomorphism& gamma,
                           const CosetAction& action, int max_degree = 8);

struct CharSchinzelReport {
  bool cond_i = false;    // gamma fixes sigma_inf, moves the stabilizer to a
                          // non-conjugate subgroup, extension compatible
  bool cond_ii = false;   // genus 0, n-cycle at infinity, r - 1 = v
  bool cond_iii = false;  // gamma-image tuple inner-equivalent to the rotated tuple
  std::vector<Perm> conjugators;  // all witnesses for cond_iii
  std::optional<Perm> conjugator;  // lex-minimal witness
  std::string detail;
  bool ok() const { return cond_i && cond_ii && cond_iii; }
};

// The same-Galois-closure criterion for (f, zeta_v f): t must be a Nielsen
// tuple with the infinity slot last; gamma plays conjugation by sigma*_inf.
CharSchinzelReport charschinzel_check(const PermGroup& g, const BranchTuple& t,
                                      const GroupAutomorphism& gamma, int v);

}  // namespace schinzel

#endif
