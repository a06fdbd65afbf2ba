#ifndef SCHINZEL_WREATH_HPP
#define SCHINZEL_WREATH_HPP

#include <optional>
#include <string>
#include <vector>

#include "schinzel/nielsen.hpp"
#include "schinzel/perm.hpp"
#include "schinzel/perm_group.hpp"
#include "schinzel/perm_group.hpp"

namespace schinzel {

// The wreath product G_f wr Z/v on n*v letters: letter k in block i is
// flattened as (i-1)*n + k. A wreath element applies its coordinate
// permutations blockwise and then shifts the blocks.

struct WreathElem {
  int n = 0;
  int v = 0;
  int shift = 0;                // residue mod v
  std::vector<Perm> coords;     // coords[i] acts inside block i+1

  WreathElem() = default;
  WreathElem(int n, int v, int shift, std::vector<Perm> coords);

  Perm to_perm() const;  // degree n*v
  // Semidirect-product rule; applies rhs first (right-to-left, like Perm).
  WreathElem operator*(const WreathElem& rhs) const;
  WreathElem inverse() const;
  bool operator==(const WreathElem&) const = default;
};

Perm wreath_embed(const std::vector<Perm>& coords, int shift);

// Factor a degree-n*v permutation respecting the block structure; nullopt if
// some block is torn apart.
std::optional<WreathElem> wreath_factor(const Perm& p, int n, int v);

// The induced permutation of the v blocks, as a Perm of degree v.
std::optional<Perm> block_image(const Perm& p, int n, int v);

// The n*v-cycle (1_1 1_2 ... 1_v 2_1 ... n_v); its v-th power is blockwise
// the n-cycle (1 2 ... n), and its block image generates Z/v.
Perm sigma_star_infinity(int n, int v);

struct WreathCondReport {
  bool respects_blocks = false;
  bool onto_shift = false;              // surjects onto Z/v
  std::vector<bool> coord_projections;  // blockwise part onto G_f, per block
  bool ok = false;
};

// The wreath conditions for a subgroup H of G_f wr Z/v relative to G_f.
WreathCondReport check_wreath_conditions(const PermGroup& h, const PermGroup& g_f,
                                         int n, int v);

// Sufficient condition for the composite monodromy to be the full wreath
// product: every zeta_v-orbit of finite branch points is a singleton and no
// branch point collides with a branch point of mu (collision marked by the
// caller). Orbit sizes must divide v.
bool disjointness_condition(const std::vector<int>& orbit_sizes, int v,
                            bool collision_with_mu);

// The extension monodromy G* = <sigma*_inf, embedded G_f> of order v*|G_f|
// on n*v letters, for the dihedral family with v = 2: the blockwise copy of
// D_n is the twisted diagonal {(c^{-1}(s), s)} for c = caz_dihedral(n).
PermGroup dihedral_ext_wreath_group(int n);

struct CompBranchSolution {
  BranchTuple tuple;  // (s*_0, s*_1, s*_inf) on 2n letters, product-one
  // Fiber branch cycles recovered by restriction, one per entry and block
  // cycle (identities included).
  std::vector<Perm> fiber_cycles;
  bool roundtrip = false;  // fiber data matches the Chebyshev tuple up to
                           // simultaneous relabelling
};

struct CompBranchResult {
  int n = 0;
  int v = 2;
  std::size_t group_order = 0;
  std::vector<CompBranchSolution> solutions;  // sorted; first is lex-minimal
  bool any_roundtrip = false;
};

// Exhaustive search for branch cycles of mu o f, mu(z) = z^2, over the
// dihedral family: s*_inf fixed by sigma_star_infinity, s*_0 of shape 2^n
// lying over the branch point of mu, s*_1 of shape 2^{n-1} 1^2, product-one
// and generation. Throws InvariantViolation when no tuple exists.
CompBranchResult solve_comp_branch(int n, int v = 2);

struct FiberRestriction {
  int entry_slot = 0;  // 1-based slot in the input tuple
  struct BlockCycle {
    std::vector<int> blocks;  // 1-based blocks forming one cycle downstairs
    Perm fiber;               // (entry^len) restricted to blocks.front()
  };
  std::vector<BlockCycle> cycles;
};

// Branch cycles of f recovered from branch cycles of mu o f: for each entry
// and each length-l cycle of its block image, the restriction of the l-th
// power to one block of that cycle.
std::vector<FiberRestriction> restrict_to_fiber(const BranchTuple& t_star, int n, int v);

}  // namespace schinzel

#endif
