#ifndef SCHINZEL_DIHEDRAL_HPP
#define SCHINZEL_DIHEDRAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "schinzel/nielsen.hpp"
#include "schinzel/perm.hpp"
#include "schinzel/perm_group.hpp"

namespace schinzel {

// The affine families of covers: A_n(A) = Z/n x| A acting by x -> ax + b,
// the dihedral branch cycles of the degree-n Chebyshev polynomial, the
// class-swapping automorphism c of D_n, and the r = 4 modular example.

// The matrix (a b; 0 1): x -> ax + b on Z/n.
struct AffineElem {
  int n = 0;
  int a = 1;
  int b = 0;

  AffineElem() = default;
  AffineElem(int n, int a, int b);

  // Matrix product; the right factor acts first.
  AffineElem operator*(const AffineElem& rhs) const;
  AffineElem inverse() const;
  bool operator==(const AffineElem&) const = default;

  // Residues relabelled as letters: letter k <-> residue k mod n
  // (so letter n <-> residue 0).
  Perm to_perm() const;
  static std::optional<AffineElem> from_perm(const Perm& p, int n);
};

// Z/n x| A as a degree-n permutation group; A must be a subgroup of (Z/n)*.
PermGroup affine_group(int n, const std::vector<int>& units);

PermGroup dihedral_group(int n);  // affine_group(n, {1, -1})

// The order-2 elements of A_n(A): a^2 = 1 (a != 1), b(a+1) = 0.
std::vector<AffineElem> affine_involutions(int n, const std::vector<int>& units);

// Branch cycles of the degree-n Chebyshev cover, n even >= 4:
// s1 = (-1,1), s2 = (-1,0), s3 = sigma_inf = (1,-1) = (1 2 ... n)^{-1}.
BranchTuple cheby_tuple(int n);

Perm cheby_sigma1(int n);
Perm cheby_sigma2(int n);
Perm cheby_sigma_infinity(int n);

// The automorphism (1,b) -> (1,b), (-1,b) -> (-1,b-1) of D_n, n even.
// Swaps the reflection classes and fixes sigma_inf; its square is
// conjugation by sigma_inf.
GroupAutomorphism caz_dihedral(int n);

// r = 4 branch cycles (s1, s2, s2, s1) for branch points (-1,-2,+2,+1);
// no entry is an n-cycle, fiber genus 0, Galois-closure genus 1.
BranchTuple modular_tuple(int n);

// Genus of the Galois closure: Riemann-Hurwitz over the regular
// representation, using ind(s) = |G| (1 - 1/ord(s)).
long long galois_closure_genus(const BranchTuple& t, const PermGroup& g);

// Whether <(-1,1)> and <(-1,0)> are conjugate in D_n (true exactly when n is
// odd, where (f, -f) are equivalent covers).
bool odd_dihedral_conjugacy(int n);

// "C_{-1,0}", "C_{-1,1}", "C_inf", or the generic label.
std::string dihedral_class_label(int n, const Perm& representative);

// Match a user-facing label ("C_{-1,0}", "C_{-1,1}", "C_inf") to a class
// representative of D_n.
std::optional<Perm> dihedral_class_rep(int n, const std::string& label);

}  // namespace schinzel

#endif
