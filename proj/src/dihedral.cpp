#include "schinzel/dihedral.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "schinzel/errors.hpp"

namespace schinzel {

namespace {

int mod(int x, int n) {
  int r = x % n;
  return r < 0 ? r + n : r;
}

int letter_of_residue(int x, int n) {
  int r = mod(x, n);
  return r == 0 ? n : r;
}

int residue_of_letter(int k, int n) {
  return k == n ? 0 : k;
}

bool is_unit(int a, int n) {
  return std::gcd(mod(a, n), n) == 1;
}

}  // namespace

AffineElem::AffineElem(int n, int a, int b) : n(n), a(mod(a, n)), b(mod(b, n)) {
  if (n < 2) throw std::invalid_argument("affine modulus must be >= 2");
  if (!is_unit(this->a, n)) throw std::invalid_argument("a is not a unit mod n");
}

AffineElem AffineElem::operator*(const AffineElem& rhs) const {
  if (n != rhs.n) throw std::invalid_argument("affine modulus mismatch");
  return AffineElem(n, a * rhs.a, a * rhs.b + b);
}

AffineElem AffineElem::inverse() const {
  int a_inv = 0;
  for (int x = 1; x < n; ++x)
    if (mod(a * x, n) == 1) {
      a_inv = x;
      break;
    }
  return AffineElem(n, a_inv, -a_inv * b);
}

Perm AffineElem::to_perm() const {
  std::vector<int> img(n);
  for (int k = 1; k <= n; ++k)
    img[k - 1] = letter_of_residue(a * residue_of_letter(k, n) + b, n);
  return Perm(std::move(img));
}

std::optional<AffineElem> AffineElem::from_perm(const Perm& p, int n) {
  if (p.degree() != n) return std::nullopt;
  // x -> ax + b is determined by the images of residues 0 and 1.
  int b = residue_of_letter(p(n), n);
  int a = mod(residue_of_letter(p(1), n) - b, n);
  if (!is_unit(a, n)) return std::nullopt;
  AffineElem cand(n, a, b);
  if (cand.to_perm() != p) return std::nullopt;
  return cand;
}

PermGroup affine_group(int n, const std::vector<int>& units) {
  std::set<int> a_set;
  for (int a : units) {
    if (!is_unit(a, n))
      throw std::invalid_argument("affine_group: non-unit in A");
    a_set.insert(mod(a, n));
  }
  if (!a_set.count(1))
    throw std::invalid_argument("affine_group: A must contain 1");
  for (int a : a_set)
    for (int b : a_set)
      if (!a_set.count(mod(a * b, n)))
        throw std::invalid_argument("affine_group: A not closed under multiplication");

  std::vector<Perm> gens{AffineElem(n, 1, 1).to_perm()};
  for (int a : a_set)
    if (a != 1) gens.push_back(AffineElem(n, a, 0).to_perm());
  PermGroup g = PermGroup::generate(n, std::move(gens));
  if (g.order() != a_set.size() * static_cast<std::size_t>(n))
    throw InvariantViolation("affine group order mismatch");
  return g;
}

PermGroup dihedral_group(int n) {
  return affine_group(n, {1, n - 1});
}

std::vector<AffineElem> affine_involutions(int n, const std::vector<int>& units) {
  std::vector<AffineElem> out;
  for (int a : units) {
    int am = mod(a, n);
    if (am == 1 || mod(am * am, n) != 1) continue;
    for (int b = 0; b < n; ++b)
      if (mod(b * (am + 1), n) == 0) out.push_back(AffineElem(n, am, b));
  }
  return out;
}

Perm cheby_sigma1(int n) { return AffineElem(n, -1, 1).to_perm(); }
Perm cheby_sigma2(int n) { return AffineElem(n, -1, 0).to_perm(); }
Perm cheby_sigma_infinity(int n) { return AffineElem(n, 1, -1).to_perm(); }

BranchTuple cheby_tuple(int n) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("cheby_tuple: need even n >= 4");
  BranchTuple t;
  t.degree = n;
  t.entries = {cheby_sigma1(n), cheby_sigma2(n), cheby_sigma_infinity(n)};
  t.infinity_slot = 3;
  if (!t.product_one())
    throw InvariantViolation("cheby tuple fails product-one");
  return t;
}

GroupAutomorphism caz_dihedral(int n) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("caz_dihedral: need even n >= 4");
  PermGroup d = dihedral_group(n);
  std::vector<Perm> gens, images;
  for (const Perm& s : d.generators()) {
    auto aff = AffineElem::from_perm(s, n);
    if (!aff)
      throw InvariantViolation("dihedral generator without affine label");
    gens.push_back(s);
    images.push_back(aff->a == 1 ? s : AffineElem(n, aff->a, aff->b - 1).to_perm());
  }
  return automorphism_from_images(d, gens, images);
}

BranchTuple modular_tuple(int n) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("modular_tuple: need even n >= 4");
  BranchTuple t;
  t.degree = n;
  Perm s1 = cheby_sigma1(n), s2 = cheby_sigma2(n);
  t.entries = {s1, s2, s2, s1};
  if (!t.product_one())
    throw InvariantViolation("modular tuple fails product-one");
  return t;
}

long long galois_closure_genus(const BranchTuple& t, const PermGroup& g) {
  if (!t.product_one() || !t.transitive())
    throw std::invalid_argument("galois_closure_genus: malformed tuple");
  const long long order = static_cast<long long>(g.order());
  long long sum = 0;
  for (const Perm& e : t.entries) {
    int ord = e.order();
    sum += order - order / ord;  // ind in the regular representation
  }
  if (sum % 2 != 0)
    throw std::invalid_argument("galois_closure_genus: parity violation");
  long long genus = sum / 2 - order + 1;
  if (genus < 0)
    throw std::invalid_argument("galois_closure_genus: negative genus");
  return genus;
}

bool odd_dihedral_conjugacy(int n) {
  if (n < 3)
    throw std::invalid_argument("odd_dihedral_conjugacy: need n >= 3");
  PermGroup d = dihedral_group(n);
  PermGroup h1 = PermGroup::generate(n, {AffineElem(n, -1, 1).to_perm()});
  PermGroup h0 = PermGroup::generate(n, {AffineElem(n, -1, 0).to_perm()});
  return are_conjugate_subgroups(d, h1, h0);
}

std::string dihedral_class_label(int n, const Perm& rep) {
  auto aff = AffineElem::from_perm(rep, n);
  if (aff) {
    if (aff->a == n - 1)
      return aff->b % 2 == 0 ? "C_{-1,0}" : "C_{-1,1}";
    if (aff->a == 1 && (aff->b == 1 || aff->b == n - 1))
      return "C_inf";
    if (aff->a == 1)
      return "C_{1," + std::to_string(std::min(aff->b, n - aff->b)) + "}";
  }
  return rep.cycle_string();
}

std::optional<Perm> dihedral_class_rep(int n, const std::string& label) {
  if (label == "C_{-1,0}") return AffineElem(n, -1, 0).to_perm();
  if (label == "C_{-1,1}") return AffineElem(n, -1, 1).to_perm();
  if (label == "C_inf") return AffineElem(n, 1, -1).to_perm();
  return std::nullopt;
}

}  // namespace schinzel
