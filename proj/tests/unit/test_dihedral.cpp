#include <doctest.h>

#include <stdexcept>

#include "schinzel/dihedral.hpp"
#include "schinzel/nielsen.hpp"

using namespace schinzel;

TEST_CASE("affine arithmetic matches the matrix rule") {
  // (a' b'; 0 1)(a b; 0 1) = (a'a a'b + b'; 0 1), right factor first.
  AffineElem x(12, 5, 7), y(12, 7, 3);
  AffineElem xy = x * y;
  CHECK(xy.a == (5 * 7) % 12);
  CHECK(xy.b == (5 * 3 + 7) % 12);
  CHECK((x * x.inverse()) == AffineElem(12, 1, 0));
  CHECK(x.to_perm() * y.to_perm() == xy.to_perm());
  CHECK(AffineElem::from_perm(xy.to_perm(), 12) == xy);
}

TEST_CASE("affine_group orders and labelling") {
  CHECK(affine_group(4, {1, 3}).order() == 8);   // D_4
  CHECK(affine_group(5, {1}).order() == 5);      // translations
  CHECK(affine_group(8, {1, 3, 5, 7}).order() == 32);
  CHECK_THROWS_AS(affine_group(8, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(affine_group(8, {1, 3, 5}), std::invalid_argument);  // not closed

  // Every element of A_n(A) carries an affine label.
  PermGroup g = affine_group(6, {1, 5});
  for (const Perm& s : g.elements()) CHECK(AffineElem::from_perm(s, 6).has_value());
}

TEST_CASE("involution set of D_n, n even") {
  for (int n : {4, 6, 8}) {
    auto inv = affine_involutions(n, {1, n - 1});
    CHECK(inv.size() == static_cast<std::size_t>(n));  // all (-1, b)
    for (const auto& e : inv) {
      CHECK(e.a == n - 1);
      CHECK(e.to_perm().order() == 2);
    }
  }
}

TEST_CASE("cheby_tuple matches the catalogued permutations at n = 4") {
  BranchTuple t = cheby_tuple(4);
  CHECK(t.entries[0] == Perm::parse("(1 4)(2 3)", 4));
  CHECK(t.entries[1] == Perm::parse("(1 3)", 4));
  CHECK(t.entries[2] == Perm::parse("(1 4 3 2)", 4));
  CHECK(t.infinity_slot == 3);
}

TEST_CASE("cheby_tuple indices and product-one for even n up to 12") {
  for (int n : {4, 6, 8, 10, 12}) {
    BranchTuple t = cheby_tuple(n);
    CHECK(t.entries[0].index() == n / 2);
    CHECK(t.entries[1].index() == n / 2 - 1);
    CHECK(t.entries[2].index() == n - 1);
    CHECK(t.product_one());
    CHECK(genus(t) == 0);
    auto poly = is_polynomial_tuple(t);
    CHECK(poly.is_polynomial);
    CHECK(poly.slot == 3);

    // <s1, s2, s3> is exactly D_n.
    CHECK(PermGroup::generate(n, t.entries).same_group(dihedral_group(n)));
  }
  CHECK_THROWS_AS(cheby_tuple(5), std::invalid_argument);
  CHECK_THROWS_AS(cheby_tuple(2), std::invalid_argument);
}

TEST_CASE("caz_dihedral: formula, square, class swap, fixes sigma_inf") {
  for (int n : {4, 6, 8, 10, 12}) {
    PermGroup d = dihedral_group(n);
    GroupAutomorphism c = caz_dihedral(n);

    // (1,b) fixed, (-1,b) -> (-1,b-1).
    for (const Perm& s : d.elements()) {
      auto aff = AffineElem::from_perm(s, n);
      REQUIRE(aff.has_value());
      AffineElem expect = aff->a == 1 ? *aff : AffineElem(n, aff->a, aff->b - 1);
      CHECK(c.apply(s) == expect.to_perm());
    }

    // c^2 = conjugation by sigma_inf = (1,-1).
    GroupAutomorphism c2 = c.power(2);
    GroupAutomorphism by_sigma = inner_automorphism(d, cheby_sigma_infinity(n));
    CHECK(c2 == by_sigma);

    CHECK(c.apply(cheby_sigma_infinity(n)) == cheby_sigma_infinity(n));

    auto [preserving, induced] = is_class_preserving(d, c);
    CHECK_FALSE(preserving);
    // The two reflection classes swap; everything else is fixed.
    auto classes = conjugacy_classes(d);
    int ci0 = class_index_of(classes, cheby_sigma2(n));
    int ci1 = class_index_of(classes, cheby_sigma1(n));
    CHECK(induced[ci0] == ci1);
    CHECK(induced[ci1] == ci0);
    for (std::size_t i = 0; i < induced.size(); ++i)
      if (static_cast<int>(i) != ci0 && static_cast<int>(i) != ci1)
        CHECK(induced[i] == static_cast<int>(i));
  }
}

TEST_CASE("modular_tuple") {
  for (int n : {4, 6, 8, 10, 12}) {
    BranchTuple t = modular_tuple(n);
    CHECK(t.r() == 4);
    CHECK(t.product_one());
    CHECK_FALSE(is_polynomial_tuple(t).is_polynomial);
    CHECK(genus(t) == 0);

    PermGroup d = dihedral_group(n);
    auto classes = conjugacy_classes(d);
    int c0 = class_index_of(classes, cheby_sigma2(n));
    int c1 = class_index_of(classes, cheby_sigma1(n));
    std::vector<int> got;
    for (const Perm& e : t.entries) got.push_back(class_index_of(classes, e));
    CHECK(std::count(got.begin(), got.end(), c0) == 2);
    CHECK(std::count(got.begin(), got.end(), c1) == 2);
  }
}

TEST_CASE("galois_closure_genus") {
  for (int n : {4, 6, 8, 10, 12}) {
    PermGroup d = dihedral_group(n);
    CHECK(galois_closure_genus(cheby_tuple(n), d) == 0);
    CHECK(galois_closure_genus(modular_tuple(n), d) == 1);
  }
  BranchTuple cyc;
  cyc.degree = 6;
  Perm c = PermGroup::cyclic(6).generators()[0];
  cyc.entries = {c, c.inverse()};
  CHECK(galois_closure_genus(cyc, PermGroup::cyclic(6)) == 0);
}

TEST_CASE("odd_dihedral_conjugacy") {
  CHECK(odd_dihedral_conjugacy(3));
  CHECK(odd_dihedral_conjugacy(5));
  CHECK(odd_dihedral_conjugacy(7));
  CHECK_FALSE(odd_dihedral_conjugacy(4));
  CHECK_FALSE(odd_dihedral_conjugacy(6));
}

TEST_CASE("dihedral class labels") {
  CHECK(dihedral_class_label(6, cheby_sigma2(6)) == "C_{-1,0}");
  CHECK(dihedral_class_label(6, cheby_sigma1(6)) == "C_{-1,1}");
  CHECK(dihedral_class_label(6, cheby_sigma_infinity(6)) == "C_inf");
  CHECK(dihedral_class_rep(6, "C_{-1,1}") == cheby_sigma1(6));
}

TEST_CASE("affine_group equals the tuple closure for even n up to 12") {
  for (int n = 4; n <= 12; n += 2) {
    BranchTuple t = cheby_tuple(n);
    CHECK(PermGroup::generate(n, t.entries).same_group(dihedral_group(n)));
  }
}
