#include <doctest.h>

#include <stdexcept>

#include <random>

#include "schinzel/dihedral.hpp"
#include "schinzel/wreath.hpp"

using namespace schinzel;

namespace {

Perm random_perm(int degree, std::mt19937_64& rng) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i + 1;
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(std::move(img));
}

}  // namespace

TEST_CASE("wreath_embed block shift and block diagonal") {
  // Identity coordinates with shift 1 on n = 2, v = 2 swaps the blocks.
  CHECK(wreath_embed({Perm(2), Perm(2)}, 1) == Perm::parse("(1 3)(2 4)", 4));

  Perm a = Perm::parse("(1 2)", 2);
  Perm block_diag = wreath_embed({a, Perm(2)}, 0);
  CHECK(block_diag == Perm::parse("(1 2)", 4));
}

TEST_CASE("wreath multiplication is a homomorphism onto composed letter maps") {
  std::mt19937_64 rng(5);
  const int n = 4, v = 3;
  for (int trial = 0; trial < 200; ++trial) {
    WreathElem x(n, v, static_cast<int>(rng() % v),
                 {random_perm(n, rng), random_perm(n, rng), random_perm(n, rng)});
    WreathElem y(n, v, static_cast<int>(rng() % v),
                 {random_perm(n, rng), random_perm(n, rng), random_perm(n, rng)});
    CHECK((x * y).to_perm() == x.to_perm() * y.to_perm());
    CHECK(x.inverse().to_perm() == x.to_perm().inverse());
  }
}

TEST_CASE("wreath_factor round-trips and rejects torn blocks") {
  std::mt19937_64 rng(9);
  const int n = 3, v = 2;
  for (int trial = 0; trial < 100; ++trial) {
    WreathElem x(n, v, static_cast<int>(rng() % v),
                 {random_perm(n, rng), random_perm(n, rng)});
    auto back = wreath_factor(x.to_perm(), n, v);
    REQUIRE(back.has_value());
    CHECK(*back == x);
  }
  CHECK_FALSE(wreath_factor(Perm::parse("(1 4)", 6), 3, 2).has_value());
}

TEST_CASE("sigma_star_infinity structure") {
  for (int n : {2, 4, 6}) {
    for (int v : {1, 2, 3}) {
      Perm s = sigma_star_infinity(n, v);
      CHECK(s.is_n_cycle());
      CHECK(s.order() == n * v);
      Perm vth(n * v);
      for (int i = 0; i < v; ++i) vth = vth * s;
      auto w = wreath_factor(vth, n, v);
      REQUIRE(w.has_value());
      CHECK(w->shift == 0);
      Perm rho = AffineElem(std::max(n, 2), 1, 1).to_perm();
      if (n >= 2)
        for (int i = 0; i < v; ++i) CHECK(w->coords[i] == rho);
      auto block = block_image(s, n, v);
      REQUIRE(block.has_value());
      CHECK(block->order() == v);
    }
  }
  // n = 2, v = 2: the 4-cycle (1_1 1_2 2_1 2_2) = (1 3 2 4) flattened.
  CHECK(sigma_star_infinity(2, 2) == Perm::parse("(1 3 2 4)", 4));
}

TEST_CASE("sigma_star intersection with the blockwise part is <embedded sigma_inf>") {
  for (int n : {4, 6, 8}) {
    for (int v : {2, 3}) {
      Perm s = sigma_star_infinity(n, v);
      PermGroup cyc = PermGroup::generate(n * v, {s});
      std::vector<Perm> blockwise;
      for (const Perm& x : cyc.elements())
        if (auto w = wreath_factor(x, n, v); w && w->shift == 0)
          blockwise.push_back(x);
      // Exactly the powers of (sigma*)^v: n of them.
      CHECK(blockwise.size() == static_cast<std::size_t>(n));
    }
  }
}

TEST_CASE("check_wreath_conditions") {
  const int n = 4, v = 2;
  PermGroup d = dihedral_group(n);

  // Full wreath product D_4 wr Z/2.
  std::vector<Perm> gens;
  for (const Perm& s : d.generators()) {
    gens.push_back(wreath_embed({s, Perm(n)}, 0));
    gens.push_back(wreath_embed({Perm(n), s}, 0));
  }
  gens.push_back(wreath_embed({Perm(n), Perm(n)}, 1));
  PermGroup full = PermGroup::generate(n * v, gens, 2 * 64 * 64);
  CHECK(full.order() == 2 * d.order() * d.order());
  CHECK(check_wreath_conditions(full, d, n, v).ok);

  // The minimal extension group.
  PermGroup g_star = dihedral_ext_wreath_group(n);
  CHECK(g_star.order() == 2 * d.order());
  auto report = check_wreath_conditions(g_star, d, n, v);
  CHECK(report.onto_shift);
  CHECK(report.ok);

  // Blockwise-only group: fails surjectivity onto Z/v.
  std::vector<Perm> diag;
  for (const Perm& s : d.generators()) diag.push_back(wreath_embed({s, s}, 0));
  PermGroup blockwise = PermGroup::generate(n * v, diag);
  CHECK_FALSE(check_wreath_conditions(blockwise, d, n, v).onto_shift);
}

TEST_CASE("diagonal plus sigma* satisfies the wreath conditions") {
  const int n = 4, v = 2;
  PermGroup d = dihedral_group(n);
  std::vector<Perm> gens{sigma_star_infinity(n, v)};
  for (const Perm& s : d.generators()) gens.push_back(wreath_embed({s, s}, 0));
  PermGroup h = PermGroup::generate(n * v, gens, 4096);
  CHECK(check_wreath_conditions(h, d, n, v).ok);
}

TEST_CASE("disjointness_condition") {
  CHECK_FALSE(disjointness_condition({2}, 2, false));   // one orbit of size v
  CHECK(disjointness_condition({1, 1, 1}, 2, false));   // singletons, no collision
  CHECK_FALSE(disjointness_condition({1, 2}, 2, false));
  CHECK_FALSE(disjointness_condition({1, 1}, 2, true));  // collision with mu
  CHECK_THROWS_AS(disjointness_condition({3}, 2, false), std::invalid_argument);
}

TEST_CASE("solve_comp_branch: shapes, count, generation, roundtrip") {
  for (int n : {4, 6, 8}) {
    auto result = solve_comp_branch(n, 2);
    CHECK(result.group_order == 4 * static_cast<std::size_t>(n));
    // One solution per reflection of D_n.
    CHECK(result.solutions.size() == static_cast<std::size_t>(n));
    CHECK(result.any_roundtrip);

    std::vector<int> shape0(n, 2);
    std::vector<int> shape1(n - 1, 2);
    shape1.push_back(1);
    shape1.push_back(1);
    for (const auto& sol : result.solutions) {
      CHECK(sol.tuple.product_one());
      CHECK(sol.tuple.entries[0].cycle_type() == shape0);
      CHECK(sol.tuple.entries[1].cycle_type() == shape1);
      CHECK(sol.tuple.entries[2] == sigma_star_infinity(n, 2));
      auto block0 = block_image(sol.tuple.entries[0], n, 2);
      REQUIRE(block0.has_value());
      CHECK_FALSE(block0->is_identity());  // lies over the branch point of mu
    }
  }
}

TEST_CASE("restrict_to_fiber recovers sigma_inf from sigma*") {
  for (int n : {4, 6}) {
    BranchTuple t;
    t.degree = 2 * n;
    Perm s = sigma_star_infinity(n, 2);
    t.entries = {s};
    auto fibers = restrict_to_fiber(t, n, 2);
    REQUIRE(fibers.size() == 1);
    REQUIRE(fibers[0].cycles.size() == 1);
    CHECK(fibers[0].cycles[0].fiber == AffineElem(n, 1, 1).to_perm());
    CHECK(fibers[0].cycles[0].blocks.size() == 2);
  }
}

TEST_CASE("restrict_to_fiber: identity entry restricts to identities") {
  BranchTuple t;
  t.degree = 8;
  t.entries = {Perm(8)};
  auto fibers = restrict_to_fiber(t, 4, 2);
  REQUIRE(fibers.size() == 1);
  CHECK(fibers[0].cycles.size() == 2);  // two fixed blocks
  for (const auto& bc : fibers[0].cycles) CHECK(bc.fiber.is_identity());
}

TEST_CASE("solved tuple restricts to the two reflections on the fixed blocks") {
  auto result = solve_comp_branch(4, 2);
  const auto& sol = result.solutions.front();
  auto fibers = restrict_to_fiber(sol.tuple, 4, 2);
  // Entry 2 has trivial block image: two blocks, each a reflection of D_4.
  REQUIRE(fibers[1].cycles.size() == 2);
  PermGroup d = dihedral_group(4);
  for (const auto& bc : fibers[1].cycles) {
    CHECK(d.contains(bc.fiber));
    CHECK(bc.fiber.order() == 2);
  }
}
