#include "schinzel/wreath.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

#include "schinzel/dihedral.hpp"
#include "schinzel/errors.hpp"

namespace schinzel {

namespace {

int mod(int x, int m) {
  int r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace

WreathElem::WreathElem(int n, int v, int shift, std::vector<Perm> coords)
    : n(n), v(v), shift(mod(shift, v)), coords(std::move(coords)) {
  if (static_cast<int>(this->coords.size()) != v)
    throw std::invalid_argument("wreath element needs one coordinate per block");
  for (const Perm& c : this->coords)
    if (c.degree() != n)
      throw std::invalid_argument("wreath coordinate degree mismatch");
}

Perm WreathElem::to_perm() const {
  std::vector<int> img(n * v);
  for (int i = 0; i < v; ++i) {
    int block_to = mod(i + shift, v);
    for (int k = 1; k <= n; ++k)
      img[i * n + k - 1] = block_to * n + coords[i](k);
  }
  return Perm(std::move(img));
}

WreathElem WreathElem::operator*(const WreathElem& rhs) const {
  if (n != rhs.n || v != rhs.v)
    throw std::invalid_argument("wreath element mismatch");
  // Apply rhs first: block i -> i + rhs.shift, so this contributes its
  // coordinate at i + rhs.shift.
  std::vector<Perm> out;
  for (int i = 0; i < v; ++i)
    out.push_back(coords[mod(i + rhs.shift, v)] * rhs.coords[i]);
  return WreathElem(n, v, shift + rhs.shift, std::move(out));
}

WreathElem WreathElem::inverse() const {
  std::vector<Perm> out;
  for (int i = 0; i < v; ++i)
    out.push_back(coords[mod(i - shift, v)].inverse());
  return WreathElem(n, v, -shift, std::move(out));
}

Perm wreath_embed(const std::vector<Perm>& coords, int shift) {
  if (coords.empty())
    throw std::invalid_argument("wreath_embed: need at least one coordinate");
  return WreathElem(coords.front().degree(), static_cast<int>(coords.size()),
                    shift, coords)
      .to_perm();
}

std::optional<WreathElem> wreath_factor(const Perm& p, int n, int v) {
  if (p.degree() != n * v) return std::nullopt;
  int shift = -1;
  std::vector<Perm> coords;
  for (int i = 0; i < v; ++i) {
    int target = (p(i * n + 1) - 1) / n;
    int s = mod(target - i, v);
    if (shift < 0) shift = s;
    if (s != shift) return std::nullopt;
    std::vector<int> local(n);
    for (int k = 1; k <= n; ++k) {
      int img = p(i * n + k);
      if ((img - 1) / n != target) return std::nullopt;
      local[k - 1] = img - target * n;
    }
    coords.emplace_back(std::move(local));
  }
  return WreathElem(n, v, shift, std::move(coords));
}

std::optional<Perm> block_image(const Perm& p, int n, int v) {
  auto w = wreath_factor(p, n, v);
  if (!w) return std::nullopt;
  std::vector<int> img(v);
  for (int i = 0; i < v; ++i) img[i] = mod(i + w->shift, v) + 1;
  return Perm(std::move(img));
}

Perm sigma_star_infinity(int n, int v) {
  if (n < 1 || v < 1)
    throw std::invalid_argument("sigma_star_infinity: need n, v >= 1");
  // k_i -> k_{i+1} for i < v; k_v -> (k+1)_1 with n_v wrapping to 1_1.
  std::vector<int> img(n * v);
  for (int i = 1; i <= v; ++i)
    for (int k = 1; k <= n; ++k) {
      int from = (i - 1) * n + k;
      int to = i < v ? i * n + k : (k % n) + 1;
      img[from - 1] = to;
    }
  return Perm(std::move(img));
}

WreathCondReport check_wreath_conditions(const PermGroup& h, const PermGroup& g_f,
                                         int n, int v) {
  WreathCondReport report;
  report.respects_blocks = true;

  std::set<int> shifts;
  std::vector<std::set<Perm>> projections(v);
  for (const Perm& p : h.elements()) {
    auto w = wreath_factor(p, n, v);
    if (!w) {
      report.respects_blocks = false;
      throw std::invalid_argument("check_wreath_conditions: H tears the block structure");
    }
    shifts.insert(w->shift);
    if (w->shift == 0)
      for (int i = 0; i < v; ++i) projections[i].insert(w->coords[i]);
  }

  // The shift image is a subgroup of Z/v: full iff the gcd of its members
  // with v is 1.
  int g = v;
  for (int s : shifts) g = std::gcd(g, s == 0 ? v : s);
  report.onto_shift = g == 1 || v == 1;

  report.coord_projections.resize(v);
  report.ok = report.onto_shift;
  for (int i = 0; i < v; ++i) {
    std::vector<Perm> proj(projections[i].begin(), projections[i].end());
    bool equals = proj.size() == g_f.order();
    if (equals)
      for (const Perm& p : proj)
        if (!g_f.contains(p)) equals = false;
    report.coord_projections[i] = equals;
    report.ok = report.ok && equals;
  }
  return report;
}

bool disjointness_condition(const std::vector<int>& orbit_sizes, int v,
                            bool collision_with_mu) {
  for (int s : orbit_sizes) {
    if (s <= 0 || v % s != 0)
      throw std::invalid_argument("disjointness_condition: orbit sizes must divide v");
    if (s != 1) return false;
  }
  return !collision_with_mu;
}

PermGroup dihedral_ext_wreath_group(int n) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("dihedral_ext_wreath_group: need even n >= 4");
  const int v = 2;
  PermGroup d = dihedral_group(n);
  GroupAutomorphism omega = caz_dihedral(n).inverse();

  std::vector<Perm> gens{sigma_star_infinity(n, v)};
  for (const Perm& s : d.generators())
    gens.push_back(wreath_embed({omega.apply(s), s}, 0));
  PermGroup g_star = PermGroup::generate(n * v, std::move(gens),
                                         16 * static_cast<std::size_t>(n) * n);
  if (g_star.order() != 2 * d.order())
    throw InvariantViolation("dihedral ext group: order != 2|D_n|");
  return g_star;
}

namespace {

// Multiset of nontrivial fiber cycles matches the target tuple's entries
// under one simultaneous relabelling of the n letters.
bool fibers_match_up_to_conjugation(std::vector<Perm> fibers,
                                    std::vector<Perm> target, int n) {
  std::erase_if(fibers, [](const Perm& p) { return p.is_identity(); });
  std::erase_if(target, [](const Perm& p) { return p.is_identity(); });
  if (fibers.size() != target.size()) return false;
  std::sort(target.begin(), target.end());

  // Conjugators must normalize the dihedral group generated by the data, so
  // affine candidates suffice; keep a full S_n scan for small n as a net.
  std::vector<Perm> candidates;
  for (int a = 1; a < n; ++a) {
    if (std::gcd(a, n) != 1) continue;
    for (int b = 0; b < n; ++b)
      candidates.push_back(AffineElem(n, a, b).to_perm());
  }
  auto try_all = [&](const std::vector<Perm>& alphas) {
    for (const Perm& alpha : alphas) {
      std::vector<Perm> moved;
      for (const Perm& f : fibers) moved.push_back(conjugate(f, alpha));
      std::sort(moved.begin(), moved.end());
      if (moved == target) return true;
    }
    return false;
  };
  if (try_all(candidates)) return true;
  if (n <= 8) {
    std::vector<Perm> full;
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    do {
      full.push_back(Perm{std::vector<int>(img)});
    } while (std::next_permutation(img.begin(), img.end()));
    return try_all(full);
  }
  return false;
}

}  // namespace

std::vector<FiberRestriction> restrict_to_fiber(const BranchTuple& t_star, int n, int v) {
  std::vector<FiberRestriction> out;
  for (int slot = 1; slot <= t_star.r(); ++slot) {
    const Perm& entry = t_star.entries[slot - 1];
    auto downstairs = block_image(entry, n, v);
    if (!downstairs)
      throw std::invalid_argument("restrict_to_fiber: entry tears the block structure");
    FiberRestriction fr;
    fr.entry_slot = slot;
    for (const auto& cyc : downstairs->cycles()) {
      int len = static_cast<int>(cyc.size());
      int block = cyc.front();  // 1-based
      Perm powered(entry.degree());
      for (int i = 0; i < len; ++i) powered = powered * entry;
      std::vector<int> local(n);
      for (int k = 1; k <= n; ++k)
        local[k - 1] = powered((block - 1) * n + k) - (block - 1) * n;
      FiberRestriction::BlockCycle bc;
      bc.blocks = cyc;
      bc.fiber = Perm(std::move(local));
      fr.cycles.push_back(std::move(bc));
    }
    out.push_back(std::move(fr));
  }
  return out;
}

CompBranchResult solve_comp_branch(int n, int v) {
  if (v != 2)
    throw std::invalid_argument("solve_comp_branch: only v = 2 is catalogued");
  CompBranchResult result;
  result.n = n;
  result.v = v;

  PermGroup g_star = dihedral_ext_wreath_group(n);
  result.group_order = g_star.order();
  Perm s_inf = sigma_star_infinity(n, v);
  if (!g_star.contains(s_inf))
    throw InvariantViolation("solve_comp_branch: sigma*_inf outside G*");

  std::vector<int> shape0(n, 2);                // n disjoint 2-cycles
  std::vector<int> shape1(n - 1, 2);            // n-1 disjoint 2-cycles + 2 fixed
  shape1.push_back(1);
  shape1.push_back(1);

  BranchTuple cheby = cheby_tuple(n);

  for (const Perm& s0 : g_star.elements()) {
    if (s0.cycle_type() != shape0) continue;
    auto w = wreath_factor(s0, n, v);
    assert(w);
    if (w->shift == 0) continue;  // must lie over the branch point of mu
    Perm s1 = s0.inverse() * s_inf.inverse();
    if (s1.cycle_type() != shape1) continue;
    PermGroup generated = PermGroup::generate(2 * n, {s0, s1}, g_star.order() + 1);
    if (!generated.same_group(g_star)) continue;

    CompBranchSolution sol;
    sol.tuple.degree = 2 * n;
    sol.tuple.entries = {s0, s1, s_inf};
    sol.tuple.infinity_slot = 3;
    assert(sol.tuple.product_one());

    for (const auto& fr : restrict_to_fiber(sol.tuple, n, v))
      for (const auto& bc : fr.cycles)
        sol.fiber_cycles.push_back(bc.fiber);
    sol.roundtrip = fibers_match_up_to_conjugation(sol.fiber_cycles,
                                                   cheby.entries, n);
    result.any_roundtrip = result.any_roundtrip || sol.roundtrip;
    result.solutions.push_back(std::move(sol));
  }

  if (result.solutions.empty())
    throw InvariantViolation("solve_comp_branch: no tuple with the prescribed shapes");
  std::sort(result.solutions.begin(), result.solutions.end(),
            [](const CompBranchSolution& a, const CompBranchSolution& b) {
              return a.tuple < b.tuple;
            });
  return result;
}

}  // namespace schinzel
