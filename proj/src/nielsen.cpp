#include "schinzel/nielsen.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "schinzel/errors.hpp"

namespace schinzel {

Perm BranchTuple::product() const {
  Perm acc(degree);
  for (const Perm& e : entries) acc = acc * e;
  return acc;
}

bool BranchTuple::product_one() const {
  return product().is_identity();
}

bool BranchTuple::transitive() const {
  std::vector<bool> in(degree + 1, false);
  std::vector<int> orbit{1};
  in[1] = true;
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const Perm& e : entries) {
      int img = e(orbit[i]);
      if (!in[img]) {
        in[img] = true;
        orbit.push_back(img);
      }
    }
  return static_cast<int>(orbit.size()) == degree;
}

VerifyResult verify_nielsen(const BranchTuple& t, const PermGroup& g,
                            const NielsenClassSpec& spec) {
  if (t.degree != g.degree())
    return {false, "degree mismatch"};
  if (!t.product_one())
    return {false, "product-one fails"};
  PermGroup gen = PermGroup::generate(t.degree, t.entries, g.order() + 1);
  if (!gen.same_group(g))
    return {false, "generation fails: <entries> != G"};
  auto classes = conjugacy_classes(g);
  std::vector<int> want, got;
  for (const Perm& rep : spec.class_reps) {
    int ci = class_index_of(classes, rep);
    if (ci < 0) return {false, "class representative outside G"};
    want.push_back(ci);
  }
  for (const Perm& e : t.entries)
    got.push_back(class_index_of(classes, e));
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  if (want != got)
    return {false, "class multiset mismatch"};
  return {true, "ok"};
}

int genus(const BranchTuple& t) {
  if (!t.product_one())
    throw std::invalid_argument("genus: tuple is not product-one");
  if (!t.transitive())
    throw std::invalid_argument("genus: tuple entries are not transitive");
  long long sum = 0;
  for (const Perm& e : t.entries) sum += e.index();
  if (sum % 2 != 0)
    throw std::invalid_argument("genus: Riemann-Hurwitz parity violation");
  long long g = sum / 2 - t.degree + 1;
  if (g < 0)
    throw std::invalid_argument("genus: negative genus, malformed tuple");
  return static_cast<int>(g);
}

PolyCheck is_polynomial_tuple(const BranchTuple& t) {
  if (genus(t) != 0) return {false, std::nullopt};
  std::optional<int> slot;
  for (int i = 0; i < t.r(); ++i)
    if (t.entries[i].is_n_cycle()) slot = i + 1;  // ties: last slot wins
  if (!slot) return {false, std::nullopt};
  return {true, slot};
}

BranchTuple conjugate_tuple(const BranchTuple& t, const Perm& by) {
  BranchTuple out = t;
  for (Perm& e : out.entries) e = conjugate(e, by);
  return out;
}

BranchTuple canonical_tuple(const BranchTuple& t, const std::vector<Perm>& acting) {
  BranchTuple best = t;
  for (const Perm& a : acting) {
    BranchTuple cand = conjugate_tuple(t, a);
    if (cand < best) best = cand;
  }
  return best;
}

namespace {

// Distinct slot-class assignments of a class multiset, as sorted index
// sequences run through std::next_permutation.
std::vector<std::vector<int>> slot_assignments(std::vector<int> class_indices) {
  std::sort(class_indices.begin(), class_indices.end());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(class_indices);
  } while (std::next_permutation(class_indices.begin(), class_indices.end()));
  return out;
}

void enumerate_raw(const PermGroup& g, const std::vector<ConjClass>& classes,
                   const std::vector<int>& assignment, std::size_t tuple_bound,
                   std::vector<BranchTuple>& out) {
  const int r = static_cast<int>(assignment.size());
  std::size_t work = 1;
  for (int i = 0; i + 1 < r; ++i) {
    work *= classes[assignment[i]].members.size();
    if (work > tuple_bound)
      throw BoundExceeded("nielsen enumeration exceeds tuple bound");
  }

  std::vector<int> pick(r - 1, 0);
  std::vector<Perm> entries(r, Perm(g.degree()));
  for (;;) {
    Perm prod(g.degree());
    for (int i = 0; i + 1 < r; ++i) {
      entries[i] = classes[assignment[i]].members[pick[i]];
      prod = prod * entries[i];
    }
    Perm last = prod.inverse();
    if (class_index_of(classes, last) == assignment[r - 1]) {
      entries[r - 1] = last;
      bool nontrivial = true;
      for (const Perm& e : entries)
        if (e.is_identity()) nontrivial = false;
      if (nontrivial &&
          PermGroup::generate(g.degree(), entries, g.order() + 1).same_group(g)) {
        BranchTuple t;
        t.degree = g.degree();
        t.entries = entries;
        out.push_back(std::move(t));
      }
    }
    int i = r - 2;
    while (i >= 0) {
      if (++pick[i] < static_cast<int>(classes[assignment[i]].members.size())) break;
      pick[i--] = 0;
    }
    if (i < 0) break;
  }
}

std::vector<Perm> acting_elements(const NielsenClassSpec& spec, bool* full_normalizer) {
  *full_normalizer = true;
  if (spec.equivalence == Equivalence::inner)
    return spec.group.elements();
  try {
    return normalizer_in_symmetric(spec.group, spec.class_reps).elements();
  } catch (const BoundExceeded&) {
    // Degree beyond the brute-force bound: fall back to conjugation by G.
    *full_normalizer = false;
    return spec.group.elements();
  }
}

}  // namespace

NielsenEnumeration enumerate_nielsen(const NielsenClassSpec& spec,
                                     std::size_t tuple_bound) {
  const PermGroup& g = spec.group;
  auto classes = conjugacy_classes(g);
  std::vector<int> class_indices;
  for (const Perm& rep : spec.class_reps) {
    int ci = class_index_of(classes, rep);
    if (ci < 0)
      throw std::invalid_argument("class representative outside the group");
    class_indices.push_back(ci);
  }

  std::vector<BranchTuple> raw;
  for (const auto& assignment : slot_assignments(class_indices))
    enumerate_raw(g, classes, assignment, tuple_bound, raw);

  NielsenEnumeration result;
  result.raw_tuple_count = raw.size();
  auto acting = acting_elements(spec, &result.used_full_normalizer);

  std::vector<BranchTuple> canon;
  for (const BranchTuple& t : raw)
    canon.push_back(canonical_tuple(t, acting));
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  result.representatives = std::move(canon);
  return result;
}

ClassMapReport equivalence_class_map(const NielsenClassSpec& spec) {
  NielsenClassSpec inner = spec;
  inner.equivalence = Equivalence::inner;
  NielsenClassSpec abs = spec;
  abs.equivalence = Equivalence::absolute;

  ClassMapReport report;
  report.inner_reps = enumerate_nielsen(inner).representatives;

  bool full = true;
  auto abs_acting = acting_elements(abs, &full);
  for (const BranchTuple& t : report.inner_reps) {
    BranchTuple image = canonical_tuple(t, abs_acting);
    report.fibers[image].push_back(t);
  }
  for (const auto& [abs_rep, fiber] : report.fibers)
    report.absolute_reps.push_back(abs_rep);
  return report;
}

BranchTuple rotate_tuple(const BranchTuple& t) {
  if (t.r() < 3)
    throw std::invalid_argument("rotate_tuple: need r >= 3");
  if (!t.infinity_slot || *t.infinity_slot != t.r())
    throw std::invalid_argument("rotate_tuple: infinity slot must be last");
  if (!t.product_one())
    throw std::invalid_argument("rotate_tuple: tuple is not product-one");

  const int r = t.r();
  BranchTuple out;
  out.degree = t.degree;
  out.infinity_slot = r;
  for (int i = 1; i + 1 < r; ++i) out.entries.push_back(t.entries[i]);
  out.entries.push_back(t.entries[0]);
  const Perm& s1 = t.entries[0];
  out.entries.push_back(s1.inverse() * t.entries[r - 1] * s1);
  assert(out.product_one());
  return out;
}

std::vector<Perm> inner_conjugators(const BranchTuple& a, const BranchTuple& b,
                                    const PermGroup& g) {
  std::vector<Perm> out;
  if (a.r() != b.r() || a.degree != b.degree) return out;
  for (const Perm& s : g.elements()) {
    bool all = true;
    for (int i = 0; i < a.r(); ++i)
      if (conjugate(a.entries[i], s) != b.entries[i]) {
        all = false;
        break;
      }
    if (all) out.push_back(s);
  }
  return out;
}

BranchSlotMap one_orbit_slot_map(int v) {
  std::vector<int> img(v);
  std::iota(img.begin(), img.end(), 1);
  std::rotate(img.begin(), img.begin() + 1, img.end());
  return {v, Perm(std::move(img))};
}

}  // namespace schinzel
