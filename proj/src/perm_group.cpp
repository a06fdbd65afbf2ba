#include "schinzel/perm_group.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_set>

#include "schinzel/errors.hpp"

namespace schinzel {

std::size_t default_order_bound() {
  if (const char* env = std::getenv("SCHINZEL_ORDER_BOUND")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0)
      return static_cast<std::size_t>(v);
  }
  return 100000;
}

PermGroup PermGroup::generate(int degree, std::vector<Perm> gens,
                              std::size_t order_bound) {
  for (const Perm& g : gens)
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree mismatch");

  std::unordered_set<Perm> seen;
  std::queue<Perm> work;
  Perm id(degree);
  seen.insert(id);
  work.push(id);
  while (!work.empty()) {
    Perm cur = std::move(work.front());
    work.pop();
    for (const Perm& g : gens) {
      Perm next = cur * g;
      if (seen.insert(next).second) {
        if (seen.size() > order_bound)
          throw BoundExceeded("group order exceeds bound " + std::to_string(order_bound));
        work.push(std::move(next));
      }
    }
  }

  PermGroup out;
  out.degree_ = degree;
  out.gens_ = std::move(gens);
  out.elements_.assign(seen.begin(), seen.end());
  std::sort(out.elements_.begin(), out.elements_.end());
  return out;
}

PermGroup PermGroup::from_elements(int degree, std::vector<Perm> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  PermGroup out;
  out.degree_ = degree;
  out.elements_ = std::move(elements);
  if (out.elements_.empty() || !out.elements_.front().is_identity())
    throw std::invalid_argument("element set must contain the identity");
  for (const Perm& a : out.elements_)
    if (!out.contains(a.inverse()))
      throw std::invalid_argument("element set not closed under inverse");
  // Closure under products follows for a finite set closed under inverse iff
  // it is a subgroup; verify directly.
  for (const Perm& a : out.elements_)
    for (const Perm& b : out.elements_)
      if (!out.contains(a * b))
        throw std::invalid_argument("element set not closed under product");
  out.gens_ = out.elements_;
  return out;
}

PermGroup PermGroup::trivial(int degree) {
  return generate(degree, {});
}

PermGroup PermGroup::symmetric(int degree) {
  if (degree <= 1) return trivial(std::max(degree, 1));
  std::vector<int> cyc(degree);
  std::iota(cyc.begin(), cyc.end(), 1);
  std::rotate(cyc.begin(), cyc.begin() + 1, cyc.end());
  std::vector<int> tr(degree);
  std::iota(tr.begin(), tr.end(), 1);
  std::swap(tr[0], tr[1]);
  std::size_t fact = 1;
  for (int i = 2; i <= degree; ++i) fact *= static_cast<std::size_t>(i);
  return generate(degree, {Perm(tr), Perm(cyc)}, fact + 1);
}

PermGroup PermGroup::cyclic(int degree) {
  std::vector<int> cyc(degree);
  std::iota(cyc.begin(), cyc.end(), 1);
  std::rotate(cyc.begin(), cyc.begin() + 1, cyc.end());
  return generate(degree, {Perm(cyc)});
}

const Perm& PermGroup::identity() const {
  assert(!elements_.empty());
  return elements_.front();
}

bool PermGroup::contains(const Perm& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

int PermGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return -1;
  return static_cast<int>(it - elements_.begin());
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  if (degree_ != g.degree()) return false;
  for (const Perm& e : elements_)
    if (!g.contains(e)) return false;
  return true;
}

bool PermGroup::same_group(const PermGroup& other) const {
  return degree_ == other.degree_ && elements_ == other.elements_;
}

bool PermGroup::is_transitive() const {
  return static_cast<int>(orbit_of(1).size()) == degree_;
}

bool PermGroup::is_abelian() const {
  for (const Perm& a : gens_)
    for (const Perm& b : gens_)
      if (a * b != b * a) return false;
  return true;
}

std::vector<int> PermGroup::orbit_of(int letter) const {
  std::vector<bool> in(degree_ + 1, false);
  std::vector<int> orbit{letter};
  in[letter] = true;
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const Perm& g : gens_) {
      int img = g(orbit[i]);
      if (!in[img]) {
        in[img] = true;
        orbit.push_back(img);
      }
    }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

namespace {

std::string cycle_type_string(const Perm& p) {
  std::ostringstream os;
  auto type = p.cycle_type();
  for (std::size_t i = 0; i < type.size(); ++i) {
    if (i) os << '.';
    os << type[i];
  }
  return os.str();
}

}  // namespace

std::vector<ConjClass> conjugacy_classes(const PermGroup& g) {
  std::vector<bool> assigned(g.order(), false);
  std::vector<ConjClass> out;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (assigned[i]) continue;
    // Conjugation orbit; generators suffice for the closure.
    std::vector<int> members{static_cast<int>(i)};
    assigned[i] = true;
    for (std::size_t k = 0; k < members.size(); ++k)
      for (const Perm& s : g.generators()) {
        int idx = g.index_of(conjugate(g.elements()[members[k]], s));
        assert(idx >= 0);
        if (!assigned[idx]) {
          assigned[idx] = true;
          members.push_back(idx);
        }
      }
    std::sort(members.begin(), members.end());
    ConjClass cls;
    for (int idx : members) cls.members.push_back(g.elements()[idx]);
    cls.representative = cls.members.front();
    cls.label = cycle_type_string(cls.representative) + "|" + cls.representative.cycle_string();
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(), [](const ConjClass& a, const ConjClass& b) {
    return a.representative < b.representative;
  });
  return out;
}

int class_index_of(const std::vector<ConjClass>& classes, const Perm& p) {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (std::binary_search(classes[i].members.begin(), classes[i].members.end(), p))
      return static_cast<int>(i);
  return -1;
}

CosetAction::CosetAction(PermGroup group, PermGroup subgroup)
    : group_(std::move(group)), subgroup_(std::move(subgroup)) {
  if (!subgroup_.is_subgroup_of(group_))
    throw std::invalid_argument("coset_action: H is not a subgroup of G");

  coset_of_element_.assign(group_.order(), -1);
  // Scanning elements in canonical order makes each coset's first element its
  // lex-minimal member, and puts the coset H (containing the identity) first.
  for (std::size_t i = 0; i < group_.order(); ++i) {
    if (coset_of_element_[i] >= 0) continue;
    const Perm& x = group_.elements()[i];
    reps_.push_back(x);
    int id = n_cosets_++;
    for (const Perm& h : subgroup_.elements()) {
      int idx = group_.index_of(x * h);
      assert(idx >= 0);
      coset_of_element_[idx] = id;
    }
  }

  // Faithful iff the core of H is trivial: only the identity acts trivially.
  faithful_ = true;
  for (const Perm& s : group_.elements()) {
    if (s.is_identity()) continue;
    if (act(s).is_identity()) {
      faithful_ = false;
      break;
    }
  }
}

Perm CosetAction::act(const Perm& s) const {
  std::vector<int> img(n_cosets_);
  for (int i = 0; i < n_cosets_; ++i)
    img[i] = coset_of(s * reps_[i]) + 1;
  return Perm(std::move(img));
}

int CosetAction::coset_of(const Perm& x) const {
  int idx = group_.index_of(x);
  if (idx < 0)
    throw std::invalid_argument("element outside the group");
  return coset_of_element_[idx];
}

CosetAction coset_action(const PermGroup& g, const PermGroup& h) {
  return CosetAction(g, h);
}

PermGroup point_stabilizer(const PermGroup& g, int letter) {
  if (letter < 1 || letter > g.degree())
    throw std::invalid_argument("letter out of range");
  std::vector<Perm> fixed;
  for (const Perm& s : g.elements())
    if (s(letter) == letter) fixed.push_back(s);
  return PermGroup::from_elements(g.degree(), std::move(fixed));
}

namespace {

std::vector<Perm> closure_of(const PermGroup& g, std::vector<Perm> seed) {
  PermGroup got = PermGroup::generate(g.degree(), std::move(seed), g.order() + 1);
  return got.elements();
}

}  // namespace

std::vector<PermGroup> intermediate_subgroups(const PermGroup& g, const PermGroup& h) {
  if (!h.is_subgroup_of(g))
    throw std::invalid_argument("intermediate_subgroups: H not a subgroup of G");

  // Upward closure: every subgroup strictly between H and G is reached by
  // repeatedly adjoining single elements.
  std::set<std::vector<Perm>> found;
  std::vector<std::vector<Perm>> work;

  auto try_add = [&](const std::vector<Perm>& base, const Perm& extra) {
    std::vector<Perm> seed = base;
    seed.push_back(extra);
    std::vector<Perm> closed = closure_of(g, std::move(seed));
    if (closed.size() == g.order()) return;
    if (found.insert(closed).second) work.push_back(closed);
  };

  for (const Perm& x : g.elements())
    if (!h.contains(x)) try_add(h.elements(), x);

  for (std::size_t i = 0; i < work.size(); ++i) {
    std::vector<Perm> cur = work[i];
    for (const Perm& x : g.elements()) {
      if (std::binary_search(cur.begin(), cur.end(), x)) continue;
      try_add(cur, x);
    }
  }

  std::vector<PermGroup> out;
  for (const auto& elems : found)
    out.push_back(PermGroup::from_elements(g.degree(), elems));
  std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

bool is_normal(const PermGroup& g, const PermGroup& h) {
  if (!h.is_subgroup_of(g))
    throw std::invalid_argument("is_normal: H not a subgroup of G");
  for (const Perm& s : g.generators())
    for (const Perm& x : h.generators())
      if (!h.contains(conjugate(x, s))) return false;
  return true;
}

PermGroup conjugate_subgroup(const PermGroup& h, const Perm& by) {
  std::vector<Perm> elems;
  for (const Perm& x : h.elements()) elems.push_back(conjugate(x, by));
  return PermGroup::from_elements(h.degree(), std::move(elems));
}

bool are_conjugate_subgroups(const PermGroup& g, const PermGroup& a, const PermGroup& b) {
  if (a.order() != b.order()) return false;
  for (const Perm& s : g.elements()) {
    bool all = true;
    for (const Perm& x : a.generators())
      if (!b.contains(conjugate(x, s))) {
        all = false;
        break;
      }
    if (all && conjugate_subgroup(a, s).same_group(b)) return true;
  }
  return false;
}

PermGroup normalizer_in_symmetric(const PermGroup& g,
                                  const std::vector<Perm>& class_reps,
                                  int max_degree) {
  const int n = g.degree();
  if (n > max_degree)
    throw BoundExceeded("normalizer_in_symmetric: degree " + std::to_string(n) +
                        " exceeds brute-force bound " + std::to_string(max_degree));

  auto classes = conjugacy_classes(g);
  std::vector<int> in_multiset;
  for (const Perm& rep : class_reps) {
    int ci = class_index_of(classes, rep);
    if (ci < 0)
      throw std::invalid_argument("class representative outside the group");
    in_multiset.push_back(ci);
  }
  std::sort(in_multiset.begin(), in_multiset.end());

  std::vector<Perm> result;
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  do {
    Perm alpha{std::vector<int>(img)};
    bool normalizes = true;
    for (const Perm& s : g.generators())
      if (!g.contains(conjugate(s, alpha))) {
        normalizes = false;
        break;
      }
    if (!normalizes) continue;
    std::vector<int> image_multiset;
    for (const Perm& rep : class_reps)
      image_multiset.push_back(class_index_of(classes, conjugate(rep, alpha)));
    std::sort(image_multiset.begin(), image_multiset.end());
    if (image_multiset == in_multiset) result.push_back(alpha);
  } while (std::next_permutation(img.begin(), img.end()));

  return PermGroup::from_elements(n, std::move(result));
}

GroupAutomorphism::GroupAutomorphism(PermGroup domain, std::vector<Perm> gen_images,
                                     std::vector<int> table)
    : domain_(std::move(domain)),
      gen_images_(std::move(gen_images)),
      table_(std::move(table)) {}

Perm GroupAutomorphism::apply(const Perm& x) const {
  int idx = domain_.index_of(x);
  if (idx < 0)
    throw std::invalid_argument("element outside the automorphism's domain");
  return domain_.elements()[table_[idx]];
}

GroupAutomorphism GroupAutomorphism::inverse() const {
  std::vector<int> inv(table_.size());
  for (std::size_t i = 0; i < table_.size(); ++i)
    inv[table_[i]] = static_cast<int>(i);
  std::vector<Perm> gen_imgs;
  GroupAutomorphism out(domain_, {}, std::move(inv));
  for (const Perm& s : domain_.generators()) gen_imgs.push_back(out.apply(s));
  out.gen_images_ = std::move(gen_imgs);
  return out;
}

GroupAutomorphism GroupAutomorphism::then(const GroupAutomorphism& next) const {
  std::vector<int> tab(table_.size());
  for (std::size_t i = 0; i < table_.size(); ++i)
    tab[i] = next.table_[table_[i]];
  std::vector<Perm> gen_imgs;
  GroupAutomorphism out(domain_, {}, std::move(tab));
  for (const Perm& s : domain_.generators()) gen_imgs.push_back(out.apply(s));
  out.gen_images_ = std::move(gen_imgs);
  return out;
}

GroupAutomorphism GroupAutomorphism::power(int k) const {
  GroupAutomorphism acc = identity_automorphism(domain_);
  GroupAutomorphism base = k >= 0 ? *this : inverse();
  for (int i = 0; i < std::abs(k); ++i) acc = acc.then(base);
  return acc;
}

bool GroupAutomorphism::is_identity() const {
  for (std::size_t i = 0; i < table_.size(); ++i)
    if (table_[i] != static_cast<int>(i)) return false;
  return true;
}

bool GroupAutomorphism::is_inner() const {
  for (const Perm& s : domain_.elements()) {
    bool match = true;
    for (const Perm& x : domain_.generators())
      if (apply(x) != conjugate(x, s)) {
        match = false;
        break;
      }
    if (match) return true;
  }
  return false;
}

GroupAutomorphism automorphism_from_images(const PermGroup& g,
                                           const std::vector<Perm>& gens,
                                           const std::vector<Perm>& gen_images) {
  if (gens.size() != gen_images.size())
    throw std::invalid_argument("generator/image count mismatch");
  for (const Perm& x : gen_images)
    if (!g.contains(x))
      throw std::invalid_argument("generator image outside the group");
  if (!PermGroup::generate(g.degree(), gens, g.order() + 1).same_group(g))
    throw std::invalid_argument("given elements do not generate the group");

  const int order = static_cast<int>(g.order());
  std::vector<int> gen_idx, img_idx;
  for (const Perm& x : gens) gen_idx.push_back(g.index_of(x));
  for (const Perm& x : gen_images) img_idx.push_back(g.index_of(x));

  // BFS word table: phi(x * s) := phi(x) * phi(s); then the homomorphism
  // property on all (element, generator) pairs implies it on all products.
  std::vector<int> table(order, -1);
  int id = g.index_of(Perm(g.degree()));
  table[id] = id;
  std::vector<int> frontier{id};
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    int x = frontier[i];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      int y = g.index_of(g.elements()[x] * gens[s]);
      if (table[y] < 0) {
        table[y] = g.index_of(g.elements()[table[x]] * gen_images[s]);
        frontier.push_back(y);
      }
    }
  }

  for (int x = 0; x < order; ++x)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      int lhs = table[g.index_of(g.elements()[x] * gens[s])];
      int rhs = g.index_of(g.elements()[table[x]] * gen_images[s]);
      if (lhs != rhs)
        throw std::invalid_argument("assignment does not extend to a homomorphism");
    }

  std::vector<bool> hit(order, false);
  for (int v : table) {
    if (hit[v])
      throw std::invalid_argument("assignment extends non-bijectively");
    hit[v] = true;
  }
  return GroupAutomorphism(g, gen_images, std::move(table));
}

GroupAutomorphism identity_automorphism(const PermGroup& g) {
  std::vector<int> table(g.order());
  std::iota(table.begin(), table.end(), 0);
  return GroupAutomorphism(g, g.generators(), std::move(table));
}

GroupAutomorphism inner_automorphism(const PermGroup& g, const Perm& by) {
  if (!g.contains(by))
    throw std::invalid_argument("conjugator outside the group");
  std::vector<int> table(g.order());
  for (std::size_t i = 0; i < g.order(); ++i)
    table[i] = g.index_of(conjugate(g.elements()[i], by));
  std::vector<Perm> gen_imgs;
  for (const Perm& s : g.generators()) gen_imgs.push_back(conjugate(s, by));
  return GroupAutomorphism(g, std::move(gen_imgs), std::move(table));
}

std::pair<bool, std::vector<int>> is_class_preserving(const PermGroup& g,
                                                      const GroupAutomorphism& gamma) {
  auto classes = conjugacy_classes(g);
  std::vector<int> induced(classes.size());
  bool preserving = true;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    induced[i] = class_index_of(classes, gamma.apply(classes[i].representative));
    if (induced[i] != static_cast<int>(i)) preserving = false;
  }
  return {preserving, induced};
}

std::vector<Perm> minimal_generating_sequence(const PermGroup& g) {
  std::vector<Perm> gens;
  PermGroup sofar = PermGroup::trivial(g.degree());
  for (const Perm& x : g.elements()) {
    if (sofar.order() == g.order()) break;
    if (sofar.contains(x)) continue;
    gens.push_back(x);
    sofar = PermGroup::generate(g.degree(), gens, g.order() + 1);
  }
  return gens;
}

namespace {

void automorphism_scan(const PermGroup& g, const std::vector<Perm>& gens,
                       const std::vector<std::vector<Perm>>& candidates,
                       std::vector<Perm>& picked, std::size_t depth,
                       std::vector<GroupAutomorphism>& out) {
  if (depth == gens.size()) {
    try {
      out.push_back(automorphism_from_images(g, gens, picked));
    } catch (const std::invalid_argument&) {
    }
    return;
  }
  for (const Perm& cand : candidates[depth]) {
    picked.push_back(cand);
    automorphism_scan(g, gens, candidates, picked, depth + 1, out);
    picked.pop_back();
  }
}

}  // namespace

std::vector<GroupAutomorphism> all_automorphisms(const PermGroup& g) {
  auto gens = minimal_generating_sequence(g);
  auto classes = conjugacy_classes(g);

  // Automorphisms preserve element order and class size; prune images by both.
  std::vector<std::vector<Perm>> candidates;
  for (const Perm& s : gens) {
    int ord = s.order();
    std::size_t cls_size = classes[class_index_of(classes, s)].members.size();
    std::vector<Perm> cands;
    for (const Perm& x : g.elements())
      if (x.order() == ord &&
          classes[class_index_of(classes, x)].members.size() == cls_size)
        cands.push_back(x);
    candidates.push_back(std::move(cands));
  }

  std::vector<GroupAutomorphism> out;
  std::vector<Perm> picked;
  automorphism_scan(g, gens, candidates, picked, 0, out);
  return out;
}

}  // namespace schinzel
