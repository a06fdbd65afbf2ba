#ifndef SCHINZEL_PERM_GROUP_HPP
#define SCHINZEL_PERM_GROUP_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schinzel/perm.hpp"

namespace schinzel {

// Desk-scale order bound for element enumeration; SCHINZEL_ORDER_BOUND
// overrides the default of 100000.
std::size_t default_order_bound();

// A finite permutation group with its element set materialized.
// Elements are kept sorted lexicographically on image arrays; that order is
// the canonical element order used for all "minimal representative" choices.
class PermGroup {
public:
  PermGroup() = default;

  // Breadth-first closure of the generators. Throws BoundExceeded when the
  // closure grows past order_bound. An empty generator list yields the
  // trivial group.
  static PermGroup generate(int degree, std::vector<Perm> gens,
                            std::size_t order_bound = default_order_bound());

  // Wraps an already-closed element set (validated).
  static PermGroup from_elements(int degree, std::vector<Perm> elements);

  static PermGroup trivial(int degree);
  static PermGroup symmetric(int degree);
  static PermGroup cyclic(int degree);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& identity() const;

  bool contains(const Perm& p) const;
  // Index into elements() or -1.
  int index_of(const Perm& p) const;
  bool is_subgroup_of(const PermGroup& g) const;
  bool same_group(const PermGroup& other) const;

  bool is_transitive() const;
  bool is_abelian() const;
  std::vector<int> orbit_of(int letter) const;

private:
  int degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Perm> elements_;
};

struct ConjClass {
  Perm representative;          // lex-minimal member
  std::vector<Perm> members;    // sorted
  std::string label;            // cycle type + minimal member, e.g. "2.2|(1 2)(3 4)"
};

// Classes partition the group; the identity's class comes first and the rest
// are ordered by their minimal members.
std::vector<ConjClass> conjugacy_classes(const PermGroup& g);

// Index of the class of p inside conjugacy_classes(g).
int class_index_of(const std::vector<ConjClass>& classes, const Perm& p);

// Action of g on the left cosets xH by multiplication: xH -> (s*x)H.
// Letter 1 is the coset H itself; coset representatives are the
// first-in-canonical-order (hence lex-minimal) members.
class CosetAction {
public:
  CosetAction(PermGroup group, PermGroup subgroup);

  int degree() const { return n_cosets_; }
  const PermGroup& group() const { return group_; }
  const PermGroup& subgroup() const { return subgroup_; }
  const std::vector<Perm>& coset_reps() const { return reps_; }
  bool faithful() const { return faithful_; }

  // The induced permutation of {1..[G:H]} for s in G.
  Perm act(const Perm& s) const;
  int coset_of(const Perm& x) const;

private:
  PermGroup group_;
  PermGroup subgroup_;
  std::vector<Perm> reps_;
  std::vector<int> coset_of_element_;  // aligned with group_.elements()
  int n_cosets_ = 0;
  bool faithful_ = false;
};

CosetAction coset_action(const PermGroup& g, const PermGroup& h);

PermGroup point_stabilizer(const PermGroup& g, int letter);

// All subgroups strictly between h and g, ordered by (order, elements).
// These are in bijection with the blocks containing letter 1 of the coset
// action of g on h; empty iff that action is primitive.
std::vector<PermGroup> intermediate_subgroups(const PermGroup& g, const PermGroup& h);

bool is_normal(const PermGroup& g, const PermGroup& h);

// N_{S_n}(G, C): all alpha in S_n normalizing g whose conjugation permutes
// the given class multiset preserving multiplicity. Brute force over S_n;
// throws BoundExceeded when degree > max_degree.
PermGroup normalizer_in_symmetric(const PermGroup& g,
                                  const std::vector<Perm>& class_reps,
                                  int max_degree = 8);

bool are_conjugate_subgroups(const PermGroup& g, const PermGroup& a, const PermGroup& b);
PermGroup conjugate_subgroup(const PermGroup& h, const Perm& by);

// An automorphism of a materialized group, stored as a full element table.
class GroupAutomorphism {
public:
  GroupAutomorphism() = default;
  GroupAutomorphism(PermGroup domain, std::vector<Perm> gen_images,
                    std::vector<int> table);

  const PermGroup& domain() const { return domain_; }
  const std::vector<Perm>& generator_images() const { return gen_images_; }

  Perm apply(const Perm& x) const;
  int apply_index(int element_index) const { return table_[element_index]; }

  GroupAutomorphism inverse() const;
  GroupAutomorphism then(const GroupAutomorphism& next) const;  // next after this
  GroupAutomorphism power(int k) const;
  bool is_identity() const;
  bool is_inner() const;

  bool operator==(const GroupAutomorphism& other) const {
    return table_ == other.table_;
  }

private:
  PermGroup domain_;
  std::vector<Perm> gen_images_;
  std::vector<int> table_;  // element index -> element index
};

// Extends a generator-image assignment to an automorphism, validating the
// homomorphism property exhaustively. Throws std::invalid_argument when the
// assignment does not extend, or extends non-bijectively.
GroupAutomorphism automorphism_from_images(const PermGroup& g,
                                           const std::vector<Perm>& gens,
                                           const std::vector<Perm>& gen_images);

GroupAutomorphism identity_automorphism(const PermGroup& g);
GroupAutomorphism inner_automorphism(const PermGroup& g, const Perm& by);

// Whether gamma maps every conjugacy class to itself, plus the permutation
// gamma induces on class indices.
std::pair<bool, std::vector<int>> is_class_preserving(const PermGroup& g,
                                                      const GroupAutomorphism& gamma);

// Full automorphism group by scan over generator images (desk scale).
std::vector<GroupAutomorphism> all_automorphisms(const PermGroup& g);

// A deterministic small generating sequence (greedy over canonical order).
std::vector<Perm> minimal_generating_sequence(const PermGroup& g);

}  // namespace schinzel

#endif
