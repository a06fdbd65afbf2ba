#ifndef SCHINZEL_PERM_HPP
#define SCHINZEL_PERM_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace schinzel {

// A permutation of the letters {1..n}.
//
// Products compose right-to-left, matching matrix notation: (p * q) applies
// q first, then p.  `compose(p, q)` is the opposite reading ("apply p first,
// then q") for call sites that want the word order spelled out.
// Conjugation is conjugate(x, g) = g * x * g^-1 (relabelling letters via g).
class Perm {
public:
  Perm() = default;
  explicit Perm(int degree);                   // identity
  explicit Perm(std::vector<int> images);      // 1-based image array

  // Parses whitespace-separated disjoint cycles, e.g. "(1 2 3)(4 5)".
  // Empty text or "()" is the identity. Throws std::invalid_argument on
  // repeated letters, letters out of range, or malformed parentheses.
  static Perm parse(std::string_view cycles, int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int letter) const { return img_[letter - 1]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  Perm inverse() const;
  int order() const;

  // Disjoint cycles, fixed points included as 1-cycles; each cycle starts at
  // its minimal letter and cycles are sorted by minimal letter.
  std::vector<std::vector<int>> cycles() const;

  // ind(p) = degree - number of disjoint cycles (fixed points count).
  int index() const;

  bool is_n_cycle() const;

  // Multiset of cycle lengths, descending (e.g. "4.2.1.1" -> {4,2,1,1}).
  std::vector<int> cycle_type() const;

  // Canonical cycle string: 1-cycles omitted, identity rendered as "()".
  std::string cycle_string() const;

  friend Perm operator*(const Perm& p, const Perm& q);  // apply q, then p
  auto operator<=>(const Perm&) const = default;

private:
  std::vector<int> img_;
};

// Spec word order: apply p first, then q.  Equals q * p.
Perm compose(const Perm& p, const Perm& q);

// g * x * g^-1: maps a cycle (a b ...) of x to (g(a) g(b) ...).
Perm conjugate(const Perm& x, const Perm& g);

std::string to_string(const Perm& p);

}  // namespace schinzel

template <>
struct std::hash<schinzel::Perm> {
  std::size_t operator()(const schinzel::Perm& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.images()) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

#endif
