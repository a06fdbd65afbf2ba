#include "schinzel/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schinzel {

Perm::Perm(int degree) : img_(degree) {
  if (degree < 0)
    throw std::invalid_argument("negative degree");
  std::iota(img_.begin(), img_.end(), 1);
}

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  const int n = degree();
  std::vector<bool> seen(n, false);
  for (int v : img_) {
    if (v < 1 || v > n)
      throw std::invalid_argument("image out of range");
    if (seen[v - 1])
      throw std::invalid_argument("image array is not a bijection");
    seen[v - 1] = true;
  }
}

Perm Perm::parse(std::string_view text, int degree) {
  if (degree < 1)
    throw std::invalid_argument("degree must be positive");
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 1);
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw std::invalid_argument("expected '(' in cycle notation");
    ++i;
    std::vector<int> cyc;
    for (;;) {
      skip_ws();
      if (i >= text.size())
        throw std::invalid_argument("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("expected letter or ')' in cycle");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      if (v < 1 || v > degree)
        throw std::invalid_argument("letter out of range in cycle notation");
      if (used[v - 1])
        throw std::invalid_argument("repeated letter across cycles");
      used[v - 1] = true;
      cyc.push_back(v);
    }
    for (std::size_t k = 0; k < cyc.size(); ++k)
      img[cyc[k] - 1] = cyc[(k + 1) % cyc.size()];
    skip_ws();
  }
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (int k = 1; k <= degree(); ++k)
    if (img_[k - 1] != k) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(img_.size());
  for (int k = 1; k <= degree(); ++k)
    inv[img_[k - 1] - 1] = k;
  return Perm(std::move(inv));
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(img_.size(), false);
  for (int start = 1; start <= degree(); ++start) {
    if (seen[start - 1]) continue;
    std::vector<int> cyc;
    int k = start;
    do {
      seen[k - 1] = true;
      cyc.push_back(k);
      k = img_[k - 1];
    } while (k != start);
    out.push_back(std::move(cyc));
  }
  return out;
}

int Perm::index() const {
  return degree() - static_cast<int>(cycles().size());
}

int Perm::order() const {
  long long ord = 1;
  for (const auto& c : cycles())
    ord = std::lcm(ord, static_cast<long long>(c.size()));
  return static_cast<int>(ord);
}

bool Perm::is_n_cycle() const {
  return degree() >= 1 && cycles().size() == 1;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> type;
  for (const auto& c : cycles())
    type.push_back(static_cast<int>(c.size()));
  std::sort(type.rbegin(), type.rend());
  return type;
}

std::string Perm::cycle_string() const {
  std::ostringstream os;
  bool any = false;
  for (const auto& c : cycles()) {
    if (c.size() < 2) continue;
    any = true;
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) os << ' ';
      os << c[k];
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("degree mismatch in product");
  std::vector<int> img(p.degree());
  for (int k = 1; k <= p.degree(); ++k)
    img[k - 1] = p(q(k));
  return Perm(std::move(img));
}

Perm compose(const Perm& p, const Perm& q) {
  return q * p;
}

Perm conjugate(const Perm& x, const Perm& g) {
  if (x.degree() != g.degree())
    throw std::invalid_argument("degree mismatch in conjugation");
  std::vector<int> img(x.degree());
  for (int k = 1; k <= x.degree(); ++k)
    img[g(k) - 1] = g(x(k));
  return Perm(std::move(img));
}

std::string to_string(const Perm& p) {
  return p.cycle_string();
}

}  // namespace schinzel
