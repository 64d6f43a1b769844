#include "ghilb/monomial.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace ghilb {

Monomial operator*(const Monomial& a, const Monomial& b) { return Monomial{add(a.exponents, b.exponents)}; }

bool grlex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.exponents < b.exponents;
}

Character wt(const GroupAction& g, const Monomial& m) {
  Int v = 0;
  for (int i = 0; i < g.dim(); ++i) v += m[i] * g.weight(i);
  return make_character(v, g.order());
}

bool divides(const Monomial& d, const Monomial& m) {
  return d[0] <= m[0] && d[1] <= m[1] && d[2] <= m[2];
}

Rational pairing(const LatticePoint& w, const Monomial& m) {
  return Rational(dot(w.scaled, m.exponents), w.denominator);
}

Int pairing(const Vec3& w, const Monomial& m) { return dot(w, m.exponents); }

std::string to_string(const Monomial& m) {
  static constexpr char kNames[3] = {'x', 'y', 'z'};
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < 3; ++i) {
    if (m[i] == 0) continue;
    if (any) os << ' ';
    os << kNames[i];
    if (m[i] != 1) os << '^' << m[i];
    any = true;
  }
  return any ? os.str() : "1";
}

Monomial parse_monomial(const std::string& text) {
  Monomial m;
  std::size_t i = 0;
  bool any = false;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
      ++i;
      continue;
    }
    if (c == '1' && !any) {
      ++i;
      continue;
    }
    int var = c == 'x' ? 0 : c == 'y' ? 1 : c == 'z' ? 2 : -1;
    if (var < 0) throw std::invalid_argument("bad monomial: " + text);
    ++i;
    Int e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw std::invalid_argument("bad exponent in: " + text);
      e = std::stoll(text.substr(start, i - start));
    }
    m.exponents[static_cast<std::size_t>(var)] += e;
    any = true;
  }
  return m;
}

MonomialRatio ratio_from_normal(const GroupAction& g, const Vec3& dual_vector) {
  Monomial pos, neg;
  for (std::size_t i = 0; i < 3; ++i) {
    if (dual_vector[i] > 0) pos.exponents[i] = dual_vector[i];
    if (dual_vector[i] < 0) neg.exponents[i] = -dual_vector[i];
  }
  if (wt(g, pos) != wt(g, neg)) throw std::invalid_argument("vector is not in the dual lattice");
  const bool swap = neg[0] > pos[0] || (neg[0] == pos[0] && neg[1] > pos[1]);
  MonomialRatio q{swap ? neg : pos, swap ? pos : neg, 0};
  q.character = wt(g, q.first).value;
  return q;
}

std::string to_string(const MonomialRatio& q) {
  auto compact = [](const Monomial& m) {
    std::string s = to_string(m);
    std::string out;
    for (char c : s)
      if (c != ' ') out += c;
    return out;
  };
  return compact(q.first) + ":" + compact(q.second);
}

}  // namespace ghilb
