#include "ghilb/continued_fraction.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ghilb {

HJFraction hj_expand(Int num, Int den) {
  if (den <= 0 || den >= num) throw std::invalid_argument("hj_expand needs 0 < den < num");
  if (gcd(num, den) != 1) throw std::invalid_argument("hj_expand needs coprime input");
  HJFraction f;
  // num/den = b - 1/(den/(b*den - num)) with b = ceil(num/den)
  while (den != 0) {
    const Int b = (num + den - 1) / den;
    f.entries.push_back(b);
    const Int next = b * den - num;
    num = den;
    den = next;
  }
  return f;
}

Rational hj_eval(const HJFraction& f) {
  if (f.entries.empty()) throw std::domain_error("empty continued fraction");
  Rational value(f.entries.back());
  for (auto it = f.entries.rbegin() + 1; it != f.entries.rend(); ++it) {
    if (value == 0) throw std::domain_error("continued fraction divides by zero");
    value = Rational(*it) - 1 / value;
  }
  return value;
}

Int corner_type(const GroupAction& g, int corner) {
  if (g.dim() != 3) throw InvalidGroup("corners are defined for actions on C^3");
  const Int r = g.order();
  const Int first = g.weight((corner + 1) % 3);
  const Int second = g.weight((corner + 2) % 3);
  const auto inv = mod_inverse(first, r);
  if (!inv || gcd(second, r) != 1) throw InvalidGroup("corner singularity is not isolated");
  return residue(second * *inv, r);
}

HJFraction corner_fraction(const GroupAction& g, int corner) {
  const Int r = g.order();
  const Int c = corner_type(g, corner);
  return hj_expand(r, kCornerOrientation == CornerOrientation::kDirect ? c : r - c);
}

CyclicCF cyclic_cf(const GroupAction& g) {
  if (g.dim() != 3) throw InvalidGroup("cyclic continued fractions need an action on C^3");
  if (g.order() == 1) return CyclicCF{{1, 1, 1}};
  if (!g.is_isolated()) throw InvalidGroup("cyclic continued fraction needs an isolated action");
  CyclicCF cf;
  for (int corner = 0; corner < 3; ++corner) {
    cf.entries.push_back(1);
    const auto seg = corner_fraction(g, corner);
    cf.entries.insert(cf.entries.end(), seg.entries.begin(), seg.entries.end());
  }
  return cf;
}

CyclicCF knockout_step(const CyclicCF& cf, std::size_t pos) {
  const std::size_t n = cf.entries.size();
  if (n < 3) throw std::invalid_argument("knock-out needs two cyclic neighbours");
  if (pos >= n || cf.entries[pos] != 1) throw std::invalid_argument("knock-out site must hold a 1");
  CyclicCF out = cf;
  out.entries[(pos + n - 1) % n] -= 1;
  out.entries[(pos + 1) % n] -= 1;
  out.entries.erase(out.entries.begin() + static_cast<std::ptrdiff_t>(pos));
  return out;
}

std::vector<CyclicCF> knockout_trace(const CyclicCF& cf, std::size_t pos) {
  std::vector<CyclicCF> trace{cf};
  const auto finished = [](const CyclicCF& c) {
    return c.entries == std::vector<Int>{1, 1, 1} ||
           std::any_of(c.entries.begin(), c.entries.end(), [](Int e) { return e <= 0; });
  };
  CyclicCF cur = cf;
  while (!finished(cur) && cur.entries.size() > 3) {
    cur = knockout_step(cur, pos);
    trace.push_back(cur);
    const std::size_t n = cur.entries.size();
    // entries a-1 and b-1 now sit at pos-1 and pos (cyclically)
    const std::size_t left = pos == 0 ? n - 1 : pos - 1;
    const std::size_t right = pos == n ? 0 : pos;
    if (cur.entries[left] == 1) {
      pos = left;
    } else if (cur.entries[right] == 1) {
      pos = right;
    } else {
      auto it = std::find(cur.entries.begin(), cur.entries.end(), 1);
      if (it == cur.entries.end()) break;
      pos = static_cast<std::size_t>(it - cur.entries.begin());
    }
  }
  return trace;
}

std::vector<Int> lower_subsequence(const CyclicCF& cf) {
  const auto& e = cf.entries;
  std::vector<std::size_t> ones;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] == 1) ones.push_back(i);
  if (e.empty() || e[0] != 1 || ones.size() != 3)
    throw std::invalid_argument("lower subsequence needs the form [[1, a.., 1, b.., 1, c..]]");
  return {e.begin() + static_cast<std::ptrdiff_t>(ones[1]) + 1, e.end()};
}

std::string sequence_to_string(const std::vector<Int>& seq) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < seq.size(); ++i) os << (i ? "," : "") << seq[i];
  os << "]";
  return os.str();
}

std::string to_string(const HJFraction& f) { return sequence_to_string(f.entries); }

std::string to_string(const CyclicCF& cf) { return "[" + sequence_to_string(cf.entries) + "]"; }

}  // namespace ghilb
