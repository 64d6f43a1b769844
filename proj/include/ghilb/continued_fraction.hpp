#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ghilb/lattice.hpp"

namespace ghilb {

/// Hirzebruch-Jung (minus sign) continued fraction b1 - 1/(b2 - 1/(...)).
struct HJFraction {
  std::vector<Int> entries;
  bool operator==(const HJFraction&) const = default;
};

/// Cyclic continued fraction around the junior simplex e1 e2 e3.
struct CyclicCF {
  std::vector<Int> entries;
  bool operator==(const CyclicCF&) const = default;
};

HJFraction hj_expand(Int num, Int den);

/// Nested evaluation; throws std::domain_error on a zero denominator.
Rational hj_eval(const HJFraction& f);

/// Orientation of each corner segment of a cyclic continued fraction. The
/// corner at e_i is the surface singularity 1/r(w_{i+1}, w_{i+2}) (indices
/// cyclic), normalised to 1/r(1, c). kDirect emits hj_expand(r, c),
/// kComplement emits hj_expand(r, r - c). kDirect is the orientation that
/// reproduces [[1,2,2,2,2,1,3,2,1,3,2]] for 1/5(1,2,3).
enum class CornerOrientation { kDirect, kComplement };
inline constexpr CornerOrientation kCornerOrientation = CornerOrientation::kDirect;

/// The normalised corner type c of 1/r(1, c) at e_i.
Int corner_type(const GroupAction& g, int corner);
HJFraction corner_fraction(const GroupAction& g, int corner);

/// [[1, seg(e1), 1, seg(e2), 1, seg(e3)]]. The trivial group gives [[1,1,1]].
CyclicCF cyclic_cf(const GroupAction& g);

/// Replace the cyclic segment [a, 1, b] centred at pos by [a-1, b-1].
CyclicCF knockout_step(const CyclicCF& cf, std::size_t pos);

/// Repeated knock-outs starting at pos. After each step the next site is
/// the freshly created entry on the left if it equals 1, then the one on
/// the right, then the first 1 in the sequence. Stops when an entry drops
/// to 0 or below, when [[1,1,1]] is reached, or when no 1 remains. The
/// returned trace starts with cf itself.
std::vector<CyclicCF> knockout_trace(const CyclicCF& cf, std::size_t pos);

/// [b-seg, 1, c-seg] for a cyclic fraction [[1, a-seg, 1, b-seg, 1, c-seg]].
std::vector<Int> lower_subsequence(const CyclicCF& cf);

std::string to_string(const HJFraction& f);
std::string to_string(const CyclicCF& cf);
std::string sequence_to_string(const std::vector<Int>& seq);

}  // namespace ghilb
