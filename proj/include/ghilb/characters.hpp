#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ghilb/continued_fraction.hpp"
#include "ghilb/fan.hpp"

namespace ghilb {

class CaseRuleViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

CharacterSet socle_characters(const GGraph& graph);

/// Union of socle characters over every chart of the fan.
CharacterSet essential_chars(const Fan& fan);
CharacterSet essential_chars(const GroupAction& g);

/// { chi_i (x) chi : chi in ec }.
CharacterSet ec_twist(const CharacterSet& ec, Int i);

/// Intersection of socle characters over the maximal cones containing ray.
CharacterSet ec_divisor(const Fan& fan, const LatticePoint& ray);

/// kTerminal also asserts the ratio shapes printed for the terminal family;
/// kGeneral keeps only the character bookkeeping and lets valency >= 5
/// vertices pair the doubly used characters.
enum class RuleMode { kTerminal, kGeneral };

CharacterSet special_char(const Fan& fan, const VertexInfo& vertex, RuleMode mode = RuleMode::kTerminal);

struct VertexDecoration {
  LatticePoint ray;
  VertexCase case_tag = VertexCase::kNone;
  int valency = 0;
  CharacterSet special;
  CharacterSet essential;
  std::vector<std::size_t> cones;
  bool ok = false;
  std::string note;
};

struct DecorationReport {
  GroupAction group;
  Int twist = 1;
  std::vector<VertexDecoration> vertices;
  /// Union of the vertex decorations.
  CharacterSet special_global;
  /// EC twisted by chi_twist.
  CharacterSet essential_twisted;
  bool global_ok = false;
  /// Characters of walls joining two interior rays, then of the
  /// small-resolution diagonals.
  std::vector<Int> curve_characters;

  bool ok() const;
};

DecorationReport decorate(const Fan& fan, Int twist, RuleMode mode);

/// SC(D) = EC(D) (x) chi_1 at every interior vertex and SC(G) = EC(1).
DecorationReport verify_theorem(const GroupAction& g);
DecorationReport verify_theorem(const Fan& fan);

/// The same comparison twisted by chi_{a+b+c} under the general rules.
DecorationReport conjecture_report(const GroupAction& g);
DecorationReport conjecture_report(const Fan& fan);

struct Kidoh2D {
  Int r = 0, a = 0;
  HJFraction b;
  std::vector<Int> i;  ///< i_0 = r, ..., i_{s+1} = 0
  std::vector<Int> j;  ///< j_0 = 0, ..., j_{s+1} = r
  std::vector<GGraph> graphs;
  /// { wt(y^{j_k}) : k = 1..s }.
  CharacterSet special;
};

Kidoh2D kidoh_2d(Int r, Int a);

CharacterSet socle_chars_2d(const GGraph& graph);

struct Prop2DEntry {
  std::size_t graph = 0;
  Monomial socle;
  Int twisted = 0;  ///< wt(socle * xy)
  bool ok = false;
};

struct Prop2DReport {
  Int r = 0, a = 0;
  std::vector<Prop2DEntry> entries;
  CharacterSet special;
  CharacterSet essential_twisted;  ///< EC(1 + a)
  bool graphs_match = false;       ///< Kidoh graphs = wall-crossing graphs
  bool ok() const;
};

Prop2DReport verify_prop_2d(Int r, Int a);

}  // namespace ghilb
