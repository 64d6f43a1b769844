#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ghilb/characters.hpp"
#include "ghilb/continued_fraction.hpp"
#include "ghilb/fan.hpp"
#include "ghilb/small_resolution.hpp"
#include "ghilb/sweep.hpp"

namespace ghilb {

inline constexpr const char* kSchema = "ghilb/1";

/// "r:a" is the terminal 1/r(1, a, r - a); "r:a,b,c" and "r:a,b" are
/// explicit weights. two_dim turns "r:a" into 1/r(1, a) on C^2.
GroupAction parse_group(const std::string& text, bool two_dim = false);

nlohmann::json to_json(const GroupAction& g);
nlohmann::json to_json(const Fan& fan);
nlohmann::json to_json(const ResolvedFan& res);
nlohmann::json to_json(const DecorationReport& rep);
nlohmann::json to_json(const Prop2DReport& rep);
nlohmann::json characters_json(const Fan& fan);

/// Columns: Cone, Generator, G-graph, Character of socle.
std::string fan_csv(const Fan& fan);
/// Columns: Vertex, Case, Special characters, Associated cone, Essential characters.
std::string decoration_csv(const DecorationReport& rep);
std::string prop_2d_csv(const Prop2DReport& rep);
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Corner expansions, cyclic fraction, lower subsequence and knock-out trace.
std::string cf_text(const GroupAction& g);

/// Barycentric slice of a 3-D fan with ratio labels on the walls.
std::string render_svg(const Fan& fan);

/// Writes through a temporary sibling and renames, so no partial files.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace ghilb
