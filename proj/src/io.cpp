#include "ghilb/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace ghilb {

using nlohmann::json;

namespace {

std::vector<Int> split_ints(const std::string& text) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const Int v = std::stoll(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
    out.push_back(v);
  }
  return out;
}

json ray_json(const LatticePoint& p) { return json::array({p.scaled[0], p.scaled[1], p.scaled[2]}); }

json chars_json(const CharacterSet& s) { return json(std::vector<Int>(s.values.begin(), s.values.end())); }

std::string compact(const Monomial& m) {
  std::string s = to_string(m);
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return s;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string chars_text(const CharacterSet& s) {
  std::vector<std::string> parts;
  for (auto v : s.values) parts.push_back("chi" + std::to_string(v));
  return join(parts, " ");
}

}  // namespace

GroupAction parse_group(const std::string& text, bool two_dim) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InvalidGroup("group must look like r:a or r:a,b,c");
  std::vector<Int> r;
  std::vector<Int> w;
  try {
    r = split_ints(text.substr(0, colon));
    w = split_ints(text.substr(colon + 1));
  } catch (const std::exception& e) {
    throw InvalidGroup(std::string("cannot parse group '") + text + "': " + e.what());
  }
  if (r.size() != 1 || w.empty()) throw InvalidGroup("group must look like r:a or r:a,b,c");
  if (w.size() == 1) {
    if (two_dim) {
      if (r[0] < 2 || w[0] <= 0 || w[0] >= r[0] || gcd(r[0], w[0]) != 1)
        throw InvalidGroup("1/r(1, a) needs 0 < a < r coprime");
      return GroupAction(r[0], {1, w[0]});
    }
    return GroupAction::terminal(r[0], w[0]);
  }
  if (w.size() != 2 && w.size() != 3) throw InvalidGroup("two or three weights expected");
  return GroupAction(r[0], w);
}

json to_json(const GroupAction& g) {
  return json{{"order", g.order()}, {"weights", g.weights()}, {"label", to_string(g)}};
}

json to_json(const Fan& fan) {
  json j;
  j["schema"] = kSchema;
  j["group"] = to_json(fan.group);
  j["denominator"] = fan.group.order();
  j["rays"] = json::array();
  for (const auto& p : fan.rays) j["rays"].push_back(ray_json(p));
  j["cones"] = json::array();
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    const auto& c = fan.cones[i];
    json cj;
    cj["id"] = i;
    cj["rays"] = json::array();
    for (const auto& p : c.cone.vrep.rays) cj["rays"].push_back(ray_json(p));
    cj["span"] = json::array();
    for (const auto& m : c.span) cj["span"].push_back(compact(m));
    cj["members"] = json::array();
    for (const auto& m : c.graph.members()) cj["members"].push_back(compact(m));
    cj["socle_characters"] = chars_json(socle_characters(c.graph));
    j["cones"].push_back(cj);
  }
  j["walls"] = json::array();
  for (const auto& w : fan.walls) {
    json wj;
    wj["cones"] = json::array({w.cones[0]});
    wj["cones"].push_back(w.interior() ? json(w.cones[1]) : json(nullptr));
    wj["rays"] = json::array();
    for (const auto& p : w.rays) wj["rays"].push_back(ray_json(p));
    wj["ratio"] = w.ratio ? json(to_string(*w.ratio)) : json(nullptr);
    wj["character"] = w.ratio ? json(w.ratio->character) : json(nullptr);
    j["walls"].push_back(wj);
  }
  j["vertices"] = json::array();
  for (const auto& v : classify_vertices(fan, false))
    j["vertices"].push_back({{"ray", ray_json(v.ray)}, {"valency", v.valency}, {"case", to_string(v.case_tag)}});
  return j;
}

json to_json(const ResolvedFan& res) {
  json j = to_json(res.fan);
  j["diagonals"] = json::array();
  for (const auto& d : res.diagonals)
    j["diagonals"].push_back({{"cone", d.cone},
                              {"rays", json::array({ray_json(d.rays[0]), ray_json(d.rays[1])})},
                              {"character", d.ratio.character},
                              {"ratio", to_string(d.ratio)},
                              {"smooth_diagonals", d.smooth_diagonals}});
  j["resolved_cones"] = json::array();
  for (const auto& c : res.cones) {
    json cj = json::array();
    for (const auto& p : c) cj.push_back(ray_json(p));
    j["resolved_cones"].push_back(cj);
  }
  return j;
}

json to_json(const DecorationReport& rep) {
  json j;
  j["schema"] = kSchema;
  j["group"] = to_json(rep.group);
  j["twist"] = rep.twist;
  j["vertices"] = json::array();
  for (const auto& v : rep.vertices)
    j["vertices"].push_back({{"ray", ray_json(v.ray)},
                             {"case", to_string(v.case_tag)},
                             {"valency", v.valency},
                             {"special", chars_json(v.special)},
                             {"essential", chars_json(v.essential)},
                             {"cones", v.cones},
                             {"ok", v.ok},
                             {"note", v.note}});
  j["special_global"] = chars_json(rep.special_global);
  j["essential_twisted"] = chars_json(rep.essential_twisted);
  j["global_ok"] = rep.global_ok;
  j["ok"] = rep.ok();
  j["curve_characters"] = rep.curve_characters;
  return j;
}

json to_json(const Prop2DReport& rep) {
  json j;
  j["schema"] = kSchema;
  j["group"] = to_json(GroupAction(rep.r, {1, rep.a}));
  j["entries"] = json::array();
  for (const auto& e : rep.entries)
    j["entries"].push_back({{"graph", e.graph}, {"socle", compact(e.socle)}, {"twisted", e.twisted}, {"ok", e.ok}});
  j["special"] = chars_json(rep.special);
  j["essential_twisted"] = chars_json(rep.essential_twisted);
  j["graphs_match"] = rep.graphs_match;
  j["ok"] = rep.ok();
  return j;
}

json characters_json(const Fan& fan) {
  json j;
  j["schema"] = kSchema;
  j["group"] = to_json(fan.group);
  const CharacterSet ec = essential_chars(fan);
  j["essential"] = chars_json(ec);
  Int sum = 0;
  for (auto w : fan.group.weights()) sum += w;
  j["twist"] = residue(sum, fan.group.order());
  j["essential_twisted"] = chars_json(ec_twist(ec, sum));
  j["divisors"] = json::array();
  for (const auto& p : fan.rays)
    if (is_interior_ray(p, fan.group.dim()))
      j["divisors"].push_back({{"ray", ray_json(p)}, {"essential", chars_json(ec_divisor(fan, p))}});
  return j;
}

std::string fan_csv(const Fan& fan) {
  std::ostringstream os;
  os << "Cone,Generator,G-graph,Character of socle\n";
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    const auto& c = fan.cones[i];
    std::vector<std::string> rays, span;
    for (const auto& p : c.cone.vrep.rays) rays.push_back(to_string(p));
    for (const auto& m : c.span) span.push_back(compact(m));
    os << i << "," << csv_field(join(rays, " ")) << "," << csv_field("Span(" + join(span, " ") + ")") << ","
       << chars_text(socle_characters(c.graph)) << "\n";
  }
  return os.str();
}

std::string decoration_csv(const DecorationReport& rep) {
  std::ostringstream os;
  os << "Vertex,Case,Special characters,Associated cone,Essential characters\n";
  for (const auto& v : rep.vertices) {
    std::vector<std::string> cones;
    for (auto c : v.cones) cones.push_back(std::to_string(c));
    os << csv_field(to_string(v.ray)) << "," << to_string(v.case_tag) << "," << chars_text(v.special) << ","
       << join(cones, " ") << "," << chars_text(v.essential) << "\n";
  }
  return os.str();
}

std::string prop_2d_csv(const Prop2DReport& rep) {
  std::ostringstream os;
  os << "Graph,Socle,Twisted character,Special\n";
  for (const auto& e : rep.entries)
    os << e.graph << "," << compact(e.socle) << ",chi" << e.twisted << "," << (e.ok ? "yes" : "no") << "\n";
  return os.str();
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "r,a,cones,conifolds,unique_smooth_diagonals,verdict,detail\n";
  for (const auto& r : rows)
    os << r.r << "," << r.a << "," << r.cones << "," << r.conifolds << "," << r.unique_smooth_diagonals << ","
       << (r.ok() ? "pass" : "fail") << "," << csv_field(r.detail) << "\n";
  return os.str();
}

std::string cf_text(const GroupAction& g) {
  std::ostringstream os;
  os << "group " << to_string(g) << "\n";
  const CyclicCF cf = cyclic_cf(g);
  std::size_t start = 0;
  if (g.order() > 1) {
    for (int corner = 0; corner < 3; ++corner)
      os << "corner e" << corner + 1 << ": 1/" << g.order() << "(1," << corner_type(g, corner) << ") "
         << to_string(corner_fraction(g, corner)) << "\n";
    start = 1 + corner_fraction(g, 0).entries.size();
  }
  os << "cyclic " << to_string(cf) << "\n";
  try {
    os << "lower " << sequence_to_string(lower_subsequence(cf)) << "\n";
  } catch (const std::invalid_argument& e) {
    os << "lower - (" << e.what() << ")\n";
  }
  const auto trace = knockout_trace(cf, start);
  os << "knock-out";
  for (const auto& step : trace) os << " " << to_string(step);
  os << "\n";
  const auto& last = trace.back().entries;
  if (std::any_of(last.begin(), last.end(), [](Int e) { return e <= 0; }))
    os << "stopped: zero entry\n";
  else if (last == std::vector<Int>{1, 1, 1})
    os << "stopped: [[1,1,1]]\n";
  else
    os << "stopped: no entry 1\n";
  return os.str();
}

std::string render_svg(const Fan& fan) {
  if (fan.group.dim() != 3) throw std::invalid_argument("render needs a 3-D fan");
  const double corner[3][2] = {{40.0, 560.0}, {660.0, 560.0}, {350.0, 23.0}};
  auto place = [&](const LatticePoint& p) {
    const double s = static_cast<double>(p.scaled[0] + p.scaled[1] + p.scaled[2]);
    double x = 0, y = 0;
    for (int i = 0; i < 3; ++i) {
      x += corner[i][0] * static_cast<double>(p.scaled[static_cast<std::size_t>(i)]) / s;
      y += corner[i][1] * static_cast<double>(p.scaled[static_cast<std::size_t>(i)]) / s;
    }
    return std::pair<double, double>{x, y};
  };
  auto label = [](const MonomialRatio& q) {
    // x^7:z with exponents raised
    std::string text = to_string(q), out;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '^') {
        std::size_t k = i + 1;
        while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
        out += "<tspan baseline-shift=\"super\" font-size=\"7\">" + text.substr(i + 1, k - i - 1) + "</tspan>";
        i = k - 1;
      } else {
        out += text[i];
      }
    }
    return out;
  };

  std::ostringstream os;
  os << std::fixed << std::setprecision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"700\" height=\"600\" viewBox=\"0 0 700 600\">\n";
  os << "<title>" << to_string(fan.group) << "</title>\n";
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    const auto& rays = fan.cones[i].cone.vrep.rays;
    std::vector<std::pair<double, double>> pts;
    double cx = 0, cy = 0;
    for (const auto& p : rays) {
      pts.push_back(place(p));
      cx += pts.back().first / static_cast<double>(rays.size());
      cy += pts.back().second / static_cast<double>(rays.size());
    }
    std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) {
      return std::atan2(a.second - cy, a.first - cx) < std::atan2(b.second - cy, b.first - cx);
    });
    const bool conifold = rays.size() == 4;
    os << "<polygon id=\"cone" << i << "\" fill=\"" << (conifold ? "#f2e6c9" : "#e8eef6") << "\" stroke=\"#333\" stroke-width=\"1\" points=\"";
    for (std::size_t k = 0; k < pts.size(); ++k) os << (k ? " " : "") << pts[k].first << "," << pts[k].second;
    os << "\"/>\n";
  }
  for (const auto& w : fan.walls) {
    if (!w.ratio) continue;
    const auto a = place(w.rays[0]);
    const auto b = place(w.rays[1]);
    os << "<text x=\"" << (a.first + b.first) / 2 << "\" y=\"" << (a.second + b.second) / 2
       << "\" font-size=\"9\" text-anchor=\"middle\" fill=\"#902\">" << label(*w.ratio) << "</text>\n";
  }
  for (const auto& p : fan.rays) {
    const auto q = place(p);
    os << "<circle cx=\"" << q.first << "\" cy=\"" << q.second << "\" r=\"2.5\" fill=\"#000\"><title>" << to_string(p)
       << "</title></circle>\n";
  }
  os << "</svg>\n";
  return os.str();
}

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    if (!out) {
      out.close();
      fs::remove(tmp);
      throw std::runtime_error("write failed for " + tmp.string());
    }
  }
  fs::rename(tmp, target);
}

}  // namespace ghilb
