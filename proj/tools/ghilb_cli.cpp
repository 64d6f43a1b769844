#include <cstdlib>
#include <iostream>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ghilb/io.hpp"

namespace {

using namespace ghilb;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct RunConfig {
  std::string group = "10:3";
  std::string out;
  std::vector<std::string> formats{"json"};
  bool two_dim = false;
  std::size_t samples = 1000;
  std::string range = "2:40";
};

std::string out_path(const RunConfig& cfg, const std::string& name) {
  std::string dir = cfg.out;
  if (dir.empty()) {
    const char* env = std::getenv("GHILB_OUT_DIR");
    dir = env ? env : ".";
  }
  return dir + "/" + name;
}

bool wants(const RunConfig& cfg, const std::string& format) {
  for (const auto& f : cfg.formats)
    if (f == format) return true;
  return false;
}

void emit(const RunConfig& cfg, const std::string& name, const std::string& content) {
  const std::string path = out_path(cfg, name);
  write_atomic(path, content);
  std::cout << "wrote " << path << "\n";
}

std::pair<Int, Int> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const Int r = std::stoll(text);
      return {r, r};
    }
    return {std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--range", "expected lo:hi, got '" + text + "'");
  }
}

int cmd_fan(const RunConfig& cfg) {
  const GroupAction g = parse_group(cfg.group, cfg.two_dim);
  const Fan fan = build_fan(g);
  std::cout << to_string(g) << ": " << fan.cones.size() << " cones, " << fan.rays.size() << " rays, "
            << fan.conifold_count() << " conifolds\n";
  if (wants(cfg, "json")) emit(cfg, "fan.json", to_json(fan).dump(2) + "\n");
  if (wants(cfg, "csv")) emit(cfg, "fan.csv", fan_csv(fan));
  if (wants(cfg, "svg") && g.dim() == 3) emit(cfg, "slice.svg", render_svg(fan));
  return kPass;
}

int cmd_resolve(const RunConfig& cfg) {
  const GroupAction g = parse_group(cfg.group, cfg.two_dim);
  const ResolvedFan res = resolve(build_fan(g));
  std::cout << to_string(g) << ": " << res.diagonals.size() << " diagonals, " << res.cones.size()
            << " smooth cones\n";
  for (const auto& d : res.diagonals)
    std::cout << "  cone " << d.cone << ": " << to_string(d.rays[0]) << " - " << to_string(d.rays[1]) << "  "
              << to_string(d.ratio) << "  chi" << d.ratio.character << "\n";
  emit(cfg, "resolved.json", to_json(res).dump(2) + "\n");
  return kPass;
}

int cmd_characters(const RunConfig& cfg) {
  const GroupAction g = parse_group(cfg.group, cfg.two_dim);
  const Fan fan = build_fan(g);
  const auto j = characters_json(fan);
  std::cout << "EC " << to_string(essential_chars(fan)) << "\n";
  emit(cfg, "characters.json", j.dump(2) + "\n");
  return kPass;
}

int cmd_verify(const RunConfig& cfg) {
  const GroupAction g = parse_group(cfg.group, cfg.two_dim);
  if (g.dim() == 2) {
    const Prop2DReport rep = verify_prop_2d(g.order(), g.weight(1));
    if (wants(cfg, "json")) emit(cfg, "report.json", to_json(rep).dump(2) + "\n");
    if (wants(cfg, "csv")) emit(cfg, "report.csv", prop_2d_csv(rep));
    std::cout << "special " << to_string(rep.special) << ", EC(1+a) " << to_string(rep.essential_twisted) << ": "
              << (rep.ok() ? "pass" : "FAIL") << "\n";
    return rep.ok() ? kPass : kFail;
  }
  const DecorationReport rep = g.is_terminal() ? verify_theorem(g) : conjecture_report(g);
  if (wants(cfg, "json")) emit(cfg, "report.json", to_json(rep).dump(2) + "\n");
  if (wants(cfg, "csv")) emit(cfg, "report.csv", decoration_csv(rep));
  for (const auto& v : rep.vertices)
    std::cout << "  " << to_string(v.ray) << " " << to_string(v.case_tag) << " SC " << to_string(v.special) << " EC "
              << to_string(v.essential) << (v.ok ? "" : "  FAIL " + v.note) << "\n";
  std::cout << "SC(G) " << to_string(rep.special_global) << ", EC(" << rep.twist << ") "
            << to_string(rep.essential_twisted) << ": " << (rep.ok() ? "pass" : "FAIL") << "\n";
  return rep.ok() ? kPass : kFail;
}

int cmd_sweep(const RunConfig& cfg) {
  const auto [lo, hi] = parse_range(cfg.range);
  const auto rows = sweep(terminal_pairs(lo, hi), cfg.samples, std::max(1u, std::thread::hardware_concurrency()));
  std::size_t failed = 0;
  for (const auto& r : rows)
    if (!r.ok()) {
      ++failed;
      std::cout << "fail 1/" << r.r << "(1," << r.a << "," << r.r - r.a << "): " << r.detail << "\n";
    }
  emit(cfg, "sweep.csv", sweep_csv(rows));
  std::cout << rows.size() << " groups, " << failed << " failed\n";
  return failed == 0 ? kPass : kFail;
}

int cmd_cf(const RunConfig& cfg) {
  std::cout << cf_text(parse_group(cfg.group, false));
  return kPass;
}

int cmd_render(const RunConfig& cfg) {
  const GroupAction g = parse_group(cfg.group, false);
  emit(cfg, "slice.svg", render_svg(build_fan(g)));
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"G-Hilbert scheme fans, small resolutions and special characters for cyclic quotients"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto group_opt = [&](CLI::App* sub) {
    sub->add_option("--group,-g", cfg.group, "r:a for 1/r(1,a,r-a), or r:a,b,c")->capture_default_str();
    sub->add_option("--out,-o", cfg.out, "output directory (default $GHILB_OUT_DIR or .)");
    sub->add_option("--format,-f", cfg.formats, "json, csv, svg")
        ->check(CLI::IsMember({"json", "csv", "svg"}))
        ->delimiter(',')
        ->capture_default_str();
    sub->add_flag("--two-dim", cfg.two_dim, "read r:a as 1/r(1,a) on C^2");
  };

  auto* fan = app.add_subcommand("fan", "build the fan by wall-crossing");
  group_opt(fan);
  auto* res = app.add_subcommand("resolve", "small resolution of the conifold charts");
  group_opt(res);
  auto* chars = app.add_subcommand("characters", "essential characters");
  group_opt(chars);
  auto* verify = app.add_subcommand("verify", "special vs essential characters");
  group_opt(verify);
  auto* sw = app.add_subcommand("sweep", "invariant suite over terminal groups");
  sw->add_option("--range", cfg.range, "lo:hi range of r")->capture_default_str();
  sw->add_option("--samples", cfg.samples, "coverage samples per fan")->capture_default_str();
  sw->add_option("--out,-o", cfg.out, "output directory");
  auto* cf = app.add_subcommand("cf", "cyclic continued fraction and knock-out trace");
  cf->add_option("--group,-g", cfg.group, "r:a,b,c")->capture_default_str();
  auto* render = app.add_subcommand("render", "barycentric SVG slice");
  render->add_option("--group,-g", cfg.group, "r:a or r:a,b,c")->capture_default_str();
  render->add_option("--out,-o", cfg.out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*fan) return cmd_fan(cfg);
    if (*res) return cmd_resolve(cfg);
    if (*chars) return cmd_characters(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*sw) return cmd_sweep(cfg);
    if (*cf) return cmd_cf(cfg);
    if (*render) return cmd_render(cfg);
  } catch (const InvalidGroup& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
