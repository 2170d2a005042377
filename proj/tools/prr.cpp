// Command-line front end for the prrkin shared library.
//
// Subcommands: ik, jac, isotropic, field, contours, workspace, sweep.
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#include "prrkin/prrkin.h"

namespace {

using nlohmann::json;

constexpr double kPi = 3.14159265358979323846;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Angles accept a "deg" or "rad" suffix; bare numbers are radians.
double parse_angle(const std::string& text) {
  size_t pos = 0;
  const double value = std::stod(text, &pos);
  std::string suffix = text.substr(pos);
  if (suffix == "deg") return value * kPi / 180.0;
  if (suffix.empty() || suffix == "rad") return value;
  throw CLI::ValidationError("angle", "bad angle '" + text + "' (use deg or rad)");
}

struct PoseArg {
  double x = 0.0, y = 0.0, theta = 0.0;
};

PoseArg parse_pose(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 3) {
    throw CLI::ValidationError("pose", "expected x,y,theta, got '" + text + "'");
  }
  return PoseArg{std::stod(parts[0]), std::stod(parts[1]), parse_angle(parts[2])};
}

// Merged file/flag run configuration; flags override file values.
struct RunConfig {
  std::optional<double> R, r, l;
  double delta = 0.0;
  int mode = 1;
  std::string kind = "Abar";
  double L = -1.0;  // <= 0 means auto (sqrt(2) * r)
  std::optional<double> xmin, xmax, ymin, ymax;
  int nx = 100, ny = 100;
  int thetaSamples = 120;
};

void load_config_file(const std::string& path, RunConfig& rc) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw CLI::ValidationError("--config", std::string("parse error: ") + e.what());
  }
  if (j.contains("R")) rc.R = j["R"].get<double>();
  if (j.contains("r")) rc.r = j["r"].get<double>();
  if (j.contains("l")) rc.l = j["l"].get<double>();
  if (j.contains("delta_deg")) rc.delta = j["delta_deg"].get<double>() * kPi / 180.0;
  if (j.contains("mode")) rc.mode = j["mode"].get<int>();
  if (j.contains("kind")) rc.kind = j["kind"].get<std::string>();
  if (j.contains("L")) {
    if (j["L"].is_string() && j["L"] == "auto") {
      rc.L = -1.0;
    } else {
      rc.L = j["L"].get<double>();
    }
  }
  if (j.contains("grid")) {
    const json& g = j["grid"];
    if (g.contains("xmin")) rc.xmin = g["xmin"].get<double>();
    if (g.contains("xmax")) rc.xmax = g["xmax"].get<double>();
    if (g.contains("ymin")) rc.ymin = g["ymin"].get<double>();
    if (g.contains("ymax")) rc.ymax = g["ymax"].get<double>();
    if (g.contains("nx")) rc.nx = g["nx"].get<int>();
    if (g.contains("ny")) rc.ny = g["ny"].get<int>();
  }
  if (j.contains("theta_samples")) rc.thetaSamples = j["theta_samples"].get<int>();
}

struct GeometryHandle {
  prr_geometry* geom = nullptr;
  ~GeometryHandle() { prr_geometry_destroy(geom); }
};

[[noreturn]] void die(prr_status status) {
  std::cerr << "error: " << prr_status_name(status) << ": " << prr_last_error()
            << "\n";
  std::exit(1);
}

void check(prr_status status) {
  if (status != PRR_OK) die(status);
}

prr_geometry* make_geometry(const RunConfig& rc) {
  if (!rc.R || !rc.r || !rc.l) {
    std::cerr << "error: InvalidGeometry: R, r and l are required (flags or "
                 "--config file)\n";
    std::exit(1);
  }
  prr_geometry* geom = nullptr;
  check(prr_geometry_create(*rc.R, *rc.r, *rc.l, rc.delta, &geom));
  return geom;
}

prr_grid make_grid(const RunConfig& rc, const prr_geometry* geom) {
  const double h = prr_geometry_default_halfwidth(geom);
  prr_grid g;
  g.xmin = rc.xmin.value_or(-h);
  g.xmax = rc.xmax.value_or(h);
  g.ymin = rc.ymin.value_or(-h);
  g.ymax = rc.ymax.value_or(h);
  g.nx = rc.nx;
  g.ny = rc.ny;
  return g;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: IoError: cannot write '" << path << "'\n";
    std::exit(1);
  }
  out << content;
}

std::string take_string(char* s) {
  std::string out(s);
  prr_string_free(s);
  return out;
}

std::vector<double> parse_list_or_range(const std::string& text) {
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    double lo, hi, step;
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3 ||
        step <= 0.0) {
      throw CLI::ValidationError("range", "expected lo:hi:step, got '" + text + "'");
    }
    for (int i = 0;; ++i) {
      const double v = lo + i * step;
      if (v > hi + step * 1e-9) break;
      out.push_back(v);
    }
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kinetostatic analysis of the planar 3-PRR parallel manipulator"};
  app.require_subcommand(1);

  RunConfig rc;
  std::string configPath, outPath, poseText, levelsText, inPath;
  std::string ratiosText = "0.25:4:0.25", lText = "auto";
  double lOverR = 2.0;
  int threads = 1;

  auto add_common = [&](CLI::App* cmd, bool needsGrid) {
    cmd->add_option("--config", configPath, "JSON run configuration file");
    cmd->add_option("--R", rc.R, "base rail inscribed-circle radius");
    cmd->add_option("--r", rc.r, "platform circumradius");
    cmd->add_option("--l", rc.l, "leg length");
    cmd->add_option_function<std::string>(
        "--delta", [&](const std::string& s) { rc.delta = parse_angle(s); },
        "platform anchor phase (e.g. 30deg, 0.5rad)");
    cmd->add_option("--out", outPath, "output file ('-' = stdout)");
    if (needsGrid) {
      cmd->add_option("--xmin", rc.xmin);
      cmd->add_option("--xmax", rc.xmax);
      cmd->add_option("--ymin", rc.ymin);
      cmd->add_option("--ymax", rc.ymax);
      cmd->add_option("--nx", rc.nx, "grid cells in x")->check(CLI::PositiveNumber);
      cmd->add_option("--ny", rc.ny, "grid cells in y")->check(CLI::PositiveNumber);
      cmd->add_option("--theta-samples", rc.thetaSamples,
                      "orientation samples per position");
      cmd->add_option("--threads", threads, "worker thread hint");
    }
  };

  auto* ik = app.add_subcommand("ik", "closed-form inverse kinematics");
  add_common(ik, false);
  ik->add_option("--pose", poseText, "pose as x,y,theta (theta with deg/rad)")
      ->required();
  ik->add_option("--mode", rc.mode, "working mode 1..8");

  auto* jac = app.add_subcommand("jac", "Jacobian matrices and conditioning");
  add_common(jac, false);
  jac->add_option("--pose", poseText, "pose as x,y,theta")->required();
  jac->add_option("--mode", rc.mode, "working mode 1..8");
  jac->add_option("--L", lText, "characteristic length or 'auto'");

  auto* iso = app.add_subcommand("isotropic", "centered isotropic configuration");
  add_common(iso, false);
  iso->add_option("--mode", rc.mode, "working mode (1 or 5)");

  auto* field = app.add_subcommand("field", "theta-optimized conditioning field");
  add_common(field, true);
  field->add_option("--mode", rc.mode, "working mode 1..8");
  field->add_option("--kind", rc.kind, "matrix kind: Abar, B or Kbar");
  field->add_option("--L", lText, "characteristic length or 'auto'");

  auto* contours = app.add_subcommand("contours", "isolines of a saved field");
  contours->add_option("--in", inPath, "field CSV produced by 'field'")->required();
  contours->add_option("--levels", levelsText, "comma-separated levels in (0,1)")
      ->required();
  contours->add_option("--out", outPath, "output file ('-' = stdout)");

  auto* workspace = app.add_subcommand("workspace", "workspace area and mask");
  add_common(workspace, true);

  auto* sweep = app.add_subcommand("sweep", "design sweep over R/r");
  sweep->add_option("--ratios", ratiosText, "R/r list or lo:hi:step range");
  sweep->add_option("--l-over-r", lOverR, "leg length over platform radius");
  sweep->add_option("--nx", rc.nx)->check(CLI::PositiveNumber);
  sweep->add_option("--ny", rc.ny)->check(CLI::PositiveNumber);
  sweep->add_option("--theta-samples", rc.thetaSamples);
  sweep->add_option("--threads", threads);
  sweep->add_option("--out", outPath, "output file ('-' = stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    CLI::App* cmd = app.get_subcommands().front();
    auto flag_given = [&](const char* name) {
      const CLI::Option* opt = cmd->get_option_no_throw(name);
      return opt != nullptr && opt->count() > 0;
    };
    // File values form the base; any flag that was given overrides them.
    if (!configPath.empty()) {
      RunConfig merged;
      load_config_file(configPath, merged);
      if (flag_given("--R")) merged.R = rc.R;
      if (flag_given("--r")) merged.r = rc.r;
      if (flag_given("--l")) merged.l = rc.l;
      if (flag_given("--delta")) merged.delta = rc.delta;
      if (flag_given("--mode")) merged.mode = rc.mode;
      if (flag_given("--kind")) merged.kind = rc.kind;
      if (flag_given("--xmin")) merged.xmin = rc.xmin;
      if (flag_given("--xmax")) merged.xmax = rc.xmax;
      if (flag_given("--ymin")) merged.ymin = rc.ymin;
      if (flag_given("--ymax")) merged.ymax = rc.ymax;
      if (flag_given("--nx")) merged.nx = rc.nx;
      if (flag_given("--ny")) merged.ny = rc.ny;
      if (flag_given("--theta-samples")) merged.thetaSamples = rc.thetaSamples;
      rc = merged;
    }
    if (flag_given("--L")) {
      rc.L = (lText == "auto") ? -1.0 : std::stod(lText);
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
  if (ik->parsed() || jac->parsed()) {
    GeometryHandle g{make_geometry(rc)};
    const PoseArg pose = parse_pose(poseText);
    char* out = nullptr;
    if (ik->parsed()) {
      check(prr_ik_json(g.geom, pose.x, pose.y, pose.theta, rc.mode, &out));
    } else {
      check(prr_jacobians_json(g.geom, pose.x, pose.y, pose.theta, rc.mode,
                               rc.L, &out));
    }
    write_output(outPath, take_string(out) + "\n");
  } else if (iso->parsed()) {
    GeometryHandle g{make_geometry(rc)};
    char* out = nullptr;
    check(prr_isotropic_json(g.geom, rc.mode, &out));
    write_output(outPath, take_string(out) + "\n");
  } else if (field->parsed()) {
    GeometryHandle g{make_geometry(rc)};
    prr_field* f = nullptr;
    check(prr_field_scan(g.geom, rc.mode, rc.kind.c_str(), make_grid(rc, g.geom),
                         rc.L, rc.thetaSamples, threads, &f));
    char* csv = nullptr;
    check(prr_field_to_csv(f, &csv));
    prr_field_destroy(f);
    write_output(outPath, take_string(csv));
  } else if (contours->parsed()) {
    std::ifstream in(inPath, std::ios::binary);
    if (!in) {
      std::cerr << "error: IoError: cannot read '" << inPath << "'\n";
      return 1;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    prr_field* f = nullptr;
    check(prr_field_from_csv(buf.str().c_str(), &f));
    std::vector<double> levels;
    try {
      levels = parse_list_or_range(levelsText);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
    char* csv = nullptr;
    check(prr_contours_csv(f, levels.data(), int(levels.size()), &csv));
    prr_field_destroy(f);
    write_output(outPath, take_string(csv));
  } else if (workspace->parsed()) {
    GeometryHandle g{make_geometry(rc)};
    double area = 0.0;
    char* mask = nullptr;
    check(prr_workspace(g.geom, make_grid(rc, g.geom), rc.thetaSamples, threads,
                        &area, &mask));
    write_output(outPath,
                 "# {\"S\":" + fmt17(area) + "}\n" + take_string(mask));
  } else if (sweep->parsed()) {
    std::vector<double> ratios;
    try {
      ratios = parse_list_or_range(ratiosText);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
    char* csv = nullptr;
    check(prr_sweep_csv(ratios.data(), int(ratios.size()), lOverR, rc.nx, rc.ny,
                        rc.thetaSamples, threads, &csv));
    write_output(outPath, take_string(csv));
  }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
