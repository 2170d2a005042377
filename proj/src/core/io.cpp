#include "io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "conditioning.hpp"
#include <json.hpp>

namespace prr::io {

namespace {

using nlohmann::json;

std::string vec_json(const Vec2& v) {
  return "[" + fmt(v.x()) + "," + fmt(v.y()) + "]";
}

std::string matrix_json(const Eigen::Matrix3d& m) {
  std::string out = "[";
  for (int i = 0; i < 3; ++i) {
    out += (i ? ",[" : "[");
    for (int j = 0; j < 3; ++j) {
      if (j) out += ",";
      out += fmt(m(i, j));
    }
    out += "]";
  }
  return out + "]";
}

std::string report_json(const Eigen::Matrix3d& m) {
  const ConditioningReport rep = conditioning_report(m);
  return "{\"sigma\":[" + fmt(rep.sigma[0]) + "," + fmt(rep.sigma[1]) + "," +
         fmt(rep.sigma[2]) + "],\"kappa\":" + fmt(rep.kappa) + "}";
}

std::string geometry_json(const Geometry& g) {
  return "{\"R\":" + fmt(g.R) + ",\"r\":" + fmt(g.r) + ",\"l\":" + fmt(g.l) +
         ",\"delta\":" + fmt(g.delta) + "}";
}

GridSpec grid_from_json(const json& j) {
  GridSpec g;
  g.xmin = j.at("xmin").get<double>();
  g.xmax = j.at("xmax").get<double>();
  g.ymin = j.at("ymin").get<double>();
  g.ymax = j.at("ymax").get<double>();
  g.nx = j.at("nx").get<int>();
  g.ny = j.at("ny").get<int>();
  return g;
}

}  // namespace

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string config_json(const Configuration& config) {
  std::string out = "{\"geometry\":" + geometry_json(config.geom);
  out += ",\"pose\":{\"x\":" + fmt(config.pose.x) + ",\"y\":" + fmt(config.pose.y) +
         ",\"theta\":" + fmt(config.pose.theta) + "}";
  out += ",\"mode\":{\"index\":" + std::to_string(config.mode.index) +
         ",\"signs\":[" + std::to_string(config.mode.signs[0]) + "," +
         std::to_string(config.mode.signs[1]) + "," +
         std::to_string(config.mode.signs[2]) + "]}";
  out += ",\"rho\":[" + fmt(config.legs[0].rho) + "," + fmt(config.legs[1].rho) +
         "," + fmt(config.legs[2].rho) + "]";
  out += ",\"legs\":[";
  for (int i = 0; i < 3; ++i) {
    const LegSolution& leg = config.legs[i];
    if (i) out += ",";
    out += "{\"rho\":" + fmt(leg.rho) + ",\"a\":" + vec_json(leg.a) +
           ",\"b\":" + vec_json(leg.b) + ",\"lvec\":" + vec_json(leg.lvec) +
           ",\"m\":" + fmt(leg.m) + ",\"k\":" + fmt(leg.k) +
           ",\"gamma\":" + fmt(leg.gamma) + ",\"eta\":" + fmt(leg.eta) + "}";
  }
  return out + "]}";
}

std::string matrices_json(const KinetostaticMatrices& mat) {
  const SingularityClass sing = classify_singularity(mat);
  std::string out = "{\"A\":" + matrix_json(mat.A) + ",\"B\":" + matrix_json(mat.B) +
                    ",\"Abar\":" + matrix_json(mat.Abar);
  out += ",\"Kbar\":";
  out += mat.kbarValid ? matrix_json(mat.Kbar) : "null";
  out += ",\"J\":";
  out += mat.J ? matrix_json(*mat.J) : "null";
  out += ",\"K\":";
  out += mat.K ? matrix_json(*mat.K) : "null";
  out += ",\"detA\":" + fmt(mat.detA) + ",\"detB\":" + fmt(mat.detB) +
         ",\"L\":" + fmt(mat.L);
  out += ",\"conditioning\":{\"A\":" + report_json(mat.A) +
         ",\"B\":" + report_json(mat.B) + ",\"Abar\":" + report_json(mat.Abar);
  if (mat.kbarValid) out += ",\"Kbar\":" + report_json(mat.Kbar);
  out += "}";
  out += ",\"singularity\":{\"type\":\"" +
         std::string(singularity_name(sing.type)) +
         "\",\"serialMargin\":" + fmt(sing.nearestSerialMargin) +
         ",\"parallelMargin\":" + fmt(sing.parallelMargin) + "}}";
  return out;
}

std::string isotropy_json(const Configuration& config, const IsotropyReport& rep) {
  std::string out = "{\"gamma\":" + fmt(rep.gamma) + ",\"L\":" + fmt(rep.L) +
                    ",\"tau\":" + fmt(rep.tau) + ",\"residuals\":[";
  for (int i = 0; i < 6; ++i) {
    if (i) out += ",";
    out += fmt(rep.residuals[i]);
  }
  out += "],\"config\":" + config_json(config) + "}";
  return out;
}

std::string field_to_csv(const ScalarField& field) {
  const GridSpec& g = field.grid;
  std::string out = "# {\"geometry\":" + geometry_json(field.geom) +
                    ",\"mode\":" + std::to_string(field.mode) + ",\"kind\":\"" +
                    matrix_kind_name(field.kind) + "\",\"L\":" + fmt(field.L) +
                    ",\"thetaSamples\":" + std::to_string(field.thetaSamples) +
                    ",\"grid\":{\"xmin\":" + fmt(g.xmin) + ",\"xmax\":" + fmt(g.xmax) +
                    ",\"ymin\":" + fmt(g.ymin) + ",\"ymax\":" + fmt(g.ymax) +
                    ",\"nx\":" + std::to_string(g.nx) +
                    ",\"ny\":" + std::to_string(g.ny) + "}}\n";
  out += "x,y,kappa,theta_star\n";
  for (int iy = 0; iy < g.ny; ++iy) {
    for (int ix = 0; ix < g.nx; ++ix) {
      const size_t idx = size_t(iy) * g.nx + ix;
      out += fmt(g.cx(ix)) + "," + fmt(g.cy(iy)) + "," + fmt(field.values[idx]) +
             "," + fmt(field.thetaStar[idx]) + "\n";
    }
  }
  return out;
}

ScalarField field_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  ScalarField field;
  bool haveMeta = false;
  std::vector<std::pair<double, double>> cells;  // kappa, theta
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      json meta;
      try {
        meta = json::parse(line.substr(1));
      } catch (const json::exception& e) {
        fail(ErrorCode::ParseError, std::string("bad field metadata: ") + e.what());
      }
      try {
        const json& geo = meta.at("geometry");
        field.geom = build_geometry(geo.at("R").get<double>(), geo.at("r").get<double>(),
                                    geo.at("l").get<double>(),
                                    geo.value("delta", 0.0));
        field.mode = meta.at("mode").get<int>();
        field.kind = matrix_kind_from_name(meta.at("kind").get<std::string>());
        field.L = meta.at("L").get<double>();
        field.thetaSamples = meta.at("thetaSamples").get<int>();
        field.grid = grid_from_json(meta.at("grid"));
        field.grid.validate();
      } catch (const json::exception& e) {
        fail(ErrorCode::ParseError, std::string("bad field metadata: ") + e.what());
      }
      haveMeta = true;
      continue;
    }
    if (line.rfind("x,y,", 0) == 0) continue;  // header row
    const char* p = line.c_str();
    char* end = nullptr;
    double vals[4];
    for (int i = 0; i < 4; ++i) {
      vals[i] = std::strtod(p, &end);
      if (end == p) fail(ErrorCode::ParseError, "bad field row: " + line);
      p = end;
      if (*p == ',') ++p;
    }
    cells.emplace_back(vals[2], vals[3]);
  }
  if (!haveMeta) {
    fail(ErrorCode::ParseError, "field CSV is missing its '#' metadata line");
  }
  const size_t expected = size_t(field.grid.nx) * field.grid.ny;
  if (cells.size() != expected) {
    fail(ErrorCode::ParseError,
         "field CSV has " + std::to_string(cells.size()) + " rows, expected " +
             std::to_string(expected));
  }
  field.values.resize(expected);
  field.thetaStar.resize(expected);
  for (size_t i = 0; i < expected; ++i) {
    field.values[i] = cells[i].first;
    field.thetaStar[i] = cells[i].second;
  }
  return field;
}

std::string contours_to_csv(const ContourSet& contours) {
  std::string out = "level,polyline_id,x,y\n";
  int id = 0;
  for (const auto& line : contours.polylines) {
    const double level = contours.levels[line.levelIndex];
    for (const Vec2& p : line.points) {
      out += fmt(level) + "," + std::to_string(id) + "," + fmt(p.x()) + "," +
             fmt(p.y()) + "\n";
    }
    ++id;
  }
  return out;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::string out = "ratio,S,kbarA1,kbarA2,kbarB,kbarK1,kbarK2\n";
  for (const SweepRow& row : rows) {
    out += fmt(row.ratio) + "," + fmt(row.S) + "," + fmt(row.kbarA1) + "," +
           fmt(row.kbarA2) + "," + fmt(row.kbarB) + "," + fmt(row.kbarK1) + "," +
           fmt(row.kbarK2) + "\n";
  }
  return out;
}

std::string mask_to_csv(const GridSpec& grid, const std::vector<std::uint8_t>& mask) {
  std::string out = "x,y,reachable\n";
  for (int iy = 0; iy < grid.ny; ++iy) {
    for (int ix = 0; ix < grid.nx; ++ix) {
      out += fmt(grid.cx(ix)) + "," + fmt(grid.cy(iy)) + "," +
             std::to_string(int(mask[size_t(iy) * grid.nx + ix])) + "\n";
    }
  }
  return out;
}

}  // namespace prr::io
