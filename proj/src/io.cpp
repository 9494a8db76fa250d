#include "catmood/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace catmood {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& v, int line) {
  try {
    size_t used = 0;
    const double d = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("line " + std::to_string(line) +
                      ": expected a number, got '" + v + "'");
  }
}

int parse_int(const std::string& v, int line) {
  try {
    size_t used = 0;
    const int n = std::stoi(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return n;
  } catch (const std::exception&) {
    throw ConfigError("line " + std::to_string(line) +
                      ": expected an integer, got '" + v + "'");
  }
}

LowFlux parse_low_flux(const std::string& v, int line) {
  if (v == "rusanov") return LowFlux::Rusanov;
  if (v == "hll") return LowFlux::Hll;
  if (v == "hllc") return LowFlux::Hllc;
  throw ConfigError("line " + std::to_string(line) +
                    ": unknown flux '" + v + "' (rusanov|hll|hllc)");
}

}  // namespace

ParsedConfig parse_config(const std::string& text) {
  ParsedConfig out;
  RunConfig& cfg = out.config;
  bool scheme_set = false;
  std::optional<std::vector<int>> cascade;
  std::optional<LowFlux> parachute;

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw);
    const auto hash = s.find('#');
    if (hash != std::string::npos) s = trim(s.substr(0, hash));
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']')
        throw ConfigError("line " + std::to_string(line) +
                          ": malformed section header");
      continue;  // sections are organizational only
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(line) +
                        ": expected key = value");
    const std::string key = trim(s.substr(0, eq));
    const std::string val = trim(s.substr(eq + 1));
    if (key.empty() || val.empty())
      throw ConfigError("line " + std::to_string(line) +
                        ": expected key = value");

    if (key == "case") {
      cfg.case_name = val;
    } else if (key == "scheme") {
      cfg.scheme = parse_scheme(val);
      scheme_set = true;
    } else if (key == "nx") {
      cfg.nx = parse_int(val, line);
      if (cfg.nx < 1)
        throw ConfigError("line " + std::to_string(line) + ": nx must be >= 1");
    } else if (key == "ny") {
      cfg.ny = parse_int(val, line);
      if (cfg.ny < 1)
        throw ConfigError("line " + std::to_string(line) + ": ny must be >= 1");
    } else if (key == "cfl") {
      cfg.cfl = parse_double(val, line);
      if (cfg.cfl <= 0.0)
        throw ConfigError("line " + std::to_string(line) + ": cfl must be > 0");
      if (cfg.cfl > 0.5)
        out.warnings.push_back("cfl=" + val +
                               " exceeds the stable guidance of 0.5");
    } else if (key == "tfinal") {
      cfg.tfinal = parse_double(val, line);
      if (cfg.tfinal <= 0.0)
        throw ConfigError("line " + std::to_string(line) +
                          ": tfinal must be > 0");
    } else if (key == "outdir") {
      cfg.outdir = val;
    } else if (key == "output_every") {
      cfg.output_every = parse_int(val, line);
    } else if (key == "cascade") {
      std::vector<int> orders;
      std::stringstream ss(val);
      std::string item;
      while (std::getline(ss, item, ','))
        orders.push_back(parse_int(trim(item), line));
      if (orders.empty() || orders.back() != 1)
        throw ConfigError("line " + std::to_string(line) +
                          ": cascade must end with the first-order entry 1");
      for (size_t i = 0; i + 1 < orders.size(); ++i)
        if (orders[i] < 2 || orders[i] % 2 != 0)
          throw ConfigError("line " + std::to_string(line) +
                            ": cascade orders must be even (got " +
                            std::to_string(orders[i]) + ")");
      cascade = orders;
    } else if (key == "parachute") {
      parachute = parse_low_flux(val, line);
    } else if (key == "limiter") {
      if (val == "minmod")
        cfg.scheme.limiter = LimiterKind::Minmod;
      else if (val == "superbee")
        cfg.scheme.limiter = LimiterKind::Superbee;
      else if (val == "vanleer")
        cfg.scheme.limiter = LimiterKind::VanLeer;
      else
        throw ConfigError("line " + std::to_string(line) +
                          ": unknown limiter '" + val + "'");
    } else if (key == "eps1") {
      cfg.detection.eps1 = parse_double(val, line);
      if (cfg.detection.eps1 <= 0.0)
        throw ConfigError("line " + std::to_string(line) + ": eps1 must be > 0");
    } else if (key == "eps2") {
      cfg.detection.eps2 = parse_double(val, line);
      if (cfg.detection.eps2 <= 0.0)
        throw ConfigError("line " + std::to_string(line) + ": eps2 must be > 0");
    } else if (key == "detection") {
      if (val == "on")
        cfg.detection_mode = DetectionMode::Normal;
      else if (val == "off" || val == "accept_all")
        cfg.detection_mode = DetectionMode::AcceptAll;
      else if (val == "reject_all")
        cfg.detection_mode = DetectionMode::RejectAll;
      else
        throw ConfigError("line " + std::to_string(line) +
                          ": detection must be on|off|accept_all|reject_all");
    } else if (key == "gamma") {
      cfg.gamma = parse_double(val, line);
      if (cfg.gamma <= 1.0)
        throw ConfigError("line " + std::to_string(line) +
                          ": gamma must be > 1");
    } else if (key == "parallel") {
      if (val == "on")
        cfg.exec = Exec::Parallel;
      else if (val == "off")
        cfg.exec = Exec::Serial;
      else
        throw ConfigError("line " + std::to_string(line) +
                          ": parallel must be on|off");
    } else if (key == "max_steps") {
      cfg.max_steps = parse_int(val, line);
    } else {
      throw ConfigError("line " + std::to_string(line) + ": unknown key '" +
                        key + "'");
    }
  }

  if (!scheme_set && (cascade || parachute)) cfg.scheme = parse_scheme("catmood6");
  if (cascade) {
    if (cfg.scheme.kind != SchemeKind::CatMood)
      throw ConfigError("cascade applies to catmood schemes only");
    cfg.scheme.cascade.cat_orders.clear();
    for (size_t i = 0; i + 1 < cascade->size(); ++i)
      cfg.scheme.cascade.cat_orders.push_back((*cascade)[i] / 2);
  }
  if (parachute) {
    cfg.scheme.cascade.parachute = *parachute;
    cfg.scheme.flux = *parachute;
  }
  return out;
}

ParsedConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

namespace {

void frame_row(std::FILE* f, double x, double y, const State& s,
               ModelKind model, double gamma, const MoodMask* mask, int i,
               int j) {
  double rho, u, v, p;
  if (model == ModelKind::Euler) {
    const Euler m{GasParams{gamma}};
    const EulerPrimitive w = m.to_primitive(s);
    rho = w.rho;
    u = w.u;
    v = w.v;
    p = w.p;
  } else {
    rho = s[0];
    u = v = p = 0.0;
  }
  if (mask)
    std::fprintf(f, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%d\n", x, y, rho, u,
                 v, p, static_cast<int>(mask->at(i, j)));
  else
    std::fprintf(f, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", x, y, rho, u, v,
                 p);
}

}  // namespace

void write_field_csv(const std::string& path, const Field& field,
                     ModelKind model, double gamma, const MoodMask* mask) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw ConfigError("cannot open '" + path + "' for writing");
  std::fprintf(f, mask ? "x,y,rho,u,v,p,mask\n" : "x,y,rho,u,v,p\n");
  const Mesh& m = field.mesh();
  for (int j = 0; j < m.ny; ++j)
    for (int i = 0; i < m.nx; ++i)
      frame_row(f, m.cx(i), m.ny > 1 ? m.cy(j) : 0.0, field.at(i, j), model,
                gamma, mask, i, j);
  std::fclose(f);
}

CsvFrame read_field_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  CsvFrame frame;
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    std::stringstream ss(line);
    std::string item;
    double vals[6];
    for (int c = 0; c < 6; ++c) {
      if (!std::getline(ss, item, ','))
        throw ConfigError("short row in '" + path + "'");
      vals[c] = std::stod(item);
    }
    frame.x.push_back(vals[0]);
    frame.y.push_back(vals[1]);
    frame.rho.push_back(vals[2]);
    frame.u.push_back(vals[3]);
    frame.v.push_back(vals[4]);
    frame.p.push_back(vals[5]);
  }
  return frame;
}

void write_vtk(const std::string& path, const Field& field, ModelKind model,
               double gamma) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw ConfigError("cannot open '" + path + "' for writing");
  const Mesh& m = field.mesh();
  std::fprintf(f, "# vtk DataFile Version 3.0\n");
  std::fprintf(f, "catmood field\n");
  std::fprintf(f, "ASCII\n");
  std::fprintf(f, "DATASET STRUCTURED_POINTS\n");
  std::fprintf(f, "DIMENSIONS %d %d 1\n", m.nx, m.ny);
  std::fprintf(f, "ORIGIN %.17g %.17g 0\n", m.cx(0), m.ny > 1 ? m.cy(0) : 0.0);
  std::fprintf(f, "SPACING %.17g %.17g 1\n", m.dx, m.ny > 1 ? m.dy : 1.0);
  std::fprintf(f, "POINT_DATA %d\n", m.nx * m.ny);
  const char* names[4] = {"rho", "u", "v", "p"};
  for (int var = 0; var < 4; ++var) {
    std::fprintf(f, "SCALARS %s double 1\nLOOKUP_TABLE default\n", names[var]);
    for (int j = 0; j < m.ny; ++j)
      for (int i = 0; i < m.nx; ++i) {
        double out = 0.0;
        const State& s = field.at(i, j);
        if (model == ModelKind::Euler) {
          const Euler em{GasParams{gamma}};
          const EulerPrimitive w = em.to_primitive(s);
          out = var == 0 ? w.rho : var == 1 ? w.u : var == 2 ? w.v : w.p;
        } else if (var == 0) {
          out = s[0];
        }
        std::fprintf(f, "%.17g\n", out);
      }
  }
  std::fclose(f);
}

std::string format_convergence_table(const std::vector<ConvergenceRow>& rows) {
  std::ostringstream out;
  out << "     N |     L1 error |  order\n";
  char buf[96];
  for (size_t r = 0; r < rows.size(); ++r) {
    if (r == 0)
      std::snprintf(buf, sizeof buf, "%6d | %12.6e |    ---\n", rows[r].n,
                    rows[r].l1_error);
    else
      std::snprintf(buf, sizeof buf, "%6d | %12.6e | %6.2f\n", rows[r].n,
                    rows[r].l1_error, rows[r].order);
    out << buf;
  }
  return out.str();
}

void write_mood_stats_csv(const std::string& path,
                          const std::vector<std::string>& labels,
                          const std::vector<StepDiag>& diags) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw ConfigError("cannot open '" + path + "' for writing");
  std::fprintf(f, "step,time,dt");
  for (const auto& l : labels) std::fprintf(f, ",pct_%s", l.c_str());
  std::fprintf(f, "\n");
  for (const auto& d : diags) {
    std::fprintf(f, "%d,%.17g,%.17g", d.step, d.t, d.dt);
    for (double p : d.pct) std::fprintf(f, ",%.6f", p);
    std::fprintf(f, "\n");
  }
  std::fclose(f);
}

}  // namespace catmood
