#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "catmood/io.hpp"

namespace fs = std::filesystem;
using namespace catmood;

namespace {

void apply_overrides(RunConfig& cfg, const std::string& case_name,
                     const std::string& scheme, int nx, int ny, double cfl,
                     double tfinal, const std::string& outdir,
                     const std::string& cascade, const std::string& parachute,
                     const std::string& limiter, const std::string& detection,
                     bool serial) {
  std::ostringstream text;
  if (!case_name.empty()) text << "case = " << case_name << "\n";
  if (!scheme.empty()) text << "scheme = " << scheme << "\n";
  if (nx > 0) text << "nx = " << nx << "\n";
  if (ny > 0) text << "ny = " << ny << "\n";
  if (cfl > 0) text << "cfl = " << cfl << "\n";
  if (tfinal > 0) text << "tfinal = " << tfinal << "\n";
  if (!outdir.empty()) text << "outdir = " << outdir << "\n";
  if (!cascade.empty()) text << "cascade = " << cascade << "\n";
  if (!parachute.empty()) text << "parachute = " << parachute << "\n";
  if (!limiter.empty()) text << "limiter = " << limiter << "\n";
  if (!detection.empty()) text << "detection = " << detection << "\n";
  if (serial) text << "parallel = off\n";

  // Round-trip the overrides through the config parser so validation and
  // warnings are uniform.
  ParsedConfig overrides = parse_config(text.str());
  for (const auto& w : overrides.warnings) std::cerr << "warning: " << w << "\n";
  const RunConfig& o = overrides.config;
  if (!case_name.empty()) cfg.case_name = o.case_name;
  if (!scheme.empty()) cfg.scheme = o.scheme;
  if (nx > 0) cfg.nx = o.nx;
  if (ny > 0) cfg.ny = o.ny;
  if (cfl > 0) cfg.cfl = o.cfl;
  if (tfinal > 0) cfg.tfinal = o.tfinal;
  if (!outdir.empty()) cfg.outdir = o.outdir;
  if (!cascade.empty()) cfg.scheme.cascade = o.scheme.cascade;
  if (!parachute.empty()) {
    cfg.scheme.cascade.parachute = o.scheme.cascade.parachute;
    cfg.scheme.flux = o.scheme.flux;
  }
  if (!limiter.empty()) cfg.scheme.limiter = o.scheme.limiter;
  if (!detection.empty()) cfg.detection_mode = o.detection_mode;
  if (serial) cfg.exec = Exec::Serial;
}

int run_solve(const RunConfig& cfg) {
  if (!cfg.outdir.empty()) fs::create_directories(cfg.outdir);
  FrameSink sink;
  if (!cfg.outdir.empty() && cfg.output_every > 0) {
    const std::string dir = cfg.outdir;
    const ModelKind model = make_case(cfg.case_name, cfg.gamma).model;
    const double gamma = make_case(cfg.case_name, cfg.gamma).gamma;
    sink = [dir, model, gamma](const Field& f, int step, double) {
      char name[64];
      std::snprintf(name, sizeof name, "frame_%06d.csv", step);
      write_field_csv(dir + "/" + name, f, model, gamma);
    };
  }

  RunResult result = run(cfg, sink);
  std::printf("case=%s scheme=%s grid=%dx%d steps=%d t=%.6g wall=%.2fs\n",
              cfg.case_name.c_str(), scheme_label(cfg.scheme).c_str(), cfg.nx,
              result.field.mesh().ny, result.steps, result.t_end,
              result.wall_seconds);
  std::printf("conservation residual (max, relative) = %.3e\n",
              result.max_conservation_residual);
  if (!result.diags.empty() && !result.diags.back().pct.empty()) {
    double avg = 0.0;
    for (const auto& d : result.diags) avg += d.pct[0];
    avg /= result.diags.size();
    std::printf("average %s share = %.2f%%\n", result.stat_labels[0].c_str(),
                avg);
  }
  if (!cfg.outdir.empty()) {
    write_field_csv(cfg.outdir + "/final.csv", result.field, result.model,
                    result.gamma_used);
    write_vtk(cfg.outdir + "/final.vtk", result.field, result.model,
              result.gamma_used);
    if (!result.stat_labels.empty())
      write_mood_stats_csv(cfg.outdir + "/mood_stats.csv", result.stat_labels,
                           result.diags);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"structured-grid solver for hyperbolic conservation laws"};
  app.require_subcommand(1);

  std::string config_path, case_name, scheme, outdir, cascade, parachute,
      limiter, detection, resolutions;
  int nx = -1, ny = -1;
  double cfl = -1, tfinal = -1;
  bool serial = false;

  CLI::App* solve = app.add_subcommand("solve", "march one case to t_final");
  solve->add_option("--config", config_path, "config file (key = value)");
  solve->add_option("--case", case_name);
  solve->add_option("--scheme", scheme);
  solve->add_option("--nx", nx);
  solve->add_option("--ny", ny);
  solve->add_option("--cfl", cfl);
  solve->add_option("--tfinal", tfinal);
  solve->add_option("--outdir", outdir);
  solve->add_option("--cascade", cascade, "e.g. 6,4,2,1");
  solve->add_option("--parachute", parachute, "rusanov|hll|hllc");
  solve->add_option("--limiter", limiter, "minmod|superbee|vanleer");
  solve->add_option("--detection", detection, "on|off|accept_all|reject_all");
  solve->add_flag("--serial", serial, "disable the OpenMP sweeps");

  CLI::App* conv = app.add_subcommand("converge", "grid-refinement study");
  conv->add_option("--case", case_name)->required();
  conv->add_option("--scheme", scheme)->required();
  conv->add_option("--resolutions", resolutions, "e.g. 50,100,200")->required();
  conv->add_option("--cfl", cfl);
  conv->add_option("--tfinal", tfinal);
  conv->add_option("--outdir", outdir);
  conv->add_flag("--serial", serial);

  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig cfg;
    if (!config_path.empty()) {
      ParsedConfig parsed = parse_config_file(config_path);
      for (const auto& w : parsed.warnings)
        std::cerr << "warning: " << w << "\n";
      cfg = parsed.config;
    }
    apply_overrides(cfg, case_name, scheme, nx, ny, cfl, tfinal, outdir,
                    cascade, parachute, limiter, detection, serial);

    if (solve->parsed()) return run_solve(cfg);

    // converge
    std::vector<int> res;
    std::stringstream ss(resolutions);
    std::string item;
    while (std::getline(ss, item, ',')) res.push_back(std::stoi(item));
    const auto rows = convergence_study(cfg, res);
    const std::string table = format_convergence_table(rows);
    std::printf("%s", table.c_str());
    if (!cfg.outdir.empty()) {
      fs::create_directories(cfg.outdir);
      std::FILE* f = std::fopen((cfg.outdir + "/convergence.txt").c_str(), "w");
      if (f) {
        std::fputs(table.c_str(), f);
        std::fclose(f);
      }
    }
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const SolverFatal& e) {
    std::cerr << "solver fatal: " << e.what() << "\n";
    return 3;
  }
}
