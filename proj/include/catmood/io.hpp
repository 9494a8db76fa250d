#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catmood/driver.hpp"
#include "catmood/mood.hpp"

namespace catmood {

struct ParsedConfig {
  RunConfig config;
  std::vector<std::string> warnings;
};

// Flat key = value text, '#' comments, optional [section] headers.
// Unknown keys and out-of-range values raise ConfigError with the line.
ParsedConfig parse_config(const std::string& text);
ParsedConfig parse_config_file(const std::string& path);

// Primitive-variable frame, header `x,y,rho,u,v,p[,mask]`, row-major by j
// then i. Scalar models store u in the rho column, zeros elsewhere.
void write_field_csv(const std::string& path, const Field& field,
                     ModelKind model, double gamma,
                     const MoodMask* mask = nullptr);

struct CsvFrame {
  std::vector<double> x, y, rho, u, v, p;
};
CsvFrame read_field_csv(const std::string& path);

// Legacy STRUCTURED_POINTS file with one scalar field per variable.
void write_vtk(const std::string& path, const Field& field, ModelKind model,
               double gamma);

std::string format_convergence_table(const std::vector<ConvergenceRow>& rows);

// Per-step cascade statistics: step, time, dt, pct per scheme.
void write_mood_stats_csv(const std::string& path,
                          const std::vector<std::string>& labels,
                          const std::vector<StepDiag>& diags);

}  // namespace catmood
