#ifndef CWFT_ARTIFACTS_HPP
#define CWFT_ARTIFACTS_HPP

#include <string>

#include "cwft/config.hpp"

namespace cwft {

// Writes one row per front segment:
// id,family,kind,t0,x0,t1,x1,p_left,u_left,p_right,u_right,strength,is_interface
// Numbers use the shortest round-trip decimal representation.
void write_fronts_csv(const RunResult& result, const std::string& path);

// x-t diagram: front segments colored by family, interfaces drawn bold.
void write_xt_svg(const RunResult& result, const std::string& path);

// Single simulation: scenario, perturbation, run, diagnostics, artifacts.
// Returns 0 on success.
int execute_run(const RunConfig& cfg, const std::string& out_dir);

// eps-sweep: one subdirectory per eps plus a top-level convergence report.
int execute_sweep(const RunConfig& cfg, const std::string& out_dir);

// Dispatches on cfg.sweep.
int execute(const RunConfig& cfg);

}  // namespace cwft

#endif
