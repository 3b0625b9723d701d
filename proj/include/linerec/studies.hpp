#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "linerec/kernel.hpp"
#include "linerec/moments.hpp"
#include "linerec/prony.hpp"
#include "linerec/types.hpp"

namespace linerec {

/// The standard pipeline applied to one measurement set: full/even/odd
/// moments up to l_offset + 2n - 1, Richardson extrapolation, inversion.
ReconstructionResult reconstruct_from_samples(const MeasurementSet& ms,
                                              const HarmonicKernel& kernel,
                                              const ReconParams& params);

struct CleanStudyRow {
  int n_meas = 0;
  bool ok = false;
  std::string error;
  /// Matched against the scenario's internal conductors, index-aligned with
  /// them; displacements as percent of r_meas.
  std::vector<double> dx_pct;
  std::vector<double> dy_pct;
  std::vector<Phasor> currents;
  std::vector<Conductor> reconstructed;  // canonical order
  double cond_c = 0.0;
  double cond_f = 0.0;
  double moment_residual = 0.0;
};

/// Clean-data study over a list of contour resolutions (default 72, 36, 18).
/// A failing resolution reports its error without aborting other rows; a
/// scenario with recon.n == 0 yields an empty table.
std::vector<CleanStudyRow> run_clean_study(const Scenario& s);
std::vector<CleanStudyRow> run_clean_study(const Scenario& s,
                                           std::span<const int> n_list);

struct RunRecord {
  int run_index = 0;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string error;
  std::vector<Conductor> conductors;      // matched to scenario internals
  std::vector<double> position_errors;    // fraction of r_meas, per conductor
  std::vector<double> current_errors;     // A, per conductor
  double cond_c = 0.0;
  double cond_f = 0.0;
  double moment_residual = 0.0;
};

struct ConductorStats {
  Point2 mean_position;
  double position_rms = 0.0;  // rms spread about the mean, in r_meas units
  Phasor mean_current;
  double current_rms = 0.0;   // A
};

struct MonteCarloResult {
  std::vector<RunRecord> runs;
  std::vector<ConductorStats> summary;  // per scenario-internal conductor
  int failures = 0;
};

/// Seeded Monte Carlo noise study: run i perturbs the clean samples with the
/// stream derive_seed(master, i). Failed runs are recorded, never dropped;
/// runs.size() always equals the configured run count.
MonteCarloResult run_montecarlo(const Scenario& s);

struct Table2Row {
  int m = 0;
  Phasor even, odd, all, extrapol, exact;
};

/// The five-column moment comparison table (half-set columns, full set,
/// extrapolation, and the direct left-hand-side values). Requires an even
/// n_meas.
std::vector<Table2Row> emit_table2(const Scenario& s, int m_min = 1,
                                   int m_max = 6);

// Deterministic CSV renderings (byte-stable given identical inputs).
std::string samples_csv(const MeasurementSet& ms);
std::string moments_csv(const MomentVector& all, const MomentVector* even,
                        const MomentVector* odd, const MomentVector* extrapol,
                        const MomentVector* exact);
std::string reconstruction_csv(const ReconstructionResult& r, double r_meas);
std::string clean_study_csv(std::span<const CleanStudyRow> rows);
std::string montecarlo_csv(const MonteCarloResult& mc);
std::string montecarlo_summary_csv(const MonteCarloResult& mc);
std::string table2_csv(std::span<const Table2Row> rows);

}  // namespace linerec
