#include "linerec/studies.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "linerec/csv.hpp"
#include "linerec/forward.hpp"
#include "linerec/matching.hpp"
#include "linerec/rng.hpp"

namespace linerec {

ReconstructionResult reconstruct_from_samples(const MeasurementSet& ms,
                                              const HarmonicKernel& kernel,
                                              const ReconParams& params) {
  const int m_max = std::max(params.l_offset + 2 * params.n - 1,
                             params.m_offset + params.n - 1);
  const MomentVector b =
      extrapolated_moments(ms, kernel, m_max, params.quadrature_order);
  return reconstruct(b, kernel, params.n, params.m_offset, params.l_offset);
}

namespace {

constexpr int kDefaultCleanStudyResolutions[] = {72, 36, 18};

/// Matched view of a reconstruction against the scenario's internal
/// conductors: entry i corresponds to internal conductor i.
struct MatchedView {
  std::vector<Conductor> conductors;
  std::vector<double> position_errors;  // meters
  std::vector<double> current_errors;   // A
};

MatchedView match_to_truth(const ReconstructionResult& rec,
                           const std::vector<Conductor>& truth) {
  MatchedView view;
  if (rec.conductors.size() != truth.size())
    throw InvalidArgument("match_to_truth: conductor count mismatch");
  const auto perm = match_by_position(rec.conductors, truth);
  view.conductors.reserve(truth.size());
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const Conductor& r = rec.conductors[perm[i]];
    view.conductors.push_back(r);
    view.position_errors.push_back(distance(r.position, truth[i].position));
    view.current_errors.push_back(std::abs(r.current - truth[i].current));
  }
  return view;
}

}  // namespace

std::vector<CleanStudyRow> run_clean_study(const Scenario& s) {
  return run_clean_study(s, kDefaultCleanStudyResolutions);
}

std::vector<CleanStudyRow> run_clean_study(const Scenario& s,
                                           std::span<const int> n_list) {
  std::vector<CleanStudyRow> rows;
  if (s.recon.n == 0) return rows;
  const HarmonicKernel kernel(s.r_meas);
  for (const int n_meas : n_list) {
    CleanStudyRow row;
    row.n_meas = n_meas;
    try {
      Scenario variant = s;
      variant.n_meas = n_meas;
      const MeasurementSet ms = sample_circle(variant);
      const ReconstructionResult rec =
          reconstruct_from_samples(ms, kernel, s.recon);
      row.reconstructed = rec.conductors;
      row.cond_c = rec.cond_c;
      row.cond_f = rec.cond_f;
      row.moment_residual = rec.moment_residual;
      const MatchedView view = match_to_truth(rec, s.internal_conductors);
      for (std::size_t i = 0; i < view.conductors.size(); ++i) {
        const Conductor& truth = s.internal_conductors[i];
        const Conductor& got = view.conductors[i];
        row.dx_pct.push_back(100.0 * (got.position.x - truth.position.x) /
                             s.r_meas);
        row.dy_pct.push_back(100.0 * (got.position.y - truth.position.y) /
                             s.r_meas);
        row.currents.push_back(got.current);
      }
      row.ok = true;
    } catch (const Error& e) {
      row.ok = false;
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

MonteCarloResult run_montecarlo(const Scenario& s) {
  if (s.noise.runs < 1)
    throw InvalidArgument("run_montecarlo: noise.runs must be >= 1");
  MonteCarloResult result;
  const HarmonicKernel kernel(s.r_meas);
  const MeasurementSet clean = sample_circle(s);

  for (int run = 0; run < s.noise.runs; ++run) {
    RunRecord record;
    record.run_index = run;
    record.seed = derive_seed(s.noise.seed, static_cast<std::uint64_t>(run));
    try {
      const MeasurementSet noisy =
          add_noise(clean, NoiseSpec(s.noise.sigma_ref, record.seed));
      const ReconstructionResult rec =
          reconstruct_from_samples(noisy, kernel, s.recon);
      record.cond_c = rec.cond_c;
      record.cond_f = rec.cond_f;
      record.moment_residual = rec.moment_residual;
      const MatchedView view = match_to_truth(rec, s.internal_conductors);
      record.conductors = view.conductors;
      for (std::size_t i = 0; i < view.conductors.size(); ++i) {
        record.position_errors.push_back(view.position_errors[i] / s.r_meas);
        record.current_errors.push_back(view.current_errors[i]);
      }
      record.ok = true;
    } catch (const Error& e) {
      record.ok = false;
      record.error = e.what();
      ++result.failures;
    }
    result.runs.push_back(std::move(record));
  }

  const std::size_t n_cond = s.internal_conductors.size();
  result.summary.resize(n_cond);
  std::size_t successes = 0;
  for (const auto& record : result.runs)
    if (record.ok) ++successes;
  if (successes > 0) {
    for (std::size_t i = 0; i < n_cond; ++i) {
      double sx = 0.0, sy = 0.0;
      Phasor scur{};
      for (const auto& record : result.runs) {
        if (!record.ok) continue;
        sx += record.conductors[i].position.x;
        sy += record.conductors[i].position.y;
        scur += record.conductors[i].current;
      }
      const double inv = 1.0 / static_cast<double>(successes);
      ConductorStats stats;
      stats.mean_position = Point2(sx * inv, sy * inv);
      stats.mean_current = scur * inv;
      double pos_var = 0.0, cur_var = 0.0;
      for (const auto& record : result.runs) {
        if (!record.ok) continue;
        const auto& c = record.conductors[i];
        const double dx = c.position.x - stats.mean_position.x;
        const double dy = c.position.y - stats.mean_position.y;
        pos_var += dx * dx + dy * dy;
        cur_var += std::norm(c.current - stats.mean_current);
      }
      stats.position_rms = std::sqrt(pos_var * inv) / s.r_meas;
      stats.current_rms = std::sqrt(cur_var * inv);
      result.summary[i] = stats;
    }
  }
  return result;
}

std::vector<Table2Row> emit_table2(const Scenario& s, int m_min, int m_max) {
  if (m_min < 0 || m_max < m_min)
    throw InvalidArgument("emit_table2: bad m range");
  if (s.n_meas % 2 != 0)
    throw InvalidArgument("emit_table2: n_meas must be divisible by 2");
  const HarmonicKernel kernel(s.r_meas);
  const MeasurementSet ms = sample_circle(s);
  const MomentTriple t =
      split_moments(ms, kernel, m_max, s.recon.quadrature_order);
  const MomentVector extrapol = richardson(t.all, t.even, t.odd);
  const MomentVector exact =
      exact_moments(s.internal_conductors, kernel, m_max);

  std::vector<Table2Row> rows;
  rows.reserve(static_cast<std::size_t>(m_max - m_min) + 1);
  for (int m = m_min; m <= m_max; ++m) {
    const auto um = static_cast<std::size_t>(m);
    rows.push_back({m, t.even[um], t.odd[um], t.all[um], extrapol[um],
                    exact[um]});
  }
  return rows;
}

namespace {

void append_phasor(std::ostringstream& os, const Phasor& v) {
  os << ',' << format_double(v.real()) << ',' << format_double(v.imag());
}

// Error messages can contain commas; quote per RFC 4180.
std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (const char ch : field) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  quoted += '"';
  return quoted;
}

}  // namespace

std::string samples_csv(const MeasurementSet& ms) {
  std::ostringstream os;
  os << "index,x,y,bx_re,bx_im,by_re,by_im\n";
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const auto& s = ms.samples()[i];
    os << i << ',' << format_double(s.position.x) << ','
       << format_double(s.position.y);
    append_phasor(os, s.bx);
    append_phasor(os, s.by);
    os << '\n';
  }
  return os.str();
}

std::string moments_csv(const MomentVector& all, const MomentVector* even,
                        const MomentVector* odd, const MomentVector* extrapol,
                        const MomentVector* exact) {
  std::ostringstream os;
  os << "m,all_re,all_im";
  if (even) os << ",even_re,even_im";
  if (odd) os << ",odd_re,odd_im";
  if (extrapol) os << ",extrapol_re,extrapol_im";
  if (exact) os << ",exact_re,exact_im";
  os << '\n';
  for (std::size_t m = 0; m < all.size(); ++m) {
    os << m;
    append_phasor(os, all[m]);
    if (even) append_phasor(os, (*even)[m]);
    if (odd) append_phasor(os, (*odd)[m]);
    if (extrapol) append_phasor(os, (*extrapol)[m]);
    if (exact) append_phasor(os, (*exact)[m]);
    os << '\n';
  }
  return os.str();
}

std::string reconstruction_csv(const ReconstructionResult& r, double r_meas) {
  std::ostringstream os;
  os << "index,x,y,x_over_r,y_over_r,current_re,current_im,root_re,root_im,"
        "cond_c,cond_f,moment_residual\n";
  for (std::size_t i = 0; i < r.conductors.size(); ++i) {
    const auto& c = r.conductors[i];
    os << i << ',' << format_double(c.position.x) << ','
       << format_double(c.position.y) << ','
       << format_double(c.position.x / r_meas) << ','
       << format_double(c.position.y / r_meas);
    append_phasor(os, c.current);
    append_phasor(os, r.root_values[i]);
    os << ',' << format_double(r.cond_c) << ',' << format_double(r.cond_f)
       << ',' << format_double(r.moment_residual) << '\n';
  }
  return os.str();
}

std::string clean_study_csv(std::span<const CleanStudyRow> rows) {
  std::ostringstream os;
  os << "n_meas,ok,conductor,dx_pct,dy_pct,x,y,current_re,current_im,"
        "cond_c,cond_f,moment_residual,error\n";
  for (const auto& row : rows) {
    if (!row.ok) {
      os << row.n_meas << ",0,,,,,,,,,,," << csv_escape(row.error) << '\n';
      continue;
    }
    for (std::size_t i = 0; i < row.currents.size(); ++i) {
      os << row.n_meas << ",1," << i << ',' << format_double(row.dx_pct[i])
         << ',' << format_double(row.dy_pct[i]) << ','
         << format_double(row.reconstructed[i].position.x) << ','
         << format_double(row.reconstructed[i].position.y);
      append_phasor(os, row.currents[i]);
      os << ',' << format_double(row.cond_c) << ',' << format_double(row.cond_f)
         << ',' << format_double(row.moment_residual) << ",\n";
    }
  }
  return os.str();
}

std::string montecarlo_csv(const MonteCarloResult& mc) {
  std::ostringstream os;
  os << "run,seed,ok,conductor,x,y,current_re,current_im,pos_err_frac,"
        "current_err,cond_c,cond_f,moment_residual,error\n";
  for (const auto& record : mc.runs) {
    if (!record.ok) {
      os << record.run_index << ',' << record.seed << ",0,,,,,,,,,,,"
         << csv_escape(record.error) << '\n';
      continue;
    }
    for (std::size_t i = 0; i < record.conductors.size(); ++i) {
      const auto& c = record.conductors[i];
      os << record.run_index << ',' << record.seed << ",1," << i << ','
         << format_double(c.position.x) << ',' << format_double(c.position.y);
      append_phasor(os, c.current);
      os << ',' << format_double(record.position_errors[i]) << ','
         << format_double(record.current_errors[i]) << ','
         << format_double(record.cond_c) << ',' << format_double(record.cond_f)
         << ',' << format_double(record.moment_residual) << ",\n";
    }
  }
  return os.str();
}

std::string montecarlo_summary_csv(const MonteCarloResult& mc) {
  std::ostringstream os;
  os << "conductor,mean_x,mean_y,pos_rms_frac,mean_current_re,"
        "mean_current_im,current_rms,failures\n";
  for (std::size_t i = 0; i < mc.summary.size(); ++i) {
    const auto& st = mc.summary[i];
    os << i << ',' << format_double(st.mean_position.x) << ','
       << format_double(st.mean_position.y) << ','
       << format_double(st.position_rms);
    append_phasor(os, st.mean_current);
    os << ',' << format_double(st.current_rms) << ',' << mc.failures << '\n';
  }
  return os.str();
}

std::string table2_csv(std::span<const Table2Row> rows) {
  std::ostringstream os;
  os << "m,even_re,even_im,odd_re,odd_im,all_re,all_im,extrapol_re,"
        "extrapol_im,exact_re,exact_im\n";
  auto fixed3 = [&os](const Phasor& v) {
    os << ',' << format_fixed(v.real(), 3) << ',' << format_fixed(v.imag(), 3);
  };
  for (const auto& row : rows) {
    os << row.m;
    fixed3(row.even);
    fixed3(row.odd);
    fixed3(row.all);
    fixed3(row.extrapol);
    fixed3(row.exact);
    os << '\n';
  }
  return os.str();
}

}  // namespace linerec
