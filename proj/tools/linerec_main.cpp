// Command-line frontend: scenario-driven simulation, moment evaluation,
// reconstruction, the clean-data and Monte Carlo studies, the five-column
// moment table and the silent-source checks. All outputs are CSV; errors
// leave a single machine-readable JSON line on stderr.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "linerec/csv.hpp"
#include "linerec/forward.hpp"
#include "linerec/moments.hpp"
#include "linerec/prony.hpp"
#include "linerec/rng.hpp"
#include "linerec/scenario_io.hpp"
#include "linerec/silent.hpp"
#include "linerec/studies.hpp"

namespace {

struct GlobalOptions {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed_override;
  std::optional<int> quad_order_override;
  bool with_noise = false;
  int run_index = 0;
  std::vector<int> n_list = {72, 36, 18};
  int m_min = 1;
  int m_max = 6;
  std::string summary_out;
};

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw linerec::IoError("cannot open output file: " + out_path);
  out << text;
}

linerec::Scenario load_config(const GlobalOptions& opt) {
  if (opt.config.empty())
    throw linerec::IoError("missing --config <scenario.json>");
  linerec::Scenario s = linerec::load_scenario(opt.config);
  if (opt.seed_override) s.noise.seed = *opt.seed_override;
  if (opt.quad_order_override)
    s.recon.quadrature_order = *opt.quad_order_override;
  const auto report = linerec::validate_scenario(s);
  if (!report.ok()) {
    std::string joined;
    for (const auto& v : report.violations) {
      if (!joined.empty()) joined += "; ";
      joined += v;
    }
    throw linerec::InvalidArgument("invalid scenario: " + joined);
  }
  return s;
}

linerec::MeasurementSet scenario_samples(const linerec::Scenario& s,
                                         const GlobalOptions& opt) {
  linerec::MeasurementSet ms = linerec::sample_circle(s);
  if (opt.with_noise && s.noise.sigma_ref > 0.0) {
    const std::uint64_t seed = linerec::derive_seed(
        s.noise.seed, static_cast<std::uint64_t>(opt.run_index));
    ms = linerec::add_noise(ms, linerec::NoiseSpec(s.noise.sigma_ref, seed));
  }
  return ms;
}

int cmd_simulate(const GlobalOptions& opt) {
  const auto s = load_config(opt);
  write_output(opt.out, linerec::samples_csv(scenario_samples(s, opt)));
  return 0;
}

int cmd_moments(const GlobalOptions& opt) {
  const auto s = load_config(opt);
  const linerec::HarmonicKernel kernel(s.r_meas);
  const auto ms = scenario_samples(s, opt);
  const int m_max = opt.m_max;
  const auto exact =
      linerec::exact_moments(s.internal_conductors, kernel, m_max);
  if (ms.size() % 2 == 0) {
    const auto t = linerec::split_moments(ms, kernel, m_max,
                                          s.recon.quadrature_order);
    const auto extrapol = linerec::richardson(t.all, t.even, t.odd);
    write_output(opt.out, linerec::moments_csv(t.all, &t.even, &t.odd,
                                               &extrapol, &exact));
  } else {
    const auto all =
        linerec::contour_moments(ms, kernel, m_max, s.recon.quadrature_order);
    write_output(opt.out,
                 linerec::moments_csv(all, nullptr, nullptr, nullptr, &exact));
  }
  return 0;
}

int cmd_reconstruct(const GlobalOptions& opt) {
  const auto s = load_config(opt);
  const linerec::HarmonicKernel kernel(s.r_meas);
  const auto ms = scenario_samples(s, opt);
  const auto result = linerec::reconstruct_from_samples(ms, kernel, s.recon);
  write_output(opt.out, linerec::reconstruction_csv(result, s.r_meas));
  return 0;
}

int cmd_clean_study(const GlobalOptions& opt) {
  const auto s = load_config(opt);
  const auto rows = linerec::run_clean_study(s, opt.n_list);
  write_output(opt.out, linerec::clean_study_csv(rows));
  return 0;
}

int cmd_montecarlo(const GlobalOptions& opt) {
  const auto s = load_config(opt);
  const auto mc = linerec::run_montecarlo(s);
  write_output(opt.out, linerec::montecarlo_csv(mc));
  if (!opt.summary_out.empty())
    write_output(opt.summary_out, linerec::montecarlo_summary_csv(mc));
  return 0;
}

int cmd_table2(const GlobalOptions& opt) {
  const auto s = load_config(opt);
  const auto rows = linerec::emit_table2(s, opt.m_min, opt.m_max);
  write_output(opt.out, linerec::table2_csv(rows));
  return 0;
}

int cmd_silent_check(const GlobalOptions& opt) {
  // Self-contained appendix scenes: a zero-net-current coaxial profile and
  // an image-method surface canceller, each with its negative control.
  std::ostringstream os;
  os << "check,m,magnitude,scale,tolerance,pass,expected_pass\n";
  bool as_expected = true;
  auto emit = [&os, &as_expected](const std::string& name,
                                  const linerec::SilentReport& report,
                                  bool expected_pass) {
    for (const auto& row : report.rows) {
      os << name << ',' << row.m << ',' << linerec::format_double(row.magnitude)
         << ',' << linerec::format_double(row.scale) << ','
         << linerec::format_double(row.tolerance) << ',' << (row.pass ? 1 : 0)
         << ',' << (expected_pass ? 1 : 0) << '\n';
      if (row.pass != expected_pass) as_expected = false;
    }
  };

  const double a0 = 0.3;
  const linerec::Point2 center(0.2, 0.1);
  linerec::CoaxialProfile profile{
      center, a0, [a0](double rho) { return 1.0 - 2.0 * rho * rho / (a0 * a0); }};
  const linerec::HarmonicKernel kernel(1.0);
  emit("coaxial", linerec::verify_silent_moments(profile, kernel, 6), true);

  // Negative control: same profile without the zero-net-current property.
  linerec::CoaxialProfile biased{center, a0, [](double) { return 1.0; }};
  emit("coaxial_negative", linerec::verify_silent_moments(biased, kernel, 6),
       false);

  const linerec::Conductor inner(
      linerec::Point2(center.x + 0.3 * a0, center.y), linerec::Phasor(1.0, 0.0));
  const auto canceller = linerec::build_canceller(inner, center, a0, 3600);
  const linerec::HarmonicKernel ring_kernel(3.0 * a0);
  emit("canceller", linerec::verify_silent_moments(canceller, ring_kernel, 6),
       true);

  // Negative control: the inner conductor alone radiates.
  {
    std::vector<linerec::Conductor> bare{inner};
    const auto ms =
        linerec::sample_circle(bare, 3.0 * a0, 2048, center);
    const auto b = linerec::contour_moments(ms, ring_kernel, 6, 8);
    linerec::SilentReport report;
    const linerec::Phasor f_inner = ring_kernel.eval(inner.position);
    linerec::Phasor term = inner.current;
    for (int m = 0; m <= 6; ++m) {
      const double scale = std::abs(term);
      const double mag = std::abs(b[static_cast<std::size_t>(m)]);
      report.rows.push_back({m, mag, scale, 1e-6, mag <= 1e-6 * scale});
      term *= f_inner;
    }
    emit("canceller_negative", report, false);
  }

  write_output(opt.out, os.str());
  return as_expected ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Line-current reconstruction from contour field data"};
  app.require_subcommand(1);
  GlobalOptions opt;

  app.add_option("--config", opt.config, "Scenario JSON file");
  app.add_option("--out", opt.out, "Output CSV path (default stdout)");
  std::uint64_t seed_value = 0;
  auto* seed_flag =
      app.add_option("--seed", seed_value, "Override the scenario seed");
  int quad_value = 0;
  auto* quad_flag = app.add_option("--quad-order", quad_value,
                                   "Override the quadrature order");

  app.fallthrough();

  auto* simulate = app.add_subcommand("simulate", "Emit field samples");
  simulate->add_flag("--noise", opt.with_noise, "Apply the scenario noise");
  simulate->add_option("--run-index", opt.run_index,
                       "Noise stream index (default 0)");

  auto* moments = app.add_subcommand("moments", "Emit the moment table");
  moments->add_flag("--noise", opt.with_noise, "Apply the scenario noise");
  moments->add_option("--run-index", opt.run_index, "Noise stream index");
  moments->add_option("--m-max", opt.m_max, "Highest moment order");

  auto* reconstruct =
      app.add_subcommand("reconstruct", "Run the inversion pipeline once");
  reconstruct->add_flag("--noise", opt.with_noise, "Apply the scenario noise");
  reconstruct->add_option("--run-index", opt.run_index, "Noise stream index");

  auto* clean = app.add_subcommand("clean-study",
                                   "Clean-data study over several n_meas");
  clean->add_option("--n-list", opt.n_list, "Resolutions (default 72 36 18)");

  auto* mc = app.add_subcommand("montecarlo", "Seeded noise study");
  mc->add_option("--summary-out", opt.summary_out,
                 "Also write the per-conductor summary CSV");

  auto* table2 =
      app.add_subcommand("table2", "Five-column moment comparison table");
  table2->add_option("--m-min", opt.m_min, "Lowest moment order");
  table2->add_option("--m-max", opt.m_max, "Highest moment order");

  app.add_subcommand("silent-check", "Appendix silent-source verification");

  CLI11_PARSE(app, argc, argv);

  if (*seed_flag) opt.seed_override = seed_value;
  if (*quad_flag) opt.quad_order_override = quad_value;

  try {
    if (simulate->parsed()) return cmd_simulate(opt);
    if (moments->parsed()) return cmd_moments(opt);
    if (reconstruct->parsed()) return cmd_reconstruct(opt);
    if (clean->parsed()) return cmd_clean_study(opt);
    if (mc->parsed()) return cmd_montecarlo(opt);
    if (table2->parsed()) return cmd_table2(opt);
    return cmd_silent_check(opt);
  } catch (const linerec::Error& e) {
    nlohmann::json err{{"error", e.what()}};
    std::cerr << err.dump() << '\n';
    return 1;
  } catch (const std::exception& e) {
    nlohmann::json err{{"error", e.what()}};
    std::cerr << err.dump() << '\n';
    return 1;
  }
}
