#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>

#include "splitkit/femdd.hpp"
#include "splitkit/harness.hpp"
#include "splitkit/stability.hpp"

namespace {

double parse_ratio(const std::string& tok) {
  const auto pos = tok.find('/');
  if (pos == std::string::npos) return std::stod(tok);
  return std::stod(tok.substr(0, pos)) / std::stod(tok.substr(pos + 1));
}

std::vector<double> parse_ratio_list(const std::vector<std::string>& toks) {
  std::vector<double> out;
  out.reserve(toks.size());
  for (const auto& t : toks) out.push_back(parse_ratio(t));
  return out;
}

// "a:b:n" -> n points from a to b inclusive
std::vector<double> parse_linspace(const std::string& spec) {
  std::istringstream ss(spec);
  std::string a, b, n;
  if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, n))
    throw CLI::ValidationError("grid spec must look like a:b:n");
  const double lo = std::stod(a);
  const double hi = std::stod(b);
  const int count = std::stoi(n);
  if (count < 2 || hi <= lo) throw CLI::ValidationError("grid spec needs b > a and n >= 2");
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (count - 1);
  return out;
}

struct OutFile {
  std::ofstream file;
  std::ostream& stream(const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"splitting time-integrator toolkit"};
  app.require_subcommand(1);
  app.set_config("--config");

  // stability region/sharpness
  auto* stability = app.add_subcommand("stability", "amplification-factor analysis");
  stability->require_subcommand(1);

  std::string region_condition = "rstar";
  std::string region_mu = "0.01:10:200";
  std::string region_nu = "0.01:5:200";
  int region_phi = 256;
  std::string region_out;
  auto* region = stability->add_subcommand("region", "(mu, nu) stability mask");
  region->add_option("--condition", region_condition, "r (full) or rstar")
      ->check(CLI::IsMember({"r", "rstar"}));
  region->add_option("--mu", region_mu, "mu grid a:b:n");
  region->add_option("--nu", region_nu, "nu grid a:b:n");
  region->add_option("--phi-samples", region_phi, "Fourier angles per cell (>= 64)");
  region->add_option("--out", region_out, "output CSV (default stdout)");

  int sharp_s = 2;
  double sharp_alpha = 0.0;
  int sharp_samples = 200000;
  std::uint64_t sharp_seed = 1;
  std::string sharp_z0 = "zero";
  auto* sharpness = stability->add_subcommand("sharpness", "randomized wedge bound search");
  sharpness->add_option("--s", sharp_s, "number of implicit parts")->required();
  sharpness->add_option("--alpha", sharp_alpha, "wedge half-angle (radians)")->required();
  sharpness->add_option("--samples", sharp_samples, "sample count");
  sharpness->add_option("--seed", sharp_seed, "PRNG seed");
  sharpness->add_option("--z0-mode", sharp_z0, "zero or unit_disk_shifted")
      ->check(CLI::IsMember({"zero", "unit_disk_shifted"}));

  // converge heat/wave/schnak
  auto* converge = app.add_subcommand("converge", "convergence studies");
  converge->require_subcommand(1);

  int heat_table = 2;
  std::string heat_out;
  auto* heat = converge->add_subcommand("heat", "manufactured heat tables");
  heat->add_option("--table", heat_table, "1 local L2, 2 global L2, 3 global max")
      ->check(CLI::IsMember({1, 2, 3}));
  heat->add_option("--out", heat_out, "output CSV (default stdout)");

  double wave_eps = 1.0;
  std::vector<std::string> wave_h = {"1/25", "1/50", "1/100"};
  std::string wave_out;
  auto* wave = converge->add_subcommand("wave", "traveling-wave study");
  wave->add_option("--epsilon", wave_eps, "diffusion coefficient, 1 or 0.02")
      ->check(CLI::IsMember({1.0, 0.02}));
  wave->add_option("--h-list", wave_h, "mesh widths, e.g. 1/25,1/50,1/100")->delimiter(',');
  wave->add_option("--out", wave_out, "output CSV (default stdout)");

  int schnak_nsub = 32;
  double schnak_t = 0.5;
  std::vector<std::string> schnak_dt = {"1/100", "1/200", "1/400"};
  std::string schnak_out;
  auto* schnak = converge->add_subcommand("schnak", "Schnakenberg self-convergence study");
  schnak->add_option("--nsub", schnak_nsub, "hexagon subdivisions per edge");
  schnak->add_option("--t", schnak_t, "output time")->check(CLI::IsMember({0.5, 1.0}));
  schnak->add_option("--dt-list", schnak_dt, "time steps, e.g. 1/100,1/200,1/400")
      ->delimiter(',');
  schnak->add_option("--out", schnak_out, "output CSV (default stdout)");

  // snapshot schnak
  auto* snapshot = app.add_subcommand("snapshot", "field snapshots");
  snapshot->require_subcommand(1);
  int snap_nsub = 64;
  double snap_t = 0.5;
  std::string snap_dt = "1/400";
  std::string snap_out;
  auto* snap = snapshot->add_subcommand("schnak", "Schnakenberg u,v field at time t");
  snap->add_option("--nsub", snap_nsub, "hexagon subdivisions per edge");
  snap->add_option("--t", snap_t, "output time");
  snap->add_option("--dt", snap_dt, "time step");
  snap->add_option("--out", snap_out, "output CSV (default stdout)");

  // mesh hex
  auto* mesh_cmd = app.add_subcommand("mesh", "mesh export");
  mesh_cmd->require_subcommand(1);
  int mesh_nsub = 16;
  std::string mesh_out;
  auto* mesh_hex = mesh_cmd->add_subcommand("hex", "triangulated hexagon as plain text");
  mesh_hex->add_option("--nsub", mesh_nsub, "subdivisions per edge");
  mesh_hex->add_option("--out", mesh_out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (region->parsed()) {
      const auto cond = region_condition == "r" ? splitkit::RegionCondition::Full
                                                : splitkit::RegionCondition::Star;
      const auto scan = splitkit::scan_stability_region(parse_linspace(region_mu),
                                                        parse_linspace(region_nu), cond,
                                                        region_phi);
      OutFile out;
      splitkit::write_region_csv(out.stream(region_out), scan);
    } else if (sharpness->parsed()) {
      const auto mode = sharp_z0 == "zero" ? splitkit::Z0Mode::Zero
                                           : splitkit::Z0Mode::UnitDiskShifted;
      const double best =
          splitkit::sample_wedge_max(sharp_s, sharp_alpha, sharp_samples, sharp_seed, mode);
      std::printf("s=%d alpha=%.10g z0=%s samples=%d seed=%llu\n", sharp_s, sharp_alpha,
                  sharp_z0.c_str(), sharp_samples,
                  static_cast<unsigned long long>(sharp_seed));
      std::printf("max |r| = %.15g\n", best);
      std::printf("bound |r| <= 1+1e-12: %s\n", best <= 1.0 + 1e-12 ? "holds" : "violated");
    } else if (heat->parsed()) {
      const auto records = splitkit::run_heat_table(heat_table);
      OutFile out;
      splitkit::write_convergence_csv(out.stream(heat_out), records);
    } else if (wave->parsed()) {
      const auto records = splitkit::run_wave_study(wave_eps, parse_ratio_list(wave_h));
      OutFile out;
      splitkit::write_convergence_csv(out.stream(wave_out), records);
    } else if (schnak->parsed()) {
      const auto records =
          splitkit::run_schnak_study(schnak_nsub, schnak_t, parse_ratio_list(schnak_dt));
      OutFile out;
      splitkit::write_convergence_csv(out.stream(schnak_out), records);
    } else if (snap->parsed()) {
      const auto result =
          splitkit::run_schnak_snapshot(snap_nsub, snap_t, parse_ratio(snap_dt));
      OutFile out;
      splitkit::write_snapshot_csv(out.stream(snap_out), result);
    } else if (mesh_hex->parsed()) {
      OutFile out;
      splitkit::write_mesh(out.stream(mesh_out), splitkit::triangulate_hexagon(mesh_nsub));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
