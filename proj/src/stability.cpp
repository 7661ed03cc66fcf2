#include "splitkit/stability.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>

namespace splitkit {

Complex stability_r(std::span<const Complex> z) {
  if (z.empty()) throw std::invalid_argument("stability_r: needs z0");
  Complex sum = 0.0;
  for (const Complex& zj : z) sum += zj;
  Complex denom = 1.0;
  for (std::size_t j = 1; j < z.size(); ++j) {
    const Complex factor = 1.0 - 0.5 * z[j];
    if (factor == 0.0) throw std::domain_error("stability_r: pole at zj = 2");
    denom *= factor;
  }
  return 1.0 + (1.0 + 0.5 * z[0]) * sum / denom;
}

Complex stability_r_star(Complex z0, std::span<const Complex> z_head) {
  Complex denom = 1.0;
  for (const Complex& zj : z_head) {
    const Complex factor = 1.0 - 0.5 * zj;
    if (factor == 0.0) throw std::domain_error("stability_r_star: pole at zj = 2");
    denom *= factor;
  }
  return 1.0 - 2.0 * (1.0 + 0.5 * z0) / denom;
}

bool in_wedge(Complex z, double alpha) {
  if (z == 0.0) return true;
  return std::abs(std::arg(-z)) <= alpha;
}

double sample_wedge_max(int s, double alpha, int n_samples, std::uint64_t seed, Z0Mode z0_mode) {
  if (s < 1) throw std::invalid_argument("sample_wedge_max: s >= 1 required");
  if (n_samples < 1) throw std::invalid_argument("sample_wedge_max: n_samples >= 1 required");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double log_lo = std::log(1e-3);
  const double log_hi = std::log(1e3);

  std::vector<Complex> z(static_cast<std::size_t>(s) + 1);
  double best = 0.0;
  for (int k = 0; k < n_samples; ++k) {
    if (z0_mode == Z0Mode::Zero) {
      z[0] = 0.0;
    } else {
      const double phi = 2.0 * std::numbers::pi * unit(rng);
      z[0] = Complex(std::cos(phi) - 1.0, std::sin(phi));  // |1 + z0| = 1
    }
    for (int j = 1; j <= s; ++j) {
      const double rho = std::exp(log_lo + (log_hi - log_lo) * unit(rng));
      const double ray = (unit(rng) < 0.5) ? alpha : -alpha;
      z[static_cast<std::size_t>(j)] = -rho * Complex(std::cos(ray), std::sin(ray));
    }
    best = std::max(best, std::abs(stability_r(z)));
    // Limit point zs -> -infinity along its ray; r is symmetric in z1..zs,
    // so sending the last coordinate off covers all single-coordinate limits.
    best = std::max(best, std::abs(stability_r_star(
                              z[0], std::span<const Complex>(z.data() + 1,
                                                             static_cast<std::size_t>(s) - 1))));
  }
  return best;
}

AdvDiffParams AdvDiffParams::from_mu_nu(double mu, double nu) {
  if (mu <= 0.0 || nu <= 0.0)
    throw std::invalid_argument("AdvDiffParams: mu and nu must be positive");
  AdvDiffParams p;
  p.mu = mu;
  p.nu = nu;
  p.a = 1.0;
  p.h = 1.0;
  p.d = p.a * p.h / mu;
  p.c = 0.0;
  return p;
}

std::pair<Complex, Complex> advdiff_eigenvalues(const AdvDiffParams& p, double phi,
                                                AdvDiffDiscretization disc) {
  if (p.mu <= 0.0 || p.nu <= 0.0)
    throw std::invalid_argument("advdiff_eigenvalues: mu and nu must be positive");
  const double s = std::sin(phi);
  Complex z0;
  if (disc == AdvDiffDiscretization::Central) {
    z0 = Complex(0.0, p.nu * std::sin(2.0 * phi));
  } else {
    z0 = Complex(-p.nu * (1.0 - std::cos(2.0 * phi)), p.nu * std::sin(2.0 * phi));
  }
  const Complex z1(-4.0 * (p.nu / p.mu) * s * s, 0.0);
  return {z0, z1};
}

namespace {

double cell_max_amplification(double mu, double nu, RegionCondition condition, int phi_samples) {
  const AdvDiffParams p = AdvDiffParams::from_mu_nu(mu, nu);
  double worst = 0.0;
  for (int k = 0; k < phi_samples; ++k) {
    const double phi = 2.0 * std::numbers::pi * static_cast<double>(k) / phi_samples;
    const auto [z0, z1] = advdiff_eigenvalues(p, phi, AdvDiffDiscretization::Central);
    const std::array<Complex, 1> head{z1};
    worst = std::max(worst, std::abs(stability_r_star(z0, head)));
    if (condition == RegionCondition::Full) {
      const std::array<Complex, 2> z{z0, z1};
      worst = std::max(worst, std::abs(stability_r(z)));
    }
  }
  return worst;
}

}  // namespace

RegionScan scan_stability_region(const std::vector<double>& mu_grid,
                                 const std::vector<double>& nu_grid, RegionCondition condition,
                                 int phi_samples) {
  if (phi_samples < 64)
    throw std::invalid_argument("scan_stability_region: phi_samples >= 64 required");
  RegionScan scan;
  scan.mu_grid = mu_grid;
  scan.nu_grid = nu_grid;
  scan.stable.assign(mu_grid.size() * nu_grid.size(), 0);
  for (std::size_t i = 0; i < mu_grid.size(); ++i) {
    for (std::size_t j = 0; j < nu_grid.size(); ++j) {
      const double worst = cell_max_amplification(mu_grid[i], nu_grid[j], condition, phi_samples);
      scan.stable[i * nu_grid.size() + j] = worst <= 1.0 + 1e-12 ? 1 : 0;
    }
  }
  return scan;
}

void write_region_csv(std::ostream& os, const RegionScan& scan) {
  os << "mu,nu,stable\n";
  char buf[96];
  for (std::size_t i = 0; i < scan.mu_grid.size(); ++i) {
    for (std::size_t j = 0; j < scan.nu_grid.size(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.10g,%.10g,%d\n", scan.mu_grid[i], scan.nu_grid[j],
                    scan.at(i, j) ? 1 : 0);
      os << buf;
    }
  }
}

SplitStencils upwind_equivalent_split(double a, double d, double h) {
  if (a <= 0.0 || d <= 0.0 || h <= 0.0)
    throw std::invalid_argument("upwind_equivalent_split: a, d, h must be positive");
  const double mu = a * h / d;
  if (mu > 2.0)
    throw std::domain_error("upwind_equivalent_split: Peclet bound mu = a*h/d <= 2 violated");
  SplitStencils st;
  st.advective = {a / h, -a / h, 0.0};
  const double w = (1.0 - 0.5 * mu) * d / (h * h);
  st.diffusive = {w, -2.0 * w, w};
  return st;
}

}  // namespace splitkit
