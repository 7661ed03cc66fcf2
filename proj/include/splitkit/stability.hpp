#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace splitkit {

using Complex = std::complex<double>;

// Scalar amplification factor of the corrected splitting step applied to
// u' = (z0 + z1 + ... + zs) u with z0 explicit and z1..zs implicit at
// weight 1/2:
//
//   r(z0,...,zs) = 1 + (1 + z0/2) * (z0+...+zs) / prod_{j>=1} (1 - zj/2).
//
// z has s+1 entries, z[0] first.  Throws on a pole (some zj == 2, j >= 1).
Complex stability_r(std::span<const Complex> z);

// Limit of r as the last implicit argument goes to -infinity:
//
//   r*(z0,...,z_{s-1}) = 1 - 2 (1 + z0/2) / prod_{j=1}^{s-1} (1 - zj/2).
//
// z_head holds z1..z_{s-1} and may be empty (s = 1 gives r* = -(1+z0)).
Complex stability_r_star(Complex z0, std::span<const Complex> z_head);

// Wedge W_alpha = { zeta : zeta = 0 or |arg(-zeta)| <= alpha }.
struct Wedge {
  double alpha = 0.0;
};
bool in_wedge(Complex z, double alpha);

enum class Z0Mode { Zero, UnitDiskShifted };

// Deterministic randomized search for max |r| with z1..zs on the boundary
// rays of W_alpha (moduli log-uniform in [1e-3, 1e3]) and z0 either 0 or on
// the circle |1 + z0| = 1.  Each sample also evaluates the limit point
// zs -> -inf through r*, so unbounded implicit spectra are covered.
double sample_wedge_max(int s, double alpha, int n_samples, std::uint64_t seed, Z0Mode z0_mode);

// One-dimensional advection-diffusion test problem u_t = -a u_x + d u_xx,
// reduced to the mesh Peclet number mu = a*h/d and Courant number nu = dt*a/h.
struct AdvDiffParams {
  double mu = 1.0;   // a*h/d
  double nu = 1.0;   // dt*a/h
  double a = 1.0;
  double d = 1.0;
  double h = 1.0;
  double c = 0.0;    // nonpositive reaction coefficient, enters as z2 <= 0

  static AdvDiffParams from_mu_nu(double mu, double nu);
};

enum class AdvDiffDiscretization { Central, Upwind };

// Fourier symbols (z0, z1) of the explicit advection part and the implicit
// diffusion part at angle phi.  Central advection gives z0 = i nu sin(2 phi);
// first-order upwind gives z0 = -nu (1 - cos 2 phi) + i nu sin(2 phi), which
// lies on the circle of radius nu touching the imaginary axis.  Diffusion is
// second-order central either way: z1 = -4 (nu/mu) sin^2(phi).
std::pair<Complex, Complex> advdiff_eigenvalues(const AdvDiffParams& p, double phi,
                                                AdvDiffDiscretization disc);

enum class RegionCondition { Full, Star };

struct RegionScan {
  std::vector<double> mu_grid;
  std::vector<double> nu_grid;
  // stable[i*nu_grid.size() + j] for (mu_grid[i], nu_grid[j])
  std::vector<std::uint8_t> stable;

  bool at(std::size_t i, std::size_t j) const { return stable[i * nu_grid.size() + j] != 0; }
};

// For every (mu, nu) cell, maximizes the amplification modulus over phi in
// [0, 2*pi) with phi_samples uniform samples and marks the cell stable when
// the max is <= 1 + 1e-12.  Condition Star tests |r*| only (spectra with the
// reaction coefficient unbounded below); Full additionally tests |r| with the
// reaction argument at zero, which by convexity in z2 <= 0 bounds the worst
// case over all admissible reaction coefficients.
RegionScan scan_stability_region(const std::vector<double>& mu_grid,
                                 const std::vector<double>& nu_grid, RegionCondition condition,
                                 int phi_samples);

// CSV rows "mu,nu,stable", mu-major, stable in {0,1}.
void write_region_csv(std::ostream& os, const RegionScan& scan);

// Splits -a u_x + d u_xx so that first-order upwind advection plus a reduced
// diffusion block reproduces central advection plus full diffusion exactly:
//
//   A0 = (a/h)   [1, -1, 0]          (upwind advection + mu/2 of diffusion)
//   A1 = (1-mu/2)(d/h^2) [1, -2, 1]  (remaining diffusion)
//
// Stencils are [left, center, right] coefficients.  Requires mu = a*h/d <= 2,
// otherwise A1 loses definiteness and the split is rejected.
struct SplitStencils {
  std::array<double, 3> advective;
  std::array<double, 3> diffusive;
};
SplitStencils upwind_equivalent_split(double a, double d, double h);

}  // namespace splitkit
