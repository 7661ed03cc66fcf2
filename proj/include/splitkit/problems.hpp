#pragma once

#include <cmath>

namespace splitkit {

// Manufactured solutions for u_t = u_xx + u_yy + f on the unit square with
// time-dependent Dirichlet data taken from the exact solution.
enum class HeatVariant {
  Poly,     // u = sin(t) ((1 + 2x^2)(1 + y^2) - 1), zero on the space-time corner t = 0
  LinearT,  // u = 1 - t x^2 / 2, linear in t; trapezoidal-in-time schemes hit it exactly
};

struct HeatMMS {
  HeatVariant variant = HeatVariant::Poly;

  double exact(double x, double y, double t) const {
    if (variant == HeatVariant::Poly)
      return std::sin(t) * ((1.0 + 2.0 * x * x) * (1.0 + y * y) - 1.0);
    return 1.0 - 0.5 * t * x * x;
  }
  // f = u_t - u_xx - u_yy for the chosen exact solution.
  double forcing(double x, double y, double t) const {
    if (variant == HeatVariant::Poly)
      return std::cos(t) * ((1.0 + 2.0 * x * x) * (1.0 + y * y) - 1.0) -
             std::sin(t) * (4.0 * (1.0 + y * y) + 2.0 * (1.0 + 2.0 * x * x));
    return -0.5 * x * x + t;
  }
  double exact_dt(double x, double y, double t) const {
    if (variant == HeatVariant::Poly)
      return std::cos(t) * ((1.0 + 2.0 * x * x) * (1.0 + y * y) - 1.0);
    return -0.5 * x * x;
  }
};

// Planar wave solution of u_t = eps (u_xx + u_yy) + gamma u^2 (1 - u):
// u = 1 / (1 + exp(beta (r - r0))), r = x cos(angle) + y sin(angle) - c t,
// with beta = sqrt(2 gamma / eps) / 2 and speed c = sqrt(gamma eps / 2).
struct TravelingWaveParams {
  double epsilon = 1.0;
  double gamma = 50.0;
  double angle = 0.5235987755982988;  // pi / 6
  double r0 = 0.0;                    // chosen so the front sits inside the square at t = 0

  double beta() const { return 0.5 * std::sqrt(2.0 * gamma / epsilon); }
  double speed() const { return std::sqrt(gamma * epsilon / 2.0); }

  static TravelingWaveParams standard(double epsilon) {
    TravelingWaveParams p;
    p.epsilon = epsilon;
    p.r0 = 1.0 - p.speed();
    return p;
  }
};

double traveling_wave_exact(const TravelingWaveParams& p, double x, double y, double t);
// gamma u^2 (1 - u)
double traveling_wave_reaction(const TravelingWaveParams& p, double u);

// Two-species Schnakenberg kinetics
//   du = kappa (a - u + u^2 v),  dv = kappa (b - u^2 v)
// with diffusivities d1, d2.  Steady state: u = a + b, v = b / (a + b)^2.
struct SchnakParams {
  double d1 = 0.05;
  double d2 = 1.0;
  double kappa = 100.0;
  double a = 0.1305;
  double b = 0.7695;

  double steady_u() const { return a + b; }
  double steady_v() const { return b / ((a + b) * (a + b)); }
};

void schnakenberg_reaction(const SchnakParams& p, double u, double v, double& du, double& dv);
// Steady state plus a small Gaussian bump on u centered at (1/4, 1/6).
void schnakenberg_initial(const SchnakParams& p, double x, double y, double& u0, double& v0);

}  // namespace splitkit
