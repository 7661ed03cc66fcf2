#include "splitkit/problems.hpp"

namespace splitkit {

double traveling_wave_exact(const TravelingWaveParams& p, double x, double y, double t) {
  const double r = x * std::cos(p.angle) + y * std::sin(p.angle) - p.speed() * t;
  return 1.0 / (1.0 + std::exp(p.beta() * (r - p.r0)));
}

double traveling_wave_reaction(const TravelingWaveParams& p, double u) {
  return p.gamma * u * u * (1.0 - u);
}

void schnakenberg_reaction(const SchnakParams& p, double u, double v, double& du, double& dv) {
  const double uuv = u * u * v;
  du = p.kappa * (p.a - u + uuv);
  dv = p.kappa * (p.b - uuv);
}

void schnakenberg_initial(const SchnakParams& p, double x, double y, double& u0, double& v0) {
  const double dx = x - 0.25;
  const double dy = y - 1.0 / 6.0;
  u0 = p.steady_u() + 1e-3 * std::exp(-100.0 * (dx * dx + dy * dy));
  v0 = p.steady_v();
}

}  // namespace splitkit
