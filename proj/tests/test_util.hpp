#pragma once

// Shared fixtures: small linear SplitSystems with closed-form stage solves,
// and stage-by-stage scalar recursions used as independent oracles for the
// one-step schemes.  The oracles are written straight from the scheme
// definitions and share no code with the library.

#include <complex>
#include <vector>

#include "splitkit/core.hpp"

namespace testutil {

// Diagonal linear autonomous system: entry i evolves with rate
// lam0[i] (explicit) + sum_j lams[j][i] (implicit).  Stage solves divide by
// (1 - gamma*lam) per entry, which is exact.
inline splitkit::SplitSystem diag_system(std::vector<double> lam0,
                                         std::vector<std::vector<double>> lams) {
  using namespace splitkit;
  const std::size_t m = lam0.empty() ? lams.at(0).size() : lam0.size();
  SplitSystem sys;
  sys.layout = Layout::scalar(static_cast<int>(m));
  sys.dimension = m;
  if (!lam0.empty()) {
    sys.explicit_part = [lam0](double, const StateVector& u) {
      StateVector r = u;
      for (std::size_t i = 0; i < r.size(); ++i) r[i] = lam0[i] * u[i];
      return r;
    };
  }
  for (auto& lam : lams) {
    AffineOperator op;
    op.apply = [lam](const splitkit::StateVector& u) {
      splitkit::StateVector r = u;
      for (std::size_t i = 0; i < r.size(); ++i) r[i] = lam[i] * u[i];
      return r;
    };
    op.stage_solve = [lam](const splitkit::StateVector& rhs, double gamma) {
      splitkit::StateVector r = rhs;
      for (std::size_t i = 0; i < r.size(); ++i) r[i] = rhs[i] / (1.0 - gamma * lam[i]);
      return r;
    };
    sys.implicit_parts.push_back(std::move(op));
  }
  return sys;
}

// Scalar (m = 1) convenience.
inline splitkit::SplitSystem scalar_system(double lam0, std::vector<double> lams,
                                           bool with_explicit = true) {
  std::vector<std::vector<double>> parts;
  parts.reserve(lams.size());
  for (double l : lams) parts.push_back({l});
  return diag_system(with_explicit ? std::vector<double>{lam0} : std::vector<double>{},
                     std::move(parts));
}

// Complex rates embedded as 2x2 rotation-scaling blocks acting on (Re, Im):
// multiplying by lam = a+bi maps (x, y) -> (a x - b y, b x + a y).  A state
// (1, 0) therefore steps to (Re r, Im r) where r is the scheme's scalar
// amplification at the given z_j = dt*lam_j.
inline splitkit::SplitSystem complex_block_system(std::complex<double> lam0,
                                                  std::vector<std::complex<double>> lams) {
  using namespace splitkit;
  SplitSystem sys;
  sys.layout = Layout::scalar(2);
  sys.dimension = 2;
  auto mul = [](std::complex<double> lam, const StateVector& u) {
    const std::complex<double> w = lam * std::complex<double>(u[0], u[1]);
    return StateVector({w.real(), w.imag()}, u.layout);
  };
  if (lam0 != 0.0) {
    sys.explicit_part = [lam0, mul](double, const StateVector& u) { return mul(lam0, u); };
  }
  for (std::complex<double> lam : lams) {
    AffineOperator op;
    op.apply = [lam, mul](const StateVector& u) { return mul(lam, u); };
    op.stage_solve = [lam](const StateVector& rhs, double gamma) {
      const std::complex<double> w =
          std::complex<double>(rhs[0], rhs[1]) / (1.0 - gamma * lam);
      return StateVector({w.real(), w.imag()}, rhs.layout);
    };
    sys.implicit_parts.push_back(std::move(op));
  }
  return sys;
}

using Cx = std::complex<double>;

// Stage-by-stage recursions on the test equation u' = (lam0 + sum lam_j) u
// with u_prev = 1 and z_j = dt*lam_j.  Autonomous, g_j = 0.

// Predictor shared by every scheme: v0 = 1 + (z0 + sum z_j).
inline Cx oracle_predictor(Cx z0, const std::vector<Cx>& z) {
  Cx sum = z0;
  for (Cx zj : z) sum += zj;
  return 1.0 + sum;
}

// Douglas pass: stages (1 - theta z_j) v_j = v_{j-1} - theta z_j * anchor.
inline Cx oracle_correction(Cx v, const std::vector<Cx>& z, double theta, Cx anchor) {
  for (Cx zj : z) v = (v - theta * zj * anchor) / (1.0 - theta * zj);
  return v;
}

inline Cx oracle_douglas(Cx z0, const std::vector<Cx>& z, double theta) {
  return oracle_correction(oracle_predictor(z0, z), z, theta, 1.0);
}

inline Cx oracle_sc1a(Cx z0, const std::vector<Cx>& z) {
  const Cx vstar = oracle_predictor(z0, z);
  const Cx v = vstar + 0.5 * z0 * (vstar - 1.0);
  return oracle_correction(v, z, 0.5, 1.0);
}

inline Cx oracle_sc1b(Cx z0, const std::vector<Cx>& z) {
  const Cx vs = oracle_douglas(z0, z, 0.5);
  return vs + 0.5 * z0 * (vs - 1.0);
}

// Two-pass extended schemes.
inline Cx oracle_hv(Cx z0, const std::vector<Cx>& z, double theta) {
  Cx sum = z0;
  for (Cx zj : z) sum += zj;
  const Cx vstar = oracle_douglas(z0, z, theta);
  Cx v = 1.0 + 0.5 * sum * (1.0 + vstar);  // trapezoidal re-predictor
  for (Cx zj : z) v = (v - theta * zj * vstar) / (1.0 - theta * zj);
  return v;
}

inline Cx oracle_hw(Cx z0, const std::vector<Cx>& z, double theta) {
  const Cx v0star = oracle_predictor(z0, z);
  const Cx vstar = oracle_correction(v0star, z, theta, 1.0);
  Cx v = v0star + 0.5 * z0 * (vstar - 1.0);
  for (Cx zj : z) v += (0.5 - theta) * zj * (vstar - 1.0);
  return oracle_correction(v, z, theta, 1.0);
}

}  // namespace testutil
