#include "splitkit/schemes.hpp"

#include <algorithm>
#include <cctype>

namespace splitkit {

std::string scheme_name(SchemeId id) {
  switch (id) {
    case SchemeId::Douglas: return "douglas";
    case SchemeId::Sc1a: return "sc1a";
    case SchemeId::Sc1b: return "sc1b";
    case SchemeId::Hv: return "hv";
    case SchemeId::Hw: return "hw";
  }
  throw std::logic_error("scheme_name: unknown id");
}

SchemeId scheme_from_name(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (s == "douglas") return SchemeId::Douglas;
  if (s == "sc1a") return SchemeId::Sc1a;
  if (s == "sc1b") return SchemeId::Sc1b;
  if (s == "hv") return SchemeId::Hv;
  if (s == "hw") return SchemeId::Hw;
  throw std::invalid_argument("unknown scheme: " + name);
}

void validate_scheme(const SchemeConfig& cfg) {
  if (!(cfg.theta > 0.0) || cfg.theta > 1.0)
    throw std::invalid_argument("scheme theta must lie in (0, 1]");
  if (cfg.id == SchemeId::Douglas && cfg.theta < 0.5)
    throw std::invalid_argument("douglas requires theta >= 1/2");
  if ((cfg.id == SchemeId::Sc1a || cfg.id == SchemeId::Sc1b) && cfg.theta != 0.5)
    throw std::invalid_argument("sc1a/sc1b fix theta = 1/2");
}

namespace {

// Quantities shared by every scheme in the family, computed once per step:
// F0(t_prev,u_prev), the products A_j u_prev, and the inhomogeneities at the
// two time levels the schemes touch.
struct StepData {
  StateVector f0_prev;
  std::vector<StateVector> a_u_prev;
  std::vector<StateVector> g_prev;
  std::vector<StateVector> g_now;
  std::vector<bool> has_g;
};

StepData prepare(const SplitSystem& sys, const StateVector& u_prev, double t_prev, double t_now) {
  StepData d;
  d.f0_prev = sys.explicit_part ? sys.explicit_part(t_prev, u_prev)
                                : StateVector::zeros(u_prev.layout);
  const int s = sys.parts();
  d.a_u_prev.reserve(s);
  d.g_prev.resize(s);
  d.g_now.resize(s);
  d.has_g.assign(s, false);
  for (int j = 0; j < s; ++j) {
    const auto& part = sys.implicit_parts[static_cast<std::size_t>(j)];
    d.a_u_prev.push_back(part.apply(u_prev));
    if (part.source) {
      d.has_g[static_cast<std::size_t>(j)] = true;
      d.g_prev[static_cast<std::size_t>(j)] = part.source(t_prev);
      d.g_now[static_cast<std::size_t>(j)] = part.source(t_now);
    }
  }
  return d;
}

// u_prev + dt * F(t_prev, u_prev), parts summed in index order.
StateVector predictor(const SplitSystem& sys, const StateVector& u_prev, double dt,
                      const StepData& d) {
  StateVector v = u_prev;
  axpy(v, dt, d.f0_prev);
  for (int j = 0; j < sys.parts(); ++j) {
    axpy(v, dt, d.a_u_prev[static_cast<std::size_t>(j)]);
    if (d.has_g[static_cast<std::size_t>(j)]) axpy(v, dt, d.g_prev[static_cast<std::size_t>(j)]);
  }
  return v;
}

StateVector solve_stage(const SplitSystem& sys, int j, int pass, const StateVector& rhs,
                        double gamma) {
  try {
    return sys.implicit_parts[static_cast<std::size_t>(j)].stage_solve(rhs, gamma);
  } catch (const std::exception& e) {
    throw StageSolveError(j + 1, pass,
                          "stage solve failed (stage " + std::to_string(j + 1) + ", pass " +
                              std::to_string(pass) + "): " + e.what());
  }
}

// Correction sweep v_j = v_{j-1} + theta*dt*(F_j(t_now, v_j) - F_j anchor),
// where the anchor is A_j u_prev + g_j(t_prev).  Solving for v_j:
//   (I - theta*dt*A_j) v_j = v_{j-1} - theta*dt*(A_j u_prev + g_j(t_prev))
//                                    + theta*dt*g_j(t_now).
StateVector correction_pass(const SplitSystem& sys, StateVector v, double theta_dt,
                            const StepData& d, int pass) {
  for (int j = 0; j < sys.parts(); ++j) {
    StateVector rhs = v;
    axpy(rhs, -theta_dt, d.a_u_prev[static_cast<std::size_t>(j)]);
    if (d.has_g[static_cast<std::size_t>(j)]) {
      axpy(rhs, -theta_dt, d.g_prev[static_cast<std::size_t>(j)]);
      axpy(rhs, theta_dt, d.g_now[static_cast<std::size_t>(j)]);
    }
    v = solve_stage(sys, j, pass, rhs, theta_dt);
  }
  return v;
}

}  // namespace

StateVector douglas_step(const SplitSystem& sys, const StateVector& u_prev, double t_prev,
                         double dt, double theta) {
  const StepData d = prepare(sys, u_prev, t_prev, t_prev + dt);
  StateVector v = predictor(sys, u_prev, dt, d);
  return correction_pass(sys, std::move(v), theta * dt, d, 1);
}

StateVector sc1a_step(const SplitSystem& sys, const StateVector& u_prev, double t_prev,
                      double dt) {
  const double t_now = t_prev + dt;
  const StepData d = prepare(sys, u_prev, t_prev, t_now);
  StateVector v_star = predictor(sys, u_prev, dt, d);
  StateVector v = v_star;
  if (sys.explicit_part) {
    const StateVector f0_now = sys.explicit_part(t_now, v_star);
    v = add_scaled_difference(v_star, 0.5 * dt, f0_now, d.f0_prev);
  }
  return correction_pass(sys, std::move(v), 0.5 * dt, d, 1);
}

StateVector sc1b_step(const SplitSystem& sys, const StateVector& u_prev, double t_prev,
                      double dt) {
  const double t_now = t_prev + dt;
  const StepData d = prepare(sys, u_prev, t_prev, t_now);
  StateVector v = predictor(sys, u_prev, dt, d);
  v = correction_pass(sys, std::move(v), 0.5 * dt, d, 1);
  if (!sys.explicit_part) return v;
  const StateVector f0_now = sys.explicit_part(t_now, v);
  return add_scaled_difference(v, 0.5 * dt, f0_now, d.f0_prev);
}

StateVector hv_step(const SplitSystem& sys, const StateVector& u_prev, double t_prev, double dt,
                    double theta) {
  const double t_now = t_prev + dt;
  const StepData d = prepare(sys, u_prev, t_prev, t_now);
  StateVector v_star = predictor(sys, u_prev, dt, d);
  v_star = correction_pass(sys, std::move(v_star), theta * dt, d, 1);

  // Trapezoidal re-predictor v0 = u_prev + dt/2 (F(t_prev,u_prev) + F(t_now,v_star)).
  std::vector<StateVector> a_v_star;
  a_v_star.reserve(sys.parts());
  StateVector f_now = sys.explicit_part ? sys.explicit_part(t_now, v_star)
                                        : StateVector::zeros(v_star.layout);
  for (int j = 0; j < sys.parts(); ++j) {
    a_v_star.push_back(sys.implicit_parts[static_cast<std::size_t>(j)].apply(v_star));
    axpy(f_now, 1.0, a_v_star.back());
    if (d.has_g[static_cast<std::size_t>(j)]) axpy(f_now, 1.0, d.g_now[static_cast<std::size_t>(j)]);
  }
  StateVector f_prev = d.f0_prev;
  for (int j = 0; j < sys.parts(); ++j) {
    axpy(f_prev, 1.0, d.a_u_prev[static_cast<std::size_t>(j)]);
    if (d.has_g[static_cast<std::size_t>(j)]) axpy(f_prev, 1.0, d.g_prev[static_cast<std::size_t>(j)]);
  }
  StateVector v = u_prev;
  axpy(v, 0.5 * dt, f_prev);
  axpy(v, 0.5 * dt, f_now);

  // Second pass is anchored at v_star and both anchors sit at t_now, so the
  // inhomogeneities cancel: (I - theta*dt*A_j) v_j = v_{j-1} - theta*dt*A_j v_star.
  for (int j = 0; j < sys.parts(); ++j) {
    StateVector rhs = v;
    axpy(rhs, -theta * dt, a_v_star[static_cast<std::size_t>(j)]);
    v = solve_stage(sys, j, 2, rhs, theta * dt);
  }
  return v;
}

StateVector hw_step(const SplitSystem& sys, const StateVector& u_prev, double t_prev, double dt,
                    double theta) {
  const double t_now = t_prev + dt;
  const StepData d = prepare(sys, u_prev, t_prev, t_now);
  const StateVector v0_star = predictor(sys, u_prev, dt, d);
  StateVector v_star = correction_pass(sys, v0_star, theta * dt, d, 1);

  StateVector v = v0_star;
  if (sys.explicit_part) {
    const StateVector f0_now = sys.explicit_part(t_now, v_star);
    v = add_scaled_difference(v0_star, 0.5 * dt, f0_now, d.f0_prev);
  }
  const double w = (0.5 - theta) * dt;
  if (w != 0.0) {
    for (int j = 0; j < sys.parts(); ++j) {
      const StateVector a_v = sys.implicit_parts[static_cast<std::size_t>(j)].apply(v_star);
      axpy(v, w, a_v);
      axpy(v, -w, d.a_u_prev[static_cast<std::size_t>(j)]);
      if (d.has_g[static_cast<std::size_t>(j)]) {
        axpy(v, w, d.g_now[static_cast<std::size_t>(j)]);
        axpy(v, -w, d.g_prev[static_cast<std::size_t>(j)]);
      }
    }
  }
  return correction_pass(sys, std::move(v), theta * dt, d, 2);
}

StateVector scheme_step(const SplitSystem& sys, const SchemeConfig& cfg,
                        const StateVector& u_prev, double t_prev, double dt) {
  validate_scheme(cfg);
  switch (cfg.id) {
    case SchemeId::Douglas: return douglas_step(sys, u_prev, t_prev, dt, cfg.theta);
    case SchemeId::Sc1a: return sc1a_step(sys, u_prev, t_prev, dt);
    case SchemeId::Sc1b: return sc1b_step(sys, u_prev, t_prev, dt);
    case SchemeId::Hv: return hv_step(sys, u_prev, t_prev, dt, cfg.theta);
    case SchemeId::Hw: return hw_step(sys, u_prev, t_prev, dt, cfg.theta);
  }
  throw std::logic_error("scheme_step: unknown id");
}

}  // namespace splitkit
