#pragma once

#include <string>

#include "splitkit/core.hpp"

namespace splitkit {

// One-step methods built from a first-order predictor and implicit
// stabilizing corrections, one correction per implicit part:
//
//   Douglas: predictor + s corrections with weight theta, anchored at the
//            old stage values; first order in time for s >= 2 (second for
//            theta = 1/2 when the explicit part vanishes).
//   SC1A:    explicit trapezoidal update of the predictor before the
//            corrections (theta = 1/2).
//   SC1B:    explicit trapezoidal update of the final stage after the
//            corrections (theta = 1/2).
//   HV:      a full Douglas pass, a trapezoidal re-predictor, then a second
//            correction pass anchored at the first pass result.
//   HW:      a full Douglas pass, a weighted re-predictor, then a second
//            correction pass anchored at the step start.  theta = 1/2
//            recovers the classical two-pass corrector (label "cs").
enum class SchemeId { Douglas, Sc1a, Sc1b, Hv, Hw };

struct SchemeConfig {
  SchemeId id = SchemeId::Douglas;
  double theta = 0.5;
};

std::string scheme_name(SchemeId id);
SchemeId scheme_from_name(const std::string& name);

// Throws std::invalid_argument when theta is outside the scheme's range
// (Douglas needs theta >= 1/2, HV/HW need theta > 0; SC1A/SC1B fix 1/2).
void validate_scheme(const SchemeConfig& cfg);

StateVector douglas_step(const SplitSystem& sys, const StateVector& u_prev, double t_prev,
                         double dt, double theta);
StateVector sc1a_step(const SplitSystem& sys, const StateVector& u_prev, double t_prev, double dt);
StateVector sc1b_step(const SplitSystem& sys, const StateVector& u_prev, double t_prev, double dt);
StateVector hv_step(const SplitSystem& sys, const StateVector& u_prev, double t_prev, double dt,
                    double theta);
StateVector hw_step(const SplitSystem& sys, const StateVector& u_prev, double t_prev, double dt,
                    double theta);

StateVector scheme_step(const SplitSystem& sys, const SchemeConfig& cfg,
                        const StateVector& u_prev, double t_prev, double dt);

}  // namespace splitkit
