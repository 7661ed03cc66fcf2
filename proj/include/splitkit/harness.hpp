#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "splitkit/core.hpp"
#include "splitkit/femdd.hpp"
#include "splitkit/problems.hpp"
#include "splitkit/schemes.hpp"

namespace splitkit {

enum class NormId { L2, Max };
std::string norm_name(NormId n);
double apply_norm(NormId n, const StateVector& v);

// One convergence-study cell.  error is absent when the run blew up; such
// cells print as `unstable` in the CSV.  order is the observed rate against
// the previous cell of the same (scheme, norm) group.
struct ConvergenceRecord {
  std::string scheme;
  double theta = 0.5;
  double dt = 0.0;
  double h = 0.0;
  NormId norm = NormId::L2;
  std::optional<double> error;
  std::optional<double> order;
};

// Number of steps covering [t0, t_end]; throws unless (t_end - t0)/dt is an
// integer (no partial final step).
long step_count(double t0, double t_end, double dt);

// Runs N = step_count steps of the scheme.  Aborts with BlowUpError when the
// state picks up a non-finite entry or grows past 1e6 * max(1, |u0|_inf).
StateVector integrate(const SplitSystem& sys, const SchemeConfig& cfg, StateVector u0, double t0,
                      double t_end, double dt);

// order = log(e_prev/e) / log(dt_prev/dt) over consecutive same-group rows.
void fill_orders(std::vector<ConvergenceRecord>& records);
std::vector<std::optional<double>> observed_orders(const std::vector<ConvergenceRecord>& records);

// Header "scheme,theta,dt,h,norm,error,order"; byte-identical across runs.
void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRecord>& records);

// A scheme with its display label and time-step coupling: the Douglas family
// runs at dt = h, the extended two-pass schemes at dt = 2h for matched work.
// "cs" labels hw at theta = 1/2.
struct SchemeRun {
  SchemeConfig cfg;
  std::string label;
  int dt_factor = 1;
};
const std::vector<SchemeRun>& douglas_family();
const std::vector<SchemeRun>& all_schemes();

// Manufactured heat study on the unit square at dt/h = 1.
double heat_local_error(HeatVariant variant, const SchemeRun& run, double dt, NormId norm);
double heat_global_error(HeatVariant variant, const SchemeRun& run, double dt, double t_end,
                         NormId norm);
// table 1: local L2; table 2: global L2 at t=1; table 3: global max at t=1.
std::vector<ConvergenceRecord> run_heat_table(
    int table, const std::vector<double>& dt_list = {1.0 / 50, 1.0 / 100, 1.0 / 200, 1.0 / 400});

// Traveling-wave study at output time T: Douglas family at dt = h, extended
// schemes at dt = 2h.  Cells whose dt does not divide T exactly are skipped;
// blow-ups are recorded as unstable.  Emits one row per (scheme, norm, h).
std::vector<ConvergenceRecord> run_wave_study(double epsilon, const std::vector<double>& h_list,
                                              double t_end = 1.0);

// Time-accurate reference on the identical spatial discretization: SC1A at
// dt_ref (which must divide the tested steps).
StateVector make_reference(const SplitSystem& sys, const StateVector& u0, double t_end,
                           double dt_ref);

// Schnakenberg self-convergence study: all schemes at every dt in dt_list,
// u-component discrete L2 error against the reference at dt_ref
// (default dt_min/8).
std::vector<ConvergenceRecord> run_schnak_study(int n_sub, double t_end,
                                                std::vector<double> dt_list, double dt_ref = 0.0,
                                                int n_threads = 1);

struct SchnakSnapshot {
  MeshHex mesh;
  StateVector state;
};
SchnakSnapshot run_schnak_snapshot(int n_sub, double t_end, double dt, int n_threads = 1);
// CSV "x,y,u,v", one row per node.
void write_snapshot_csv(std::ostream& os, const SchnakSnapshot& snap);

}  // namespace splitkit
