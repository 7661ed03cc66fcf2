#include "splitkit/harness.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "splitkit/fdgrid.hpp"

namespace splitkit {

std::string norm_name(NormId n) { return n == NormId::L2 ? "l2" : "max"; }

double apply_norm(NormId n, const StateVector& v) {
  return n == NormId::L2 ? norm_l2_discrete(v) : norm_max(v);
}

long step_count(double t0, double t_end, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("step_count: dt must be positive");
  if (!(t_end > t0)) throw std::invalid_argument("step_count: t_end must exceed t0");
  const double n_real = (t_end - t0) / dt;
  const long n = std::lround(n_real);
  if (n < 1 || std::abs(n_real - static_cast<double>(n)) > 1e-6 * n_real)
    throw std::invalid_argument("step_count: (t_end - t0)/dt is not an integer step count");
  return n;
}

StateVector integrate(const SplitSystem& sys, const SchemeConfig& cfg, StateVector u0, double t0,
                      double t_end, double dt) {
  const long n = step_count(t0, t_end, dt);
  const double limit = 1e6 * std::max(1.0, norm_max(u0));
  StateVector u = std::move(u0);
  for (long k = 1; k <= n; ++k) {
    const double t_prev = t0 + (k - 1) * dt;
    u = scheme_step(sys, cfg, u, t_prev, dt);
    if (!all_finite(u) || norm_max(u) > limit)
      throw BlowUpError(k, "blow-up at step " + std::to_string(k));
  }
  return u;
}

void fill_orders(std::vector<ConvergenceRecord>& records) {
  for (std::size_t i = 0; i < records.size(); ++i) {
    records[i].order.reset();
    for (std::size_t p = i; p-- > 0;) {
      if (records[p].scheme != records[i].scheme || records[p].norm != records[i].norm) break;
      if (!records[p].error || !records[i].error) break;
      if (*records[p].error <= 0.0 || *records[i].error <= 0.0) break;
      if (records[p].dt <= records[i].dt) break;
      records[i].order =
          std::log(*records[p].error / *records[i].error) / std::log(records[p].dt / records[i].dt);
      break;
    }
  }
}

std::vector<std::optional<double>> observed_orders(const std::vector<ConvergenceRecord>& records) {
  std::vector<ConvergenceRecord> copy = records;
  fill_orders(copy);
  std::vector<std::optional<double>> out;
  out.reserve(copy.size());
  for (const auto& r : copy) out.push_back(r.order);
  return out;
}

void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRecord>& records) {
  os << "scheme,theta,dt,h,norm,error,order\n";
  char buf[192];
  for (const auto& r : records) {
    std::snprintf(buf, sizeof(buf), "%s,%.10g,%.10g,%.10g,%s,", r.scheme.c_str(), r.theta, r.dt,
                  r.h, norm_name(r.norm).c_str());
    os << buf;
    if (r.error)
      std::snprintf(buf, sizeof(buf), "%.6e", *r.error);
    else
      std::snprintf(buf, sizeof(buf), "unstable");
    os << buf;
    if (r.order) {
      std::snprintf(buf, sizeof(buf), ",%.4f", *r.order);
      os << buf;
    } else {
      os << ",";
    }
    os << "\n";
  }
}

const std::vector<SchemeRun>& douglas_family() {
  static const std::vector<SchemeRun> runs = {
      {{SchemeId::Douglas, 0.5}, "douglas", 1},
      {{SchemeId::Sc1a, 0.5}, "sc1a", 1},
      {{SchemeId::Sc1b, 0.5}, "sc1b", 1},
  };
  return runs;
}

const std::vector<SchemeRun>& all_schemes() {
  static const std::vector<SchemeRun> runs = [] {
    std::vector<SchemeRun> r = douglas_family();
    const double theta = 1.0 - std::sqrt(2.0) / 2.0;
    r.push_back({{SchemeId::Hv, theta}, "hv", 2});
    r.push_back({{SchemeId::Hw, theta}, "hw", 2});
    r.push_back({{SchemeId::Hw, 0.5}, "cs", 2});
    return r;
  }();
  return runs;
}

namespace {

CartesianGrid grid_for_dt(double dt) {
  const double inv = 1.0 / dt;
  const long k = std::lround(inv);
  if (std::abs(inv - static_cast<double>(k)) > 1e-9 * inv || k < 2)
    throw std::invalid_argument("heat study: 1/dt must be an integer >= 2 (dt/h = 1)");
  return CartesianGrid::unit_square(static_cast<int>(k) - 1);
}

SplitSystem heat_system(const CartesianGrid& g, HeatVariant variant) {
  const HeatMMS mms{variant};
  return build_heat_dimsplit(
      g, 1.0, [mms](double x, double y, double t) { return mms.exact(x, y, t); },
      [mms](double x, double y, double t) { return mms.forcing(x, y, t); }, nullptr);
}

StateVector heat_exact_state(const CartesianGrid& g, HeatVariant variant, double t) {
  const HeatMMS mms{variant};
  return sample_on_grid(g, [mms](double x, double y, double tt) { return mms.exact(x, y, tt); },
                        t);
}

}  // namespace

double heat_local_error(HeatVariant variant, const SchemeRun& run, double dt, NormId norm) {
  const CartesianGrid g = grid_for_dt(dt);
  const SplitSystem sys = heat_system(g, variant);
  const StateVector u0 = heat_exact_state(g, variant, 0.0);
  StateVector u1 = scheme_step(sys, run.cfg, u0, 0.0, dt);
  axpy(u1, -1.0, heat_exact_state(g, variant, dt));
  return apply_norm(norm, u1);
}

double heat_global_error(HeatVariant variant, const SchemeRun& run, double dt, double t_end,
                         NormId norm) {
  const CartesianGrid g = grid_for_dt(dt);
  const SplitSystem sys = heat_system(g, variant);
  StateVector u = integrate(sys, run.cfg, heat_exact_state(g, variant, 0.0), 0.0, t_end, dt);
  axpy(u, -1.0, heat_exact_state(g, variant, t_end));
  return apply_norm(norm, u);
}

std::vector<ConvergenceRecord> run_heat_table(int table, const std::vector<double>& dt_list) {
  if (table < 1 || table > 3) throw std::invalid_argument("run_heat_table: table in {1,2,3}");
  const NormId norm = table == 3 ? NormId::Max : NormId::L2;
  std::vector<ConvergenceRecord> records;
  for (const auto& run : douglas_family()) {
    for (double dt : dt_list) {
      ConvergenceRecord rec;
      rec.scheme = run.label;
      rec.theta = run.cfg.theta;
      rec.dt = dt;
      rec.h = dt;
      rec.norm = norm;
      try {
        rec.error = table == 1 ? heat_local_error(HeatVariant::Poly, run, dt, norm)
                               : heat_global_error(HeatVariant::Poly, run, dt, 1.0, norm);
      } catch (const BlowUpError&) {
        rec.error.reset();
      }
      records.push_back(std::move(rec));
    }
  }
  fill_orders(records);
  return records;
}

std::vector<ConvergenceRecord> run_wave_study(double epsilon, const std::vector<double>& h_list,
                                              double t_end) {
  const TravelingWaveParams params = TravelingWaveParams::standard(epsilon);
  const auto exact = [params](double x, double y, double t) {
    return traveling_wave_exact(params, x, y, t);
  };

  // One integration per (scheme, h); both norm rows read from it.  Cells
  // whose dt = dt_factor*h does not divide T exactly are not runnable and
  // are left out; blow-ups keep their row with the error marked unstable.
  struct Cell {
    bool runnable = false;
    std::optional<double> err_l2;
    std::optional<double> err_max;
  };
  std::vector<std::vector<Cell>> cells(all_schemes().size(),
                                       std::vector<Cell>(h_list.size()));
  for (std::size_t si = 0; si < all_schemes().size(); ++si) {
    const auto& run = all_schemes()[si];
    for (std::size_t hi = 0; hi < h_list.size(); ++hi) {
      const double h = h_list[hi];
      const double inv = 1.0 / h;
      const long k = std::lround(inv);
      if (std::abs(inv - static_cast<double>(k)) > 1e-9 * inv || k < 2)
        throw std::invalid_argument("wave study: 1/h must be an integer >= 2");
      const double dt = run.dt_factor * h;
      try {
        step_count(0.0, t_end, dt);
      } catch (const std::invalid_argument&) {
        continue;
      }
      Cell& cell = cells[si][hi];
      cell.runnable = true;
      const CartesianGrid g = CartesianGrid::unit_square(static_cast<int>(k) - 1);
      const SplitSystem sys = build_heat_dimsplit(
          g, params.epsilon, exact, nullptr,
          [params](double u) { return traveling_wave_reaction(params, u); });
      try {
        StateVector u = integrate(sys, run.cfg, sample_on_grid(g, exact, 0.0), 0.0, t_end, dt);
        axpy(u, -1.0, sample_on_grid(g, exact, t_end));
        cell.err_l2 = apply_norm(NormId::L2, u);
        cell.err_max = apply_norm(NormId::Max, u);
      } catch (const BlowUpError&) {
      }
    }
  }

  std::vector<ConvergenceRecord> records;
  for (std::size_t si = 0; si < all_schemes().size(); ++si) {
    const auto& run = all_schemes()[si];
    for (NormId norm : {NormId::L2, NormId::Max}) {
      for (std::size_t hi = 0; hi < h_list.size(); ++hi) {
        const Cell& cell = cells[si][hi];
        if (!cell.runnable) continue;
        ConvergenceRecord rec;
        rec.scheme = run.label;
        rec.theta = run.cfg.theta;
        rec.dt = run.dt_factor * h_list[hi];
        rec.h = h_list[hi];
        rec.norm = norm;
        rec.error = norm == NormId::L2 ? cell.err_l2 : cell.err_max;
        records.push_back(std::move(rec));
      }
    }
  }
  fill_orders(records);
  return records;
}

StateVector make_reference(const SplitSystem& sys, const StateVector& u0, double t_end,
                           double dt_ref) {
  return integrate(sys, {SchemeId::Sc1a, 0.5}, u0, 0.0, t_end, dt_ref);
}

std::vector<ConvergenceRecord> run_schnak_study(int n_sub, double t_end,
                                                std::vector<double> dt_list, double dt_ref,
                                                int n_threads) {
  if (dt_list.empty()) throw std::invalid_argument("run_schnak_study: empty dt list");
  double dt_min = dt_list.front();
  for (double dt : dt_list) dt_min = std::min(dt_min, dt);
  if (dt_ref <= 0.0) dt_ref = dt_min / 8.0;
  for (double dt : dt_list)
    if (step_count(0.0, dt, dt_ref) < 1)
      throw std::invalid_argument("run_schnak_study: dt_ref must divide every dt");

  const MeshHex mesh = triangulate_hexagon(n_sub);
  const PartitionOfUnity pou;
  const SchnakParams params;
  const SplitSystem sys = build_schnakenberg_system(mesh, pou, params, n_threads);
  const StateVector u0 = schnakenberg_initial_state(mesh, params);
  const StateVector ref = make_reference(sys, u0, t_end, dt_ref);
  const StateVector ref_u = extract_species(ref, 0);

  std::vector<ConvergenceRecord> records;
  for (const auto& run : all_schemes()) {
    for (double dt : dt_list) {
      ConvergenceRecord rec;
      rec.scheme = run.label;
      rec.theta = run.cfg.theta;
      rec.dt = dt;
      rec.h = mesh.h;
      rec.norm = NormId::L2;
      try {
        const StateVector u = integrate(sys, run.cfg, u0, 0.0, t_end, dt);
        StateVector du = extract_species(u, 0);
        axpy(du, -1.0, ref_u);
        rec.error = norm_l2_discrete(du);
      } catch (const BlowUpError&) {
        rec.error.reset();
      }
      records.push_back(std::move(rec));
    }
  }
  fill_orders(records);
  return records;
}

SchnakSnapshot run_schnak_snapshot(int n_sub, double t_end, double dt, int n_threads) {
  SchnakSnapshot snap{triangulate_hexagon(n_sub), {}};
  const PartitionOfUnity pou;
  const SchnakParams params;
  const SplitSystem sys = build_schnakenberg_system(snap.mesh, pou, params, n_threads);
  snap.state = integrate(sys, {SchemeId::Sc1a, 0.5}, schnakenberg_initial_state(snap.mesh, params),
                         0.0, t_end, dt);
  return snap;
}

void write_snapshot_csv(std::ostream& os, const SchnakSnapshot& snap) {
  os << "x,y,u,v\n";
  char buf[160];
  for (int i = 0; i < snap.mesh.node_count(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.10g,%.10g,%.10g,%.10g\n",
                  snap.mesh.nodes[static_cast<std::size_t>(i)][0],
                  snap.mesh.nodes[static_cast<std::size_t>(i)][1],
                  snap.state[2 * static_cast<std::size_t>(i)],
                  snap.state[2 * static_cast<std::size_t>(i) + 1]);
    os << buf;
  }
}

}  // namespace splitkit
