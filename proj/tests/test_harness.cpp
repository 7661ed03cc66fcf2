// Convergence-study harness: step counting, integration driver, observed
// orders, CSV output, and the packaged studies at smoke-test sizes.

#include <cmath>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "splitkit/harness.hpp"
#include "test_util.hpp"

using namespace splitkit;

namespace {

StateVector unit_scalar_state() {
  StateVector u = StateVector::zeros(Layout::scalar(1));
  u[0] = 1.0;
  return u;
}

ConvergenceRecord make_record(const std::string& scheme, double dt, NormId norm,
                              std::optional<double> error) {
  ConvergenceRecord rec;
  rec.scheme = scheme;
  rec.theta = 0.5;
  rec.dt = dt;
  rec.h = dt;
  rec.norm = norm;
  rec.error = error;
  return rec;
}

}  // namespace

TEST_CASE("norm names and dispatch") {
  CHECK(norm_name(NormId::L2) == "l2");
  CHECK(norm_name(NormId::Max) == "max");
  StateVector v = StateVector::zeros(Layout::scalar(3));
  v[0] = 1.0;
  v[1] = 2.0;
  v[2] = 2.0;
  CHECK(apply_norm(NormId::L2, v) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  CHECK(apply_norm(NormId::Max, v) == 2.0);
}

TEST_CASE("step_count: integer division with slack for rounded steps") {
  CHECK(step_count(0.0, 1.0, 0.01) == 100);
  CHECK(step_count(0.0, 0.5, 1.0 / 400) == 200);
  CHECK(step_count(0.5, 1.0, 0.25) == 2);
  CHECK(step_count(0.0, 1.0, 1.0 / 3.0) == 3);  // 1/3 is not exact in binary
  CHECK_THROWS_AS(step_count(0.0, 1.0, 0.3), std::invalid_argument);
  CHECK_THROWS_AS(step_count(0.0, 1.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(step_count(0.0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(step_count(0.0, 1.0, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(step_count(1.0, 1.0, 0.1), std::invalid_argument);
}

TEST_CASE("integrate: exact scalar amplification over two steps") {
  // u' = -u handled implicitly at theta = 1/2: each step multiplies by
  // 1 + z/(1 - z/2) with z = -1, i.e. by 1/3.
  const SplitSystem sys = testutil::scalar_system(0.0, {-1.0});
  SchemeConfig cfg;
  cfg.id = SchemeId::Sc1a;
  const StateVector u = integrate(sys, cfg, unit_scalar_state(), 0.0, 2.0, 1.0);
  CHECK(u[0] == doctest::Approx(1.0 / 9.0).epsilon(1e-14));

  // A zero right-hand side keeps the state bitwise.
  const SplitSystem still = testutil::scalar_system(0.0, {0.0});
  const StateVector same = integrate(still, cfg, unit_scalar_state(), 0.0, 1.0, 0.25);
  CHECK(same[0] == 1.0);
}

TEST_CASE("integrate: blow-up detection reports the offending step") {
  // Explicit u' = 50u at dt = 1 multiplies by 51 each step; the norm passes
  // 1e6 on step four (51^4 ~ 6.8e6).
  const SplitSystem sys = testutil::scalar_system(50.0, {0.0});
  SchemeConfig cfg;
  cfg.id = SchemeId::Douglas;
  try {
    integrate(sys, cfg, unit_scalar_state(), 0.0, 10.0, 1.0);
    FAIL("expected BlowUpError");
  } catch (const BlowUpError& err) {
    CHECK(err.step == 4);
    CHECK(std::string(err.what()).find("blow-up") != std::string::npos);
  }
  // The step-count contract is enforced before any work happens.
  CHECK_THROWS_AS(integrate(sys, cfg, unit_scalar_state(), 0.0, 1.0, 0.3),
                  std::invalid_argument);
}

TEST_CASE("fill_orders: halving dt with fourfold error gives order two") {
  std::vector<ConvergenceRecord> recs = {
      make_record("sc1a", 0.02, NormId::L2, 4e-4),
      make_record("sc1a", 0.01, NormId::L2, 1e-4),
  };
  fill_orders(recs);
  CHECK(!recs[0].order);
  REQUIRE(recs[1].order);
  CHECK(*recs[1].order == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("fill_orders: a first-order error column") {
  std::vector<ConvergenceRecord> recs = {
      make_record("sc1", 1.0 / 50, NormId::L2, 2.52e-3),
      make_record("sc1", 1.0 / 100, NormId::L2, 1.22e-3),
      make_record("sc1", 1.0 / 200, NormId::L2, 6.04e-4),
      make_record("sc1", 1.0 / 400, NormId::L2, 3.00e-4),
  };
  const auto orders = observed_orders(recs);
  REQUIRE(orders.size() == 4u);
  CHECK(!orders[0]);
  CHECK(*orders[1] == doctest::Approx(1.0467).epsilon(1e-3));
  CHECK(*orders[2] == doctest::Approx(1.0143).epsilon(1e-3));
  CHECK(*orders[3] == doctest::Approx(1.0096).epsilon(1e-3));
}

TEST_CASE("fill_orders: group boundaries, unstable cells, and non-decreasing dt") {
  std::vector<ConvergenceRecord> recs = {
      make_record("a", 0.02, NormId::L2, 1e-3),
      make_record("b", 0.01, NormId::L2, 5e-4),  // different scheme: no order
      make_record("b", 0.005, NormId::Max, 25e-5),  // different norm: no order
      make_record("c", 0.02, NormId::L2, std::nullopt),
      make_record("c", 0.01, NormId::L2, 1e-3),  // predecessor unstable: no order
      make_record("c", 0.005, NormId::L2, 5e-4),
      make_record("d", 0.01, NormId::L2, 1e-3),
      make_record("d", 0.01, NormId::L2, 1e-3),  // dt not decreasing: no order
  };
  fill_orders(recs);
  CHECK(!recs[0].order);
  CHECK(!recs[1].order);
  CHECK(!recs[2].order);
  CHECK(!recs[3].order);
  CHECK(!recs[4].order);
  REQUIRE(recs[5].order);
  CHECK(*recs[5].order == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(!recs[6].order);
  CHECK(!recs[7].order);
  // fill_orders clears stale values before recomputing.
  recs[0].order = 9.0;
  fill_orders(recs);
  CHECK(!recs[0].order);
}

TEST_CASE("write_convergence_csv: exact bytes, including unstable cells") {
  std::vector<ConvergenceRecord> recs = {
      make_record("sc1a", 0.02, NormId::L2, 4.91e-5),
      make_record("sc1a", 0.01, NormId::L2, std::nullopt),
  };
  ConvergenceRecord hv;
  hv.scheme = "hv";
  hv.theta = 1.0 - std::sqrt(2.0) / 2.0;
  hv.dt = 0.005;
  hv.h = 0.0025;
  hv.norm = NormId::Max;
  hv.error = 1e-6;
  hv.order = 2.0;
  recs.push_back(hv);

  std::ostringstream out;
  write_convergence_csv(out, recs);
  CHECK(out.str() ==
        "scheme,theta,dt,h,norm,error,order\n"
        "sc1a,0.5,0.02,0.02,l2,4.910000e-05,\n"
        "sc1a,0.5,0.01,0.01,l2,unstable,\n"
        "hv,0.2928932188,0.005,0.0025,max,1.000000e-06,2.0000\n");

  std::ostringstream again;
  write_convergence_csv(again, recs);
  CHECK(out.str() == again.str());

  std::ostringstream empty;
  write_convergence_csv(empty, {});
  CHECK(empty.str() == "scheme,theta,dt,h,norm,error,order\n");
}

TEST_CASE("scheme roster: labels, thetas, and step couplings") {
  const auto& family = douglas_family();
  REQUIRE(family.size() == 3u);
  CHECK(family[0].label == "douglas");
  CHECK(family[0].cfg.id == SchemeId::Douglas);
  CHECK(family[1].label == "sc1a");
  CHECK(family[2].label == "sc1b");
  for (const auto& run : family) {
    CHECK(run.cfg.theta == 0.5);
    CHECK(run.dt_factor == 1);
  }

  const auto& all = all_schemes();
  REQUIRE(all.size() == 6u);
  CHECK(all[3].label == "hv");
  CHECK(all[3].cfg.id == SchemeId::Hv);
  CHECK(all[4].label == "hw");
  CHECK(all[4].cfg.id == SchemeId::Hw);
  CHECK(all[5].label == "cs");
  CHECK(all[5].cfg.id == SchemeId::Hw);
  CHECK(all[5].cfg.theta == 0.5);
  const double theta = 1.0 - std::sqrt(2.0) / 2.0;
  CHECK(all[3].cfg.theta == doctest::Approx(theta).epsilon(1e-15));
  CHECK(all[4].cfg.theta == doctest::Approx(theta).epsilon(1e-15));
  for (std::size_t i = 3; i < 6; ++i) CHECK(all[i].dt_factor == 2);
}

TEST_CASE("matched work: every scheme performs the same number of stage solves per unit time") {
  // The two-pass schemes run at twice the step size, so over a fixed window
  // all six configurations call the implicit stage solver equally often.
  std::vector<long> counts;
  for (const auto& run : all_schemes()) {
    SplitSystem sys = testutil::scalar_system(0.0, {-1.0, -0.5});
    auto counter = std::make_shared<long>(0);
    for (auto& op : sys.implicit_parts) {
      auto inner = op.stage_solve;
      op.stage_solve = [inner, counter](const StateVector& rhs, double gamma) {
        ++*counter;
        return inner(rhs, gamma);
      };
    }
    integrate(sys, run.cfg, unit_scalar_state(), 0.0, 1.0, run.dt_factor * 0.1);
    counts.push_back(*counter);
  }
  REQUIRE(counts.size() == 6u);
  // Douglas family: 10 steps x 2 parts; extended: 5 steps x 2 passes x 2 parts.
  for (long c : counts) CHECK(c == 20);
}

TEST_CASE("heat study: trapezoidal update is exact for data linear in time") {
  const SchemeRun& sc1a = douglas_family()[1];
  const SchemeRun& sc1b = douglas_family()[2];
  CHECK(heat_local_error(HeatVariant::LinearT, sc1a, 1.0 / 10, NormId::Max) <= 1e-12);
  CHECK(heat_global_error(HeatVariant::LinearT, sc1a, 1.0 / 10, 1.0, NormId::Max) <= 1e-12);
  // The post-correction variant commits a genuine (first-order) time error.
  CHECK(heat_global_error(HeatVariant::LinearT, sc1b, 1.0 / 10, 1.0, NormId::Max) > 1e-9);
}

TEST_CASE("heat study: one-step error magnitude for the first-order scheme") {
  const SchemeRun& douglas = douglas_family()[0];
  const double err = heat_local_error(HeatVariant::Poly, douglas, 1.0 / 50, NormId::L2);
  CHECK(err == doctest::Approx(1.31e-3).epsilon(0.03));
}

TEST_CASE("run_heat_table: row layout and filled orders") {
  const std::vector<double> dts = {1.0 / 10, 1.0 / 20};
  const auto recs = run_heat_table(2, dts);
  REQUIRE(recs.size() == 6u);
  for (std::size_t i = 0; i < recs.size(); ++i) {
    CHECK(recs[i].scheme == douglas_family()[i / 2].label);
    CHECK(recs[i].dt == dts[i % 2]);
    CHECK(recs[i].h == dts[i % 2]);
    CHECK(recs[i].norm == NormId::L2);
    REQUIRE(recs[i].error);
    CHECK(*recs[i].error > 0.0);
    CHECK((i % 2 == 1) == recs[i].order.has_value());
  }
  // Table 3 uses the max norm; table 1 the local error (smaller cells).
  const auto t3 = run_heat_table(3, {1.0 / 10});
  REQUIRE(t3.size() == 3u);
  for (const auto& r : t3) CHECK(r.norm == NormId::Max);
  CHECK_THROWS_AS(run_heat_table(0, dts), std::invalid_argument);
  CHECK_THROWS_AS(run_heat_table(4, dts), std::invalid_argument);
}

TEST_CASE("run_wave_study: skips cells whose doubled step does not divide the horizon") {
  // h = 1/10: every scheme gets a row (dt = 1/10 and 1/5 both divide 1).
  // The step is far too coarse for the stiff reaction, so some cells may be
  // unstable — they keep their row with the error withheld.
  const auto full = run_wave_study(1.0, {1.0 / 10});
  REQUIRE(full.size() == 12u);  // 6 schemes x 2 norms
  for (const auto& r : full) {
    if (r.error) CHECK(*r.error > 0.0);
    CHECK(r.h == 1.0 / 10);
    const bool extended = r.scheme == "hv" || r.scheme == "hw" || r.scheme == "cs";
    CHECK(r.dt == (extended ? 2.0 : 1.0) * r.h);
  }
  // h = 1/25: the doubled step gives 12.5 steps, so the extended schemes
  // are left out and only the Douglas family reports.
  const auto partial = run_wave_study(1.0, {1.0 / 25});
  REQUIRE(partial.size() == 6u);
  for (const auto& r : partial) {
    CHECK((r.scheme == "douglas" || r.scheme == "sc1a" || r.scheme == "sc1b"));
    CHECK(r.dt == r.h);
  }
}

TEST_CASE("make_reference: matches a direct trapezoidal-corrected integration") {
  const SplitSystem sys = testutil::scalar_system(0.1, {-1.0, -0.4});
  const StateVector u0 = unit_scalar_state();
  const StateVector ref = make_reference(sys, u0, 1.0, 1.0 / 8);
  SchemeConfig cfg;
  cfg.id = SchemeId::Sc1a;
  cfg.theta = 0.5;
  const StateVector direct = integrate(sys, cfg, u0, 0.0, 1.0, 1.0 / 8);
  CHECK(ref[0] == direct[0]);
}

TEST_CASE("run_schnak_study: smoke run on a coarse mesh") {
  const std::vector<double> dts = {0.02, 0.01};
  const auto recs = run_schnak_study(4, 0.04, dts);
  REQUIRE(recs.size() == 12u);  // 6 schemes x 2 steps
  for (std::size_t i = 0; i < recs.size(); ++i) {
    const auto& r = recs[i];
    CHECK(r.scheme == all_schemes()[i / 2].label);
    CHECK(r.dt == dts[i % 2]);
    CHECK(r.h == 0.25);
    CHECK(r.norm == NormId::L2);
    REQUIRE(r.error);
    CHECK(*r.error > 0.0);
    CHECK(std::isfinite(*r.error));
  }
  CHECK_THROWS_AS(run_schnak_study(4, 0.04, {}), std::invalid_argument);
  // dt_ref must divide the tested steps.
  CHECK_THROWS_AS(run_schnak_study(4, 0.04, {0.02}, 0.0075), std::invalid_argument);
}

TEST_CASE("run_schnak_snapshot and CSV export") {
  const SchnakSnapshot snap = run_schnak_snapshot(2, 0.05, 0.025);
  CHECK(snap.mesh.n_sub == 2);
  REQUIRE(snap.state.layout == Layout::mesh(snap.mesh.node_count(), 2));
  CHECK(all_finite(snap.state));
  // Two short steps from the near-steady start stay near the steady values.
  const SchnakParams params;
  for (int i = 0; i < snap.mesh.node_count(); ++i) {
    CHECK(std::abs(snap.state[2 * static_cast<std::size_t>(i)] - params.steady_u()) < 0.1);
    CHECK(std::abs(snap.state[2 * static_cast<std::size_t>(i) + 1] - params.steady_v()) < 0.1);
  }

  std::ostringstream out;
  write_snapshot_csv(out, snap);
  std::istringstream in(out.str());
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "x,y,u,v");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == snap.mesh.node_count());
  // First node of the mesh sits on the bottom-left corner of the bottom row.
  CHECK(out.str().substr(out.str().find('\n') + 1, 18) == "-0.5,-0.8660254038");

  std::ostringstream again;
  write_snapshot_csv(again, snap);
  CHECK(out.str() == again.str());
}
