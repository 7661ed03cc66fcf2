#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace splitkit {

// Layout tags a flat coefficient vector with the discretization it came from.
// Multi-species states store species interleaved by node (node-major), so the
// coefficients of node i occupy values[i*species .. i*species+species-1].
enum class LayoutKind { Scalar, Cartesian, Mesh };

struct Layout {
  LayoutKind kind = LayoutKind::Scalar;
  int nx = 0;      // Cartesian: interior points in x
  int ny = 0;      // Cartesian: interior points in y
  int nodes = 0;   // Mesh: node count
  int species = 1;

  static Layout scalar(int m, int species = 1) {
    Layout l;
    l.kind = LayoutKind::Scalar;
    l.nodes = m;
    l.species = species;
    return l;
  }
  static Layout cartesian(int nx, int ny, int species = 1) {
    Layout l;
    l.kind = LayoutKind::Cartesian;
    l.nx = nx;
    l.ny = ny;
    l.nodes = nx * ny;
    l.species = species;
    return l;
  }
  static Layout mesh(int nodes, int species = 1) {
    Layout l;
    l.kind = LayoutKind::Mesh;
    l.nodes = nodes;
    l.species = species;
    return l;
  }
  std::size_t size() const { return static_cast<std::size_t>(nodes) * species; }
  bool operator==(const Layout&) const = default;
};

struct StateVector {
  std::vector<double> values;
  Layout layout;

  StateVector() = default;
  StateVector(std::vector<double> v, Layout l) : values(std::move(v)), layout(l) {
    if (values.size() != layout.size())
      throw std::invalid_argument("StateVector: value count does not match layout");
  }
  static StateVector zeros(Layout l) {
    return StateVector(std::vector<double>(l.size(), 0.0), l);
  }
  std::size_t size() const { return values.size(); }
  double& operator[](std::size_t i) { return values[i]; }
  double operator[](std::size_t i) const { return values[i]; }
};

// y += a*x
void axpy(StateVector& y, double a, const StateVector& x);
// componentwise y = x + a*(p - q), used by corrector updates
StateVector add_scaled_difference(const StateVector& x, double a, const StateVector& p,
                                  const StateVector& q);
StateVector extract_species(const StateVector& u, int k);
void set_species(StateVector& u, int k, const StateVector& comp);

// Discrete L2 norm: sqrt((1/m) * sum v_i^2) with m = total entry count.
double norm_l2_discrete(const StateVector& v);
double norm_max(const StateVector& v);
bool all_finite(const StateVector& v);

// One additive term F_j(t,v) = A_j v + g_j(t) with A_j linear and g_j the
// time-dependent inhomogeneity (boundary data, sources folded onto A_j's
// eliminated rows).  stage_solve applies (I - gamma*A_j)^{-1}.
struct AffineOperator {
  std::function<StateVector(const StateVector&)> apply;
  std::function<StateVector(double)> source;  // null means g_j == 0
  std::function<StateVector(const StateVector&, double)> stage_solve;
};

// F(t,v) = F0(t,v) + sum_{j=1..s} (A_j v + g_j(t)).  F0 carries everything
// treated explicitly (reaction terms, MMS sources); it may be null for 0.
struct SplitSystem {
  std::size_t dimension = 0;
  Layout layout;
  std::function<StateVector(double, const StateVector&)> explicit_part;
  std::vector<AffineOperator> implicit_parts;

  int parts() const { return static_cast<int>(implicit_parts.size()); }
  // Full right-hand side, parts summed in index order j = 0..s.
  StateVector full_rhs(double t, const StateVector& v) const;
};

struct BlowUpError : std::runtime_error {
  long step;
  BlowUpError(long step_, const std::string& what_) : std::runtime_error(what_), step(step_) {}
};

struct StageSolveError : std::runtime_error {
  int stage;
  int pass;
  StageSolveError(int stage_, int pass_, const std::string& what_)
      : std::runtime_error(what_), stage(stage_), pass(pass_) {}
};

// Runs fn(first, last) over [0,n) split into contiguous chunks, one per worker.
// Workers write disjoint index ranges, so results are identical for any
// thread count.
void parallel_chunks(std::size_t n, int n_threads,
                     const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace splitkit
