#pragma once

#include <functional>
#include <span>
#include <vector>

#include "splitkit/core.hpp"

namespace splitkit {

// Interior points of the unit square, k per direction, spacing h = 1/(k+1).
// Unknowns are ordered row-major: index(i,j) = j*nx + i.
struct CartesianGrid {
  int nx = 0;
  int ny = 0;
  double h = 0.0;

  static CartesianGrid unit_square(int k);

  double x(int i) const { return (i + 1) * h; }
  double y(int j) const { return (j + 1) * h; }
  int index(int i, int j) const { return j * nx + i; }
  Layout layout() const { return Layout::cartesian(nx, ny); }
};

// Solves a tridiagonal system by the Thomas algorithm.  lower/upper hold the
// n-1 off-diagonal entries, diag the n main-diagonal entries.  Throws
// std::domain_error on a zero pivot ("tridiagonal breakdown").
std::vector<double> thomas_solve(std::span<const double> lower, std::span<const double> diag,
                                 std::span<const double> upper, std::span<const double> rhs);

enum class Direction { X, Y };

// A_dir v with A_dir = coef/h^2 * (second difference along dir), boundary
// neighbours dropped (they live in the inhomogeneity).
StateVector apply_second_difference(const CartesianGrid& g, Direction dir, double coef,
                                    const StateVector& v);

// (I - gamma*A_dir)^{-1} rhs via one Thomas solve per grid line.  Lines are
// independent; n_threads > 1 splits them into contiguous chunks whose outputs
// are disjoint, so the result is bitwise independent of the thread count.
StateVector stage_solve_direction(const CartesianGrid& g, Direction dir, double coef,
                                  double gamma, const StateVector& rhs, int n_threads = 1);

// Dimension-split diffusion u_t = eps (u_xx + u_yy) + source + reaction(u) on
// the unit square with Dirichlet data `boundary(x, y, t)` folded into the
// per-direction inhomogeneities g_1 (x-sweeps) and g_2 (y-sweeps).  The
// explicit part F0 carries source(x, y, t) plus the pointwise reaction.
// Either may be null.  Implicit part order is fixed: j=1 is x, j=2 is y.
SplitSystem build_heat_dimsplit(const CartesianGrid& g, double eps,
                                std::function<double(double, double, double)> boundary,
                                std::function<double(double, double, double)> source,
                                std::function<double(double)> reaction, int n_threads = 1);

// Samples fn(x_i, y_j, t) on the interior nodes.
StateVector sample_on_grid(const CartesianGrid& g,
                           const std::function<double(double, double, double)>& fn, double t);

}  // namespace splitkit
