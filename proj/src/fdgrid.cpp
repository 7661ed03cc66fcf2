#include "splitkit/fdgrid.hpp"

#include <cmath>
#include <stdexcept>

namespace splitkit {

CartesianGrid CartesianGrid::unit_square(int k) {
  if (k < 1) throw std::invalid_argument("CartesianGrid: need at least one interior point");
  CartesianGrid g;
  g.nx = k;
  g.ny = k;
  g.h = 1.0 / (k + 1);
  return g;
}

std::vector<double> thomas_solve(std::span<const double> lower, std::span<const double> diag,
                                 std::span<const double> upper, std::span<const double> rhs) {
  const std::size_t n = diag.size();
  if (n == 0) throw std::invalid_argument("thomas_solve: empty system");
  if (lower.size() != n - 1 || upper.size() != n - 1 || rhs.size() != n)
    throw std::invalid_argument("thomas_solve: inconsistent sizes");

  std::vector<double> c(n - 1), x(n);
  double den = diag[0];
  if (den == 0.0) throw std::domain_error("thomas_solve: tridiagonal breakdown");
  if (n > 1) c[0] = upper[0] / den;
  x[0] = rhs[0] / den;
  for (std::size_t i = 1; i < n; ++i) {
    den = diag[i] - lower[i - 1] * c[i - 1];
    if (den == 0.0) throw std::domain_error("thomas_solve: tridiagonal breakdown");
    if (i < n - 1) c[i] = upper[i] / den;
    x[i] = (rhs[i] - lower[i - 1] * x[i - 1]) / den;
  }
  for (std::size_t i = n - 1; i-- > 0;) x[i] -= c[i] * x[i + 1];
  return x;
}

StateVector apply_second_difference(const CartesianGrid& g, Direction dir, double coef,
                                    const StateVector& v) {
  if (v.layout.nx != g.nx || v.layout.ny != g.ny)
    throw std::invalid_argument("apply_second_difference: layout mismatch");
  StateVector out = StateVector::zeros(v.layout);
  const double w = coef / (g.h * g.h);
  if (dir == Direction::X) {
    for (int j = 0; j < g.ny; ++j) {
      const int row = j * g.nx;
      for (int i = 0; i < g.nx; ++i) {
        double acc = -2.0 * v[row + i];
        if (i > 0) acc += v[row + i - 1];
        if (i + 1 < g.nx) acc += v[row + i + 1];
        out[row + i] = w * acc;
      }
    }
  } else {
    for (int j = 0; j < g.ny; ++j) {
      for (int i = 0; i < g.nx; ++i) {
        double acc = -2.0 * v[g.index(i, j)];
        if (j > 0) acc += v[g.index(i, j - 1)];
        if (j + 1 < g.ny) acc += v[g.index(i, j + 1)];
        out[g.index(i, j)] = w * acc;
      }
    }
  }
  return out;
}

StateVector stage_solve_direction(const CartesianGrid& g, Direction dir, double coef,
                                  double gamma, const StateVector& rhs, int n_threads) {
  if (rhs.layout.nx != g.nx || rhs.layout.ny != g.ny)
    throw std::invalid_argument("stage_solve_direction: layout mismatch");
  StateVector out = StateVector::zeros(rhs.layout);
  const double w = gamma * coef / (g.h * g.h);
  const int n = dir == Direction::X ? g.nx : g.ny;
  const int lines = dir == Direction::X ? g.ny : g.nx;
  const std::vector<double> lower(static_cast<std::size_t>(n - 1), -w);
  const std::vector<double> diag(static_cast<std::size_t>(n), 1.0 + 2.0 * w);

  parallel_chunks(static_cast<std::size_t>(lines), n_threads,
                  [&](std::size_t first, std::size_t last) {
                    std::vector<double> line(static_cast<std::size_t>(n));
                    for (std::size_t l = first; l < last; ++l) {
                      if (dir == Direction::X) {
                        const int row = static_cast<int>(l) * g.nx;
                        for (int i = 0; i < n; ++i) line[i] = rhs[row + i];
                        const auto sol = thomas_solve(lower, diag, lower, line);
                        for (int i = 0; i < n; ++i) out[row + i] = sol[i];
                      } else {
                        const int col = static_cast<int>(l);
                        for (int j = 0; j < n; ++j) line[j] = rhs[g.index(col, j)];
                        const auto sol = thomas_solve(lower, diag, lower, line);
                        for (int j = 0; j < n; ++j) out[g.index(col, j)] = sol[j];
                      }
                    }
                  });
  return out;
}

StateVector sample_on_grid(const CartesianGrid& g,
                           const std::function<double(double, double, double)>& fn, double t) {
  StateVector out = StateVector::zeros(g.layout());
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) out[g.index(i, j)] = fn(g.x(i), g.y(j), t);
  return out;
}

SplitSystem build_heat_dimsplit(const CartesianGrid& g, double eps,
                                std::function<double(double, double, double)> boundary,
                                std::function<double(double, double, double)> source,
                                std::function<double(double)> reaction, int n_threads) {
  if (eps <= 0.0) throw std::invalid_argument("build_heat_dimsplit: eps must be positive");
  SplitSystem sys;
  sys.layout = g.layout();
  sys.dimension = sys.layout.size();

  if (source || reaction) {
    sys.explicit_part = [g, source, reaction](double t, const StateVector& v) {
      StateVector out = source ? sample_on_grid(g, source, t) : StateVector::zeros(g.layout());
      if (reaction)
        for (std::size_t i = 0; i < out.size(); ++i) out.values[i] += reaction(v[i]);
      return out;
    };
  }

  const double w = eps / (g.h * g.h);

  AffineOperator ax;
  ax.apply = [g, eps](const StateVector& v) {
    return apply_second_difference(g, Direction::X, eps, v);
  };
  if (boundary) {
    ax.source = [g, w, boundary](double t) {
      StateVector out = StateVector::zeros(g.layout());
      for (int j = 0; j < g.ny; ++j) {
        out[g.index(0, j)] += w * boundary(0.0, g.y(j), t);
        out[g.index(g.nx - 1, j)] += w * boundary(1.0, g.y(j), t);
      }
      return out;
    };
  }
  ax.stage_solve = [g, eps, n_threads](const StateVector& rhs, double gamma) {
    return stage_solve_direction(g, Direction::X, eps, gamma, rhs, n_threads);
  };
  sys.implicit_parts.push_back(std::move(ax));

  AffineOperator ay;
  ay.apply = [g, eps](const StateVector& v) {
    return apply_second_difference(g, Direction::Y, eps, v);
  };
  if (boundary) {
    ay.source = [g, w, boundary](double t) {
      StateVector out = StateVector::zeros(g.layout());
      for (int i = 0; i < g.nx; ++i) {
        out[g.index(i, 0)] += w * boundary(g.x(i), 0.0, t);
        out[g.index(i, g.ny - 1)] += w * boundary(g.x(i), 1.0, t);
      }
      return out;
    };
  }
  ay.stage_solve = [g, eps, n_threads](const StateVector& rhs, double gamma) {
    return stage_solve_direction(g, Direction::Y, eps, gamma, rhs, n_threads);
  };
  sys.implicit_parts.push_back(std::move(ay));

  return sys;
}

}  // namespace splitkit
