#include "splitkit/core.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace splitkit {

void axpy(StateVector& y, double a, const StateVector& x) {
  if (y.size() != x.size()) throw std::invalid_argument("axpy: size mismatch");
  for (std::size_t i = 0; i < y.size(); ++i) y.values[i] += a * x.values[i];
}

StateVector add_scaled_difference(const StateVector& x, double a, const StateVector& p,
                                  const StateVector& q) {
  if (x.size() != p.size() || x.size() != q.size())
    throw std::invalid_argument("add_scaled_difference: size mismatch");
  StateVector out = x;
  for (std::size_t i = 0; i < x.size(); ++i)
    out.values[i] += a * (p.values[i] - q.values[i]);
  return out;
}

StateVector extract_species(const StateVector& u, int k) {
  const int ns = u.layout.species;
  if (k < 0 || k >= ns) throw std::invalid_argument("extract_species: species index out of range");
  const int m = u.layout.nodes;
  std::vector<double> out(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) out[i] = u.values[static_cast<std::size_t>(i) * ns + k];
  return StateVector(std::move(out), Layout::scalar(m));
}

void set_species(StateVector& u, int k, const StateVector& comp) {
  const int ns = u.layout.species;
  if (k < 0 || k >= ns) throw std::invalid_argument("set_species: species index out of range");
  const int m = u.layout.nodes;
  if (comp.size() != static_cast<std::size_t>(m))
    throw std::invalid_argument("set_species: size mismatch");
  for (int i = 0; i < m; ++i) u.values[static_cast<std::size_t>(i) * ns + k] = comp.values[i];
}

double norm_l2_discrete(const StateVector& v) {
  if (v.size() == 0) throw std::invalid_argument("norm_l2_discrete: empty state");
  double s = 0.0;
  for (double x : v.values) s += x * x;
  return std::sqrt(s / static_cast<double>(v.size()));
}

double norm_max(const StateVector& v) {
  if (v.size() == 0) throw std::invalid_argument("norm_max: empty state");
  double m = 0.0;
  for (double x : v.values) m = std::max(m, std::abs(x));
  return m;
}

bool all_finite(const StateVector& v) {
  return std::all_of(v.values.begin(), v.values.end(),
                     [](double x) { return std::isfinite(x); });
}

StateVector SplitSystem::full_rhs(double t, const StateVector& v) const {
  StateVector acc = explicit_part ? explicit_part(t, v) : StateVector::zeros(v.layout);
  for (const auto& part : implicit_parts) {
    StateVector av = part.apply(v);
    axpy(acc, 1.0, av);
    if (part.source) {
      StateVector g = part.source(t);
      axpy(acc, 1.0, g);
    }
  }
  return acc;
}

void parallel_chunks(std::size_t n, int n_threads,
                     const std::function<void(std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(std::max(1, n_threads)), n));
  if (workers == 1) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t first = w * chunk;
    const std::size_t last = std::min(n, first + chunk);
    if (first >= last) break;
    pool.emplace_back([&fn, first, last] { fn(first, last); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace splitkit
