#include "splitkit/femdd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace splitkit {

MeshHex triangulate_hexagon(int n_sub) {
  if (n_sub < 1) throw std::invalid_argument("triangulate_hexagon: n_sub >= 1 required");
  const int n = n_sub;
  MeshHex mesh;
  mesh.n_sub = n;
  mesh.h = 1.0 / n;
  const double half_h = 0.5 * mesh.h;
  const double row_h = mesh.h * std::sqrt(3.0) / 2.0;

  // Row j in [-n, n] holds 2n+1-|j| nodes centered on x = 0.
  std::vector<int> row_start(2 * static_cast<std::size_t>(n) + 2, 0);
  auto row_count = [n](int j) { return 2 * n + 1 - std::abs(j); };
  for (int j = -n; j <= n; ++j) {
    row_start[static_cast<std::size_t>(j + n + 1)] =
        row_start[static_cast<std::size_t>(j + n)] + row_count(j);
    for (int k = 0; k < row_count(j); ++k) {
      const int xi = 2 * k - (row_count(j) - 1);
      mesh.nodes.push_back({xi * half_h, j * row_h});
    }
  }

  auto node_id = [&](int j, int k) { return row_start[static_cast<std::size_t>(j + n)] + k; };
  for (int j = -n; j < n; ++j) {
    const int p = row_count(j);
    // All triangles counterclockwise; inverted ones start from their bottom vertex.
    if (j < 0) {
      // Upper row is longer and extends half a step to the left.
      for (int k = 0; k + 1 < p; ++k)
        mesh.triangles.push_back({node_id(j, k), node_id(j, k + 1), node_id(j + 1, k + 1)});
      for (int k = 0; k < p; ++k)
        mesh.triangles.push_back({node_id(j, k), node_id(j + 1, k + 1), node_id(j + 1, k)});
    } else {
      // Upper row is shorter and shifted half a step to the right.
      for (int k = 0; k + 1 < p; ++k)
        mesh.triangles.push_back({node_id(j, k), node_id(j, k + 1), node_id(j + 1, k)});
      for (int k = 0; k + 2 < p; ++k)
        mesh.triangles.push_back({node_id(j, k + 1), node_id(j + 1, k + 1), node_id(j + 1, k)});
    }
  }
  return mesh;
}

void write_mesh(std::ostream& os, const MeshHex& mesh) {
  char buf[96];
  for (const auto& p : mesh.nodes) {
    std::snprintf(buf, sizeof(buf), "v %.17g %.17g\n", p[0], p[1]);
    os << buf;
  }
  for (const auto& t : mesh.triangles) {
    std::snprintf(buf, sizeof(buf), "t %d %d %d\n", t[0], t[1], t[2]);
    os << buf;
  }
}

namespace {

double smoothstep5(double t) { return t * t * t * (10.0 + t * (-15.0 + 6.0 * t)); }

void validate_pou(const PartitionOfUnity& pou) {
  if (pou.K < 1) throw std::invalid_argument("PartitionOfUnity: K >= 1 required");
  if (!(pou.b > pou.a)) throw std::invalid_argument("PartitionOfUnity: b > a required");
  if (!(pou.r_overlap > 0.0) || pou.r_overlap >= 1.0 / (2.0 * pou.K))
    throw std::invalid_argument("PartitionOfUnity: need 0 < r_overlap < 1/(2K)");
}

}  // namespace

double pou_psi(const PartitionOfUnity& pou, double z) {
  validate_pou(pou);
  const double span = pou.b - pou.a;
  const double w = pou.r_overlap * span;
  auto center = [&](int k) { return pou.a + span * (k - 0.5) / pou.K; };
  auto plateau = [](int k) { return k % 2 == 1 ? 1.0 : 0.0; };

  if (z <= center(1) + w) return plateau(1);
  for (int k = 1; k < pou.K; ++k) {
    const double lo = center(k) + w;
    const double hi = center(k + 1) - w;
    if (z < hi) {
      const double t = (z - lo) / (hi - lo);
      return plateau(k) + (plateau(k + 1) - plateau(k)) * smoothstep5(t);
    }
    if (z <= center(k + 1) + w) return plateau(k + 1);
  }
  return plateau(pou.K);
}

double pou_weight(const PartitionOfUnity& pou, int k, double x, double y) {
  const double px = pou_psi(pou, x);
  const double py = pou_psi(pou, y);
  switch (k) {
    case 1: return px * py;
    case 2: return (1.0 - px) * py;
    case 3: return px * (1.0 - py);
    case 4: return (1.0 - px) * (1.0 - py);
    default: throw std::invalid_argument("pou_weight: k in 1..4");
  }
}

std::vector<std::vector<int>> find_components(const Eigen::SparseMatrix<double>& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int i) {
    while (parent[static_cast<std::size_t>(i)] != i) {
      parent[static_cast<std::size_t>(i)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(i)])];
      i = parent[static_cast<std::size_t>(i)];
    }
    return i;
  };
  std::vector<char> supported(static_cast<std::size_t>(n), 0);
  for (int c = 0; c < m.outerSize(); ++c) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(m, c); it; ++it) {
      supported[static_cast<std::size_t>(it.row())] = 1;
      supported[static_cast<std::size_t>(it.col())] = 1;
      if (it.row() != it.col()) {
        const int a = find(static_cast<int>(it.row()));
        const int b = find(static_cast<int>(it.col()));
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
  }
  std::vector<std::vector<int>> groups;
  std::vector<int> root_to_group(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    if (!supported[static_cast<std::size_t>(i)]) continue;
    const int r = find(i);
    if (root_to_group[static_cast<std::size_t>(r)] < 0) {
      root_to_group[static_cast<std::size_t>(r)] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[static_cast<std::size_t>(root_to_group[static_cast<std::size_t>(r)])].push_back(i);
  }
  return groups;  // ascending inside each group and ordered by first node
}

SplitStiffness assemble_split_fem(const MeshHex& mesh, const PartitionOfUnity& pou) {
  validate_pou(pou);
  if (pou.K != 4)
    throw std::invalid_argument("assemble_split_fem: the tensor split uses K = 4 subdomains");
  const int n = mesh.node_count();
  SplitStiffness s;
  s.lumped_mass = Eigen::VectorXd::Zero(n);
  std::array<std::vector<Eigen::Triplet<double>>, 4> trip;

  for (const auto& tri : mesh.triangles) {
    const auto& p0 = mesh.nodes[static_cast<std::size_t>(tri[0])];
    const auto& p1 = mesh.nodes[static_cast<std::size_t>(tri[1])];
    const auto& p2 = mesh.nodes[static_cast<std::size_t>(tri[2])];
    const double det = (p1[0] - p0[0]) * (p2[1] - p0[1]) - (p2[0] - p0[0]) * (p1[1] - p0[1]);
    const double area = 0.5 * std::abs(det);
    if (area < 1e-15) throw std::domain_error("assemble_split_fem: degenerate triangle");

    // Row sums of the consistent P1 mass matrix: area/3 per vertex.
    for (int a = 0; a < 3; ++a) s.lumped_mass[tri[static_cast<std::size_t>(a)]] += area / 3.0;

    // grad phi_a = (b_a, c_a) / (2A) with b/c the cyclic coordinate differences.
    const double bx[3] = {p1[1] - p2[1], p2[1] - p0[1], p0[1] - p1[1]};
    const double cx[3] = {p2[0] - p1[0], p0[0] - p2[0], p1[0] - p0[0]};
    const double ax = (p0[0] + p1[0] + p2[0]) / 3.0;
    const double ay = (p0[1] + p1[1] + p2[1]) / 3.0;
    for (int k = 1; k <= 4; ++k) {
      const double wk = pou_weight(pou, k, ax, ay);
      if (wk == 0.0) continue;
      for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
          const double kab = (bx[a] * bx[b] + cx[a] * cx[b]) / (4.0 * area);
          trip[static_cast<std::size_t>(k - 1)].emplace_back(
              tri[static_cast<std::size_t>(a)], tri[static_cast<std::size_t>(b)], wk * kab);
        }
      }
    }
  }

  s.parts.resize(4);
  s.components.resize(4);
  for (int k = 0; k < 4; ++k) {
    s.parts[static_cast<std::size_t>(k)].resize(n, n);
    s.parts[static_cast<std::size_t>(k)].setFromTriplets(trip[static_cast<std::size_t>(k)].begin(),
                                                         trip[static_cast<std::size_t>(k)].end());
    s.components[static_cast<std::size_t>(k)] =
        find_components(s.parts[static_cast<std::size_t>(k)]);
  }
  return s;
}

SplitStiffness collapse_parts(const SplitStiffness& split) {
  if (split.parts.empty()) throw std::invalid_argument("collapse_parts: no parts");
  SplitStiffness out;
  out.lumped_mass = split.lumped_mass;
  Eigen::SparseMatrix<double> sum = split.parts[0];
  for (std::size_t k = 1; k < split.parts.size(); ++k) sum = sum + split.parts[k];
  out.parts.push_back(std::move(sum));
  out.components.push_back(find_components(out.parts[0]));
  return out;
}

struct DDStageSolver::FactorBlock {
  std::vector<std::unique_ptr<Eigen::SimplicialLLT<Eigen::SparseMatrix<double>>>> factors;
};

DDStageSolver::DDStageSolver(std::shared_ptr<const SplitStiffness> split,
                             std::vector<double> species_diff, int n_threads)
    : split_(std::move(split)), species_diff_(std::move(species_diff)), n_threads_(n_threads) {
  if (!split_ || split_->parts.empty())
    throw std::invalid_argument("DDStageSolver: empty stiffness split");
  if (species_diff_.empty())
    throw std::invalid_argument("DDStageSolver: at least one species diffusivity");
  for (double d : species_diff_)
    if (!(d > 0.0)) throw std::invalid_argument("DDStageSolver: diffusivities must be positive");
  cache_.resize(split_->parts.size());
}

StateVector DDStageSolver::apply(int part, const StateVector& v) const {
  const auto& K = split_->parts[static_cast<std::size_t>(part)];
  const int n = static_cast<int>(K.rows());
  const int ns = v.layout.species;
  if (v.layout.nodes != n || ns != static_cast<int>(species_diff_.size()))
    throw std::invalid_argument("DDStageSolver::apply: layout mismatch");
  StateVector out = StateVector::zeros(v.layout);
  Eigen::VectorXd slice(n), prod(n);
  for (int sp = 0; sp < ns; ++sp) {
    for (int i = 0; i < n; ++i) slice[i] = v[static_cast<std::size_t>(i) * ns + sp];
    prod = K * slice;
    const double d = species_diff_[static_cast<std::size_t>(sp)];
    for (int i = 0; i < n; ++i)
      out[static_cast<std::size_t>(i) * ns + sp] = -d * prod[i] / split_->lumped_mass[i];
  }
  return out;
}

StateVector DDStageSolver::solve(int part, double gamma, const StateVector& rhs) const {
  const auto& K = split_->parts[static_cast<std::size_t>(part)];
  const auto& comps = split_->components[static_cast<std::size_t>(part)];
  const int n = static_cast<int>(K.rows());
  const int ns = rhs.layout.species;
  if (rhs.layout.nodes != n || ns != static_cast<int>(species_diff_.size()))
    throw std::invalid_argument("DDStageSolver::solve: layout mismatch");

  // One factorization set per distinct gamma*D; reuse across calls.  Building
  // happens before the parallel solves so the cache is read-only afterwards.
  std::vector<std::shared_ptr<const FactorBlock>> blocks(static_cast<std::size_t>(ns));
  auto& slot = cache_[static_cast<std::size_t>(part)];
  for (int sp = 0; sp < ns; ++sp) {
    const double scaled = gamma * species_diff_[static_cast<std::size_t>(sp)];
    std::shared_ptr<const FactorBlock> found;
    for (const auto& [key, block] : slot)
      if (key == scaled) {
        found = block;
        break;
      }
    if (!found) {
      auto block = std::make_shared<FactorBlock>();
      block->factors.reserve(comps.size());
      for (const auto& comp : comps) {
        std::vector<int> local(static_cast<std::size_t>(n), -1);
        for (std::size_t i = 0; i < comp.size(); ++i)
          local[static_cast<std::size_t>(comp[i])] = static_cast<int>(i);
        std::vector<Eigen::Triplet<double>> trip;
        for (int node : comp) {
          trip.emplace_back(local[static_cast<std::size_t>(node)],
                            local[static_cast<std::size_t>(node)],
                            split_->lumped_mass[node]);
          for (Eigen::SparseMatrix<double>::InnerIterator it(K, node); it; ++it) {
            const int r = local[static_cast<std::size_t>(it.row())];
            if (r >= 0)
              trip.emplace_back(r, local[static_cast<std::size_t>(node)], scaled * it.value());
          }
        }
        Eigen::SparseMatrix<double> m(static_cast<int>(comp.size()),
                                      static_cast<int>(comp.size()));
        m.setFromTriplets(trip.begin(), trip.end());
        auto llt = std::make_unique<Eigen::SimplicialLLT<Eigen::SparseMatrix<double>>>();
        llt->compute(m);
        if (llt->info() != Eigen::Success)
          throw std::runtime_error("DDStageSolver: SPD factorization failed");
        block->factors.push_back(std::move(llt));
      }
      slot.emplace_back(scaled, block);
      found = block;
    }
    blocks[static_cast<std::size_t>(sp)] = found;
  }

  // Pass-through outside the part's support: rows there reduce to M w = M rhs.
  StateVector out = rhs;
  struct Task {
    int sp;
    int comp;
  };
  std::vector<Task> tasks;
  for (int sp = 0; sp < ns; ++sp)
    for (std::size_t c = 0; c < comps.size(); ++c) tasks.push_back({sp, static_cast<int>(c)});

  parallel_chunks(tasks.size(), n_threads_, [&](std::size_t first, std::size_t last) {
    for (std::size_t t = first; t < last; ++t) {
      const auto [sp, ci] = tasks[t];
      const auto& comp = comps[static_cast<std::size_t>(ci)];
      Eigen::VectorXd local(static_cast<int>(comp.size()));
      for (std::size_t i = 0; i < comp.size(); ++i)
        local[static_cast<int>(i)] = split_->lumped_mass[comp[i]] *
                                     rhs[static_cast<std::size_t>(comp[i]) * ns + sp];
      const Eigen::VectorXd sol =
          blocks[static_cast<std::size_t>(sp)]->factors[static_cast<std::size_t>(ci)]->solve(
              local);
      for (std::size_t i = 0; i < comp.size(); ++i)
        out[static_cast<std::size_t>(comp[i]) * ns + sp] = sol[static_cast<int>(i)];
    }
  });
  return out;
}

namespace {

SplitSystem make_schnak_system(std::shared_ptr<const SplitStiffness> split, const MeshHex& mesh,
                               const SchnakParams& params, int n_threads) {
  auto solver = std::make_shared<DDStageSolver>(
      split, std::vector<double>{params.d1, params.d2}, n_threads);
  SplitSystem sys;
  sys.layout = Layout::mesh(mesh.node_count(), 2);
  sys.dimension = sys.layout.size();
  sys.explicit_part = [params](double, const StateVector& state) {
    StateVector out = StateVector::zeros(state.layout);
    const int m = state.layout.nodes;
    for (int i = 0; i < m; ++i) {
      double du, dv;
      schnakenberg_reaction(params, state[2 * static_cast<std::size_t>(i)],
                            state[2 * static_cast<std::size_t>(i) + 1], du, dv);
      out[2 * static_cast<std::size_t>(i)] = du;
      out[2 * static_cast<std::size_t>(i) + 1] = dv;
    }
    return out;
  };
  const int parts = static_cast<int>(split->parts.size());
  for (int j = 0; j < parts; ++j) {
    AffineOperator op;
    op.apply = [solver, j](const StateVector& v) { return solver->apply(j, v); };
    op.stage_solve = [solver, j](const StateVector& rhs, double gamma) {
      return solver->solve(j, gamma, rhs);
    };
    sys.implicit_parts.push_back(std::move(op));
  }
  return sys;
}

}  // namespace

SplitSystem build_schnakenberg_system(const MeshHex& mesh, const PartitionOfUnity& pou,
                                      const SchnakParams& params, int n_threads) {
  auto split = std::make_shared<SplitStiffness>(assemble_split_fem(mesh, pou));
  return make_schnak_system(std::move(split), mesh, params, n_threads);
}

SplitSystem build_schnakenberg_unsplit(const MeshHex& mesh, const PartitionOfUnity& pou,
                                       const SchnakParams& params, int n_threads) {
  auto split = std::make_shared<SplitStiffness>(collapse_parts(assemble_split_fem(mesh, pou)));
  return make_schnak_system(std::move(split), mesh, params, n_threads);
}

StateVector schnakenberg_initial_state(const MeshHex& mesh, const SchnakParams& params) {
  StateVector state = StateVector::zeros(Layout::mesh(mesh.node_count(), 2));
  for (int i = 0; i < mesh.node_count(); ++i) {
    double u0, v0;
    schnakenberg_initial(params, mesh.nodes[static_cast<std::size_t>(i)][0],
                         mesh.nodes[static_cast<std::size_t>(i)][1], u0, v0);
    state[2 * static_cast<std::size_t>(i)] = u0;
    state[2 * static_cast<std::size_t>(i) + 1] = v0;
  }
  return state;
}

}  // namespace splitkit
