#pragma once

#include <Eigen/Sparse>
#include <array>
#include <iosfwd>
#include <memory>
#include <vector>

#include "splitkit/core.hpp"
#include "splitkit/problems.hpp"

namespace splitkit {

// Regular hexagon centered at the origin with vertices (+-1, 0) and
// (+-1/2, +-sqrt(3)/2), triangulated into 6*n_sub^2 equilateral triangles of
// side h = 1/n_sub.  Node coordinates are exact integer multiples of
// (h/2, h*sqrt(3)/2).
struct MeshHex {
  int n_sub = 0;
  double h = 0.0;
  std::vector<std::array<double, 2>> nodes;
  std::vector<std::array<int, 3>> triangles;

  int node_count() const { return static_cast<int>(nodes.size()); }
};

MeshHex triangulate_hexagon(int n_sub);

// Plain-text mesh export: one "v x y" line per node, one "t i j k" line per
// triangle, zero-based indices.
void write_mesh(std::ostream& os, const MeshHex& mesh);

// One-dimensional partition builder: K plateaus centered at
// z_k = a + (b-a)(k - 1/2)/K, k = 1..K, alternating values 1,0,1,0,...
// Plateau half-width is r_overlap*(b-a); between plateaus the profile blends
// with the quintic smoothstep 10 t^3 - 15 t^4 + 6 t^5, so psi is C^2.
// Requires r_overlap < 1/(2K) to keep plateaus separated.
struct PartitionOfUnity {
  int K = 4;
  double r_overlap = 0.1;
  double a = -1.0;
  double b = 1.0;
};

double pou_psi(const PartitionOfUnity& pou, double z);

// Tensor-product weights psi_1 = psi(x)psi(y), psi_2 = (1-psi(x))psi(y),
// psi_3 = psi(x)(1-psi(y)), psi_4 = (1-psi(x))(1-psi(y)); they sum to one
// identically.  k is 1-based.
double pou_weight(const PartitionOfUnity& pou, int k, double x, double y);

// Lumped-mass P1 discretization of the Neumann Laplacian, split into four
// subdomain stiffness blocks: element contributions are weighted by
// psi_k(centroid), so sum_k K_k equals the unsplit stiffness exactly (the
// weights sum to one on every element).  Matrices act on nodal coefficients
// with unit diffusivity; species scaling happens at solve/apply time.
struct SplitStiffness {
  Eigen::VectorXd lumped_mass;
  std::vector<Eigen::SparseMatrix<double>> parts;
  // Per part: connected components of the sparsity graph restricted to
  // supported nodes (rows with any structural entry), each sorted ascending.
  std::vector<std::vector<std::vector<int>>> components;
};

SplitStiffness assemble_split_fem(const MeshHex& mesh, const PartitionOfUnity& pou);

// Connected components of a symmetric sparsity pattern: union-find over the
// off-diagonal entries plus singletons for isolated supported nodes.  Nodes
// with structurally empty rows are excluded.
std::vector<std::vector<int>> find_components(const Eigen::SparseMatrix<double>& m);

// Sums the subdomain blocks back into a single unsplit stiffness part
// (reference configuration for splitting-error checks).
SplitStiffness collapse_parts(const SplitStiffness& split);

// Block solver for the implicit stages (M + gamma*D*K_j) w = M rhs, one SPD
// Cholesky factorization per (part, gamma*D, component), cached.  Nodes
// outside the part's support pass through unchanged (their rows reduce to
// M w = M rhs).  Species are solved independently; species_diff holds one
// diffusivity per species.
class DDStageSolver {
 public:
  DDStageSolver(std::shared_ptr<const SplitStiffness> split, std::vector<double> species_diff,
                int n_threads = 1);

  // rhs and result are node-major interleaved StateVectors.
  StateVector solve(int part, double gamma, const StateVector& rhs) const;
  // A_j v = -D_s M^{-1} K_j v per species.
  StateVector apply(int part, const StateVector& v) const;

 private:
  struct FactorBlock;
  std::shared_ptr<const SplitStiffness> split_;
  std::vector<double> species_diff_;
  int n_threads_;
  mutable std::vector<std::vector<std::pair<double, std::shared_ptr<const FactorBlock>>>> cache_;
};

// Schnakenberg reaction-diffusion system on the hexagon with homogeneous
// Neumann boundaries: explicit kinetics, four implicit domain-decomposition
// diffusion parts (s = 4).  State layout: mesh nodes, two species interleaved.
SplitSystem build_schnakenberg_system(const MeshHex& mesh, const PartitionOfUnity& pou,
                                      const SchnakParams& params, int n_threads = 1);

// Same physics with the diffusion kept in one unsplit implicit part (s = 1);
// used to isolate the splitting error.
SplitSystem build_schnakenberg_unsplit(const MeshHex& mesh, const PartitionOfUnity& pou,
                                       const SchnakParams& params, int n_threads = 1);

StateVector schnakenberg_initial_state(const MeshHex& mesh, const SchnakParams& params);

}  // namespace splitkit
