/* Copyright 2026 The twistwire Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef TWISTWIRE_DISCRETIZATION_HPP
#define TWISTWIRE_DISCRETIZATION_HPP

#include <Eigen/SparseCore>
#include <functional>
#include <string>
#include <vector>

#include "twistwire/geometry.hpp"
#include "twistwire/model.hpp"
#include "twistwire/units.hpp"

namespace twistwire {

/// Uniform tensor grid over [-x_half,x_half] x [-L_y/2,L_y/2] x [-L_z/2,L_z/2].
/// The wavefunction vanishes on the transverse hard walls, so only the
/// N_y-1 x N_z-1 interior cross-section points are unknowns. All N_x+1
/// longitudinal planes are carried (the open-boundary closure needs the two
/// lead planes).
struct Grid3D {
  int N_x = 0, N_y = 0, N_z = 0; ///< interval counts per direction
  double dx = 0, dy = 0, dz = 0; ///< spacings (nm)
  double x_half = 0, L_y = 0, L_z = 0;

  int ny() const { return N_y - 1; } ///< interior transverse points along y
  int nz() const { return N_z - 1; }
  int nt() const { return ny() * nz(); }             ///< points per plane
  int planes() const { return N_x + 1; }             ///< including lead planes
  int size() const { return planes() * nt(); }

  double x(int i) const { return -x_half + i * dx; } ///< i in [-1, N_x+1] is fine
  double y(int j) const { return -L_y / 2 + j * dy; } ///< j in [1, N_y-1]
  double z(int k) const { return -L_z / 2 + k * dz; }

  /// Flat index of plane i (0-based in 0..N_x), interior (j,k) (1-based).
  int flat(int i, int j, int k) const { return (i * ny() + (j - 1)) * nz() + (k - 1); }
};

/// Builds the grid with spacings snapped so the box lengths are integer
/// multiples. Rejects fewer than 10 intervals across either transverse
/// direction.
Grid3D build_grid(const WaveguideSpec& spec, double resolution);

/// Anisotropic variant; the longitudinal spacing may differ from the
/// transverse one.
Grid3D build_grid(const WaveguideSpec& spec, double res_x, double res_yz);

/// Assembled sparse operator. `matrix` combines duplicate entries (CSC).
struct SparseOperator {
  Eigen::SparseMatrix<cplx> matrix;
  bool symmetric = false; ///< complex-symmetric (A == A^T) by assembly
  int dimension() const { return static_cast<int>(matrix.rows()); }
};

/// One stencil reference to a longitudinal plane outside the domain
/// (plane -1 on the left, plane N_x+1 on the right).
struct VirtualCoupling {
  int row;  ///< flat index of the referencing row
  int j, k; ///< transverse indices (1-based) of the referenced virtual node
  cplx coeff;
};

/// Hamiltonian plus the out-of-domain stencil references the open-boundary
/// closure replaces with lead-mode expansions.
struct WaveguideOperator {
  SparseOperator op;
  std::vector<VirtualCoupling> left, right;
  Grid3D grid;
};

/// Pointwise coefficient tensor of the kinetic operator
///   H = -c_kin sum_ij d_i(C^ij d_j .) + V(x).
/// The metric form, the twist-frame form K_0 + U_eps, and the complex-scaled
/// form K_eps(theta) all reduce to this shape; they differ only in where the
/// component values come from.
struct TensorFields {
  std::function<cplx(double x)> cxx;
  std::function<cplx(double x, double y, double z)> cyy, czz, cxy, cxz, cyz;
  std::function<cplx(double x)> V;
};

/// How longitudinal ends are closed.
enum class XBoundary {
  OpenVirtual,  ///< carry planes 0..N_x; record references to planes -1, N_x+1
  DirichletEnds ///< psi = 0 at x = +-x_half; unknowns are planes 1..N_x-1
};

/// Core assembler: divergence-form flux stencils for the diagonal components,
/// symmetric four-point cross stencils for the mixed ones. The result is
/// exactly (complex-)symmetric.
WaveguideOperator assemble_operator(const Grid3D& grid, const TensorFields& f, double c_kin,
                                    XBoundary xb);

/// Lab-frame assembly: coefficients taken from the closed-form metric G^ij
/// of the twist map.
WaveguideOperator assemble_metric_hamiltonian(const Grid3D& grid, const WaveguideSpec& spec,
                                              XBoundary xb = XBoundary::OpenVirtual);

/// Twist-frame assembly K_0 + U_eps: straight Laplacian plus the twist
/// perturbation -2 phi' d2_xtau - phi'' d_tau - phi'^2 d2_tautau, grouped in
/// the same divergence pairs as the metric form.
WaveguideOperator assemble_twistframe_hamiltonian(const Grid3D& grid, const WaveguideSpec& spec,
                                                  XBoundary xb = XBoundary::OpenVirtual);

/// Dense matrix of the straight transverse block -c (d2_yy + d2_zz) with hard
/// walls; its low eigenvalues converge to the subband thresholds at second
/// order in the spacing.
Eigen::MatrixXd transverse_block(const Grid3D& grid, const WaveguideSpec& spec);

/// Writes "row col re im" per nonzero, 0-based indices.
void dump_operator(const SparseOperator& op, const std::string& path);

}  // namespace twistwire

#endif
