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

#include "twistwire/discretization.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace twistwire {

Grid3D build_grid(const WaveguideSpec& spec, double resolution) {
  return build_grid(spec, resolution, resolution);
}

Grid3D build_grid(const WaveguideSpec& spec, double res_x, double res_yz) {
  if (!(res_x > 0.0) || !(res_yz > 0.0))
    throw std::invalid_argument("build_grid: resolution must be positive");
  Grid3D g;
  g.N_x = std::max(1, static_cast<int>(std::lround(2.0 * spec.x_half / res_x)));
  g.N_y = std::max(1, static_cast<int>(std::lround(spec.L_y / res_yz)));
  g.N_z = std::max(1, static_cast<int>(std::lround(spec.L_z / res_yz)));
  if (g.N_y < 10 || g.N_z < 10)
    throw std::invalid_argument("build_grid: fewer than 10 intervals across the cross-section");
  g.x_half = spec.x_half;
  g.L_y = spec.L_y;
  g.L_z = spec.L_z;
  g.dx = 2.0 * spec.x_half / g.N_x;
  g.dy = spec.L_y / g.N_y;
  g.dz = spec.L_z / g.N_z;
  return g;
}

WaveguideOperator assemble_operator(const Grid3D& grid, const TensorFields& f, double c_kin,
                                    XBoundary xb) {
  WaveguideOperator out;
  out.grid = grid;
  const int lo = (xb == XBoundary::OpenVirtual) ? 0 : 1;
  const int hi = (xb == XBoundary::OpenVirtual) ? grid.N_x : grid.N_x - 1;
  const int nplanes = hi - lo + 1;
  const int dim = nplanes * grid.nt();

  std::vector<Eigen::Triplet<cplx>> trip;
  trip.reserve(static_cast<std::size_t>(dim) * 19);

  // Wall references drop (Dirichlet); references beyond the unknown plane
  // range go to the virtual lists (open mode) or drop (Dirichlet ends).
  auto add = [&](int r, int i, int j, int k, cplx v) {
    if (j < 1 || j > grid.ny() || k < 1 || k > grid.nz()) return;
    if (i < lo) {
      if (xb == XBoundary::OpenVirtual) out.left.push_back({r, j, k, v});
      return;
    }
    if (i > hi) {
      if (xb == XBoundary::OpenVirtual) out.right.push_back({r, j, k, v});
      return;
    }
    trip.emplace_back(r, ((i - lo) * grid.ny() + (j - 1)) * grid.nz() + (k - 1), v);
  };

  const double dx = grid.dx, dy = grid.dy, dz = grid.dz;

  for (int ip = 0; ip < nplanes; ++ip) {
    const int i = lo + ip;
    const double x = grid.x(i);
    const double xp = x + dx, xm = x - dx;
    const cplx cxx_p = f.cxx(x + 0.5 * dx);
    const cplx cxx_m = f.cxx(x - 0.5 * dx);
    const cplx Vd = f.V(x);
    for (int j = 1; j <= grid.ny(); ++j) {
      const double y = grid.y(j);
      const double yp = grid.y(j + 1), ym = grid.y(j - 1);
      for (int k = 1; k <= grid.nz(); ++k) {
        const double z = grid.z(k);
        const double zp = grid.z(k + 1), zm = grid.z(k - 1);
        const int r = (ip * grid.ny() + (j - 1)) * grid.nz() + (k - 1);

        // flux stencils for the diagonal terms, coefficients at half nodes
        const cplx cyy_p = f.cyy(x, y + 0.5 * dy, z), cyy_m = f.cyy(x, y - 0.5 * dy, z);
        const cplx czz_p = f.czz(x, y, z + 0.5 * dz), czz_m = f.czz(x, y, z - 0.5 * dz);

        add(r, i, j, k,
            Vd + c_kin * ((cxx_p + cxx_m) / (dx * dx) + (cyy_p + cyy_m) / (dy * dy) +
                          (czz_p + czz_m) / (dz * dz)));
        add(r, i + 1, j, k, -c_kin * cxx_p / (dx * dx));
        add(r, i - 1, j, k, -c_kin * cxx_m / (dx * dx));
        add(r, i, j + 1, k, -c_kin * cyy_p / (dy * dy));
        add(r, i, j - 1, k, -c_kin * cyy_m / (dy * dy));
        add(r, i, j, k + 1, -c_kin * czz_p / (dz * dz));
        add(r, i, j, k - 1, -c_kin * czz_m / (dz * dz));

        // mixed pairs d_a(C d_b .) + d_b(C d_a .): four corners, coefficient
        // averaged over the two staggered nodes; exactly symmetric
        for (int si = -1; si <= 1; si += 2) {
          const double xn = si > 0 ? xp : xm;
          const cplx cxy_n = f.cxy(xn, y, z);
          const cplx cxz_n = f.cxz(xn, y, z);
          for (int s2 = -1; s2 <= 1; s2 += 2) {
            add(r, i + si, j + s2, k,
                -c_kin * static_cast<double>(si * s2) *
                    (cxy_n + f.cxy(x, s2 > 0 ? yp : ym, z)) / (4.0 * dx * dy));
            add(r, i + si, j, k + s2,
                -c_kin * static_cast<double>(si * s2) *
                    (cxz_n + f.cxz(x, y, s2 > 0 ? zp : zm)) / (4.0 * dx * dz));
          }
        }
        for (int sj = -1; sj <= 1; sj += 2) {
          const double yn = sj > 0 ? yp : ym;
          for (int sk = -1; sk <= 1; sk += 2) {
            const double zn = sk > 0 ? zp : zm;
            add(r, i, j + sj, k + sk,
                -c_kin * static_cast<double>(sj * sk) *
                    (f.cyz(x, yn, z) + f.cyz(x, y, zn)) / (4.0 * dy * dz));
          }
        }
      }
    }
  }

  out.op.matrix.resize(dim, dim);
  out.op.matrix.setFromTriplets(trip.begin(), trip.end());
  out.op.matrix.makeCompressed();
  out.op.symmetric = true;
  return out;
}

WaveguideOperator assemble_metric_hamiltonian(const Grid3D& grid, const WaveguideSpec& spec,
                                              XBoundary xb) {
  const TwistProfile prof{spec.Phi, spec.lambda};
  const double py = spec.pivot_y, pz = spec.pivot_z;
  TensorFields f;
  // Contravariant metric components in pivot-relative coordinates.
  f.cxx = [prof](double) { return cplx(1.0); };
  f.cyy = [prof, py, pz](double x, double y, double z) {
    return cplx(metric_at(x, y - py, z - pz, prof).G_inv[1][1]);
  };
  f.czz = [prof, py, pz](double x, double y, double z) {
    return cplx(metric_at(x, y - py, z - pz, prof).G_inv[2][2]);
  };
  f.cxy = [prof, py, pz](double x, double y, double z) {
    return cplx(metric_at(x, y - py, z - pz, prof).G_inv[0][1]);
  };
  f.cxz = [prof, py, pz](double x, double y, double z) {
    return cplx(metric_at(x, y - py, z - pz, prof).G_inv[0][2]);
  };
  f.cyz = [prof, py, pz](double x, double y, double z) {
    return cplx(metric_at(x, y - py, z - pz, prof).G_inv[1][2]);
  };
  f.V = [spec](double x) { return cplx(potential_value(x, spec)); };
  return assemble_operator(grid, f, spec.kinetic(), xb);
}

WaveguideOperator assemble_twistframe_hamiltonian(const Grid3D& grid, const WaveguideSpec& spec,
                                                  XBoundary xb) {
  // K_eps = K_0 + U_eps with phi = Phi*alpha:
  //   U_eps = -[d_x(phi' d_tau) + d_tau(phi' d_x)] - d_tau(phi'^2 d_tau),
  // expanded over d_tau = eta d_z - zeta d_y into the tensor components
  //   C^xy = -phi' zeta, C^xz = +phi' eta,
  //   C^yy = 1 + phi'^2 zeta^2, C^zz = 1 + phi'^2 eta^2, C^yz = -phi'^2 eta zeta.
  const double Phi = spec.Phi, lam = spec.lambda;
  const double py = spec.pivot_y, pz = spec.pivot_z;
  auto aprime = [lam](double x) {
    const double u = x / lam;
    return std::exp(-u * u) / (lam * std::sqrt(M_PI));
  };
  TensorFields f;
  f.cxx = [](double) { return cplx(1.0); };
  f.cyy = [=](double x, double, double z) {
    const double t = Phi * aprime(x);
    const double zeta = z - pz;
    return cplx(1.0 + t * t * zeta * zeta);
  };
  f.czz = [=](double x, double y, double) {
    const double t = Phi * aprime(x);
    const double eta = y - py;
    return cplx(1.0 + t * t * eta * eta);
  };
  f.cxy = [=](double x, double, double z) { return cplx(-Phi * aprime(x) * (z - pz)); };
  f.cxz = [=](double x, double y, double) { return cplx(Phi * aprime(x) * (y - py)); };
  f.cyz = [=](double x, double y, double z) {
    const double t = Phi * aprime(x);
    return cplx(-t * t * (y - py) * (z - pz));
  };
  f.V = [spec](double x) { return cplx(potential_value(x, spec)); };
  return assemble_operator(grid, f, spec.kinetic(), xb);
}

Eigen::MatrixXd transverse_block(const Grid3D& grid, const WaveguideSpec& spec) {
  const int nt = grid.nt();
  const double c = spec.kinetic();
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(nt, nt);
  auto id = [&](int j, int k) { return (j - 1) * grid.nz() + (k - 1); };
  for (int j = 1; j <= grid.ny(); ++j)
    for (int k = 1; k <= grid.nz(); ++k) {
      const int r = id(j, k);
      A(r, r) = 2.0 * c / (grid.dy * grid.dy) + 2.0 * c / (grid.dz * grid.dz);
      if (j > 1) A(r, id(j - 1, k)) = -c / (grid.dy * grid.dy);
      if (j < grid.ny()) A(r, id(j + 1, k)) = -c / (grid.dy * grid.dy);
      if (k > 1) A(r, id(j, k - 1)) = -c / (grid.dz * grid.dz);
      if (k < grid.nz()) A(r, id(j, k + 1)) = -c / (grid.dz * grid.dz);
    }
  return A;
}

void dump_operator(const SparseOperator& op, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("dump_operator: cannot open " + path);
  char buf[128];
  for (int c = 0; c < op.matrix.outerSize(); ++c)
    for (Eigen::SparseMatrix<cplx>::InnerIterator it(op.matrix, c); it; ++it) {
      std::snprintf(buf, sizeof buf, "%d %d %.17g %.17g\n", static_cast<int>(it.row()),
                    static_cast<int>(it.col()), it.value().real(), it.value().imag());
      out << buf;
    }
}

}  // namespace twistwire
