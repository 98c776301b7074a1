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

#include "twistwire/geometry.hpp"

#include <cmath>

namespace twistwire {

double twist_angle(double x, const TwistProfile& p) {
  return 0.5 * p.Phi * (std::erf(x / p.lambda) + 1.0);
}

double twist_rate(double x, const TwistProfile& p) {
  const double u = x / p.lambda;
  return p.Phi / (p.lambda * std::sqrt(M_PI)) * std::exp(-u * u);
}

double twist_rate_deriv(double x, const TwistProfile& p) {
  return -2.0 * x / (p.lambda * p.lambda) * twist_rate(x, p);
}

Vec3 map_point(double x, double y, double z, const TwistProfile& p) {
  const double phi = twist_angle(x, p);
  const double c = std::cos(phi), s = std::sin(phi);
  return {x, y * c + z * s, z * c - y * s};
}

MetricSample metric_at(double x, double y, double z, const TwistProfile& p) {
  const double fp = twist_rate(x, p);
  const double fpp = twist_rate_deriv(x, p);
  const double r2 = y * y + z * z;
  MetricSample m;
  m.G = {{{1.0 + fp * fp * r2, fp * z, -fp * y},
          {fp * z, 1.0, 0.0},
          {-fp * y, 0.0, 1.0}}};
  m.G_inv = {{{1.0, -fp * z, fp * y},
              {-fp * z, 1.0 + fp * fp * z * z, -fp * fp * y * z},
              {fp * y, -fp * fp * y * z, 1.0 + fp * fp * y * y}}};
  m.sqrt_det = 1.0;
  m.drift = {0.0, -fpp * z - fp * fp * y, fpp * y - fp * fp * z};
  return m;
}

Mat3 metric_from_jacobian(double x, double y, double z, const TwistProfile& p, double h) {
  // J[a][i] = d r'_a / d x_i by central differences, then G = J^T J.
  double J[3][3];
  const double q[3] = {x, y, z};
  for (int i = 0; i < 3; ++i) {
    double qp[3] = {q[0], q[1], q[2]}, qm[3] = {q[0], q[1], q[2]};
    qp[i] += h;
    qm[i] -= h;
    const Vec3 rp = map_point(qp[0], qp[1], qp[2], p);
    const Vec3 rm = map_point(qm[0], qm[1], qm[2], p);
    for (int a = 0; a < 3; ++a) J[a][i] = (rp[a] - rm[a]) / (2.0 * h);
  }
  Mat3 G{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int a = 0; a < 3; ++a) s += J[a][i] * J[a][j];
      G[i][j] = s;
    }
  return G;
}

}  // namespace twistwire
