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

#include "twistwire/model.hpp"

#include <algorithm>
#include <cmath>

namespace twistwire {

void WaveguideSpec::validate() const {
  auto fail = [](const std::string& msg) { throw std::invalid_argument("WaveguideSpec: " + msg); };
  if (!(L_y > 0.0) || !(L_z > 0.0)) fail("L_y and L_z must be positive");
  if (L_y == L_z) fail("L_y must differ from L_z (non-square cross-section)");
  if (!(mass_ratio > 0.0)) fail("mass_ratio must be positive");
  if (nu < 0.0) fail("nu must be >= 0");
  if (!(L_p > 0.0)) fail("L_p must be positive");
  if (!(lambda > 0.0)) fail("lambda must be positive");
  if (Phi < 0.0) fail("Phi must be >= 0");
  if (x_half < 2.0 * lambda + 3.0 * L_p)
    fail("x_half must be >= 2*lambda + 3*L_p so the leads are straight");
  if (std::abs(pivot_y) > L_y / 2 || std::abs(pivot_z) > L_z / 2)
    fail("twist pivot must lie inside the cross-section");
}

double subband_energy(int n_y, int n_z, const WaveguideSpec& spec) {
  if (n_y < 1 || n_z < 1) throw std::invalid_argument("subband_energy: quantum numbers start at 1");
  const double c = spec.kinetic();
  const double ky = n_y * M_PI / spec.L_y;
  const double kz = n_z * M_PI / spec.L_z;
  return c * (ky * ky + kz * kz);
}

double potential_value(double x, const WaveguideSpec& spec) {
  const double t = std::tanh(x / spec.L_p);
  return spec.kinetic() * spec.nu * (spec.nu + 1.0) / (spec.L_p * spec.L_p) * (t * t - 1.0);
}

std::vector<double> bound_levels(const WaveguideSpec& spec) {
  std::vector<double> mu;
  if (spec.nu <= 0.0) return mu;
  const int jmax = static_cast<int>(std::ceil(spec.nu));
  const double s = spec.kinetic() / (spec.L_p * spec.L_p);
  for (int j = 1; j <= jmax; ++j) {
    const double a = spec.nu + 1.0 - j;
    mu.push_back(-s * a * a);
  }
  return mu;
}

LevelTable level_table(const WaveguideSpec& spec, double E_max) {
  LevelTable tab;
  // Enumerate transverse modes generously; quantum numbers needed grow with
  // sqrt(E_max), 64 per direction covers everything the solver can resolve.
  for (int a = 1; a <= 64; ++a)
    for (int b = 1; b <= 64; ++b) {
      const double E = subband_energy(a, b, spec);
      if (E <= E_max) tab.thresholds.push_back({0, a, b, E});
    }
  std::sort(tab.thresholds.begin(), tab.thresholds.end(),
            [](const auto& l, const auto& r) {
              if (l.E != r.E) return l.E < r.E;
              return std::pair(l.n_y, l.n_z) < std::pair(r.n_y, r.n_z);
            });
  for (std::size_t i = 0; i < tab.thresholds.size(); ++i) tab.thresholds[i].n = static_cast<int>(i) + 1;

  const auto mu = bound_levels(spec);
  for (std::size_t j = 0; j < mu.size(); ++j) tab.bound.push_back({static_cast<int>(j) + 1, mu[j]});

  const double E1 = subband_energy(1, 1, spec);
  const double E2 = [&] {
    // second-lowest threshold irrespective of E_max truncation
    double best = 1e300;
    for (int a = 1; a <= 8; ++a)
      for (int b = 1; b <= 8; ++b) {
        const double E = subband_energy(a, b, spec);
        if (E > E1 && E < best) best = E;
      }
    return best;
  }();
  for (const auto& th : tab.thresholds)
    for (const auto& bd : tab.bound) {
      const double eps = th.E + bd.mu;
      if (eps <= E_max)
        tab.combined.push_back({th.n, bd.j, eps, eps > E1 && eps < E2});
    }
  std::sort(tab.combined.begin(), tab.combined.end(),
            [](const auto& l, const auto& r) { return l.eps < r.eps; });
  return tab;
}

double reference_transmission_1d(double E_kin, const WaveguideSpec& spec, double step) {
  if (!(E_kin > 0.0)) throw std::invalid_argument("reference_transmission_1d: E_kin must be > 0");
  const double c = spec.kinetic();
  const double xh = spec.x_half;
  const int n = static_cast<int>(std::ceil(2.0 * xh / step));
  const double h = 2.0 * xh / n;
  const double k0 = std::sqrt(E_kin / c);

  // Transfer of (u, u') across slabs of constant potential. V <= 0 keeps the
  // local wavenumber real, so no exponential growth to stabilize.
  double m11 = 1.0, m12 = 0.0, m21 = 0.0, m22 = 1.0;
  for (int i = 0; i < n; ++i) {
    const double xm = -xh + (i + 0.5) * h;
    const double q = std::sqrt((E_kin - potential_value(xm, spec)) / c);
    const double ch = std::cos(q * h), sh = std::sin(q * h);
    const double a11 = ch, a12 = sh / q, a21 = -q * sh, a22 = ch;
    const double n11 = a11 * m11 + a12 * m21;
    const double n12 = a11 * m12 + a12 * m22;
    const double n21 = a21 * m11 + a22 * m21;
    const double n22 = a21 * m12 + a22 * m22;
    m11 = n11; m12 = n12; m21 = n21; m22 = n22;
  }

  // psi_L = e^{ik0 x} + r e^{-ik0 x}, psi_R = t e^{ik0 x}; solve for (r, t).
  const cplx I(0.0, 1.0);
  const cplx eL = std::exp(I * k0 * (-xh));
  const cplx eR = std::exp(I * k0 * (+xh));
  const cplx eLc = std::conj(eL);
  const cplx A11 = m11 * eLc - m12 * I * k0 * eLc, A12 = -eR;
  const cplx A21 = m21 * eLc - m22 * I * k0 * eLc, A22 = -I * k0 * eR;
  const cplx b1 = -(m11 * eL + m12 * I * k0 * eL);
  const cplx b2 = -(m21 * eL + m22 * I * k0 * eL);
  const cplx det = A11 * A22 - A12 * A21;
  const cplx t = (A11 * b2 - A21 * b1) / det;
  return std::norm(t);
}

}  // namespace twistwire
