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

#ifndef TWISTWIRE_MODEL_HPP
#define TWISTWIRE_MODEL_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "twistwire/units.hpp"

namespace twistwire {

/// Physical and geometric parameters of the locally twisted rectangular
/// waveguide with an embedded attractive well.
///
/// The cross-section is L_y x L_z (hard walls), the well is a smooth
/// tanh^2-shaped depression of strength nu and length scale L_p, and the
/// section is rotated by a total angle Phi over a region of length ~4*lambda.
/// pivot_y/pivot_z displace the twist axis from the section center; a nonzero
/// transverse offset breaks the two-fold rotation symmetry of the section and
/// is what couples transmission channels of opposite parity. With the pivot
/// on the center, states built on the (2,1) transverse mode never show up in
/// ground-channel transport.
struct WaveguideSpec {
  double L_y = 20.0;         ///< cross-section width (nm)
  double L_z = 10.0;         ///< cross-section height (nm)
  double mass_ratio = 0.067; ///< effective mass m/m_e
  double nu = 2.95;          ///< well strength (dimensionless, >= 0)
  double L_p = 10.0;         ///< well length scale (nm)
  double Phi = 0.0;          ///< total twist angle (rad)
  double lambda = 17.5;      ///< twist length scale (nm)
  double x_half = 100.0;     ///< half-length of computational domain (nm)
  double pivot_y = 0.0;      ///< twist axis offset along y (nm)
  double pivot_z = 0.3;      ///< twist axis offset along z (nm)

  double kinetic() const { return units::kinetic_factor(mass_ratio); }

  /// Throws std::invalid_argument with a field-qualified message on the
  /// first violated invariant.
  void validate() const;
};

/// Closed-form level bookkeeping of the straight waveguide.
struct LevelTable {
  struct Threshold {
    int n;        ///< channel index, 1-based, sorted by energy
    int n_y, n_z; ///< transverse quantum numbers
    double E;     ///< meV
  };
  struct Bound {
    int j;     ///< 1..ceil(nu)
    double mu; ///< meV, negative
  };
  struct Combined {
    int n, j;
    double eps;          ///< E_n + mu_j (meV)
    bool in_one_channel; ///< lies strictly inside (E_1, E_2)
  };
  std::vector<Threshold> thresholds;
  std::vector<Bound> bound;
  std::vector<Combined> combined;
};

/// Transverse subband threshold (hard-wall rectangle), Eq.-of-motion
/// separable closed form.
double subband_energy(int n_y, int n_z, const WaveguideSpec& spec);

/// Longitudinal confining well V(x) <= 0, in meV.
double potential_value(double x, const WaveguideSpec& spec);

/// Exact bound levels mu_j of the well, j = 1..ceil(nu); empty for nu <= 0.
std::vector<double> bound_levels(const WaveguideSpec& spec);

/// Enumerates thresholds E_n <= E_max and combined levels eps_{n,j} <= E_max.
LevelTable level_table(const WaveguideSpec& spec, double E_max);

/// Transmission probability |t|^2 of the 1D problem with the well, computed
/// by a piecewise-constant transfer-matrix integration over [-x_half, x_half].
/// Independent oracle for the separable straight-guide 3D result.
/// E_kin is the kinetic energy above the channel threshold, > 0.
double reference_transmission_1d(double E_kin, const WaveguideSpec& spec,
                                 double step = 0.02);

}  // namespace twistwire

#endif
