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

#ifndef TWISTWIRE_UNITS_HPP
#define TWISTWIRE_UNITS_HPP

#include <complex>

namespace twistwire {

using cplx = std::complex<double>;

/// Energies are meV, lengths nm, times ps throughout.
namespace units {

/// hbar^2/(2 m_e) = 3.80998 eV A^2 expressed in meV nm^2.
inline constexpr double hbar2_over_2me = 38.0998;

/// hbar in meV ps, used for lifetime conversion.
inline constexpr double hbar_mev_ps = 0.658212;

/// Kinetic prefactor hbar^2/(2m) in meV nm^2 for a given effective-mass ratio.
inline constexpr double kinetic_factor(double mass_ratio) {
  return hbar2_over_2me / mass_ratio;
}

}  // namespace units
}  // namespace twistwire

#endif
