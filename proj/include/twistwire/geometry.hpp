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

#ifndef TWISTWIRE_GEOMETRY_HPP
#define TWISTWIRE_GEOMETRY_HPP

#include <array>

namespace twistwire {

/// Rotation-angle profile of the local twist: phi rises from 0 to Phi over a
/// region of length ~4*lambda around the origin. Equivalently phi = Phi*alpha
/// with alpha(x) = [erf(x/lambda)+1]/2.
struct TwistProfile {
  double Phi = 0.0;
  double lambda = 17.5;
};

using Mat3 = std::array<std::array<double, 3>, 3>;
using Vec3 = std::array<double, 3>;

/// Metric data of the twist map at one point, in coordinates (x, y, z) where
/// (y, z) are measured from the twist axis.
struct MetricSample {
  Mat3 G;        ///< covariant metric, det G = 1
  Mat3 G_inv;    ///< contravariant metric
  double sqrt_det; ///< 1 for a pure section rotation
  Vec3 drift;    ///< first-derivative coefficients d_j = sum_i d_i G^{ij}
};

/// phi(x) = (Phi/2)[erf(x/lambda)+1]
double twist_angle(double x, const TwistProfile& profile);

/// phi'(x) = Phi/(lambda sqrt(pi)) exp(-x^2/lambda^2)
double twist_rate(double x, const TwistProfile& profile);

/// phi''(x)
double twist_rate_deriv(double x, const TwistProfile& profile);

/// Image of (x, y, z) under the twist map: the cross-section plane at x is
/// rotated by phi(x). y, z relative to the twist axis.
Vec3 map_point(double x, double y, double z, const TwistProfile& profile);

/// Closed-form metric of the twist map at (x, y, z); y, z relative to the
/// twist axis. drift is evaluated analytically, not by differencing G.
MetricSample metric_at(double x, double y, double z, const TwistProfile& profile);

/// G built from the numeric Jacobian of map_point (central differences,
/// step h); validation path for the closed form.
Mat3 metric_from_jacobian(double x, double y, double z, const TwistProfile& profile,
                          double h = 1e-5);

}  // namespace twistwire

#endif
