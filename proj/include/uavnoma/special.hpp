// uavnoma: aerial-terrestrial uplink NOMA rate-coverage analysis
// Copyright (C) 2026 The uavnoma Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef UAVNOMA_SPECIAL_HPP
#define UAVNOMA_SPECIAL_HPP

// Incomplete gamma function restricted to positive integer shape, where the
// finite series
//
//     Gamma(s, x) = (s-1)! e^{-x} sum_{k=0}^{s-1} x^k / k!
//
// is exact. Nakagami shapes are integers throughout this library, so no
// general continued-fraction routine is needed.

namespace uavnoma::numeric {

/// n! as a double. Throws std::overflow_error past 170!.
double factorial(int n);

/// Upper incomplete gamma Gamma(s, x) for integer s >= 1, x >= 0.
/// Throws std::domain_error for s < 1 or x < 0, std::overflow_error when
/// (s-1)! is not representable.
double upper_gamma_int(int s, double x);

/// Regularized upper incomplete gamma Q(s, x) = Gamma(s, x) / (s-1)!.
double regularized_upper_gamma_int(int s, double x);

/// exp(log_scale) * Q(s, x), evaluated term by term so that a large positive
/// log_scale cancels against e^{-x} without overflow.
double scaled_regularized_upper_gamma_int(int s, double x, double log_scale);

/// Regularized lower incomplete gamma P(s, x) = 1 - Q(s, x). Uses the
/// convergent tail series for small x so the result keeps relative accuracy
/// near zero.
double regularized_lower_gamma_int(int s, double x);

} // namespace uavnoma::numeric

#endif
