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

#ifndef UAVNOMA_QUADRATURE_HPP
#define UAVNOMA_QUADRATURE_HPP

#include <functional>

namespace uavnoma::numeric {

struct QuadratureResult
{
    double value = 0.0;
    double error = 0.0;     ///< Kronrod-Gauss difference summed over panels.
    int subintervals = 0;
};

struct QuadratureOptions
{
    double abs_tol = 1e-8;
    double rel_tol = 0.0;
    int max_subintervals = 4000;
};

/// Globally adaptive 15-point Gauss-Kronrod integration of f over the finite
/// interval [a, b]: the panel with the largest error estimate is bisected until
/// the summed estimate meets max(abs_tol, rel_tol * |value|).
///
/// Throws NumericalError carrying the achieved error estimate if the panel
/// budget runs out first.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureOptions& options = {});

} // namespace uavnoma::numeric

#endif
