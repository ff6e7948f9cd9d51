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

#include "uavnoma/quadrature.hpp"

#include "uavnoma/errors.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace uavnoma::numeric {

namespace {

// Kronrod abscissae on [0,1); odd indices are shared with the 7-point Gauss rule.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Panel
{
    double a, b, value, error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod_15(const std::function<double(double)>& f, double a, double b)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kKronrodWeights[7];
    double gauss = fc * kGaussWeights[3];
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kNodes[i];
        const double pair = f(center - dx) + f(center + dx);
        kronrod += kKronrodWeights[i] * pair;
        if (i % 2 == 1)
            gauss += kGaussWeights[i / 2] * pair;
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::fabs(kronrod - gauss)};
}

} // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureOptions& options)
{
    if (a == b)
        return {};
    if (b < a) {
        auto flipped = integrate_adaptive(f, b, a, options);
        flipped.value = -flipped.value;
        return flipped;
    }

    std::priority_queue<Panel> panels;
    Panel first = gauss_kronrod_15(f, a, b);
    double value = first.value;
    double error = first.error;
    panels.push(first);
    if (!std::isfinite(value) || !std::isfinite(error))
        throw NumericalError("adaptive quadrature produced a non-finite value", error);

    auto tolerance = [&] { return std::max(options.abs_tol, options.rel_tol * std::fabs(value)); };

    while (error > tolerance()) {
        if (static_cast<int>(panels.size()) >= options.max_subintervals)
            throw NumericalError("adaptive quadrature did not converge", error);
        Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = gauss_kronrod_15(f, worst.a, mid);
        Panel right = gauss_kronrod_15(f, mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
        if (!std::isfinite(value) || !std::isfinite(error))
            throw NumericalError("adaptive quadrature produced a non-finite value", error);
    }

    // Re-sum from the panels so that running-update rounding does not accumulate.
    QuadratureResult result;
    result.subintervals = static_cast<int>(panels.size());
    while (!panels.empty()) {
        result.value += panels.top().value;
        result.error += panels.top().error;
        panels.pop();
    }
    return result;
}

} // namespace uavnoma::numeric
