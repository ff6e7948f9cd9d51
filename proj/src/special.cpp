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

#include "uavnoma/special.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace uavnoma::numeric {

namespace {

constexpr int kMaxFactorial = 170;

void check_args(int s, double x)
{
    if (s < 1)
        throw std::domain_error("incomplete gamma: shape must be a positive integer, got " + std::to_string(s));
    if (!(x >= 0.0))
        throw std::domain_error("incomplete gamma: argument must be nonnegative");
}

// sum_{k=0}^{s-1} exp(log_scale - x) x^k / k!
double partial_poisson_sum(int s, double x, double log_scale)
{
    if (x == 0.0)
        return std::exp(log_scale);
    if (x < 500.0 && std::fabs(log_scale) < 500.0) {
        double term = 1.0;
        double sum = 1.0;
        for (int k = 1; k < s; ++k) {
            term *= x / k;
            sum += term;
        }
        return std::exp(log_scale - x) * sum;
    }
    const double log_x = std::log(x);
    double sum = 0.0;
    for (int k = 0; k < s; ++k)
        sum += std::exp(log_scale - x + k * log_x - std::lgamma(k + 1.0));
    return sum;
}

} // namespace

double factorial(int n)
{
    if (n < 0)
        throw std::domain_error("factorial of a negative integer");
    if (n > kMaxFactorial)
        throw std::overflow_error("factorial overflows double precision for n = " + std::to_string(n));
    double f = 1.0;
    for (int k = 2; k <= n; ++k)
        f *= k;
    return f;
}

double upper_gamma_int(int s, double x)
{
    check_args(s, x);
    return factorial(s - 1) * partial_poisson_sum(s, x, 0.0);
}

double regularized_upper_gamma_int(int s, double x)
{
    check_args(s, x);
    return partial_poisson_sum(s, x, 0.0);
}

double scaled_regularized_upper_gamma_int(int s, double x, double log_scale)
{
    check_args(s, x);
    return partial_poisson_sum(s, x, log_scale);
}

double regularized_lower_gamma_int(int s, double x)
{
    check_args(s, x);
    if (x == 0.0)
        return 0.0;
    if (x >= s + 1.0)
        return 1.0 - partial_poisson_sum(s, x, 0.0);
    // e^{-x} sum_{k>=s} x^k / k!; terms decrease monotonically once k > x.
    double term = std::exp(-x + s * std::log(x) - std::lgamma(s + 1.0));
    double sum = term;
    for (int k = s + 1; k < s + 1000; ++k) {
        term *= x / k;
        sum += term;
        if (term < sum * 1e-17)
            break;
    }
    return sum;
}

} // namespace uavnoma::numeric
