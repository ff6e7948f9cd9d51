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

#ifndef UAVNOMA_ERRORS_HPP
#define UAVNOMA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace uavnoma {

/// Argument outside the mathematical domain of a model (negative distance,
/// altitude outside a LoS model's validity range, ...).
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// Malformed or inconsistent run configuration. `where` names the offending
/// field ("section.key") or line, when known.
class ConfigError : public std::runtime_error
{
public:
    explicit ConfigError(const std::string& what, std::string where = {})
        : std::runtime_error(where.empty() ? what : where + ": " + what), where_(std::move(where))
    {
    }

    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

/// A numerical routine (adaptive quadrature) failed to reach its tolerance.
class NumericalError : public std::runtime_error
{
public:
    NumericalError(const std::string& what, double achieved_error)
        : std::runtime_error(what + " (achieved error estimate " + std::to_string(achieved_error) + ")"),
          achieved_error_(achieved_error)
    {
    }

    double achieved_error() const noexcept { return achieved_error_; }

private:
    double achieved_error_;
};

} // namespace uavnoma

#endif
