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

#ifndef UAVNOMA_CSV_HPP
#define UAVNOMA_CSV_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace uavnoma::csv {

/// Shortest representation that round-trips, '.' decimal separator, no
/// locale dependence. Integral values print without a fraction ("25").
std::string format_double(double value);

/// Joins fields with ',' and terminates with '\n'.
void write_row(std::ostream& out, const std::vector<std::string>& fields);

/// Splits on ',' and trims surrounding blanks. No quoting support; the
/// formats in this project never contain commas inside fields.
std::vector<std::string> split_line(std::string_view line);

/// Strict double parse of a whole field; throws std::invalid_argument.
double parse_double(std::string_view field);

} // namespace uavnoma::csv

#endif
