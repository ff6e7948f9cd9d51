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

#ifndef UAVNOMA_UNITS_HPP
#define UAVNOMA_UNITS_HPP

// Decibel conversions. Everything past the config/report boundary is linear SI.

namespace uavnoma::units {

double db_to_linear(double db);
double linear_to_db(double linear);
double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

/// Attenuation quoted as a positive dB loss, returned as a multiplicative gain
/// in (0, 1]: 13 dB -> 10^(-1.3).
double attenuation_db_to_gain(double loss_db);

} // namespace uavnoma::units

#endif
