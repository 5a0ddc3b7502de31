// Copyright 2025-2026 The qwork developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Trajectory dump format: CSV with header `x_bits,y_bits`, bitstrings as
 * 0/1 text with qubit 0 leftmost. Readable back for post-processing of
 * externally produced samples.
 */

#pragma once

#include <span>
#include <string>
#include <vector>

#include "qwork/sim.hpp"

namespace qwork::sample_io {

void dump_samples(const std::string &path, std::span<const sim::TPMSample> samples);

/// Parses a sample dump; malformed rows are reported with their line number.
std::vector<sim::TPMSample> load_samples(const std::string &path);

} // namespace qwork::sample_io
