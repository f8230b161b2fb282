// SPDX-FileCopyrightText: Copyright (c) 2026 The uamnet Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "uam/csv.hpp"
#include "uam/scenario.hpp"

namespace uam::cli {

struct NamedTable {
    /// File name relative to the output directory.
    std::string file;
    CsvTable table;
};

/// Tables to write plus key/value lines printed to stdout.
struct CommandResult {
    std::vector<NamedTable> tables;
    std::vector<std::pair<std::string, std::string>> scalars;
};

/// SINR thresholds (dB) used by every coverage curve.
std::vector<double> threshold_grid_db();
/// UAM heights used by every height curve.
std::vector<double> height_grid_m();

CommandResult blockage_audit(const ScenarioConfig& cfg, std::size_t links);
CommandResult analytics_tables(const ScenarioConfig& cfg);
CommandResult tilt_table(const ScenarioConfig& cfg);
CommandResult coverage(const ScenarioConfig& cfg, double threshold_db);
CommandResult simulate(const ScenarioConfig& cfg, std::size_t seeds);
CommandResult sweep_table(const ScenarioConfig& cfg, const std::string& parameter, const std::vector<double>& grid);

struct StackStep {
    std::string name;
    Toggles toggles;
};
/// Cumulative proposals: baseline, tilt, tilt + multi-layer reuse, full stack with master.
const std::vector<StackStep>& proposal_stack();

const std::vector<std::string>& figure_ids();
/// Throws std::invalid_argument for an id outside figure_ids().
CommandResult reproduce(const std::string& id, const ScenarioConfig& cfg, std::size_t seeds);

/// Writes every table under dir and returns the written paths in order.
std::vector<std::filesystem::path> write_tables(const CommandResult& result, const std::filesystem::path& dir);

} // namespace uam::cli
