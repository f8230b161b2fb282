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

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace uam {

using CsvCell = std::variant<double, std::int64_t, std::string>;

/// Numbers use 9 significant digits ("%.9g"); strings are quoted when needed.
std::string format_cell(const CsvCell& cell);

/// Header plus rows with a fixed column count.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);

    /// Throws std::invalid_argument when the row width differs from the header.
    void add(std::vector<CsvCell> row);

    [[nodiscard]] const std::vector<std::string>& header() const { return header_; }
    [[nodiscard]] std::size_t rows() const { return rows_.size(); }
    [[nodiscard]] std::string str() const;
    /// Creates parent directories as needed.
    void write(const std::filesystem::path& path) const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<CsvCell>> rows_;
};

} // namespace uam
