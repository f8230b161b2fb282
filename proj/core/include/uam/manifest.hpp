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
#include <string_view>
#include <vector>

namespace uam {

/// Library version string.
const char* version();

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes);

/// Run record written when a run starts and rewritten when it ends.
class RunManifest {
public:
    /// Writes the initial record (status "running") to `path` immediately.
    RunManifest(std::filesystem::path path, std::string command, std::string config_json, std::uint64_t seed);

    void add_output(const std::filesystem::path& file);
    /// Rewrites the record with the end timestamp and final status.
    void finish(bool ok, std::string_view error = {});

    [[nodiscard]] std::uint64_t config_hash() const { return hash_; }
    [[nodiscard]] const std::vector<std::string>& outputs() const { return outputs_; }

private:
    void write(std::string_view status, std::string_view error) const;

    std::filesystem::path path_;
    std::string command_;
    std::string config_;
    std::uint64_t seed_;
    std::uint64_t hash_;
    std::string started_;
    std::string finished_;
    std::vector<std::string> outputs_;
};

} // namespace uam
