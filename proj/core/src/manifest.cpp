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

#include "uam/manifest.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace uam {

namespace {

std::string utc_now()
{
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string hex64(std::uint64_t v)
{
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

} // namespace

const char* version() { return UAMNET_VERSION; }

std::uint64_t fnv1a64(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

RunManifest::RunManifest(std::filesystem::path path, std::string command, std::string config_json,
                         std::uint64_t seed)
    : path_(std::move(path)), command_(std::move(command)), config_(std::move(config_json)), seed_(seed),
      hash_(fnv1a64(config_)), started_(utc_now())
{
    write("running", {});
}

void RunManifest::add_output(const std::filesystem::path& file) { outputs_.push_back(file.filename().string()); }

void RunManifest::finish(bool ok, std::string_view error)
{
    finished_ = utc_now();
    write(ok ? "ok" : "failed", error);
}

void RunManifest::write(std::string_view status, std::string_view error) const
{
    nlohmann::json j;
    j["command"] = command_;
    j["version"] = version();
    j["seed"] = seed_;
    j["config_hash"] = hex64(hash_);
    j["started"] = started_;
    j["finished"] = finished_.empty() ? nlohmann::json(nullptr) : nlohmann::json(finished_);
    j["status"] = status;
    if (!error.empty())
        j["error"] = error;
    j["outputs"] = outputs_;
    j["config"] = nlohmann::json::parse(config_, nullptr, false);
    if (path_.has_parent_path())
        std::filesystem::create_directories(path_.parent_path());
    std::ofstream out(path_);
    if (!out)
        throw std::runtime_error("cannot write manifest " + path_.string());
    out << j.dump(2) << '\n';
}

} // namespace uam
