// Copyright 2026 The sccpda Authors
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

#ifndef SCCPDA_TOOLS_CLI_H_
#define SCCPDA_TOOLS_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "sccpda/pda.h"
#include "sccpda/scheme.h"

namespace sccpda::cli {

inline constexpr int kExitOk = 0;
// A check the command performs did not pass.
inline constexpr int kExitCheckFailed = 1;
// Bad arguments, unreadable inputs or inconsistent parameters.
inline constexpr int kExitUsage = 2;

// "mn:L,t" or the path of a PDA text file.
absl::StatusOr<Pda> LoadPdaSource(const std::string& source);

// "a,b,c" as integers.
absl::StatusOr<std::vector<int>> ParseIntList(const std::string& text);

// Everything needed to rebuild a simulated run. Serialized as
// manifest.json in the run directory.
struct RunManifest {
  std::string version;
  std::string command_line;
  std::uint64_t seed = 0;
  std::string pda_source;
  std::string pda_text;
  std::vector<int> profile;     // raw per-cache loads, empty if not given
  std::vector<int> assignment;  // 0-based cache of every user
  int num_files = 0;
  std::size_t file_bytes = 0;
  int field_bits = 8;
  std::uint32_t field_polynomial = 0x11B;
  std::string demand_spec;  // "worst-case" or the list as given
  std::vector<int> demands;  // 0-based
  std::string library_dir;   // empty for a synthetic library
  bool strip_pads = false;
  bool full_payloads = false;
};

std::string ManifestToJson(const RunManifest& m);
absl::StatusOr<RunManifest> ManifestFromJson(const std::string& text);

struct BuiltRun {
  Library library;
  Session session;
};

// Places (and, when `deliver` is set, delivers) exactly as the manifest
// says. Same manifest, same bytes.
absl::StatusOr<BuiltRun> BuildRun(const RunManifest& m, bool deliver);

// One line per transmission: pair, participants as user:row, payload hex.
std::string TransmissionLog(const Session& session, bool full_payloads);

// Entry point. Writes human output to `out` and diagnostics to `err`.
int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace sccpda::cli

#endif  // SCCPDA_TOOLS_CLI_H_
