//
// Copyright 2026 The cswaug Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef CSWAUG_TOOLS_RUN_RECORD_H_
#define CSWAUG_TOOLS_RUN_RECORD_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace CLI {
class App;
}

namespace cswaug::tools {

// Option groups that never enter a run record: where results go and how
// many threads compute them do not change the bytes produced.
inline constexpr char kOutputGroup[] = "Outputs";
inline constexpr char kExecutionGroup[] = "Execution";

// The replayable description of one invocation. Every output file starts
// with it as a block of "# key = value" lines.
class RunRecord {
 public:
  RunRecord() = default;
  explicit RunRecord(std::string command) : command_(std::move(command)) {}

  // Captures every option of a parsed subcommand except the two groups above.
  static RunRecord FromApp(const CLI::App& subcommand);

  const std::string& command() const { return command_; }
  const std::vector<std::pair<std::string, std::string>>& entries() const {
    return entries_;
  }
  void Add(std::string key, std::string value);

  // FNV-1a 64 over the command and the ordered entries, as 16 hex digits.
  std::string Hash() const;

  void WriteHeader(std::ostream& out) const;

 private:
  std::string command_;
  std::vector<std::pair<std::string, std::string>> entries_;
};

// Reads the header of an earlier output and rebuilds the argument list that
// produced it: {command, "--key=value", ...}.
std::vector<std::string> ReplayArguments(const std::filesystem::path& output);

}  // namespace cswaug::tools

#endif  // CSWAUG_TOOLS_RUN_RECORD_H_
