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

#include "run_record.h"

#include <fstream>
#include <ostream>
#include <string_view>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "cswaug/error.h"

namespace cswaug::tools {
namespace {

constexpr std::string_view kBanner = "# cswaug run record";
constexpr std::string_view kConfigPrefix = "config.";

std::uint64_t Fnv1a(std::string_view bytes, std::uint64_t h) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

RunRecord RunRecord::FromApp(const CLI::App& subcommand) {
  RunRecord record(subcommand.get_name());
  for (const CLI::Option* opt : subcommand.get_options()) {
    const std::string& group = opt->get_group();
    if (group == kOutputGroup || group == kExecutionGroup) continue;
    const std::string name = opt->get_single_name();
    if (name.empty() || name == "help" || name == "config") continue;
    if (opt->get_type_size() == 0) {
      // Flags are recorded by value so a replay can switch them either way.
      record.Add(name, opt->count() > 0 ? "true" : "false");
    } else if (opt->count() > 0) {
      for (const std::string& value : opt->results()) record.Add(name, value);
    } else if (const std::string& d = opt->get_default_str();
               !d.empty() && d != "{}") {
      record.Add(name, d);
    }
  }
  return record;
}

void RunRecord::Add(std::string key, std::string value) {
  entries_.emplace_back(std::move(key), std::move(value));
}

std::string RunRecord::Hash() const {
  std::uint64_t h = Fnv1a(command_, 0xcbf29ce484222325ULL);
  for (const auto& [key, value] : entries_) {
    h = Fnv1a("\n", h);
    h = Fnv1a(key, h);
    h = Fnv1a("=", h);
    h = Fnv1a(value, h);
  }
  return fmt::format("{:016x}", h);
}

void RunRecord::WriteHeader(std::ostream& out) const {
  out << kBanner << '\n';
  out << "# tool_version = " << CSWAUG_VERSION << '\n';
  out << "# command = " << command_ << '\n';
  out << "# config_hash = " << Hash() << '\n';
  for (const auto& [key, value] : entries_) {
    if (key == "seed") out << "# seed = " << value << '\n';
  }
  for (const auto& [key, value] : entries_) {
    out << "# " << kConfigPrefix << key << " = " << value << '\n';
  }
}

std::vector<std::string> ReplayArguments(const std::filesystem::path& output) {
  std::ifstream in(output, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open " + output.string());
  }
  std::string line;
  if (!std::getline(in, line) || line != kBanner) {
    throw Error(ErrorCode::kParseError,
                output.string() + ": no run record at the top of the file");
  }
  std::string command;
  std::vector<std::string> args;
  while (std::getline(in, line) && line.starts_with("# ")) {
    const std::string_view body = std::string_view(line).substr(2);
    const std::size_t eq = body.find(" = ");
    if (eq == std::string_view::npos) continue;
    const std::string_view key = body.substr(0, eq);
    const std::string_view value = body.substr(eq + 3);
    if (key == "command") {
      command = value;
    } else if (key.starts_with(kConfigPrefix)) {
      args.push_back(fmt::format("--{}={}", key.substr(kConfigPrefix.size()), value));
    }
  }
  if (command.empty()) {
    throw Error(ErrorCode::kParseError,
                output.string() + ": run record names no command");
  }
  args.insert(args.begin(), command);
  return args;
}

}  // namespace cswaug::tools
