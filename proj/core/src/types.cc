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

#include "cswaug/types.h"

namespace cswaug {

std::string_view LangName(Lang lang) {
  switch (lang) {
    case Lang::kMatrix: return "Matrix";
    case Lang::kEmbedded: return "Embedded";
    case Lang::kOther: return "Other";
  }
  return "Other";
}

std::string_view StrategyName(Strategy strategy) {
  switch (strategy) {
    case Strategy::kDict: return "dict";
    case Strategy::kRand: return "rand";
    case Strategy::kPred: return "pred";
    case Strategy::kEcRand: return "ec-rand";
    case Strategy::kEcSpf: return "ec-spf";
    case Strategy::kMlRand: return "ml-rand";
    case Strategy::kMlSpf: return "ml-spf";
    case Strategy::kBt: return "bt";
  }
  return "dict";
}

std::optional<Strategy> ParseStrategy(std::string_view name) {
  for (Strategy s : kAllStrategies) {
    if (StrategyName(s) == name) return s;
  }
  return std::nullopt;
}

std::string Generation::Text() const { return JoinSurfaces(tokens); }

std::string JoinSurfaces(std::span<const Token> tokens) {
  std::string out;
  for (const Token& t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += t.surface;
  }
  return out;
}

std::vector<std::string> Surfaces(std::span<const Token> tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const Token& t : tokens) out.push_back(t.surface);
  return out;
}

}  // namespace cswaug
