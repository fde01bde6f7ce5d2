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

#ifndef CSWAUG_TYPES_H_
#define CSWAUG_TYPES_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cswaug {

// Language identity of a single token. Matrix is the language providing the
// sentence frame (Arabic script), Embedded the inserted one (Latin script).
enum class Lang { kMatrix, kEmbedded, kOther };

std::string_view LangName(Lang lang);

struct Token {
  std::string surface;
  Lang lang = Lang::kOther;

  friend bool operator==(const Token&, const Token&) = default;
};

struct SentencePair {
  std::string id;
  std::vector<Token> source;  // matrix-language side
  std::vector<Token> target;  // embedded-language side
};

enum class Strategy { kDict, kRand, kPred, kEcRand, kEcSpf, kMlRand, kMlSpf, kBt };

inline constexpr Strategy kAllStrategies[] = {
    Strategy::kDict,  Strategy::kRand,   Strategy::kPred,  Strategy::kEcRand,
    Strategy::kEcSpf, Strategy::kMlRand, Strategy::kMlSpf, Strategy::kBt};

// Lower-case, dash-separated names ("ec-spf") used on the command line, in
// generation files and as technique keys in score tables.
std::string_view StrategyName(Strategy strategy);
std::optional<Strategy> ParseStrategy(std::string_view name);

// One synthetic code-switched sentence with its provenance.
struct Generation {
  std::string id;
  std::vector<Token> tokens;
  Strategy strategy = Strategy::kDict;
  std::vector<std::size_t> replaced_src_positions;  // sorted, unique
  double spf = 0.0;

  std::string Text() const;
};

std::string JoinSurfaces(std::span<const Token> tokens);
std::vector<std::string> Surfaces(std::span<const Token> tokens);

}  // namespace cswaug

#endif  // CSWAUG_TYPES_H_
