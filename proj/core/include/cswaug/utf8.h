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

#ifndef CSWAUG_UTF8_H_
#define CSWAUG_UTF8_H_

#include <string>
#include <string_view>

namespace cswaug::utf8 {

inline constexpr char32_t kReplacementChar = 0xFFFD;

// Decodes UTF-8. Malformed sequences, overlongs, surrogates and values above
// U+10FFFF each decode to U+FFFD, so the function is total.
std::u32string Decode(std::string_view bytes);

void Append(char32_t cp, std::string& out);
std::string Encode(std::u32string_view cps);

}  // namespace cswaug::utf8

#endif  // CSWAUG_UTF8_H_
