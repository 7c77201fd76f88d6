// Copyright 2026 The fleetmatch Authors
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

#include "fleetmatch/normalize.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>

namespace fleetmatch {
namespace {

// Folds one Unicode codepoint to its ASCII base form. Covers Latin-1
// Supplement and Latin Extended-A, which is what the covered registries use.
// Anything else is treated as punctuation.
const char* fold_codepoint(std::uint32_t cp) {
  switch (cp) {
    case 0x00C0: case 0x00C1: case 0x00C2: case 0x00C3: case 0x00C4:
    case 0x00C5: case 0x00E0: case 0x00E1: case 0x00E2: case 0x00E3:
    case 0x00E4: case 0x00E5: case 0x0100: case 0x0101: case 0x0102:
    case 0x0103: case 0x0104: case 0x0105:
      return "a";
    case 0x00C6: case 0x00E6:
      return "ae";
    case 0x00C7: case 0x00E7: case 0x0106: case 0x0107: case 0x0108:
    case 0x0109: case 0x010A: case 0x010B: case 0x010C: case 0x010D:
      return "c";
    case 0x010E: case 0x010F: case 0x0110: case 0x0111: case 0x00D0:
    case 0x00F0:
      return "d";
    case 0x00C8: case 0x00C9: case 0x00CA: case 0x00CB: case 0x00E8:
    case 0x00E9: case 0x00EA: case 0x00EB: case 0x0112: case 0x0113:
    case 0x0114: case 0x0115: case 0x0116: case 0x0117: case 0x0118:
    case 0x0119: case 0x011A: case 0x011B:
      return "e";
    case 0x011C: case 0x011D: case 0x011E: case 0x011F: case 0x0120:
    case 0x0121: case 0x0122: case 0x0123:
      return "g";
    case 0x0124: case 0x0125: case 0x0126: case 0x0127:
      return "h";
    case 0x00CC: case 0x00CD: case 0x00CE: case 0x00CF: case 0x00EC:
    case 0x00ED: case 0x00EE: case 0x00EF: case 0x0128: case 0x0129:
    case 0x012A: case 0x012B: case 0x012C: case 0x012D: case 0x012E:
    case 0x012F: case 0x0130: case 0x0131:
      return "i";
    case 0x0134: case 0x0135:
      return "j";
    case 0x0136: case 0x0137:
      return "k";
    case 0x0139: case 0x013A: case 0x013B: case 0x013C: case 0x013D:
    case 0x013E: case 0x013F: case 0x0140: case 0x0141: case 0x0142:
      return "l";
    case 0x00D1: case 0x00F1: case 0x0143: case 0x0144: case 0x0145:
    case 0x0146: case 0x0147: case 0x0148:
      return "n";
    case 0x00D2: case 0x00D3: case 0x00D4: case 0x00D5: case 0x00D6:
    case 0x00D8: case 0x00F2: case 0x00F3: case 0x00F4: case 0x00F5:
    case 0x00F6: case 0x00F8: case 0x014C: case 0x014D: case 0x014E:
    case 0x014F: case 0x0150: case 0x0151:
      return "o";
    case 0x0152: case 0x0153:
      return "oe";
    case 0x0154: case 0x0155: case 0x0156: case 0x0157: case 0x0158:
    case 0x0159:
      return "r";
    case 0x015A: case 0x015B: case 0x015C: case 0x015D: case 0x015E:
    case 0x015F: case 0x0160: case 0x0161:
      return "s";
    case 0x00DF:
      return "ss";
    case 0x0162: case 0x0163: case 0x0164: case 0x0165: case 0x0166:
    case 0x0167:
      return "t";
    case 0x00D9: case 0x00DA: case 0x00DB: case 0x00DC: case 0x00F9:
    case 0x00FA: case 0x00FB: case 0x00FC: case 0x0168: case 0x0169:
    case 0x016A: case 0x016B: case 0x016C: case 0x016D: case 0x016E:
    case 0x016F: case 0x0170: case 0x0171: case 0x0172: case 0x0173:
      return "u";
    case 0x0174: case 0x0175:
      return "w";
    case 0x00DD: case 0x00FD: case 0x00FF: case 0x0176: case 0x0177:
    case 0x0178:
      return "y";
    case 0x0179: case 0x017A: case 0x017B: case 0x017C: case 0x017D:
    case 0x017E:
      return "z";
    default:
      return nullptr;
  }
}

// Decodes the UTF-8 sequence starting at text[i]; advances i past it.
// Malformed bytes decode as one replacement codepoint each.
std::uint32_t next_codepoint(std::string_view text, std::size_t& i) {
  const auto byte = [&](std::size_t k) {
    return static_cast<std::uint32_t>(static_cast<unsigned char>(text[k]));
  };
  std::uint32_t b0 = byte(i);
  if (b0 < 0x80) {
    i += 1;
    return b0;
  }
  if ((b0 >> 5) == 0x6 && i + 1 < text.size()) {
    std::uint32_t cp = ((b0 & 0x1F) << 6) | (byte(i + 1) & 0x3F);
    i += 2;
    return cp;
  }
  if ((b0 >> 4) == 0xE && i + 2 < text.size()) {
    std::uint32_t cp =
        ((b0 & 0x0F) << 12) | ((byte(i + 1) & 0x3F) << 6) | (byte(i + 2) & 0x3F);
    i += 3;
    return cp;
  }
  if ((b0 >> 3) == 0x1E && i + 3 < text.size()) {
    std::uint32_t cp = ((b0 & 0x07) << 18) | ((byte(i + 1) & 0x3F) << 12) |
                       ((byte(i + 2) & 0x3F) << 6) | (byte(i + 3) & 0x3F);
    i += 4;
    return cp;
  }
  i += 1;
  return 0xFFFD;
}

}  // namespace

StopTokens::StopTokens(const std::vector<std::string>& tokens)
    : tokens_(tokens.begin(), tokens.end()) {}

bool StopTokens::contains(std::string_view token) const {
  return tokens_.find(std::string(token)) != tokens_.end();
}

const std::vector<std::string>& StopTokens::default_tokens() {
  static const std::vector<std::string> kDefaults = {
      // generic plant words
      "power", "plant", "plants", "station", "powerplant", "powerstation",
      "generating", "generation", "energy", "electric", "electricity",
      // de
      "kraftwerk", "kraftwerke", "heizkraftwerk", "gemeinschaftskraftwerk",
      "energie",
      // fr
      "centrale", "centrales", "usine",
      // es / it / pt
      "central", "centrais", "impianto", "termica", "termoelectrica",
      // nl
      "elektriciteitscentrale",
      // pl / cz / sk
      "elektrownia", "elektrarna", "elektraren",
      // scandinavian
      "kraftverk", "kraftvaerk", "verket",
      // legal suffixes
      "gmbh", "ag", "kg", "sa", "spa", "srl", "bv", "nv", "as", "ab", "oy",
      "plc", "ltd", "co", "se", "sarl",
  };
  return kDefaults;
}

const StopTokens& StopTokens::defaults() {
  static const StopTokens kInstance(default_tokens());
  return kInstance;
}

std::string canonical_name(std::string_view raw, const StopTokens& stops) {
  // Pass 1: lowercase, fold diacritics, map punctuation to spaces.
  std::string folded;
  folded.reserve(raw.size());
  std::size_t i = 0;
  while (i < raw.size()) {
    std::uint32_t cp = next_codepoint(raw, i);
    if (cp < 0x80) {
      char c = static_cast<char>(cp);
      if (std::isalnum(static_cast<unsigned char>(c))) {
        folded.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
      } else {
        folded.push_back(' ');
      }
    } else if (const char* base = fold_codepoint(cp)) {
      folded.append(base);
    } else {
      folded.push_back(' ');
    }
  }

  // Pass 2: tokenize, drop stop tokens, rejoin with single spaces.
  std::string out;
  std::size_t pos = 0;
  while (pos < folded.size()) {
    while (pos < folded.size() && folded[pos] == ' ') ++pos;
    std::size_t start = pos;
    while (pos < folded.size() && folded[pos] != ' ') ++pos;
    if (pos > start) {
      std::string_view token(folded.data() + start, pos - start);
      if (!stops.contains(token)) {
        if (!out.empty()) out.push_back(' ');
        out.append(token);
      }
    }
  }
  return out;
}

std::vector<std::string> name_tokens(std::string_view canonical) {
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  while (pos < canonical.size()) {
    while (pos < canonical.size() && canonical[pos] == ' ') ++pos;
    std::size_t start = pos;
    while (pos < canonical.size() && canonical[pos] != ' ') ++pos;
    if (pos > start) tokens.emplace_back(canonical.substr(start, pos - start));
  }
  return tokens;
}

NameKey make_name_key(std::string_view raw, const StopTokens& stops) {
  NameKey key;
  key.canonical = canonical_name(raw, stops);
  key.tokens = name_tokens(key.canonical);
  std::sort(key.tokens.begin(), key.tokens.end());
  key.tokens.erase(std::unique(key.tokens.begin(), key.tokens.end()), key.tokens.end());
  return key;
}

}  // namespace fleetmatch
