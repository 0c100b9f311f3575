/* Copyright 2026 The aafl Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Loader shared by the Kripke and action-model JSON formats.

#ifndef AAFL_SRC_MODEL_JSON_HPP_
#define AAFL_SRC_MODEL_JSON_HPP_

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aafl/common.hpp"
#include "json.hpp"

namespace aafl::detail {

struct RawModel {
  AgentSet agents;
  std::vector<std::string> states;
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> relations;
  std::vector<std::string> points;
  nlohmann::json payload;  // "valuation" or "pre"; null when absent
};

RawModel parse_raw_model(std::string_view text, const std::string& payload_key);

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace aafl::detail

#endif  // AAFL_SRC_MODEL_JSON_HPP_
