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

#ifndef AAFL_COMMON_HPP_
#define AAFL_COMMON_HPP_

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace aafl {

enum class FrameClass { K, K45, S5 };

std::string to_string(FrameClass c);
// Accepts "k", "k45", "s5" in any case.
FrameClass parse_frame_class(std::string_view text);

using AgentSet = std::set<std::string>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad model files, unknown agents, shape mismatches.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& msg, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// A normal-form construction gave up (explicit form split budget).
class NotConverted : public Error {
 public:
  using Error::Error;
};

// The prover or a rewriting pass ran past its node budget.
class ResourceExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace aafl

#endif  // AAFL_COMMON_HPP_
