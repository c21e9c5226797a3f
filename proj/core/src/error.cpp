// Copyright 2026 The LaSSIM Toolkit Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lassim/error.hpp"

#include <utility>

namespace lassim {
namespace {

std::string with_offset(const std::string& reason, std::size_t offset) {
  if (offset == DecodeError::npos) return "decode error: " + reason;
  return "decode error at byte " + std::to_string(offset) + ": " + reason;
}

}  // namespace

DecodeError::DecodeError(const std::string& reason, std::size_t offset)
    : Error(with_offset(reason, offset)), offset_(offset) {}

LevelTooDeepError::LevelTooDeepError(int requested, int max_level,
                                     const std::string& detail)
    : Error("pyramid level " + std::to_string(requested) + " is too deep: " +
            detail +
            (max_level >= 0
                 ? " (max admissible level is " + std::to_string(max_level) + ")"
                 : " (no level is admissible for this image size)")),
      requested_(requested),
      max_level_(max_level) {}

IngestionError::IngestionError(const std::string& what,
                               std::vector<std::string> failures)
    : Error(what), failures_(std::move(failures)) {}

}  // namespace lassim
