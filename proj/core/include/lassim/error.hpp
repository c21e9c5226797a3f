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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lassim {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed PNG/PPM stream. `offset` is the byte position where decoding
// stopped, or npos when the underlying codec does not report one.
class DecodeError : public Error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  DecodeError(const std::string& reason, std::size_t offset = npos);

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class UnsupportedFormatError : public Error {
 public:
  using Error::Error;
};

class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// Two images (or an image and a field) that must agree on dimensions do not.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Image too small for the requested filter, window or decimation.
class DegenerateSizeError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class CorruptPyramidError : public Error {
 public:
  using Error::Error;
};

// The level-l residual is smaller than the SSIM window.
class LevelTooDeepError : public Error {
 public:
  LevelTooDeepError(int requested, int max_level, const std::string& detail);

  int requested_level() const noexcept { return requested_; }
  // -1 when no level is admissible at all.
  int max_admissible_level() const noexcept { return max_level_; }

 private:
  int requested_;
  int max_level_;
};

class BinningMismatchError : public Error {
 public:
  using Error::Error;
};

class EmptyInputError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// No usable image could be read from a source directory.
class IngestionError : public Error {
 public:
  IngestionError(const std::string& what, std::vector<std::string> failures);

  const std::vector<std::string>& failures() const noexcept { return failures_; }

 private:
  std::vector<std::string> failures_;
};

}  // namespace lassim
