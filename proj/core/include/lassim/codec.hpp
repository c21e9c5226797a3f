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

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "lassim/image.hpp"

namespace lassim {

enum class ImageFormat { kPng, kPpm };

// Decodes an 8-bit PNG (gray, gray+palette, RGB) or a binary PGM/PPM (P5/P6,
// maxval <= 255). Sample v maps to double(v).
//
// Throws DecodeError on malformed or truncated input and
// UnsupportedFormatError on 16-bit data, alpha channels or unknown magic.
Image decode_image(std::span<const std::uint8_t> bytes);

// Clamps to [0, 255] and rounds half-to-even to 8 bits. kPpm writes P5 for
// single-channel images and P6 for RGB.
std::vector<std::uint8_t> encode_image(const Image& img, ImageFormat format);

Image read_image_file(const std::filesystem::path& path);
// Format is chosen from the extension: .png, or .ppm/.pgm/.pnm.
void write_image_file(const std::filesystem::path& path, const Image& img);

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);
void write_file_bytes(const std::filesystem::path& path,
                      std::span<const std::uint8_t> bytes);

// Files under `dir` whose extension is one the codec understands, sorted by
// filename.
std::vector<std::filesystem::path> list_image_files(const std::filesystem::path& dir);

}  // namespace lassim
