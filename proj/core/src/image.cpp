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

#include "lassim/image.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "lassim/error.hpp"

namespace lassim {
namespace {

void check_dims(int width, int height) {
  if (width < 1 || height < 1) {
    throw InvalidArgumentError("image dimensions must be >= 1, got " +
                               std::to_string(width) + "x" +
                               std::to_string(height));
  }
}

void check_finite(std::span<const double> data) {
  if (!std::all_of(data.begin(), data.end(),
                   [](double v) { return std::isfinite(v); })) {
    throw InvalidArgumentError("image samples must be finite");
  }
}

}  // namespace

Image::Image(int width, int height, int channels)
    : width_(width), height_(height), channels_(channels) {
  check_dims(width, height);
  if (channels != 1 && channels != 3) {
    throw InvalidArgumentError("image must have 1 or 3 channels, got " +
                               std::to_string(channels));
  }
  data_.assign(static_cast<std::size_t>(width) * height * channels, 0.0);
}

Image::Image(int width, int height, int channels, std::vector<double> data)
    : Image(width, height, channels) {
  if (data.size() != data_.size()) {
    throw InvalidArgumentError("image data holds " + std::to_string(data.size()) +
                               " samples, expected " +
                               std::to_string(data_.size()));
  }
  check_finite(data);
  data_ = std::move(data);
}

LumaImage::LumaImage(int width, int height, double fill)
    : width_(width), height_(height) {
  check_dims(width, height);
  data_.assign(static_cast<std::size_t>(width) * height, fill);
}

LumaImage::LumaImage(int width, int height, std::vector<double> data)
    : width_(width), height_(height), data_(std::move(data)) {
  check_dims(width, height);
  if (data_.size() != static_cast<std::size_t>(width) * height) {
    throw InvalidArgumentError("plane data holds " + std::to_string(data_.size()) +
                               " samples, expected " +
                               std::to_string(static_cast<std::size_t>(width) * height));
  }
  check_finite(data_);
}

Image LumaImage::to_image() const {
  return Image(width_, height_, 1, data_);
}

LumaImage to_luma(const Image& img) {
  if (img.empty()) throw InvalidArgumentError("to_luma: empty image");
  if (img.channels() == 1) {
    return LumaImage(img.width(), img.height(),
                     std::vector<double>(img.data().begin(), img.data().end()));
  }
  LumaImage out(img.width(), img.height());
  auto src = img.data();
  auto dst = out.data();
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] = 0.299 * src[3 * i] + 0.587 * src[3 * i + 1] + 0.114 * src[3 * i + 2];
  }
  return out;
}

LumaImage extract_channel(const Image& img, int c) {
  if (c < 0 || c >= img.channels()) {
    throw IndexError("channel " + std::to_string(c) + " out of range for a " +
                     std::to_string(img.channels()) + "-channel image");
  }
  LumaImage out(img.width(), img.height());
  auto src = img.data();
  auto dst = out.data();
  const auto stride = static_cast<std::size_t>(img.channels());
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = src[i * stride + c];
  return out;
}

double sample_bilinear(const LumaImage& img, double x, double y) noexcept {
  const double max_x = img.width() - 1;
  const double max_y = img.height() - 1;
  x = std::clamp(x, 0.0, max_x);
  y = std::clamp(y, 0.0, max_y);
  const int x0 = static_cast<int>(std::floor(x));
  const int y0 = static_cast<int>(std::floor(y));
  const int x1 = std::min(x0 + 1, img.width() - 1);
  const int y1 = std::min(y0 + 1, img.height() - 1);
  const double fx = x - x0;
  const double fy = y - y0;
  // a + f * (b - a) keeps constant regions and zero offsets bit-exact.
  const double top = img.at(x0, y0) + fx * (img.at(x1, y0) - img.at(x0, y0));
  const double bottom = img.at(x0, y1) + fx * (img.at(x1, y1) - img.at(x0, y1));
  return top + fy * (bottom - top);
}

LumaImage resize_bilinear(const LumaImage& img, int new_width, int new_height) {
  check_dims(new_width, new_height);
  if (img.width() == new_width && img.height() == new_height) return img;
  LumaImage out(new_width, new_height);
  const double sx = static_cast<double>(img.width()) / new_width;
  const double sy = static_cast<double>(img.height()) / new_height;
  for (int y = 0; y < new_height; ++y) {
    const double src_y = (y + 0.5) * sy - 0.5;
    for (int x = 0; x < new_width; ++x) {
      out.at(x, y) = sample_bilinear(img, (x + 0.5) * sx - 0.5, src_y);
    }
  }
  return out;
}

}  // namespace lassim
