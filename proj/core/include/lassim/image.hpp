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
#include <span>
#include <vector>

namespace lassim {

// Multi-channel raster with interleaved, row-major double samples. Pixel
// values live on the 8-bit scale [0, 255]; intermediate results (pyramid
// residuals, blurred planes) may leave that range.
class Image {
 public:
  Image() = default;
  // Zero-filled image. Throws InvalidArgumentError unless width, height >= 1
  // and channels is 1 or 3.
  Image(int width, int height, int channels);
  // Takes ownership of `data`, which must hold width * height * channels
  // finite samples.
  Image(int width, int height, int channels, std::vector<double> data);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  int channels() const noexcept { return channels_; }
  bool empty() const noexcept { return data_.empty(); }

  double at(int x, int y, int c = 0) const noexcept {
    return data_[(static_cast<std::size_t>(y) * width_ + x) * channels_ + c];
  }
  double& at(int x, int y, int c = 0) noexcept {
    return data_[(static_cast<std::size_t>(y) * width_ + x) * channels_ + c];
  }

  std::span<const double> data() const noexcept { return data_; }
  std::span<double> data() noexcept { return data_; }

  friend bool operator==(const Image&, const Image&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  int channels_ = 0;
  std::vector<double> data_;
};

// Single-channel plane. The working representation of the pyramid, the
// metrics and the degradations. Samples may be signed (pyramid residuals).
class LumaImage {
 public:
  LumaImage() = default;
  LumaImage(int width, int height, double fill = 0.0);
  LumaImage(int width, int height, std::vector<double> data);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  double at(int x, int y) const noexcept {
    return data_[static_cast<std::size_t>(y) * width_ + x];
  }
  double& at(int x, int y) noexcept {
    return data_[static_cast<std::size_t>(y) * width_ + x];
  }

  std::span<const double> row(int y) const noexcept {
    return {data_.data() + static_cast<std::size_t>(y) * width_,
            static_cast<std::size_t>(width_)};
  }
  std::span<double> row(int y) noexcept {
    return {data_.data() + static_cast<std::size_t>(y) * width_,
            static_cast<std::size_t>(width_)};
  }

  std::span<const double> data() const noexcept { return data_; }
  std::span<double> data() noexcept { return data_; }

  bool same_size(const LumaImage& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_;
  }

  // Single-channel Image view of the same samples (copied).
  Image to_image() const;

  friend bool operator==(const LumaImage&, const LumaImage&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<double> data_;
};

// How color inputs are reduced before a single-channel metric is applied.
enum class ChannelPolicy {
  kLuma,         // Rec.601 luma, then one metric evaluation
  kChannelMean,  // metric per channel, averaged
};

// Rec.601 luma (0.299 R + 0.587 G + 0.114 B); gray input is copied.
LumaImage to_luma(const Image& img);

// Plane `c` of `img` as a LumaImage.
LumaImage extract_channel(const Image& img, int c);

// Bilinear sample at a fractional position with clamp-to-edge addressing.
double sample_bilinear(const LumaImage& img, double x, double y) noexcept;

// Pixel-center aligned bilinear resampling with clamp-to-edge borders.
// Returns an exact copy when the size is unchanged.
LumaImage resize_bilinear(const LumaImage& img, int new_width, int new_height);

}  // namespace lassim
