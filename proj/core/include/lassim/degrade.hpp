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
#include <string>
#include <string_view>
#include <vector>

#include "lassim/image.hpp"

namespace lassim {

enum class Intensity { kLow, kMedium, kHigh };

// "L", "M" or "H".
std::string intensity_label(Intensity level);
// Accepts L/M/H (case-insensitive) and low/medium/high.
Intensity parse_intensity(std::string_view text);
// Comma-separated list, e.g. "L,M,H". Empty text gives an empty list.
std::vector<Intensity> parse_intensity_list(std::string_view text);

struct BlurSpec {
  double sigma = 2.0;
  int kernel_extent = 13;
  Intensity label = Intensity::kLow;

  // Extent defaults to round(6 sigma) + 1, forced odd.
  static BlurSpec with_sigma(double sigma, Intensity label);
  void validate() const;
  // Output directory stem: blur_L, blur_M, blur_H.
  std::string name() const;
};

struct ElasticSpec {
  double sigma_smooth = 16.0;
  double alpha = 160.0;
  std::uint64_t seed = 0;
  Intensity label = Intensity::kLow;

  void validate() const;
};

// Per-pixel offsets, row-major, same size as the image they warp.
struct DisplacementField {
  int width = 0;
  int height = 0;
  std::vector<double> dx;
  std::vector<double> dy;
};

// Default intensity tables, tuned for 480x272-class images.
BlurSpec default_blur(Intensity level);
ElasticSpec default_elastic(Intensity level, std::uint64_t seed = 0);

// Separable Gaussian, mirrored borders. Throws DegenerateSizeError when the
// image is smaller than the kernel extent.
LumaImage gaussian_blur(const LumaImage& img, const BlurSpec& spec);

// Uniform[-1, 1] noise per pixel and axis from a generator seeded with
// spec.seed, Gaussian-smoothed with sigma_smooth (mirrored borders), then
// scaled by alpha. Bit-reproducible for a fixed seed.
DisplacementField make_displacement_field(int width, int height, const ElasticSpec& spec);

// out(x, y) = img sampled bilinearly at (x + dx, y + dy), clamped to the edge.
LumaImage elastic_transform(const LumaImage& img, const DisplacementField& field);

std::uint64_t splitmix64(std::uint64_t x) noexcept;
// Seed of the index-th image of a set built from `global_seed`.
std::uint64_t derive_image_seed(std::uint64_t global_seed, std::uint64_t index) noexcept;

}  // namespace lassim
