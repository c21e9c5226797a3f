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

#include "lassim/degrade.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>

#include "lassim/error.hpp"
#include "lassim/filter.hpp"

namespace lassim {
namespace {

// Blur sigma per intensity, in pixels.
constexpr double kBlurSigma[] = {2.0, 4.0, 6.0};
// Elastic (smoothing sigma, alpha) per intensity, in pixels.
constexpr double kElasticSigma[] = {16.0, 16.0, 16.0};
constexpr double kElasticAlpha[] = {160.0, 240.0, 320.0};

int index_of(Intensity level) { return static_cast<int>(level); }

std::string dims(int w, int h) { return std::to_string(w) + "x" + std::to_string(h); }

}  // namespace

std::string intensity_label(Intensity level) {
  switch (level) {
    case Intensity::kLow: return "L";
    case Intensity::kMedium: return "M";
    case Intensity::kHigh: return "H";
  }
  return "?";
}

Intensity parse_intensity(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (t == "l" || t == "low") return Intensity::kLow;
  if (t == "m" || t == "medium") return Intensity::kMedium;
  if (t == "h" || t == "high") return Intensity::kHigh;
  throw InvalidArgumentError("unknown intensity '" + std::string(text) +
                             "' (expected L, M or H)");
}

std::vector<Intensity> parse_intensity_list(std::string_view text) {
  std::vector<Intensity> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto item = text.substr(start, end - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    if (!item.empty()) out.push_back(parse_intensity(item));
    start = end + 1;
  }
  return out;
}

BlurSpec BlurSpec::with_sigma(double sigma, Intensity label) {
  BlurSpec spec;
  spec.sigma = sigma;
  spec.kernel_extent = default_gaussian_extent(sigma);
  spec.label = label;
  return spec;
}

void BlurSpec::validate() const {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw InvalidArgumentError("blur sigma must be positive");
  }
  if (kernel_extent < 3 || kernel_extent % 2 == 0) {
    throw InvalidArgumentError("blur kernel extent must be odd and >= 3, got " +
                               std::to_string(kernel_extent));
  }
}

std::string BlurSpec::name() const { return "blur_" + intensity_label(label); }

void ElasticSpec::validate() const {
  if (!(sigma_smooth > 0.0) || !std::isfinite(sigma_smooth)) {
    throw InvalidArgumentError("elastic smoothing sigma must be positive");
  }
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw InvalidArgumentError("elastic alpha must be >= 0");
  }
}

BlurSpec default_blur(Intensity level) {
  return BlurSpec::with_sigma(kBlurSigma[index_of(level)], level);
}

ElasticSpec default_elastic(Intensity level, std::uint64_t seed) {
  ElasticSpec spec;
  spec.sigma_smooth = kElasticSigma[index_of(level)];
  spec.alpha = kElasticAlpha[index_of(level)];
  spec.seed = seed;
  spec.label = level;
  return spec;
}

LumaImage gaussian_blur(const LumaImage& img, const BlurSpec& spec) {
  spec.validate();
  if (img.width() < spec.kernel_extent || img.height() < spec.kernel_extent) {
    throw DegenerateSizeError("cannot blur a " + dims(img.width(), img.height()) +
                              " image with a " + std::to_string(spec.kernel_extent) +
                              "-tap kernel");
  }
  const auto k = gaussian_kernel(spec.sigma, spec.kernel_extent);
  return convolve_separable(img, k, k);
}

DisplacementField make_displacement_field(int width, int height, const ElasticSpec& spec) {
  spec.validate();
  if (width < 1 || height < 1) {
    throw InvalidArgumentError("displacement field size must be >= 1x1, got " +
                               dims(width, height));
  }
  std::mt19937_64 rng(spec.seed);
  // 53 high bits -> [0, 1) -> [-1, 1). Avoids the implementation-defined
  // uniform_real_distribution so fields match across standard libraries.
  auto uniform = [&rng] {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
  };
  LumaImage noise_x(width, height);
  LumaImage noise_y(width, height);
  for (double& v : noise_x.data()) v = uniform();
  for (double& v : noise_y.data()) v = uniform();

  const auto k = gaussian_kernel(spec.sigma_smooth, default_gaussian_extent(spec.sigma_smooth));
  const LumaImage smooth_x = convolve_separable(noise_x, k, k);
  const LumaImage smooth_y = convolve_separable(noise_y, k, k);

  DisplacementField field;
  field.width = width;
  field.height = height;
  field.dx.resize(smooth_x.size());
  field.dy.resize(smooth_y.size());
  for (std::size_t i = 0; i < field.dx.size(); ++i) {
    field.dx[i] = spec.alpha * smooth_x.data()[i];
    field.dy[i] = spec.alpha * smooth_y.data()[i];
  }
  return field;
}

LumaImage elastic_transform(const LumaImage& img, const DisplacementField& field) {
  const auto n = static_cast<std::size_t>(img.width()) * img.height();
  if (field.width != img.width() || field.height != img.height() || field.dx.size() != n ||
      field.dy.size() != n) {
    throw DimensionError("displacement field " + dims(field.width, field.height) +
                         " does not match image " + dims(img.width(), img.height()));
  }
  LumaImage out(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      const std::size_t i = static_cast<std::size_t>(y) * img.width() + x;
      out.at(x, y) = sample_bilinear(img, x + field.dx[i], y + field.dy[i]);
    }
  }
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_image_seed(std::uint64_t global_seed, std::uint64_t index) noexcept {
  return splitmix64(global_seed ^ splitmix64(index));
}

}  // namespace lassim
