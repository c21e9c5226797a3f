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

#include "lassim/pyramid.hpp"

#include <algorithm>
#include <string>

#include "lassim/error.hpp"
#include "lassim/filter.hpp"

namespace lassim {
namespace {

std::string dims(int w, int h) { return std::to_string(w) + "x" + std::to_string(h); }

std::vector<double> doubled(const std::vector<double>& kernel) {
  std::vector<double> k2(kernel);
  for (double& v : k2) v *= 2.0;
  return k2;
}

LumaImage subtract(const LumaImage& a, const LumaImage& b) {
  LumaImage out(a.width(), a.height());
  auto pa = a.data();
  auto pb = b.data();
  auto po = out.data();
  for (std::size_t i = 0; i < po.size(); ++i) po[i] = pa[i] - pb[i];
  return out;
}

void check_level_size(const LumaImage& img, int level) {
  if (img.width() < 2 || img.height() < 2) {
    throw DegenerateSizeError("pyramid level " + std::to_string(level) + " is " +
                              dims(img.width(), img.height()) +
                              "; both dimensions must be >= 2 to downsample");
  }
}

}  // namespace

void PyramidParams::validate() const {
  if (levels < 1) {
    throw InvalidArgumentError("pyramid needs at least one level, got " +
                               std::to_string(levels));
  }
  validate_lowpass_kernel(kernel);
}

int halved_extent(int n, int times) noexcept {
  for (int i = 0; i < times; ++i) n = (n + 1) / 2;
  return n;
}

LumaImage downsample(const LumaImage& img, const std::vector<double>& kernel) {
  if (img.width() < 2 || img.height() < 2) {
    throw DegenerateSizeError("cannot downsample a " + dims(img.width(), img.height()) +
                              " image; both dimensions must be >= 2");
  }
  const LumaImage blurred = convolve_separable(img, kernel, kernel);
  const int ow = (img.width() + 1) / 2;
  const int oh = (img.height() + 1) / 2;
  LumaImage out(ow, oh);
  for (int y = 0; y < oh; ++y) {
    const auto src = blurred.row(2 * y);
    auto dst = out.row(y);
    for (int x = 0; x < ow; ++x) dst[x] = src[2 * x];
  }
  return out;
}

LumaImage upsample(const LumaImage& img, int target_width, int target_height,
                   const std::vector<double>& kernel) {
  if ((target_width + 1) / 2 != img.width() || (target_height + 1) / 2 != img.height()) {
    throw DimensionError("cannot upsample " + dims(img.width(), img.height()) + " to " +
                         dims(target_width, target_height) +
                         "; target must ceil-halve to the input size");
  }
  LumaImage stuffed(2 * img.width(), 2 * img.height());
  for (int y = 0; y < img.height(); ++y) {
    const auto src = img.row(y);
    auto dst = stuffed.row(2 * y);
    for (int x = 0; x < img.width(); ++x) dst[2 * x] = src[x];
  }
  const auto k2 = doubled(kernel);
  const LumaImage filtered = convolve_separable(stuffed, k2, k2);
  if (filtered.width() == target_width && filtered.height() == target_height) {
    return filtered;
  }
  LumaImage out(target_width, target_height);
  for (int y = 0; y < target_height; ++y) {
    const auto src = filtered.row(y);
    auto dst = out.row(y);
    for (int x = 0; x < target_width; ++x) dst[x] = src[x];
  }
  return out;
}

LaplacianPyramid build_pyramid(const LumaImage& img, const PyramidParams& params) {
  params.validate();
  LaplacianPyramid pyr;
  pyr.residuals.reserve(params.levels);
  LumaImage current = img;
  for (int l = 0; l < params.levels; ++l) {
    check_level_size(current, l);
    LumaImage next = downsample(current, params.kernel);
    pyr.residuals.push_back(
        subtract(current, upsample(next, current.width(), current.height(), params.kernel)));
    current = std::move(next);
  }
  pyr.top = std::move(current);
  return pyr;
}

LumaImage residual_at(const LumaImage& img, int level, const PyramidParams& params) {
  params.validate();
  if (level < 0 || level >= params.levels) {
    throw IndexError("residual level " + std::to_string(level) + " out of range [0, " +
                     std::to_string(params.levels) + ")");
  }
  LumaImage current = img;
  for (int l = 0;; ++l) {
    check_level_size(current, l);
    LumaImage next = downsample(current, params.kernel);
    if (l == level) {
      return subtract(current,
                      upsample(next, current.width(), current.height(), params.kernel));
    }
    current = std::move(next);
  }
}

LumaImage reconstruct(const LaplacianPyramid& pyr, const std::vector<double>& kernel) {
  validate_lowpass_kernel(kernel);
  if (pyr.residuals.empty() || pyr.top.empty()) {
    throw CorruptPyramidError("pyramid has no residual levels or no top level");
  }
  for (std::size_t l = 0; l < pyr.residuals.size(); ++l) {
    const LumaImage& below = pyr.residuals[l];
    const LumaImage& above = l + 1 < pyr.residuals.size() ? pyr.residuals[l + 1] : pyr.top;
    if (below.empty() || (below.width() + 1) / 2 != above.width() ||
        (below.height() + 1) / 2 != above.height()) {
      throw CorruptPyramidError(
          "plane " + std::to_string(l + 1) + " (" + dims(above.width(), above.height()) +
          ") does not ceil-halve plane " + std::to_string(l) + " (" +
          dims(below.width(), below.height()) + ")");
    }
  }
  LumaImage current = pyr.top;
  for (int l = pyr.levels() - 1; l >= 0; --l) {
    const LumaImage& h = pyr.residuals[l];
    LumaImage up = upsample(current, h.width(), h.height(), kernel);
    auto pu = up.data();
    auto ph = h.data();
    for (std::size_t i = 0; i < pu.size(); ++i) pu[i] += ph[i];
    current = std::move(up);
  }
  return current;
}

Image residual_visualization(const LumaImage& residual) {
  Image out(residual.width(), residual.height(), 1);
  auto src = residual.data();
  auto dst = out.data();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = std::clamp(src[i] / 2.0 + 128.0, 0.0, 255.0);
  return out;
}

}  // namespace lassim
