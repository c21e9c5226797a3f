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

#include <vector>

#include "lassim/image.hpp"
#include "lassim/pyramid.hpp"

namespace lassim {

enum class WindowKind {
  kGaussian,  // sampled Gaussian with window_sigma
  kUniform,   // box weights, mostly for cross-checking
};

struct SsimParams {
  int window_size = 11;
  double window_sigma = 1.5;
  double k1 = 0.01;
  double k2 = 0.03;
  // L in C1 = (k1 L)^2, C2 = (k2 L)^2. Kept at the input range for residuals too.
  double data_range = 255.0;
  WindowKind window = WindowKind::kGaussian;

  void validate() const;
  // Normalized 1-D window taps.
  std::vector<double> window_taps() const;
};

// Residual level evaluated by default.
inline constexpr int kDefaultLassimLevel = 3;

// Mean SSIM index over every window position that lies fully inside the
// images. Throws DimensionError on a size mismatch and DegenerateSizeError
// when the images are smaller than the window.
double ssim(const LumaImage& a, const LumaImage& b, const SsimParams& p = {});

// Color-aware SSIM: luma by default, or the mean of per-channel scores.
double ssim(const Image& a, const Image& b, const SsimParams& p = {},
            ChannelPolicy policy = ChannelPolicy::kLuma);

// SSIM between the level-`level` Laplacian residuals of a and b. Only the
// kernel of `pyr` is used; the pyramid is built just deep enough. Throws
// LevelTooDeepError when the residual is smaller than the SSIM window.
double lassim(const LumaImage& a, const LumaImage& b, int level = kDefaultLassimLevel,
              const PyramidParams& pyr = {}, const SsimParams& p = {});

double lassim(const Image& a, const Image& b, int level, const PyramidParams& pyr,
              const SsimParams& p, ChannelPolicy policy = ChannelPolicy::kLuma);

// Deepest level whose residual still fits an SSIM window, or -1.
int max_lassim_level(int width, int height, const SsimParams& p = {});

struct LevelScore {
  int level;
  double score;
};

// One entry per level in [first, last]. Level 0 is the pixel-space SSIM;
// level l >= 1 is lassim at residual level l.
std::vector<LevelScore> lassim_profile(const LumaImage& a, const LumaImage& b, int first,
                                       int last, const PyramidParams& pyr = {},
                                       const SsimParams& p = {});

}  // namespace lassim
