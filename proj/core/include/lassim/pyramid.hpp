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

namespace lassim {

struct PyramidParams {
  // Number of residual levels L (>= 1).
  int levels = 4;
  // Odd, symmetric, unit-sum low-pass taps shared by down- and up-sampling.
  std::vector<double> kernel = {1.0 / 16, 4.0 / 16, 6.0 / 16, 4.0 / 16, 1.0 / 16};

  // Throws InvalidArgumentError on a bad level count or kernel.
  void validate() const;
};

// Residual planes h_0 .. h_{L-1} (signed, unclamped) and the low-pass top I_L.
struct LaplacianPyramid {
  std::vector<LumaImage> residuals;
  LumaImage top;

  int levels() const noexcept { return static_cast<int>(residuals.size()); }
};

// ceil(n / 2) applied `times` times.
int halved_extent(int n, int times) noexcept;

// Blur with `kernel` (mirrored borders), keep even rows and columns.
// Output is ceil(w/2) x ceil(h/2). Throws DegenerateSizeError when either
// dimension is below 2.
LumaImage downsample(const LumaImage& img, const std::vector<double>& kernel);

// Zero-insertion onto the 2x grid, filtering with 2 * kernel per axis,
// crop to target. The target must satisfy ceil(target / 2) == input size on
// both axes, otherwise DimensionError.
LumaImage upsample(const LumaImage& img, int target_width, int target_height,
                   const std::vector<double>& kernel);

// I_{l+1} = down(I_l), h_l = I_l - up(I_{l+1}) for l = 0 .. L-1.
LaplacianPyramid build_pyramid(const LumaImage& img, const PyramidParams& params);

// h_l alone; levels deeper than l are never computed. Throws IndexError
// unless 0 <= l < params.levels.
LumaImage residual_at(const LumaImage& img, int level, const PyramidParams& params);

// Folds I_l = h_l + up(I_{l+1}) from the top. Throws CorruptPyramidError when
// the stored planes do not chain by ceil-halving.
LumaImage reconstruct(const LaplacianPyramid& pyr, const std::vector<double>& kernel);

// Residual remapped with x / 2 + 128 (clamped on encode) for visual
// inspection.
Image residual_visualization(const LumaImage& residual);

}  // namespace lassim
