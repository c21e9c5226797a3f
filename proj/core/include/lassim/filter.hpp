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

#include <span>
#include <vector>

#include "lassim/image.hpp"

namespace lassim {

// Reflects an out-of-range index back into [0, n) without repeating the edge
// sample (..., 2, 1, | 0, 1, ..., n-1, | n-2, ...). Works for any offset, so
// kernels wider than the signal are handled.
int mirror_index(int i, int n) noexcept;

// Sampled, unit-sum Gaussian with `extent` taps (odd).
std::vector<double> gaussian_kernel(double sigma, int extent);

// round(6 sigma) + 1, bumped to the next odd number.
int default_gaussian_extent(double sigma);

// [1 4 6 4 1] / 16.
std::vector<double> binomial5_kernel();

// Throws InvalidArgumentError unless `taps` has odd length, is symmetric and
// sums to 1 within `tolerance`.
void validate_lowpass_kernel(std::span<const double> taps, double tolerance = 1e-12);

// Same-size separable filtering with mirrored borders. `kx` runs along rows,
// `ky` along columns; both odd-length and centered.
LumaImage convolve_separable(const LumaImage& img, std::span<const double> kx,
                             std::span<const double> ky);

// Separable filtering evaluated only where the window fits entirely inside
// the image. Output is (w - kx + 1) x (h - ky + 1).
LumaImage filter_valid(const LumaImage& img, std::span<const double> kx,
                       std::span<const double> ky);

}  // namespace lassim
