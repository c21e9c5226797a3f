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

#include "lassim/filter.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "lassim/error.hpp"

namespace lassim {
namespace {

void check_odd(std::span<const double> k, const char* what) {
  if (k.empty() || k.size() % 2 == 0) {
    throw InvalidArgumentError(std::string(what) + " must have an odd, nonzero number of taps");
  }
}

}  // namespace

int mirror_index(int i, int n) noexcept {
  if (n == 1) return 0;
  const int period = 2 * (n - 1);
  i %= period;
  if (i < 0) i += period;
  return i < n ? i : period - i;
}

std::vector<double> gaussian_kernel(double sigma, int extent) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw InvalidArgumentError("Gaussian sigma must be positive and finite");
  }
  if (extent < 1 || extent % 2 == 0) {
    throw InvalidArgumentError("Gaussian extent must be odd and >= 1, got " +
                               std::to_string(extent));
  }
  std::vector<double> k(extent);
  const int r = extent / 2;
  for (int i = 0; i < extent; ++i) {
    const double x = i - r;
    k[i] = std::exp(-(x * x) / (2.0 * sigma * sigma));
  }
  // Sum outward-in from the tails so mirrored taps add up identically.
  double sum = k[r];
  for (int i = 1; i <= r; ++i) sum += k[r - i] + k[r + i];
  for (double& v : k) v /= sum;
  return k;
}

int default_gaussian_extent(double sigma) {
  int n = static_cast<int>(std::lround(6.0 * sigma)) + 1;
  if (n % 2 == 0) ++n;
  return n;
}

std::vector<double> binomial5_kernel() {
  return {1.0 / 16, 4.0 / 16, 6.0 / 16, 4.0 / 16, 1.0 / 16};
}

void validate_lowpass_kernel(std::span<const double> taps, double tolerance) {
  check_odd(taps, "low-pass kernel");
  const std::size_t n = taps.size();
  for (std::size_t i = 0; i < n / 2; ++i) {
    if (taps[i] != taps[n - 1 - i]) {
      throw InvalidArgumentError("low-pass kernel must be symmetric");
    }
  }
  const double sum = std::accumulate(taps.begin(), taps.end(), 0.0);
  if (std::abs(sum - 1.0) > tolerance) {
    throw InvalidArgumentError("low-pass kernel must sum to 1 (got " +
                               std::to_string(sum) + ")");
  }
}

LumaImage convolve_separable(const LumaImage& img, std::span<const double> kx,
                             std::span<const double> ky) {
  check_odd(kx, "row kernel");
  check_odd(ky, "column kernel");
  const int w = img.width();
  const int h = img.height();
  const int rx = static_cast<int>(kx.size() / 2);
  const int ry = static_cast<int>(ky.size() / 2);

  LumaImage tmp(w, h);
  std::vector<int> xi(kx.size());
  for (int x = 0; x < w; ++x) {
    // Interior columns skip the reflection lookup.
    const bool interior = x - rx >= 0 && x + rx < w;
    if (!interior) {
      for (int k = -rx; k <= rx; ++k) xi[k + rx] = mirror_index(x + k, w);
    }
    for (int y = 0; y < h; ++y) {
      const auto src = img.row(y);
      double acc = 0.0;
      if (interior) {
        for (int k = 0; k < static_cast<int>(kx.size()); ++k) acc += kx[k] * src[x - rx + k];
      } else {
        for (std::size_t k = 0; k < kx.size(); ++k) acc += kx[k] * src[xi[k]];
      }
      tmp.at(x, y) = acc;
    }
  }

  LumaImage out(w, h);
  std::vector<int> yi(ky.size());
  for (int y = 0; y < h; ++y) {
    for (int k = -ry; k <= ry; ++k) yi[k + ry] = mirror_index(y + k, h);
    auto dst = out.row(y);
    for (std::size_t k = 0; k < ky.size(); ++k) {
      const auto src = tmp.row(yi[k]);
      const double wk = ky[k];
      for (int x = 0; x < w; ++x) dst[x] += wk * src[x];
    }
  }
  return out;
}

LumaImage filter_valid(const LumaImage& img, std::span<const double> kx,
                       std::span<const double> ky) {
  check_odd(kx, "row kernel");
  check_odd(ky, "column kernel");
  const int kw = static_cast<int>(kx.size());
  const int kh = static_cast<int>(ky.size());
  if (img.width() < kw || img.height() < kh) {
    throw DegenerateSizeError("image " + std::to_string(img.width()) + "x" +
                              std::to_string(img.height()) +
                              " is smaller than the " + std::to_string(kw) + "x" +
                              std::to_string(kh) + " window");
  }
  const int ow = img.width() - kw + 1;
  const int oh = img.height() - kh + 1;

  LumaImage tmp(ow, img.height());
  for (int y = 0; y < img.height(); ++y) {
    const auto src = img.row(y);
    auto dst = tmp.row(y);
    for (int x = 0; x < ow; ++x) {
      double acc = 0.0;
      for (int k = 0; k < kw; ++k) acc += kx[k] * src[x + k];
      dst[x] = acc;
    }
  }
  LumaImage out(ow, oh);
  for (int y = 0; y < oh; ++y) {
    auto dst = out.row(y);
    for (int k = 0; k < kh; ++k) {
      const auto src = tmp.row(y + k);
      const double wk = ky[k];
      for (int x = 0; x < ow; ++x) dst[x] += wk * src[x];
    }
  }
  return out;
}

}  // namespace lassim
