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

#include "lassim/metrics.hpp"

#include <cmath>
#include <string>

#include "lassim/error.hpp"
#include "lassim/filter.hpp"

namespace lassim {
namespace {

std::string dims(int w, int h) { return std::to_string(w) + "x" + std::to_string(h); }

void check_pair(int aw, int ah, int bw, int bh, const char* what) {
  if (aw != bw || ah != bh) {
    throw DimensionError(std::string(what) + ": image sizes differ (" + dims(aw, ah) +
                         " vs " + dims(bw, bh) + ")");
  }
}

LumaImage product(const LumaImage& a, const LumaImage& b) {
  LumaImage out(a.width(), a.height());
  auto pa = a.data();
  auto pb = b.data();
  auto po = out.data();
  for (std::size_t i = 0; i < po.size(); ++i) po[i] = pa[i] * pb[i];
  return out;
}

PyramidParams deep_enough(const PyramidParams& pyr, int level) {
  PyramidParams p = pyr;
  p.levels = level + 1;
  return p;
}

template <typename Fn>
double channel_mean(const Image& a, const Image& b, Fn&& per_plane) {
  if (a.channels() != b.channels()) {
    throw DimensionError("channel counts differ (" + std::to_string(a.channels()) +
                         " vs " + std::to_string(b.channels()) + ")");
  }
  double sum = 0.0;
  for (int c = 0; c < a.channels(); ++c) {
    sum += per_plane(extract_channel(a, c), extract_channel(b, c));
  }
  return sum / a.channels();
}

}  // namespace

void SsimParams::validate() const {
  if (window_size < 3 || window_size % 2 == 0) {
    throw InvalidArgumentError("SSIM window size must be odd and >= 3, got " +
                               std::to_string(window_size));
  }
  if (window == WindowKind::kGaussian && !(window_sigma > 0.0)) {
    throw InvalidArgumentError("SSIM window sigma must be positive");
  }
  if (!(k1 > 0.0) || !(k2 > 0.0)) {
    throw InvalidArgumentError("SSIM constants k1, k2 must be positive");
  }
  if (!(data_range > 0.0)) {
    throw InvalidArgumentError("SSIM data range must be positive");
  }
}

std::vector<double> SsimParams::window_taps() const {
  if (window == WindowKind::kUniform) {
    return std::vector<double>(window_size, 1.0 / window_size);
  }
  return gaussian_kernel(window_sigma, window_size);
}

double ssim(const LumaImage& a, const LumaImage& b, const SsimParams& p) {
  p.validate();
  check_pair(a.width(), a.height(), b.width(), b.height(), "ssim");
  if (a.width() < p.window_size || a.height() < p.window_size) {
    throw DegenerateSizeError("ssim: image " + dims(a.width(), a.height()) +
                              " is smaller than the " + std::to_string(p.window_size) +
                              "x" + std::to_string(p.window_size) + " window");
  }
  const auto taps = p.window_taps();
  const LumaImage mu_a = filter_valid(a, taps, taps);
  const LumaImage mu_b = filter_valid(b, taps, taps);
  const LumaImage e_aa = filter_valid(product(a, a), taps, taps);
  const LumaImage e_bb = filter_valid(product(b, b), taps, taps);
  const LumaImage e_ab = filter_valid(product(a, b), taps, taps);

  const double c1 = (p.k1 * p.data_range) * (p.k1 * p.data_range);
  const double c2 = (p.k2 * p.data_range) * (p.k2 * p.data_range);

  // Every expression below is written so that swapping a and b yields
  // bit-identical values.
  double sum = 0.0;
  const auto ma = mu_a.data();
  const auto mb = mu_b.data();
  const auto saa = e_aa.data();
  const auto sbb = e_bb.data();
  const auto sab = e_ab.data();
  for (std::size_t i = 0; i < ma.size(); ++i) {
    const double mu_ab = ma[i] * mb[i];
    const double mu_aa = ma[i] * ma[i];
    const double mu_bb = mb[i] * mb[i];
    const double var_a = saa[i] - mu_aa;
    const double var_b = sbb[i] - mu_bb;
    const double cov = sab[i] - mu_ab;
    const double num = (2.0 * mu_ab + c1) * (2.0 * cov + c2);
    const double den = (mu_aa + mu_bb + c1) * (var_a + var_b + c2);
    sum += num / den;
  }
  return sum / static_cast<double>(ma.size());
}

double ssim(const Image& a, const Image& b, const SsimParams& p, ChannelPolicy policy) {
  check_pair(a.width(), a.height(), b.width(), b.height(), "ssim");
  if (policy == ChannelPolicy::kLuma) return ssim(to_luma(a), to_luma(b), p);
  return channel_mean(a, b, [&](const LumaImage& x, const LumaImage& y) {
    return ssim(x, y, p);
  });
}

int max_lassim_level(int width, int height, const SsimParams& p) {
  int level = -1;
  while (halved_extent(width, level + 1) >= p.window_size &&
         halved_extent(height, level + 1) >= p.window_size) {
    ++level;
  }
  return level;
}

double lassim(const LumaImage& a, const LumaImage& b, int level, const PyramidParams& pyr,
              const SsimParams& p) {
  p.validate();
  check_pair(a.width(), a.height(), b.width(), b.height(), "lassim");
  if (level < 0) throw IndexError("lassim level must be >= 0, got " + std::to_string(level));
  const int rw = halved_extent(a.width(), level);
  const int rh = halved_extent(a.height(), level);
  if (rw < p.window_size || rh < p.window_size) {
    throw LevelTooDeepError(level, max_lassim_level(a.width(), a.height(), p),
                            "residual is " + dims(rw, rh) + " for a " +
                                dims(a.width(), a.height()) + " image and a " +
                                std::to_string(p.window_size) + "-pixel SSIM window");
  }
  const PyramidParams deep = deep_enough(pyr, level);
  return ssim(residual_at(a, level, deep), residual_at(b, level, deep), p);
}

double lassim(const Image& a, const Image& b, int level, const PyramidParams& pyr,
              const SsimParams& p, ChannelPolicy policy) {
  check_pair(a.width(), a.height(), b.width(), b.height(), "lassim");
  if (policy == ChannelPolicy::kLuma) return lassim(to_luma(a), to_luma(b), level, pyr, p);
  return channel_mean(a, b, [&](const LumaImage& x, const LumaImage& y) {
    return lassim(x, y, level, pyr, p);
  });
}

std::vector<LevelScore> lassim_profile(const LumaImage& a, const LumaImage& b, int first,
                                       int last, const PyramidParams& pyr,
                                       const SsimParams& p) {
  if (first < 0 || last < first) {
    throw InvalidArgumentError("profile range must satisfy 0 <= first <= last, got " +
                               std::to_string(first) + ".." + std::to_string(last));
  }
  check_pair(a.width(), a.height(), b.width(), b.height(), "lassim_profile");
  // Check the deepest level up front so nothing is computed for a bad range.
  const int max_level = max_lassim_level(a.width(), a.height(), p);
  if (last > max_level && last > 0) {
    throw LevelTooDeepError(last, max_level,
                            "profile extends past the deepest admissible residual for a " +
                                dims(a.width(), a.height()) + " image");
  }
  std::vector<LevelScore> out;
  out.reserve(last - first + 1);
  for (int l = first; l <= last; ++l) {
    out.push_back({l, l == 0 ? ssim(a, b, p) : lassim(a, b, l, pyr, p)});
  }
  return out;
}

}  // namespace lassim
