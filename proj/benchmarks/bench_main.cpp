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

#include <benchmark/benchmark.h>

#include <random>

#include "lassim/degrade.hpp"
#include "lassim/metrics.hpp"
#include "lassim/pyramid.hpp"

namespace {

using namespace lassim;

LumaImage noise_image(int w, int h, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 255.0);
  LumaImage img(w, h);
  for (double& v : img.data()) v = u(rng);
  return img;
}

void BM_Ssim(benchmark::State& state) {
  const int w = static_cast<int>(state.range(0)), h = static_cast<int>(state.range(1));
  const LumaImage a = noise_image(w, h, 1), b = noise_image(w, h, 2);
  for (auto _ : state) benchmark::DoNotOptimize(ssim(a, b));
  state.SetItemsProcessed(state.iterations() * w * h);
}
BENCHMARK(BM_Ssim)->Args({128, 128})->Args({480, 272})->Args({1024, 768});

void BM_Lassim(benchmark::State& state) {
  const LumaImage a = noise_image(480, 272, 1), b = noise_image(480, 272, 2);
  const int level = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lassim::lassim(a, b, level));
}
BENCHMARK(BM_Lassim)->DenseRange(0, 4);

void BM_BuildPyramid(benchmark::State& state) {
  const LumaImage img = noise_image(480, 272, 3);
  PyramidParams p;
  p.levels = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_pyramid(img, p));
}
BENCHMARK(BM_BuildPyramid)->Arg(1)->Arg(4)->Arg(6);

void BM_Reconstruct(benchmark::State& state) {
  PyramidParams p;
  const auto pyr = build_pyramid(noise_image(480, 272, 4), p);
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct(pyr, p.kernel));
}
BENCHMARK(BM_Reconstruct);

void BM_GaussianBlur(benchmark::State& state) {
  const LumaImage img = noise_image(480, 272, 5);
  const BlurSpec spec = BlurSpec::with_sigma(static_cast<double>(state.range(0)), Intensity::kLow);
  for (auto _ : state) benchmark::DoNotOptimize(gaussian_blur(img, spec));
}
BENCHMARK(BM_GaussianBlur)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

void BM_ElasticField(benchmark::State& state) {
  ElasticSpec spec = default_elastic(Intensity::kMedium, 7);
  spec.sigma_smooth = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(make_displacement_field(480, 272, spec));
}
BENCHMARK(BM_ElasticField)->Arg(8)->Arg(16);

void BM_ElasticWarp(benchmark::State& state) {
  const LumaImage img = noise_image(480, 272, 6);
  const auto field = make_displacement_field(480, 272, default_elastic(Intensity::kHigh, 8));
  for (auto _ : state) benchmark::DoNotOptimize(elastic_transform(img, field));
}
BENCHMARK(BM_ElasticWarp);

}  // namespace
BENCHMARK_MAIN();
