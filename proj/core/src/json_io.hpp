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

// JSON mappings for the public parameter types. Internal to the core
// library; nlohmann/json is not part of the installed interface.

#include <json.hpp>

#include "lassim/dataset.hpp"
#include "lassim/degrade.hpp"
#include "lassim/metrics.hpp"
#include "lassim/pyramid.hpp"

namespace lassim {

inline nlohmann::ordered_json blur_to_json(const BlurSpec& b) {
  return {{"label", intensity_label(b.label)},
          {"sigma", b.sigma},
          {"kernel_extent", b.kernel_extent}};
}

inline nlohmann::ordered_json elastic_to_json(const ElasticSpec& e) {
  return {{"label", intensity_label(e.label)},
          {"sigma_smooth", e.sigma_smooth},
          {"alpha", e.alpha}};
}

inline nlohmann::ordered_json pyramid_to_json(const PyramidParams& p) {
  return {{"levels", p.levels}, {"kernel", p.kernel}};
}

inline nlohmann::ordered_json ssim_to_json(const SsimParams& p) {
  return {{"window_size", p.window_size},
          {"window_sigma", p.window_sigma},
          {"window", p.window == WindowKind::kGaussian ? "gaussian" : "uniform"},
          {"k1", p.k1},
          {"k2", p.k2},
          {"data_range", p.data_range}};
}

inline nlohmann::ordered_json plan_to_json(const DegradationPlan& plan) {
  nlohmann::ordered_json blurs = nlohmann::ordered_json::array();
  for (const auto& b : plan.blurs) blurs.push_back(blur_to_json(b));
  nlohmann::ordered_json deforms = nlohmann::ordered_json::array();
  for (const auto& d : plan.deforms) deforms.push_back(elastic_to_json(d));
  return {{"seed", plan.seed}, {"blur_levels", blurs}, {"deform_levels", deforms}};
}

}  // namespace lassim
