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
#include <filesystem>
#include <string>
#include <vector>

#include "lassim/degrade.hpp"
#include "lassim/image.hpp"

namespace lassim {

// Blur and deformation levels applied to every ground-truth image. The seed
// of each ElasticSpec in `deforms` is ignored; per-image seeds are derived
// from `seed` and the image index, and shared by all deformation levels of
// that image.
struct DegradationPlan {
  std::vector<BlurSpec> blurs;
  std::vector<ElasticSpec> deforms;
  std::uint64_t seed = 2022;

  void validate() const;
  // Full L/M/H x L/M/H plan from the default intensity tables.
  static DegradationPlan defaults(std::uint64_t seed = 2022);
};

// Output directory stem of a deformation+blur combination: def_M_blur_H.
std::string combination_name(const ElasticSpec& deform, const BlurSpec& blur);

// All degraded variants of one ground-truth image.
struct ImageTriplets {
  std::uint64_t seed = 0;
  std::vector<LumaImage> blurred;                        // [blur]
  std::vector<std::vector<LumaImage>> deformed_blurred;  // [deform][blur]
};

// Blur of the original for every blur level; for every deformation level the
// image is warped first and then blurred with every blur level.
ImageTriplets make_triplets(const LumaImage& gt, std::uint64_t index,
                            const DegradationPlan& plan);

struct NamedImage {
  std::string name;  // file stem
  std::uint64_t index = 0;
  LumaImage image;
};

// Decodable images of a directory, converted to luma, in filename order.
// `index` is the position among all candidate files, so a bad file does not
// shift the seeds of the ones after it.
struct IngestResult {
  std::vector<NamedImage> images;
  std::vector<std::string> failures;  // "<file>: <reason>"
};

// Throws IngestionError when no file decodes (including an empty or missing
// directory).
IngestResult ingest_directory(const std::filesystem::path& dir);

// The S_GT / S_blur / S_deform+blur sets held in memory.
struct TripletSets {
  std::vector<std::string> names;
  std::vector<LumaImage> gt;
  std::vector<std::vector<LumaImage>> blur;                      // [blur][image]
  std::vector<std::vector<std::vector<LumaImage>>> deform_blur;  // [deform][blur][image]
  std::vector<std::uint64_t> seeds;                              // [image]
};

TripletSets make_triplet_sets(const std::vector<NamedImage>& images,
                              const DegradationPlan& plan, int jobs = 1);

struct TripletWriteSummary {
  std::size_t images_written = 0;
  std::vector<std::string> failures;
  std::vector<std::string> directories;  // relative to the output root
};

// Reads `src_dir`, writes out/{gt, blur_X, def_X_blur_Y}/<stem>.png and
// out/manifest.json. Throws IngestionError when nothing decodes.
TripletWriteSummary write_triplet_sets(const std::filesystem::path& src_dir,
                                       const std::filesystem::path& out_dir,
                                       const DegradationPlan& plan, int jobs = 1);

}  // namespace lassim
