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

#include "lassim/dataset.hpp"

#include <set>
#include <string>

#include "json_io.hpp"
#include "lassim/codec.hpp"
#include "lassim/error.hpp"
#include "parallel.hpp"

namespace lassim {

void DegradationPlan::validate() const {
  std::set<Intensity> seen;
  for (const auto& b : blurs) {
    b.validate();
    if (!seen.insert(b.label).second) {
      throw InvalidArgumentError("duplicate blur level " + intensity_label(b.label));
    }
  }
  seen.clear();
  for (const auto& d : deforms) {
    d.validate();
    if (!seen.insert(d.label).second) {
      throw InvalidArgumentError("duplicate deformation level " + intensity_label(d.label));
    }
  }
}

DegradationPlan DegradationPlan::defaults(std::uint64_t seed) {
  DegradationPlan plan;
  plan.seed = seed;
  for (auto level : {Intensity::kLow, Intensity::kMedium, Intensity::kHigh}) {
    plan.blurs.push_back(default_blur(level));
    plan.deforms.push_back(default_elastic(level));
  }
  return plan;
}

std::string combination_name(const ElasticSpec& deform, const BlurSpec& blur) {
  return "def_" + intensity_label(deform.label) + "_blur_" + intensity_label(blur.label);
}

ImageTriplets make_triplets(const LumaImage& gt, std::uint64_t index,
                            const DegradationPlan& plan) {
  ImageTriplets out;
  out.seed = derive_image_seed(plan.seed, index);
  out.blurred.reserve(plan.blurs.size());
  for (const auto& b : plan.blurs) out.blurred.push_back(gaussian_blur(gt, b));
  out.deformed_blurred.reserve(plan.deforms.size());
  for (ElasticSpec d : plan.deforms) {
    d.seed = out.seed;
    const LumaImage warped =
        elastic_transform(gt, make_displacement_field(gt.width(), gt.height(), d));
    auto& row = out.deformed_blurred.emplace_back();
    row.reserve(plan.blurs.size());
    for (const auto& b : plan.blurs) row.push_back(gaussian_blur(warped, b));
  }
  return out;
}

IngestResult ingest_directory(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  try {
    files = list_image_files(dir);
  } catch (const IoError& e) {
    throw IngestionError(std::string("cannot read source directory: ") + e.what(),
                         {dir.string() + ": " + e.what()});
  }
  IngestResult result;
  for (std::size_t i = 0; i < files.size(); ++i) {
    try {
      result.images.push_back(
          {files[i].stem().string(), i, to_luma(read_image_file(files[i]))});
    } catch (const Error& e) {
      result.failures.push_back(files[i].filename().string() + ": " + e.what());
    }
  }
  if (result.images.empty()) {
    std::string what = "no decodable images in " + dir.string();
    if (files.empty()) what += " (directory holds no .png/.ppm/.pgm files)";
    throw IngestionError(what, result.failures);
  }
  return result;
}

TripletSets make_triplet_sets(const std::vector<NamedImage>& images,
                              const DegradationPlan& plan, int jobs) {
  plan.validate();
  std::vector<ImageTriplets> per_image(images.size());
  detail::parallel_for(images.size(), jobs, [&](std::size_t i) {
    per_image[i] = make_triplets(images[i].image, images[i].index, plan);
  });

  TripletSets sets;
  sets.blur.assign(plan.blurs.size(), {});
  sets.deform_blur.assign(plan.deforms.size(),
                          std::vector<std::vector<LumaImage>>(plan.blurs.size()));
  for (std::size_t i = 0; i < images.size(); ++i) {
    sets.names.push_back(images[i].name);
    sets.gt.push_back(images[i].image);
    sets.seeds.push_back(per_image[i].seed);
    for (std::size_t b = 0; b < plan.blurs.size(); ++b) {
      sets.blur[b].push_back(std::move(per_image[i].blurred[b]));
    }
    for (std::size_t d = 0; d < plan.deforms.size(); ++d) {
      for (std::size_t b = 0; b < plan.blurs.size(); ++b) {
        sets.deform_blur[d][b].push_back(std::move(per_image[i].deformed_blurred[d][b]));
      }
    }
  }
  return sets;
}

TripletWriteSummary write_triplet_sets(const std::filesystem::path& src_dir,
                                       const std::filesystem::path& out_dir,
                                       const DegradationPlan& plan, int jobs) {
  plan.validate();
  IngestResult ingest = ingest_directory(src_dir);

  TripletWriteSummary summary;
  summary.failures = ingest.failures;
  summary.directories.push_back("gt");
  for (const auto& b : plan.blurs) summary.directories.push_back(b.name());
  for (const auto& d : plan.deforms) {
    for (const auto& b : plan.blurs) summary.directories.push_back(combination_name(d, b));
  }
  for (const auto& dir : summary.directories) {
    std::filesystem::create_directories(out_dir / dir);
  }

  std::vector<std::uint64_t> seeds(ingest.images.size());
  detail::parallel_for(ingest.images.size(), jobs, [&](std::size_t i) {
    const NamedImage& img = ingest.images[i];
    const std::string file = img.name + ".png";
    const ImageTriplets t = make_triplets(img.image, img.index, plan);
    seeds[i] = t.seed;
    write_image_file(out_dir / "gt" / file, img.image.to_image());
    for (std::size_t b = 0; b < plan.blurs.size(); ++b) {
      write_image_file(out_dir / plan.blurs[b].name() / file, t.blurred[b].to_image());
    }
    for (std::size_t d = 0; d < plan.deforms.size(); ++d) {
      for (std::size_t b = 0; b < plan.blurs.size(); ++b) {
        write_image_file(out_dir / combination_name(plan.deforms[d], plan.blurs[b]) / file,
                         t.deformed_blurred[d][b].to_image());
      }
    }
  });
  summary.images_written = ingest.images.size();

  nlohmann::ordered_json manifest;
  manifest["tool"] = "lassim degrade";
  manifest["source_dir"] = src_dir.string();
  manifest["plan"] = plan_to_json(plan);
  manifest["order"] = "deform_then_blur";
  manifest["seed_derivation"] = "splitmix64(seed ^ splitmix64(index))";
  nlohmann::ordered_json images = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < ingest.images.size(); ++i) {
    images.push_back({{"name", ingest.images[i].name},
                      {"index", ingest.images[i].index},
                      {"width", ingest.images[i].image.width()},
                      {"height", ingest.images[i].image.height()},
                      {"seed", seeds[i]}});
  }
  manifest["images"] = images;
  manifest["failures"] = summary.failures;
  manifest["directories"] = summary.directories;
  const std::string text = manifest.dump(2) + "\n";
  write_file_bytes(out_dir / "manifest.json",
                   {reinterpret_cast<const std::uint8_t*>(text.data()), text.size()});
  return summary;
}

}  // namespace lassim
