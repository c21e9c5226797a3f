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

#include "lassim/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <optional>
#include <random>

#include "lassim/codec.hpp"
#include "lassim/error.hpp"
#include "parallel.hpp"

namespace lassim {
namespace {

// Deterministic Fisher-Yates; std::shuffle is not portable across standard
// libraries.
std::vector<std::size_t> seeded_sample(std::size_t population, std::size_t count,
                                       std::uint64_t seed) {
  std::vector<std::size_t> idx(population);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::mt19937_64 rng(splitmix64(seed));
  for (std::size_t i = population; i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(idx[i - 1], idx[j]);
  }
  idx.resize(count);
  std::sort(idx.begin(), idx.end());
  return idx;
}

struct ImageOutcome {
  std::optional<ImageScores> scores;
  std::string skip_reason;
};

ImageOutcome score_image(const std::filesystem::path& file, std::uint64_t index,
                         const ExperimentConfig& cfg) {
  ImageOutcome out;
  LumaImage gt;
  try {
    gt = to_luma(read_image_file(file));
  } catch (const Error& e) {
    out.skip_reason = e.what();
    return out;
  }
  if (max_lassim_level(gt.width(), gt.height(), cfg.ssim) < cfg.level) {
    out.skip_reason = "level " + std::to_string(cfg.level) + " residual of a " +
                      std::to_string(gt.width()) + "x" + std::to_string(gt.height()) +
                      " image is smaller than the SSIM window";
    return out;
  }
  try {
    PyramidParams pyr = cfg.pyramid;
    pyr.levels = cfg.level + 1;
    const LumaImage gt_residual = residual_at(gt, cfg.level, pyr);
    auto lassim_vs_gt = [&](const LumaImage& img) {
      return ssim(gt_residual, residual_at(img, cfg.level, pyr), cfg.ssim);
    };

    const ImageTriplets t = make_triplets(gt, index, cfg.plan);
    ImageScores s;
    s.name = file.filename().string();
    for (const auto& blurred : t.blurred) {
      s.ssim_blur.push_back(ssim(gt, blurred, cfg.ssim));
      s.lassim_blur.push_back(lassim_vs_gt(blurred));
    }
    for (const auto& row : t.deformed_blurred) {
      auto& ss = s.ssim_deform.emplace_back();
      auto& ls = s.lassim_deform.emplace_back();
      for (const auto& img : row) {
        ss.push_back(ssim(gt, img, cfg.ssim));
        ls.push_back(lassim_vs_gt(img));
      }
    }
    out.scores = std::move(s);
  } catch (const Error& e) {
    out.skip_reason = e.what();
  }
  return out;
}

MetricComparison compare(const std::vector<double>& blur_scores,
                         const std::vector<double>* deform_scores,
                         const ExperimentConfig& cfg) {
  MetricComparison m;
  m.blur = summarize(blur_scores);
  if (deform_scores != nullptr) {
    m.deform = summarize(*deform_scores);
    m.js = js_divergence(build_distribution(blur_scores, cfg.bins),
                         build_distribution(*deform_scores, cfg.bins), cfg.log_base)
               .js;
  }
  return m;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (sample_count < 1) throw InvalidArgumentError("sample_count must be >= 1");
  if (level < 0) throw InvalidArgumentError("pyramid level must be >= 0");
  if (bins < 1) throw InvalidArgumentError("bins must be >= 1");
  if (plan.blurs.empty()) throw InvalidArgumentError("at least one blur level is required");
  pyramid.validate();
  ssim.validate();
  plan.validate();
}

bool ValidityReport::separation_holds() const {
  return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) {
    return !r.has_deform() || r.lassim.js >= r.ssim.js;
  });
}

ValidityReport run_validity_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();

  std::vector<std::filesystem::path> files;
  try {
    files = list_image_files(cfg.source_dir);
  } catch (const IoError& e) {
    throw IngestionError(std::string("cannot read source directory: ") + e.what(),
                         {cfg.source_dir.string() + ": " + e.what()});
  }
  if (files.empty()) {
    throw IngestionError("no images in " + cfg.source_dir.string(), {});
  }

  ValidityReport report;
  RunMetadata& meta = report.meta;
  meta.source_dir = cfg.source_dir.string();
  meta.seed = cfg.plan.seed;
  meta.level = cfg.level;
  meta.bins = cfg.bins;
  meta.log_base = cfg.log_base == LogBase::kTwo ? "2" : "e";
  meta.sample_count = cfg.sample_count;
  meta.pyramid = cfg.pyramid;
  meta.ssim = cfg.ssim;
  meta.blurs = cfg.plan.blurs;
  meta.deforms = cfg.plan.deforms;

  std::vector<std::size_t> chosen(files.size());
  std::iota(chosen.begin(), chosen.end(), std::size_t{0});
  if (files.size() < cfg.sample_count) {
    meta.warnings.push_back("source holds " + std::to_string(files.size()) +
                            " images; sample_count reduced from " +
                            std::to_string(cfg.sample_count));
  } else if (files.size() > cfg.sample_count) {
    chosen = seeded_sample(files.size(), cfg.sample_count, cfg.plan.seed);
  }

  std::vector<ImageOutcome> outcomes(chosen.size());
  detail::parallel_for(chosen.size(), cfg.jobs, [&](std::size_t i) {
    outcomes[i] = score_image(files[chosen[i]], chosen[i], cfg);
  });

  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i].scores) {
      report.per_image.push_back(std::move(*outcomes[i].scores));
    } else {
      meta.skipped.push_back(files[chosen[i]].filename().string() + ": " +
                             outcomes[i].skip_reason);
    }
  }
  meta.images_scored = report.per_image.size();
  if (report.per_image.empty()) {
    throw IngestionError("no image in " + cfg.source_dir.string() + " could be scored",
                         meta.skipped);
  }

  const auto& plan = cfg.plan;
  auto column = [&](auto pick) {
    std::vector<double> v;
    v.reserve(report.per_image.size());
    for (const auto& s : report.per_image) v.push_back(pick(s));
    return v;
  };
  for (std::size_t b = 0; b < plan.blurs.size(); ++b) {
    const auto ssim_blur = column([&](const ImageScores& s) { return s.ssim_blur[b]; });
    const auto lassim_blur = column([&](const ImageScores& s) { return s.lassim_blur[b]; });
    if (plan.deforms.empty()) {
      ReportRow row;
      row.blur_label = intensity_label(plan.blurs[b].label);
      row.ssim = compare(ssim_blur, nullptr, cfg);
      row.lassim = compare(lassim_blur, nullptr, cfg);
      report.rows.push_back(std::move(row));
      continue;
    }
    for (std::size_t d = 0; d < plan.deforms.size(); ++d) {
      const auto ssim_def = column([&](const ImageScores& s) { return s.ssim_deform[d][b]; });
      const auto lassim_def =
          column([&](const ImageScores& s) { return s.lassim_deform[d][b]; });
      ReportRow row;
      row.deform_label = intensity_label(plan.deforms[d].label);
      row.blur_label = intensity_label(plan.blurs[b].label);
      row.ssim = compare(ssim_blur, &ssim_def, cfg);
      row.lassim = compare(lassim_blur, &lassim_def, cfg);
      report.rows.push_back(std::move(row));
    }
  }

  meta.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

MetricChoice MetricChoice::parse(const std::string& text) {
  MetricChoice m;
  if (text == "ssim") {
    m.kind = MetricKind::kSsim;
    return m;
  }
  if (text == "lassim") {
    m.kind = MetricKind::kLassim;
    return m;
  }
  if (text.rfind("lassim@", 0) == 0) {
    m.kind = MetricKind::kLassim;
    const std::string level = text.substr(7);
    std::size_t used = 0;
    int value = -1;
    try {
      value = std::stoi(level, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (level.empty() || used != level.size() || value < 0) {
      throw InvalidArgumentError("bad metric level in '" + text + "'");
    }
    m.level = value;
    return m;
  }
  throw InvalidArgumentError("unknown metric '" + text + "' (expected ssim or lassim@<l>)");
}

std::string MetricChoice::name() const {
  return kind == MetricKind::kSsim ? "ssim" : "lassim@" + std::to_string(level);
}

ScorePairsResult score_pairs(const std::filesystem::path& set_a,
                             const std::filesystem::path& set_b, const MetricChoice& metric,
                             const PyramidParams& pyr, const SsimParams& ssim_params,
                             int jobs) {
  std::map<std::string, std::filesystem::path> a_files;
  std::map<std::string, std::filesystem::path> b_files;
  for (const auto& p : list_image_files(set_a)) a_files[p.filename().string()] = p;
  for (const auto& p : list_image_files(set_b)) b_files[p.filename().string()] = p;

  ScorePairsResult result;
  std::vector<std::string> common;
  for (const auto& [name, path] : a_files) {
    if (b_files.count(name)) {
      common.push_back(name);
    } else {
      result.only_in_a.push_back(name);
    }
  }
  for (const auto& [name, path] : b_files) {
    if (!a_files.count(name)) result.only_in_b.push_back(name);
  }
  if (common.empty()) {
    throw IngestionError("no common filenames between " + set_a.string() + " and " +
                             set_b.string(),
                         {});
  }

  std::vector<std::optional<double>> scores(common.size());
  std::vector<std::string> errors(common.size());
  detail::parallel_for(common.size(), jobs, [&](std::size_t i) {
    try {
      const LumaImage a = to_luma(read_image_file(a_files.at(common[i])));
      const LumaImage b = to_luma(read_image_file(b_files.at(common[i])));
      scores[i] = metric.kind == MetricKind::kSsim
                      ? ssim(a, b, ssim_params)
                      : lassim(a, b, metric.level, pyr, ssim_params);
    } catch (const Error& e) {
      errors[i] = e.what();
    }
  });
  for (std::size_t i = 0; i < common.size(); ++i) {
    if (scores[i]) {
      result.rows.push_back({common[i], *scores[i]});
    } else {
      result.failures.push_back(common[i] + ": " + errors[i]);
    }
  }
  return result;
}

std::string score_pairs_csv(const ScorePairsResult& result, const MetricChoice& metric) {
  std::string out = "filename," + metric.name() + "\n";
  char buf[64];
  for (const auto& row : result.rows) {
    std::snprintf(buf, sizeof buf, "%.6f", row.score);
    out += row.filename + "," + buf + "\n";
  }
  return out;
}

}  // namespace lassim
