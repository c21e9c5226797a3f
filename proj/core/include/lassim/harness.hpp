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

#include "lassim/dataset.hpp"
#include "lassim/metrics.hpp"
#include "lassim/pyramid.hpp"
#include "lassim/stats.hpp"

namespace lassim {

struct ExperimentConfig {
  std::filesystem::path source_dir;
  std::size_t sample_count = 1000;
  int level = kDefaultLassimLevel;
  PyramidParams pyramid;
  SsimParams ssim;
  // Intensity tables and the global seed.
  DegradationPlan plan = DegradationPlan::defaults();
  int bins = 100;
  LogBase log_base = LogBase::kTwo;
  // Worker threads for the per-image loop. Never affects the results.
  int jobs = 1;

  void validate() const;
};

struct MetricComparison {
  Summary blur;    // metric(GT, blur)
  Summary deform;  // metric(GT, deform+blur); n == 0 in blur-only rows
  double js = 0.0;
};

struct ReportRow {
  std::string deform_label;  // empty when the plan has no deformation levels
  std::string blur_label;
  MetricComparison ssim;
  MetricComparison lassim;

  bool has_deform() const noexcept { return !deform_label.empty(); }
};

// Per-image scores, indexed like the plan.
struct ImageScores {
  std::string name;
  std::vector<double> ssim_blur;                 // [blur]
  std::vector<double> lassim_blur;               // [blur]
  std::vector<std::vector<double>> ssim_deform;  // [deform][blur]
  std::vector<std::vector<double>> lassim_deform;
};

struct RunMetadata {
  std::string source_dir;
  std::uint64_t seed = 0;
  int level = kDefaultLassimLevel;
  int bins = 100;
  std::string log_base = "2";
  std::size_t sample_count = 0;  // requested
  std::size_t images_scored = 0;
  PyramidParams pyramid;
  SsimParams ssim;
  std::vector<BlurSpec> blurs;
  std::vector<ElasticSpec> deforms;
  std::vector<std::string> skipped;  // "<file>: <reason>"
  std::vector<std::string> warnings;
  double wall_time_seconds = 0.0;
};

struct ValidityReport {
  // Blur-major order: [L_def, L_blur], [M_def, L_blur], ..., [H_def, H_blur].
  std::vector<ReportRow> rows;
  RunMetadata meta;
  // Not part of the rendered report; written to scores/<combination>.csv.
  std::vector<ImageScores> per_image;

  // JS_LaSSIM >= JS_SSIM in every row that has a deformation.
  bool separation_holds() const;
};

// Builds the degraded sets image by image, scores (GT, blur) and
// (GT, deform+blur) with SSIM and level-l LaSSIM, and compares the score
// distributions with the JS divergence. Images that fail to decode or are too
// small for the level are skipped and listed. Throws IngestionError when no
// image can be scored.
ValidityReport run_validity_experiment(const ExperimentConfig& cfg);

enum class ReportFormat { kMarkdown, kCsv, kJson };

std::string render_report(const ValidityReport& report, ReportFormat format);
// Inverse of the CSV and JSON renderings (per_image is not restored).
ValidityReport parse_report(const std::string& text, ReportFormat format);

// Writes report.{md,csv,json}, scores/<combination>.csv and manifest.json.
void write_report_files(const ValidityReport& report, const ExperimentConfig& cfg,
                        const std::filesystem::path& out_dir);

enum class MetricKind { kSsim, kLassim };

struct MetricChoice {
  MetricKind kind = MetricKind::kSsim;
  int level = kDefaultLassimLevel;

  // "ssim", "lassim" or "lassim@<level>".
  static MetricChoice parse(const std::string& text);
  std::string name() const;
};

struct PairScore {
  std::string filename;
  double score = 0.0;
};

struct ScorePairsResult {
  std::vector<PairScore> rows;  // sorted by filename
  std::vector<std::string> only_in_a;
  std::vector<std::string> only_in_b;
  std::vector<std::string> failures;  // "<file>: <reason>"
};

// Scores same-named images of two directories. Throws IngestionError when
// the directories share no filename.
ScorePairsResult score_pairs(const std::filesystem::path& set_a,
                             const std::filesystem::path& set_b, const MetricChoice& metric,
                             const PyramidParams& pyr = {}, const SsimParams& ssim = {},
                             int jobs = 1);

// "filename,<metric>" header plus one row per pair, 6 decimals.
std::string score_pairs_csv(const ScorePairsResult& result, const MetricChoice& metric);

}  // namespace lassim
