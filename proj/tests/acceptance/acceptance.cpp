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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "lassim/codec.hpp"
#include "lassim/dataset.hpp"
#include "lassim/degrade.hpp"
#include "lassim/harness.hpp"
#include "lassim/metrics.hpp"
#include "lassim/pyramid.hpp"
#include "lassim/stats.hpp"

namespace fs = std::filesystem;
using namespace lassim;

namespace {

// Tolerances.
constexpr double kReconstructionTol = 1e-6;
constexpr double kOracleTol = 1e-9;
constexpr double kIdentityTol = 1e-12;
constexpr double kOffsetSsimMax = 0.999;
constexpr double kOffsetLassimMin = 0.999999;
constexpr double kSeparationSsimMax = 0.1;
constexpr double kSeparationLassimMin = 0.3;
constexpr double kBlurGapMin = 0.1;
constexpr std::size_t kMinCorpus = 100;

struct Check {
  bool ok = true;
  std::ostringstream detail;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail << what;
      ok = false;
    }
  }
};

LumaImage random_luma(int w, int h, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 255.0);
  LumaImage img(w, h);
  for (double& v : img.data()) v = u(rng);
  return img;
}

double max_abs_diff(const LumaImage& a, const LumaImage& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

// Independent brute-force SSIM over all fully-inside 11x11 Gaussian windows.
double naive_ssim(const LumaImage& a, const LumaImage& b) {
  constexpr int kWin = 11;
  double w1[kWin], s = 0.0;
  for (int i = 0; i < kWin; ++i) {
    w1[i] = std::exp(-(i - 5) * (i - 5) / (2 * 1.5 * 1.5));
    s += w1[i];
  }
  for (double& v : w1) v /= s;
  const double c1 = 2.55 * 2.55, c2 = 7.65 * 7.65;
  double total = 0.0;
  int count = 0;
  for (int y0 = 0; y0 + kWin <= a.height(); ++y0) {
    for (int x0 = 0; x0 + kWin <= a.width(); ++x0) {
      double ma = 0, mb = 0;
      for (int j = 0; j < kWin; ++j) {
        for (int i = 0; i < kWin; ++i) {
          ma += w1[i] * w1[j] * a.at(x0 + i, y0 + j);
          mb += w1[i] * w1[j] * b.at(x0 + i, y0 + j);
        }
      }
      double va = 0, vb = 0, cv = 0;
      for (int j = 0; j < kWin; ++j) {
        for (int i = 0; i < kWin; ++i) {
          const double da = a.at(x0 + i, y0 + j) - ma, db = b.at(x0 + i, y0 + j) - mb;
          va += w1[i] * w1[j] * da * da;
          vb += w1[i] * w1[j] * db * db;
          cv += w1[i] * w1[j] * da * db;
        }
      }
      total += (2 * ma * mb + c1) * (2 * cv + c2) / ((ma * ma + mb * mb + c1) * (va + vb + c2));
      ++count;
    }
  }
  return total / count;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct CliResult {
  int code;
  std::string out, err;
};

CliResult cli(std::vector<std::string> args) {
  args.insert(args.begin(), "lassim");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err, nullptr);
  return {code, out.str(), err.str()};
}

// ---------------------------------------------------------------------------

Check pyramid_exactness() {
  Check c;
  std::mt19937_64 rng(1);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    int w, h;
    if (i == 0) {
      w = 480, h = 272;
    } else if (i == 1) {
      w = 479, h = 271;
    } else {
      w = 16 + static_cast<int>(rng() % 300);
      h = 16 + static_cast<int>(rng() % 300);
    }
    const LumaImage img = random_luma(w, h, rng);
    PyramidParams p;
    const auto pyr = build_pyramid(img, p);
    worst = std::max(worst, max_abs_diff(reconstruct(pyr, p.kernel), img));
  }
  c.detail << "max reconstruction error " << worst;
  c.expect(worst <= kReconstructionTol, "");
  return c;
}

Check ssim_oracle() {
  Check c;
  std::mt19937_64 rng(2);
  std::normal_distribution<double> noise(0.0, 30.0);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const LumaImage a = random_luma(32, 32, rng);
    LumaImage b = (i % 2) ? random_luma(32, 32, rng) : a;
    if (i % 2 == 0) {
      for (double& v : b.data()) v += noise(rng);
    }
    worst = std::max(worst, std::abs(ssim(a, b) - naive_ssim(a, b)));
    c.expect(ssim(a, a) == 1.0, "ssim(x,x) != 1; ");
    c.expect(ssim(a, b) == ssim(b, a), "asymmetric; ");
  }
  c.detail << "max |ssim - naive| " << worst;
  c.expect(worst <= kOracleTol, "");
  return c;
}

Check identity_suite(const std::vector<fs::path>& corpus, const fs::path& scratch) {
  Check c;
  const LumaImage x = to_luma(read_image_file(corpus.front()));
  for (int l = 0; l <= 4; ++l) {
    c.expect(std::abs(lassim::lassim(x, x, l) - 1.0) <= kIdentityTol, "lassim(x,x) != 1; ");
  }
  const std::vector<double> scores = {0.3, 0.5, 0.51, 0.9};
  const auto d = build_distribution(scores);
  c.expect(js_divergence(d, d).js == 0.0, "js(P,P) != 0; ");

  ElasticSpec zero = default_elastic(Intensity::kHigh, 123);
  zero.alpha = 0.0;
  c.expect(elastic_transform(x, make_displacement_field(x.width(), x.height(), zero)) == x,
           "alpha=0 elastic not identity; ");

  // Two full reruns of the set generator and of the experiment.
  const fs::path src = scratch / "identity_src";
  fs::create_directories(src);
  for (std::size_t i = 0; i < 3; ++i) fs::copy_file(corpus[i], src / corpus[i].filename());
  const auto plan = DegradationPlan::defaults();
  write_triplet_sets(src, scratch / "run1", plan, 1);
  write_triplet_sets(src, scratch / "run2", plan, 2);
  std::size_t compared = 0;
  for (const auto& entry : fs::recursive_directory_iterator(scratch / "run1")) {
    if (!entry.is_regular_file()) continue;
    const fs::path rel = fs::relative(entry.path(), scratch / "run1");
    if (rel == "manifest.json") continue;
    c.expect(slurp(entry.path()) == slurp(scratch / "run2" / rel), "rerun differs: " + rel.string() + "; ");
    ++compared;
  }
  ExperimentConfig cfg;
  cfg.source_dir = src;
  const auto r1 = run_validity_experiment(cfg);
  const auto r2 = run_validity_experiment(cfg);
  c.expect(render_report(r1, ReportFormat::kMarkdown) == render_report(r2, ReportFormat::kMarkdown),
           "report rerun differs; ");
  c.detail << "levels 0-4 identity, " << compared << " regenerated files byte-identical";
  return c;
}

Check global_offset(const std::vector<fs::path>& corpus) {
  Check c;
  double max_ssim = 0.0, min_lassim = 1.0;
  const std::size_t stride = corpus.size() / 20;
  for (std::size_t i = 0; i < 20; ++i) {
    const LumaImage x = to_luma(read_image_file(corpus[i * stride]));
    for (double off : {-50.0, -10.0, 10.0, 50.0}) {
      LumaImage y = x;
      for (double& v : y.data()) v += off;
      max_ssim = std::max(max_ssim, ssim(x, y));
      for (int l = 1; l <= 4; ++l) min_lassim = std::min(min_lassim, lassim::lassim(x, y, l));
    }
  }
  c.detail << "max ssim " << max_ssim << ", min lassim(l=1..4) " << min_lassim;
  c.expect(max_ssim < kOffsetSsimMax && min_lassim >= kOffsetLassimMin, "");
  return c;
}

Check separation(const ValidityReport& r) {
  Check c;
  for (const auto& row : r.rows) {
    c.expect(row.lassim.js > row.ssim.js,
             "[" + row.deform_label + "_def, " + row.blur_label + "_blur] not separated; ");
  }
  for (const auto& row : r.rows) {
    if (row.deform_label == "M" && row.blur_label == "H") {
      char buf[160];
      std::snprintf(buf, sizeof buf, "%zu images, [M_def, H_blur] JS_SSIM %.3f JS_LaSSIM %.3f",
                    r.meta.images_scored, row.ssim.js, row.lassim.js);
      c.detail << buf;
      c.expect(row.ssim.js <= kSeparationSsimMax && row.lassim.js >= kSeparationLassimMin, "");
    }
  }
  c.expect(r.meta.images_scored >= kMinCorpus, "; fewer than 100 images");
  c.expect(r.rows.size() == 9, "; expected 9 rows");
  return c;
}

const ReportRow* find_row(const ValidityReport& r, const std::string& def, const std::string& blur) {
  for (const auto& row : r.rows) {
    if (row.deform_label == def && row.blur_label == blur) return &row;
  }
  return nullptr;
}

Check monotonicity(const ValidityReport& r) {
  Check c;
  const char* lv[] = {"L", "M", "H"};
  for (int b = 0; b < 2; ++b) {
    c.expect(find_row(r, "L", lv[b])->ssim.blur.mean > find_row(r, "L", lv[b + 1])->ssim.blur.mean,
             "SSIM(GT, blur) not decreasing; ");
  }
  for (const char* blur : lv) {
    for (int d = 0; d < 2; ++d) {
      c.expect(find_row(r, lv[d], blur)->lassim.deform.mean >
                   find_row(r, lv[d + 1], blur)->lassim.deform.mean,
               std::string("LaSSIM(GT, deform+blur) not decreasing at ") + blur + "_blur; ");
    }
  }
  char buf[200];
  std::snprintf(buf, sizeof buf, "SSIM blur %.3f>%.3f>%.3f; LaSSIM def@L_blur %.3f>%.3f>%.3f",
                find_row(r, "L", "L")->ssim.blur.mean, find_row(r, "L", "M")->ssim.blur.mean,
                find_row(r, "L", "H")->ssim.blur.mean, find_row(r, "L", "L")->lassim.deform.mean,
                find_row(r, "M", "L")->lassim.deform.mean, find_row(r, "H", "L")->lassim.deform.mean);
  c.detail << buf;
  return c;
}

Check blur_gap(const ValidityReport& r) {
  Check c;
  const ReportRow* row = find_row(r, "L", "H");
  const double gap = row->lassim.blur.mean - row->ssim.blur.mean;
  char buf[120];
  std::snprintf(buf, sizeof buf, "H_blur LaSSIM %.3f - SSIM %.3f = %.3f", row->lassim.blur.mean,
                row->ssim.blur.mean, gap);
  c.detail << buf;
  c.expect(gap >= kBlurGapMin, "");
  return c;
}

// Writes dark smooth waves on which pixel SSIM separates better than LaSSIM.
void write_dark_waves(const fs::path& dir) {
  fs::create_directories(dir);
  for (int i = 0; i < 6; ++i) {
    Image img(160, 128, 1);
    for (int y = 0; y < 128; ++y) {
      for (int x = 0; x < 160; ++x) {
        img.at(x, y) = std::nearbyint(12.0 + 12.0 * std::sin(2 * std::numbers::pi * x / (40.0 + 5 * i) + i) *
                                                  std::sin(2 * std::numbers::pi * y / (36.0 + 3 * i)));
      }
    }
    write_image_file(dir / ("w" + std::to_string(i) + ".png"), img);
  }
}

Check cli_contract(const std::vector<fs::path>& corpus, const fs::path& golden,
                   const fs::path& scratch) {
  Check c;
  const std::vector<std::pair<std::string, std::vector<std::string>>> helps = {
      {"help.txt", {"--help"}},
      {"help_ssim.txt", {"ssim", "--help"}},
      {"help_lassim.txt", {"lassim", "--help"}},
      {"help_pyramid.txt", {"pyramid", "--help"}},
      {"help_degrade.txt", {"degrade", "--help"}},
      {"help_validate.txt", {"validate", "--help"}},
      {"help_score_pairs.txt", {"score-pairs", "--help"}},
  };
  for (const auto& [file, args] : helps) {
    const CliResult r = cli(args);
    c.expect(r.code == 0 && r.out == slurp(golden / file), "help differs: " + file + "; ");
  }

  const std::string a = corpus[0].string(), b = corpus[1].string();
  const std::regex score(R"(-?\d\.\d{6}\n)");
  const CliResult s = cli({"ssim", a, b});
  c.expect(s.code == 0 && std::regex_match(s.out, score), "ssim output format; ");
  const CliResult l = cli({"lassim", a, b});
  c.expect(l.code == 0 && std::regex_match(l.out, score), "lassim output format; ");
  c.expect(cli({"ssim", a}).code == 1, "missing arg exit; ");
  c.expect(cli({"lassim", a, b, "--level", "9"}).code == 1, "too-deep exit; ");
  c.expect(cli({"ssim", a, (scratch / "missing.png").string()}).code == 1, "missing file exit; ");

  write_dark_waves(scratch / "dark");
  c.expect(cli({"validate", "--source", (scratch / "dark").string(), "--level", "2",
                "--blur-levels", "L", "--deform-levels", "L"})
                   .code == 2,
           "separation failure exit; ");

  const fs::path src = scratch / "cli_src";
  fs::create_directories(src);
  for (std::size_t i = 0; i < 8; ++i) fs::copy_file(corpus[i * 7], src / corpus[i * 7].filename());
  const CliResult v1 = cli({"validate", "--source", src.string(), "--jobs", "1"});
  const CliResult v4 = cli({"validate", "--source", src.string(), "--jobs", "4"});
  c.expect(v1.code != 1 && v1.out == v4.out && !v1.out.empty(), "validate --jobs dependence; ");
  const CliResult d1 = cli({"degrade", src.string(), (scratch / "d1").string(), "--jobs", "1"});
  const CliResult d3 = cli({"degrade", src.string(), (scratch / "d3").string(), "--jobs", "3"});
  c.expect(d1.code == 0 && d3.code == 0, "degrade exit; ");
  std::size_t files = 0;
  for (const auto& e : fs::recursive_directory_iterator(scratch / "d1")) {
    if (!e.is_regular_file()) continue;
    const fs::path rel = fs::relative(e.path(), scratch / "d1");
    c.expect(slurp(e.path()) == slurp(scratch / "d3" / rel), "degrade --jobs dependence; ");
    ++files;
  }
  c.detail << helps.size() << " help goldens, score format, exit codes 0/1/2, " << files
           << " files identical across --jobs";
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  fs::path data, golden;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string key = argv[i];
    if (key == "--data") data = argv[i + 1];
    if (key == "--golden") golden = argv[i + 1];
  }
  if (data.empty() || golden.empty()) {
    std::cerr << "usage: lassim_acceptance --data <image dir> --golden <golden dir>\n";
    return 1;
  }
  const fs::path scratch = fs::temp_directory_path() / "lassim_acceptance";
  fs::remove_all(scratch);
  fs::create_directories(scratch);

  const auto corpus = list_image_files(data);
  int failures = 0;
  auto report_line = [&](int id, const char* name, const std::function<Check()>& fn) {
    Check c;
    try {
      c = fn();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail << "exception: " << e.what();
    }
    std::cout << (c.ok ? "PASS" : "FAIL") << " [" << id << "] " << name << ": " << c.detail.str()
              << std::endl;
    if (!c.ok) ++failures;
  };

  report_line(1, "pyramid exactness", pyramid_exactness);
  report_line(2, "SSIM oracle equivalence", ssim_oracle);
  report_line(3, "identity suite", [&] { return identity_suite(corpus, scratch); });
  report_line(4, "global-offset property", [&] { return global_offset(corpus); });

  ValidityReport report;
  std::string experiment_error;
  try {
    ExperimentConfig cfg;
    cfg.source_dir = data;
    report = run_validity_experiment(cfg);
    std::cout << render_report(report, ReportFormat::kMarkdown);
  } catch (const std::exception& e) {
    experiment_error = e.what();
  }
  auto with_report = [&](Check (*fn)(const ValidityReport&)) {
    return [&, fn] {
      if (!experiment_error.empty()) throw std::runtime_error(experiment_error);
      return fn(report);
    };
  };
  report_line(5, "separation replication", with_report(separation));
  report_line(6, "monotonicity replication", with_report(monotonicity));
  report_line(7, "blur-robustness gap", with_report(blur_gap));
  report_line(8, "CLI contract", [&] { return cli_contract(corpus, golden, scratch); });

  fs::remove_all(scratch);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
