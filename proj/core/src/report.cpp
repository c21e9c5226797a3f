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

#include <cstdio>
#include <sstream>

#include "json_io.hpp"
#include "lassim/codec.hpp"
#include "lassim/error.hpp"
#include "lassim/harness.hpp"

namespace lassim {
namespace {

using ojson = nlohmann::ordered_json;

const char* kCsvHeader =
    "deform,blur,n,ssim_blur_mean,ssim_blur_std,ssim_deform_mean,ssim_deform_std,js_ssim,"
    "lassim_blur_mean,lassim_blur_std,lassim_deform_mean,lassim_deform_std,js_lassim";

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string mean_std(const Summary& s) { return fixed3(s.mean) + "±" + fixed3(s.std); }

ojson summary_to_json(const Summary& s) {
  return {{"mean", s.mean}, {"std", s.std}, {"n", s.n}};
}

Summary summary_from_json(const ojson& j) {
  Summary s;
  s.mean = j.at("mean").get<double>();
  s.std = j.at("std").get<double>();
  s.n = j.at("n").get<std::size_t>();
  s.std_defined = s.n >= 2;
  return s;
}

ojson comparison_to_json(const MetricComparison& m, bool with_deform) {
  ojson j = {{"blur", summary_to_json(m.blur)}};
  if (with_deform) {
    j["deform"] = summary_to_json(m.deform);
    j["js"] = m.js;
  }
  return j;
}

MetricComparison comparison_from_json(const ojson& j) {
  MetricComparison m;
  m.blur = summary_from_json(j.at("blur"));
  if (j.contains("deform")) {
    m.deform = summary_from_json(j.at("deform"));
    m.js = j.at("js").get<double>();
  }
  return m;
}

Intensity label_from_json(const ojson& j) {
  return parse_intensity(j.at("label").get<std::string>());
}

ojson metadata_to_json(const RunMetadata& m) {
  ojson blurs = ojson::array();
  for (const auto& b : m.blurs) blurs.push_back(blur_to_json(b));
  ojson deforms = ojson::array();
  for (const auto& d : m.deforms) deforms.push_back(elastic_to_json(d));
  return {{"source_dir", m.source_dir},
          {"seed", m.seed},
          {"level", m.level},
          {"bins", m.bins},
          {"log_base", m.log_base},
          {"sample_count", m.sample_count},
          {"images_scored", m.images_scored},
          {"pyramid", pyramid_to_json(m.pyramid)},
          {"ssim", ssim_to_json(m.ssim)},
          {"blur_levels", blurs},
          {"deform_levels", deforms},
          {"skipped", m.skipped},
          {"warnings", m.warnings},
          {"wall_time_seconds", m.wall_time_seconds}};
}

RunMetadata metadata_from_json(const ojson& j) {
  RunMetadata m;
  m.source_dir = j.at("source_dir").get<std::string>();
  m.seed = j.at("seed").get<std::uint64_t>();
  m.level = j.at("level").get<int>();
  m.bins = j.at("bins").get<int>();
  m.log_base = j.at("log_base").get<std::string>();
  m.sample_count = j.at("sample_count").get<std::size_t>();
  m.images_scored = j.at("images_scored").get<std::size_t>();
  m.pyramid.levels = j.at("pyramid").at("levels").get<int>();
  m.pyramid.kernel = j.at("pyramid").at("kernel").get<std::vector<double>>();
  const auto& s = j.at("ssim");
  m.ssim.window_size = s.at("window_size").get<int>();
  m.ssim.window_sigma = s.at("window_sigma").get<double>();
  m.ssim.window =
      s.at("window").get<std::string>() == "uniform" ? WindowKind::kUniform : WindowKind::kGaussian;
  m.ssim.k1 = s.at("k1").get<double>();
  m.ssim.k2 = s.at("k2").get<double>();
  m.ssim.data_range = s.at("data_range").get<double>();
  for (const auto& b : j.at("blur_levels")) {
    BlurSpec spec;
    spec.label = label_from_json(b);
    spec.sigma = b.at("sigma").get<double>();
    spec.kernel_extent = b.at("kernel_extent").get<int>();
    m.blurs.push_back(spec);
  }
  for (const auto& d : j.at("deform_levels")) {
    ElasticSpec spec;
    spec.label = label_from_json(d);
    spec.sigma_smooth = d.at("sigma_smooth").get<double>();
    spec.alpha = d.at("alpha").get<double>();
    m.deforms.push_back(spec);
  }
  m.skipped = j.at("skipped").get<std::vector<std::string>>();
  m.warnings = j.at("warnings").get<std::vector<std::string>>();
  m.wall_time_seconds = j.at("wall_time_seconds").get<double>();
  return m;
}

std::string render_markdown(const ValidityReport& r) {
  std::string out =
      "| [def, blur] | SSIM(GT, blur) | SSIM(GT, deform+blur) | JS_SSIM "
      "| LaSSIM(GT, blur) | LaSSIM(GT, deform+blur) | JS_LaSSIM |\n"
      "|---|---|---|---|---|---|---|\n";
  for (const auto& row : r.rows) {
    const std::string def = row.has_deform() ? row.deform_label + "_def" : "-";
    out += "| [" + def + ", " + row.blur_label + "_blur] | " + mean_std(row.ssim.blur) + " | ";
    if (row.has_deform()) {
      out += mean_std(row.ssim.deform) + " | " + fixed3(row.ssim.js) + " | ";
    } else {
      out += "- | - | ";
    }
    out += mean_std(row.lassim.blur) + " | ";
    if (row.has_deform()) {
      out += mean_std(row.lassim.deform) + " | " + fixed3(row.lassim.js) + " |\n";
    } else {
      out += "- | - |\n";
    }
  }
  out += "\nLaSSIM level " + std::to_string(r.meta.level) + ", " +
         std::to_string(r.meta.images_scored) + " images, seed " +
         std::to_string(r.meta.seed) + ", " + std::to_string(r.meta.bins) +
         " bins, JS log base " + r.meta.log_base + ".\n";
  return out;
}

std::string render_csv(const ValidityReport& r) {
  std::string out = "# metadata: " + metadata_to_json(r.meta).dump() + "\n";
  out += kCsvHeader;
  out += "\n";
  for (const auto& row : r.rows) {
    const bool d = row.has_deform();
    out += row.deform_label + "," + row.blur_label + "," + std::to_string(row.ssim.blur.n) +
           "," + num(row.ssim.blur.mean) + "," + num(row.ssim.blur.std) + "," +
           (d ? num(row.ssim.deform.mean) : "") + "," + (d ? num(row.ssim.deform.std) : "") +
           "," + (d ? num(row.ssim.js) : "") + "," + num(row.lassim.blur.mean) + "," +
           num(row.lassim.blur.std) + "," + (d ? num(row.lassim.deform.mean) : "") + "," +
           (d ? num(row.lassim.deform.std) : "") + "," + (d ? num(row.lassim.js) : "") + "\n";
  }
  return out;
}

std::string render_json(const ValidityReport& r) {
  ojson rows = ojson::array();
  for (const auto& row : r.rows) {
    ojson j;
    j["deform"] = row.deform_label;
    j["blur"] = row.blur_label;
    j["ssim"] = comparison_to_json(row.ssim, row.has_deform());
    j["lassim"] = comparison_to_json(row.lassim, row.has_deform());
    rows.push_back(std::move(j));
  }
  ojson doc = {{"rows", rows}, {"metadata", metadata_to_json(r.meta)}};
  return doc.dump(2) + "\n";
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw InvalidArgumentError("bad number '" + s + "' in report CSV");
  return v;
}

ValidityReport parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  ValidityReport r;
  bool have_meta = false;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("# metadata: ", 0) == 0) {
      r.meta = metadata_from_json(ojson::parse(line.substr(12)));
      have_meta = true;
      continue;
    }
    if (!have_header) {
      if (line != kCsvHeader) throw InvalidArgumentError("unexpected report CSV header");
      have_header = true;
      continue;
    }
    const auto f = split_csv_line(line);
    if (f.size() != 13) throw InvalidArgumentError("report CSV row has wrong field count");
    ReportRow row;
    row.deform_label = f[0];
    row.blur_label = f[1];
    const auto n = static_cast<std::size_t>(std::stoull(f[2]));
    const bool d = row.has_deform();
    auto summary = [&](const std::string& mean, const std::string& sd) {
      Summary s;
      s.mean = parse_double(mean);
      s.std = parse_double(sd);
      s.n = n;
      s.std_defined = n >= 2;
      return s;
    };
    row.ssim.blur = summary(f[3], f[4]);
    row.lassim.blur = summary(f[8], f[9]);
    if (d) {
      row.ssim.deform = summary(f[5], f[6]);
      row.ssim.js = parse_double(f[7]);
      row.lassim.deform = summary(f[10], f[11]);
      row.lassim.js = parse_double(f[12]);
    }
    r.rows.push_back(std::move(row));
  }
  if (!have_meta || !have_header) throw InvalidArgumentError("incomplete report CSV");
  return r;
}

ValidityReport parse_json(const std::string& text) {
  const ojson doc = ojson::parse(text);
  ValidityReport r;
  for (const auto& j : doc.at("rows")) {
    ReportRow row;
    row.deform_label = j.at("deform").get<std::string>();
    row.blur_label = j.at("blur").get<std::string>();
    row.ssim = comparison_from_json(j.at("ssim"));
    row.lassim = comparison_from_json(j.at("lassim"));
    r.rows.push_back(std::move(row));
  }
  r.meta = metadata_from_json(doc.at("metadata"));
  return r;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  write_file_bytes(path, {reinterpret_cast<const std::uint8_t*>(text.data()), text.size()});
}

}  // namespace

std::string render_report(const ValidityReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::kMarkdown: return render_markdown(report);
    case ReportFormat::kCsv: return render_csv(report);
    case ReportFormat::kJson: return render_json(report);
  }
  return {};
}

ValidityReport parse_report(const std::string& text, ReportFormat format) {
  try {
    switch (format) {
      case ReportFormat::kCsv: return parse_csv(text);
      case ReportFormat::kJson: return parse_json(text);
      case ReportFormat::kMarkdown: break;
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgumentError(std::string("malformed report: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InvalidArgumentError(std::string("malformed report: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw InvalidArgumentError(std::string("malformed report: ") + e.what());
  }
  throw InvalidArgumentError("markdown reports cannot be parsed back");
}

void write_report_files(const ValidityReport& report, const ExperimentConfig& cfg,
                        const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir / "scores");
  write_text(out_dir / "report.md", render_report(report, ReportFormat::kMarkdown));
  write_text(out_dir / "report.csv", render_report(report, ReportFormat::kCsv));
  write_text(out_dir / "report.json", render_report(report, ReportFormat::kJson));

  const auto& plan = cfg.plan;
  auto scores_csv = [&](auto pick) {
    std::string out = "filename,ssim,lassim\n";
    for (const auto& s : report.per_image) {
      const auto [sv, lv] = pick(s);
      out += s.name + "," + num(sv) + "," + num(lv) + "\n";
    }
    return out;
  };
  for (std::size_t b = 0; b < plan.blurs.size(); ++b) {
    write_text(out_dir / "scores" / (plan.blurs[b].name() + ".csv"),
               scores_csv([&](const ImageScores& s) {
                 return std::pair{s.ssim_blur[b], s.lassim_blur[b]};
               }));
  }
  for (std::size_t d = 0; d < plan.deforms.size(); ++d) {
    for (std::size_t b = 0; b < plan.blurs.size(); ++b) {
      write_text(out_dir / "scores" / (combination_name(plan.deforms[d], plan.blurs[b]) + ".csv"),
                 scores_csv([&](const ImageScores& s) {
                   return std::pair{s.ssim_deform[d][b], s.lassim_deform[d][b]};
                 }));
    }
  }

  ojson manifest;
  manifest["tool"] = "lassim validate";
  manifest["config"] = {{"source_dir", cfg.source_dir.string()},
                        {"sample_count", cfg.sample_count},
                        {"level", cfg.level},
                        {"bins", cfg.bins},
                        {"log_base", cfg.log_base == LogBase::kTwo ? "2" : "e"},
                        {"pyramid", pyramid_to_json(cfg.pyramid)},
                        {"ssim", ssim_to_json(cfg.ssim)},
                        {"plan", plan_to_json(cfg.plan)}};
  manifest["images_scored"] = report.meta.images_scored;
  manifest["skipped"] = report.meta.skipped;
  manifest["files"] = {"report.md", "report.csv", "report.json"};
  write_text(out_dir / "manifest.json", manifest.dump(2) + "\n");
}

}  // namespace lassim
