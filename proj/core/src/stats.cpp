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

#include "lassim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "lassim/error.hpp"

namespace lassim {

std::vector<double> ScoreDistribution::bin_edges() const {
  std::vector<double> edges(probabilities.size() + 1);
  for (int i = 0; i <= bins(); ++i) edges[i] = lo + (hi - lo) * i / bins();
  return edges;
}

ScoreDistribution ScoreDistribution::from_probabilities(std::vector<double> probabilities,
                                                        double lo, double hi) {
  if (probabilities.empty()) throw EmptyInputError("distribution needs at least one bin");
  if (!(hi > lo)) throw InvalidArgumentError("distribution range must have hi > lo");
  double total = 0.0;
  for (double v : probabilities) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw InvalidArgumentError("probabilities must be finite and non-negative");
    }
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw InvalidArgumentError("probabilities must sum to 1");
  }
  ScoreDistribution d;
  d.lo = lo;
  d.hi = hi;
  d.probabilities = std::move(probabilities);
  return d;
}

ScoreDistribution build_distribution(std::span<const double> scores, int bins, double lo,
                                     double hi) {
  if (scores.empty()) throw EmptyInputError("cannot build a distribution from no scores");
  if (bins < 1) throw InvalidArgumentError("bin count must be >= 1");
  if (!(hi > lo)) throw InvalidArgumentError("distribution range must have hi > lo");

  std::vector<double> counts(bins, 0.0);
  for (double s : scores) {
    if (!std::isfinite(s)) throw InvalidArgumentError("scores must be finite");
    const double t = (s - lo) / (hi - lo) * bins;
    const int b = t <= 0.0 ? 0 : static_cast<int>(std::min<double>(std::floor(t), bins - 1));
    counts[b] += 1.0;
  }
  const double n = static_cast<double>(scores.size());
  double total = 0.0;
  for (double& c : counts) {
    c = c / n + kHistogramSmoothing;
    total += c;
  }
  for (double& c : counts) c /= total;

  ScoreDistribution d;
  d.lo = lo;
  d.hi = hi;
  d.probabilities = std::move(counts);
  d.n_samples = scores.size();
  d.raw_scores.assign(scores.begin(), scores.end());
  return d;
}

DivergenceResult js_divergence(const ScoreDistribution& p, const ScoreDistribution& q,
                               LogBase base) {
  if (p.bins() != q.bins() || p.lo != q.lo || p.hi != q.hi) {
    throw BinningMismatchError("distributions use different binning (" +
                               std::to_string(p.bins()) + " vs " +
                               std::to_string(q.bins()) + " bins)");
  }
  if (p.bins() == 0) throw EmptyInputError("distributions have no bins");
  const double log_scale = base == LogBase::kTwo ? 1.0 / std::log(2.0) : 1.0;
  double kl_pm = 0.0;
  double kl_qm = 0.0;
  for (int i = 0; i < p.bins(); ++i) {
    const double pi = p.probabilities[i];
    const double qi = q.probabilities[i];
    const double mi = 0.5 * (pi + qi);
    if (pi > 0.0) kl_pm += pi * std::log(pi / mi);
    if (qi > 0.0) kl_qm += qi * std::log(qi / mi);
  }
  const double ceiling = base == LogBase::kTwo ? 1.0 : std::log(2.0);
  DivergenceResult r;
  r.js = std::clamp((0.5 * kl_pm + 0.5 * kl_qm) * log_scale, 0.0, ceiling);
  return r;
}

Summary summarize(std::span<const double> scores) {
  if (scores.empty()) throw EmptyInputError("cannot summarize no scores");
  Summary s;
  s.n = scores.size();
  s.mean = std::accumulate(scores.begin(), scores.end(), 0.0) / static_cast<double>(s.n);
  if (s.n < 2) return s;
  double ss = 0.0;
  for (double v : scores) ss += (v - s.mean) * (v - s.mean);
  s.std = std::sqrt(ss / static_cast<double>(s.n - 1));
  s.std_defined = true;
  return s;
}

std::string distribution_to_csv(const ScoreDistribution& dist) {
  std::string out = "bin_lo,bin_hi,mass\n";
  char line[96];
  for (int i = 0; i < dist.bins(); ++i) {
    std::snprintf(line, sizeof line, "%.6f,%.6f,%.17g\n", dist.bin_lo(i), dist.bin_hi(i),
                  dist.probabilities[i]);
    out += line;
  }
  return out;
}

}  // namespace lassim
