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

#include <span>
#include <string>
#include <vector>

namespace lassim {

inline constexpr double kHistogramSmoothing = 1e-12;

// Normalized histogram of metric scores over uniform bins on [lo, hi].
struct ScoreDistribution {
  double lo = 0.0;
  double hi = 1.0;
  std::vector<double> probabilities;
  std::size_t n_samples = 0;
  std::vector<double> raw_scores;

  int bins() const noexcept { return static_cast<int>(probabilities.size()); }
  double bin_lo(int i) const noexcept { return lo + (hi - lo) * i / bins(); }
  double bin_hi(int i) const noexcept { return lo + (hi - lo) * (i + 1) / bins(); }
  std::vector<double> bin_edges() const;

  // Wraps explicit probabilities (no smoothing). Throws InvalidArgumentError
  // on negative entries or a total away from 1 by more than 1e-9.
  static ScoreDistribution from_probabilities(std::vector<double> probabilities,
                                              double lo = 0.0, double hi = 1.0);
};

// Histogram with `bins` uniform bins on [lo, hi]; scores outside the range
// clamp into the end bins. Each bin then gets kHistogramSmoothing added and
// the result is renormalized. Throws EmptyInputError on no scores and
// InvalidArgumentError on non-finite scores or a bad range.
ScoreDistribution build_distribution(std::span<const double> scores, int bins = 100,
                                     double lo = 0.0, double hi = 1.0);

enum class LogBase { kTwo, kE };

struct DivergenceResult {
  double js = 0.0;
  std::string metric_name;
  std::string degradation_labels;
};

// JS(P, Q) = KL(P || M) / 2 + KL(Q || M) / 2, M = (P + Q) / 2. Base 2 keeps
// the result in [0, 1]. Throws BinningMismatchError when the bin layouts
// differ.
DivergenceResult js_divergence(const ScoreDistribution& p, const ScoreDistribution& q,
                               LogBase base = LogBase::kTwo);

struct Summary {
  double mean = 0.0;
  // Sample standard deviation (n - 1). Zero with std_defined == false when
  // fewer than two scores were given.
  double std = 0.0;
  bool std_defined = false;
  std::size_t n = 0;
};

Summary summarize(std::span<const double> scores);

// "bin_lo,bin_hi,mass" rows with a header line.
std::string distribution_to_csv(const ScoreDistribution& dist);

}  // namespace lassim
