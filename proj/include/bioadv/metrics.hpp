// Copyright 2026 The bioadv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Chunk-level precision/recall/F1 for NER and correlations for STS.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "bioadv/corpus.hpp"
#include "bioadv/error.hpp"

namespace bioadv {

struct PrfScores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  // 0/0 is taken as 0 for every ratio.
  static PrfScores from_counts(std::size_t tp, std::size_t fp, std::size_t fn) {
    PrfScores s{0.0, 0.0, 0.0, tp, fp, fn};
    if (tp + fp > 0) s.precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
    if (tp + fn > 0) s.recall = static_cast<double>(tp) / static_cast<double>(tp + fn);
    if (s.precision + s.recall > 0) s.f1 = 2 * s.precision * s.recall / (s.precision + s.recall);
    return s;
  }

  friend bool operator==(const PrfScores&, const PrfScores&) = default;
};

struct CorrScores {
  double pearson = 0.0;
  double spearman = 0.0;

  friend bool operator==(const CorrScores&, const CorrScores&) = default;
};

// Micro-averaged exact-span matching. A predicted span counts as a true
// positive iff start, end and type all equal a gold span of the same sentence.
inline PrfScores ner_prf(const NerCorpus& gold, std::span<const std::vector<std::string>> predicted) {
  if (predicted.size() != gold.sentences.size())
    throw ContractError("prediction has " + std::to_string(predicted.size()) + " sentences, gold has " +
                        std::to_string(gold.sentences.size()));
  std::size_t tp = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    const auto& labels = predicted[i];
    if (labels.size() != gold.sentences[i].tokens.size())
      throw ContractError("sentence " + std::to_string(i) + ": " + std::to_string(labels.size()) +
                          " predicted labels for " + std::to_string(gold.sentences[i].tokens.size()) + " tokens");
    for (const auto& l : labels)
      if (!is_valid_label(l)) throw ContractError("sentence " + std::to_string(i) + ": invalid label '" + l + "'");
    auto g = gold_spans(gold.sentences[i]);
    auto p = chunk_spans(labels);
    std::sort(g.begin(), g.end());
    std::sort(p.begin(), p.end());
    std::vector<EntitySpan> common;
    std::set_intersection(g.begin(), g.end(), p.begin(), p.end(), std::back_inserter(common));
    tp += common.size();
    fp += p.size() - common.size();
    fn += g.size() - common.size();
  }
  return PrfScores::from_counts(tp, fp, fn);
}

// Sample Pearson correlation (two-pass, mean-centred).
inline double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size())
    throw ContractError("pearson: length mismatch " + std::to_string(xs.size()) + " vs " + std::to_string(ys.size()));
  if (xs.size() < 2) throw DegenerateInputError("pearson: need at least 2 points");
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (!std::isfinite(xs[i]) || !std::isfinite(ys[i])) throw DegenerateInputError("pearson: non-finite input");
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0 || syy == 0) throw DegenerateInputError("pearson: zero variance");
  return std::clamp(sxy / (std::sqrt(sxx) * std::sqrt(syy)), -1.0, 1.0);
}

// 1-based ranks; tied values share the mean of their positions.
inline std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i + 1;
    while (j < order.size() && values[order[j]] == values[order[i]]) ++j;
    const double rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = rank;
    i = j;
  }
  return ranks;
}

inline double spearman(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size())
    throw ContractError("spearman: length mismatch " + std::to_string(xs.size()) + " vs " + std::to_string(ys.size()));
  const auto rx = average_ranks(xs);
  const auto ry = average_ranks(ys);
  return pearson(rx, ry);
}

inline CorrScores correlations(std::span<const double> predicted, std::span<const double> gold) {
  return CorrScores{pearson(predicted, gold), spearman(predicted, gold)};
}

}  // namespace bioadv
