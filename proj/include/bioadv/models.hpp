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

// Black-box model interfaces and the built-in baselines.
//
// The harness only ever sees Tagger / Scorer. Built-in baselines are exact
// matchers, so any character noise on an entity makes them miss it while
// in-lexicon synonyms keep being recognized.

#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "bioadv/corpus.hpp"
#include "bioadv/error.hpp"
#include "bioadv/lexicon.hpp"
#include "bioadv/text.hpp"

namespace bioadv {

using Sentence = std::vector<std::string>;

// tag() returns exactly one syntactically valid IOB label per input token.
class Tagger {
 public:
  virtual ~Tagger() = default;
  virtual std::string name() const = 0;
  virtual std::vector<std::string> tag(std::span<const std::string> tokens) const = 0;

  virtual std::vector<std::vector<std::string>> tag_batch(std::span<const Sentence> sentences) const {
    std::vector<std::vector<std::string>> out;
    out.reserve(sentences.size());
    for (const auto& s : sentences) out.push_back(tag(s));
    return out;
  }
};

// score() is finite and deterministic for fixed inputs.
class Scorer {
 public:
  virtual ~Scorer() = default;
  virtual std::string name() const = 0;
  virtual double score(std::span<const std::string> s1, std::span<const std::string> s2) const = 0;

  virtual std::vector<double> score_batch(std::span<const Sentence> first, std::span<const Sentence> second) const {
    if (first.size() != second.size()) throw ContractError("score_batch: side length mismatch");
    std::vector<double> out;
    out.reserve(first.size());
    for (std::size_t i = 0; i < first.size(); ++i) out.push_back(score(first[i], second[i]));
    return out;
  }
};

namespace detail {

inline std::vector<std::string> label_matches(std::span<const std::string> tokens, std::size_t max_len,
                                              const auto& lookup) {
  std::vector<std::string> labels(tokens.size(), "O");
  greedy_longest_match(tokens, max_len, lookup,
                       [&](std::size_t start, std::size_t end, const std::string&, const std::string& type) {
                         labels[start] = "B-" + type;
                         for (std::size_t i = start + 1; i < end; ++i) labels[i] = "I-" + type;
                       });
  return labels;
}

}  // namespace detail

// Tags greedy longest lexicon matches as B-/I-<category>.
class LexiconTagger final : public Tagger {
 public:
  explicit LexiconTagger(SynonymLexicon lex) : lex_(std::move(lex)) {}

  std::string name() const override { return "builtin-lexicon"; }

  std::vector<std::string> tag(std::span<const std::string> tokens) const override {
    return detail::label_matches(tokens, lex_.max_term_tokens(), [&](const std::string& key) -> const std::string* {
      const auto* entry = lex_.find(key);
      return entry ? &entry->category : nullptr;
    });
  }

 private:
  SynonymLexicon lex_;
};

inline std::unique_ptr<Tagger> lexicon_tagger(SynonymLexicon lex) {
  return std::make_unique<LexiconTagger>(std::move(lex));
}

// Remembers every gold entity surface form of its training corpus. A surface
// seen with several types keeps the most frequent one; ties go to the
// lexicographically smallest type.
class MemorizingTagger final : public Tagger {
 public:
  static MemorizingTagger train(const NerCorpus& corpus) {
    if (corpus.sentences.empty()) throw ContractError("cannot train on an empty corpus");
    std::map<std::string, std::map<std::string, std::size_t>> counts;
    for (const auto& sentence : corpus.sentences) {
      const auto texts = sentence.texts();
      for (const auto& span : gold_spans(sentence)) {
        const auto surface =
            text::normalize_term(std::span<const std::string>(texts).subspan(span.start, span.end - span.start));
        ++counts[surface][span.etype];
      }
    }
    MemorizingTagger tagger;
    for (const auto& [surface, by_type] : counts) {
      const std::string* best = nullptr;
      std::size_t best_count = 0;
      for (const auto& [type, n] : by_type) {  // map order: lexicographic
        if (n > best_count) {
          best = &type;
          best_count = n;
        }
      }
      tagger.terms_.emplace(surface, *best);
      tagger.max_len_ = std::max(tagger.max_len_, text::split_ws(surface).size());
    }
    return tagger;
  }

  std::string name() const override { return "builtin-memorize"; }

  std::vector<std::string> tag(std::span<const std::string> tokens) const override {
    return detail::label_matches(tokens, max_len_, [&](const std::string& key) -> const std::string* {
      const auto it = terms_.find(key);
      return it == terms_.end() ? nullptr : &it->second;
    });
  }

  bool knows(const std::string& normalized) const { return terms_.contains(normalized); }
  std::size_t size() const noexcept { return terms_.size(); }

 private:
  MemorizingTagger() = default;

  std::map<std::string, std::string> terms_;
  std::size_t max_len_ = 0;
};

inline MemorizingTagger train_memorizing_tagger(const NerCorpus& corpus) { return MemorizingTagger::train(corpus); }

// Jaccard similarity of the lowercased token sets.
class OverlapScorer final : public Scorer {
 public:
  std::string name() const override { return "builtin-overlap"; }

  double score(std::span<const std::string> s1, std::span<const std::string> s2) const override {
    if (s1.empty() && s2.empty()) throw DegenerateInputError("overlap: both sentences empty");
    std::set<std::string> a, b;
    for (const auto& t : s1) a.insert(text::ascii_lower(t));
    for (const auto& t : s2) b.insert(text::ascii_lower(t));
    std::size_t common = 0;
    for (const auto& t : a) common += b.contains(t);
    const std::size_t uni = a.size() + b.size() - common;
    return static_cast<double>(common) / static_cast<double>(uni);
  }
};

inline std::unique_ptr<Scorer> overlap_scorer() { return std::make_unique<OverlapScorer>(); }

}  // namespace bioadv
