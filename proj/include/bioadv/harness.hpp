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

// Robustness evaluation: score a model on a test set and on adversarial
// variants of it, build adversarially augmented training sets, and render
// reports.
//
// Adversarial sets are regenerated from their PerturbSpec on every run, so a
// report can be replayed from the specs it echoes.

#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <variant>
#include <vector>

#include "bioadv/corpus.hpp"
#include "bioadv/error.hpp"
#include "bioadv/keyboard.hpp"
#include "bioadv/lexicon.hpp"
#include "bioadv/metrics.hpp"
#include "bioadv/models.hpp"
#include "bioadv/parallel.hpp"
#include "bioadv/perturb.hpp"
#include "json.hpp"

namespace bioadv {

struct EvalRow {
  std::string test_set;
  std::string attack;  // original | synonym | keyboard | swap
  std::variant<PrfScores, CorrScores> metrics;
  std::size_t n = 0;
  std::optional<PerturbSpec> spec;  // absent only for the original row

  friend bool operator==(const EvalRow&, const EvalRow&) = default;
};

struct EvalReport {
  std::string dataset;
  std::string model;
  std::uint64_t seed = 13;
  std::vector<EvalRow> rows;

  friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

struct EvalOptions {
  std::string dataset;
  std::uint64_t seed = 13;
  std::size_t workers = 1;
};

// A row failed; the underlying error is nested (std::rethrow_if_nested).
class EvaluationError : public Error {
 public:
  EvaluationError(std::string row, const std::string& what)
      : Error("row '" + row + "': " + what), row_(std::move(row)) {}

  const std::string& row() const noexcept { return row_; }

 private:
  std::string row_;
};

inline std::string test_set_name(const PerturbSpec& spec) {
  return std::string(to_string(spec.attack)) + ":" + std::string(to_string(spec.target));
}

namespace detail {

template <typename Fn>
auto run_row(const std::string& row, Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    std::throw_with_nested(EvaluationError(row, e.what()));
  }
}

inline PrfScores score_tagger(const Tagger& model, const NerCorpus& set, std::size_t workers) {
  std::vector<Sentence> inputs;
  inputs.reserve(set.sentences.size());
  for (const auto& s : set.sentences) inputs.push_back(s.texts());
  std::vector<std::vector<std::string>> predicted(inputs.size());
  parallel_slices(inputs.size(), workers, [&](std::size_t begin, std::size_t end) {
    auto out = model.tag_batch(std::span<const Sentence>(inputs).subspan(begin, end - begin));
    if (out.size() != end - begin) throw ContractError("tagger returned wrong number of sentences");
    for (std::size_t i = begin; i < end; ++i) predicted[i] = std::move(out[i - begin]);
  });
  return ner_prf(set, predicted);
}

inline CorrScores score_scorer(const Scorer& model, const StsCorpus& set, std::size_t workers) {
  std::vector<Sentence> first, second;
  std::vector<double> gold;
  for (const auto& p : set.pairs) {
    first.push_back(p.s1);
    second.push_back(p.s2);
    gold.push_back(p.gold_score);
  }
  std::vector<double> predicted(set.pairs.size());
  parallel_slices(set.pairs.size(), workers, [&](std::size_t begin, std::size_t end) {
    const auto out = model.score_batch(std::span<const Sentence>(first).subspan(begin, end - begin),
                                       std::span<const Sentence>(second).subspan(begin, end - begin));
    if (out.size() != end - begin) throw ContractError("scorer returned wrong number of scores");
    for (std::size_t i = begin; i < end; ++i) predicted[i] = out[i - begin];
  });
  return correlations(predicted, gold);
}

}  // namespace detail

inline EvalReport evaluate_ner(const Tagger& model, const NerCorpus& test, std::span<const PerturbSpec> specs,
                               const KeyboardLayout& layout, const SynonymLexicon* lex = nullptr,
                               const EvalOptions& options = {}) {
  for (const auto& spec : specs) validate_spec(spec, true, lex);
  EvalReport report{options.dataset.empty() ? test.name : options.dataset, model.name(), options.seed, {}};
  report.rows.push_back(detail::run_row("original", [&] {
    return EvalRow{"original", "original", detail::score_tagger(model, test, options.workers), test.size(),
                   std::nullopt};
  }));
  for (const auto& spec : specs) {
    const std::string name = test_set_name(spec);
    report.rows.push_back(detail::run_row(name, [&] {
      const NerCorpus adversarial = perturb_ner(test, spec, layout, lex, options.workers);
      return EvalRow{name, std::string(to_string(spec.attack)),
                     detail::score_tagger(model, adversarial, options.workers), adversarial.size(), spec};
    }));
  }
  return report;
}

inline EvalReport evaluate_sts(const Scorer& model, const StsCorpus& test, std::span<const PerturbSpec> specs,
                               const KeyboardLayout& layout, const SynonymLexicon* lex = nullptr,
                               const EvalOptions& options = {}) {
  for (const auto& spec : specs) validate_spec(spec, false, lex);
  EvalReport report{options.dataset.empty() ? test.name : options.dataset, model.name(), options.seed, {}};
  report.rows.push_back(detail::run_row("original", [&] {
    return EvalRow{"original", "original", detail::score_scorer(model, test, options.workers), test.size(),
                   std::nullopt};
  }));
  for (const auto& spec : specs) {
    const std::string name = test_set_name(spec);
    report.rows.push_back(detail::run_row(name, [&] {
      const StsCorpus adversarial = perturb_sts(test, spec, layout, lex, options.workers);
      return EvalRow{name, std::string(to_string(spec.attack)),
                     detail::score_scorer(model, adversarial, options.workers), adversarial.size(), spec};
    }));
  }
  return report;
}

// Original sentences followed by their perturbed copies, in the same order.
inline NerCorpus make_adversarial_training_set(const NerCorpus& train, const PerturbSpec& spec,
                                               const KeyboardLayout& layout, const SynonymLexicon* lex = nullptr,
                                               std::size_t workers = 1) {
  NerCorpus adversarial = perturb_ner(train, spec, layout, lex, workers);
  NerCorpus out = train;
  out.sentences.insert(out.sentences.end(), std::make_move_iterator(adversarial.sentences.begin()),
                       std::make_move_iterator(adversarial.sentences.end()));
  return out;
}

// STS variant. Perturbed copies get the id suffix "#<attack>" so ids stay
// unique.
inline StsCorpus make_adversarial_training_set(const StsCorpus& train, const PerturbSpec& spec,
                                               const KeyboardLayout& layout, const SynonymLexicon* lex = nullptr,
                                               std::size_t workers = 1) {
  StsCorpus adversarial = perturb_sts(train, spec, layout, lex, workers);
  StsCorpus out = train;
  std::unordered_set<std::string> ids;
  for (const auto& p : train.pairs) ids.insert(p.id);
  for (auto& p : adversarial.pairs) {
    p.id += "#" + std::string(to_string(spec.attack));
    if (!ids.insert(p.id).second) throw ContractError("augmented pair id '" + p.id + "' collides");
    out.pairs.push_back(std::move(p));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rendering

// Three decimals, round-half-even, applied to the shortest decimal form of
// `v` (so 0.0625 -> "0.062", 0.6666... -> "0.667").
inline std::string format_3dp(double v) {
  char buf[512];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed);
  std::string s(buf, res.ptr);
  bool negative = false;
  if (!s.empty() && s.front() == '-') {
    negative = true;
    s.erase(0, 1);
  }
  const auto dot = s.find('.');
  std::string whole = dot == std::string::npos ? s : s.substr(0, dot);
  std::string frac = dot == std::string::npos ? "" : s.substr(dot + 1);
  frac.resize(std::max<std::size_t>(frac.size(), 3), '0');

  std::string digits = whole + frac.substr(0, 3);
  bool up = false;
  if (frac.size() > 3) {
    const char next = frac[3];
    const bool tail_nonzero = frac.find_first_not_of('0', 4) != std::string::npos;
    const bool odd = ((digits.back() - '0') % 2) == 1;
    up = next > '5' || (next == '5' && (tail_nonzero || odd));
  }
  if (up) {
    std::size_t i = digits.size();
    while (i > 0) {
      --i;
      if (digits[i] == '9') {
        digits[i] = '0';
      } else {
        ++digits[i];
        break;
      }
      if (i == 0) digits.insert(digits.begin(), '1');
    }
  }
  std::string out = digits.substr(0, digits.size() - 3) + "." + digits.substr(digits.size() - 3);
  if (negative && out.find_first_not_of("0.") != std::string::npos) out.insert(out.begin(), '-');
  return out;
}

inline nlohmann::json spec_to_json(const PerturbSpec& spec) {
  return {{"attack", to_string(spec.attack)},
          {"target", to_string(spec.target)},
          {"seed", spec.seed},
          {"min_word_len", spec.min_word_len},
          {"sts_side", to_string(spec.sts_side)}};
}

inline PerturbSpec spec_from_json(const nlohmann::json& j) {
  PerturbSpec spec;
  const auto attack = parse_attack(j.at("attack").get<std::string>());
  const auto target = parse_target(j.at("target").get<std::string>());
  const auto side = parse_sts_side(j.at("sts_side").get<std::string>());
  if (!attack || !target || !side) throw ParseError(0, "invalid spec in report");
  spec.attack = *attack;
  spec.target = *target;
  spec.sts_side = *side;
  spec.seed = j.at("seed").get<std::uint64_t>();
  spec.min_word_len = j.at("min_word_len").get<std::size_t>();
  return spec;
}

inline nlohmann::json report_to_json(const EvalReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.rows) {
    nlohmann::json metrics;
    if (const auto* prf = std::get_if<PrfScores>(&row.metrics)) {
      metrics = {{"precision", prf->precision}, {"recall", prf->recall}, {"f1", prf->f1},
                 {"tp", prf->tp},               {"fp", prf->fp},         {"fn", prf->fn}};
    } else {
      const auto& corr = std::get<CorrScores>(row.metrics);
      metrics = {{"pearson", corr.pearson}, {"spearman", corr.spearman}};
    }
    rows.push_back({{"test_set", row.test_set},
                    {"attack", row.attack},
                    {"n", row.n},
                    {"metrics", std::move(metrics)},
                    {"spec", row.spec ? spec_to_json(*row.spec) : nlohmann::json(nullptr)}});
  }
  return {{"dataset", report.dataset}, {"model", report.model}, {"seed", report.seed}, {"rows", std::move(rows)}};
}

inline EvalReport report_from_json(std::string_view data) {
  try {
    const auto j = nlohmann::json::parse(data);
    EvalReport report;
    report.dataset = j.at("dataset").get<std::string>();
    report.model = j.at("model").get<std::string>();
    report.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& r : j.at("rows")) {
      EvalRow row;
      row.test_set = r.at("test_set").get<std::string>();
      row.attack = r.at("attack").get<std::string>();
      row.n = r.at("n").get<std::size_t>();
      const auto& m = r.at("metrics");
      if (m.contains("f1")) {
        row.metrics = PrfScores{m.at("precision").get<double>(), m.at("recall").get<double>(),
                                m.at("f1").get<double>(),        m.at("tp").get<std::size_t>(),
                                m.at("fp").get<std::size_t>(),   m.at("fn").get<std::size_t>()};
      } else {
        row.metrics = CorrScores{m.at("pearson").get<double>(), m.at("spearman").get<double>()};
      }
      if (!r.at("spec").is_null()) row.spec = spec_from_json(r.at("spec"));
      report.rows.push_back(std::move(row));
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("report: ") + e.what());
  }
}

enum class ReportFormat { kJson, kMarkdown };

namespace detail {

inline std::string display_test_set(const EvalRow& row) {
  if (!row.spec) return "Original";
  std::string name = row.attack;
  if (!name.empty()) name[0] = static_cast<char>(name[0] - 'a' + 'A');
  return name + " (" + std::string(to_string(row.spec->target)) + ")";
}

}  // namespace detail

// JSON: canonical document (keys sorted, two-space indent, trailing newline).
// Markdown: one table in the layout of the usual robustness tables.
inline std::string render_report(const EvalReport& report, ReportFormat format) {
  if (format == ReportFormat::kJson) return report_to_json(report).dump(2) + "\n";

  const bool ner = report.rows.empty() || std::holds_alternative<PrfScores>(report.rows.front().metrics);
  std::string out = ner ? "| Train Set | Model | Test Set | Precision | Recall | F1 |\n"
                          "|---|---|---|---|---|---|\n"
                        : "| Train Set | Model | Test Set | Pearson | Spearman |\n"
                          "|---|---|---|---|---|\n";
  for (const auto& row : report.rows) {
    out += "| " + report.dataset + " | " + report.model + " | " + detail::display_test_set(row) + " | ";
    if (const auto* prf = std::get_if<PrfScores>(&row.metrics)) {
      out += format_3dp(prf->precision) + " | " + format_3dp(prf->recall) + " | " + format_3dp(prf->f1) + " |\n";
    } else {
      const auto& corr = std::get<CorrScores>(row.metrics);
      out += format_3dp(corr.pearson) + " | " + format_3dp(corr.spearman) + " |\n";
    }
  }
  return out;
}

}  // namespace bioadv
