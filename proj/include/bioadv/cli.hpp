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

// `bioadv` command line: perturb, evaluate, make-train.
//
// Exit codes: 0 success, 1 runtime or data error, 2 usage error. Flag
// combinations are checked before any file is touched, and outputs are written
// to a temporary file that is renamed into place only on success.

#pragma once

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bioadv/corpus.hpp"
#include "bioadv/error.hpp"
#include "bioadv/harness.hpp"
#include "bioadv/keyboard.hpp"
#include "bioadv/lexicon.hpp"
#include "bioadv/models.hpp"
#include "bioadv/perturb.hpp"
#include "bioadv/remote.hpp"

namespace bioadv::cli {

class UsageError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + path + "'");
  return ss.str();
}

// Writes to a sibling temporary file, then renames it over `path`.
inline void write_file_atomic(const std::string& path, const std::string& data) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + tmp.string() + "'");
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw IoError("cannot write '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move output into '" + path + "'");
  }
}

struct GlobalFlags {
  std::uint64_t seed = 13;
  std::string lexicon;  // path, "builtin", or empty
  std::string layout;   // path or empty for the embedded QWERTY table
  std::size_t jobs = 1;
  double timeout_s = 30.0;
};

struct AttackFlags {
  std::string task;
  std::string attack;
  std::string target;
  std::string in;
  std::string out;
  std::size_t min_word_len = 2;
  std::string sts_side = "first";
};

struct EvaluateFlags {
  std::string task;
  std::string model;
  std::string test;
  std::string attacks;
  std::string report;
  std::string format = "json";
  std::string dataset;
  std::size_t min_word_len = 2;
  std::string sts_side = "first";
};

namespace detail {

inline PerturbSpec make_spec(std::string_view attack, std::string_view target, const GlobalFlags& g,
                             std::size_t min_word_len, std::string_view side) {
  PerturbSpec spec;
  const auto a = parse_attack(attack);
  const auto t = parse_target(target);
  const auto s = parse_sts_side(side);
  if (!a) throw UsageError("unknown attack '" + std::string(attack) + "'");
  if (!t) throw UsageError("unknown target '" + std::string(target) + "'");
  if (!s) throw UsageError("unknown sts side '" + std::string(side) + "'");
  if (min_word_len == 0) throw UsageError("--min-word-len must be positive");
  spec.attack = *a;
  spec.target = *t;
  spec.sts_side = *s;
  spec.seed = g.seed;
  spec.min_word_len = min_word_len;
  return spec;
}

inline void check_spec_flags(const PerturbSpec& spec, bool ner, const GlobalFlags& g) {
  if (!ner && spec.target == Target::kGoldEntities) throw UsageError("target gold is only valid with --task ner");
  if (spec.attack == Attack::kSynonym && g.lexicon.empty()) throw UsageError("--attack synonym requires --lexicon");
  if (spec.target == Target::kLexiconTerms && g.lexicon.empty())
    throw UsageError("target lexicon requires --lexicon");
}

inline std::optional<SynonymLexicon> load_lexicon_flag(const GlobalFlags& g, std::ostream& err) {
  if (g.lexicon.empty()) return std::nullopt;
  if (g.lexicon == "builtin") return starter_lexicon();
  auto loaded = load_lexicon(read_file(g.lexicon));
  for (const auto& w : loaded.warnings) err << "warning: " << g.lexicon << ": " << w << "\n";
  return std::move(loaded.lexicon);
}

inline KeyboardLayout load_layout_flag(const GlobalFlags& g) {
  return g.layout.empty() ? default_layout() : parse_layout(read_file(g.layout));
}

inline std::string corpus_name(const std::string& path) { return std::filesystem::path(path).stem().string(); }

inline void print_error(std::ostream& err, const std::exception& e, int depth = 0) {
  err << (depth == 0 ? "error: " : "  caused by: ") << e.what() << "\n";
  try {
    std::rethrow_if_nested(e);
  } catch (const std::exception& inner) {
    print_error(err, inner, depth + 1);
  } catch (...) {
  }
}

inline int run_attack(const AttackFlags& f, const GlobalFlags& g, bool augment, std::ostream& err) {
  const bool ner = f.task == "ner";
  const PerturbSpec spec = make_spec(f.attack, f.target, g, f.min_word_len, f.sts_side);
  check_spec_flags(spec, ner, g);

  const auto lex = load_lexicon_flag(g, err);
  const KeyboardLayout layout = load_layout_flag(g);
  const SynonymLexicon* lexp = lex ? &*lex : nullptr;
  const std::string input = read_file(f.in);
  std::string output;
  if (ner) {
    const NerCorpus corpus = parse_ner(input, corpus_name(f.in));
    output = serialize_ner(augment ? make_adversarial_training_set(corpus, spec, layout, lexp, g.jobs)
                                   : perturb_ner(corpus, spec, layout, lexp, g.jobs));
  } else {
    const StsCorpus corpus = parse_sts(input, corpus_name(f.in));
    output = serialize_sts(augment ? make_adversarial_training_set(corpus, spec, layout, lexp, g.jobs)
                                   : perturb_sts(corpus, spec, layout, lexp, g.jobs));
  }
  write_file_atomic(f.out, output);
  return 0;
}

inline int run_evaluate(const EvaluateFlags& f, const GlobalFlags& g, std::ostream& err) {
  const bool ner = f.task == "ner";
  std::vector<PerturbSpec> specs;
  for (const auto item : text::split(f.attacks, ',')) {
    const auto trimmed = text::trim(item);
    if (trimmed.empty()) continue;
    const auto colon = trimmed.find(':');
    if (colon == std::string_view::npos) throw UsageError("attack '" + std::string(trimmed) + "' is not attack:target");
    specs.push_back(make_spec(trimmed.substr(0, colon), trimmed.substr(colon + 1), g, f.min_word_len, f.sts_side));
    check_spec_flags(specs.back(), ner, g);
  }

  const std::string& m = f.model;
  const bool remote = m.starts_with("http:") || m.starts_with("cmd:");
  const bool memorize = m.starts_with("builtin-memorize:");
  if (ner && !(remote || memorize || m == "builtin-lexicon"))
    throw UsageError("model '" + m + "' cannot tag; use builtin-lexicon, builtin-memorize:<train>, http: or cmd:");
  if (!ner && !(remote || m == "builtin-overlap"))
    throw UsageError("model '" + m + "' cannot score pairs; use builtin-overlap, http: or cmd:");
  if (memorize && m.size() == std::string_view("builtin-memorize:").size())
    throw UsageError("builtin-memorize needs a training file path");
  if (f.format != "json" && f.format != "md") throw UsageError("--format must be json or md");

  const auto lex = load_lexicon_flag(g, err);
  const KeyboardLayout layout = load_layout_flag(g);
  const SynonymLexicon* lexp = lex ? &*lex : nullptr;
  RemoteOptions remote_options;
  remote_options.timeout = std::chrono::milliseconds(static_cast<std::int64_t>(g.timeout_s * 1000));
  remote_options.max_in_flight = 4;

  EvalOptions options;
  options.dataset = f.dataset.empty() ? corpus_name(f.test) : f.dataset;
  options.seed = g.seed;
  options.workers = g.jobs;

  EvalReport report;
  if (ner) {
    std::unique_ptr<Tagger> model;
    if (m == "builtin-lexicon") {
      model = lexicon_tagger(lex ? *lex : starter_lexicon());
    } else if (memorize) {
      const std::string path = m.substr(std::string_view("builtin-memorize:").size());
      model = std::make_unique<MemorizingTagger>(train_memorizing_tagger(parse_ner(read_file(path), corpus_name(path))));
    } else {
      model = remote_tagger(m, remote_options);
    }
    const NerCorpus test = parse_ner(read_file(f.test), corpus_name(f.test));
    report = evaluate_ner(*model, test, specs, layout, lexp, options);
  } else {
    std::unique_ptr<Scorer> model = m == "builtin-overlap" ? overlap_scorer() : remote_scorer(m, remote_options);
    const StsCorpus test = parse_sts(read_file(f.test), corpus_name(f.test));
    report = evaluate_sts(*model, test, specs, layout, lexp, options);
  }
  write_file_atomic(f.report, render_report(report, f.format == "md" ? ReportFormat::kMarkdown : ReportFormat::kJson));
  return 0;
}

inline void add_attack_flags(CLI::App* cmd, AttackFlags& f, const std::string& in_help, const std::string& out_help) {
  cmd->add_option("--task", f.task, "ner or sts")->required()->check(CLI::IsMember({"ner", "sts"}));
  cmd->add_option("--attack", f.attack, "swap, keyboard or synonym")
      ->required()
      ->check(CLI::IsMember({"swap", "keyboard", "synonym"}));
  cmd->add_option("--target", f.target, "gold, lexicon or all")
      ->required()
      ->check(CLI::IsMember({"gold", "lexicon", "all", "gold-entities", "lexicon-terms", "all-words"}));
  cmd->add_option("--in", f.in, in_help)->required();
  cmd->add_option("--out", f.out, out_help)->required();
  cmd->add_option("--min-word-len", f.min_word_len, "shortest word (in characters) noise attacks touch")
      ->capture_default_str();
  cmd->add_option("--sts-side", f.sts_side, "sentence modified in STS pairs")
      ->check(CLI::IsMember({"first", "second"}))
      ->capture_default_str();
}

}  // namespace detail

// `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Adversarial perturbation and robustness evaluation for biomedical NER and STS corpora", "bioadv"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_option("--seed", g.seed, "attack seed")->capture_default_str();
  app.add_option("--lexicon", g.lexicon, "lexicon TSV file, or 'builtin' for the starter lexicon");
  app.add_option("--layout", g.layout, "keyboard layout file (default: embedded US QWERTY)");
  app.add_option("--jobs", g.jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--timeout", g.timeout_s, "remote model timeout in seconds")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  AttackFlags perturb_flags;
  auto* perturb = app.add_subcommand("perturb", "write an adversarial copy of a corpus");
  detail::add_attack_flags(perturb, perturb_flags, "input corpus", "adversarial corpus");

  AttackFlags train_flags;
  auto* make_train = app.add_subcommand("make-train", "write a training corpus followed by its adversarial copy");
  detail::add_attack_flags(make_train, train_flags, "training corpus", "augmented corpus");

  EvaluateFlags eval_flags;
  auto* evaluate = app.add_subcommand("evaluate", "score a model on a test set and its adversarial variants");
  evaluate->add_option("--task", eval_flags.task, "ner or sts")->required()->check(CLI::IsMember({"ner", "sts"}));
  evaluate
      ->add_option("--model", eval_flags.model,
                   "builtin-lexicon | builtin-memorize:<train> | builtin-overlap | http:<url> | cmd:<program>")
      ->required();
  evaluate->add_option("--test", eval_flags.test, "test corpus")->required();
  evaluate->add_option("--attacks", eval_flags.attacks, "comma-separated attack:target list");
  evaluate->add_option("--report", eval_flags.report, "report output path")->required();
  evaluate->add_option("--format", eval_flags.format, "json or md")->capture_default_str();
  evaluate->add_option("--dataset", eval_flags.dataset, "dataset name shown in the report");
  evaluate->add_option("--min-word-len", eval_flags.min_word_len, "shortest word noise attacks touch")
      ->capture_default_str();
  evaluate->add_option("--sts-side", eval_flags.sts_side, "sentence modified in STS pairs")
      ->check(CLI::IsMember({"first", "second"}))
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "usage error: " << e.what() << "\n" << "run 'bioadv --help' for usage\n";
    return 2;
  }

  try {
    if (perturb->parsed()) return detail::run_attack(perturb_flags, g, false, err);
    if (make_train->parsed()) return detail::run_attack(train_flags, g, true, err);
    return detail::run_evaluate(eval_flags, g, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    detail::print_error(err, e);
    return 1;
  }
}

}  // namespace bioadv::cli
