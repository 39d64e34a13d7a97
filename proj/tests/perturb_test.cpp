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


#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bioadv/perturb.hpp"
#include "oracles.hpp"
#include "random_corpus.hpp"

namespace bioadv {
namespace {

using Tokens = std::vector<std::string>;

const std::string kLayoutPath = std::string(BIOADV_DATA) + "/qwerty.layout";

std::string fixture(const std::string& name) { return oracle::read_file(std::string(BIOADV_FIXTURES) + "/" + name); }

PerturbSpec spec_of(Attack a, Target t, std::uint64_t seed = 13) {
  PerturbSpec s;
  s.attack = a;
  s.target = t;
  s.seed = seed;
  return s;
}

TEST(WarfarinSentence, ReferenceNoiseWordsLieInOracleNeighbourhoods) {
  const std::map<std::string, std::string> swaps{{"heart", "herat"},       {"valve", "vavle"},
                                                 {"prosthesis", "protshesis"}, {"treated", "terated"},
                                                 {"warfarin", "warafrin"}, {"pregnancy", "preganncy"}};
  for (const auto& [word, noisy] : swaps) EXPECT_TRUE(oracle::all_adjacent_transpositions(word).contains(noisy)) << word;

  const auto adj = oracle::read_layout(kLayoutPath);
  const std::map<std::string, std::string> typos{{"heart", "hea5t"},         {"valve", "valce"},
                                                 {"prosthesis", "prosth3sis"}, {"treated", "trezted"},
                                                 {"warfarin", "warfsrin"},   {"pregnancy", "pregnahcy"}};
  for (const auto& [word, noisy] : typos) EXPECT_TRUE(oracle::all_keyboard_typos(word, adj).contains(noisy)) << word;
}

TEST(WarfarinSentence, NoiseRowsStayInsideOracleSets) {
  const auto corpus = parse_sts(fixture("warfarin_sentence.tsv"));
  const auto adj = oracle::read_layout(kLayoutPath);
  for (const Attack attack : {Attack::kSwap, Attack::kKeyboard}) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto out = perturb_sts(corpus, spec_of(attack, Target::kLexiconTerms, seed), default_layout(), &starter_lexicon());
      const auto& before = corpus.pairs[0].s1;
      const auto& after = out.pairs[0].s1;
      ASSERT_EQ(before.size(), after.size());
      std::size_t changed = 0;
      for (std::size_t i = 0; i < before.size(); ++i) {
        if (before[i] == after[i]) continue;
        ++changed;
        const auto allowed = attack == Attack::kSwap ? oracle::all_adjacent_transpositions(before[i])
                                                     : oracle::all_keyboard_typos(before[i], adj);
        EXPECT_TRUE(allowed.contains(after[i])) << before[i] << " -> " << after[i];
      }
      // heart valve prosthesis, treated, warfarin, pregnancy
      EXPECT_EQ(changed, 6u);
      EXPECT_EQ(out.pairs[0].s2, corpus.pairs[0].s2);
    }
  }
}

TEST(WarfarinSentence, SynonymRowIsExact) {
  const auto corpus = parse_sts(fixture("warfarin_sentence.tsv"));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto out =
        perturb_sts(corpus, spec_of(Attack::kSynonym, Target::kLexiconTerms, seed), default_layout(), &starter_lexicon());
    EXPECT_EQ(text::join(out.pairs[0].s1),
              "Two mothers with heart valve prosthesis were treated with potassium warfarin during pregnancy .");
  }
}

TEST(WarfarinSentence, NerSynonymRelabelsEntity) {
  const auto corpus = parse_ner("warfarin B-Chemical\n");
  const auto load = load_lexicon("warfarin\tchemical\tpotassium warfarin\n");
  const auto out = perturb_ner(corpus, spec_of(Attack::kSynonym, Target::kGoldEntities), default_layout(), &load.lexicon);
  EXPECT_EQ(serialize_ner(out), "potassium B-Chemical\nwarfarin I-Chemical\n");

  const auto full = parse_ner(fixture("warfarin_sentence.conll"));
  const auto out2 = perturb_ner(full, spec_of(Attack::kSynonym, Target::kGoldEntities), default_layout(), &starter_lexicon());
  EXPECT_EQ(text::join(out2.sentences[0].texts()),
            "Two mothers with heart valve prosthesis were treated with potassium warfarin during pregnancy .");
  EXPECT_EQ(gold_spans(out2.sentences[0]), (std::vector<EntitySpan>{{9, 11, "Chemical"}}));
}

TEST(SwapWord, Examples) {
  DeterministicRng rng(1);
  EXPECT_EQ(swap_word("ab", rng), "ba");
  EXPECT_EQ(swap_word("aa", rng), "aa");
  EXPECT_EQ(swap_word("", rng), "");
  EXPECT_EQ(swap_word("x", rng), "x");
  bool saw_herat = false;
  for (std::uint64_t seed = 0; seed < 100 && !saw_herat; ++seed) {
    DeterministicRng r(seed);
    saw_herat = swap_word("heart", r) == "herat";
  }
  EXPECT_TRUE(saw_herat);
}

TEST(SwapWord, SwapsCodePointsNotBytes) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    DeterministicRng rng(seed);
    const auto out = swap_word("\xC3\xA9t", rng);  // "ét"
    EXPECT_EQ(out, "t\xC3\xA9");
  }
}

TEST(KeyboardTypo, Examples) {
  DeterministicRng rng(3);
  EXPECT_EQ(keyboard_typo_word("!!", default_layout(), rng), "!!");
  const auto adj = oracle::read_layout(kLayoutPath);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    DeterministicRng r(seed);
    const auto out = keyboard_typo_word("A", default_layout(), r);
    EXPECT_TRUE(oracle::all_keyboard_typos("A", adj).contains(out)) << out;
    EXPECT_TRUE(std::isupper(static_cast<unsigned char>(out[0])));
  }
}

TEST(KeyboardTypo, CoversWholeNeighbourhood) {
  const auto adj = oracle::read_layout(kLayoutPath);
  for (const std::string word : {"heart", "warfarin", "x1"}) {
    std::set<std::string> seen;
    for (std::uint64_t seed = 0; seed < 4000; ++seed) {
      DeterministicRng r(seed);
      seen.insert(keyboard_typo_word(word, default_layout(), r));
    }
    EXPECT_EQ(seen, oracle::all_keyboard_typos(word, adj)) << word;
  }
}

TEST(NoiseProperties, PreserveShapeOnRandomSentences) {
  std::mt19937_64 gen(99);
  std::uniform_int_distribution<std::size_t> len(1, 12);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto s = randgen::random_sentence(gen, len(gen));
    for (const Attack attack : {Attack::kSwap, Attack::kKeyboard}) {
      for (const Target target : {Target::kGoldEntities, Target::kAllWords}) {
        const auto spec = spec_of(attack, target, static_cast<std::uint64_t>(trial));
        const auto out = perturb_ner_sentence(s, static_cast<std::size_t>(trial), spec, default_layout(), nullptr);
        ASSERT_EQ(randgen::noise_violation(s, out, spec), "") << text::join(s.texts());
      }
    }
  }
}

TEST(NoiseProperties, MinWordLenSkipsShortTokens) {
  const auto corpus = parse_ner("a B-C\nbc I-C\ndef O\n");
  auto spec = spec_of(Attack::kSwap, Target::kAllWords);
  spec.min_word_len = 3;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    spec.seed = seed;
    const auto out = perturb_ner(corpus, spec, default_layout());
    EXPECT_EQ(out.sentences[0].tokens[0].text, "a");
    EXPECT_EQ(out.sentences[0].tokens[1].text, "bc");
    EXPECT_NE(out.sentences[0].tokens[2].text, "def");
  }
}

TEST(NoiseProperties, AllOutsideSentenceUntouchedUnderGoldTargeting) {
  const auto corpus = parse_ner("Two O\nmothers O\nwere O\n");
  for (const Attack attack : {Attack::kSwap, Attack::kKeyboard})
    EXPECT_EQ(perturb_ner(corpus, spec_of(attack, Target::kGoldEntities), default_layout()), corpus);
}

TEST(SynonymProperties, WellFormedAndEntityCountPreserved) {
  std::mt19937_64 gen(2024);
  std::size_t replaced = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const NerSentence s = randgen::random_lexicon_sentence(gen, starter_lexicon());
    for (const Target target : {Target::kGoldEntities, Target::kLexiconTerms, Target::kAllWords}) {
      const auto out = perturb_ner_sentence(s, static_cast<std::size_t>(trial), spec_of(Attack::kSynonym, target),
                                            default_layout(), &starter_lexicon());
      ASSERT_EQ(randgen::synonym_violation(s, out), "") << text::join(s.texts());
      replaced += out != s;
    }
  }
  EXPECT_GT(replaced, 1000u);
}

TEST(SynonymProperties, SkipsMismatchedAndNonSynonymCategories) {
  // "heart valve prosthesis" is a device term, "aspirin" is labelled Disease.
  const auto corpus = parse_ner("heart B-Device\nvalve I-Device\nprosthesis I-Device\naspirin B-Disease\n");
  for (const Target t : {Target::kGoldEntities, Target::kLexiconTerms})
    EXPECT_EQ(perturb_ner(corpus, spec_of(Attack::kSynonym, t), default_layout(), &starter_lexicon()), corpus);
}

TEST(SynonymProperties, PartialOverlapIsSkipped) {
  const auto load = load_lexicon("heart attack\tdisease\tmyocardial infarction\n");
  const auto corpus = parse_ner("heart B-Disease\nattack O\n");
  EXPECT_EQ(perturb_ner(corpus, spec_of(Attack::kSynonym, Target::kAllWords), default_layout(), &load.lexicon), corpus);
  const auto outside = parse_ner("heart O\nattack O\n");
  EXPECT_EQ(serialize_ner(perturb_ner(outside, spec_of(Attack::kSynonym, Target::kAllWords), default_layout(),
                                      &load.lexicon)),
            "myocardial O\ninfarction O\n");
}

TEST(PerturbSts, UntouchedCases) {
  const auto corpus = parse_sts("p1\tnothing here\tor here\t1\np2\twarfarin dose\twarfarin\t2\n");
  auto spec = spec_of(Attack::kKeyboard, Target::kLexiconTerms);
  auto out = perturb_sts(corpus, spec, default_layout(), &starter_lexicon());
  EXPECT_EQ(out.pairs[0], corpus.pairs[0]);
  EXPECT_NE(out.pairs[1].s1, corpus.pairs[1].s1);
  EXPECT_EQ(out.pairs[1].s2, corpus.pairs[1].s2);
  EXPECT_EQ(out.pairs[1].s1[1], "dose");

  spec.sts_side = StsSide::kSecond;
  out = perturb_sts(corpus, spec, default_layout(), &starter_lexicon());
  EXPECT_EQ(out.pairs[1].s1, corpus.pairs[1].s1);
  EXPECT_NE(out.pairs[1].s2, corpus.pairs[1].s2);
}

TEST(PerturbSpecValidation, Errors) {
  const auto ner = parse_ner("a O\n");
  const auto sts = parse_sts("p\ta\tb\t1\n");
  EXPECT_THROW(perturb_ner(ner, spec_of(Attack::kSynonym, Target::kGoldEntities), default_layout()), ConfigError);
  EXPECT_THROW(perturb_ner(ner, spec_of(Attack::kSwap, Target::kLexiconTerms), default_layout()), ConfigError);
  EXPECT_THROW(perturb_sts(sts, spec_of(Attack::kSwap, Target::kGoldEntities), default_layout()), ConfigError);
  EXPECT_THROW(perturb_sts(sts, spec_of(Attack::kSynonym, Target::kAllWords), default_layout()), ConfigError);
  auto zero = spec_of(Attack::kSwap, Target::kAllWords);
  zero.min_word_len = 0;
  EXPECT_THROW(perturb_ner(ner, zero, default_layout()), ConfigError);
}

TEST(PerturbSpecValidation, NameRoundTrip) {
  for (const Attack a : {Attack::kSwap, Attack::kKeyboard, Attack::kSynonym}) EXPECT_EQ(parse_attack(to_string(a)), a);
  for (const Target t : {Target::kGoldEntities, Target::kLexiconTerms, Target::kAllWords})
    EXPECT_EQ(parse_target(to_string(t)), t);
  EXPECT_EQ(parse_target("gold"), Target::kGoldEntities);
  EXPECT_EQ(parse_attack("typo"), std::nullopt);
}

TEST(Determinism, WorkersAndSeeds) {
  const auto corpus = parse_ner(fixture("mem_train.conll"));
  for (const Attack attack : {Attack::kSwap, Attack::kKeyboard}) {
    const auto spec = spec_of(attack, Target::kAllWords);
    const auto one = serialize_ner(perturb_ner(corpus, spec, default_layout(), nullptr, 1));
    EXPECT_EQ(one, serialize_ner(perturb_ner(corpus, spec, default_layout(), nullptr, 4)));
    EXPECT_EQ(one, serialize_ner(perturb_ner(corpus, spec, default_layout(), nullptr, 7)));
    EXPECT_NE(one, serialize_ner(perturb_ner(corpus, spec_of(attack, Target::kAllWords, 14), default_layout())));
  }
}

// A sentence's output depends only on its own index, not on its neighbours.
TEST(Determinism, SentencesAreIndependent) {
  const auto corpus = parse_ner(fixture("lexicon_ner.conll"));
  const auto spec = spec_of(Attack::kKeyboard, Target::kGoldEntities);
  const auto whole = perturb_ner(corpus, spec, default_layout());
  for (std::size_t i = 0; i < corpus.size(); i += 17)
    EXPECT_EQ(perturb_ner_sentence(corpus.sentences[i], i, spec, default_layout(), nullptr), whole.sentences[i]);
}

}  // namespace
}  // namespace bioadv
