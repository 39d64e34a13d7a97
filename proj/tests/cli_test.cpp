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


#include <sys/wait.h>

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "bioadv/cli.hpp"
#include "oracles.hpp"

namespace bioadv {
namespace {

namespace fs = std::filesystem;

const std::string kFixtures = BIOADV_FIXTURES;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("bioadv_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int run(const std::vector<std::string>& args) {
    out_.str("");
    err_.str("");
    return cli::run(args, out_, err_);
  }

  std::string read(const std::string& name) const { return oracle::read_file(path(name)); }

  fs::path dir_;
  std::ostringstream out_, err_;
};

TEST_F(Cli, PerturbSynonymProducesPotassiumWarfarin) {
  ASSERT_EQ(run({"perturb", "--task", "ner", "--attack", "synonym", "--target", "gold", "--lexicon", "builtin", "--in",
                 kFixtures + "/warfarin_sentence.conll", "--out", path("syn.conll")}),
            0)
      << err_.str();
  const std::string out = read("syn.conll");
  EXPECT_NE(out.find("potassium B-Chemical\nwarfarin I-Chemical\n"), std::string::npos) << out;
}

TEST_F(Cli, PerturbIsDeterministic) {
  const std::vector<std::string> base{"--seed", "7", "perturb", "--task", "ner", "--attack", "keyboard", "--target",
                                      "all", "--in", kFixtures + "/mem_train.conll", "--out"};
  auto a = base, b = base;
  a.push_back(path("a.conll"));
  b.push_back(path("b.conll"));
  b.insert(b.end(), {"--jobs", "4"});
  ASSERT_EQ(run(a), 0) << err_.str();
  ASSERT_EQ(run(b), 0) << err_.str();
  EXPECT_EQ(read("a.conll"), read("b.conll"));
  EXPECT_NE(read("a.conll"), oracle::read_file(kFixtures + "/mem_train.conll"));
}

TEST_F(Cli, UsageErrorsExitTwo) {
  const std::string in = kFixtures + "/warfarin_sentence.conll";
  EXPECT_EQ(run({"perturb", "--task", "ner", "--attack", "synonym", "--target", "gold", "--in", in, "--out",
                 path("x")}),
            2);
  EXPECT_NE(err_.str().find("--lexicon"), std::string::npos);
  EXPECT_EQ(run({"perturb", "--task", "sts", "--attack", "swap", "--target", "gold", "--in", in, "--out", path("x")}), 2);
  EXPECT_EQ(run({"perturb", "--task", "ner", "--attack", "swap", "--target", "lexicon", "--in", in, "--out",
                 path("x")}),
            2);
  EXPECT_EQ(run({"perturb", "--task", "ner", "--attack", "typo", "--target", "all", "--in", in, "--out", path("x")}), 2);
  EXPECT_EQ(run({"perturb", "--task", "ner"}), 2);
  EXPECT_EQ(run({}), 2);
  EXPECT_EQ(run({"evaluate", "--task", "sts", "--model", "builtin-lexicon", "--test", in, "--report", path("r")}), 2);
  EXPECT_EQ(run({"evaluate", "--task", "ner", "--model", "builtin-lexicon", "--test", in, "--attacks", "swap",
                 "--report", path("r")}),
            2);
  EXPECT_EQ(run({"evaluate", "--task", "ner", "--model", "builtin-lexicon", "--test", in, "--format", "csv",
                 "--report", path("r")}),
            2);
  EXPECT_FALSE(fs::exists(path("x")));
  EXPECT_FALSE(fs::exists(path("r")));
  EXPECT_EQ(run({"--help"}), 0);
}

TEST_F(Cli, DataErrorsExitOneWithoutPartialOutput) {
  EXPECT_EQ(run({"make-train", "--task", "ner", "--attack", "swap", "--target", "all", "--in",
                 kFixtures + "/sts_overlap.tsv", "--out", path("bad.conll")}),
            1);
  EXPECT_NE(err_.str().find("line 1"), std::string::npos) << err_.str();
  EXPECT_EQ(run({"perturb", "--task", "ner", "--attack", "swap", "--target", "all", "--in", path("missing.conll"),
                 "--out", path("bad.conll")}),
            1);
  EXPECT_FALSE(fs::exists(path("bad.conll")));
  for (const auto& entry : fs::directory_iterator(dir_)) ADD_FAILURE() << "left behind " << entry.path();
}

TEST_F(Cli, MakeTrainDoublesCorpus) {
  const std::string in = kFixtures + "/lexicon_ner.conll";
  const std::vector<std::string> args{"make-train", "--task", "ner", "--attack", "swap", "--target", "gold", "--in",
                                      in, "--out", path("aug.conll")};
  ASSERT_EQ(run(args), 0) << err_.str();
  const std::string first = read("aug.conll");
  EXPECT_EQ(parse_ner(first).size(), 2 * parse_ner(oracle::read_file(in)).size());
  ASSERT_EQ(run(args), 0);
  EXPECT_EQ(read("aug.conll"), first);

  ASSERT_EQ(run({"make-train", "--task", "sts", "--attack", "keyboard", "--target", "all", "--in",
                 kFixtures + "/sts_overlap.tsv", "--out", path("aug.tsv")}),
            0)
      << err_.str();
  EXPECT_EQ(parse_sts(read("aug.tsv")).size(), 2 * parse_sts(oracle::read_file(kFixtures + "/sts_overlap.tsv")).size());
}

TEST_F(Cli, EvaluateJsonAndMarkdown) {
  const std::vector<std::string> base{"evaluate", "--task", "ner", "--model", "builtin-lexicon", "--lexicon",
                                      kFixtures + "/closed_lexicon.tsv", "--test", kFixtures + "/lexicon_ner.conll",
                                      "--attacks", "keyboard:gold"};
  auto json = base;
  json.insert(json.end(), {"--report", path("r.json")});
  ASSERT_EQ(run(json), 0) << err_.str();
  const auto report = report_from_json(read("r.json"));
  ASSERT_EQ(report.rows.size(), 2u);
  EXPECT_EQ(report.dataset, "lexicon_ner");
  EXPECT_EQ(std::get<PrfScores>(report.rows[0].metrics).f1, 1.0);

  auto md = base;
  md.insert(md.end(), {"--report", path("r.md"), "--format", "md", "--dataset", "Fixture"});
  ASSERT_EQ(run(md), 0) << err_.str();
  const std::string table = read("r.md");
  EXPECT_TRUE(table.starts_with("| Train Set | Model | Test Set | Precision | Recall | F1 |\n")) << table;
  EXPECT_NE(table.find("| Fixture | builtin-lexicon | Original | 1.000 | 1.000 | 1.000 |"), std::string::npos);
  EXPECT_NE(table.find("Keyboard (gold-entities)"), std::string::npos);
}

TEST_F(Cli, EvaluateMemorizeAndOverlapModels) {
  ASSERT_EQ(run({"evaluate", "--task", "ner", "--model", "builtin-memorize:" + kFixtures + "/mem_train.conll", "--test",
                 kFixtures + "/mem_test.conll", "--attacks", "swap:all,keyboard:gold", "--report", path("m.json")}),
            0)
      << err_.str();
  EXPECT_EQ(report_from_json(read("m.json")).rows.size(), 3u);
  ASSERT_EQ(run({"evaluate", "--task", "sts", "--model", "builtin-overlap", "--lexicon", "builtin", "--test",
                 kFixtures + "/sts_overlap.tsv", "--attacks", "swap:lexicon", "--report", path("s.json")}),
            0)
      << err_.str();
  EXPECT_EQ(report_from_json(read("s.json")).rows.size(), 2u);
}

TEST_F(Cli, RemoteModelFailuresExitOne) {
  EXPECT_EQ(run({"--timeout", "2", "evaluate", "--task", "ner", "--model", "http://127.0.0.1:1", "--test",
                 kFixtures + "/warfarin_sentence.conll", "--report", path("r.json")}),
            1);
  EXPECT_NE(err_.str().find("row 'original'"), std::string::npos) << err_.str();
  EXPECT_EQ(run({"evaluate", "--task", "ner", "--model", std::string("cmd:") + BIOADV_FAKE_ADAPTER + " short",
                 "--test", kFixtures + "/warfarin_sentence.conll", "--report", path("r.json")}),
            1);
  EXPECT_NE(err_.str().find("tagger contract"), std::string::npos) << err_.str();
  EXPECT_FALSE(fs::exists(path("r.json")));

  ASSERT_EQ(run({"evaluate", "--task", "ner", "--model", std::string("cmd:") + BIOADV_FAKE_ADAPTER + " lexicon",
                 "--test", kFixtures + "/warfarin_sentence.conll", "--attacks", "swap:gold", "--report", path("ok.json")}),
            0)
      << err_.str();
}

// The installed binary behaves like the in-process entry point.
TEST_F(Cli, BinaryExitCodes) {
  const std::string bin = BIOADV_CLI;
  const auto sh = [](const std::string& cmd) {
    const int status = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  };
  EXPECT_EQ(sh(bin + " perturb --task ner --attack swap --target gold --in " + kFixtures + "/warfarin_sentence.conll --out " +
               path("t.conll")),
            0);
  EXPECT_TRUE(fs::exists(path("t.conll")));
  EXPECT_EQ(sh(bin + " perturb --task ner --attack synonym --target gold --in " + kFixtures + "/warfarin_sentence.conll --out " +
               path("u.conll")),
            2);
  EXPECT_EQ(sh(bin + " perturb --task ner --attack swap --target gold --in " + kFixtures + "/warfarin_sentence.tsv --out " +
               path("u.conll")),
            1);
}

}  // namespace
}  // namespace bioadv
