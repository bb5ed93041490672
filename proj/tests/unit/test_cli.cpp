// Copyright 2026 The kgraph Authors.
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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "kgraph/artifacts.hpp"
#include "kgraph/graph_io.hpp"
#include "kgraph/tools/cli.hpp"

namespace kgraph {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("kgraph_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  Outcome in_dir(std::vector<std::string> args) {
    args.insert(args.begin(), {"--dir", dir_.string()});
    return invoke(std::move(args));
  }
  fs::path path(const std::string& name) const { return dir_ / name; }
  void write(const std::string& name, const std::string& text) {
    std::ofstream(path(name), std::ios::binary) << text;
  }

  fs::path dir_;
};

TEST_F(Cli, MissingInputExitsTwo) {
  const auto r = in_dir({"keywords"});
  EXPECT_EQ(r.code, cli::kMissingInput);
  EXPECT_NE(r.err.find("normalized.jsonl"), std::string::npos) << r.err;
  EXPECT_EQ(in_dir({"graph", "stats"}).code, cli::kMissingInput);
}

TEST_F(Cli, ConfigErrorsExitThree) {
  write("bad.json", R"({"cluster":{"k":0}})");
  write("corpus.jsonl", "");
  const auto r = in_dir({"--config", path("bad.json").string(), "normalize"});
  EXPECT_EQ(r.code, cli::kConfigError);
  EXPECT_NE(r.err.find("cluster.k"), std::string::npos) << r.err;
  EXPECT_EQ(in_dir({"--top-k", "0", "normalize"}).code, cli::kConfigError);
  EXPECT_EQ(in_dir({"--threshold", "2", "normalize"}).code, cli::kConfigError);
}

TEST_F(Cli, UsageErrorsAreNonzero) {
  EXPECT_NE(invoke({}).code, 0);
  EXPECT_NE(invoke({"frobnicate"}).code, 0);
  EXPECT_NE(in_dir({"--workers", "0", "synth"}).code, 0);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST_F(Cli, EmptyCorpusFlowsThrough) {
  write("empty.jsonl", "");
  ASSERT_EQ(in_dir({"ingest", path("empty.jsonl").string()}).code, 0);
  ASSERT_EQ(in_dir({"normalize"}).code, 0);
  ASSERT_EQ(in_dir({"keywords"}).code, 0);
  EXPECT_TRUE(read_keywords(path("keywords.jsonl")).empty());
  ASSERT_EQ(in_dir({"graph", "build"}).code, 0);
  EXPECT_TRUE(import_json(path("graph.json")).nodes.empty());
}

TEST_F(Cli, IngestsTermList) {
  const auto r = in_dir({"ingest", KGRAPH_TEST_DATA "/uat_terms.txt", "--format", "termlist",
                         "--source", "thesaurus"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto corpus = read_corpus(path("corpus.jsonl"));
  EXPECT_EQ(corpus.size(), 2826u);
  for (const auto& d : corpus) EXPECT_EQ(d.source, Source::Thesaurus);
}

TEST_F(Cli, IngestCsvAndAppend) {
  ASSERT_EQ(in_dir({"ingest", KGRAPH_TEST_DATA "/uat_terms.csv", "--format", "csv", "--text-col",
                    "term", "--id-col", "uat_id", "--source", "thesaurus"})
                .code,
            0);
  ASSERT_EQ(in_dir({"ingest", KGRAPH_TEST_DATA "/three.jsonl", "--append"}).code, 0);
  const auto corpus = read_corpus(path("corpus.jsonl"));
  EXPECT_EQ(corpus.size(), 2826u + 3u);
  EXPECT_TRUE(corpus.contains("uat00001"));
  EXPECT_TRUE(corpus.contains("d3"));
}

TEST_F(Cli, MalformedRecordsSkippedUnlessStrict) {
  write("mixed.jsonl", "{\"id\":\"a\",\"text\":\"fine\"}\n{broken\n{\"id\":\"b\",\"text\":\"ok\"}\n");
  const auto lax = in_dir({"ingest", path("mixed.jsonl").string()});
  EXPECT_EQ(lax.code, 0);
  EXPECT_NE(lax.err.find("line 2"), std::string::npos) << lax.err;
  EXPECT_EQ(read_corpus(path("corpus.jsonl")).size(), 2u);
  EXPECT_NE(in_dir({"--strict", "ingest", path("mixed.jsonl").string()}).code, 0);
}

class Pipeline : public Cli {
 protected:
  void run_pipeline(const std::string& workers) {
    auto step = [&](std::vector<std::string> args) {
      args.insert(args.begin(), {"--workers", workers});
      const auto r = in_dir(args);
      ASSERT_EQ(r.code, 0) << args[2] << ": " << r.err;
    };
    step({"synth", "--docs-per-domain", "60", "--vocabulary", "200"});
    step({"ingest", path("synthetic.jsonl").string()});
    step({"normalize"});
    step({"keywords"});
    step({"graph", "build", "--min-sim", "0.6"});
    step({"cluster", "--assignments", path("assignments.csv").string()});
  }
};

TEST_F(Pipeline, EndToEndSeparatesDomains) {
  run_pipeline("1");
  const auto overlap = overlap_from_json(read_file(path("overlap.json")));
  EXPECT_GE(overlap.accuracy, 0.8);
  EXPECT_EQ(overlap.docs_a, 60u);
  EXPECT_EQ(overlap.docs_b, 60u);
  EXPECT_EQ(parse_csv(read_file(path("assignments.csv"))).size(), 121u);

  const auto g = import_json(path("graph.json"));
  EXPECT_FALSE(g.nodes.empty());
  check_invariants(g);

  const auto stats = in_dir({"graph", "stats"});
  ASSERT_EQ(stats.code, 0);
  EXPECT_NE(stats.out.find("nodes"), std::string::npos) << stats.out;
  const auto report = in_dir({"report"});
  ASSERT_EQ(report.code, 0) << report.err;
  EXPECT_NE(report.out.find("accuracy"), std::string::npos);

  ASSERT_EQ(in_dir({"graph", "prune", "--min-node-freq", "3", "-o", path("pruned.json").string()}).code, 0);
  const auto pruned = import_json(path("pruned.json"));
  EXPECT_LE(pruned.nodes.size(), g.nodes.size());
  for (const auto& [id, n] : pruned.nodes) EXPECT_GE(n.frequency, 3u);

  for (const char* fmt : {"graphml", "dot", "json"}) {
    const auto out = path(std::string("export.") + fmt);
    ASSERT_EQ(in_dir({"graph", "export", "--format", fmt, "-o", out.string()}).code, 0);
    EXPECT_GT(fs::file_size(out), 0u);
  }
  EXPECT_NE(in_dir({"graph", "export", "--format", "gexf", "-o", path("x").string()}).code, 0);
}

TEST_F(Pipeline, OutputsIndependentOfWorkerCount) {
  run_pipeline("1");
  const auto graph1 = read_file(path("graph.json"));
  const auto overlap1 = read_file(path("overlap.json"));
  const auto keywords1 = read_file(path("keywords.jsonl"));
  run_pipeline("4");
  EXPECT_EQ(read_file(path("keywords.jsonl")), keywords1);
  EXPECT_EQ(read_file(path("graph.json")), graph1);
  EXPECT_EQ(read_file(path("overlap.json")), overlap1);
}

TEST_F(Cli, FilterKeepsRelevantDocuments) {
  write("docs.jsonl",
        "{\"id\":\"on\",\"text\":\"Geomagnetic storms follow coronal mass ejections.\"}\n"
        "{\"id\":\"off\",\"text\":\"Recipes for sourdough bread and pastry.\"}\n");
  ASSERT_EQ(in_dir({"ingest", path("docs.jsonl").string()}).code, 0);
  ASSERT_EQ(in_dir({"normalize"}).code, 0);
  const auto r = in_dir({"filter", "--thesaurus", KGRAPH_TEST_DATA "/uat_terms.txt"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto kept = read_corpus(path("kept.jsonl"));
  EXPECT_TRUE(kept.contains("on"));
  EXPECT_FALSE(kept.contains("off"));
  EXPECT_EQ(read_normalized(path("kept_normalized.jsonl")).size(), kept.size());
  EXPECT_EQ(parse_csv(read_file(path("relevance.csv"))).size(), 3u);
}

}  // namespace
}  // namespace kgraph
