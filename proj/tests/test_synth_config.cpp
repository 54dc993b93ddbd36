#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "emocause/config.hpp"
#include "emocause/synth.hpp"
#include "emocause/text.hpp"

using namespace emocause;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() / ("emocause_test_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("synth: every tweet carries an emotion word of its topic") {
  SynthParams sp;
  sp.num_topics = 3;
  sp.vocab_size = 60;
  sp.n_tweets = 300;
  sp.tweet_len = 8;
  sp.seed = 11;
  const SyntheticGroundTruth t = synth_corpus(sp);
  REQUIRE(t.corpus_lines.size() == 300);
  REQUIRE(t.labels.size() == 300);
  for (size_t i = 0; i < t.corpus_lines.size(); ++i) {
    const auto toks = split_whitespace(t.corpus_lines[i]);
    CHECK(toks.size() == 8);
    bool found = false;
    for (const std::string& w : t.emotion_words[t.labels[i]]) {
      for (const auto& tok : toks) {
        if (tok == w) found = true;
      }
    }
    CHECK(found);
  }
}

TEST_CASE("synth: phi_star rows are stochastic and block-disjoint") {
  SynthParams sp;
  const SyntheticGroundTruth t = synth_corpus(sp);
  const int V = static_cast<int>(t.surfaces.size());
  REQUIRE(V == sp.vocab_size);
  for (int k = 0; k < sp.num_topics; ++k) {
    double sum = 0.0;
    for (int w = 0; w < V; ++w) sum += t.phi_star_at(k, w);
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
  }
  // supports are disjoint: no token has positive mass under two topics
  for (int w = 0; w < V; ++w) {
    int positive = 0;
    for (int k = 0; k < sp.num_topics; ++k) {
      if (t.phi_star_at(k, w) > 0.0) ++positive;
    }
    CHECK(positive == 1);
  }
}

TEST_CASE("synth: label frequencies track theta_star within five points") {
  SynthParams sp;
  sp.n_tweets = 2000;
  sp.seed = 11;
  const SyntheticGroundTruth t = synth_corpus(sp);
  std::vector<double> freq(sp.num_topics, 0.0);
  for (int label : t.labels) freq[label] += 1.0;
  for (double& f : freq) f /= static_cast<double>(t.labels.size());
  for (int k = 0; k < sp.num_topics; ++k) {
    CHECK(std::abs(freq[k] - t.theta_star[k]) < 0.05);
  }
}

TEST_CASE("synth: identical parameters give identical files") {
  SynthParams sp;
  sp.n_tweets = 150;
  sp.seed = 29;
  const fs::path d1 = temp_dir("synth_a");
  const fs::path d2 = temp_dir("synth_b");
  write_synth(synth_corpus(sp), d1.string());
  write_synth(synth_corpus(sp), d2.string());
  for (const char* name : {"corpus.txt", "lexicon.txt", "truth.json"}) {
    CHECK(slurp(d1 / name) == slurp(d2 / name));
  }
  fs::remove_all(d1);
  fs::remove_all(d2);
}

TEST_CASE("synth: parameter-range violations rejected") {
  SynthParams sp;
  sp.vocab_size = 5;  // too small
  CHECK_THROWS_AS(synth_corpus(sp), std::invalid_argument);
  SynthParams sp2;
  sp2.n_tweets = 1;
  sp2.num_topics = 3;
  CHECK_THROWS_AS(synth_corpus(sp2), std::invalid_argument);
}

TEST_CASE("config: file parsing, overrides and unknown keys") {
  const fs::path dir = temp_dir("config");
  const fs::path cfg_path = dir / "run.cfg";
  {
    std::ofstream out(cfg_path);
    out << "# comment line\n"
        << "sweeps = 25\n"
        << "lambda = 0.9   # trailing comment\n"
        << "conflict_policy = drop\n"
        << "ndcg_k = 3,7\n";
  }
  PipelineConfig cfg;
  cfg.apply_file(cfg_path.string());
  CHECK(cfg.train.sweeps == 25);
  CHECK(cfg.causes.lambda == doctest::Approx(0.9));
  CHECK(cfg.train.conflict_policy == ConflictPolicy::kDrop);
  CHECK(cfg.ndcg_k == std::vector<int>{3, 7});
  // a flag-style override replaces the file value
  cfg.apply_kv("sweeps", "40");
  CHECK(cfg.train.sweeps == 40);
  CHECK_THROWS_AS(cfg.apply_kv("no_such_key", "1"), std::runtime_error);
  CHECK_THROWS_AS(cfg.apply_kv("sweeps", "abc"), std::runtime_error);
  fs::remove_all(dir);
}

TEST_CASE("config: validation ranges") {
  PipelineConfig cfg;
  cfg.validate();  // defaults are valid
  PipelineConfig bad = cfg;
  bad.causes.lambda = 1.0;
  CHECK_THROWS_AS(bad.validate(), std::runtime_error);
  bad = cfg;
  bad.train.beta = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::runtime_error);
  bad = cfg;
  bad.p = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::runtime_error);
  bad = cfg;
  bad.soft_assign = true;  // reserved knob
  CHECK_THROWS_AS(bad.validate(), std::runtime_error);
  bad = cfg;
  bad.train.estimate = EstimateMode::kAverage;
  bad.train.burn_in = bad.train.sweeps;
  CHECK_THROWS_AS(bad.validate(), std::runtime_error);
}

TEST_CASE("config: echo covers every key") {
  PipelineConfig cfg;
  const auto kv = cfg.echo();
  // one entry per documented key
  CHECK(kv.size() == 28);
  PipelineConfig reparsed;
  for (const auto& [k, v] : kv) {
    if (v.empty()) continue;  // unset paths
    reparsed.apply_kv(k, v);
  }
  CHECK(reparsed.train.sweeps == cfg.train.sweeps);
  CHECK(reparsed.causes.lambda == cfg.causes.lambda);
  CHECK(reparsed.p == cfg.p);
}
