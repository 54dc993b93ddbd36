#include <doctest.h>

#include <cmath>
#include <random>

#include "emocause/emoticon.hpp"

using namespace emocause;

namespace {

RelevanceMatrix matrix_of(int k, std::vector<int> tokens, std::vector<double> values) {
  RelevanceMatrix R;
  R.num_emotions = k;
  R.emoticon_tokens = std::move(tokens);
  R.values = std::move(values);
  return R;
}

}  // namespace

TEST_CASE("relevance_matrix: definitional copy of phi at emoticon columns") {
  const EmotionLexicon lex = EmotionLexicon::from_entries({{"sympathy", {"seed"}}});
  const CorpusBuild b = build_corpus({{"seed", "[candle]", "x"}}, lex);
  EmotionTopicModel m;
  m.num_topics = 1;
  m.vocab_size = 3;
  const int candle = b.vocab.id_of("[candle]");
  m.phi = {0.6, 0.0, 0.0};
  m.phi[candle] = 0.02;
  m.phi[b.vocab.id_of("x")] = 1.0 - 0.6 - 0.02;
  m.theta = {1.0};
  m.emotion_names = {"sympathy"};
  const RelevanceMatrix R = relevance_matrix(m, b.vocab);
  CHECK(R.num_emotions == 1);
  CHECK(R.emoticon_tokens == std::vector<int>{candle});
  CHECK(R.at(0, 0) == doctest::Approx(0.02));
}

TEST_CASE("relevance_matrix: smoothing keeps never-seen emoticons positive") {
  const EmotionLexicon lex =
      EmotionLexicon::from_entries({{"e0", {"s0"}}, {"e1", {"s1"}}});
  // [wave] only ever co-occurs with s1 words
  std::vector<std::vector<std::string>> lines;
  for (int i = 0; i < 10; ++i) lines.push_back({"s0", "quake"});
  for (int i = 0; i < 10; ++i) lines.push_back({"s1", "[wave]"});
  const CorpusBuild b = build_corpus(lines, lex);
  TrainConfig cfg;
  cfg.sweeps = 30;
  cfg.seed = 8;
  const EmotionTopicModel m = train(b.corpus, b.vocab, lex, cfg);
  const RelevanceMatrix R = relevance_matrix(m, b.vocab);
  REQUIRE(R.emoticon_count() == 1);
  CHECK(R.at(0, 0) > 0.0);  // beta smoothing, never exactly zero
  CHECK(R.at(1, 0) > R.at(0, 0));
}

TEST_CASE("relevance_matrix: no emoticons is an explicit error") {
  const EmotionLexicon lex = EmotionLexicon::from_entries({{"e0", {"s0"}}});
  const CorpusBuild b = build_corpus({{"s0", "plain"}}, lex);
  EmotionTopicModel m;
  m.num_topics = 1;
  m.vocab_size = 2;
  m.phi = {0.5, 0.5};
  m.theta = {1.0};
  m.emotion_names = {"e0"};
  CHECK_THROWS_AS(relevance_matrix(m, b.vocab), std::runtime_error);
}

TEST_CASE("compute_threshold: uniform matrix gives p times the cell value") {
  const RelevanceMatrix R = matrix_of(2, {5, 9}, {0.3, 0.3, 0.3, 0.3});
  CHECK(compute_threshold(R, 0.6) == doctest::Approx(0.18).epsilon(1e-12));
}

TEST_CASE("compute_threshold: worked example K=1, N=2") {
  const RelevanceMatrix R = matrix_of(1, {5, 9}, {0.2, 0.4});
  CHECK(compute_threshold(R, 0.6) == doctest::Approx(0.18).epsilon(1e-12));
}

TEST_CASE("compute_threshold: default p and bad p") {
  const RelevanceMatrix R = matrix_of(1, {5}, {0.5});
  CHECK_THROWS_AS(compute_threshold(R, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(compute_threshold(R, -1.0), std::invalid_argument);
}

TEST_CASE("related_emoticons: ordering, strict threshold, empty lists") {
  const RelevanceMatrix R = matrix_of(1, {5, 9}, {0.2, 0.4});
  const auto lists = related_emoticons(R, 0.18);
  REQUIRE(lists.size() == 1);
  REQUIRE(lists[0].size() == 2);
  CHECK(lists[0][0].token == 9);  // higher relevance first
  CHECK(lists[0][1].token == 5);

  // boundary equality is excluded
  const auto strict = related_emoticons(R, 0.4);
  CHECK(strict[0].empty());
}

TEST_CASE("related_emoticons: an emoticon may appear under several emotions") {
  const RelevanceMatrix R = matrix_of(2, {5, 9}, {0.5, 0.1, 0.4, 0.1});
  const auto lists = related_emoticons(R, 0.2);
  CHECK(lists[0].size() == 1);
  CHECK(lists[1].size() == 1);
  CHECK(lists[0][0].token == 5);
  CHECK(lists[1][0].token == 5);
}

TEST_CASE("related_emoticons: all-zero matrix selects nothing") {
  const RelevanceMatrix R = matrix_of(2, {5, 9}, {0.0, 0.0, 0.0, 0.0});
  CHECK(compute_threshold(R, 0.6) == 0.0);
  for (const auto& list : related_emoticons(R, 0.0)) CHECK(list.empty());
}

TEST_CASE("threshold linearity: scaling leaves selections and ordering unchanged") {
  std::mt19937_64 gen(202);
  for (int trial = 0; trial < 100; ++trial) {
    const int K = 1 + static_cast<int>(gen() % 4);
    const int N = 1 + static_cast<int>(gen() % 6);
    std::vector<int> tokens(N);
    for (int n = 0; n < N; ++n) tokens[n] = n * 2 + 1;
    std::vector<double> values(static_cast<size_t>(K) * N);
    for (double& v : values) v = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    const double c = 0.25 + static_cast<double>(gen() % 100) / 10.0;

    const RelevanceMatrix R = matrix_of(K, tokens, values);
    std::vector<double> scaled_values = values;
    for (double& v : scaled_values) v *= c;
    const RelevanceMatrix Rs = matrix_of(K, tokens, scaled_values);

    const double t = compute_threshold(R, 0.6);
    const double ts = compute_threshold(Rs, 0.6);
    CHECK(ts == doctest::Approx(c * t).epsilon(1e-9));

    const auto a = related_emoticons(R, t);
    const auto b = related_emoticons(Rs, ts);
    REQUIRE(a.size() == b.size());
    for (size_t k = 0; k < a.size(); ++k) {
      REQUIRE(a[k].size() == b[k].size());
      for (size_t i = 0; i < a[k].size(); ++i) CHECK(a[k][i].token == b[k][i].token);
    }
  }
}
