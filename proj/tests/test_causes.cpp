#include <doctest.h>

#include <cmath>

#include "emocause/causes.hpp"

using namespace emocause;

namespace {

EmotionTopicModel hand_model(int k, int v, std::vector<double> phi, std::vector<double> theta) {
  EmotionTopicModel m;
  m.num_topics = k;
  m.vocab_size = v;
  m.phi = std::move(phi);
  m.theta = std::move(theta);
  for (int i = 0; i < k; ++i) m.emotion_names.push_back("e" + std::to_string(i));
  return m;
}

Corpus corpus_of(std::vector<std::vector<int>> tweets) {
  Corpus c;
  for (auto& toks : tweets) {
    Tweet t;
    t.tokens = std::move(toks);
    c.tweets.push_back(std::move(t));
  }
  return c;
}

TopicTermRanking ranking_of(std::vector<int> nodes, std::vector<double> scores) {
  TopicTermRanking r;
  r.topic_id = 0;
  r.nodes = std::move(nodes);
  r.scores = std::move(scores);
  r.converged = true;
  return r;
}

}  // namespace

TEST_CASE("assign_tweets: one-hot posterior and tie-break to the lowest id") {
  // token 0 pinned to topic 0 via mask; tokens 1/2 symmetric across topics
  const auto m =
      hand_model(2, 4, {0.4, 0.3, 0.3, 0.0, 0.0, 0.3, 0.3, 0.4}, {0.5, 0.5});
  const Corpus c = corpus_of({{0, 1}, {1, 2}});
  const auto by_topic = assign_tweets(m, c);
  // tweet 0 has P(topic 0)=1; tweet 1 is an exact tie -> topic 0
  CHECK(by_topic[0] == std::vector<size_t>{0, 1});
  CHECK(by_topic[1].empty());
}

TEST_CASE("assign_tweets: uniform posterior over three topics goes to topic 0") {
  const auto m = hand_model(3, 2,
                            {0.5, 0.5, 0.5, 0.5, 0.5, 0.5},
                            {1.0 / 3, 1.0 / 3, 1.0 / 3});
  const Corpus c = corpus_of({{0, 1}});
  const auto by_topic = assign_tweets(m, c);
  CHECK(by_topic[0].size() == 1);
  CHECK(by_topic[1].empty());
  CHECK(by_topic[2].empty());
}

TEST_CASE("top_terms: excludes emotion words and emoticons") {
  const EmotionLexicon lex = EmotionLexicon::from_entries({{"joy", {"seed"}}});
  const CorpusBuild b = build_corpus({{"seed", "alpha", "[grin]", "beta"}}, lex);
  const int seed_tok = b.vocab.id_of("seed");
  const int alpha_tok = b.vocab.id_of("alpha");
  const int grin_tok = b.vocab.id_of("[grin]");
  const int beta_tok = b.vocab.id_of("beta");
  // the top-scored node is the emotion word; it must not be returned
  const auto r = ranking_of({seed_tok, alpha_tok, grin_tok, beta_tok}, {0.5, 0.2, 0.2, 0.1});
  const auto terms = top_terms(r, b.vocab, 10);
  CHECK(terms == std::vector<int>{alpha_tok, beta_tok});
}

TEST_CASE("top_terms: truncation and tie-break") {
  const EmotionLexicon lex = EmotionLexicon::from_entries({{"joy", {"seed"}}});
  const CorpusBuild b = build_corpus({{"seed", "a", "b", "c"}}, lex);
  const int a = b.vocab.id_of("a"), bb = b.vocab.id_of("b"), cc = b.vocab.id_of("c");
  const auto r = ranking_of({a, bb, cc}, {0.3, 0.4, 0.3});  // a and c tie
  CHECK(top_terms(r, b.vocab, 10) == std::vector<int>{bb, a, cc});
  CHECK(top_terms(r, b.vocab, 2) == std::vector<int>{bb, a});
  CHECK(top_terms(r, b.vocab, 1) == std::vector<int>{bb});
}

TEST_CASE("generate_keyphrases: counting, candidacy and scoring") {
  // phrase [10, 11] appears 7 times; token 12 is outside the term list
  std::vector<std::vector<int>> tweets;
  for (int i = 0; i < 7; ++i) tweets.push_back({10, 11, 5});
  tweets.push_back({12, 10});
  const Corpus c = corpus_of(std::move(tweets));
  const auto r = ranking_of({5, 10, 11, 12}, {0.1, 0.4, 0.3, 0.2});
  CauseConfig cfg;
  cfg.min_support = 5;
  cfg.top_k = 10;
  const auto phrases = generate_keyphrases(c, {10, 11, 5}, r, cfg);

  REQUIRE_FALSE(phrases.empty());
  // the full run [10,11,5] carries the largest token-score sum
  const Keyphrase& top = phrases[0];
  CHECK(top.tokens == std::vector<int>{10, 11, 5});
  CHECK(top.frequency == 7);
  CHECK(top.score == doctest::Approx((0.4 + 0.3 + 0.1) * std::log1p(7.0)).epsilon(1e-12));
  bool found_pair = false;
  for (const Keyphrase& kp : phrases) {
    if (kp.tokens == std::vector<int>{10, 11}) {
      found_pair = true;
      CHECK(kp.frequency == 7);
      CHECK(kp.score == doctest::Approx((0.4 + 0.3) * std::log1p(7.0)).epsilon(1e-12));
    }
  }
  CHECK(found_pair);
  // no emitted phrase may contain token 12
  for (const Keyphrase& kp : phrases) {
    for (int tok : kp.tokens) CHECK(tok != 12);
  }
}

TEST_CASE("generate_keyphrases: higher token-score sum wins at equal frequency") {
  std::vector<std::vector<int>> tweets;
  for (int i = 0; i < 3; ++i) tweets.push_back({1, 2});  // sum 0.10
  for (int i = 0; i < 3; ++i) tweets.push_back({3, 4});  // sum 0.05
  const Corpus c = corpus_of(std::move(tweets));
  const auto r = ranking_of({1, 2, 3, 4}, {0.06, 0.04, 0.03, 0.02});
  CauseConfig cfg;
  cfg.min_support = 3;
  const auto phrases = generate_keyphrases(c, {1, 2, 3, 4}, r, cfg);
  REQUIRE(phrases.size() >= 2);
  CHECK(phrases[0].tokens == std::vector<int>{1, 2});
  CHECK(phrases[1].tokens == std::vector<int>{3, 4});
}

TEST_CASE("generate_keyphrases: below min_support is excluded") {
  const Corpus c = corpus_of({{1, 2}, {1, 2}, {3, 4}});
  const auto r = ranking_of({1, 2, 3, 4}, {0.25, 0.25, 0.25, 0.25});
  CauseConfig cfg;
  cfg.min_support = 2;
  cfg.top_k = 2;
  const auto phrases = generate_keyphrases(c, {1, 2, 3, 4}, r, cfg);
  REQUIRE(phrases.size() == 2);
  CHECK(phrases[0].tokens == std::vector<int>{1, 2});
  CHECK(phrases[0].frequency == 2);
  // [3,4] missed the support floor; the open slot backfills with a single term
  CHECK(phrases[1].tokens.size() == 1);
  for (const Keyphrase& kp : phrases) CHECK(kp.tokens != std::vector<int>{3, 4});
}

TEST_CASE("generate_keyphrases: max_len bounds the run length") {
  const Corpus c = corpus_of({{1, 2, 3, 4, 5}, {1, 2, 3, 4, 5}, {1, 2, 3, 4, 5}});
  const auto r = ranking_of({1, 2, 3, 4, 5}, {0.2, 0.2, 0.2, 0.2, 0.2});
  CauseConfig cfg;
  cfg.min_support = 3;
  cfg.max_len = 3;
  cfg.top_k = 50;
  const auto phrases = generate_keyphrases(c, {1, 2, 3, 4, 5}, r, cfg);
  for (const Keyphrase& kp : phrases) {
    if (kp.tokens.size() >= 2) CHECK(kp.tokens.size() <= 3);
  }
  bool found_triple = false;
  for (const Keyphrase& kp : phrases) {
    if (kp.tokens == std::vector<int>{1, 2, 3}) found_triple = true;
  }
  CHECK(found_triple);
}

TEST_CASE("generate_keyphrases: single terms backfill a short list") {
  const Corpus c = corpus_of({{1, 9}, {2, 9}, {1, 2}});  // no phrase reaches support 3
  const auto r = ranking_of({1, 2, 9}, {0.5, 0.3, 0.2});
  CauseConfig cfg;
  cfg.min_support = 3;
  cfg.top_k = 3;
  const auto phrases = generate_keyphrases(c, {1, 2, 9}, r, cfg);
  REQUIRE(phrases.size() == 3);
  CHECK(phrases[0].tokens == std::vector<int>{1});
  CHECK(phrases[0].frequency == 2);
  CHECK(phrases[1].tokens == std::vector<int>{2});
  CHECK(phrases[2].tokens == std::vector<int>{9});
}

TEST_CASE("auto_min_support: floor of 3, scale-aware above") {
  CHECK(auto_min_support(0) == 3);
  CHECK(auto_min_support(200) == 3);
  CHECK(auto_min_support(6000) == 3);
  CHECK(auto_min_support(20000) == 10);
}

TEST_CASE("extract_causes: phrase tokens always come from the top-term list") {
  const EmotionLexicon lex =
      EmotionLexicon::from_entries({{"e0", {"s0"}}, {"e1", {"s1"}}});
  std::vector<std::vector<std::string>> lines;
  for (int i = 0; i < 12; ++i) lines.push_back({"s0", "quake", "rescue"});
  for (int i = 0; i < 12; ++i) lines.push_back({"s1", "donate", "orphan"});
  const CorpusBuild b = build_corpus(lines, lex);
  TrainConfig tcfg;
  tcfg.sweeps = 60;
  tcfg.seed = 2;
  const EmotionTopicModel m = train(b.corpus, b.vocab, lex, tcfg);
  CauseConfig cfg;
  cfg.threads = 2;
  const auto causes = extract_causes(m, b.corpus, b.vocab, cfg);
  REQUIRE(causes.size() == 2);
  for (const TopicCauses& tc : causes) {
    CHECK(tc.phrases.size() <= static_cast<size_t>(cfg.top_k));
    for (const Keyphrase& kp : tc.phrases) {
      for (int tok : kp.tokens) {
        CHECK(std::find(tc.terms.begin(), tc.terms.end(), tok) != tc.terms.end());
      }
    }
  }
}
