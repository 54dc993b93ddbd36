#pragma once

#include <cstddef>
#include <vector>

#include "emocause/pagerank.hpp"
#include "emocause/term_graph.hpp"
#include "emocause/topic_model.hpp"

namespace emocause {

struct CauseConfig {
  int graph_window = 1;    // how far back "previous term" reaches
  double lambda = 0.85;
  double epsilon = 1e-10;
  int max_iter = 200;
  int top_n = 100;         // non-emotional terms kept per topic
  int max_len = 4;
  long long min_support = 0;  // 0 = auto: max(3, ceil(0.0005 * topic tweets))
  int top_k = 10;
  double kappa = 1e-6;
  int threads = 1;
};

// Hard argmax assignment of every tweet to one topic; ties go to the lowest
// topic id. Result: per topic, tweet indices into the corpus.
std::vector<std::vector<size_t>> assign_tweets(const EmotionTopicModel& model,
                                               const Corpus& corpus);

// Top-n graph terms by score, emotion words and emoticons excluded. Ties
// break toward the lower token id.
std::vector<int> top_terms(const TopicTermRanking& ranking, const Vocabulary& vocab,
                           int n = 100);

struct Keyphrase {
  std::vector<int> tokens;  // length 2..max_len; backfilled single terms have 1
  long long frequency = 0;
  double score = 0.0;
};

// Contiguous runs of top terms counted over the whole corpus, scored by
// (sum of term scores) * ln(1 + frequency). When fewer than top_k phrases
// clear min_support, top single terms fill the remainder.
// config.min_support must be resolved (>= 1) by the caller.
std::vector<Keyphrase> generate_keyphrases(const Corpus& corpus,
                                           const std::vector<int>& terms,
                                           const TopicTermRanking& ranking,
                                           const CauseConfig& config);

long long auto_min_support(size_t topic_tweet_count);

struct TopicCauses {
  int topic_id = -1;
  size_t tweet_count = 0;
  TopicTermRanking ranking;
  std::vector<int> terms;
  std::vector<Keyphrase> phrases;
};

// Full per-topic pipeline: assign -> graph -> rank -> terms -> phrases.
// Topics are independent; config.threads > 1 fans them out across threads.
std::vector<TopicCauses> extract_causes(const EmotionTopicModel& model, const Corpus& corpus,
                                        const Vocabulary& vocab, const CauseConfig& config);

}  // namespace emocause
