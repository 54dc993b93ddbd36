#include "emocause/causes.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace emocause {

std::vector<std::vector<size_t>> assign_tweets(const EmotionTopicModel& model,
                                               const Corpus& corpus) {
  std::vector<std::vector<size_t>> by_topic(model.num_topics);
  for (size_t i = 0; i < corpus.tweets.size(); ++i) {
    const std::vector<double> p = infer_tweet_topics(model, corpus.tweets[i]);
    int best = 0;
    for (int k = 1; k < model.num_topics; ++k) {
      if (p[k] > p[best]) best = k;
    }
    by_topic[best].push_back(i);
  }
  return by_topic;
}

std::vector<int> top_terms(const TopicTermRanking& ranking, const Vocabulary& vocab, int n) {
  if (n < 1) throw std::invalid_argument("top_terms needs n >= 1");
  std::vector<std::pair<int, double>> eligible;
  for (size_t i = 0; i < ranking.nodes.size(); ++i) {
    const int tok = ranking.nodes[i];
    if (vocab.emotion_of(tok) >= 0) continue;
    if (vocab.is_emoticon(tok)) continue;
    eligible.emplace_back(tok, ranking.scores[i]);
  }
  std::sort(eligible.begin(), eligible.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (eligible.size() > static_cast<size_t>(n)) eligible.resize(n);
  std::vector<int> out;
  out.reserve(eligible.size());
  for (const auto& [tok, score] : eligible) out.push_back(tok);
  return out;
}

long long auto_min_support(size_t topic_tweet_count) {
  const long long scaled =
      static_cast<long long>(std::ceil(0.0005 * static_cast<double>(topic_tweet_count)));
  return std::max<long long>(3, scaled);
}

std::vector<Keyphrase> generate_keyphrases(const Corpus& corpus, const std::vector<int>& terms,
                                           const TopicTermRanking& ranking,
                                           const CauseConfig& config) {
  if (config.min_support < 1) throw std::invalid_argument("min_support must be resolved >= 1");
  if (config.max_len < 2) throw std::invalid_argument("max_len must be >= 2");
  if (terms.empty()) return {};

  const std::unordered_set<int> term_set(terms.begin(), terms.end());
  std::map<std::vector<int>, long long> counts;
  std::unordered_map<int, long long> single_counts;
  for (const Tweet& tweet : corpus.tweets) {
    const auto& t = tweet.tokens;
    for (size_t i = 0; i < t.size(); ++i) {
      if (!term_set.count(t[i])) continue;
      ++single_counts[t[i]];
      std::vector<int> run{t[i]};
      for (size_t j = i + 1; j < t.size() && run.size() < static_cast<size_t>(config.max_len);
           ++j) {
        if (!term_set.count(t[j])) break;
        run.push_back(t[j]);
        ++counts[run];
      }
    }
  }

  std::vector<Keyphrase> phrases;
  for (const auto& [tokens, freq] : counts) {
    if (freq < config.min_support) continue;
    double score_sum = 0.0;
    for (int tok : tokens) score_sum += ranking.score_of(tok);
    Keyphrase kp;
    kp.tokens = tokens;
    kp.frequency = freq;
    kp.score = score_sum * std::log1p(static_cast<double>(freq));
    phrases.push_back(std::move(kp));
  }
  std::sort(phrases.begin(), phrases.end(), [](const Keyphrase& a, const Keyphrase& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.frequency != b.frequency) return a.frequency > b.frequency;
    return a.tokens < b.tokens;
  });
  if (phrases.size() > static_cast<size_t>(config.top_k)) phrases.resize(config.top_k);

  // fewer phrases than asked for: top single terms fill the list
  for (size_t i = 0; i < terms.size() && phrases.size() < static_cast<size_t>(config.top_k);
       ++i) {
    Keyphrase kp;
    kp.tokens = {terms[i]};
    auto it = single_counts.find(terms[i]);
    kp.frequency = it == single_counts.end() ? 0 : it->second;
    kp.score = ranking.score_of(terms[i]) * std::log1p(static_cast<double>(kp.frequency));
    phrases.push_back(std::move(kp));
  }
  return phrases;
}

namespace {

TopicCauses causes_for_topic(const EmotionTopicModel& model, const Corpus& corpus,
                             const Vocabulary& vocab, const CauseConfig& config, int topic,
                             const std::vector<size_t>& tweet_ids) {
  TopicCauses tc;
  tc.topic_id = topic;
  tc.tweet_count = tweet_ids.size();
  const TermGraph graph = build_term_graph(corpus, tweet_ids, config.graph_window);
  if (graph.node_count() == 0) return tc;
  const std::vector<double> jump = topic_jump_vector(model, topic, graph, config.kappa);
  tc.ranking = topical_pagerank(graph, jump, config.lambda, config.epsilon, config.max_iter);
  tc.ranking.topic_id = topic;
  tc.terms = top_terms(tc.ranking, vocab, config.top_n);
  if (tc.terms.empty()) return tc;
  CauseConfig resolved = config;
  if (resolved.min_support < 1) resolved.min_support = auto_min_support(tweet_ids.size());
  tc.phrases = generate_keyphrases(corpus, tc.terms, tc.ranking, resolved);
  return tc;
}

}  // namespace

std::vector<TopicCauses> extract_causes(const EmotionTopicModel& model, const Corpus& corpus,
                                        const Vocabulary& vocab, const CauseConfig& config) {
  const auto by_topic = assign_tweets(model, corpus);
  std::vector<TopicCauses> out(model.num_topics);
  const int threads = std::max(1, config.threads);
  if (threads == 1) {
    for (int k = 0; k < model.num_topics; ++k) {
      out[k] = causes_for_topic(model, corpus, vocab, config, k, by_topic[k]);
    }
    return out;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&]() {
      while (true) {
        const int k = next.fetch_add(1);
        if (k >= model.num_topics) return;
        out[k] = causes_for_topic(model, corpus, vocab, config, k, by_topic[k]);
      }
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace emocause
