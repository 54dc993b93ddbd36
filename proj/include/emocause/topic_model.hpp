#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "emocause/corpus.hpp"
#include "emocause/lexicon.hpp"
#include "emocause/rng.hpp"

namespace emocause {

// What to do with a biterm whose two words belong to different emotions:
// sample over the union of the two owners, or drop the biterm entirely.
enum class ConflictPolicy { kUnion, kDrop };

// Final-state estimate, or the average of the per-sweep estimates after
// burn-in.
enum class EstimateMode { kFinal, kAverage };

struct TrainConfig {
  double alpha = 0.0;  // 0 = auto: 50/K
  double beta = 0.01;
  int sweeps = 1000;
  int burn_in = 0;  // only consulted when estimate == kAverage
  uint64_t seed = 1;
  ConflictPolicy conflict_policy = ConflictPolicy::kUnion;
  EstimateMode estimate = EstimateMode::kFinal;
  int biterm_window = 0;  // 0 = whole tweet

  double resolved_alpha(int num_topics) const {
    return alpha > 0.0 ? alpha : 50.0 / num_topics;
  }
};

// Topics a biterm may be assigned to under the emotion-word constraint.
// Never empty: a pair owned by two different emotions yields both owners.
std::vector<int> allowed_topics(const Biterm& b, const Vocabulary& vocab, int num_topics);

// True when the two words are emotion words of two different emotions.
bool is_conflicting(const Biterm& b, const Vocabulary& vocab);

// Collapsed sampler counts. topic_word_sum[k] caches sum_w topic_word[k][w]
// (always 2 * topic_biterms[k]).
struct SamplerState {
  int num_topics = 0;
  int vocab_size = 0;
  std::vector<int> z;                      // topic per biterm, stored order
  std::vector<long long> topic_biterms;    // n_z, length K
  std::vector<long long> topic_word;       // n_wz, K*V row-major
  std::vector<long long> topic_word_sum;   // per-topic word count total
  int sweep = 0;

  SamplerState() = default;
  SamplerState(int k, int v)
      : num_topics(k),
        vocab_size(v),
        topic_biterms(k, 0),
        topic_word(static_cast<size_t>(k) * v, 0),
        topic_word_sum(k, 0) {}

  long long word_count(int k, int w) const {
    return topic_word[static_cast<size_t>(k) * vocab_size + w];
  }
  void apply(const Biterm& b, int k, int sign);
  long long total_biterms() const;
  bool counts_consistent() const;
};

// Unnormalized Gibbs weight of topic k for biterm b, with b's own assignment
// already removed from the counts:
//   (n_z[k] + alpha) * (n_wz[k][w1] + beta)(n_wz[k][w2] + beta)
//       / (sum_w n_wz[k][w] + V*beta)^2
double conditional_weight(const SamplerState& st, const Biterm& b, int k, double alpha,
                          double beta);

// Length-K weight vector, zero outside `allowed`.
std::vector<double> conditional(const SamplerState& st, const Biterm& b,
                                const std::vector<int>& allowed, double alpha, double beta);

// One full pass over the biterms in stored order. Consumes exactly one
// uniform variate per biterm, so a run is reproducible from the seed alone.
void gibbs_sweep(SamplerState& st, const std::vector<Biterm>& biterms,
                 const std::vector<std::vector<int>>& allowed, double alpha, double beta,
                 Rng& rng);

struct EmotionTopicModel {
  int num_topics = 0;
  int vocab_size = 0;
  std::vector<double> phi;    // K*V row-major, each row sums to 1
  std::vector<double> theta;  // length K, sums to 1
  std::vector<std::string> emotion_names;
  TrainConfig config;
  long long biterm_count = 0;

  double phi_at(int k, int w) const {
    return phi[static_cast<size_t>(k) * vocab_size + w];
  }

  void save_tsv(std::ostream& out) const;
  static EmotionTopicModel load_tsv(std::istream& in, const std::string& origin);
};

// Collapsed Gibbs training with the hard emotion-word constraint enforced at
// sampling time. phi is estimated from the final (or averaged) counts, then
// emotion words are zeroed in foreign topics and rows renormalized.
EmotionTopicModel train(const Corpus& corpus, const Vocabulary& vocab,
                        const EmotionLexicon& lexicon, const TrainConfig& config);

// Post-hoc per-tweet topic distribution: P(k|d) mixes P(k|b) over the tweet's
// biterms; single-token tweets fall back to theta[k]*phi[k][w].
std::vector<double> infer_tweet_topics(const EmotionTopicModel& model, const Tweet& tweet);

}  // namespace emocause
