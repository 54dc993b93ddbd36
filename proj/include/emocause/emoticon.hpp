#pragma once

#include <vector>

#include "emocause/pagerank.hpp"
#include "emocause/topic_model.hpp"

namespace emocause {

// K x N emotion-emoticon relevance values; columns are emoticon token ids in
// ascending order.
struct RelevanceMatrix {
  int num_emotions = 0;
  std::vector<int> emoticon_tokens;
  std::vector<double> values;  // K*N row-major

  int emoticon_count() const { return static_cast<int>(emoticon_tokens.size()); }
  double at(int k, int n) const {
    return values[static_cast<size_t>(k) * emoticon_tokens.size() + n];
  }
};

enum class RelevanceSource { kPhi, kPagerank };

// R(e_k, i_n) read off the topic-word distribution. Throws when the
// vocabulary holds no emoticons.
RelevanceMatrix relevance_matrix(const EmotionTopicModel& model, const Vocabulary& vocab);

// Alternative reading: per-topic PageRank scores (0 for emoticons absent
// from a topic's graph).
RelevanceMatrix relevance_matrix_from_rankings(const std::vector<TopicTermRanking>& rankings,
                                               const Vocabulary& vocab);

// threshold = p * grand mean of R.
double compute_threshold(const RelevanceMatrix& R, double p);

struct RankedEmoticon {
  int token = -1;
  double relevance = 0.0;
};

// Per emotion: emoticons strictly above the threshold, relevance descending,
// ties toward the lower token id. An emoticon may appear under several
// emotions.
std::vector<std::vector<RankedEmoticon>> related_emoticons(const RelevanceMatrix& R,
                                                           double threshold);

}  // namespace emocause
