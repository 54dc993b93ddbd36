#include "emocause/emoticon.hpp"

#include <algorithm>
#include <stdexcept>

namespace emocause {

RelevanceMatrix relevance_matrix(const EmotionTopicModel& model, const Vocabulary& vocab) {
  RelevanceMatrix R;
  R.num_emotions = model.num_topics;
  R.emoticon_tokens = vocab.emoticon_ids();
  if (R.emoticon_tokens.empty()) {
    throw std::runtime_error("vocabulary contains no emoticons");
  }
  R.values.reserve(static_cast<size_t>(R.num_emotions) * R.emoticon_tokens.size());
  for (int k = 0; k < R.num_emotions; ++k) {
    for (int tok : R.emoticon_tokens) R.values.push_back(model.phi_at(k, tok));
  }
  return R;
}

RelevanceMatrix relevance_matrix_from_rankings(const std::vector<TopicTermRanking>& rankings,
                                               const Vocabulary& vocab) {
  RelevanceMatrix R;
  R.num_emotions = static_cast<int>(rankings.size());
  R.emoticon_tokens = vocab.emoticon_ids();
  if (R.emoticon_tokens.empty()) {
    throw std::runtime_error("vocabulary contains no emoticons");
  }
  R.values.reserve(static_cast<size_t>(R.num_emotions) * R.emoticon_tokens.size());
  for (const TopicTermRanking& r : rankings) {
    for (int tok : R.emoticon_tokens) R.values.push_back(r.score_of(tok));
  }
  return R;
}

double compute_threshold(const RelevanceMatrix& R, double p) {
  if (p <= 0.0) throw std::invalid_argument("threshold factor p must be positive");
  double sum = 0.0;
  for (double v : R.values) sum += v;
  const double cells = static_cast<double>(R.num_emotions) * R.emoticon_count();
  return p * sum / cells;
}

std::vector<std::vector<RankedEmoticon>> related_emoticons(const RelevanceMatrix& R,
                                                           double threshold) {
  std::vector<std::vector<RankedEmoticon>> out(R.num_emotions);
  for (int k = 0; k < R.num_emotions; ++k) {
    auto& list = out[k];
    for (int n = 0; n < R.emoticon_count(); ++n) {
      const double v = R.at(k, n);
      if (v > threshold) list.push_back({R.emoticon_tokens[n], v});
    }
    std::sort(list.begin(), list.end(), [](const RankedEmoticon& a, const RankedEmoticon& b) {
      if (a.relevance != b.relevance) return a.relevance > b.relevance;
      return a.token < b.token;
    });
  }
  return out;
}

}  // namespace emocause
