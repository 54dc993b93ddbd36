#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace emocause {

struct SynthParams {
  int num_topics = 3;
  int vocab_size = 60;
  int n_tweets = 2000;
  int tweet_len = 8;
  int seeds_per_topic = 2;      // emotion words per topic
  int emoticons_per_topic = 2;  // first one is the topic's primary emoticon
  uint64_t seed = 11;
};

// Generator output plus everything a test needs to grade a trained model
// against it.
struct SyntheticGroundTruth {
  SynthParams params;
  std::vector<std::string> surfaces;             // generator token table, size V
  std::vector<double> phi_star;                  // K*V row-major, rows sum to 1
  std::vector<double> theta_star;                // K
  std::vector<int> labels;                       // generating topic per tweet
  std::vector<std::vector<std::string>> emotion_words;  // per topic
  std::vector<std::vector<std::string>> emoticons;      // per topic, [0] = primary
  std::vector<std::string> corpus_lines;
  std::vector<std::string> lexicon_lines;

  double phi_star_at(int k, int w) const {
    return phi_star[static_cast<size_t>(k) * surfaces.size() + w];
  }
  int surface_index(const std::string& s) const;
  std::string truth_json() const;
};

// Draws theta* from a Dirichlet and a sparse phi* per topic (a disjoint
// vocabulary block plus the topic's seeded emotion words and emoticons),
// then samples tweets, injecting an emotion word where the draw produced
// none. Deterministic for a given parameter set.
SyntheticGroundTruth synth_corpus(const SynthParams& params);

// Writes corpus.txt, lexicon.txt and truth.json into out_dir.
void write_synth(const SyntheticGroundTruth& truth, const std::string& out_dir);

}  // namespace emocause
