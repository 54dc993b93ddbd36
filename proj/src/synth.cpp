#include "emocause/synth.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <stdexcept>

#include <json.hpp>

#include "emocause/report.hpp"
#include "emocause/rng.hpp"
#include "emocause/text.hpp"

namespace emocause {

namespace {

double normal_sample(Rng& rng) {
  // Box-Muller; u1 nudged off zero so the log stays finite
  const double u1 = rng.next_double();
  const double u2 = rng.next_double();
  return std::sqrt(-2.0 * std::log(u1 + 1e-300)) * std::cos(2.0 * M_PI * u2);
}

// Marsaglia-Tsang for shape >= 1, boosted for shape < 1.
double gamma_sample(Rng& rng, double shape) {
  if (shape < 1.0) {
    const double u = rng.next_double();
    return gamma_sample(rng, shape + 1.0) * std::pow(u + 1e-300, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  while (true) {
    double x = normal_sample(rng);
    double v = 1.0 + c * x;
    if (v <= 0.0) continue;
    v = v * v * v;
    const double u = rng.next_double();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u + 1e-300) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

std::vector<double> dirichlet_sample(Rng& rng, int n, double concentration) {
  std::vector<double> out(n);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    out[i] = gamma_sample(rng, concentration);
    sum += out[i];
  }
  for (double& v : out) v /= sum;
  return out;
}

int categorical_sample(Rng& rng, const std::vector<double>& probs,
                       const std::vector<int>& support) {
  double u = rng.next_double();
  for (int idx : support) {
    if (u < probs[idx]) return idx;
    u -= probs[idx];
  }
  return support.back();
}

}  // namespace

int SyntheticGroundTruth::surface_index(const std::string& s) const {
  auto it = std::find(surfaces.begin(), surfaces.end(), s);
  return it == surfaces.end() ? -1 : static_cast<int>(it - surfaces.begin());
}

SyntheticGroundTruth synth_corpus(const SynthParams& p) {
  const int K = p.num_topics;
  const int s = p.seeds_per_topic;
  const int e = p.emoticons_per_topic;
  if (K < 1 || s < 1 || e < 1 || p.tweet_len < 2) {
    throw std::invalid_argument("synth: K, seeds_per_topic, emoticons_per_topic must be >= 1 "
                                "and tweet_len >= 2");
  }
  if (p.vocab_size < K * s + 10 || p.vocab_size < K * (s + e + 2)) {
    throw std::invalid_argument("synth: vocabulary too small for the requested topics");
  }
  if (p.n_tweets < K) throw std::invalid_argument("synth: need at least K tweets");

  SyntheticGroundTruth t;
  t.params = p;
  Rng rng(p.seed);

  // token table: per-topic emotion words and emoticons, then plain words
  // split into per-topic blocks
  std::vector<std::vector<int>> topic_support(K);
  t.emotion_words.resize(K);
  t.emoticons.resize(K);
  for (int k = 0; k < K; ++k) {
    for (int i = 0; i < s; ++i) {
      t.emotion_words[k].push_back("ew" + std::to_string(k) + "_" + std::to_string(i));
      topic_support[k].push_back(static_cast<int>(t.surfaces.size()));
      t.surfaces.push_back(t.emotion_words[k].back());
    }
  }
  for (int k = 0; k < K; ++k) {
    for (int i = 0; i < e; ++i) {
      t.emoticons[k].push_back("[emo" + std::to_string(k) + "_" + std::to_string(i) + "]");
      topic_support[k].push_back(static_cast<int>(t.surfaces.size()));
      t.surfaces.push_back(t.emoticons[k].back());
    }
  }
  const int plain_total = p.vocab_size - K * (s + e);
  std::vector<int> block_size(K, plain_total / K);
  for (int k = 0; k < plain_total % K; ++k) ++block_size[k];
  for (int k = 0; k < K; ++k) {
    for (int i = 0; i < block_size[k]; ++i) {
      topic_support[k].push_back(static_cast<int>(t.surfaces.size()));
      t.surfaces.push_back("w" + std::to_string(t.surfaces.size()));
    }
  }

  const int V = static_cast<int>(t.surfaces.size());
  t.phi_star.assign(static_cast<size_t>(K) * V, 0.0);
  for (int k = 0; k < K; ++k) {
    double* row = t.phi_star.data() + static_cast<size_t>(k) * V;
    const double emotion_mass = 0.20;
    const double primary_emoticon_mass = 0.10;
    const double extra_emoticon_mass = 0.03;
    for (int i = 0; i < s; ++i) row[topic_support[k][i]] = emotion_mass / s;
    row[topic_support[k][s]] = primary_emoticon_mass;
    for (int i = 1; i < e; ++i) row[topic_support[k][s + i]] = extra_emoticon_mass;
    const double block_mass =
        1.0 - emotion_mass - primary_emoticon_mass - extra_emoticon_mass * (e - 1);
    // decaying profile with jitter keeps the top block words well separated
    std::vector<double> w(block_size[k]);
    double wsum = 0.0;
    for (int i = 0; i < block_size[k]; ++i) {
      w[i] = std::pow(i + 1.0, -0.85) * (0.9 + 0.2 * rng.next_double());
      wsum += w[i];
    }
    for (int i = 0; i < block_size[k]; ++i) {
      row[topic_support[k][s + e + i]] = block_mass * w[i] / wsum;
    }
  }

  t.theta_star = dirichlet_sample(rng, K, 8.0);

  std::vector<int> topic_ids(K);
  for (int k = 0; k < K; ++k) topic_ids[k] = k;

  for (int n = 0; n < p.n_tweets; ++n) {
    double u = rng.next_double();
    int topic = K - 1;
    for (int k = 0; k < K; ++k) {
      if (u < t.theta_star[k]) {
        topic = k;
        break;
      }
      u -= t.theta_star[k];
    }
    std::vector<double> row(t.phi_star.begin() + static_cast<size_t>(topic) * V,
                            t.phi_star.begin() + static_cast<size_t>(topic + 1) * V);
    std::vector<int> toks(p.tweet_len);
    bool has_emotion_word = false;
    for (int i = 0; i < p.tweet_len; ++i) {
      toks[i] = categorical_sample(rng, row, topic_support[topic]);
      if (toks[i] < K * s && toks[i] / s == topic) has_emotion_word = true;
    }
    if (!has_emotion_word) {
      const size_t pos = rng.next_index(toks.size());
      toks[pos] = topic_support[topic][rng.next_index(s)];
    }
    std::string line;
    for (size_t i = 0; i < toks.size(); ++i) {
      if (i) line += ' ';
      line += t.surfaces[toks[i]];
    }
    t.corpus_lines.push_back(std::move(line));
    t.labels.push_back(topic);
  }

  for (int k = 0; k < K; ++k) {
    std::string line = "emotion" + std::to_string(k) + "\t";
    for (int i = 0; i < s; ++i) {
      if (i) line += ',';
      line += t.emotion_words[k][i];
    }
    t.lexicon_lines.push_back(std::move(line));
  }
  return t;
}

std::string SyntheticGroundTruth::truth_json() const {
  nlohmann::ordered_json j;
  j["k"] = params.num_topics;
  j["v"] = static_cast<int>(surfaces.size());
  j["n_tweets"] = params.n_tweets;
  j["tweet_len"] = params.tweet_len;
  j["seed"] = params.seed;
  j["theta_star"] = theta_star;
  j["surfaces"] = surfaces;
  nlohmann::ordered_json phi = nlohmann::ordered_json::array();
  const int V = static_cast<int>(surfaces.size());
  for (int k = 0; k < params.num_topics; ++k) {
    phi.push_back(std::vector<double>(phi_star.begin() + static_cast<size_t>(k) * V,
                                      phi_star.begin() + static_cast<size_t>(k + 1) * V));
  }
  j["phi_star"] = std::move(phi);
  j["labels"] = labels;
  j["emotion_words"] = emotion_words;
  j["emoticons"] = emoticons;
  return j.dump(2) + "\n";
}

void write_synth(const SyntheticGroundTruth& truth, const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  std::string corpus;
  for (const std::string& line : truth.corpus_lines) corpus += line + "\n";
  std::string lexicon;
  for (const std::string& line : truth.lexicon_lines) lexicon += line + "\n";
  atomic_write(fs::path(out_dir) / "corpus.txt", corpus);
  atomic_write(fs::path(out_dir) / "lexicon.txt", lexicon);
  atomic_write(fs::path(out_dir) / "truth.json", truth.truth_json());
}

}  // namespace emocause
