#include "emocause/topic_model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "emocause/report.hpp"

namespace emocause {

std::vector<int> allowed_topics(const Biterm& b, const Vocabulary& vocab, int num_topics) {
  const int e1 = vocab.emotion_of(b.w1);
  const int e2 = vocab.emotion_of(b.w2);
  if (e1 < 0 && e2 < 0) {
    std::vector<int> all(num_topics);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  if (e1 >= 0 && e2 >= 0) {
    if (e1 == e2) return {e1};
    return {std::min(e1, e2), std::max(e1, e2)};
  }
  return {e1 >= 0 ? e1 : e2};
}

bool is_conflicting(const Biterm& b, const Vocabulary& vocab) {
  const int e1 = vocab.emotion_of(b.w1);
  const int e2 = vocab.emotion_of(b.w2);
  return e1 >= 0 && e2 >= 0 && e1 != e2;
}

void SamplerState::apply(const Biterm& b, int k, int sign) {
  topic_biterms[k] += sign;
  topic_word[static_cast<size_t>(k) * vocab_size + b.w1] += sign;
  topic_word[static_cast<size_t>(k) * vocab_size + b.w2] += sign;
  topic_word_sum[k] += 2 * sign;
}

long long SamplerState::total_biterms() const {
  long long n = 0;
  for (long long c : topic_biterms) n += c;
  return n;
}

bool SamplerState::counts_consistent() const {
  for (int k = 0; k < num_topics; ++k) {
    if (topic_biterms[k] < 0 || topic_word_sum[k] != 2 * topic_biterms[k]) return false;
    long long sum = 0;
    for (int w = 0; w < vocab_size; ++w) {
      const long long c = word_count(k, w);
      if (c < 0) return false;
      sum += c;
    }
    if (sum != topic_word_sum[k]) return false;
  }
  return static_cast<size_t>(total_biterms()) == z.size();
}

double conditional_weight(const SamplerState& st, const Biterm& b, int k, double alpha,
                          double beta) {
  const double denom = static_cast<double>(st.topic_word_sum[k]) + st.vocab_size * beta;
  return (static_cast<double>(st.topic_biterms[k]) + alpha) *
         (static_cast<double>(st.word_count(k, b.w1)) + beta) *
         (static_cast<double>(st.word_count(k, b.w2)) + beta) / (denom * denom);
}

std::vector<double> conditional(const SamplerState& st, const Biterm& b,
                                const std::vector<int>& allowed, double alpha, double beta) {
  std::vector<double> w(st.num_topics, 0.0);
  for (int k : allowed) w[k] = conditional_weight(st, b, k, alpha, beta);
  return w;
}

void gibbs_sweep(SamplerState& st, const std::vector<Biterm>& biterms,
                 const std::vector<std::vector<int>>& allowed, double alpha, double beta,
                 Rng& rng) {
  std::vector<double> w(st.num_topics, 0.0);
  for (size_t i = 0; i < biterms.size(); ++i) {
    const Biterm& b = biterms[i];
    const std::vector<int>& ok = allowed[i];
    const double u = rng.next_double();
    if (ok.size() == 1) {
      // pinned; the draw above keeps the one-variate-per-biterm convention
      continue;
    }
    st.apply(b, st.z[i], -1);
    double total = 0.0;
    for (int k : ok) {
      w[k] = conditional_weight(st, b, k, alpha, beta);
      total += w[k];
    }
    int pick = ok.back();
    double r = u * total;
    for (int k : ok) {
      if (r < w[k]) {
        pick = k;
        break;
      }
      r -= w[k];
    }
    st.z[i] = pick;
    st.apply(b, pick, +1);
  }
  ++st.sweep;
}

namespace {

void estimate_rows(const SamplerState& st, double alpha, double beta, long long n_biterms,
                   std::vector<double>& phi_acc, std::vector<double>& theta_acc) {
  const int K = st.num_topics;
  const int V = st.vocab_size;
  for (int k = 0; k < K; ++k) {
    const double denom = static_cast<double>(st.topic_word_sum[k]) + V * beta;
    for (int w = 0; w < V; ++w) {
      phi_acc[static_cast<size_t>(k) * V + w] +=
          (static_cast<double>(st.word_count(k, w)) + beta) / denom;
    }
    theta_acc[k] += (static_cast<double>(st.topic_biterms[k]) + alpha) /
                    (static_cast<double>(n_biterms) + K * alpha);
  }
}

void mask_and_renormalize(std::vector<double>& phi, int K, int V, const Vocabulary& vocab) {
  for (int k = 0; k < K; ++k) {
    double* row = phi.data() + static_cast<size_t>(k) * V;
    for (int w = 0; w < V; ++w) {
      const int owner = vocab.emotion_of(w);
      if (owner >= 0 && owner != k) row[w] = 0.0;
    }
    double sum = 0.0;
    for (int w = 0; w < V; ++w) sum += row[w];
    if (sum <= 0.0) throw std::runtime_error("phi row lost all mass after masking");
    for (int w = 0; w < V; ++w) row[w] /= sum;
  }
}

}  // namespace

EmotionTopicModel train(const Corpus& corpus, const Vocabulary& vocab,
                        const EmotionLexicon& lexicon, const TrainConfig& config) {
  const int K = lexicon.emotion_count();
  const int V = vocab.size();
  const double alpha = config.resolved_alpha(K);
  const double beta = config.beta;

  std::vector<Biterm> biterms;
  for (const Tweet& t : corpus.tweets) {
    for (const Biterm& b : extract_biterms(t, config.biterm_window)) {
      if (config.conflict_policy == ConflictPolicy::kDrop && is_conflicting(b, vocab)) continue;
      biterms.push_back(b);
    }
  }
  if (biterms.empty()) throw std::runtime_error("no biterms: corpus has no multi-word tweets");

  std::vector<std::vector<int>> allowed(biterms.size());
  for (size_t i = 0; i < biterms.size(); ++i) {
    allowed[i] = allowed_topics(biterms[i], vocab, K);
  }

  Rng rng(config.seed);
  SamplerState st(K, V);
  st.z.resize(biterms.size());
  for (size_t i = 0; i < biterms.size(); ++i) {
    const auto& ok = allowed[i];
    st.z[i] = ok[rng.next_index(ok.size())];
    st.apply(biterms[i], st.z[i], +1);
  }

  const long long n_biterms = static_cast<long long>(biterms.size());
  std::vector<double> phi_acc(static_cast<size_t>(K) * V, 0.0);
  std::vector<double> theta_acc(K, 0.0);
  long long samples = 0;

  for (int s = 0; s < config.sweeps; ++s) {
    gibbs_sweep(st, biterms, allowed, alpha, beta, rng);
    if (config.estimate == EstimateMode::kAverage && s >= config.burn_in) {
      estimate_rows(st, alpha, beta, n_biterms, phi_acc, theta_acc);
      ++samples;
    }
  }
  if (config.estimate == EstimateMode::kFinal) {
    estimate_rows(st, alpha, beta, n_biterms, phi_acc, theta_acc);
    samples = 1;
  }
  if (samples == 0) {
    throw std::runtime_error("estimate=average needs burn_in < sweeps");
  }
  for (double& v : phi_acc) v /= static_cast<double>(samples);
  for (double& v : theta_acc) v /= static_cast<double>(samples);

  mask_and_renormalize(phi_acc, K, V, vocab);

  EmotionTopicModel model;
  model.num_topics = K;
  model.vocab_size = V;
  model.phi = std::move(phi_acc);
  model.theta = std::move(theta_acc);
  for (int k = 0; k < K; ++k) model.emotion_names.push_back(lexicon.name(k));
  model.config = config;
  model.config.alpha = alpha;
  model.biterm_count = n_biterms;
  return model;
}

std::vector<double> infer_tweet_topics(const EmotionTopicModel& model, const Tweet& tweet) {
  if (tweet.tokens.empty()) throw std::invalid_argument("cannot infer topics of an empty tweet");
  const int K = model.num_topics;
  std::vector<double> p(K, 0.0);
  const std::vector<Biterm> biterms = extract_biterms(tweet, model.config.biterm_window);
  if (biterms.empty()) {
    // single token, or all pairs were same-word: mix the one-word conditional
    for (int tok : tweet.tokens) {
      double s = 0.0;
      std::vector<double> q(K);
      for (int k = 0; k < K; ++k) {
        q[k] = model.theta[k] * model.phi_at(k, tok);
        s += q[k];
      }
      for (int k = 0; k < K; ++k) p[k] += q[k] / s;
    }
  } else {
    size_t usable = 0;
    std::vector<double> q(K);
    for (const Biterm& b : biterms) {
      double s = 0.0;
      for (int k = 0; k < K; ++k) {
        q[k] = model.theta[k] * model.phi_at(k, b.w1) * model.phi_at(k, b.w2);
        s += q[k];
      }
      // a pair of emotion words from two different emotions has zero mass
      // under every topic; it carries no usable signal
      if (s <= 0.0) continue;
      for (int k = 0; k < K; ++k) p[k] += q[k] / s;
      ++usable;
    }
    if (usable == 0) p = model.theta;
  }
  double total = 0.0;
  for (double v : p) total += v;
  for (double& v : p) v /= total;
  return p;
}

void EmotionTopicModel::save_tsv(std::ostream& out) const {
  out << "# emocause-model\t1\n";
  out << "K\t" << num_topics << '\n';
  out << "V\t" << vocab_size << '\n';
  out << "B\t" << biterm_count << '\n';
  out << "alpha\t" << fmt_double(config.alpha) << '\n';
  out << "beta\t" << fmt_double(config.beta) << '\n';
  out << "sweeps\t" << config.sweeps << '\n';
  out << "burn_in\t" << config.burn_in << '\n';
  out << "seed\t" << config.seed << '\n';
  out << "conflict_policy\t"
      << (config.conflict_policy == ConflictPolicy::kUnion ? "union" : "drop") << '\n';
  out << "estimate\t" << (config.estimate == EstimateMode::kFinal ? "final" : "average") << '\n';
  out << "biterm_window\t" << config.biterm_window << '\n';
  for (int k = 0; k < num_topics; ++k) {
    out << "emotion\t" << k << '\t' << emotion_names[k] << '\n';
  }
  out << "theta";
  for (int k = 0; k < num_topics; ++k) out << '\t' << fmt_double(theta[k]);
  out << '\n';
  for (int k = 0; k < num_topics; ++k) {
    out << "phi\t" << k;
    for (int w = 0; w < vocab_size; ++w) out << '\t' << fmt_double(phi_at(k, w));
    out << '\n';
  }
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    const size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      parts.push_back(line.substr(start));
      break;
    }
    parts.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return parts;
}

double parse_double(const std::string& s, const std::string& origin) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::runtime_error(origin + ": bad number '" + s + "'");
  }
  return v;
}

}  // namespace

EmotionTopicModel EmotionTopicModel::load_tsv(std::istream& in, const std::string& origin) {
  EmotionTopicModel m;
  std::string line;
  if (!std::getline(in, line) || line.rfind("# emocause-model", 0) != 0) {
    throw std::runtime_error(origin + ": not a model file");
  }
  int phi_rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto parts = split_tabs(line);
    const std::string& key = parts[0];
    if (key == "K") {
      m.num_topics = std::stoi(parts.at(1));
    } else if (key == "V") {
      m.vocab_size = std::stoi(parts.at(1));
    } else if (key == "B") {
      m.biterm_count = std::stoll(parts.at(1));
    } else if (key == "alpha") {
      m.config.alpha = parse_double(parts.at(1), origin);
    } else if (key == "beta") {
      m.config.beta = parse_double(parts.at(1), origin);
    } else if (key == "sweeps") {
      m.config.sweeps = std::stoi(parts.at(1));
    } else if (key == "burn_in") {
      m.config.burn_in = std::stoi(parts.at(1));
    } else if (key == "seed") {
      m.config.seed = std::stoull(parts.at(1));
    } else if (key == "conflict_policy") {
      m.config.conflict_policy =
          parts.at(1) == "drop" ? ConflictPolicy::kDrop : ConflictPolicy::kUnion;
    } else if (key == "estimate") {
      m.config.estimate = parts.at(1) == "average" ? EstimateMode::kAverage : EstimateMode::kFinal;
    } else if (key == "biterm_window") {
      m.config.biterm_window = std::stoi(parts.at(1));
    } else if (key == "emotion") {
      m.emotion_names.push_back(parts.at(2));
    } else if (key == "theta") {
      if (static_cast<int>(parts.size()) != m.num_topics + 1) {
        throw std::runtime_error(origin + ": theta row has wrong arity");
      }
      for (int k = 0; k < m.num_topics; ++k) m.theta.push_back(parse_double(parts[k + 1], origin));
    } else if (key == "phi") {
      if (static_cast<int>(parts.size()) != m.vocab_size + 2) {
        throw std::runtime_error(origin + ": phi row has wrong arity");
      }
      for (int w = 0; w < m.vocab_size; ++w) m.phi.push_back(parse_double(parts[w + 2], origin));
      ++phi_rows;
    } else {
      throw std::runtime_error(origin + ": unknown model row '" + key + "'");
    }
  }
  if (m.num_topics <= 0 || m.vocab_size <= 0 || phi_rows != m.num_topics ||
      static_cast<int>(m.theta.size()) != m.num_topics ||
      static_cast<int>(m.emotion_names.size()) != m.num_topics) {
    throw std::runtime_error(origin + ": incomplete model file");
  }
  return m;
}

}  // namespace emocause
