#include "emocause/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace emocause {

namespace {

double dcg(const std::vector<double>& gains, int k, GainKind gain) {
  const size_t limit = std::min(gains.size(), static_cast<size_t>(k));
  double sum = 0.0;
  for (size_t i = 0; i < limit; ++i) {
    const double g = gain == GainKind::kExponential ? std::exp2(gains[i]) - 1.0 : gains[i];
    sum += g / std::log2(static_cast<double>(i) + 2.0);
  }
  return sum;
}

}  // namespace

double ndcg_at_k(const std::vector<double>& gains_in_rank_order, int k, GainKind gain) {
  if (k < 1) throw std::invalid_argument("ndcg needs k >= 1");
  if (gains_in_rank_order.empty()) throw std::invalid_argument("ndcg needs a non-empty list");
  std::vector<double> ideal = gains_in_rank_order;
  std::sort(ideal.begin(), ideal.end(), std::greater<>());
  const double idcg = dcg(ideal, k, gain);
  if (idcg == 0.0) return 0.0;
  return dcg(gains_in_rank_order, k, gain) / idcg;
}

double average_precision(const std::vector<std::string>& ranked,
                         const std::set<std::string>& gold) {
  if (gold.empty()) return 0.0;
  double sum = 0.0;
  size_t hits = 0;
  std::unordered_set<std::string> seen;
  for (size_t i = 0; i < ranked.size(); ++i) {
    if (!gold.count(ranked[i])) continue;
    if (!seen.insert(ranked[i]).second) continue;
    ++hits;
    sum += static_cast<double>(hits) / static_cast<double>(i + 1);
  }
  return sum / static_cast<double>(gold.size());
}

double mean_average_precision(
    const std::map<std::string, std::vector<std::string>>& rankings,
    const std::map<std::string, std::set<std::string>>& gold) {
  if (gold.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& [emotion, gold_set] : gold) {
    auto it = rankings.find(emotion);
    if (it != rankings.end()) sum += average_precision(it->second, gold_set);
  }
  return sum / static_cast<double>(gold.size());
}

double AnnotatedCause::mean_score() const {
  double sum = 0.0;
  for (int s : scores) sum += s;
  return sum / static_cast<double>(scores.size());
}

AnnotatedCauses AnnotatedCauses::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open annotation file: " + path);
  return parse(in, path);
}

AnnotatedCauses AnnotatedCauses::parse(std::istream& in, const std::string& origin) {
  AnnotatedCauses ann;
  std::string line;
  size_t lineno = 0;
  std::map<std::string, std::unordered_set<std::string>> seen;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const size_t t1 = line.find('\t');
    const size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
    if (t2 == std::string::npos) {
      throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                               ": expected 'emotion<TAB>phrase<TAB>s1,s2,...'");
    }
    const std::string emotion = line.substr(0, t1);
    const std::string phrase = line.substr(t1 + 1, t2 - t1 - 1);
    if (emotion.empty() || phrase.empty()) {
      throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                               ": empty emotion or phrase");
    }
    AnnotatedCause cause;
    cause.phrase = phrase;
    std::stringstream rest(line.substr(t2 + 1));
    std::string tok;
    while (std::getline(rest, tok, ',')) {
      size_t used = 0;
      int s = 0;
      try {
        s = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || s < 1 || s > 5) {
        throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                                 ": annotator scores must be integers in 1..5, got '" + tok +
                                 "'");
      }
      cause.scores.push_back(s);
    }
    if (cause.scores.empty()) {
      throw std::runtime_error(origin + ":" + std::to_string(lineno) + ": no annotator scores");
    }
    if (!seen[emotion].insert(phrase).second) continue;  // exact-surface dedup, first wins
    ann.by_emotion[emotion].push_back(std::move(cause));
  }
  if (ann.by_emotion.empty()) throw std::runtime_error(origin + ": no annotations");
  return ann;
}

std::map<std::string, std::set<std::string>> AnnotatedCauses::gold_sets(int cutoff) const {
  if (cutoff < 1) throw std::invalid_argument("gold cutoff must be >= 1");
  std::map<std::string, std::set<std::string>> gold;
  for (const auto& [emotion, causes] : by_emotion) {
    std::vector<const AnnotatedCause*> sorted;
    sorted.reserve(causes.size());
    for (const auto& c : causes) sorted.push_back(&c);
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto* a, const auto* b) {
      return a->mean_score() > b->mean_score();
    });
    auto& set = gold[emotion];
    if (sorted.size() <= static_cast<size_t>(cutoff)) {
      for (const auto* c : sorted) set.insert(c->phrase);
      continue;
    }
    const double boundary = sorted[cutoff - 1]->mean_score();
    for (const auto* c : sorted) {
      if (c->mean_score() >= boundary) set.insert(c->phrase);
    }
  }
  return gold;
}

double AnnotatedCauses::gain_of(const std::string& emotion, const std::string& phrase) const {
  auto it = by_emotion.find(emotion);
  if (it == by_emotion.end()) return 0.0;
  for (const auto& c : it->second) {
    if (c.phrase == phrase) return c.mean_score();
  }
  return 0.0;
}

std::vector<ScoredTerm> cooccurrence_baseline(const Corpus& corpus, const Vocabulary& vocab,
                                              const EmotionLexicon& lexicon, int emotion,
                                              int top_k) {
  if (emotion < 0 || emotion >= lexicon.emotion_count()) {
    throw std::invalid_argument("emotion id out of range");
  }
  if (top_k < 1) throw std::invalid_argument("top_k must be >= 1");
  std::vector<long long> counts(vocab.size(), 0);
  std::unordered_set<int> in_tweet;
  for (const Tweet& tweet : corpus.tweets) {
    bool has_emotion = false;
    for (int tok : tweet.tokens) {
      if (vocab.emotion_of(tok) == emotion) {
        has_emotion = true;
        break;
      }
    }
    if (!has_emotion) continue;
    in_tweet.clear();
    for (int tok : tweet.tokens) {
      if (vocab.emotion_of(tok) >= 0 || vocab.is_emoticon(tok)) continue;
      if (in_tweet.insert(tok).second) ++counts[tok];
    }
  }
  std::vector<ScoredTerm> out;
  for (int tok = 0; tok < vocab.size(); ++tok) {
    if (counts[tok] > 0) out.push_back({tok, counts[tok]});
  }
  std::sort(out.begin(), out.end(), [](const ScoredTerm& a, const ScoredTerm& b) {
    if (a.count != b.count) return a.count > b.count;
    return a.token < b.token;
  });
  if (out.size() > static_cast<size_t>(top_k)) out.resize(top_k);
  return out;
}

}  // namespace emocause
