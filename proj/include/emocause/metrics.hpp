#pragma once

#include <istream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "emocause/corpus.hpp"
#include "emocause/lexicon.hpp"

namespace emocause {

enum class GainKind { kLinear, kExponential };

// NDCG with DCG = sum rel_i / log2(i+1); the ideal ordering is the gains
// sorted descending. Returns 0 when the ideal DCG is 0.
double ndcg_at_k(const std::vector<double>& gains_in_rank_order, int k,
                 GainKind gain = GainKind::kLinear);

// AP with denominator |gold|: relevant items never retrieved count against
// the score. Duplicate retrievals of one item are ignored.
double average_precision(const std::vector<std::string>& ranked,
                         const std::set<std::string>& gold);

// Mean AP over the emotions present in `gold`; emotions with no retrieved
// list score 0.
double mean_average_precision(
    const std::map<std::string, std::vector<std::string>>& rankings,
    const std::map<std::string, std::set<std::string>>& gold);

struct AnnotatedCause {
  std::string phrase;
  std::vector<int> scores;  // integer 1..5 per annotator
  double mean_score() const;
};

// Per-emotion annotated cause lists, deduplicated by exact surface match
// (first occurrence wins).
struct AnnotatedCauses {
  std::map<std::string, std::vector<AnnotatedCause>> by_emotion;

  static AnnotatedCauses load(const std::string& path);
  static AnnotatedCauses parse(std::istream& in, const std::string& origin);

  // Top `cutoff` causes per emotion by mean score; everything tied with the
  // boundary score is included.
  std::map<std::string, std::set<std::string>> gold_sets(int cutoff = 10) const;

  // Mean annotator score of a phrase, 0 when unannotated.
  double gain_of(const std::string& emotion, const std::string& phrase) const;
};

struct ScoredTerm {
  int token = -1;
  long long count = 0;
};

// Word-level baseline: how many tweets a term shares with any emotion word
// of emotion k. Emotion words and emoticons are not ranked. Descending
// count, ties toward the lower token id, truncated to top_k.
std::vector<ScoredTerm> cooccurrence_baseline(const Corpus& corpus, const Vocabulary& vocab,
                                              const EmotionLexicon& lexicon, int emotion,
                                              int top_k);

}  // namespace emocause
