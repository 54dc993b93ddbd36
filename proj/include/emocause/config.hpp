#pragma once

#include <string>
#include <vector>

#include "emocause/causes.hpp"
#include "emocause/corpus.hpp"
#include "emocause/emoticon.hpp"
#include "emocause/metrics.hpp"
#include "emocause/topic_model.hpp"

namespace emocause {

// Every key of the flat key=value config file, overridable one-to-one by a
// CLI flag of the same name (underscores become dashes on the command line).
struct PipelineConfig {
  std::string corpus_path;
  std::string lexicon_path;
  std::string out_dir;
  TrainConfig train;
  CauseConfig causes;
  PreprocessOptions pre;
  double p = 0.6;
  RelevanceSource relevance_source = RelevanceSource::kPhi;
  GainKind gain = GainKind::kLinear;
  std::vector<int> ndcg_k = {5, 10};
  bool soft_assign = false;  // reserved; only false is supported
  bool json = false;

  // Reads key=value lines ('#' comments allowed); unknown keys are rejected.
  void apply_file(const std::string& path);
  void apply_kv(const std::string& key, const std::string& value);
  void validate() const;

  // Echo of every key, used for the run manifest.
  std::vector<std::pair<std::string, std::string>> echo() const;
};

}  // namespace emocause
