#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "emocause/causes.hpp"
#include "emocause/config.hpp"
#include "emocause/emoticon.hpp"
#include "emocause/topic_model.hpp"

namespace emocause {

// Error with the pipeline stage that raised it.
class PipelineError : public std::runtime_error {
 public:
  PipelineError(std::string module, const std::string& msg)
      : std::runtime_error("[" + module + "] " + msg), module_(std::move(module)) {}
  const std::string& module() const { return module_; }

 private:
  std::string module_;
};

struct RunResult {
  CorpusBuild build;
  EmotionTopicModel model;
  std::vector<TopicCauses> causes;
  RelevanceMatrix relevance;
  double threshold = 0.0;
  std::vector<std::vector<RankedEmoticon>> emoticons;
  std::vector<std::filesystem::path> written;
};

std::string keyphrase_report_tsv(const std::vector<std::string>& emotion_names,
                                 const std::vector<TopicCauses>& causes,
                                 const Vocabulary& vocab);
std::string keyphrase_report_json(const std::vector<std::string>& emotion_names,
                                  const std::vector<TopicCauses>& causes,
                                  const Vocabulary& vocab);
std::string emoticon_report_tsv(const std::vector<std::string>& emotion_names,
                                const std::vector<std::vector<RankedEmoticon>>& lists,
                                const Vocabulary& vocab, double p, double threshold);
std::string emoticon_report_json(const std::vector<std::string>& emotion_names,
                                 const std::vector<std::vector<RankedEmoticon>>& lists,
                                 const Vocabulary& vocab, double p, double threshold);

// corpus -> topic model -> causes -> emoticons, reports written atomically
// into config.out_dir. On error every output written so far is removed and a
// module-tagged PipelineError is thrown.
RunResult run_pipeline(const PipelineConfig& config);

}  // namespace emocause
