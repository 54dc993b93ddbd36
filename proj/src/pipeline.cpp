#include "emocause/pipeline.hpp"

#include <chrono>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "emocause/report.hpp"
#include "emocause/text.hpp"

namespace emocause {

namespace fs = std::filesystem;

namespace {

std::string phrase_surface(const std::vector<int>& tokens, const Vocabulary& vocab) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    out += vocab.surface(tokens[i]);
  }
  return out;
}

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  long long restart_ms() {
    const auto now = std::chrono::steady_clock::now();
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now - start_);
    start_ = now;
    return ms.count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

std::string keyphrase_report_tsv(const std::vector<std::string>& emotion_names,
                                 const std::vector<TopicCauses>& causes,
                                 const Vocabulary& vocab) {
  std::ostringstream out;
  out << "# emotion\trank\tphrase\tscore\tfrequency\n";
  for (const TopicCauses& tc : causes) {
    for (size_t i = 0; i < tc.phrases.size(); ++i) {
      const Keyphrase& kp = tc.phrases[i];
      out << emotion_names[tc.topic_id] << '\t' << (i + 1) << '\t'
          << phrase_surface(kp.tokens, vocab) << '\t' << fmt_double(kp.score) << '\t'
          << kp.frequency << '\n';
    }
  }
  return out.str();
}

std::string keyphrase_report_json(const std::vector<std::string>& emotion_names,
                                  const std::vector<TopicCauses>& causes,
                                  const Vocabulary& vocab) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const TopicCauses& tc : causes) {
    nlohmann::ordered_json topic;
    topic["emotion"] = emotion_names[tc.topic_id];
    topic["topic_id"] = tc.topic_id;
    topic["tweets"] = tc.tweet_count;
    nlohmann::ordered_json phrases = nlohmann::ordered_json::array();
    for (size_t i = 0; i < tc.phrases.size(); ++i) {
      const Keyphrase& kp = tc.phrases[i];
      phrases.push_back({{"rank", i + 1},
                         {"phrase", phrase_surface(kp.tokens, vocab)},
                         {"score", kp.score},
                         {"frequency", kp.frequency}});
    }
    topic["keyphrases"] = std::move(phrases);
    j.push_back(std::move(topic));
  }
  return j.dump(2) + "\n";
}

std::string emoticon_report_tsv(const std::vector<std::string>& emotion_names,
                                const std::vector<std::vector<RankedEmoticon>>& lists,
                                const Vocabulary& vocab, double p, double threshold) {
  std::ostringstream out;
  out << "# emotion\trank\temoticon\trelevance\n";
  out << "# p\t" << fmt_double(p) << "\tthreshold\t" << fmt_double(threshold) << '\n';
  for (size_t k = 0; k < lists.size(); ++k) {
    for (size_t i = 0; i < lists[k].size(); ++i) {
      out << emotion_names[k] << '\t' << (i + 1) << '\t' << vocab.surface(lists[k][i].token)
          << '\t' << fmt_double(lists[k][i].relevance) << '\n';
    }
  }
  return out.str();
}

std::string emoticon_report_json(const std::vector<std::string>& emotion_names,
                                 const std::vector<std::vector<RankedEmoticon>>& lists,
                                 const Vocabulary& vocab, double p, double threshold) {
  nlohmann::ordered_json j;
  j["p"] = p;
  j["threshold"] = threshold;
  nlohmann::ordered_json emotions = nlohmann::ordered_json::array();
  for (size_t k = 0; k < lists.size(); ++k) {
    nlohmann::ordered_json entry;
    entry["emotion"] = emotion_names[k];
    nlohmann::ordered_json ranked = nlohmann::ordered_json::array();
    for (size_t i = 0; i < lists[k].size(); ++i) {
      ranked.push_back({{"rank", i + 1},
                        {"emoticon", vocab.surface(lists[k][i].token)},
                        {"relevance", lists[k][i].relevance}});
    }
    entry["emoticons"] = std::move(ranked);
    emotions.push_back(std::move(entry));
  }
  j["emotions"] = std::move(emotions);
  return j.dump(2) + "\n";
}

RunResult run_pipeline(const PipelineConfig& config) {
  RunResult result;
  const auto stage = [](const char* name, auto&& fn) {
    try {
      return fn();
    } catch (const PipelineError&) {
      throw;
    } catch (const std::exception& ex) {
      throw PipelineError(name, ex.what());
    }
  };

  stage("config", [&]() {
    config.validate();
    if (config.corpus_path.empty() || !fs::exists(config.corpus_path)) {
      throw std::runtime_error("corpus file missing: '" + config.corpus_path + "'");
    }
    if (config.lexicon_path.empty() || !fs::exists(config.lexicon_path)) {
      throw std::runtime_error("lexicon file missing: '" + config.lexicon_path + "'");
    }
    if (config.out_dir.empty()) throw std::runtime_error("out_dir not set");
    return 0;
  });

  const auto cleanup = [&result]() {
    for (const fs::path& p : result.written) {
      std::error_code ec;
      fs::remove(p, ec);
    }
  };

  try {
    Timer timer;
    EmotionLexicon lexicon;
    std::vector<std::string> timings;

    stage("corpus", [&]() {
      lexicon = EmotionLexicon::load(config.lexicon_path);
      std::vector<std::vector<std::string>> token_lines;
      for (const std::string& line : read_lines(config.corpus_path)) {
        token_lines.push_back(preprocess(line, config.pre));
      }
      result.build = build_corpus(token_lines, lexicon);
      return 0;
    });
    timings.push_back("corpus_ms\t" + std::to_string(timer.restart_ms()));

    stage("tsbtm", [&]() {
      result.model = train(result.build.corpus, result.build.vocab, lexicon, config.train);
      return 0;
    });
    timings.push_back("tsbtm_ms\t" + std::to_string(timer.restart_ms()));

    stage("ctpr", [&]() {
      result.causes =
          extract_causes(result.model, result.build.corpus, result.build.vocab, config.causes);
      return 0;
    });
    timings.push_back("ctpr_ms\t" + std::to_string(timer.restart_ms()));

    stage("emoticon", [&]() {
      if (config.relevance_source == RelevanceSource::kPhi) {
        result.relevance = relevance_matrix(result.model, result.build.vocab);
      } else {
        std::vector<TopicTermRanking> rankings;
        for (const TopicCauses& tc : result.causes) rankings.push_back(tc.ranking);
        result.relevance = relevance_matrix_from_rankings(rankings, result.build.vocab);
      }
      result.threshold = compute_threshold(result.relevance, config.p);
      result.emoticons = related_emoticons(result.relevance, result.threshold);
      return 0;
    });
    timings.push_back("emoticon_ms\t" + std::to_string(timer.restart_ms()));

    stage("report", [&]() {
      const fs::path dir(config.out_dir);
      fs::create_directories(dir);
      const auto emit = [&](const fs::path& name, const std::string& content) {
        atomic_write(dir / name, content);
        result.written.push_back(dir / name);
      };

      std::ostringstream model_out;
      result.model.save_tsv(model_out);
      emit("model.tsv", model_out.str());

      std::ostringstream vocab_out;
      result.build.vocab.dump_tsv(vocab_out);
      emit("vocab.tsv", vocab_out.str());

      emit("keyphrases.tsv",
           keyphrase_report_tsv(result.model.emotion_names, result.causes, result.build.vocab));
      emit("emoticons.tsv",
           emoticon_report_tsv(result.model.emotion_names, result.emoticons, result.build.vocab,
                               config.p, result.threshold));
      if (config.json) {
        emit("keyphrases.json", keyphrase_report_json(result.model.emotion_names, result.causes,
                                                      result.build.vocab));
        emit("emoticons.json",
             emoticon_report_json(result.model.emotion_names, result.emoticons,
                                  result.build.vocab, config.p, result.threshold));
      }

      std::ostringstream manifest;
      manifest << "# emocause-run-manifest\n";
      for (const auto& [k, v] : config.echo()) manifest << k << '\t' << v << '\n';
      manifest << "lines_read\t" << result.build.lines_in << '\n';
      manifest << "dropped_empty\t" << result.build.dropped_empty << '\n';
      manifest << "dropped_no_emotion\t" << result.build.dropped_no_emotion << '\n';
      manifest << "tweets_kept\t" << result.build.corpus.tweets.size() << '\n';
      manifest << "vocab_size\t" << result.build.vocab.size() << '\n';
      manifest << "emoticon_count\t" << result.build.vocab.emoticon_ids().size() << '\n';
      manifest << "biterm_count\t" << result.model.biterm_count << '\n';
      manifest << "topics\t" << result.model.num_topics << '\n';
      manifest << "threshold\t" << fmt_double(result.threshold) << '\n';
      for (const std::string& t : timings) manifest << t << '\n';
      manifest << "report_ms\t" << timer.restart_ms() << '\n';
      for (const fs::path& p : result.written) manifest << "output\t" << p.string() << '\n';
      atomic_write(dir / "manifest.txt", manifest.str());
      result.written.push_back(dir / "manifest.txt");
      return 0;
    });
  } catch (...) {
    cleanup();
    throw;
  }
  return result;
}

}  // namespace emocause
