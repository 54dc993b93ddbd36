// Command-line front end: every pipeline stage is independently invocable,
// plus a synthetic-corpus generator and the full run.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "emocause/config.hpp"
#include "emocause/metrics.hpp"
#include "emocause/pipeline.hpp"
#include "emocause/report.hpp"
#include "emocause/synth.hpp"
#include "emocause/text.hpp"

namespace fs = std::filesystem;
using namespace emocause;

namespace {

struct Overrides {
  std::vector<std::pair<std::string, std::string>> kv;
};

std::string dashed(const std::string& key) {
  std::string flag = "--" + key;
  std::replace(flag.begin(), flag.end(), '_', '-');
  return flag;
}

void register_keys(CLI::App* cmd, Overrides& ov, const std::vector<std::string>& keys) {
  for (const std::string& key : keys) {
    cmd->add_option_function<std::string>(
        dashed(key),
        [&ov, key](const std::string& v) { ov.kv.emplace_back(key, v); },
        "config key '" + key + "'");
  }
}

void apply_overrides(PipelineConfig& cfg, const Overrides& ov) {
  for (const auto& [k, v] : ov.kv) cfg.apply_kv(k, v);
}

CorpusBuild load_and_build(const PipelineConfig& cfg, EmotionLexicon& lexicon) {
  lexicon = EmotionLexicon::load(cfg.lexicon_path);
  std::vector<std::vector<std::string>> token_lines;
  for (const std::string& line : read_lines(cfg.corpus_path)) {
    token_lines.push_back(preprocess(line, cfg.pre));
  }
  return build_corpus(token_lines, lexicon);
}

EmotionTopicModel load_model_checked(const std::string& path, const CorpusBuild& build,
                                     const EmotionLexicon& lexicon) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open model file: " + path);
  EmotionTopicModel model = EmotionTopicModel::load_tsv(in, path);
  if (model.vocab_size != build.vocab.size()) {
    throw std::runtime_error("model vocabulary size " + std::to_string(model.vocab_size) +
                             " does not match the rebuilt corpus (" +
                             std::to_string(build.vocab.size()) +
                             "); train and causes must see the same corpus and lexicon");
  }
  if (model.num_topics != lexicon.emotion_count()) {
    throw std::runtime_error("model topic count does not match the lexicon");
  }
  return model;
}

void write_train_outputs(const PipelineConfig& cfg, const CorpusBuild& build,
                         const EmotionTopicModel& model) {
  fs::create_directories(cfg.out_dir);
  std::ostringstream model_out;
  model.save_tsv(model_out);
  atomic_write(fs::path(cfg.out_dir) / "model.tsv", model_out.str());
  std::ostringstream vocab_out;
  build.vocab.dump_tsv(vocab_out);
  atomic_write(fs::path(cfg.out_dir) / "vocab.tsv", vocab_out.str());
  std::ostringstream manifest;
  manifest << "# emocause-train-manifest\n";
  for (const auto& [k, v] : cfg.echo()) manifest << k << '\t' << v << '\n';
  manifest << "tweets_kept\t" << build.corpus.tweets.size() << '\n';
  manifest << "vocab_size\t" << build.vocab.size() << '\n';
  manifest << "biterm_count\t" << model.biterm_count << '\n';
  atomic_write(fs::path(cfg.out_dir) / "manifest.txt", manifest.str());
}

// Keyphrase extraction over co-occurrence counts instead of a trained model:
// the ranking scores are normalized tweet-level co-occurrence counts.
std::vector<TopicCauses> cooccurrence_causes(const CorpusBuild& build,
                                             const EmotionLexicon& lexicon,
                                             const CauseConfig& cfg) {
  std::vector<TopicCauses> out(lexicon.emotion_count());
  for (int k = 0; k < lexicon.emotion_count(); ++k) {
    TopicCauses tc;
    tc.topic_id = k;
    for (const Tweet& t : build.corpus.tweets) {
      for (int tok : t.tokens) {
        if (build.vocab.emotion_of(tok) == k) {
          ++tc.tweet_count;
          break;
        }
      }
    }
    const auto scored =
        cooccurrence_baseline(build.corpus, build.vocab, lexicon, k, cfg.top_n);
    if (scored.empty()) {
      out[k] = std::move(tc);
      continue;
    }
    TopicTermRanking ranking;
    ranking.topic_id = k;
    std::vector<std::pair<int, long long>> by_token(scored.size());
    for (size_t i = 0; i < scored.size(); ++i) by_token[i] = {scored[i].token, scored[i].count};
    std::sort(by_token.begin(), by_token.end());
    double total = 0.0;
    for (const auto& [tok, c] : by_token) total += static_cast<double>(c);
    for (const auto& [tok, c] : by_token) {
      ranking.nodes.push_back(tok);
      ranking.scores.push_back(static_cast<double>(c) / total);
    }
    ranking.converged = true;
    tc.ranking = std::move(ranking);
    for (const ScoredTerm& st : scored) tc.terms.push_back(st.token);
    CauseConfig resolved = cfg;
    if (resolved.min_support < 1) resolved.min_support = auto_min_support(tc.tweet_count);
    tc.phrases = generate_keyphrases(build.corpus, tc.terms, tc.ranking, resolved);
    out[k] = std::move(tc);
  }
  return out;
}

std::map<std::string, std::vector<std::string>> parse_keyphrase_report(
    const std::string& path) {
  std::map<std::string, std::vector<std::string>> by_emotion;
  for (const std::string& line : read_lines(path)) {
    if (line.empty() || line[0] == '#') continue;
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
    if (parts.size() < 3) throw std::runtime_error(path + ": malformed report line");
    by_emotion[parts[0]].push_back(parts[2]);
  }
  return by_emotion;
}

int run_eval(const std::string& annotations_path,
             const std::vector<std::string>& report_specs, const PipelineConfig& cfg) {
  const AnnotatedCauses ann = AnnotatedCauses::load(annotations_path);
  const auto gold = ann.gold_sets(10);

  std::ostringstream out;
  out << "# method\temotion";
  for (int k : cfg.ndcg_k) out << "\tndcg@" << k;
  out << "\tap\n";

  for (const std::string& spec : report_specs) {
    const size_t eq = spec.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("--report expects name=path, got '" + spec + "'");
    }
    const std::string method = spec.substr(0, eq);
    const auto rankings = parse_keyphrase_report(spec.substr(eq + 1));

    std::vector<double> ndcg_sums(cfg.ndcg_k.size(), 0.0);
    for (const auto& [emotion, gold_set] : gold) {
      std::vector<std::string> ranked;
      if (auto it = rankings.find(emotion); it != rankings.end()) ranked = it->second;
      out << method << '\t' << emotion;
      for (size_t i = 0; i < cfg.ndcg_k.size(); ++i) {
        double v = 0.0;
        if (!ranked.empty()) {
          std::vector<double> gains;
          for (const std::string& phrase : ranked) gains.push_back(ann.gain_of(emotion, phrase));
          v = ndcg_at_k(gains, cfg.ndcg_k[i], cfg.gain);
        }
        ndcg_sums[i] += v;
        out << '\t' << fmt_double(v);
      }
      out << '\t' << fmt_double(average_precision(ranked, gold_set)) << '\n';
    }

    std::map<std::string, std::vector<std::string>> rank_map(rankings.begin(), rankings.end());
    out << method << "\t__overall__";
    for (size_t i = 0; i < cfg.ndcg_k.size(); ++i) {
      out << '\t' << fmt_double(ndcg_sums[i] / static_cast<double>(gold.size()));
    }
    out << '\t' << fmt_double(mean_average_precision(rank_map, gold)) << '\n';
  }

  fs::create_directories(cfg.out_dir);
  atomic_write(fs::path(cfg.out_dir) / "metrics.tsv", out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"emocause: emotion-cause and emoticon-affinity mining for short-text corpora"};
  app.require_subcommand(1);

  const std::vector<std::string> kTrainKeys = {"corpus",   "lexicon",        "seed",
                                               "alpha",    "beta",           "sweeps",
                                               "burn_in",  "conflict_policy", "estimate",
                                               "biterm_window", "retweet_tag"};
  const std::vector<std::string> kCauseKeys = {"window",   "lambda", "epsilon", "max_iter",
                                               "top_n",    "max_len", "min_support", "top_k",
                                               "kappa",    "threads", "json"};
  const std::vector<std::string> kAllKeys = {
      "alpha",       "beta",     "sweeps",   "burn_in", "conflict_policy",
      "estimate",    "biterm_window", "retweet_tag", "window", "lambda",
      "epsilon",     "max_iter", "top_n",    "max_len", "min_support",
      "top_k",       "kappa",    "threads",  "soft_assign", "p",
      "relevance_source", "gain", "ndcg_k",  "json",    "corpus",
      "lexicon"};

  // synth
  auto* synth = app.add_subcommand("synth", "generate a synthetic corpus with ground truth");
  SynthParams sp;
  std::string synth_out;
  synth->add_option("--k", sp.num_topics, "number of emotions/topics");
  synth->add_option("--v", sp.vocab_size, "vocabulary size");
  synth->add_option("--tweets", sp.n_tweets, "number of tweets");
  synth->add_option("--tweet-len", sp.tweet_len, "tokens per tweet");
  synth->add_option("--seeds-per-topic", sp.seeds_per_topic, "emotion words per topic");
  synth->add_option("--emoticons-per-topic", sp.emoticons_per_topic, "emoticons per topic");
  synth->add_option("--seed", sp.seed, "generator seed");
  synth->add_option("--out-dir", synth_out, "output directory")->required();

  // preprocess
  auto* prep = app.add_subcommand("preprocess", "apply the removal rules to raw lines");
  std::string prep_in, prep_out, prep_tag;
  prep->add_option("--input", prep_in, "raw tweet file, one per line")->required();
  prep->add_option("--output", prep_out, "cleaned token lines")->required();
  prep->add_option("--retweet-tag", prep_tag, "forwarding tag token to drop");

  // train
  auto* train_cmd = app.add_subcommand("train", "train the emotion topic model");
  Overrides train_ov;
  std::string train_out;
  register_keys(train_cmd, train_ov, kTrainKeys);
  train_cmd->add_option("--out-dir", train_out, "output directory")->required();

  // causes
  auto* causes_cmd = app.add_subcommand("causes", "rank terms and emit keyphrase causes");
  Overrides causes_ov;
  std::string causes_out, causes_model, causes_method = "model";
  register_keys(causes_cmd, causes_ov, kTrainKeys);
  register_keys(causes_cmd, causes_ov, kCauseKeys);
  causes_cmd->add_option("--out-dir", causes_out, "output directory")->required();
  causes_cmd->add_option("--model", causes_model, "model.tsv from a train run");
  causes_cmd->add_option("--method", causes_method, "model|cooccurrence")
      ->check(CLI::IsMember({"model", "cooccurrence"}));

  // emoticons
  auto* emo_cmd = app.add_subcommand("emoticons", "emoticon-emotion relation report");
  Overrides emo_ov;
  std::string emo_out, emo_model;
  register_keys(emo_cmd, emo_ov, kTrainKeys);
  register_keys(emo_cmd, emo_ov, kCauseKeys);
  register_keys(emo_cmd, emo_ov, {"p", "relevance_source"});
  emo_cmd->add_option("--out-dir", emo_out, "output directory")->required();
  emo_cmd->add_option("--model", emo_model, "model.tsv from a train run")->required();

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "score ranked causes against annotations");
  Overrides eval_ov;
  std::string eval_out, eval_ann;
  std::vector<std::string> eval_reports;
  register_keys(eval_cmd, eval_ov, {"gain", "ndcg_k"});
  eval_cmd->add_option("--annotations", eval_ann, "emotion<TAB>phrase<TAB>s1,s2,... file")
      ->required();
  eval_cmd->add_option("--report", eval_reports, "name=path of a keyphrase report")
      ->required();
  eval_cmd->add_option("--out-dir", eval_out, "output directory")->required();

  // run
  auto* run_cmd = app.add_subcommand("run", "full pipeline: corpus -> model -> causes -> emoticons");
  Overrides run_ov;
  std::string run_config, run_out, run_seed;
  register_keys(run_cmd, run_ov, kAllKeys);
  run_cmd->add_option("--config", run_config, "key=value config file")->required();
  run_cmd->add_option("--seed", run_seed, "sampler seed")->required();
  run_cmd->add_option("--out-dir", run_out, "output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*synth) {
      write_synth(synth_corpus(sp), synth_out);
      std::cout << "wrote corpus.txt, lexicon.txt, truth.json to " << synth_out << "\n";
      return 0;
    }
    if (*prep) {
      PreprocessOptions opts;
      if (!prep_tag.empty()) opts.retweet_tag = prep_tag;
      std::string out;
      for (const std::string& line : read_lines(prep_in)) {
        const auto toks = preprocess(line, opts);
        if (!toks.empty()) out += join_tokens(toks) + "\n";
      }
      atomic_write(prep_out, out);
      return 0;
    }
    if (*train_cmd) {
      PipelineConfig cfg;
      apply_overrides(cfg, train_ov);
      cfg.out_dir = train_out;
      cfg.validate();
      EmotionLexicon lexicon;
      const CorpusBuild build = load_and_build(cfg, lexicon);
      const EmotionTopicModel model = train(build.corpus, build.vocab, lexicon, cfg.train);
      write_train_outputs(cfg, build, model);
      std::cout << "wrote model.tsv, vocab.tsv, manifest.txt to " << cfg.out_dir << "\n";
      return 0;
    }
    if (*causes_cmd) {
      PipelineConfig cfg;
      apply_overrides(cfg, causes_ov);
      cfg.out_dir = causes_out;
      cfg.validate();
      EmotionLexicon lexicon;
      const CorpusBuild build = load_and_build(cfg, lexicon);
      std::vector<TopicCauses> causes;
      std::vector<std::string> names;
      for (const auto& e : lexicon.entries()) names.push_back(e.name);
      if (causes_method == "model") {
        if (causes_model.empty()) throw std::runtime_error("--model is required for --method model");
        const EmotionTopicModel model = load_model_checked(causes_model, build, lexicon);
        causes = extract_causes(model, build.corpus, build.vocab, cfg.causes);
      } else {
        causes = cooccurrence_causes(build, lexicon, cfg.causes);
      }
      fs::create_directories(cfg.out_dir);
      atomic_write(fs::path(cfg.out_dir) / "keyphrases.tsv",
                   keyphrase_report_tsv(names, causes, build.vocab));
      if (cfg.json) {
        atomic_write(fs::path(cfg.out_dir) / "keyphrases.json",
                     keyphrase_report_json(names, causes, build.vocab));
      }
      std::cout << "wrote keyphrases.tsv to " << cfg.out_dir << "\n";
      return 0;
    }
    if (*emo_cmd) {
      PipelineConfig cfg;
      apply_overrides(cfg, emo_ov);
      cfg.out_dir = emo_out;
      cfg.validate();
      EmotionLexicon lexicon;
      const CorpusBuild build = load_and_build(cfg, lexicon);
      const EmotionTopicModel model = load_model_checked(emo_model, build, lexicon);
      RelevanceMatrix R;
      if (cfg.relevance_source == RelevanceSource::kPhi) {
        R = relevance_matrix(model, build.vocab);
      } else {
        std::vector<TopicTermRanking> rankings;
        for (const TopicCauses& tc : extract_causes(model, build.corpus, build.vocab, cfg.causes)) {
          rankings.push_back(tc.ranking);
        }
        R = relevance_matrix_from_rankings(rankings, build.vocab);
      }
      const double threshold = compute_threshold(R, cfg.p);
      const auto lists = related_emoticons(R, threshold);
      fs::create_directories(cfg.out_dir);
      atomic_write(fs::path(cfg.out_dir) / "emoticons.tsv",
                   emoticon_report_tsv(model.emotion_names, lists, build.vocab, cfg.p, threshold));
      if (cfg.json) {
        atomic_write(fs::path(cfg.out_dir) / "emoticons.json",
                     emoticon_report_json(model.emotion_names, lists, build.vocab, cfg.p,
                                          threshold));
      }
      std::cout << "wrote emoticons.tsv to " << cfg.out_dir << "\n";
      return 0;
    }
    if (*eval_cmd) {
      PipelineConfig cfg;
      apply_overrides(cfg, eval_ov);
      cfg.out_dir = eval_out;
      run_eval(eval_ann, eval_reports, cfg);
      std::cout << "wrote metrics.tsv to " << cfg.out_dir << "\n";
      return 0;
    }
    if (*run_cmd) {
      PipelineConfig cfg;
      cfg.apply_file(run_config);
      apply_overrides(cfg, run_ov);
      cfg.apply_kv("seed", run_seed);
      cfg.out_dir = run_out;
      const RunResult result = run_pipeline(cfg);
      std::cout << "pipeline done: " << result.written.size() << " outputs in " << cfg.out_dir
                << "\n";
      return 0;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
