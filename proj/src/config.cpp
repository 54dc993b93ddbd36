#include "emocause/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "emocause/report.hpp"

namespace emocause {

namespace {

std::string trim(const std::string& s) {
  const size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value,
                            const std::string& expected) {
  throw std::runtime_error("config key '" + key + "': bad value '" + value + "' (expected " +
                           expected + ")");
}

long long parse_int(const std::string& key, const std::string& value) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size()) bad_value(key, value, "integer");
  return v;
}

double parse_real(const std::string& key, const std::string& value) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size()) bad_value(key, value, "number");
  return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  bad_value(key, value, "true|false");
}

}  // namespace

void PipelineConfig::apply_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key = value");
    }
    apply_kv(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

void PipelineConfig::apply_kv(const std::string& key, const std::string& value) {
  if (key == "corpus") {
    corpus_path = value;
  } else if (key == "lexicon") {
    lexicon_path = value;
  } else if (key == "out_dir") {
    out_dir = value;
  } else if (key == "seed") {
    train.seed = static_cast<uint64_t>(parse_int(key, value));
  } else if (key == "alpha") {
    train.alpha = parse_real(key, value);
  } else if (key == "beta") {
    train.beta = parse_real(key, value);
  } else if (key == "sweeps") {
    train.sweeps = static_cast<int>(parse_int(key, value));
  } else if (key == "burn_in") {
    train.burn_in = static_cast<int>(parse_int(key, value));
  } else if (key == "conflict_policy") {
    if (value == "union") {
      train.conflict_policy = ConflictPolicy::kUnion;
    } else if (value == "drop") {
      train.conflict_policy = ConflictPolicy::kDrop;
    } else {
      bad_value(key, value, "union|drop");
    }
  } else if (key == "estimate") {
    if (value == "final") {
      train.estimate = EstimateMode::kFinal;
    } else if (value == "average") {
      train.estimate = EstimateMode::kAverage;
    } else {
      bad_value(key, value, "final|average");
    }
  } else if (key == "biterm_window") {
    train.biterm_window = static_cast<int>(parse_int(key, value));
  } else if (key == "retweet_tag") {
    pre.retweet_tag = value;
  } else if (key == "window") {
    causes.graph_window = static_cast<int>(parse_int(key, value));
  } else if (key == "lambda") {
    causes.lambda = parse_real(key, value);
  } else if (key == "epsilon") {
    causes.epsilon = parse_real(key, value);
  } else if (key == "max_iter") {
    causes.max_iter = static_cast<int>(parse_int(key, value));
  } else if (key == "top_n") {
    causes.top_n = static_cast<int>(parse_int(key, value));
  } else if (key == "max_len") {
    causes.max_len = static_cast<int>(parse_int(key, value));
  } else if (key == "min_support") {
    causes.min_support = parse_int(key, value);
  } else if (key == "top_k") {
    causes.top_k = static_cast<int>(parse_int(key, value));
  } else if (key == "kappa") {
    causes.kappa = parse_real(key, value);
  } else if (key == "threads") {
    causes.threads = static_cast<int>(parse_int(key, value));
  } else if (key == "soft_assign") {
    soft_assign = parse_bool(key, value);
  } else if (key == "p") {
    p = parse_real(key, value);
  } else if (key == "relevance_source") {
    if (value == "phi") {
      relevance_source = RelevanceSource::kPhi;
    } else if (value == "pagerank") {
      relevance_source = RelevanceSource::kPagerank;
    } else {
      bad_value(key, value, "phi|pagerank");
    }
  } else if (key == "gain") {
    if (value == "linear") {
      gain = GainKind::kLinear;
    } else if (value == "exponential") {
      gain = GainKind::kExponential;
    } else {
      bad_value(key, value, "linear|exponential");
    }
  } else if (key == "ndcg_k") {
    ndcg_k.clear();
    std::stringstream ss(value);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      const long long k = parse_int(key, trim(tok));
      if (k < 1) bad_value(key, value, "comma-separated positive integers");
      ndcg_k.push_back(static_cast<int>(k));
    }
    if (ndcg_k.empty()) bad_value(key, value, "comma-separated positive integers");
  } else if (key == "json") {
    json = parse_bool(key, value);
  } else {
    throw std::runtime_error("unknown config key '" + key + "'");
  }
}

void PipelineConfig::validate() const {
  const auto fail = [](const std::string& msg) {
    throw std::runtime_error("config: " + msg);
  };
  if (train.alpha < 0.0) fail("alpha must be >= 0 (0 = auto 50/K)");
  if (train.beta <= 0.0) fail("beta must be > 0");
  if (train.sweeps < 1) fail("sweeps must be >= 1");
  if (train.burn_in < 0) fail("burn_in must be >= 0");
  if (train.estimate == EstimateMode::kAverage && train.burn_in >= train.sweeps) {
    fail("estimate=average needs burn_in < sweeps");
  }
  if (train.biterm_window < 0) fail("biterm_window must be >= 0 (0 = whole tweet)");
  if (causes.graph_window < 1) fail("window must be >= 1");
  if (causes.lambda < 0.0 || causes.lambda >= 1.0) fail("lambda must be in [0,1)");
  if (causes.epsilon <= 0.0) fail("epsilon must be > 0");
  if (causes.max_iter < 1) fail("max_iter must be >= 1");
  if (causes.top_n < 1) fail("top_n must be >= 1");
  if (causes.max_len < 2) fail("max_len must be >= 2");
  if (causes.min_support < 0) fail("min_support must be >= 0 (0 = auto)");
  if (causes.top_k < 1) fail("top_k must be >= 1");
  if (causes.kappa <= 0.0) fail("kappa must be > 0");
  if (causes.threads < 1) fail("threads must be >= 1");
  if (p <= 0.0) fail("p must be > 0");
  if (soft_assign) fail("soft_assign is reserved and must stay false");
}

std::vector<std::pair<std::string, std::string>> PipelineConfig::echo() const {
  std::vector<std::pair<std::string, std::string>> kv;
  kv.emplace_back("corpus", corpus_path);
  kv.emplace_back("lexicon", lexicon_path);
  kv.emplace_back("out_dir", out_dir);
  kv.emplace_back("seed", std::to_string(train.seed));
  kv.emplace_back("alpha", fmt_double(train.alpha));
  kv.emplace_back("beta", fmt_double(train.beta));
  kv.emplace_back("sweeps", std::to_string(train.sweeps));
  kv.emplace_back("burn_in", std::to_string(train.burn_in));
  kv.emplace_back("conflict_policy",
                  train.conflict_policy == ConflictPolicy::kUnion ? "union" : "drop");
  kv.emplace_back("estimate", train.estimate == EstimateMode::kFinal ? "final" : "average");
  kv.emplace_back("biterm_window", std::to_string(train.biterm_window));
  kv.emplace_back("retweet_tag", pre.retweet_tag);
  kv.emplace_back("window", std::to_string(causes.graph_window));
  kv.emplace_back("lambda", fmt_double(causes.lambda));
  kv.emplace_back("epsilon", fmt_double(causes.epsilon));
  kv.emplace_back("max_iter", std::to_string(causes.max_iter));
  kv.emplace_back("top_n", std::to_string(causes.top_n));
  kv.emplace_back("max_len", std::to_string(causes.max_len));
  kv.emplace_back("min_support", std::to_string(causes.min_support));
  kv.emplace_back("top_k", std::to_string(causes.top_k));
  kv.emplace_back("kappa", fmt_double(causes.kappa));
  kv.emplace_back("threads", std::to_string(causes.threads));
  kv.emplace_back("soft_assign", soft_assign ? "true" : "false");
  kv.emplace_back("p", fmt_double(p));
  kv.emplace_back("relevance_source",
                  relevance_source == RelevanceSource::kPhi ? "phi" : "pagerank");
  kv.emplace_back("gain", gain == GainKind::kLinear ? "linear" : "exponential");
  std::string ks;
  for (size_t i = 0; i < ndcg_k.size(); ++i) {
    if (i) ks += ',';
    ks += std::to_string(ndcg_k[i]);
  }
  kv.emplace_back("ndcg_k", ks);
  kv.emplace_back("json", json ? "true" : "false");
  return kv;
}

}  // namespace emocause
