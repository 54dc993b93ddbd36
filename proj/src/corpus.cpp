#include "emocause/corpus.hpp"

#include <stdexcept>

#include "emocause/text.hpp"

namespace emocause {

int Vocabulary::add_or_get(const std::string& surface, const EmotionLexicon& lexicon) {
  auto it = index_.find(surface);
  if (it != index_.end()) return it->second;
  VocabEntry e;
  e.surface = surface;
  e.emotion_of = lexicon.emotion_of(surface);
  e.is_emoticon = e.emotion_of < 0 && is_emoticon_token(surface);
  const int id = static_cast<int>(entries_.size());
  entries_.push_back(std::move(e));
  index_.emplace(surface, id);
  return id;
}

std::vector<int> Vocabulary::emoticon_ids() const {
  std::vector<int> ids;
  for (int i = 0; i < size(); ++i) {
    if (entries_[i].is_emoticon) ids.push_back(i);
  }
  return ids;
}

void Vocabulary::dump_tsv(std::ostream& out) const {
  out << "# id\tsurface\tflags\n";
  for (int i = 0; i < size(); ++i) {
    const VocabEntry& e = entries_[i];
    out << i << '\t' << e.surface << '\t';
    if (e.is_emoticon) {
      out << "emoticon";
    } else if (e.emotion_of >= 0) {
      out << "emotion:" << e.emotion_of;
    } else {
      out << '-';
    }
    out << '\n';
  }
}

size_t Corpus::token_count() const {
  size_t n = 0;
  for (const Tweet& t : tweets) n += t.tokens.size();
  return n;
}

namespace {

bool is_url_token(std::string_view tok, const PreprocessOptions& opts) {
  for (const std::string& p : opts.url_prefixes) {
    if (tok.size() >= p.size() && tok.substr(0, p.size()) == p) return true;
  }
  return false;
}

}  // namespace

std::vector<std::string> preprocess(std::string_view raw_line, const PreprocessOptions& opts) {
  std::vector<std::string> out;
  for (std::string& tok : split_whitespace(raw_line)) {
    if (is_emoticon_token(tok)) {
      out.push_back(std::move(tok));
      continue;
    }
    if (tok[0] == '@') continue;
    if (tok.rfind("//@", 0) == 0) continue;
    if (tok == opts.retweet_tag) continue;
    if (is_url_token(tok, opts)) continue;
    if (!has_text_char(tok)) continue;  // "non-texts"
    out.push_back(std::move(tok));
  }
  return out;
}

CorpusBuild build_corpus(const std::vector<std::vector<std::string>>& token_lines,
                         const EmotionLexicon& lexicon) {
  CorpusBuild b;
  b.lines_in = token_lines.size();
  for (size_t i = 0; i < token_lines.size(); ++i) {
    const auto& toks = token_lines[i];
    if (toks.empty()) {
      ++b.dropped_empty;
      continue;
    }
    bool has_emotion_word = false;
    for (const std::string& t : toks) {
      if (lexicon.emotion_of(t) >= 0) {
        has_emotion_word = true;
        break;
      }
    }
    if (!has_emotion_word) {
      ++b.dropped_no_emotion;
      continue;
    }
    Tweet tw;
    tw.source_line = static_cast<long>(i + 1);
    tw.tokens.reserve(toks.size());
    for (const std::string& t : toks) tw.tokens.push_back(b.vocab.add_or_get(t, lexicon));
    b.corpus.tweets.push_back(std::move(tw));
  }
  if (b.corpus.tweets.empty()) {
    throw std::runtime_error("empty corpus: no tweet contains an emotion word");
  }
  return b;
}

std::vector<Biterm> extract_biterms(const Tweet& tweet, int window) {
  std::vector<Biterm> out;
  const auto& t = tweet.tokens;
  const size_t n = t.size();
  for (size_t i = 0; i + 1 < n; ++i) {
    const size_t jmax = window > 0 ? std::min(n, i + 1 + static_cast<size_t>(window)) : n;
    for (size_t j = i + 1; j < jmax; ++j) {
      if (t[i] == t[j]) continue;
      out.emplace_back(t[i], t[j]);
    }
  }
  return out;
}

}  // namespace emocause
