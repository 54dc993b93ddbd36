#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "emocause/lexicon.hpp"

namespace emocause {

struct VocabEntry {
  std::string surface;
  bool is_emoticon = false;
  int emotion_of = -1;  // owning emotion id, -1 when none
};

// Dense token ids over the surviving corpus. Lexicon membership wins over the
// emoticon flag, so the two are never set together.
class Vocabulary {
 public:
  int add_or_get(const std::string& surface, const EmotionLexicon& lexicon);

  int id_of(const std::string& surface) const {
    auto it = index_.find(surface);
    return it == index_.end() ? -1 : it->second;
  }
  const VocabEntry& entry(int id) const { return entries_.at(id); }
  const std::string& surface(int id) const { return entries_.at(id).surface; }
  bool is_emoticon(int id) const { return entries_.at(id).is_emoticon; }
  int emotion_of(int id) const { return entries_.at(id).emotion_of; }
  int size() const { return static_cast<int>(entries_.size()); }

  // Ascending token ids of all emoticon entries.
  std::vector<int> emoticon_ids() const;

  // Debug dump: id<TAB>surface<TAB>flags, flags one of "-", "emoticon",
  // "emotion:<id>".
  void dump_tsv(std::ostream& out) const;

 private:
  std::vector<VocabEntry> entries_;
  std::unordered_map<std::string, int> index_;
};

struct Tweet {
  std::vector<int> tokens;
  long source_line = 0;  // 1-based line in the input file
};

// Unordered word pair, stored with w1 <= w2. Same-word pairs are never
// constructed (extract_biterms drops them).
struct Biterm {
  int w1;
  int w2;
  Biterm(int a, int b) : w1(a < b ? a : b), w2(a < b ? b : a) {}
  bool operator==(const Biterm& o) const = default;
};

struct Corpus {
  std::vector<Tweet> tweets;
  size_t token_count() const;
};

struct PreprocessOptions {
  std::string retweet_tag = "\xe8\xbd\xac\xe5\x8f\x91\xe5\xbe\xae\xe5\x8d\x9a";  // 转发微博
  std::vector<std::string> url_prefixes = {"http://", "https://", "www.", "t.cn/"};
};

// Removal rules for one pre-tokenized line: @mentions, URLs, forwarding
// markers, and tokens with no letter/CJK content are dropped; bracket
// emoticons pass through verbatim.
std::vector<std::string> preprocess(std::string_view raw_line,
                                    const PreprocessOptions& opts = {});

struct CorpusBuild {
  Corpus corpus;
  Vocabulary vocab;
  size_t lines_in = 0;
  size_t dropped_empty = 0;
  size_t dropped_no_emotion = 0;
};

// Keeps only tweets holding at least one emotion word; the vocabulary covers
// surviving tweets only. Throws when nothing survives.
CorpusBuild build_corpus(const std::vector<std::vector<std::string>>& token_lines,
                         const EmotionLexicon& lexicon);

// All unordered position pairs within `window` of each other (0 = whole
// tweet). Pairs of the same word are dropped; multiplicity is kept.
std::vector<Biterm> extract_biterms(const Tweet& tweet, int window = 0);

}  // namespace emocause
