#pragma once

#include <istream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace emocause {

struct EmotionEntry {
  int id = -1;
  std::string name;
  std::vector<std::string> words;  // file order, duplicates within one entry collapsed
};

// The supervision signal: every emotion word belongs to exactly one emotion.
// Ids are dense 0..K-1 in file order.
class EmotionLexicon {
 public:
  static EmotionLexicon load(const std::string& path);
  // `origin` tags error messages (file name or a test label).
  static EmotionLexicon parse(std::istream& in, const std::string& origin);
  static EmotionLexicon from_entries(
      const std::vector<std::pair<std::string, std::vector<std::string>>>& entries);

  int emotion_count() const { return static_cast<int>(entries_.size()); }
  const std::vector<EmotionEntry>& entries() const { return entries_; }
  const EmotionEntry& entry(int id) const { return entries_.at(id); }
  const std::string& name(int id) const { return entries_.at(id).name; }

  // Owning emotion id, or -1 when the surface is not an emotion word.
  int emotion_of(const std::string& word) const {
    auto it = owner_.find(word);
    return it == owner_.end() ? -1 : it->second;
  }

  size_t word_count() const { return owner_.size(); }

 private:
  std::vector<EmotionEntry> entries_;
  std::unordered_map<std::string, int> owner_;
};

}  // namespace emocause
