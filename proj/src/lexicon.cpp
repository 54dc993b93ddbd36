#include "emocause/lexicon.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace emocause {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

EmotionLexicon EmotionLexicon::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open lexicon file: " + path);
  return parse(in, path);
}

EmotionLexicon EmotionLexicon::parse(std::istream& in, const std::string& origin) {
  std::vector<std::pair<std::string, std::vector<std::string>>> raw;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                               ": expected 'name<TAB>word1,word2,...'");
    }
    const std::string name = trim(line.substr(0, tab));
    if (name.empty()) {
      throw std::runtime_error(origin + ":" + std::to_string(lineno) + ": empty emotion name");
    }
    std::vector<std::string> words;
    std::stringstream rest(line.substr(tab + 1));
    std::string w;
    while (std::getline(rest, w, ',')) {
      w = trim(w);
      if (!w.empty()) words.push_back(w);
    }
    if (words.empty()) {
      throw std::runtime_error(origin + ":" + std::to_string(lineno) + ": emotion '" + name +
                               "' has an empty word list");
    }
    raw.emplace_back(name, std::move(words));
  }
  if (raw.empty()) throw std::runtime_error(origin + ": lexicon has no entries");
  return from_entries(raw);
}

EmotionLexicon EmotionLexicon::from_entries(
    const std::vector<std::pair<std::string, std::vector<std::string>>>& entries) {
  EmotionLexicon lex;
  for (const auto& [name, words] : entries) {
    EmotionEntry e;
    e.id = static_cast<int>(lex.entries_.size());
    e.name = name;
    std::unordered_set<std::string> seen_here;
    for (const auto& w : words) {
      auto it = lex.owner_.find(w);
      if (it != lex.owner_.end() && it->second != e.id) {
        throw std::runtime_error("emotion word '" + w + "' listed under both '" +
                                 lex.entries_[it->second].name + "' and '" + name + "'");
      }
      if (seen_here.insert(w).second) {
        e.words.push_back(w);
        lex.owner_.emplace(w, e.id);
      }
    }
    if (e.words.empty()) {
      throw std::runtime_error("emotion '" + name + "' has an empty word list");
    }
    lex.entries_.push_back(std::move(e));
  }
  if (lex.entries_.empty()) throw std::runtime_error("lexicon has no entries");
  return lex;
}

}  // namespace emocause
