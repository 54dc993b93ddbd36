#include "emocause/term_graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace emocause {

int TermGraph::index_of(int token) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), token);
  if (it == nodes.end() || *it != token) return -1;
  return static_cast<int>(it - nodes.begin());
}

long long TermGraph::total_edge_weight() const {
  long long total = 0;
  for (long long w : out_weight) total += w;
  return total;
}

long long TermGraph::edge_weight(int from_token, int to_token) const {
  const int a = index_of(from_token);
  const int b = index_of(to_token);
  if (a < 0 || b < 0) return 0;
  for (const auto& [dst, w] : out[a]) {
    if (dst == b) return w;
  }
  return 0;
}

namespace {

TermGraph finalize(const std::set<int>& nodeset,
                   const std::map<std::pair<int, int>, long long>& edges) {
  TermGraph g;
  g.nodes.assign(nodeset.begin(), nodeset.end());
  g.out.resize(g.nodes.size());
  g.out_weight.assign(g.nodes.size(), 0);
  for (const auto& [xy, w] : edges) {
    const int a = g.index_of(xy.first);
    const int b = g.index_of(xy.second);
    g.out[a].emplace_back(b, w);  // map order keeps each list sorted by dst
    g.out_weight[a] += w;
  }
  return g;
}

void accumulate(const Tweet& tweet, int window, std::set<int>& nodeset,
                std::map<std::pair<int, int>, long long>& edges) {
  const auto& t = tweet.tokens;
  for (size_t i = 0; i < t.size(); ++i) {
    nodeset.insert(t[i]);
    const size_t lo = i >= static_cast<size_t>(window) ? i - window : 0;
    for (size_t j = lo; j < i; ++j) {
      if (t[i] == t[j]) continue;
      ++edges[{t[i], t[j]}];  // t[j] precedes t[i]
    }
  }
}

}  // namespace

TermGraph build_term_graph(const std::vector<Tweet>& tweets, int window) {
  if (window < 1) throw std::invalid_argument("term graph window must be >= 1");
  std::set<int> nodeset;
  std::map<std::pair<int, int>, long long> edges;
  for (const Tweet& t : tweets) accumulate(t, window, nodeset, edges);
  return finalize(nodeset, edges);
}

TermGraph build_term_graph(const Corpus& corpus, const std::vector<size_t>& tweet_ids,
                           int window) {
  if (window < 1) throw std::invalid_argument("term graph window must be >= 1");
  std::set<int> nodeset;
  std::map<std::pair<int, int>, long long> edges;
  for (size_t id : tweet_ids) accumulate(corpus.tweets.at(id), window, nodeset, edges);
  return finalize(nodeset, edges);
}

}  // namespace emocause
