#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "emocause/corpus.hpp"

namespace emocause {

// Per-topic directed precedence graph over token ids. An edge x -> y counts
// how often y appears within `window` positions before x.
struct TermGraph {
  std::vector<int> nodes;  // sorted ascending token ids
  // per node index: (destination node index, weight), sorted by destination
  std::vector<std::vector<std::pair<int, long long>>> out;
  std::vector<long long> out_weight;  // total outgoing weight per node index

  size_t node_count() const { return nodes.size(); }
  int index_of(int token) const;
  long long total_edge_weight() const;
  long long edge_weight(int from_token, int to_token) const;
};

TermGraph build_term_graph(const std::vector<Tweet>& tweets, int window = 1);
TermGraph build_term_graph(const Corpus& corpus, const std::vector<size_t>& tweet_ids,
                           int window = 1);

}  // namespace emocause
