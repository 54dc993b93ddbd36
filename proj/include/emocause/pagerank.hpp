#pragma once

#include <vector>

#include "emocause/term_graph.hpp"
#include "emocause/topic_model.hpp"

namespace emocause {

struct TopicTermRanking {
  int topic_id = -1;
  std::vector<int> nodes;      // same order as the graph's node list
  std::vector<double> scores;  // aligned with nodes, sums to 1
  bool converged = false;
  int iterations = 0;

  double score_of(int token) const;
};

// Damped power iteration r <- lambda * M^T r + (1-lambda) * jump over the
// out-normalized edge weights; nodes without out-edges redistribute their
// mass through the jump vector. jump must be strictly positive and sum to 1
// over the graph's nodes. lambda = 0 returns the jump vector exactly.
TopicTermRanking topical_pagerank(const TermGraph& graph, const std::vector<double>& jump,
                                  double lambda, double epsilon, int max_iter);

// Topic-biased teleport distribution: phi[k] over the graph's nodes, floored
// at kappa so every node stays reachable, then normalized.
std::vector<double> topic_jump_vector(const EmotionTopicModel& model, int topic,
                                      const TermGraph& graph, double kappa = 1e-6);

}  // namespace emocause
