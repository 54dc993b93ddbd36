#include "emocause/pagerank.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace emocause {

double TopicTermRanking::score_of(int token) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), token);
  if (it == nodes.end() || *it != token) return 0.0;
  return scores[it - nodes.begin()];
}

TopicTermRanking topical_pagerank(const TermGraph& graph, const std::vector<double>& jump,
                                  double lambda, double epsilon, int max_iter) {
  if (lambda < 0.0 || lambda >= 1.0) throw std::invalid_argument("damping must be in [0,1)");
  if (epsilon <= 0.0) throw std::invalid_argument("tolerance must be positive");
  if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");

  TopicTermRanking r;
  r.nodes = graph.nodes;
  const size_t n = graph.node_count();
  if (n == 0) {
    r.converged = true;
    return r;
  }
  if (jump.size() != n) throw std::invalid_argument("jump vector size mismatch");
  double jsum = 0.0;
  for (double v : jump) {
    if (v <= 0.0) throw std::invalid_argument("jump vector must be strictly positive");
    jsum += v;
  }
  if (std::abs(jsum - 1.0) > 1e-9) throw std::invalid_argument("jump vector must sum to 1");

  std::vector<double> cur(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n);
  for (int it = 1; it <= max_iter; ++it) {
    double dangling = 0.0;
    for (size_t x = 0; x < n; ++x) {
      if (graph.out_weight[x] == 0) dangling += cur[x];
    }
    const double teleport = (1.0 - lambda);
    for (size_t y = 0; y < n; ++y) next[y] = teleport * jump[y] + lambda * dangling * jump[y];
    for (size_t x = 0; x < n; ++x) {
      if (graph.out_weight[x] == 0) continue;
      const double share = lambda * cur[x] / static_cast<double>(graph.out_weight[x]);
      for (const auto& [y, w] : graph.out[x]) next[y] += share * static_cast<double>(w);
    }
    double residual = 0.0;
    for (size_t y = 0; y < n; ++y) residual = std::max(residual, std::abs(next[y] - cur[y]));
    cur.swap(next);
    r.iterations = it;
    if (residual < epsilon) {
      r.converged = true;
      break;
    }
  }
  r.scores = std::move(cur);
  return r;
}

std::vector<double> topic_jump_vector(const EmotionTopicModel& model, int topic,
                                      const TermGraph& graph, double kappa) {
  if (kappa <= 0.0) throw std::invalid_argument("kappa must be positive");
  std::vector<double> jump(graph.node_count());
  double sum = 0.0;
  for (size_t i = 0; i < graph.node_count(); ++i) {
    jump[i] = std::max(model.phi_at(topic, graph.nodes[i]), kappa);
    sum += jump[i];
  }
  for (double& v : jump) v /= sum;
  return jump;
}

}  // namespace emocause
