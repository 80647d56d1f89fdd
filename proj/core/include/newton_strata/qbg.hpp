#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "newton_strata/weyl.hpp"

namespace newton_strata {

enum class EdgeKind { bruhat, quantum };

struct QbgEdge {
  std::size_t target;
  EdgeKind kind;
  std::size_t root;  // index into CartanData::positive_roots()
};

// Quantum Bruhat graph on W_0. Edges u -> u s_alpha (alpha positive) are
// Bruhat when the length goes up by one and quantum when it drops by
// <2rho, alpha^vee> - 1; quantum edges carry the weight alpha^vee.
//
// Directed all-pairs distances and shortest-path weights are computed
// eagerly. The weight of a shortest path does not depend on the path; the
// breadth-first search checks this on every tie and throws std::logic_error
// if it ever fails.
class QuantumBruhatGraph {
 public:
  explicit QuantumBruhatGraph(const CartanData& cartan);

  const CartanData& cartan() const { return cartan_; }
  std::size_t size() const { return vertices_.size(); }
  std::size_t edge_count() const;

  const WeylElement& vertex(std::size_t index) const { return vertices_[index]; }
  std::size_t index_of(const WeylElement& u) const;
  std::span<const QbgEdge> out_edges(std::size_t index) const { return edges_[index]; }
  Coweight edge_weight(const QbgEdge& edge) const;

  int distance(const WeylElement& u, const WeylElement& v) const;
  Coweight min_path_weight(const WeylElement& u, const WeylElement& v) const;

  /// Graphviz rendering, vertices labelled by reduced words.
  std::string to_dot() const;

 private:
  void bfs_from(std::size_t source);

  CartanData cartan_;
  std::vector<WeylElement> vertices_;
  std::vector<std::vector<QbgEdge>> edges_;
  std::vector<std::uint16_t> dist_;
  std::vector<std::int32_t> weight_;  // size^2 * dim, row-major by (source, target)
};

}  // namespace newton_strata
