#include "newton_strata/qbg.hpp"

#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "newton_strata/errors.hpp"

namespace newton_strata {

namespace {
constexpr std::uint16_t kUnreached = std::numeric_limits<std::uint16_t>::max();
}

QuantumBruhatGraph::QuantumBruhatGraph(const CartanData& cartan) : cartan_(cartan) {
  vertices_ = all_elements(cartan_.dim());
  const std::size_t count = vertices_.size();
  std::vector<int> lengths(count);
  for (std::size_t k = 0; k < count; ++k) lengths[k] = vertices_[k].length();

  edges_.resize(count);
  const auto& roots = cartan_.positive_roots();
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t r = 0; r < roots.size(); ++r) {
      const WeylElement target = vertices_[k] * roots[r].reflection;
      const std::size_t t = target.index();
      const auto drop = pairing(cartan_.two_rho(), roots[r].coroot) - 1;
      if (lengths[t] == lengths[k] + 1) {
        edges_[k].push_back({t, EdgeKind::bruhat, r});
      } else if (lengths[t] == lengths[k] - drop) {
        edges_[k].push_back({t, EdgeKind::quantum, r});
      }
    }
  }

  dist_.assign(count * count, kUnreached);
  weight_.assign(count * count * static_cast<std::size_t>(cartan_.dim()), 0);
  for (std::size_t source = 0; source < count; ++source) bfs_from(source);
}

void QuantumBruhatGraph::bfs_from(std::size_t source) {
  const std::size_t count = vertices_.size();
  const auto dim = static_cast<std::size_t>(cartan_.dim());
  auto* dist = &dist_[source * count];
  auto* weight = &weight_[source * count * dim];
  const auto& roots = cartan_.positive_roots();

  dist[source] = 0;
  std::deque<std::size_t> queue{source};
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (const auto& edge : edges_[u]) {
      const auto* from = weight + u * dim;
      auto* to = weight + edge.target * dim;
      const Coweight* coroot = edge.kind == EdgeKind::quantum ? &roots[edge.root].coroot : nullptr;
      if (dist[edge.target] == kUnreached) {
        dist[edge.target] = static_cast<std::uint16_t>(dist[u] + 1);
        for (std::size_t c = 0; c < dim; ++c) to[c] = from[c] + (coroot ? static_cast<std::int32_t>((*coroot)[c]) : 0);
        queue.push_back(edge.target);
      } else if (dist[edge.target] == dist[u] + 1) {
        for (std::size_t c = 0; c < dim; ++c) {
          if (to[c] != from[c] + (coroot ? static_cast<std::int32_t>((*coroot)[c]) : 0)) {
            throw std::logic_error("shortest paths with different weights in the quantum Bruhat graph");
          }
        }
      }
    }
  }
  for (std::size_t k = 0; k < count; ++k) {
    if (dist[k] == kUnreached) throw std::logic_error("quantum Bruhat graph is not strongly connected");
  }
}

std::size_t QuantumBruhatGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& out : edges_) total += out.size();
  return total;
}

std::size_t QuantumBruhatGraph::index_of(const WeylElement& u) const {
  if (u.dim() != cartan_.dim()) throw Error(ErrorCode::rank_mismatch, "element is not a vertex of this graph");
  return u.index();
}

Coweight QuantumBruhatGraph::edge_weight(const QbgEdge& edge) const {
  if (edge.kind == EdgeKind::bruhat) return Coweight(static_cast<std::size_t>(cartan_.dim()), 0);
  return cartan_.positive_roots()[edge.root].coroot;
}

int QuantumBruhatGraph::distance(const WeylElement& u, const WeylElement& v) const {
  return dist_[index_of(u) * vertices_.size() + index_of(v)];
}

Coweight QuantumBruhatGraph::min_path_weight(const WeylElement& u, const WeylElement& v) const {
  const auto dim = static_cast<std::size_t>(cartan_.dim());
  const auto* w = &weight_[(index_of(u) * vertices_.size() + index_of(v)) * dim];
  return Coweight(w, w + dim);
}

std::string QuantumBruhatGraph::to_dot() const {
  std::ostringstream out;
  out << "digraph qbg {\n";
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    out << "  v" << k << " [label=\"" << format_word(vertices_[k].reduced_word()) << "\"];\n";
  }
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    for (const auto& edge : edges_[k]) {
      out << "  v" << k << " -> v" << edge.target;
      if (edge.kind == EdgeKind::quantum) {
        out << " [style=dashed, label=\"" << format_coweight(cartan_.positive_roots()[edge.root].coroot) << "\"]";
      }
      out << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace newton_strata
