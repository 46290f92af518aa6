#pragma once

#include <algorithm>
#include <queue>
#include <vector>

#include "rigsep/conformal.hpp"
#include "rigsep/graph.hpp"

namespace rigsep::detail {

// Reusable buffers for searches restricted to a vertex subset.  Only the
// entries touched by a call are reset, so repeated calls on small subsets
// cost time proportional to the subset rather than to n.
class Scratch {
 public:
  explicit Scratch(int n) : mark_(static_cast<std::size_t>(n), 0), seen_(static_cast<std::size_t>(n), 0),
                            dist_(static_cast<std::size_t>(n), kInfinity) {}

  // Distances from c inside G[h]; valid for vertices of h only.
  const std::vector<double>& distances(const Graph& g, const ConformalWeight& w, const VertexSet& h, Vertex c) {
    for (Vertex v : h) {
      mark_[v] = 1;
      dist_[v] = kInfinity;
    }
    struct Item {
      double d;
      Vertex v;
      bool operator>(const Item& o) const { return d > o.d || (d == o.d && v > o.v); }
    };
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist_[c] = 0.0;
    heap.push({0.0, c});
    while (!heap.empty()) {
      const auto [d, u] = heap.top();
      heap.pop();
      if (d > dist_[u] || seen_[u]) continue;
      seen_[u] = 1;
      for (Vertex v : g.neighbors(u)) {
        if (!mark_[v] || seen_[v]) continue;
        const double nd = d + edge_length(w, u, v);
        if (nd < dist_[v]) {
          dist_[v] = nd;
          heap.push({nd, v});
        }
      }
    }
    for (Vertex v : h) {
      mark_[v] = 0;
      seen_[v] = 0;
    }
    return dist_;
  }

  // Components of G[h minus removed]; removed must be a subset of h.
  std::vector<VertexSet> components(const Graph& g, const VertexSet& h, const VertexSet& removed) {
    for (Vertex v : h) mark_[v] = 1;
    for (Vertex v : removed) mark_[v] = 0;
    std::vector<VertexSet> comps;
    std::vector<Vertex> stack;
    for (Vertex s : h) {
      if (!mark_[s] || seen_[s]) continue;
      VertexSet comp;
      seen_[s] = 1;
      stack.push_back(s);
      while (!stack.empty()) {
        const Vertex u = stack.back();
        stack.pop_back();
        comp.push_back(u);
        for (Vertex v : g.neighbors(u)) {
          if (mark_[v] && !seen_[v]) {
            seen_[v] = 1;
            stack.push_back(v);
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
    for (Vertex v : h) {
      mark_[v] = 0;
      seen_[v] = 0;
    }
    return comps;
  }

 private:
  std::vector<char> mark_;
  std::vector<char> seen_;
  std::vector<double> dist_;
};

}  // namespace rigsep::detail
