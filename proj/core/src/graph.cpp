#include "rigsep/graph.hpp"

#include <algorithm>
#include <string>

#include "rigsep/errors.hpp"

namespace rigsep {

Graph::Graph(int n) : n_(n), offsets_(static_cast<std::size_t>(n) + 1, 0) {
  if (n < 0) throw InputError("graph: negative vertex count");
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  std::vector<Edge> arcs;
  arcs.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw InputError("graph: self-loop at vertex " + std::to_string(u));
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  g.adj_.reserve(arcs.size());
  for (auto [u, v] : arcs) {
    g.offsets_[u + 1]++;
    g.adj_.push_back(v);
  }
  for (int v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  return g;
}

int Graph::max_degree() const {
  int d = 0;
  for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m());
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::check_vertex(Vertex v) const {
  if (!contains(v))
    throw InputError("unknown vertex id " + std::to_string(v) + " (graph has " + std::to_string(n_) +
                     " vertices)");
}

void Graph::check_set(const VertexSet& s) const {
  for (Vertex v : s) check_vertex(v);
}

VertexSet make_set(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

VertexSet all_vertices(int n) {
  VertexSet s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s[i] = i;
  return s;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool set_contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

std::vector<char> membership_mask(int n, const VertexSet& s) {
  std::vector<char> mask(static_cast<std::size_t>(n), 0);
  for (Vertex v : s) mask[v] = 1;
  return mask;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  g.check_set(s);
  const VertexSet vs = make_set(s);
  std::vector<Vertex> local(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < vs.size(); ++i) local[vs[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (Vertex u : vs)
    for (Vertex v : g.neighbors(u))
      if (u < v && local[v] >= 0) edges.emplace_back(local[u], local[v]);
  return {Graph::from_edges(static_cast<int>(vs.size()), edges), vs};
}

std::vector<VertexSet> connected_components_masked(const Graph& g, const std::vector<char>& alive) {
  std::vector<VertexSet> comps;
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (!alive[s] || seen[s]) continue;
    VertexSet comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex v : g.neighbors(u)) {
        if (alive[v] && !seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& s) {
  g.check_set(s);
  return connected_components_masked(g, membership_mask(g.n(), s));
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return connected_components_masked(g, std::vector<char>(static_cast<std::size_t>(g.n()), 1));
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_connected_set(const Graph& g, const VertexSet& s) {
  return connected_components(g, s).size() == 1;
}

VertexSet boundary(const Graph& g, const VertexSet& u) {
  g.check_set(u);
  const auto in = membership_mask(g.n(), u);
  VertexSet out;
  for (Vertex v : u) {
    for (Vertex w : g.neighbors(v)) {
      if (!in[w]) {
        out.push_back(v);
        break;
      }
    }
  }
  return make_set(std::move(out));
}

VertexSet interior(const Graph& g, const VertexSet& u) { return set_difference(make_set(u), boundary(g, u)); }

VertexSet closed_neighborhood(const Graph& g, const VertexSet& a) {
  g.check_set(a);
  std::vector<Vertex> out(a.begin(), a.end());
  for (Vertex v : a)
    for (Vertex w : g.neighbors(v)) out.push_back(w);
  return make_set(std::move(out));
}

bool has_edge_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  g.check_set(a);
  g.check_set(b);
  const auto in_b = membership_mask(g.n(), b);
  for (Vertex u : a)
    for (Vertex v : g.neighbors(u))
      if (in_b[v]) return true;
  return false;
}

Graph subdivision(const Graph& g) {
  const auto es = g.edges();
  std::vector<Edge> out;
  out.reserve(es.size() * 2);
  for (std::size_t i = 0; i < es.size(); ++i) {
    const Vertex mid = static_cast<Vertex>(g.n() + static_cast<int>(i));
    out.emplace_back(es[i].first, mid);
    out.emplace_back(es[i].second, mid);
  }
  return Graph::from_edges(g.n() + static_cast<int>(es.size()), out);
}

}  // namespace rigsep
