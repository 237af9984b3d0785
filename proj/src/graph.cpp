#include "reesgraph/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <sstream>

namespace rees {

std::string to_string(const ExtNat& n) {
  return n.infinite ? std::string("inf") : std::to_string(n.value);
}

void SimpleGraph::add_edge(int u, int v) {
  if (u == v) throw InvalidOrderError("self-loops are not allowed");
  adj_[static_cast<size_t>(u) * n_ + v] = true;
  adj_[static_cast<size_t>(v) * n_ + u] = true;
}

std::vector<std::vector<int>> bfs_components(const SimpleGraph& g) {
  std::vector<std::vector<int>> components;
  std::vector<bool> seen(g.size(), false);
  for (int s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::deque<int> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (int v = 0; v < g.size(); ++v)
        if (g.adjacent(u, v) && !seen[v]) {
          seen[v] = true;
          queue.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

namespace {

std::vector<int> bfs_distances(const SimpleGraph& g, int source) {
  std::vector<int> dist(g.size(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v = 0; v < g.size(); ++v)
      if (g.adjacent(u, v) && dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

}  // namespace

ExtNat bfs_diameter(const SimpleGraph& g, const std::vector<int>& component) {
  long best = 0;
  for (int u : component) {
    std::vector<int> dist = bfs_distances(g, u);
    for (int v : component) {
      if (dist[v] < 0) return ExtNat::inf();
      best = std::max(best, static_cast<long>(dist[v]));
    }
  }
  return ExtNat::of(best);
}

ExtNat bfs_diameter(const SimpleGraph& g) {
  std::vector<int> all(g.size());
  for (int v = 0; v < g.size(); ++v) all[v] = v;
  return bfs_diameter(g, all);
}

namespace {

void bron_kerbosch(const SimpleGraph& g, std::vector<int>& r, std::vector<int> p,
                   std::vector<int> x, std::vector<int>& best) {
  if (p.empty() && x.empty()) {
    if (r.size() > best.size()) best = r;
    return;
  }
  // Pivot: vertex of p union x with the most neighbours in p.
  int pivot = -1, pivot_deg = -1;
  for (const auto* pool : {&p, &x})
    for (int u : *pool) {
      int deg = 0;
      for (int v : p)
        if (g.adjacent(u, v)) ++deg;
      if (deg > pivot_deg) {
        pivot_deg = deg;
        pivot = u;
      }
    }
  std::vector<int> candidates;
  for (int v : p)
    if (pivot < 0 || !g.adjacent(pivot, v)) candidates.push_back(v);
  for (int v : candidates) {
    std::vector<int> np, nx;
    for (int u : p)
      if (g.adjacent(v, u)) np.push_back(u);
    for (int u : x)
      if (g.adjacent(v, u)) nx.push_back(u);
    r.push_back(v);
    bron_kerbosch(g, r, std::move(np), std::move(nx), best);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

std::vector<int> some_max_clique(const SimpleGraph& g) {
  std::vector<int> best, r, p(g.size());
  for (int v = 0; v < g.size(); ++v) p[v] = v;
  bron_kerbosch(g, r, std::move(p), {}, best);
  return best;
}

}  // namespace

int max_clique(const SimpleGraph& g) {
  if (g.size() == 0) return 0;
  return static_cast<int>(some_max_clique(g).size());
}

int naive_max_clique(const SimpleGraph& g) {
  if (g.size() > 16) throw SizeLimitError("naive clique search is limited to 16 vertices");
  int best = 0;
  for (uint32_t mask = 0; mask < (1u << g.size()); ++mask) {
    std::vector<int> sel;
    for (int v = 0; v < g.size(); ++v)
      if (mask & (1u << v)) sel.push_back(v);
    bool clique = true;
    for (size_t a = 0; a < sel.size() && clique; ++a)
      for (size_t b = a + 1; b < sel.size() && clique; ++b)
        if (!g.adjacent(sel[a], sel[b])) clique = false;
    if (clique) best = std::max(best, static_cast<int>(sel.size()));
  }
  return best;
}

ExtNat shortest_cycle(const SimpleGraph& g) {
  // For each edge {u,v}: shortest u-v path avoiding that edge, plus one.
  long best = -1;
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v) {
      if (!g.adjacent(u, v)) continue;
      std::vector<int> dist(g.size(), -1);
      std::deque<int> queue{u};
      dist[u] = 0;
      while (!queue.empty()) {
        int a = queue.front();
        queue.pop_front();
        for (int b = 0; b < g.size(); ++b) {
          if (!g.adjacent(a, b) || dist[b] >= 0) continue;
          if ((a == u && b == v) || (a == v && b == u)) continue;
          dist[b] = dist[a] + 1;
          queue.push_back(b);
        }
      }
      if (dist[v] >= 0) {
        long cycle = dist[v] + 1;
        if (best < 0 || cycle < best) best = cycle;
      }
    }
  return best < 0 ? ExtNat::inf() : ExtNat::of(best);
}

namespace {

bool colour_backtrack(const SimpleGraph& g, const std::vector<int>& order, size_t idx,
                      std::vector<int>& colour, int k) {
  if (idx == order.size()) return true;
  int v = order[idx];
  for (int c = 0; c < k; ++c) {
    bool ok = true;
    for (int u = 0; u < g.size(); ++u)
      if (g.adjacent(u, v) && colour[u] == c) {
        ok = false;
        break;
      }
    if (!ok) continue;
    colour[v] = c;
    if (colour_backtrack(g, order, idx + 1, colour, k)) return true;
    colour[v] = -1;
  }
  return false;
}

}  // namespace

int exact_chromatic(const SimpleGraph& g) {
  if (g.size() > kChromaticVertexGuard)
    throw SizeLimitError("exact colouring is limited to " +
                         std::to_string(kChromaticVertexGuard) + " vertices");
  if (g.size() == 0) return 0;

  // A maximum clique seeds the colouring: its vertices get fixed distinct
  // colours and its size is the starting value of k.
  std::vector<int> clique = some_max_clique(g);
  std::vector<int> degree(g.size(), 0);
  for (int u = 0; u < g.size(); ++u)
    for (int v = 0; v < g.size(); ++v)
      if (g.adjacent(u, v)) ++degree[u];
  std::vector<int> order;
  for (int v = 0; v < g.size(); ++v)
    if (std::find(clique.begin(), clique.end(), v) == clique.end()) order.push_back(v);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return degree[a] > degree[b]; });

  for (int k = std::max<int>(1, static_cast<int>(clique.size()));; ++k) {
    std::vector<int> colour(g.size(), -1);
    for (size_t c = 0; c < clique.size(); ++c) colour[clique[c]] = static_cast<int>(c);
    if (colour_backtrack(g, order, 0, colour, k)) return k;
  }
}

std::string to_dot(const SimpleGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.size(); ++v)
    out << "  v" << v << " [label=\"" << g.label(v) << "\"];\n";
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      if (g.adjacent(u, v)) out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace rees
