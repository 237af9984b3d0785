#pragma once

#include <string>
#include <vector>

#include "reesgraph/errors.hpp"

namespace rees {

// Extended natural number; Infinite stands for unreachable / acyclic.
struct ExtNat {
  bool infinite = false;
  long value = 0;

  static ExtNat inf() { return ExtNat{true, 0}; }
  static ExtNat of(long v) { return ExtNat{false, v}; }
  bool operator==(const ExtNat& other) const = default;
};

std::string to_string(const ExtNat& n);  // finite value or "inf"

// Simple graph with opaque ordered vertex labels and a symmetric,
// irreflexive adjacency matrix.
class SimpleGraph {
 public:
  explicit SimpleGraph(int n) : n_(n), adj_(static_cast<size_t>(n) * n, false), labels_(n) {}

  int size() const { return n_; }
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return adj_[static_cast<size_t>(u) * n_ + v]; }
  void set_label(int v, std::string label) { labels_[v] = std::move(label); }
  const std::string& label(int v) const { return labels_[v]; }

 private:
  int n_;
  std::vector<bool> adj_;
  std::vector<std::string> labels_;
};

std::vector<std::vector<int>> bfs_components(const SimpleGraph& g);
ExtNat bfs_diameter(const SimpleGraph& g, const std::vector<int>& component);
ExtNat bfs_diameter(const SimpleGraph& g);

int max_clique(const SimpleGraph& g);         // Bron-Kerbosch with pivoting
int naive_max_clique(const SimpleGraph& g);   // subset enumeration, <= 16 vertices
ExtNat shortest_cycle(const SimpleGraph& g);  // per-edge BFS girth
int exact_chromatic(const SimpleGraph& g);    // backtracking with clique seeding, <= 40 vertices

inline constexpr int kChromaticVertexGuard = 40;

std::string to_dot(const SimpleGraph& g, const std::string& name);

}  // namespace rees
