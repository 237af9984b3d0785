#include "reesgraph/group.hpp"

#include <algorithm>

namespace rees {

FiniteGroup::FiniteGroup(int order, std::vector<int> table, int identity)
    : order_(order), table_(std::move(table)), identity_(identity) {}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw InvalidOrderError("cyclic group order must be at least 1");
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<size_t>(a) * n + b] = (a + b) % n;
  FiniteGroup g(n, std::move(table), 0);
  g.validate();
  return g;
}

FiniteGroup FiniteGroup::dihedral(int n) {
  if (n < 3) throw InvalidOrderError("dihedral parameter must be at least 3");
  // Element f*n + k encodes the map x -> k + x (f = 0) or x -> k - x (f = 1)
  // on Z_n; composition is "left element applied last".
  int order = 2 * n;
  std::vector<int> table(static_cast<size_t>(order) * order);
  auto enc = [n](int flip, int k) { return flip * n + ((k % n + n) % n); };
  for (int a = 0; a < order; ++a) {
    int fa = a / n, ka = a % n;
    for (int b = 0; b < order; ++b) {
      int fb = b / n, kb = b % n;
      int flip = fa ^ fb;
      int k = fa == 0 ? ka + kb : ka - kb;
      table[static_cast<size_t>(a) * order + b] = enc(flip, k);
    }
  }
  FiniteGroup g(order, std::move(table), 0);
  g.validate();
  return g;
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table) {
  int n = static_cast<int>(table.size());
  if (n == 0) throw InvalidOrderError("multiplication table must be non-empty");
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(table[r].size()) != n)
      throw GroupValidationError("closure", {r, -1, -1}, "table is not square");
    for (int v : table[r]) flat.push_back(v);
  }
  // Locate the identity before full validation so the remaining axioms can
  // refer to it.
  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      size_t ex = static_cast<size_t>(e) * n + x;
      size_t xe = static_cast<size_t>(x) * n + e;
      if (flat[ex] < 0 || flat[ex] >= n || flat[xe] < 0 || flat[xe] >= n) {
        ok = false;
        break;
      }
      if (flat[ex] != x || flat[xe] != x) ok = false;
    }
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0)
    throw GroupValidationError("identity", {-1, -1, -1}, "table has no two-sided identity");
  FiniteGroup g(n, std::move(flat), identity);
  g.validate();
  return g;
}

void FiniteGroup::validate() const {
  int n = order_;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int v = mul(a, b);
      if (v < 0 || v >= n)
        throw GroupValidationError("closure", {a, b, -1},
                                   "table entry (" + std::to_string(a) + "," + std::to_string(b) +
                                       ") = " + std::to_string(v) + " is out of range");
    }
  for (int x = 0; x < n; ++x) {
    if (mul(identity_, x) != x || mul(x, identity_) != x)
      throw GroupValidationError("identity", {identity_, x, -1},
                                 "element " + std::to_string(identity_) +
                                     " is not an identity at " + std::to_string(x));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw GroupValidationError("associativity", {a, b, c},
                                     "(" + std::to_string(a) + "*" + std::to_string(b) + ")*" +
                                         std::to_string(c) + " != " + std::to_string(a) + "*(" +
                                         std::to_string(b) + "*" + std::to_string(c) + ")");
  for (int a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == identity_) {
        has_inverse = true;
        break;
      }
    if (!has_inverse)
      throw GroupValidationError("inverses", {a, -1, -1},
                                 "element " + std::to_string(a) + " has no right inverse");
  }
}

int FiniteGroup::inverse(int a) const {
  for (int b = 0; b < order_; ++b)
    if (mul(a, b) == identity_) return b;
  return -1;  // unreachable for a validated group
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<int> FiniteGroup::center() const {
  std::vector<int> result;
  for (int x = 0; x < order_; ++x) {
    bool central = true;
    for (int y = 0; y < order_ && central; ++y)
      if (mul(x, y) != mul(y, x)) central = false;
    if (central) result.push_back(x);
  }
  return result;
}

GroupProfile FiniteGroup::profile() const {
  return GroupProfile{order_, is_abelian(), is_trivial()};
}

void FiniteGroup::set_labels(std::vector<std::string> labels) {
  if (static_cast<int>(labels.size()) != order_)
    throw InvalidOrderError("label list size must equal the group order");
  labels_ = std::move(labels);
}

SimpleGraph commuting_graph_of_group(const FiniteGroup& g) {
  if (g.is_abelian())
    throw PreconditionError("abelian group: the commuting graph has no vertices");
  std::vector<int> centre = g.center();
  std::vector<int> vertices;
  for (int x = 0; x < g.order(); ++x)
    if (!std::binary_search(centre.begin(), centre.end(), x)) vertices.push_back(x);
  SimpleGraph graph(static_cast<int>(vertices.size()));
  for (size_t v = 0; v < vertices.size(); ++v)
    graph.set_label(static_cast<int>(v), std::to_string(vertices[v]));
  for (size_t a = 0; a < vertices.size(); ++a)
    for (size_t b = a + 1; b < vertices.size(); ++b)
      if (g.mul(vertices[a], vertices[b]) == g.mul(vertices[b], vertices[a]))
        graph.add_edge(static_cast<int>(a), static_cast<int>(b));
  return graph;
}

}  // namespace rees
