#include "reesgraph/oracle.hpp"

#include <algorithm>
#include <functional>

namespace rees {

SemigroupElement multiply(const SemigroupElement& a, const SemigroupElement& b,
                          const FiniteGroup& group, const SandwichMatrix& p) {
  if (a.zero || b.zero) return SemigroupElement::zero_element();
  int sandwich = p.at(a.row, b.col);
  if (sandwich == SandwichMatrix::kZero) return SemigroupElement::zero_element();
  int g = group.mul(group.mul(a.g, sandwich), b.g);
  return SemigroupElement::triple(a.col, g, b.row);
}

namespace {

std::vector<SemigroupElement> all_elements(const FiniteGroup& group, const SandwichMatrix& p) {
  std::vector<SemigroupElement> elems;
  elems.push_back(SemigroupElement::zero_element());
  for (int i = 0; i < p.cols(); ++i)
    for (int g = 0; g < group.order(); ++g)
      for (int lam = 0; lam < p.rows(); ++lam) elems.push_back(SemigroupElement::triple(i, g, lam));
  return elems;
}

}  // namespace

std::vector<SemigroupElement> semigroup_center(const FiniteGroup& group, const SandwichMatrix& p) {
  if (!is_regular(p)) throw NotRegularError("sandwich matrix must be regular");
  std::vector<SemigroupElement> elems = all_elements(group, p);
  std::vector<SemigroupElement> center;
  for (const auto& x : elems) {
    bool central = true;
    for (const auto& y : elems) {
      if (!(multiply(x, y, group, p) == multiply(y, x, group, p))) {
        central = false;
        break;
      }
    }
    if (central) center.push_back(x);
  }
  return center;
}

int commuting_vertex_id(const FiniteGroup& group, const SandwichMatrix& p, int col, int g,
                        int row) {
  return (col * group.order() + g) * p.rows() + row;
}

int simplified_vertex_id(const StructuralMatrix& m, int col, int row) {
  return col * m.rows() + row;
}

SimpleGraph build_commuting_graph(const FiniteGroup& group, const SandwichMatrix& p) {
  long n_triples = static_cast<long>(p.cols()) * group.order() * p.rows();
  if (n_triples > kOracleVertexGuard)
    throw SizeLimitError("commuting graph would have " + std::to_string(n_triples) +
                         " vertices; the guard is " + std::to_string(kOracleVertexGuard));

  std::vector<SemigroupElement> center = semigroup_center(group, p);
  auto central = [&center](const SemigroupElement& e) {
    return std::find(center.begin(), center.end(), e) != center.end();
  };

  std::vector<SemigroupElement> vertices;
  for (int i = 0; i < p.cols(); ++i)
    for (int g = 0; g < group.order(); ++g)
      for (int lam = 0; lam < p.rows(); ++lam) {
        SemigroupElement e = SemigroupElement::triple(i, g, lam);
        if (!central(e)) vertices.push_back(e);
      }
  if (vertices.empty())
    throw PreconditionError("semigroup is commutative; the commuting graph has no vertices");

  SimpleGraph graph(static_cast<int>(vertices.size()));
  for (int v = 0; v < graph.size(); ++v) {
    const auto& e = vertices[v];
    graph.set_label(v, "(" + std::to_string(e.col + 1) + "," + std::to_string(e.g) + "," +
                           std::to_string(e.row + 1) + ")");
  }
  for (int u = 0; u < graph.size(); ++u)
    for (int v = u + 1; v < graph.size(); ++v) {
      const auto& a = vertices[u];
      const auto& b = vertices[v];
      bool commute = multiply(a, b, group, p) == multiply(b, a, group, p);
      // Cross-check against the adjacency criterion: either the same cell
      // with x p y = y p x, or both crossing sandwich entries are zero.
      bool criterion;
      if (a.col == b.col && a.row == b.row) {
        int s = p.at(a.row, a.col);
        if (s == SandwichMatrix::kZero)
          criterion = true;
        else
          criterion = group.mul(group.mul(a.g, s), b.g) == group.mul(group.mul(b.g, s), a.g);
      } else {
        criterion = p.is_zero(a.row, b.col) && p.is_zero(b.row, a.col);
      }
      if (commute != criterion)
        throw PreconditionError("adjacency criterion disagrees with multiplication");
      if (commute) graph.add_edge(u, v);
    }
  return graph;
}

SimpleGraph build_simplified_graph(const StructuralMatrix& m) {
  int n = m.cols() * m.rows();
  SimpleGraph graph(n);
  for (int i = 0; i < m.cols(); ++i)
    for (int lam = 0; lam < m.rows(); ++lam) {
      int v = simplified_vertex_id(m, i, lam);
      graph.set_label(v, "(" + std::to_string(i + 1) + "," + std::to_string(lam + 1) + ")");
    }
  for (int i = 0; i < m.cols(); ++i)
    for (int lam = 0; lam < m.rows(); ++lam)
      for (int j = 0; j < m.cols(); ++j)
        for (int mu = 0; mu < m.rows(); ++mu) {
          int u = simplified_vertex_id(m, i, lam);
          int v = simplified_vertex_id(m, j, mu);
          if (u < v && m.is_zero(lam, j) && m.is_zero(mu, i)) graph.add_edge(u, v);
        }
  return graph;
}

std::vector<std::vector<int>> find_left_paths(const FiniteGroup& group, const SandwichMatrix& p,
                                              int max_len) {
  SimpleGraph graph = build_commuting_graph(group, p);
  // Vertex list in graph order, so products can be evaluated by index.
  std::vector<SemigroupElement> center = semigroup_center(group, p);
  std::vector<SemigroupElement> vertices;
  for (int i = 0; i < p.cols(); ++i)
    for (int g = 0; g < group.order(); ++g)
      for (int lam = 0; lam < p.rows(); ++lam) {
        SemigroupElement e = SemigroupElement::triple(i, g, lam);
        if (std::find(center.begin(), center.end(), e) == center.end()) vertices.push_back(e);
      }

  std::vector<std::vector<int>> found;
  std::vector<int> path;
  std::vector<bool> used(graph.size(), false);

  std::function<void(int)> extend = [&](int last) {
    if (path.size() >= 2) {
      int first = path.front();
      if (first < last) {  // canonical orientation
        bool left = true;
        for (int v : path) {
          if (!(multiply(vertices[first], vertices[v], group, p) ==
                multiply(vertices[last], vertices[v], group, p))) {
            left = false;
            break;
          }
        }
        if (left) found.push_back(path);
      }
    }
    if (static_cast<int>(path.size()) - 1 >= max_len) return;
    for (int v = 0; v < graph.size(); ++v) {
      if (used[v] || !graph.adjacent(last, v)) continue;
      used[v] = true;
      path.push_back(v);
      extend(v);
      path.pop_back();
      used[v] = false;
    }
  };

  for (int s = 0; s < graph.size(); ++s) {
    used[s] = true;
    path.push_back(s);
    extend(s);
    path.pop_back();
    used[s] = false;
  }
  return found;
}

std::vector<int> psi_isomorphism(const SandwichMatrix& p, const SandwichMatrix& q,
                                 const FiniteGroup& group) {
  if (!(structural(p) == structural(q)))
    throw PreconditionError("matrices differ in their zero pattern");
  if (!is_regular(p) || !is_regular(q))
    throw PreconditionError("both sandwich matrices must be regular");
  if (!has_zero(p)) throw PreconditionError("matrices must contain a zero entry");

  SimpleGraph gp = build_commuting_graph(group, p);
  SimpleGraph gq = build_commuting_graph(group, q);

  std::vector<int> map(gp.size());
  for (int i = 0; i < p.cols(); ++i)
    for (int g = 0; g < group.order(); ++g)
      for (int lam = 0; lam < p.rows(); ++lam) {
        int source = commuting_vertex_id(group, p, i, g, lam);
        int image_g = g;
        if (!p.is_zero(lam, i))
          image_g = group.mul(group.mul(g, p.at(lam, i)), group.inverse(q.at(lam, i)));
        map[source] = commuting_vertex_id(group, q, i, image_g, lam);
      }

  // Bijectivity, then adjacency preserved and reflected.
  std::vector<bool> hit(gq.size(), false);
  for (int v : map) {
    if (hit[v]) throw PreconditionError("psi image collision");
    hit[v] = true;
  }
  for (int u = 0; u < gp.size(); ++u)
    for (int v = u + 1; v < gp.size(); ++v)
      if (gp.adjacent(u, v) != gq.adjacent(map[u], map[v]))
        throw PreconditionError("psi fails to preserve adjacency");
  return map;
}

}  // namespace rees
