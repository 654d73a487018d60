#include "aalpha/digraph.hpp"

#include <algorithm>
#include <numeric>

namespace aalpha {

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  if (n_ <= 0) throw DigraphError(DigraphError::Code::EmptyGraph, "digraph order must be positive");
  std::sort(arcs_.begin(), arcs_.end());
  out_deg_.assign(n_, 0);
  in_deg_.assign(n_, 0);
  out_adj_.assign(n_, {});
  const Arc* prev = nullptr;
  for (const Arc& a : arcs_) {
    auto [tail, head] = a;
    if (tail < 0 || tail >= n_ || head < 0 || head >= n_)
      throw DigraphError(DigraphError::Code::VertexOutOfRange,
                         "arc (" + std::to_string(tail) + "," + std::to_string(head) +
                             ") out of range for order " + std::to_string(n_));
    if (tail == head)
      throw DigraphError(DigraphError::Code::Loop, "loop at vertex " + std::to_string(tail));
    if (prev && *prev == a)
      throw DigraphError(DigraphError::Code::DuplicateArc,
                         "duplicate arc (" + std::to_string(tail) + "," + std::to_string(head) + ")");
    prev = &a;
    out_deg_[tail]++;
    in_deg_[head]++;
    out_adj_[tail].push_back(head);
  }
}

int Digraph::max_out_degree() const {
  return *std::max_element(out_deg_.begin(), out_deg_.end());
}

bool Digraph::has_arc(int tail, int head) const {
  if (tail < 0 || tail >= n_) return false;
  const auto& adj = out_adj_[tail];
  return std::binary_search(adj.begin(), adj.end(), head);
}

long long closed_walks_2(const Digraph& g) {
  long long c2 = 0;
  for (const auto& [tail, head] : g.arcs())
    if (g.has_arc(head, tail)) c2++;
  return c2;  // each symmetric pair contributes both of its arcs
}

bool is_symmetric(const Digraph& g) {
  for (const auto& [tail, head] : g.arcs())
    if (!g.has_arc(head, tail)) return false;
  return true;
}

bool is_simple_arcs_only(const Digraph& g) {
  for (const auto& [tail, head] : g.arcs())
    if (g.has_arc(head, tail)) return false;
  return true;
}

long long sum_squared_outdegrees(const Digraph& g) {
  long long s = 0;
  for (int d : g.out_degrees()) s += static_cast<long long>(d) * d;
  return s;
}

bool underlying_connected(const Digraph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> adj(n);
  for (const auto& [t, h] : g.arcs()) {
    adj[t].push_back(h);
    adj[h].push_back(t);
  }
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        reached++;
        stack.push_back(w);
      }
  }
  return reached == n;
}

bool underlying_is_tree(const Digraph& g) {
  return g.arc_count() == g.order() - 1 && underlying_connected(g);
}

bool is_in_tree_rooted_at(const Digraph& tree, int root) {
  if (!underlying_is_tree(tree)) return false;
  for (int v = 0; v < tree.order(); ++v)
    if (tree.out_degree(v) > 1) return false;
  return tree.out_degree(root) == 0;
}

bool is_out_star_centered_at(const Digraph& tree, int center) {
  if (!underlying_is_tree(tree)) return false;
  return tree.out_degree(center) == tree.order() - 1;
}

Digraph hang_trees(const Digraph& core, const std::vector<TreeAttachment>& trees) {
  // Strong connectivity of the core, checked directly to keep this module
  // independent of the SCC machinery: every vertex must reach vertex 0 and
  // be reachable from it.
  const int m = core.order();
  auto reach = [&](bool forward) {
    std::vector<char> seen(m, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& [t, h] : core.arcs()) {
        int from = forward ? t : h, to = forward ? h : t;
        if (from == v && !seen[to]) {
          seen[to] = 1;
          stack.push_back(to);
        }
      }
    }
    return std::count(seen.begin(), seen.end(), char(1)) == m;
  };
  if (m < 1 || !reach(true) || !reach(false))
    throw HangTreesError(HangTreesError::Code::CoreNotStronglyConnected,
                         "core must be strongly connected");

  std::vector<char> used(m, 0);
  std::vector<Arc> arcs = core.arcs();
  int next_id = m;
  for (const auto& att : trees) {
    if (att.core_vertex < 0 || att.core_vertex >= m)
      throw HangTreesError(HangTreesError::Code::CoreVertexOutOfRange,
                           "tree attached to nonexistent core vertex " + std::to_string(att.core_vertex));
    if (used[att.core_vertex])
      throw HangTreesError(HangTreesError::Code::DuplicateCoreVertex,
                           "two trees attached to core vertex " + std::to_string(att.core_vertex));
    used[att.core_vertex] = 1;
    if (att.tree_root < 0 || att.tree_root >= att.tree.order())
      throw HangTreesError(HangTreesError::Code::TreeRootOutOfRange, "tree root out of range");
    if (!underlying_is_tree(att.tree))
      throw HangTreesError(HangTreesError::Code::NotATree, "attachment is not a tree");

    // Map: root -> core vertex; other tree vertices -> fresh ids ascending.
    std::vector<int> id(att.tree.order());
    for (int v = 0; v < att.tree.order(); ++v)
      id[v] = (v == att.tree_root) ? att.core_vertex : next_id++;
    for (const auto& [t, h] : att.tree.arcs()) arcs.emplace_back(id[t], id[h]);
  }
  return Digraph(next_id, std::move(arcs));
}

}  // namespace aalpha
