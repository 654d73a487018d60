#include "aalpha/scc.hpp"

#include <algorithm>
#include <numeric>

namespace aalpha {

SccDecomposition tarjan_scc(const Digraph& g) {
  const int n = g.order();
  std::vector<int> index(n, -1), lowlink(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  stack.reserve(n);
  int next_index = 0;

  SccDecomposition out;
  out.component_of.assign(n, -1);

  // Explicit DFS frames: vertex plus position in its neighbor list.
  struct Frame { int v; size_t next; };
  std::vector<Frame> frames;

  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    frames.push_back({root, 0});
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      auto& [v, next] = frames.back();
      const auto& adj = g.out_neighbors(v);
      if (next < adj.size()) {
        int w = adj[next++];
        if (index[w] == -1) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
      } else {
        if (lowlink[v] == index[v]) {
          std::vector<int> comp;
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            out.component_of[w] = static_cast<int>(out.components.size());
            comp.push_back(w);
          } while (w != v);
          std::sort(comp.begin(), comp.end());
          out.components.push_back(std::move(comp));
        }
        int finished = v;
        frames.pop_back();
        if (!frames.empty())
          lowlink[frames.back().v] = std::min(lowlink[frames.back().v], lowlink[finished]);
      }
    }
  }

  // Tarjan emits components in reverse topological order of the condensation.
  out.topo_order.resize(out.components.size());
  std::iota(out.topo_order.rbegin(), out.topo_order.rend(), 0);
  return out;
}

bool is_strongly_connected(const Digraph& g) {
  return tarjan_scc(g).component_count() == 1;
}

std::vector<int> GnmStructure::core_out_deg_sorted() const {
  auto d = core_out_deg;
  std::sort(d.rbegin(), d.rend());
  return d;
}

int GnmStructure::max_core_out_deg() const {
  return *std::max_element(core_out_deg.begin(), core_out_deg.end());
}

int GnmStructure::tree_size_at_max() const {
  for (size_t i = 0; i < core_vertices.size(); ++i)
    if (core_vertices[i] == max_core_vertex) return tree_size(static_cast<int>(i));
  return 1;  // unreachable for a valid structure
}

Digraph GnmStructure::core_digraph() const {
  std::vector<int> local(g.order(), -1);
  for (size_t i = 0; i < core_vertices.size(); ++i) local[core_vertices[i]] = static_cast<int>(i);
  std::vector<Arc> arcs;
  for (const auto& [t, h] : g.arcs())
    if (local[t] >= 0 && local[h] >= 0) arcs.emplace_back(local[t], local[h]);
  return Digraph(m(), std::move(arcs));
}

bool GnmStructure::is_core_vertex(int v) const {
  return std::binary_search(core_vertices.begin(), core_vertices.end(), v);
}

std::string to_string(NotMemberReason r) {
  switch (r) {
    case NotMemberReason::StronglyConnected: return "strongly-connected";
    case NotMemberReason::NoNontrivialComponent: return "no-nontrivial-component";
    case NotMemberReason::MultipleNontrivialComponents: return "multiple-nontrivial-components";
    case NotMemberReason::Disconnected: return "disconnected";
    case NotMemberReason::NonTreeAttachment: return "non-tree-attachment";
  }
  return "unknown";
}

ClassifyOutcome classify_gnm(const Digraph& g) {
  auto fail = [](NotMemberReason r) { return ClassifyOutcome{std::nullopt, r}; };

  const auto scc = tarjan_scc(g);
  if (scc.component_count() == 1) return fail(NotMemberReason::StronglyConnected);

  int core_id = -1;
  for (int c = 0; c < scc.component_count(); ++c) {
    if (scc.components[c].size() < 2) continue;
    if (core_id != -1) return fail(NotMemberReason::MultipleNontrivialComponents);
    core_id = c;
  }
  if (core_id == -1) return fail(NotMemberReason::NoNontrivialComponent);
  if (!underlying_connected(g)) return fail(NotMemberReason::Disconnected);

  const std::vector<int>& core = scc.components[core_id];
  std::vector<char> in_core(g.order(), 0);
  for (int v : core) in_core[v] = 1;

  // Underlying components of the non-core arcs must be trees containing
  // exactly one core vertex each.
  const int n = g.order();
  std::vector<std::vector<int>> adj(n);
  std::vector<int> tree_arcs_touching(n, 0);
  int total_tree_arcs = 0;
  for (const auto& [t, h] : g.arcs()) {
    if (in_core[t] && in_core[h]) continue;
    adj[t].push_back(h);
    adj[h].push_back(t);
    total_tree_arcs++;
  }

  std::vector<int> tree_comp(n, -1);
  std::vector<std::vector<int>> tree_members;   // one entry per underlying tree component
  std::vector<int> tree_core_vertex;            // the single core vertex of that component
  std::vector<int> tree_edge_count;
  for (int s = 0; s < n; ++s) {
    if (tree_comp[s] != -1) continue;
    int id = static_cast<int>(tree_members.size());
    tree_members.push_back({});
    tree_core_vertex.push_back(-1);
    tree_edge_count.push_back(0);
    std::vector<int> stack{s};
    tree_comp[s] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      tree_members[id].push_back(v);
      tree_edge_count[id] += static_cast<int>(adj[v].size());
      if (in_core[v]) {
        if (tree_core_vertex[id] != -1 && tree_core_vertex[id] != v)
          return fail(NotMemberReason::NonTreeAttachment);
        tree_core_vertex[id] = v;
      }
      for (int w : adj[v])
        if (tree_comp[w] == -1) {
          tree_comp[w] = id;
          stack.push_back(w);
        }
    }
  }
  for (size_t id = 0; id < tree_members.size(); ++id) {
    if (tree_core_vertex[id] == -1) {
      // Only vertices: a bare core vertex forms a singleton "tree"; an
      // off-core vertex with no core in its component is unattached.
      if (tree_members[id].size() == 1 && in_core[tree_members[id][0]]) {
        tree_core_vertex[id] = tree_members[id][0];
        continue;
      }
      return fail(NotMemberReason::NonTreeAttachment);
    }
    // Each undirected edge was counted from both endpoints. A symmetric arc
    // pair off the core is impossible here (it would be a second nontrivial
    // component), so edges == arcs.
    if (tree_edge_count[id] != 2 * (static_cast<int>(tree_members[id].size()) - 1))
      return fail(NotMemberReason::NonTreeAttachment);
  }

  GnmStructure s{g, core, {}, {}, -1};
  s.tree_of.resize(core.size());
  s.core_out_deg.assign(core.size(), 0);
  std::vector<int> core_index(n, -1);
  for (size_t i = 0; i < core.size(); ++i) core_index[core[i]] = static_cast<int>(i);
  for (size_t id = 0; id < tree_members.size(); ++id) {
    auto members = tree_members[id];
    std::sort(members.begin(), members.end());
    s.tree_of[core_index[tree_core_vertex[id]]] = std::move(members);
  }
  for (const auto& [t, h] : g.arcs())
    if (in_core[t] && in_core[h]) s.core_out_deg[core_index[t]]++;

  int best = 0;
  for (size_t i = 1; i < core.size(); ++i)
    if (s.core_out_deg[i] > s.core_out_deg[best]) best = static_cast<int>(i);
  s.max_core_vertex = core[best];
  return ClassifyOutcome{std::move(s), NotMemberReason::StronglyConnected};
}

}  // namespace aalpha
