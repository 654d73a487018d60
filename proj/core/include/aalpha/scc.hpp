#ifndef AALPHA_SCC_HPP
#define AALPHA_SCC_HPP

#include <optional>
#include <string>
#include <vector>

#include "aalpha/digraph.hpp"

namespace aalpha {

struct SccDecomposition {
  std::vector<int> component_of;        // vertex -> component id
  std::vector<std::vector<int>> components;  // vertices per component, ascending
  /// Component ids ordered so every arc of the condensation goes from an
  /// earlier to a later entry (topological).
  std::vector<int> topo_order;

  int component_count() const { return static_cast<int>(components.size()); }
  int nontrivial_count() const {
    int k = 0;
    for (const auto& c : components)
      if (c.size() >= 2) k++;
    return k;
  }
};

/// Iterative Tarjan, deterministic: DFS roots and neighbor scans by
/// ascending vertex index.
SccDecomposition tarjan_scc(const Digraph& g);

bool is_strongly_connected(const Digraph& g);

/// Membership structure for the class of non-strongly-connected digraphs
/// with one nontrivial strong component and trees hung on its vertices.
struct GnmStructure {
  Digraph g;
  std::vector<int> core_vertices;            // ascending, size m >= 2
  std::vector<std::vector<int>> tree_of;     // aligned with core_vertices; each contains its core vertex
  std::vector<int> core_out_deg;             // outdegree within the core, aligned with core_vertices
  int max_core_vertex;                       // argmax of core_out_deg; ties -> lowest vertex id

  int n() const { return g.order(); }
  int m() const { return static_cast<int>(core_vertices.size()); }
  int tree_size(int i) const { return static_cast<int>(tree_of[i].size()); }
  /// Outdegrees within the core, sorted descending.
  std::vector<int> core_out_deg_sorted() const;
  /// d+ of the max-outdegree core vertex, within the core.
  int max_core_out_deg() const;
  /// Tree size at the max-outdegree core vertex.
  int tree_size_at_max() const;
  /// The induced core digraph on local labels 0..m-1 (core_vertices order).
  Digraph core_digraph() const;
  bool is_core_vertex(int v) const;
};

enum class NotMemberReason {
  StronglyConnected,
  NoNontrivialComponent,
  MultipleNontrivialComponents,
  Disconnected,
  NonTreeAttachment,
};

std::string to_string(NotMemberReason r);

struct ClassifyOutcome {
  std::optional<GnmStructure> structure;
  NotMemberReason reason = NotMemberReason::StronglyConnected;  // meaningful iff !structure

  bool is_member() const { return structure.has_value(); }
};

/// Recognizes membership: exactly one strong component with >= 2 vertices,
/// underlying graph connected, all remaining arcs forming vertex-disjoint
/// trees that each contain exactly one core vertex.
ClassifyOutcome classify_gnm(const Digraph& g);

}  // namespace aalpha

#endif
