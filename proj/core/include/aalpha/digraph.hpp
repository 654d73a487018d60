#ifndef AALPHA_DIGRAPH_HPP
#define AALPHA_DIGRAPH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace aalpha {

/// Ordered pair (tail, head), 0-indexed.
using Arc = std::pair<int, int>;

struct DigraphError : std::invalid_argument {
  enum class Code { Loop, DuplicateArc, VertexOutOfRange, EmptyGraph };
  Code code;
  DigraphError(Code c, const std::string& what) : std::invalid_argument(what), code(c) {}
};

/// Labeled simple digraph: no loops, no multi-arcs. Immutable after
/// construction; copy freely, operations are pure.
class Digraph {
 public:
  /// Validates every arc; throws DigraphError on loops, duplicates or
  /// out-of-range endpoints.
  Digraph(int n, std::vector<Arc> arcs);

  int order() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }

  /// Arcs sorted lexicographically by (tail, head).
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<int>& out_degrees() const { return out_deg_; }
  const std::vector<int>& in_degrees() const { return in_deg_; }
  int out_degree(int v) const { return out_deg_[v]; }
  int in_degree(int v) const { return in_deg_[v]; }
  int max_out_degree() const;

  /// Heads of arcs leaving v, ascending.
  const std::vector<int>& out_neighbors(int v) const { return out_adj_[v]; }

  bool has_arc(int tail, int head) const;

  bool operator==(const Digraph& other) const {
    return n_ == other.n_ && arcs_ == other.arcs_;
  }

 private:
  int n_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_adj_;
  std::vector<int> out_deg_;
  std::vector<int> in_deg_;
};

/// c2: closed walks of length 2 = trace(A^2). Each symmetric arc pair is
/// counted twice, once per starting vertex.
long long closed_walks_2(const Digraph& g);

/// True iff every arc has its reverse present.
bool is_symmetric(const Digraph& g);

/// True iff no arc has its reverse present (every arc is simple).
bool is_simple_arcs_only(const Digraph& g);

/// Sum of squared outdegrees, the degree term of the second spectral moment.
long long sum_squared_outdegrees(const Digraph& g);

/// True iff the underlying undirected graph is connected (n >= 1).
bool underlying_connected(const Digraph& g);

/// True iff the underlying graph of g is a tree: arc_count == n-1 and
/// underlying connected (this also rules out symmetric pairs).
bool underlying_is_tree(const Digraph& g);

/// In-tree: every vertex has outdegree <= 1; the unique outdegree-0 vertex
/// is the root. `root` fixes which vertex must be the root.
bool is_in_tree_rooted_at(const Digraph& tree, int root);

/// Out-star centered at `center`: all arcs leave the center.
bool is_out_star_centered_at(const Digraph& tree, int center);

struct HangTreesError : std::invalid_argument {
  enum class Code { CoreNotStronglyConnected, CoreVertexOutOfRange, DuplicateCoreVertex, NotATree, TreeRootOutOfRange };
  Code code;
  HangTreesError(Code c, const std::string& what) : std::invalid_argument(what), code(c) {}
};

struct TreeAttachment {
  int core_vertex;   // vertex of the core the tree hangs on
  Digraph tree;      // any orientation of an undirected tree
  int tree_root;     // vertex of `tree` merged into core_vertex
};

/// Merges each tree's root into its assigned core vertex. Core keeps ids
/// 0..m-1; the remaining vertices of each tree get consecutive new ids in
/// attachment order (within a tree, ascending original id).
Digraph hang_trees(const Digraph& core, const std::vector<TreeAttachment>& trees);

}  // namespace aalpha

#endif
