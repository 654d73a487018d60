#ifndef AALPHA_FAMILIES_HPP
#define AALPHA_FAMILIES_HPP

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "aalpha/digraph.hpp"

namespace aalpha {

/// Named digraph families. Vertex labeling convention: the center / common /
/// initial vertex is 0 (the bispindle terminal vertex is 1); path vertices
/// are numbered along the arcs.
namespace family {
struct Path { int n; };          // arcs (i, i+1)
struct Cycle { int n; };         // Path(n) plus (n-1, 0); n >= 2
struct OutStar { int n; };       // arcs (0, j)
struct InStar { int n; };        // arcs (j, 0)
struct SymStar { int n; };       // arcs (0, j) and (j, 0)
struct Infinity { std::vector<int> cycle_lengths; };  // t cycles sharing vertex 0, each m_i >= 2
struct Bispindle {
  std::vector<int> xy_path_lengths;  // p internally disjoint (x,y)-paths, x = 0, y = 1
  std::vector<int> yx_path_lengths;  // q internally disjoint (y,x)-paths
};
}  // namespace family

using FamilySpec = std::variant<family::Path, family::Cycle, family::OutStar, family::InStar,
                                family::SymStar, family::Infinity, family::Bispindle>;

struct FamilySpecError : std::invalid_argument {
  explicit FamilySpecError(const std::string& what) : std::invalid_argument(what) {}
};

/// Vertex count the spec will generate (validates the parameters).
int family_order(const FamilySpec& spec);

Digraph generate(const FamilySpec& spec);

}  // namespace aalpha

#endif
