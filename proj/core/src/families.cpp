#include "aalpha/families.hpp"

#include <numeric>

namespace aalpha {

namespace {

void check_order(int n, const char* name) {
  if (n < 1) throw FamilySpecError(std::string(name) + " requires n >= 1");
}

struct OrderVisitor {
  int operator()(const family::Path& f) const {
    check_order(f.n, "path");
    return f.n;
  }
  int operator()(const family::Cycle& f) const {
    if (f.n < 2) throw FamilySpecError("cycle requires n >= 2");
    return f.n;
  }
  int operator()(const family::OutStar& f) const {
    check_order(f.n, "outstar");
    return f.n;
  }
  int operator()(const family::InStar& f) const {
    check_order(f.n, "instar");
    return f.n;
  }
  int operator()(const family::SymStar& f) const {
    check_order(f.n, "symstar");
    return f.n;
  }
  int operator()(const family::Infinity& f) const {
    if (f.cycle_lengths.empty()) throw FamilySpecError("infinity requires at least one cycle");
    int n = 1;
    for (int m : f.cycle_lengths) {
      if (m < 2) throw FamilySpecError("infinity cycle lengths must be >= 2");
      n += m - 1;
    }
    return n;
  }
  int operator()(const family::Bispindle& f) const {
    if (f.xy_path_lengths.empty() || f.yx_path_lengths.empty())
      throw FamilySpecError("bispindle requires p >= 1 and q >= 1");
    int unit_xy = 0, unit_yx = 0, n = 2;
    for (int len : f.xy_path_lengths) {
      if (len < 1) throw FamilySpecError("bispindle path lengths must be >= 1");
      if (len == 1) unit_xy++;
      n += len - 1;
    }
    for (int len : f.yx_path_lengths) {
      if (len < 1) throw FamilySpecError("bispindle path lengths must be >= 1");
      if (len == 1) unit_yx++;
      n += len - 1;
    }
    if (unit_xy > 1 || unit_yx > 1)
      throw FamilySpecError("bispindle admits at most one length-1 path per direction");
    return n;
  }
};

struct GenerateVisitor {
  Digraph operator()(const family::Path& f) const {
    std::vector<Arc> arcs;
    for (int i = 0; i + 1 < f.n; ++i) arcs.emplace_back(i, i + 1);
    return Digraph(f.n, std::move(arcs));
  }
  Digraph operator()(const family::Cycle& f) const {
    std::vector<Arc> arcs;
    for (int i = 0; i + 1 < f.n; ++i) arcs.emplace_back(i, i + 1);
    arcs.emplace_back(f.n - 1, 0);
    return Digraph(f.n, std::move(arcs));
  }
  Digraph operator()(const family::OutStar& f) const {
    std::vector<Arc> arcs;
    for (int j = 1; j < f.n; ++j) arcs.emplace_back(0, j);
    return Digraph(f.n, std::move(arcs));
  }
  Digraph operator()(const family::InStar& f) const {
    std::vector<Arc> arcs;
    for (int j = 1; j < f.n; ++j) arcs.emplace_back(j, 0);
    return Digraph(f.n, std::move(arcs));
  }
  Digraph operator()(const family::SymStar& f) const {
    std::vector<Arc> arcs;
    for (int j = 1; j < f.n; ++j) {
      arcs.emplace_back(0, j);
      arcs.emplace_back(j, 0);
    }
    return Digraph(f.n, std::move(arcs));
  }
  Digraph operator()(const family::Infinity& f) const {
    int n = OrderVisitor{}(f);
    std::vector<Arc> arcs;
    int next = 1;
    for (int m : f.cycle_lengths) {
      int prev = 0;
      for (int k = 0; k < m - 1; ++k) {
        arcs.emplace_back(prev, next);
        prev = next++;
      }
      arcs.emplace_back(prev, 0);
    }
    return Digraph(n, std::move(arcs));
  }
  Digraph operator()(const family::Bispindle& f) const {
    int n = OrderVisitor{}(f);
    std::vector<Arc> arcs;
    int next = 2;
    auto add_path = [&](int from, int to, int len) {
      int prev = from;
      for (int k = 0; k < len - 1; ++k) {
        arcs.emplace_back(prev, next);
        prev = next++;
      }
      arcs.emplace_back(prev, to);
    };
    for (int len : f.xy_path_lengths) add_path(0, 1, len);
    for (int len : f.yx_path_lengths) add_path(1, 0, len);
    return Digraph(n, std::move(arcs));
  }
};

}  // namespace

int family_order(const FamilySpec& spec) { return std::visit(OrderVisitor{}, spec); }

Digraph generate(const FamilySpec& spec) {
  family_order(spec);  // validate first so errors surface uniformly
  return std::visit(GenerateVisitor{}, spec);
}

}  // namespace aalpha
