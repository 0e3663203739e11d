#pragma once

// Named example graphs, addressable as builtin:<name>.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "criticalis/error.hpp"
#include "criticalis/sgraph.hpp"

namespace criticalis::builtin {

namespace detail {

inline Graph simple(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.set_edge(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
  return g;
}

struct Arc {
  int from, to;
  std::int64_t w;
};

inline Graph arcs(std::size_t n, const std::vector<Arc>& list) {
  Graph g(n);
  for (auto a : list) g.set_weight(static_cast<std::size_t>(a.from - 1), static_cast<std::size_t>(a.to - 1), a.w);
  return g;
}

}  // namespace detail

inline Graph path3() { return family::path(3); }

inline Graph hypercube3() { return family::hypercube3(); }

/// Signed 5-cycle with a doubled, oppositely signed pair of arcs at v1.
inline Graph fig2() {
  return detail::arcs(5, {{1, 2, 1}, {1, 5, -1}, {2, 1, -1}, {2, 3, 1}, {3, 2, 1},
                          {3, 4, 1}, {4, 3, 1}, {4, 5, 1}, {5, 1, 1}, {5, 4, 1}});
}

inline Graph fig4() {
  return detail::simple(6, {{1, 3}, {1, 4}, {1, 6}, {2, 3}, {2, 4}, {2, 5}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}});
}

/// Twin-free seven-vertex graph with gamma = 3.
inline Graph fig5() {
  return detail::simple(7, {{5, 7}, {3, 7}, {3, 4}, {4, 5}, {5, 6}, {1, 6}, {1, 7},
                            {2, 3}, {2, 4}, {4, 6}, {2, 6}, {1, 2}});
}

/// Signed 4-cycle.
inline Graph fig6() {
  return detail::arcs(4, {{1, 2, 1}, {1, 4, -1}, {2, 1, 1}, {2, 3, 1}, {3, 2, 1}, {3, 4, 1}, {4, 1, 1}, {4, 3, -1}});
}

/// v1 is a sink of arcs from every other vertex; v2 v3 a negative edge;
/// v4 v5 v6 a triangle.
inline Graph fig7() {
  return detail::arcs(6, {{2, 1, 1}, {3, 1, 1}, {4, 1, 1}, {5, 1, 1}, {6, 1, 1}, {2, 3, -1}, {3, 2, -1},
                          {4, 5, 1}, {5, 4, 1}, {4, 6, 1}, {6, 4, 1}, {5, 6, 1}, {6, 5, 1}});
}

/// Seven-vertex cograph.
inline Graph fig8() {
  return detail::simple(7, {{4, 5}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {6, 7}});
}

inline const std::vector<std::string>& names() {
  static const std::vector<std::string> n{"path3", "hypercube3", "fig2", "fig4", "fig5", "fig6", "fig7", "fig8"};
  return n;
}

inline Graph by_name(std::string_view name) {
  if (name.starts_with("builtin:")) name.remove_prefix(8);
  if (name == "path3") return path3();
  if (name == "hypercube3") return hypercube3();
  if (name == "fig2") return fig2();
  if (name == "fig4") return fig4();
  if (name == "fig5") return fig5();
  if (name == "fig6") return fig6();
  if (name == "fig7") return fig7();
  if (name == "fig8") return fig8();
  throw ParseError("unknown builtin graph '" + std::string(name) + "'");
}

}  // namespace criticalis::builtin
