#pragma once

// Exhaustive enumeration of small simple graphs and trees up to isomorphism.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "criticalis/error.hpp"
#include "criticalis/sgraph.hpp"

namespace criticalis::enumerate {

namespace detail {

// Upper-triangle adjacency bits of a simple graph on n <= 8 vertices, pair
// (i, j) with i < j at position index(i, j).
inline std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

inline std::uint32_t relabel(std::uint32_t bits, std::size_t n, const std::vector<std::size_t>& perm) {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (bits >> pair_index(n, i, j) & 1U) {
        std::size_t a = perm[i], b = perm[j];
        if (a > b) std::swap(a, b);
        out |= 1U << pair_index(n, a, b);
      }
  return out;
}

inline Graph from_bits(std::uint32_t bits, std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (bits >> pair_index(n, i, j) & 1U) g.set_edge(i, j);
  return g;
}

inline bool bits_connected(std::uint32_t bits, std::size_t n) {
  if (n <= 1) return true;
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (!(frontier >> v & 1U)) continue;
      for (std::size_t u = 0; u < n; ++u) {
        if (u == v) continue;
        std::size_t a = std::min(u, v), b = std::max(u, v);
        if (bits >> pair_index(n, a, b) & 1U) next |= 1U << u;
      }
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1U << n) - 1;
}

}  // namespace detail

/// One representative per isomorphism class of simple graphs on n <= 7
/// vertices, ordered by edge count then canonical code.
inline std::vector<Graph> simple_graphs(std::size_t n, bool connected_only = false) {
  if (n > 7) throw InvalidArgument("graph enumeration supports n <= 7");
  if (n == 0) return {};
  const std::size_t pairs = n * (n - 1) / 2;
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::set<std::pair<int, std::uint32_t>> canon;
  std::vector<std::uint8_t> done(std::size_t{1} << pairs, 0);
  for (std::uint32_t bits = 0; bits < (1U << pairs); ++bits) {
    if (done[bits]) continue;
    std::uint32_t best = bits;
    for (const auto& q : perms) {
      auto r = detail::relabel(bits, n, q);
      done[r] = 1;
      best = std::min(best, r);
    }
    if (connected_only && !detail::bits_connected(best, n)) continue;
    canon.insert({std::popcount(best), best});
  }
  std::vector<Graph> out;
  for (auto [e, b] : canon) out.push_back(detail::from_bits(b, n));
  return out;
}

/// All simple graphs with 1..max_n vertices, up to isomorphism.
inline std::vector<Graph> simple_graphs_up_to(std::size_t max_n, bool connected_only = false) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto g = simple_graphs(n, connected_only);
    out.insert(out.end(), g.begin(), g.end());
  }
  return out;
}

namespace detail {

inline std::string ahu(const std::vector<std::vector<std::size_t>>& adj, std::size_t v, std::size_t parent) {
  std::vector<std::string> kids;
  for (auto u : adj[v])
    if (u != parent) kids.push_back(ahu(adj, u, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (auto& k : kids) s += k;
  return s + ")";
}

inline std::vector<std::size_t> centers(const std::vector<std::vector<std::size_t>>& adj) {
  std::size_t n = adj.size();
  if (n <= 2) {
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  std::vector<std::size_t> deg(n), leaves;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = adj[v].size();
    if (deg[v] <= 1) leaves.push_back(v);
  }
  std::size_t left = n;
  while (left > 2) {
    left -= leaves.size();
    std::vector<std::size_t> next;
    for (auto l : leaves)
      for (auto u : adj[l])
        if (--deg[u] == 1) next.push_back(u);
    leaves = std::move(next);
  }
  return leaves;
}

}  // namespace detail

/// One representative per isomorphism class of trees on n <= 12 vertices,
/// grown leaf by leaf and deduplicated by center-rooted canonical codes.
inline std::vector<Graph> trees(std::size_t n) {
  if (n > 12) throw InvalidArgument("tree enumeration supports n <= 12");
  if (n == 0) return {};
  using Adj = std::vector<std::vector<std::size_t>>;
  auto code_of = [](const Adj& adj) {
    std::string code;
    for (auto c : detail::centers(adj)) {
      auto s = detail::ahu(adj, c, adj.size());
      if (code.empty() || s < code) code = s;
    }
    return code;
  };
  std::vector<Adj> level{Adj(1)};
  for (std::size_t size = 2; size <= n; ++size) {
    std::map<std::string, Adj> next;
    for (const auto& t : level)
      for (std::size_t v = 0; v < t.size(); ++v) {
        Adj a = t;
        a.emplace_back();
        a[v].push_back(size - 1);
        a[size - 1].push_back(v);
        next.emplace(code_of(a), std::move(a));
      }
    level.clear();
    for (auto& [code, a] : next) level.push_back(std::move(a));
  }
  std::vector<Graph> out;
  for (const auto& a : level) {
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u)
      for (auto v : a[u])
        if (u < v) g.set_edge(u, v);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace criticalis::enumerate
