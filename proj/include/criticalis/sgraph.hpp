#pragma once

// Signed multidigraphs stored as a dense net-weight matrix, the graph
// families used throughout, twin operations, blowups, twin detection and
// cograph cotrees.

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "criticalis/error.hpp"
#include "criticalis/polyring.hpp"

namespace criticalis {

/// Vertex label: base name plus copy index. Copy 0 is the original vertex.
struct Vertex {
  std::uint32_t base = 0;
  std::uint32_t copy = 0;

  friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

inline std::string to_string(Vertex v) {
  std::string s = "v" + std::to_string(v.base);
  if (v.copy != 0) s += "_" + std::to_string(v.copy);
  return s;
}

/// Accepts "v3", "v3_1", "3" and "3_1".
inline Vertex parse_vertex(std::string_view s) {
  std::string_view t = s;
  if (!t.empty() && (t.front() == 'v' || t.front() == 'x')) t.remove_prefix(1);
  auto number = [&](std::string_view d) -> std::uint32_t {
    if (d.empty() || d.size() > 9 || !std::all_of(d.begin(), d.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw ParseError("bad vertex '" + std::string(s) + "'");
    return static_cast<std::uint32_t>(std::stoul(std::string(d)));
  };
  auto us = t.find('_');
  if (us == std::string_view::npos) return {number(t), 0};
  return {number(t.substr(0, us)), number(t.substr(us + 1))};
}

enum class TwinKind { duplicate, replicate };

class SignedMultidigraph {
 public:
  SignedMultidigraph() = default;

  /// n vertices labelled v1..vn, no arcs.
  explicit SignedMultidigraph(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) add_vertex({static_cast<std::uint32_t>(i + 1), 0});
  }

  std::size_t size() const { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  Vertex vertex(std::size_t i) const { return vertices_.at(i); }
  Var var(std::size_t i) const { return Var{vertices_.at(i).base, vertices_.at(i).copy}; }

  std::size_t add_vertex(Vertex v) {
    if (find(v)) throw InvalidArgument("duplicate vertex " + to_string(v));
    std::size_t n = vertices_.size();
    std::vector<std::int64_t> w((n + 1) * (n + 1), 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) w[i * (n + 1) + j] = w_[i * n + j];
    w_ = std::move(w);
    vertices_.push_back(v);
    return n;
  }

  std::optional<std::size_t> find(Vertex v) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  std::size_t index_of(Vertex v) const {
    if (auto i = find(v)) return *i;
    throw InvalidArgument("unknown vertex " + to_string(v));
  }

  /// Net signed arc multiplicity from i to j.
  std::int64_t weight(std::size_t i, std::size_t j) const { return w_[i * size() + j]; }

  void set_weight(std::size_t i, std::size_t j, std::int64_t w) {
    if (i == j) throw InvalidArgument("loops are not allowed");
    w_.at(i * size() + j) = w;
  }
  void add_weight(std::size_t i, std::size_t j, std::int64_t w) { set_weight(i, j, weight(i, j) + w); }
  void set_edge(std::size_t i, std::size_t j, std::int64_t w = 1) {
    set_weight(i, j, w);
    set_weight(j, i, w);
  }

  bool adjacent(std::size_t i, std::size_t j) const { return weight(i, j) != 0 || weight(j, i) != 0; }

  /// Symmetric with all weights in {0, 1}.
  bool is_simple() const {
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) {
        auto w = weight(i, j);
        if ((w != 0 && w != 1) || w != weight(j, i)) return false;
      }
    return true;
  }

  std::size_t edge_count() const {
    std::size_t e = 0;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j) e += adjacent(i, j);
    return e;
  }

  /// Induced subgraph on the given indices, in the given order.
  SignedMultidigraph induced(const std::vector<std::size_t>& keep) const {
    SignedMultidigraph h;
    for (auto i : keep) h.add_vertex(vertices_.at(i));
    for (std::size_t a = 0; a < keep.size(); ++a)
      for (std::size_t b = 0; b < keep.size(); ++b)
        if (a != b) h.w_[a * keep.size() + b] = weight(keep[a], keep[b]);
    return h;
  }

  SignedMultidigraph remove_vertex(std::size_t v) const {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < size(); ++i)
      if (i != v) keep.push_back(i);
    return induced(keep);
  }

  std::uint32_t max_base() const {
    std::uint32_t m = 0;
    for (auto v : vertices_) m = std::max(m, v.base);
    return m;
  }

  /// Same labels in the same order and the same weights.
  friend bool operator==(const SignedMultidigraph& a, const SignedMultidigraph& b) {
    return a.vertices_ == b.vertices_ && a.w_ == b.w_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<std::int64_t> w_;
};

using Graph = SignedMultidigraph;

// ---------------------------------------------------------------- parsing

/// Edgelist text: `n <count>` then `edge u v [w]` or `arc u v w` lines,
/// `#` comments. Weights on the same ordered pair accumulate.
inline Graph parse_edgelist(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<Graph> g;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError("line " + std::to_string(lineno) + ": " + what);
  };
  auto vertex_index = [&](const std::string& tok) -> std::size_t {
    Vertex v = parse_vertex(tok);
    auto i = g->find(v);
    if (!i) throw fail("vertex out of range: " + tok);
    return *i;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "n") {
      long long n;
      if (g || !(ls >> n) || n < 1 || n > 4096) throw fail("bad header");
      g.emplace(static_cast<std::size_t>(n));
    } else if (kw == "edge" || kw == "arc") {
      if (!g) throw fail("missing `n <count>` header");
      std::string a, b;
      if (!(ls >> a >> b)) throw fail("expected two vertices");
      long long w = 1;
      std::string wt;
      if (ls >> wt) {
        try {
          std::size_t pos;
          w = std::stoll(wt, &pos);
          if (pos != wt.size()) throw fail("bad weight " + wt);
        } catch (const std::logic_error&) {
          throw fail("bad weight " + wt);
        }
      } else if (kw == "arc") {
        throw fail("arc needs a weight");
      }
      if (w == 0) throw fail("zero weight");
      std::string extra;
      if (ls >> extra) throw fail("trailing token " + extra);
      auto i = vertex_index(a), j = vertex_index(b);
      if (i == j) throw fail("loop at " + a);
      g->add_weight(i, j, w);
      if (kw == "edge") g->add_weight(j, i, w);
    } else {
      throw fail("unknown keyword " + kw);
    }
  }
  if (!g) throw ParseError("empty edgelist");
  return *g;
}

inline std::string to_edgelist(const Graph& g) {
  bool plain = true;
  for (std::size_t i = 0; i < g.size(); ++i) plain = plain && g.vertex(i) == Vertex{static_cast<std::uint32_t>(i + 1), 0};
  if (!plain) throw InvalidArgument("edgelist output needs vertices labelled v1..vn");
  std::string s = "n " + std::to_string(g.size()) + "\n";
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) {
      auto w = g.weight(i, j);
      if (w == 0) continue;
      if (w == g.weight(j, i)) {
        if (i < j) s += "edge " + std::to_string(i + 1) + " " + std::to_string(j + 1) + (w == 1 ? "" : " " + std::to_string(w)) + "\n";
      } else {
        s += "arc " + std::to_string(i + 1) + " " + std::to_string(j + 1) + " " + std::to_string(w) + "\n";
      }
    }
  return s;
}

/// graph6 decoder for simple undirected graphs. An optional ">>graph6<<"
/// header is accepted.
inline Graph parse_graph6(std::string_view s) {
  if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  std::size_t pos = 0;
  auto next = [&]() -> std::uint32_t {
    if (pos >= s.size()) throw ParseError("graph6 string too short");
    auto c = static_cast<unsigned char>(s[pos++]);
    if (c < 63 || c > 126) throw ParseError("graph6 byte out of range");
    return c - 63U;
  };
  std::uint64_t n = next();
  if (n == 63) {
    if (pos < s.size() && s[pos] == '~') {
      ++pos;
      n = 0;
      for (int k = 0; k < 6; ++k) n = (n << 6) | next();
    } else {
      n = 0;
      for (int k = 0; k < 3; ++k) n = (n << 6) | next();
    }
  }
  if (n > 4096) throw ParseError("graph6 graph too large");
  Graph g(static_cast<std::size_t>(n));
  std::uint32_t chunk = 0;
  int bits = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if (bits == 0) chunk = next(), bits = 6;
      --bits;
      if ((chunk >> bits) & 1U) g.set_edge(i, j);
    }
  if (pos != s.size()) throw ParseError("graph6 string has trailing bytes");
  return g;
}

inline std::string to_graph6(const Graph& g) {
  if (!g.is_simple()) throw InvalidArgument("graph6 needs a simple undirected graph");
  std::string out;
  std::size_t n = g.size();
  if (n < 63) {
    out += static_cast<char>(63 + n);
  } else if (n < 258048) {
    out += static_cast<char>(126);
    for (int k = 2; k >= 0; --k) out += static_cast<char>(63 + ((n >> (6 * k)) & 63));
  } else {
    throw InvalidArgument("graph too large for graph6 output");
  }
  std::uint32_t chunk = 0;
  int bits = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++bits == 6) out += static_cast<char>(63 + chunk), chunk = 0, bits = 0;
    }
  if (bits) out += static_cast<char>(63 + (chunk << (6 - bits)));
  return out;
}

enum class GraphFormat { edgelist, graph6 };

inline Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::graph6 ? parse_graph6(text) : parse_edgelist(text);
}

// ---------------------------------------------------------------- families

namespace family {

inline Graph trivial(std::size_t n) { return Graph(n); }

inline Graph path(std::size_t n) {
  if (n < 1) throw InvalidArgument("path needs n >= 1");
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.set_edge(i, i + 1);
  return g;
}

inline Graph cycle(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle needs n >= 3");
  Graph g = path(n);
  g.set_edge(0, n - 1);
  return g;
}

inline Graph complete(std::size_t n) {
  if (n < 1) throw InvalidArgument("complete needs n >= 1");
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.set_edge(i, j);
  return g;
}

/// Copies h's arcs into g with h's bases shifted past g's; returns the
/// index of h's first vertex in the result.
inline std::size_t append_shifted(Graph& g, const Graph& h) {
  std::uint32_t shift = g.max_base();
  std::size_t first = g.size();
  for (auto v : h.vertices()) g.add_vertex({v.base + shift, v.copy});
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = 0; j < h.size(); ++j)
      if (i != j && h.weight(i, j) != 0) g.set_weight(first + i, first + j, h.weight(i, j));
  return first;
}

inline Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph r = g;
  append_shifted(r, h);
  return r;
}

inline Graph join(const Graph& g, const Graph& h) {
  Graph r = g;
  std::size_t first = append_shifted(r, h);
  for (std::size_t i = 0; i < first; ++i)
    for (std::size_t j = first; j < r.size(); ++j) r.set_edge(i, j);
  return r;
}

/// Th1 = v1, Th_{2k} = v_{2k} joined to Th_{2k-1}, Th_{2k+1} = v_{2k+1}
/// disjoint from Th_{2k}. Vertex v_i is labelled i.
inline Graph threshold(std::size_t n) {
  if (n < 1) throw InvalidArgument("threshold needs n >= 1");
  Graph g(n);
  for (std::size_t k = 2; k <= n; ++k)
    if (k % 2 == 0)
      for (std::size_t i = 0; i + 1 < k; ++i) g.set_edge(k - 1, i);
  return g;
}

/// 3-cube on v1..v8; v_{i+1} carries the binary label i.
inline Graph hypercube3() {
  Graph g(8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t b = 0; b < 3; ++b) {
      std::size_t j = i ^ (std::size_t{1} << b);
      if (i < j) g.set_edge(i, j);
    }
  return g;
}

}  // namespace family

// ---------------------------------------------------------------- twins

/// Adds k copies of vertex v (index) after all existing vertices. Copies
/// inherit v's in- and out-weights; replication also joins v and all its
/// copies pairwise with weight 1.
inline Graph duplicate_replicate(const Graph& g, std::size_t v, std::size_t k, TwinKind kind) {
  if (v >= g.size()) throw InvalidArgument("vertex index out of range");
  if (k < 1) throw InvalidArgument("copy count must be positive");
  Graph r = g;
  Vertex base = g.vertex(v);
  std::uint32_t next_copy = 0;
  for (auto u : g.vertices())
    if (u.base == base.base) next_copy = std::max(next_copy, u.copy + 1);
  std::vector<std::size_t> clique{v};
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t nv = r.add_vertex({base.base, next_copy + static_cast<std::uint32_t>(c)});
    for (std::size_t u = 0; u < g.size(); ++u) {
      if (u == v) continue;
      if (auto w = g.weight(v, u)) r.set_weight(nv, u, w);
      if (auto w = g.weight(u, v)) r.set_weight(u, nv, w);
    }
    clique.push_back(nv);
  }
  if (kind == TwinKind::replicate)
    for (std::size_t a = 0; a < clique.size(); ++a)
      for (std::size_t b = a + 1; b < clique.size(); ++b) r.set_edge(clique[a], clique[b], 1);
  return r;
}

inline Graph duplicate_replicate(const Graph& g, Vertex v, std::size_t k, TwinKind kind) {
  return duplicate_replicate(g, g.index_of(v), k, kind);
}

/// Integer vector indexed by the vertices of a graph.
struct TwinVector {
  std::map<Vertex, std::int64_t> entries;

  std::int64_t at(Vertex v) const {
    auto it = entries.find(v);
    return it == entries.end() ? 0 : it->second;
  }

  /// Componentwise sign.
  TwinVector support() const {
    TwinVector s;
    for (auto [v, d] : entries)
      if (d != 0) s.entries[v] = d > 0 ? 1 : -1;
    return s;
  }

  bool is_zero() const {
    return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.second == 0; });
  }

  /// Dense form in the vertex order of g.
  std::vector<std::int64_t> dense(const Graph& g) const {
    for (const auto& [v, d] : entries)
      if (!g.find(v)) throw InvalidArgument("twin vector names unknown vertex " + criticalis::to_string(v));
    std::vector<std::int64_t> out;
    for (auto v : g.vertices()) out.push_back(at(v));
    return out;
  }

  static TwinVector from_dense(const Graph& g, const std::vector<std::int64_t>& d) {
    if (d.size() != g.size()) throw InvalidArgument("twin vector length differs from vertex count");
    TwinVector t;
    for (std::size_t i = 0; i < d.size(); ++i)
      if (d[i] != 0) t.entries[g.vertex(i)] = d[i];
    return t;
  }

  std::string to_string() const {
    std::string s;
    for (auto [v, d] : entries) {
      if (d == 0) continue;
      if (!s.empty()) s += ',';
      s += criticalis::to_string(v) + ":" + std::to_string(d);
    }
    return s;
  }
};

/// Parses `v1:-1,v2:2` (whitespace ignored, omitted vertices are 0).
inline TwinVector parse_twin_vector(std::string_view text) {
  TwinVector t;
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  std::size_t start = 0;
  while (start < s.size()) {
    auto end = s.find(',', start);
    if (end == std::string::npos) end = s.size();
    std::string item = s.substr(start, end - start);
    auto colon = item.find(':');
    if (colon == std::string::npos) throw ParseError("twin vector entry without ':' in '" + std::string(text) + "'");
    Vertex v = parse_vertex(item.substr(0, colon));
    std::string num = item.substr(colon + 1);
    std::int64_t d;
    try {
      std::size_t pos;
      d = std::stoll(num, &pos);
      if (pos != num.size()) throw ParseError("bad twin vector value '" + num + "'");
    } catch (const std::logic_error&) {
      throw ParseError("bad twin vector value '" + num + "'");
    }
    if (t.entries.contains(v)) throw ParseError("vertex repeated in twin vector: " + to_string(v));
    t.entries[v] = d;
    start = end + 1;
  }
  return t;
}

/// G^d: v is duplicated d_v times when d_v > 0 and replicated -d_v times when
/// d_v < 0, in vertex order.
inline Graph blowup(const Graph& g, const TwinVector& d) {
  auto dense = d.dense(g);
  Graph r = g;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (dense[i] > 0) r = duplicate_replicate(r, i, static_cast<std::size_t>(dense[i]), TwinKind::duplicate);
    if (dense[i] < 0) r = duplicate_replicate(r, i, static_cast<std::size_t>(-dense[i]), TwinKind::replicate);
  }
  return r;
}

struct TwinPair {
  std::size_t u, v;
  TwinKind kind;
  friend bool operator==(const TwinPair&, const TwinPair&) = default;
};

/// Pairs with identical weight rows and columns off {u, v}: duplicated when
/// no arc joins them, replicated when joined by symmetric weight-1 arcs.
inline std::vector<TwinPair> twin_pairs(const Graph& g) {
  std::vector<TwinPair> out;
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = u + 1; v < g.size(); ++v) {
      bool same = true;
      for (std::size_t w = 0; w < g.size() && same; ++w) {
        if (w == u || w == v) continue;
        same = g.weight(u, w) == g.weight(v, w) && g.weight(w, u) == g.weight(w, v);
      }
      if (!same) continue;
      if (g.weight(u, v) == 0 && g.weight(v, u) == 0) out.push_back({u, v, TwinKind::duplicate});
      else if (g.weight(u, v) == 1 && g.weight(v, u) == 1) out.push_back({u, v, TwinKind::replicate});
    }
  return out;
}

inline bool is_twin_free(const Graph& g) { return twin_pairs(g).empty(); }

// ---------------------------------------------------------------- structure

/// Connected components of the underlying undirected graph (indices sorted).
inline std::vector<std::vector<std::size_t>> components(const Graph& g) {
  std::vector<int> comp(g.size(), -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s}, members;
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (std::size_t w = 0; w < g.size(); ++w)
        if (comp[w] < 0 && g.adjacent(u, w)) comp[w] = comp[s], stack.push_back(w);
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

inline bool is_connected(const Graph& g) { return g.size() <= 1 || components(g).size() == 1; }

inline Graph complement(const Graph& g) {
  if (!g.is_simple()) throw InvalidArgument("complement needs a simple graph");
  Graph c = g.induced([&] {
    std::vector<std::size_t> all(g.size());
    std::iota(all.begin(), all.end(), 0);
    return all;
  }());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (i != j) c.set_weight(i, j, g.adjacent(i, j) ? 0 : 1);
  return c;
}

inline bool is_complete(const Graph& g) {
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!g.adjacent(i, j)) return false;
  return true;
}

namespace detail {
inline std::size_t max_clique_in(const Graph& g, bool want_adjacent) {
  std::size_t n = g.size(), best = 0;
  if (n > 24) throw InvalidArgument("clique search limited to 24 vertices");
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    auto c = static_cast<std::size_t>(std::popcount(mask));
    if (c <= best) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      if (mask >> i & 1U)
        for (std::size_t j = i + 1; j < n && ok; ++j)
          if (mask >> j & 1U) ok = g.adjacent(i, j) == want_adjacent;
    if (ok) best = c;
  }
  return best;
}
}  // namespace detail

inline std::size_t clique_number(const Graph& g) { return detail::max_clique_in(g, true); }
inline std::size_t independence_number(const Graph& g) { return detail::max_clique_in(g, false); }

// ---------------------------------------------------------------- cotrees

struct Cotree {
  enum class Kind { leaf, disjoint_union, join };
  Kind kind = Kind::leaf;
  Vertex vertex{};
  std::vector<Cotree> children;

  std::size_t leaf_count() const {
    if (kind == Kind::leaf) return 1;
    std::size_t n = 0;
    for (const auto& c : children) n += c.leaf_count();
    return n;
  }

  /// Number of edges on the longest root-to-leaf path.
  std::size_t height() const {
    std::size_t h = 0;
    for (const auto& c : children) h = std::max(h, c.height() + 1);
    return h;
  }

  std::vector<Vertex> leaves() const {
    if (kind == Kind::leaf) return {vertex};
    std::vector<Vertex> out;
    for (const auto& c : children) {
      auto l = c.leaves();
      out.insert(out.end(), l.begin(), l.end());
    }
    return out;
  }

  /// U(...) for unions, J(...) for joins, vertex labels at leaves.
  std::string to_string() const {
    if (kind == Kind::leaf) return criticalis::to_string(vertex);
    std::string s = kind == Kind::join ? "J(" : "U(";
    for (std::size_t i = 0; i < children.size(); ++i) s += (i ? "," : "") + children[i].to_string();
    return s + ")";
  }

  friend bool operator==(const Cotree&, const Cotree&) = default;
};

namespace detail {

// Children ordered by (leaf count descending, text) for a canonical form.
inline void canonicalize(Cotree& t) {
  for (auto& c : t.children) canonicalize(c);
  std::sort(t.children.begin(), t.children.end(), [](const Cotree& a, const Cotree& b) {
    auto la = a.leaf_count(), lb = b.leaf_count();
    if (la != lb) return la > lb;
    return a.to_string() < b.to_string();
  });
}

inline std::optional<Cotree> build_cotree(const Graph& g, const std::vector<std::size_t>& verts) {
  if (verts.size() == 1) return Cotree{Cotree::Kind::leaf, g.vertex(verts[0]), {}};
  Graph sub = g.induced(verts);
  for (int pass = 0; pass < 2; ++pass) {
    Graph h = pass == 0 ? sub : complement(sub);
    auto comps = components(h);
    if (comps.size() < 2) continue;
    Cotree node;
    node.kind = pass == 0 ? Cotree::Kind::disjoint_union : Cotree::Kind::join;
    for (const auto& c : comps) {
      std::vector<std::size_t> sv;
      for (auto i : c) sv.push_back(verts[i]);
      auto child = build_cotree(g, sv);
      if (!child) return std::nullopt;
      node.children.push_back(std::move(*child));
    }
    return node;
  }
  return std::nullopt;
}

}  // namespace detail

/// Canonical cotree of a simple graph, or nullopt when the graph contains an
/// induced P4.
inline std::optional<Cotree> cotree(const Graph& g) {
  if (!g.is_simple()) throw InvalidArgument("cotree needs a simple undirected graph");
  if (g.size() == 0) throw InvalidArgument("cotree of the empty graph");
  std::vector<std::size_t> all(g.size());
  std::iota(all.begin(), all.end(), 0);
  auto t = detail::build_cotree(g, all);
  if (t) detail::canonicalize(*t);
  return t;
}

/// Rebuilds the cograph of a cotree; vertices appear in leaf order.
inline Graph graph_from_cotree(const Cotree& t) {
  auto leaves = t.leaves();
  Graph g;
  for (auto v : leaves) g.add_vertex(v);
  std::function<std::vector<std::size_t>(const Cotree&)> walk = [&](const Cotree& node) {
    if (node.kind == Cotree::Kind::leaf) return std::vector<std::size_t>{g.index_of(node.vertex)};
    std::vector<std::vector<std::size_t>> parts;
    for (const auto& c : node.children) parts.push_back(walk(c));
    std::vector<std::size_t> all;
    for (std::size_t a = 0; a < parts.size(); ++a) {
      if (node.kind == Cotree::Kind::join)
        for (std::size_t b = a + 1; b < parts.size(); ++b)
          for (auto u : parts[a])
            for (auto w : parts[b]) g.set_edge(u, w);
      all.insert(all.end(), parts[a].begin(), parts[a].end());
    }
    return all;
  };
  walk(t);
  return g;
}

}  // namespace criticalis
