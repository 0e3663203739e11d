#pragma once

// Invariant suites: each one checks a structural property of critical ideals
// over an exhaustive or seeded-random family of small graphs.

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "criticalis/builtin.hpp"
#include "criticalis/critical.hpp"
#include "criticalis/enumerate.hpp"
#include "criticalis/matrix.hpp"
#include "criticalis/sgraph.hpp"

namespace criticalis::verify {

struct Config {
  CorankOptions corank{};
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  Ring ring = Ring::integers();
};

struct CaseResult {
  bool ok = true;
  std::string message;  // failure description, empty when ok
};

struct SuiteReport {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> messages;  // first few failures

  bool passed() const { return failures == 0 && cases > 0; }

  void add(const CaseResult& r) {
    ++cases;
    if (r.ok) return;
    ++failures;
    if (messages.size() < 20) messages.push_back(r.message);
  }
};

/// Runs fn(0..count-1) on `jobs` threads; results are returned in index order.
template <class T, class F>
std::vector<T> parallel_map(std::size_t jobs, std::size_t count, F&& fn) {
  std::vector<T> out(count);
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        out[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < std::min(jobs, count); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

namespace detail {

inline SuiteReport run(const std::string& name, const Config& cfg, std::size_t count,
                       const std::function<CaseResult(std::size_t)>& fn) {
  SuiteReport rep;
  rep.name = name;
  for (const auto& r : parallel_map<CaseResult>(cfg.jobs, count, fn)) rep.add(r);
  return rep;
}

inline CaseResult fail(std::string msg) { return {false, std::move(msg)}; }

inline std::string describe(const Graph& g) { return g.is_simple() ? to_graph6(g) : to_edgelist(g); }

inline Graph random_simple(std::mt19937_64& rng, std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng() & 1U) g.set_edge(i, j);
  return g;
}

inline Polynomial random_entry(std::mt19937_64& rng, Ring ring, std::uint32_t nvars) {
  Polynomial p = Polynomial::constant(ring, static_cast<long>(rng() % 5) - 2);
  if (rng() % 2) p += Polynomial::variable(ring, Var{static_cast<std::uint32_t>(1 + rng() % nvars), 0});
  return p;
}

inline SymbolicMatrix random_matrix(std::mt19937_64& rng, Ring ring, std::size_t r, std::size_t c) {
  SymbolicMatrix m(r, c, ring);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, random_entry(rng, ring, 4));
  return m;
}

// Simple graphs with min_n..max_n vertices up to isomorphism.
inline std::vector<Graph> small_family(std::size_t max_n, bool connected_only, std::size_t min_n = 2) {
  std::vector<Graph> gs;
  for (std::size_t n = min_n; n <= max_n; ++n)
    for (auto& g : enumerate::simple_graphs(n, connected_only)) gs.push_back(std::move(g));
  return gs;
}

}  // namespace detail

/// det J(P, a; Q, b) by the block formula equals cofactor and Bareiss
/// determinants, on random joins of total size at most 6.
inline SuiteReport joindet(const Config& cfg = {}, std::size_t samples = 300) {
  return detail::run("joindet", cfg, samples, [&](std::size_t t) -> CaseResult {
    std::mt19937_64 rng(cfg.seed * 1000003 + t);
    std::size_t total = 1 + rng() % 6;
    std::size_t p1 = rng() % (total + 1), p2 = rng() % (total + 1);
    std::size_t q1 = total - p1, q2 = total - p2;
    auto P = detail::random_matrix(rng, cfg.ring, p1, p2), Q = detail::random_matrix(rng, cfg.ring, q1, q2);
    std::vector<Polynomial> a, b;
    for (std::size_t i = 0; i < q1; ++i) a.push_back(detail::random_entry(rng, cfg.ring, 4));
    for (std::size_t j = 0; j < q2; ++j) b.push_back(detail::random_entry(rng, cfg.ring, 4));
    auto J = join_matrix(P, a, Q, b);
    auto oracle = cofactor_determinant(J);
    auto got = join_determinant(P, a, Q, b);
    if (got != oracle)
      return detail::fail("join " + std::to_string(p1) + "x" + std::to_string(p2) + " / " + std::to_string(q1) + "x" +
                          std::to_string(q2) + ": block formula " + got.to_string() + " vs cofactor " + oracle.to_string());
    if (bareiss_determinant(J) != oracle) return detail::fail("Bareiss disagrees with cofactor expansion");
    return {};
  });
}

/// I_{i+1}(G) is contained in I_i(G) for all graphs with at most max_n vertices.
inline SuiteReport chain(const Config& cfg = {}, std::size_t max_n = 5) {
  auto gs = enumerate::simple_graphs_up_to(max_n);
  for (auto name : {"fig2", "fig6", "fig7"}) gs.push_back(builtin::by_name(name));
  return detail::run("chain", cfg, gs.size(), [&](std::size_t t) -> CaseResult {
    const Graph& g = gs[t];
    auto ladder = ideal_ladder(g, cfg.ring);
    for (std::size_t i = 1; i < g.size(); ++i) {
      auto basis = strong_groebner(ladder[i], cfg.corank.gb, ladder[i + 1].variables());
      if (!ideal_subset(ladder[i + 1], basis))
        return detail::fail(detail::describe(g) + ": I_" + std::to_string(i + 1) + " not inside I_" + std::to_string(i));
    }
    return {};
  });
}

/// For every induced subgraph H of every graph G with at most max_n
/// vertices, I_i(H) is inside I_i(G) and gamma(H) <= gamma(G).
inline SuiteReport subgraph_containment(const Config& cfg = {}, std::size_t max_n = 5) {
  auto gs = enumerate::simple_graphs_up_to(max_n);
  return detail::run("subgraph-containment", cfg, gs.size(), [&](std::size_t t) -> CaseResult {
    const Graph& g = gs[t];
    const std::size_t n = g.size();
    auto ladder = ideal_ladder(g, cfg.ring);
    std::vector<std::optional<StrongBasis>> bases(n + 1);
    auto gamma_g = corank(g, cfg.ring, cfg.corank).gamma;
    for (std::uint32_t mask = 1; mask + 1 < (1U << n); ++mask) {
      std::vector<std::size_t> keep;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1U) keep.push_back(i);
      Graph h = g.induced(keep);
      auto hl = ideal_ladder(h, cfg.ring);
      for (std::size_t i = 1; i <= h.size(); ++i) {
        if (!bases[i]) bases[i] = strong_groebner(ladder[i], cfg.corank.gb, ladder[1].variables());
        if (!ideal_subset(hl[i], *bases[i]))
          return detail::fail(detail::describe(g) + ": I_" + std::to_string(i) + " of the subgraph on mask " +
                              std::to_string(mask) + " escapes");
      }
      if (corank(h, cfg.ring, cfg.corank).gamma > gamma_g)
        return detail::fail(detail::describe(g) + ": induced subgraph has larger gamma");
    }
    return {};
  });
}

/// Triviality of I_j(G^delta) by direct minor enumeration agrees with
/// triviality of I_j(G, X)|_{X = phi(delta)} for all graphs with 1..max_n
/// vertices and all delta in {0, +-1}^V.
inline SuiteReport thm_rd(const Config& cfg = {}, std::size_t max_n = 4, bool connected_only = true) {
  auto gs = detail::small_family(max_n, connected_only, 1);
  struct Task {
    std::size_t g;
    std::vector<std::int64_t> delta;
  };
  std::vector<Task> tasks;
  for (std::size_t t = 0; t < gs.size(); ++t) {
    std::size_t n = gs[t].size(), total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<std::int64_t> d(n);
      for (std::size_t i = 0, c = code; i < n; ++i, c /= 3) d[i] = static_cast<std::int64_t>(c % 3) - 1;
      tasks.push_back({t, d});
    }
  }
  return detail::run("thm-rd", cfg, tasks.size(), [&](std::size_t t) -> CaseResult {
    const Graph& g = gs[tasks[t].g];
    auto d = TwinVector::from_dense(g, tasks[t].delta);
    Graph big = blowup(g, d);
    for (std::size_t j = 1; j <= g.size(); ++j) {
      bool direct = is_trivial_ideal(critical_ideal_generators(big, j, cfg.ring), cfg.corank.gb);
      bool fast = is_trivial_ideal(evaluated_critical_ideal(g, j, phi(g, d), cfg.ring), cfg.corank.gb);
      if (direct != fast)
        return detail::fail(detail::describe(g) + " d=" + d.to_string() + " j=" + std::to_string(j) + ": direct " +
                            std::to_string(direct) + " vs evaluated " + std::to_string(fast));
    }
    return {};
  });
}

/// gamma(G^d) = gamma(G^supp(d)) with both blowups built, on random simple
/// graphs with 2..max_n vertices and |d_v| <= max_d.
inline SuiteReport cor_bound(const Config& cfg = {}, std::size_t samples = 200, std::size_t max_n = 4, std::int64_t max_d = 3) {
  return detail::run("cor-bound", cfg, samples, [&](std::size_t t) -> CaseResult {
    std::mt19937_64 rng(cfg.seed * 7919 + t);
    std::size_t n = 2 + rng() % (max_n - 1);
    Graph g = detail::random_simple(rng, n);
    std::vector<std::int64_t> d(n);
    for (auto& x : d) x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * max_d + 1)) - max_d;
    auto tv = TwinVector::from_dense(g, d);
    auto a = corank(blowup(g, tv), cfg.ring, cfg.corank).gamma;
    auto b = corank(blowup(g, tv.support()), cfg.ring, cfg.corank).gamma;
    if (a != b)
      return detail::fail(detail::describe(g) + " d=" + tv.to_string() + ": gamma " + std::to_string(a) +
                          " vs support " + std::to_string(b));
    if (a > n) return detail::fail(detail::describe(g) + " d=" + tv.to_string() + ": gamma exceeds n");
    return {};
  });
}

/// Containments I_j(d(G,v)) in <x_v, x_v1, I_j(G)|x_v=0> and the replicate
/// analogue, with the triviality equivalence, for 1 <= j <= n.
inline SuiteReport lemma_dr(const Config& cfg = {}, std::size_t max_n = 4) {
  auto gs = detail::small_family(max_n, false);
  for (auto name : {"fig2", "fig6"}) gs.push_back(builtin::by_name(name));
  return detail::run("lemma-dr", cfg, gs.size(), [&](std::size_t t) -> CaseResult {
    const Graph& g = gs[t];
    const Ring ring = cfg.ring;
    for (std::size_t v = 0; v < g.size(); ++v)
      for (auto kind : {TwinKind::duplicate, TwinKind::replicate}) {
        const std::int64_t c = twin_constant(kind);
        Graph tw = duplicate_replicate(g, v, 1, kind);
        auto vars = copy_variables(g, v, 1);
        for (std::size_t j = 1; j <= g.size(); ++j) {
          auto ev = evaluated_critical_ideal(g, j, {{v, c}}, ring);
          std::vector<Polynomial> gens = ev.generators;
          for (auto x : vars) gens.push_back(Polynomial::variable(ring, x) - Polynomial::constant(ring, c));
          Ideal super = Ideal::make(ring, gens);
          Ideal direct = critical_ideal_generators(tw, j, ring);
          if (!ideal_subset(direct, super, cfg.corank.gb))
            return detail::fail(detail::describe(g) + " v=" + std::to_string(v + 1) + " j=" + std::to_string(j) +
                                ": twin ideal escapes the superset");
          if (is_trivial_ideal(direct, cfg.corank.gb) != is_trivial_ideal(ev, cfg.corank.gb))
            return detail::fail(detail::describe(g) + " v=" + std::to_string(v + 1) + " j=" + std::to_string(j) +
                                ": triviality differs from the evaluation");
        }
      }
    return {};
  });
}

/// The expanded generator families of I_j(d^k(G,v)) and I_j(r^k(G,v)) equal
/// direct enumeration for k <= max_k and all 1 <= j <= n + k. Edgeless graphs
/// are skipped: there the replicate family omits the off-diagonal minors of
/// the clique on v and its copies (see the unit tests).
inline SuiteReport lemma_gen(const Config& cfg = {}, std::size_t max_n = 4, std::size_t max_k = 2) {
  std::vector<Graph> gs;
  for (auto& g : detail::small_family(max_n, false))
    if (g.edge_count() > 0) gs.push_back(std::move(g));
  for (auto name : {"fig2", "fig6"}) gs.push_back(builtin::by_name(name));
  return detail::run("lemma-gen", cfg, gs.size(), [&](std::size_t t) -> CaseResult {
    const Graph& g = gs[t];
    for (std::size_t v = 0; v < g.size(); ++v)
      for (auto kind : {TwinKind::duplicate, TwinKind::replicate})
        for (std::size_t k = 1; k <= max_k; ++k) {
          Graph big = duplicate_replicate(g, v, k, kind);
          for (std::size_t j = 1; j <= g.size() + k; ++j)
            if (!ideal_equal(dup_rep_expanded_ideal(g, v, k, j, kind, cfg.ring),
                             critical_ideal_generators(big, j, cfg.ring), cfg.corank.gb))
              return detail::fail(detail::describe(g) + " v=" + std::to_string(v + 1) +
                                  (kind == TwinKind::duplicate ? " dup" : " rep") + " k=" + std::to_string(k) +
                                  " j=" + std::to_string(j) + ": expanded generators differ from direct minors");
        }
    return {};
  });
}

/// 0 <= gamma_t - gamma_v <= 2 on connected simple graphs with at most
/// max_n vertices, every vertex and both twin kinds.
inline SuiteReport stabilization_range(const Config& cfg = {}, std::size_t max_n = 5) {
  auto gs = detail::small_family(max_n, true);
  return detail::run("stabilization-range", cfg, gs.size(), [&](std::size_t t) -> CaseResult {
    const Graph& g = gs[t];
    for (std::size_t v = 0; v < g.size(); ++v)
      for (auto kind : {TwinKind::duplicate, TwinKind::replicate}) {
        auto s = stabilization_constants(g, v, kind, cfg.ring, cfg.corank);
        if (s.gamma_twin < s.gamma_removed || s.gamma_twin > s.gamma_removed + 2)
          return detail::fail(detail::describe(g) + " v=" + std::to_string(v + 1) + ": gamma_t=" +
                              std::to_string(s.gamma_twin) + " gamma_v=" + std::to_string(s.gamma_removed));
      }
    return {};
  });
}

/// Stabilized twin ideals equal direct enumeration: the two worked examples
/// for k in {1, 2}, i in {0, 1, 2}, and every graph with 2..max_n vertices
/// and gamma >= 2 for k = 1, i in {0, 1}.
inline SuiteReport thm_deq_req(const Config& cfg = {}, std::size_t max_n = 4) {
  struct Task {
    Graph g;
    std::size_t v, k, i;
    TwinKind kind;
  };
  std::vector<Task> tasks;
  for (std::size_t k = 1; k <= 2; ++k)
    for (std::size_t i = 0; i <= 2; ++i) {
      tasks.push_back({builtin::fig6(), 0, k, i, TwinKind::duplicate});
      tasks.push_back({builtin::fig7(), 0, k, i, TwinKind::replicate});
    }
  for (auto& g : detail::small_family(max_n, false)) {
    if (corank(g, cfg.ring, cfg.corank).gamma < 2) continue;
    for (std::size_t v = 0; v < g.size(); ++v)
      for (auto kind : {TwinKind::duplicate, TwinKind::replicate})
        for (std::size_t i = 0; i <= 1; ++i) tasks.push_back({g, v, 1, i, kind});
  }
  return detail::run("thm-deq-req", cfg, tasks.size(), [&](std::size_t t) -> CaseResult {
    const auto& task = tasks[t];
    auto s = stabilization_constants(task.g, task.v, task.kind, cfg.ring, cfg.corank);
    auto formula = stabilized_twin_ideal(task.g, task.v, task.k, task.i, task.kind, s, cfg.ring);
    Graph big = duplicate_replicate(task.g, task.v, task.k + s.lambda + task.i, task.kind);
    auto direct = critical_ideal_generators(big, s.gamma_twin + task.k, cfg.ring);
    if (!ideal_equal(formula, direct, cfg.corank.gb))
      return detail::fail(detail::describe(task.g) + " v=" + std::to_string(task.v + 1) +
                          (task.kind == TwinKind::duplicate ? " dup" : " rep") + " k=" + std::to_string(task.k) +
                          " i=" + std::to_string(task.i) + ": stabilized form differs");
    return {};
  });
}

/// Closed forms against direct enumeration: complete bipartite graphs with
/// 2 <= n <= m <= max_m, complete graphs K_3..K_max_complete, trivial graphs,
/// and the disjoint-union composition on `union_pairs` random pairs.
inline SuiteReport closed_forms(const Config& cfg = {}, std::size_t max_m = 4, std::size_t max_complete = 5,
                                std::size_t union_pairs = 50) {
  struct Task {
    int kind;
    std::size_t a, b, j;
  };
  std::vector<Task> tasks;
  for (std::size_t n = 2; n <= max_m; ++n)
    for (std::size_t m = n; m <= max_m; ++m)
      for (std::size_t j = 2; j <= n + m; ++j) tasks.push_back({0, n, m, j});
  for (std::size_t n = 3; n <= max_complete; ++n)
    for (std::size_t j = n - 1; j <= n; ++j) tasks.push_back({1, n, 0, j});
  for (std::size_t k = 1; k <= 4; ++k)
    for (std::size_t l = 1; l <= k; ++l) tasks.push_back({2, k, 0, l});
  for (std::size_t p = 0; p < union_pairs; ++p) tasks.push_back({3, p, 0, 0});
  const Ring ring = cfg.ring;
  return detail::run("closed-forms", cfg, tasks.size(), [&](std::size_t t) -> CaseResult {
    const auto& task = tasks[t];
    auto gb = cfg.corank.gb;
    switch (task.kind) {
      case 0: {
        auto direct = critical_ideal_generators(complete_bipartite(task.a, task.b), task.j, ring);
        if (!ideal_equal(bipartite_ideal(task.a, task.b, task.j, ring), direct, gb))
          return detail::fail("K_{" + std::to_string(task.a) + "," + std::to_string(task.b) + "} j=" + std::to_string(task.j));
        return {};
      }
      case 1: {
        auto direct = critical_ideal_generators(family::complete(task.a), task.j, ring);
        if (!ideal_equal(complete_graph_ideal(task.a, task.j, ring), direct, gb))
          return detail::fail("K_" + std::to_string(task.a) + " j=" + std::to_string(task.j));
        return {};
      }
      case 2: {
        auto direct = critical_ideal_generators(family::trivial(task.a), task.j, ring);
        if (!ideal_equal(trivial_graph_ideal(task.a, task.j, ring), direct, gb))
          return detail::fail("T_" + std::to_string(task.a) + " l=" + std::to_string(task.j));
        return {};
      }
      default: {
        std::mt19937_64 rng(cfg.seed * 104729 + task.a);
        Graph g = detail::random_simple(rng, 1 + rng() % 4);
        Graph h0 = detail::random_simple(rng, 1 + rng() % 4);
        Graph u = family::disjoint_union(g, h0);
        std::vector<std::size_t> right;
        for (std::size_t i = g.size(); i < u.size(); ++i) right.push_back(i);
        Graph h = u.induced(right);
        auto lg = ideal_ladder(g, ring), lh = ideal_ladder(h, ring);
        for (std::size_t j = 1; j <= u.size(); ++j)
          if (!ideal_equal(disjoint_union_ideal(lg, lh, j), critical_ideal_generators(u, j, ring), gb))
            return detail::fail("union " + detail::describe(g) + " + " + detail::describe(h0) + " j=" + std::to_string(j));
        return {};
      }
    }
  });
}

/// gamma(G + H) = gamma(G) + gamma(H) for all pairs of graphs with 1..max_n
/// vertices.
inline SuiteReport union_additivity(const Config& cfg = {}, std::size_t max_n = 4) {
  auto gs = enumerate::simple_graphs_up_to(max_n);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < gs.size(); ++a)
    for (std::size_t b = a; b < gs.size(); ++b) pairs.emplace_back(a, b);
  std::vector<std::size_t> gam(gs.size());
  for (std::size_t i = 0; i < gs.size(); ++i) gam[i] = corank(gs[i], cfg.ring, cfg.corank).gamma;
  return detail::run("union-additivity", cfg, pairs.size(), [&](std::size_t t) -> CaseResult {
    auto [a, b] = pairs[t];
    auto got = corank(family::disjoint_union(gs[a], gs[b]), cfg.ring, cfg.corank).gamma;
    if (got != gam[a] + gam[b])
      return detail::fail(detail::describe(gs[a]) + " + " + detail::describe(gs[b]) + ": gamma " + std::to_string(got) +
                          " vs " + std::to_string(gam[a] + gam[b]));
    return {};
  });
}

/// gamma <= 2(n - omega) + 1 and gamma <= 2(n - alpha) on connected simple
/// graphs with at most max_n vertices.
inline SuiteReport bounds_clique_stability(const Config& cfg = {}, std::size_t max_n = 6) {
  auto gs = enumerate::simple_graphs_up_to(max_n, true);
  return detail::run("bounds-clique-stability", cfg, gs.size(), [&](std::size_t t) -> CaseResult {
    const Graph& g = gs[t];
    auto gamma = corank(g, cfg.ring, cfg.corank).gamma;
    std::size_t n = g.size(), omega = clique_number(g), alpha = independence_number(g);
    if (gamma > 2 * (n - omega) + 1 || gamma > 2 * (n - alpha))
      return detail::fail(detail::describe(g) + ": gamma=" + std::to_string(gamma) + " omega=" + std::to_string(omega) +
                          " alpha=" + std::to_string(alpha));
    return {};
  });
}

/// gamma >= ceil((n + 2) / 2) on twin-free trees with 2..max_n vertices.
inline SuiteReport tree_proposition(const Config& cfg = {}, std::size_t max_n = 8) {
  std::vector<Graph> ts;
  for (std::size_t n = 2; n <= max_n; ++n)
    for (auto& t : enumerate::trees(n))
      if (is_twin_free(t)) ts.push_back(std::move(t));
  return detail::run("tree-proposition", cfg, ts.size(), [&](std::size_t t) -> CaseResult {
    const Graph& g = ts[t];
    auto gamma = corank(g, cfg.ring, cfg.corank).gamma;
    std::size_t bound = (g.size() + 3) / 2;
    if (gamma < bound)
      return detail::fail(detail::describe(g) + ": gamma=" + std::to_string(gamma) + " < " + std::to_string(bound));
    return {};
  });
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"joindet",         "chain",        "subgraph-containment", "thm-rd",
                                              "cor-bound",       "lemma-dr",     "thm-deq-req",          "closed-forms",
                                              "union-additivity", "bounds-clique-stability", "tree-proposition"};
  return names;
}

/// Runs a suite by name. lemma-dr also runs the expanded-family check and
/// thm-deq-req the stabilization range check.
inline std::vector<SuiteReport> run_suite(const std::string& name, const Config& cfg = {}) {
  if (name == "joindet") return {joindet(cfg)};
  if (name == "chain") return {chain(cfg)};
  if (name == "subgraph-containment") return {subgraph_containment(cfg)};
  if (name == "thm-rd") return {thm_rd(cfg)};
  if (name == "cor-bound") return {cor_bound(cfg)};
  if (name == "lemma-dr") return {lemma_dr(cfg), lemma_gen(cfg)};
  if (name == "thm-deq-req") return {thm_deq_req(cfg), stabilization_range(cfg)};
  if (name == "closed-forms") return {closed_forms(cfg)};
  if (name == "union-additivity") return {union_additivity(cfg)};
  if (name == "bounds-clique-stability") return {bounds_clique_stability(cfg)};
  if (name == "tree-proposition") return {tree_proposition(cfg)};
  throw InvalidArgument("unknown suite '" + name + "'");
}

}  // namespace criticalis::verify
