#pragma once

// Conjecture scans over graph6 streams: per-graph records and a summary.

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "criticalis/critical.hpp"
#include "criticalis/sgraph.hpp"
#include "criticalis/verify.hpp"

namespace criticalis::scan {

enum class Conjecture { twinfree_bound, tree_bound };

inline Conjecture parse_conjecture(std::string_view s) {
  if (s == "twinfree-bound") return Conjecture::twinfree_bound;
  if (s == "tree-bound") return Conjecture::tree_bound;
  throw InvalidArgument("unknown conjecture '" + std::string(s) + "' (expected twinfree-bound or tree-bound)");
}

inline std::string to_string(Conjecture c) { return c == Conjecture::twinfree_bound ? "twinfree-bound" : "tree-bound"; }

inline bool is_tree(const Graph& g) { return g.size() >= 1 && is_connected(g) && g.edge_count() + 1 == g.size(); }

struct ScanRecord {
  std::string graph6;
  std::size_t n = 0;
  bool twin_free = false;
  std::size_t gamma = 0;
  std::size_t threshold = 0;
  /// False when the bound does not apply (twins, not a tree, or a tree
  /// below the four-vertex base case).
  bool applicable = false;
  bool pass = true;
};

/// floor(n/2) for the twin-free bound, ceil((n+2)/2) for the tree bound.
inline std::size_t threshold(Conjecture c, std::size_t n) { return c == Conjecture::twinfree_bound ? n / 2 : (n + 3) / 2; }

inline ScanRecord scan_graph(const Graph& g, Conjecture c, const CorankOptions& opt = {}, Ring ring = Ring::integers()) {
  if (!g.is_simple()) throw PreconditionViolation("scans take simple graphs");
  ScanRecord r;
  r.graph6 = to_graph6(g);
  r.n = g.size();
  r.twin_free = is_twin_free(g);
  r.threshold = threshold(c, r.n);
  r.applicable = r.twin_free && (c == Conjecture::twinfree_bound || (is_tree(g) && r.n >= 2));
  r.gamma = corank(g, ring, opt).gamma;
  r.pass = !r.applicable || r.gamma >= r.threshold;
  return r;
}

struct ScanSummary {
  std::size_t records = 0;     // graphs scanned in this run
  std::size_t resumed = 0;     // graphs already present in the output
  std::size_t skipped = 0;     // malformed lines
  std::size_t applicable = 0;
  std::size_t violations = 0;
  std::vector<std::string> warnings;
};

struct ScanOptions {
  Conjecture conjecture = Conjecture::twinfree_bound;
  CorankOptions corank{};
  Ring ring = Ring::integers();
  std::size_t jobs = 1;
  std::size_t chunk = 64;
  /// graph6 strings already recorded by an earlier run.
  std::set<std::string> done;
};

/// Scans graph6 lines, skipping blanks, '>>graph6<<' headers and entries in
/// opt.done; emit(record) is called in input order.
inline ScanSummary run(const std::vector<std::string>& lines, const ScanOptions& opt,
                       const std::function<void(const ScanRecord&)>& emit) {
  ScanSummary s;
  std::vector<Graph> pending;
  auto flush = [&] {
    auto recs = verify::parallel_map<ScanRecord>(opt.jobs, pending.size(), [&](std::size_t i) {
      return scan_graph(pending[i], opt.conjecture, opt.corank, opt.ring);
    });
    for (const auto& r : recs) {
      ++s.records;
      s.applicable += r.applicable;
      s.violations += !r.pass;
      emit(r);
    }
    pending.clear();
  };
  std::size_t lineno = 0;
  for (const auto& raw : lines) {
    ++lineno;
    std::string line = raw;
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    if (line.empty()) continue;
    if (line.starts_with(">>graph6<<")) line = line.substr(10);
    try {
      Graph g = parse_graph6(line);
      if (g.size() == 0) throw ParseError("empty graph");
      if (!g.is_simple()) throw ParseError("not a simple graph");
      if (opt.done.count(to_graph6(g))) {
        ++s.resumed;
        continue;
      }
      pending.push_back(std::move(g));
    } catch (const Error& e) {
      ++s.skipped;
      s.warnings.push_back("line " + std::to_string(lineno) + ": " + e.what());
    }
    if (pending.size() >= opt.chunk) flush();
  }
  flush();
  return s;
}

}  // namespace criticalis::scan
