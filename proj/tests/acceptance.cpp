// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "criticalis/criticalis.hpp"

using namespace criticalis;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      pass_ = false;
      if (!failed_.empty()) failed_ += "; ";
      failed_ += what;
    }
  }

  Outcome outcome(const std::string& note = "") const {
    std::string d = std::to_string(checks_) + " checks";
    if (!note.empty()) d += ", " + note;
    if (!pass_) d += ", failed: " + failed_;
    return {pass_, d};
  }

 private:
  bool pass_ = true;
  std::size_t checks_ = 0;
  std::string failed_;
};

Ideal I(const std::vector<std::string>& gens, Ring r = Ring::integers()) {
  std::vector<Polynomial> ps;
  for (const auto& s : gens) ps.push_back(parse_polynomial(s, r));
  return Ideal::make(r, std::move(ps));
}

std::size_t gamma_of(const Graph& g, Ring r = Ring::integers()) { return corank(g, r).gamma; }

Outcome from_reports(const std::vector<verify::SuiteReport>& reports) {
  Outcome o;
  std::ostringstream d;
  for (const auto& r : reports) {
    if (!d.str().empty()) d << ", ";
    d << r.name << " " << r.cases << " cases " << r.failures << " failures";
    o.pass = o.pass && r.passed();
    for (const auto& m : r.messages) d << " [" << m << "]";
  }
  o.detail = d.str();
  return o;
}

// --------------------------------------------------------------- criteria

Outcome gamma_reproduction() {
  Checker c;
  c.expect(gamma_of(builtin::path3()) == 2, "P3");
  for (std::size_t n = 2; n <= 5; ++n) c.expect(gamma_of(family::complete(n)) == 1, "K" + std::to_string(n));
  c.expect(gamma_of(builtin::fig2()) == 3, "signed five-cycle");
  c.expect(gamma_of(builtin::fig4()) == 3, "six-vertex graph");
  c.expect(gamma_of(builtin::fig6()) == 2, "signed four-cycle");
  c.expect(gamma_of(builtin::fig7()) == 2, "sink graph");
  c.expect(gamma_of(duplicate_replicate(builtin::fig7(), 0, 1, TwinKind::replicate)) == 3, "r(sink graph, v1)");
  auto q3 = builtin::hypercube3();
  c.expect(gamma_of(q3) == 4, "Q3");
  c.expect(gamma_of(duplicate_replicate(q3, 7, 1, TwinKind::duplicate)) == 5, "d(Q3, v8)");
  c.expect(gamma_of(builtin::fig5()) == 3, "twin-free seven-vertex graph");
  c.expect(is_twin_free(builtin::fig5()), "seven-vertex graph twin-free");
  return c.outcome();
}

Outcome ideal_reproduction() {
  Checker c;
  auto f6 = builtin::fig6();
  c.expect(ideal_equal(critical_ideal_generators(f6, 3), I({"x2 + x4", "x1 - x3", "x3*x4 + 2"})), "four-cycle I3");
  c.expect(ideal_equal(critical_ideal_generators(f6, 4), I({"x1*x2*x3*x4 + x1*x2 + x2*x3 - x1*x4 - x3*x4 - 4"})),
           "four-cycle I4");
  auto f2 = builtin::fig2();
  c.expect(ideal_equal(critical_ideal_generators(f2, 4),
                       I({"x1*x2 + x4 + 1", "x2*x3 - x5 - 1", "x3*x4 + x1 - 1", "x4*x5 - x2 - 1", "x1*x5 + x3 + 1"})),
           "five-cycle I4");
  c.expect(ideal_equal(evaluated_critical_ideal(f2, 4, {{0, 0}}), I({"x3 + 1", "x4 + 1", "x2 + x5 + 1"})),
           "five-cycle I4 at x1=0");
  c.expect(ideal_equal(evaluated_critical_ideal(f2, 4, {{0, -1}}), I({"x3 - x5 + 1", "x2 - x4 - 1", "x4*x5 - x4 - 2"})),
           "five-cycle I4 at x1=-1");
  c.expect(ideal_equal(critical_ideal_generators(duplicate_replicate(f2, 0, 1, TwinKind::duplicate), 4),
                       I({"x1", "x1_1", "x3 + 1", "x4 + 1", "x2 + x5 + 1"})),
           "five-cycle I4(d(G,v1))");
  c.expect(ideal_equal(critical_ideal_generators(duplicate_replicate(f2, 0, 1, TwinKind::replicate), 4),
                       I({"x1 + 1", "x1_1 + 1", "x3 - x5 + 1", "x2 - x4 - 1", "x4*x5 - x4 - 2"})),
           "five-cycle I4(r(G,v1))");
  c.expect(ideal_equal(evaluated_critical_ideal(builtin::fig7(), 4, {{0, -1}}),
                       I({"x4 + 1", "x5 + 1", "x6 + 1", "x2*x3 - 1"})),
           "sink graph I4 at x1=-1");
  auto k22 = complete_bipartite(2, 2);
  c.expect(ideal_equal(critical_ideal_generators(k22, 3), I({"x1 + x1_1", "x2 + x2_1", "x1*x2"})), "K22 I3");
  c.expect(ideal_equal(critical_ideal_generators(k22, 4),
                       I({"x1*x1_1*x2*x2_1 - x1*x2 - x1*x2_1 - x1_1*x2 - x1_1*x2_1"})),
           "K22 I4");
  auto shown = I({"x3*x6", "x3*x6_1", "x4*x6", "x4*x6_1", "x3*x5", "x4*x5", "x6*(x1*x2 + 1)", "x6_1*(x1*x2 + 1)",
                  "x6*(x2*x5 - x5 - 2)", "x6_1*(x2*x5 - x5 - 2)", "x6*(x1*x5 + x5 + 2*x1)", "x6_1*(x1*x5 + x5 + 2*x1)",
                  "x6*x6_1*(x1 - 1) - 2*(x6 + x6_1)", "x6*x6_1*(x2 + 1) + 2*x2*(x6 + x6_1)",
                  "(x6*x6_1 + x6 + x6_1)*(x5 + 1) + (x6 + x6_1)", "x3*x4 + 2*x3 + 2*x4", "x3*(x1*x2 - 1)",
                  "x4*(x1*x2 - 1)", "x1*x2*x5 + 2*x1*x2 + 2*x2*x5 - x5 - 2"});
  c.expect(ideal_equal(critical_ideal_generators(duplicate_replicate(builtin::fig4(), 5, 1, TwinKind::duplicate), 5), shown),
           "six-vertex I5(d(G,v6))");
  return c.outcome();
}

Outcome rd_equivalence(const verify::Config& cfg) { return from_reports({verify::thm_rd(cfg, 4, true)}); }

Outcome bound_corollary(const verify::Config& cfg) { return from_reports({verify::cor_bound(cfg, 200, 4, 3)}); }

// Products over l-subsets of x1, x1_1, ..., x1_copies, each factor shifted by
// `shift`.
std::vector<Polynomial> products(std::size_t copies, std::size_t l, long shift) {
  Ring z = Ring::integers();
  std::vector<Polynomial> xs;
  for (std::size_t c = 0; c <= copies; ++c)
    xs.push_back(Polynomial::variable(z, Var{1, static_cast<std::uint32_t>(c)}) + Polynomial::constant(z, shift));
  std::vector<Polynomial> out;
  std::function<void(std::size_t, std::size_t, Polynomial)> rec = [&](std::size_t from, std::size_t left, Polynomial acc) {
    if (left == 0) {
      out.push_back(acc);
      return;
    }
    for (std::size_t i = from; i + left <= xs.size(); ++i) rec(i + 1, left - 1, acc * xs[i]);
  };
  rec(0, l, Polynomial::constant(z, 1));
  return out;
}

Ideal times(const std::vector<Polynomial>& a, const std::vector<std::string>& b) {
  std::vector<Polynomial> out;
  for (const auto& p : a)
    for (const auto& s : b) out.push_back(p * parse_polynomial(s));
  return Ideal::make(Ring::integers(), out);
}

Ideal sum(std::initializer_list<Ideal> parts) {
  std::vector<Polynomial> out;
  for (const auto& p : parts) out.insert(out.end(), p.generators.begin(), p.generators.end());
  return Ideal::make(Ring::integers(), out);
}

Outcome stabilized_displays() {
  Checker c;
  auto f6 = builtin::fig6(), f7 = builtin::fig7();
  auto s6 = stabilization_constants(f6, 0, TwinKind::duplicate);
  auto s7 = stabilization_constants(f7, 0, TwinKind::replicate);
  c.expect(s6.lambda == 0 && s6.gamma_twin == 2, "four-cycle constants");
  c.expect(s7.lambda == 1 && s7.gamma_twin == 3, "sink graph constants");
  const std::vector<std::string> i4 = {"x4 + 1", "x5 + 1", "x6 + 1", "x2*x3 - 1"};
  const std::vector<std::string> i5 = {"(x4 + 1)*(x2*x3 - 1)", "(x5 + 1)*(x2*x3 - 1)", "(x6 + 1)*(x2*x3 - 1)",
                                       "x4*x5*x6 - x4 - x5 - x6 - 2"};
  for (std::size_t k = 1; k <= 2; ++k)
    for (std::size_t i = 0; i <= 2; ++i) {
      std::string tag = " k=" + std::to_string(k) + " i=" + std::to_string(i);
      // I_{k+2}(d^{k+i}(G, v1)) for the signed four-cycle.
      std::size_t dc = k + i;
      Ideal d_display = sum({times(products(dc, k, 0), {"1"}), times(products(dc, k - 1, 0), {"2", "x3", "x2 + x4"}),
                             k >= 2 ? times(products(dc, k - 2, 0), {"x2*x3 - x3*x4 - 4"}) : Ideal::zero(Ring::integers())});
      auto d_direct = critical_ideal_generators(duplicate_replicate(f6, 0, dc, TwinKind::duplicate), k + 2);
      c.expect(ideal_equal(d_display, d_direct), "four-cycle display" + tag);
      c.expect(ideal_equal(stabilized_twin_ideal(f6, 0, k, i, TwinKind::duplicate, s6), d_direct), "four-cycle formula" + tag);
      // I_{k+3}(r^{k+1+i}(G, v1)) for the sink graph.
      std::size_t rc = k + 1 + i;
      Ideal r_display = k == 1 ? sum({times(products(rc, 1, 1), {"1"}), I(i4)})
                               : sum({times(products(rc, 2, 1), {"1"}), I(i5), times(products(rc, 1, 1), i4)});
      auto r_direct = critical_ideal_generators(duplicate_replicate(f7, 0, rc, TwinKind::replicate), k + 3);
      c.expect(ideal_equal(r_display, r_direct), "sink display" + tag);
      c.expect(ideal_equal(stabilized_twin_ideal(f7, 0, k, i, TwinKind::replicate, s7), r_direct), "sink formula" + tag);
    }
  auto d1 = critical_ideal_generators(duplicate_replicate(f6, 0, 1, TwinKind::duplicate), 4);
  auto early6 = sum({times(products(1, 2, 0), {"1"}), times(products(1, 1, 0), {"2", "x3", "x2 + x4"}), I({"x2*x3 - x3*x4 - 4"})});
  c.expect(!ideal_equal(d1, early6), "four-cycle negative control");
  auto r1 = critical_ideal_generators(duplicate_replicate(f7, 0, 1, TwinKind::replicate), 4);
  c.expect(!ideal_equal(r1, sum({times(products(1, 1, 1), {"1"}), I(i4)})), "sink negative control");
  return c.outcome();
}

Outcome closed_form_checks(const verify::Config& cfg) { return from_reports({verify::closed_forms(cfg, 4, 5, 50)}); }

Outcome field_dependence() {
  Checker c;
  auto p3 = builtin::path3();
  auto all = TwinVector::from_dense(p3, {-1, -1, -1});
  auto mixed = TwinVector::from_dense(p3, {-1, 1, -1});
  const std::vector<Ring> rings{Ring::integers(), Ring::modular(2), Ring::modular(3), Ring::modular(5)};
  for (auto r : rings) {
    c.expect(gamma_of(blowup(p3, all), r) == 3, "d=(-1,-1,-1) over " + r.to_string());
    c.expect(corank_blowup(p3, all, r).gamma == 3, "d=(-1,-1,-1) by evaluation over " + r.to_string());
  }
  std::string verdict;
  for (auto r : rings) {
    auto direct = gamma_of(blowup(p3, mixed), r);
    auto fast = corank_blowup(p3, mixed, r).gamma;
    c.expect(direct == fast, "d=(-1,1,-1) direct vs evaluation over " + r.to_string());
    verdict += (verdict.empty() ? "" : " ") + r.to_string() + ":" + std::to_string(direct);
  }
  c.expect(gamma_of(blowup(p3, mixed)) == 2, "d=(-1,1,-1) over Z");
  c.expect(gamma_of(blowup(p3, mixed), Ring::modular(2)) == 2, "d=(-1,1,-1) over Z/2");
  c.expect(gamma_of(blowup(p3, mixed), Ring::modular(3)) == 3, "d=(-1,1,-1) over Z/3");
  return c.outcome("d=(-1,1,-1) gamma " + verdict);
}

Outcome conjecture_scans(const verify::Config& cfg) {
  Checker c;
  std::size_t tf = 0, trees = 0;
  std::vector<Graph> twin_free;
  for (const auto& g : enumerate::simple_graphs_up_to(6, true))
    if (is_twin_free(g)) twin_free.push_back(g);
  auto recs = verify::parallel_map<scan::ScanRecord>(cfg.jobs, twin_free.size(), [&](std::size_t i) {
    return scan::scan_graph(twin_free[i], scan::Conjecture::twinfree_bound, cfg.corank);
  });
  for (const auto& r : recs) {
    tf += r.applicable;
    c.expect(r.pass, "twin-free bound " + r.graph6);
  }
  std::vector<Graph> ts;
  for (std::size_t n = 1; n <= 8; ++n)
    for (auto& t : enumerate::trees(n))
      if (is_twin_free(t)) ts.push_back(std::move(t));
  auto trecs = verify::parallel_map<scan::ScanRecord>(cfg.jobs, ts.size(), [&](std::size_t i) {
    return scan::scan_graph(ts[i], scan::Conjecture::tree_bound, cfg.corank);
  });
  for (const auto& r : trecs) {
    trees += r.applicable;
    c.expect(r.pass, "tree bound " + r.graph6);
  }
  return c.outcome(std::to_string(tf) + " twin-free connected graphs, " + std::to_string(trees) + " twin-free trees");
}

Outcome structural_suites(const verify::Config& cfg) {
  return from_reports({verify::chain(cfg, 5), verify::subgraph_containment(cfg, 5), verify::bounds_clique_stability(cfg, 6),
                       verify::stabilization_range(cfg, 5), verify::union_additivity(cfg, 4), verify::joindet(cfg, 300)});
}

}  // namespace

int main() {
  verify::Config cfg;
  struct Criterion {
    int id;
    std::string name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "co-rank reproduction", gamma_reproduction},
      {2, "displayed ideals", ideal_reproduction},
      {3, "blowup triviality by evaluation", [&] { return rd_equivalence(cfg); }},
      {4, "co-rank depends only on the support", [&] { return bound_corollary(cfg); }},
      {5, "stabilized twin ideals", stabilized_displays},
      {6, "closed forms", [&] { return closed_form_checks(cfg); }},
      {7, "ring dependence of path blowups", field_dependence},
      {8, "conjecture scans", [&] { return conjecture_scans(cfg); }},
      {9, "structural invariants", [&] { return structural_suites(cfg); }},
  };
  bool all = true;
  for (const auto& crit : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = crit.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::cout << "criterion " << crit.id << " " << (o.pass ? "PASS" : "FAIL") << " " << crit.name << " (" << o.detail
              << ", " << ms << " ms)" << std::endl;
  }
  return all ? 0 : 1;
}
