#include <catch_amalgamated.hpp>

#include "criticalis/builtin.hpp"
#include "criticalis/critical.hpp"

using namespace criticalis;

namespace {

Ideal I(const std::vector<std::string>& gens, Ring r = Ring::integers()) {
  std::vector<Polynomial> ps;
  for (const auto& s : gens) ps.push_back(parse_polynomial(s, r));
  return Ideal::make(r, std::move(ps));
}

std::size_t gamma_of(const Graph& g, Ring r = Ring::integers()) { return corank(g, r).gamma; }

CorankOptions groebner_only() {
  CorankOptions o;
  o.certificates = false;
  return o;
}

}  // namespace

TEST_CASE("generalized Laplacian entries", "[critical]") {
  auto L = generalized_laplacian(builtin::fig6());
  CHECK(L(0, 0) == parse_polynomial("x1"));
  CHECK(L(0, 1) == parse_polynomial("-1"));
  CHECK(L(0, 3) == parse_polynomial("1"));
  CHECK(L(3, 2) == parse_polynomial("1"));
  CHECK(L(3, 0) == parse_polynomial("-1"));
}

TEST_CASE("critical ideals of the path on three vertices", "[critical]") {
  auto p3 = builtin::path3();
  CHECK(is_trivial_ideal(critical_ideal_generators(p3, 2)));
  CHECK(ideal_equal(critical_ideal_generators(p3, 3), I({"x1*x2*x3 - x1 - x3"})));
  CHECK(gamma_of(p3) == 2);
  CHECK(critical_ideal_generators(p3, 4).is_zero());
}

TEST_CASE("co-rank of complete graphs", "[critical]") {
  for (std::size_t n = 2; n <= 5; ++n) CHECK(gamma_of(family::complete(n)) == 1);
}

TEST_CASE("co-rank of the worked examples", "[critical]") {
  CHECK(gamma_of(builtin::fig2()) == 3);
  CHECK(gamma_of(builtin::fig4()) == 3);
  CHECK(gamma_of(builtin::fig5()) == 3);
  CHECK(gamma_of(builtin::fig6()) == 2);
  CHECK(gamma_of(builtin::fig7()) == 2);
  CHECK(gamma_of(duplicate_replicate(builtin::fig7(), 0, 1, TwinKind::replicate)) == 3);
}

TEST_CASE("co-rank of the cube and a duplicated corner", "[critical][slow]") {
  auto q3 = builtin::hypercube3();
  CHECK(gamma_of(q3) == 4);
  CHECK(gamma_of(duplicate_replicate(q3, 7, 1, TwinKind::duplicate)) == 5);
}

TEST_CASE("certificates agree with pure Groebner decisions", "[critical]") {
  for (const auto& name : builtin::names()) {
    if (name == "hypercube3") continue;
    auto g = builtin::by_name(name);
    auto fast = corank(g);
    auto slow = corank(g, Ring::integers(), groebner_only());
    CHECK(fast.gamma == slow.gamma);
  }
}

TEST_CASE("displayed ideals of the signed five-cycle", "[critical]") {
  auto g = builtin::fig2();
  CHECK(ideal_equal(critical_ideal_generators(g, 4),
                    I({"x1*x2 + x4 + 1", "x2*x3 - x5 - 1", "x3*x4 + x1 - 1", "x4*x5 - x2 - 1", "x1*x5 + x3 + 1"})));
  CHECK(ideal_equal(evaluated_critical_ideal(g, 4, {{0, 0}}), I({"x3 + 1", "x4 + 1", "x2 + x5 + 1"})));
  CHECK(ideal_equal(evaluated_critical_ideal(g, 4, {{0, -1}}), I({"x3 - x5 + 1", "x2 - x4 - 1", "x4*x5 - x4 - 2"})));
  CHECK(ideal_equal(critical_ideal_generators(duplicate_replicate(g, 0, 1, TwinKind::duplicate), 4),
                    I({"x1", "x1_1", "x3 + 1", "x4 + 1", "x2 + x5 + 1"})));
  CHECK(ideal_equal(critical_ideal_generators(duplicate_replicate(g, 0, 1, TwinKind::replicate), 4),
                    I({"x1 + 1", "x1_1 + 1", "x3 - x5 + 1", "x2 - x4 - 1", "x4*x5 - x4 - 2"})));
}

TEST_CASE("displayed ideals of the signed four-cycle", "[critical]") {
  auto g = builtin::fig6();
  CHECK(ideal_equal(critical_ideal_generators(g, 3), I({"x2 + x4", "x1 - x3", "x3*x4 + 2"})));
  CHECK(ideal_equal(critical_ideal_generators(g, 4), I({"x1*x2*x3*x4 + x1*x2 + x2*x3 - x1*x4 - x3*x4 - 4"})));
  CHECK(ideal_equal(evaluated_critical_ideal(g, 3, {{0, 0}}), I({"2", "x3", "x2 + x4"})));
  CHECK(ideal_equal(evaluated_critical_ideal(g, 4, {{0, 0}}), I({"x2*x3 - x3*x4 - 4"})));
}

TEST_CASE("evaluated ideals of the sink example", "[critical]") {
  auto g = builtin::fig7();
  CHECK(ideal_equal(evaluated_critical_ideal(g, 4, {{0, -1}}), I({"x4 + 1", "x5 + 1", "x6 + 1", "x2*x3 - 1"})));
  CHECK(ideal_equal(evaluated_critical_ideal(g, 5, {{0, -1}}),
                    I({"(x4 + 1)*(x2*x3 - 1)", "(x5 + 1)*(x2*x3 - 1)", "(x6 + 1)*(x2*x3 - 1)", "x4*x5*x6 - x4 - x5 - x6 - 2"})));
  CHECK(ideal_equal(evaluated_critical_ideal(g, 6, {{0, -1}}), I({"(x2*x3 - 1)*(x4*x5*x6 - x4 - x5 - x6 - 2)"})));
}

TEST_CASE("sixth vertex duplicated in the six-vertex example", "[critical]") {
  auto g = builtin::fig4();
  auto shown = I({"x3*x6", "x3*x6_1", "x4*x6", "x4*x6_1", "x3*x5", "x4*x5", "x6*(x1*x2 + 1)", "x6_1*(x1*x2 + 1)",
                  "x6*(x2*x5 - x5 - 2)", "x6_1*(x2*x5 - x5 - 2)", "x6*(x1*x5 + x5 + 2*x1)", "x6_1*(x1*x5 + x5 + 2*x1)",
                  "x6*x6_1*(x1 - 1) - 2*(x6 + x6_1)", "x6*x6_1*(x2 + 1) + 2*x2*(x6 + x6_1)",
                  "(x6*x6_1 + x6 + x6_1)*(x5 + 1) + (x6 + x6_1)", "x3*x4 + 2*x3 + 2*x4", "x3*(x1*x2 - 1)",
                  "x4*(x1*x2 - 1)", "x1*x2*x5 + 2*x1*x2 + 2*x2*x5 - x5 - 2"});
  CHECK(ideal_equal(critical_ideal_generators(duplicate_replicate(g, 5, 1, TwinKind::duplicate), 5), shown));
  CHECK(ideal_equal(critical_ideal_generators(g, 4),
                    I({"x3", "x4", "x1*x2 + 1", "(x1 - 1)*x6 - 2", "(x2 - 1)*x5 - 2", "x1*x5 + x5 + 2*x1",
                       "x2*x6 + x6 + 2*x2", "x5*x6 + x6 + x5 + 2"})));
  CHECK(ideal_equal(critical_ideal_generators(duplicate_replicate(g, 5, 1, TwinKind::duplicate), 4),
                    I({"x6", "x6_1", "2", "x3", "x4", "x5", "x1*x2 + 1"})));
}

TEST_CASE("complete bipartite K22", "[critical]") {
  auto k = complete_bipartite(2, 2);
  CHECK(is_trivial_ideal(critical_ideal_generators(k, 2)));
  CHECK(ideal_equal(critical_ideal_generators(k, 3), I({"x1 + x1_1", "x2 + x2_1", "x1*x2"})));
  CHECK(ideal_equal(critical_ideal_generators(k, 4),
                    I({"x1*x1_1*x2*x2_1 - x1*x2 - x1*x2_1 - x1_1*x2 - x1_1*x2_1"})));
}

TEST_CASE("chain of critical ideals", "[critical]") {
  for (const auto& name : {"fig2", "fig6", "fig7"}) {
    auto g = builtin::by_name(name);
    for (std::size_t i = 1; i < g.size(); ++i)
      CHECK(ideal_subset(critical_ideal_generators(g, i + 1), critical_ideal_generators(g, i)));
  }
}

TEST_CASE("blowup co-rank through evaluation", "[critical]") {
  auto p3 = builtin::path3();
  auto d = parse_twin_vector("v1:2,v2:-1,v3:1");
  auto fast = corank_blowup(p3, d, Ring::integers(), {}, true);
  CHECK(fast.gamma == gamma_of(blowup(p3, d)));
  CHECK(fast.gamma == corank_blowup(p3, d.support()).gamma);
}

TEST_CASE("ring dependence of the path blowups", "[critical]") {
  auto p3 = builtin::path3();
  auto mixed = TwinVector::from_dense(p3, {-1, 1, -1});
  auto all = TwinVector::from_dense(p3, {-1, -1, -1});
  auto big = blowup(p3, mixed);
  for (auto r : {Ring::integers(), Ring::modular(2), Ring::modular(3), Ring::modular(5)})
    CHECK(corank(blowup(p3, all), r).gamma == 3);
  CHECK(gamma_of(big) == 2);
  CHECK(gamma_of(big, Ring::modular(2)) == 2);
  CHECK(gamma_of(big, Ring::modular(3)) == 3);
  CHECK(gamma_of(big, Ring::modular(5)) == 3);
  CHECK(ideal_equal(evaluated_critical_ideal(p3, 3, phi(p3, mixed)), I({"2"})));
  CHECK(corank_blowup(p3, mixed, Ring::modular(3)).gamma == 3);
}

TEST_CASE("co-rank of trivial graphs and disjoint unions", "[critical]") {
  CHECK(gamma_of(family::trivial(4)) == 0);
  CHECK(gamma_of(family::disjoint_union(builtin::path3(), family::complete(3))) == 3);
  auto u = family::disjoint_union(family::path(2), family::path(3));
  auto left = ideal_ladder(u.induced({0, 1})), right = ideal_ladder(u.induced({2, 3, 4}));
  for (std::size_t j = 1; j <= 5; ++j)
    CHECK(ideal_equal(disjoint_union_ideal(left, right, j), critical_ideal_generators(u, j)));
}

TEST_CASE("closed forms", "[critical]") {
  for (std::size_t n = 3; n <= 5; ++n)
    for (std::size_t j = n - 1; j <= n; ++j)
      CHECK(ideal_equal(complete_graph_ideal(n, j), critical_ideal_generators(family::complete(n), j)));
  for (std::size_t l = 1; l <= 3; ++l)
    CHECK(ideal_equal(trivial_graph_ideal(3, l), critical_ideal_generators(family::trivial(3), l)));
  for (std::size_t j = 2; j <= 5; ++j)
    CHECK(ideal_equal(bipartite_ideal(2, 3, j), critical_ideal_generators(complete_bipartite(2, 3), j)));
}

TEST_CASE("cograph lower bounds", "[critical]") {
  auto leaf = cotree(family::trivial(1));
  REQUIRE(leaf.has_value());
  CHECK(cograph_lower_bound(*leaf).certified == 0);
  for (std::size_t k = 1; k <= 3; ++k) {
    auto t = cotree(family::threshold(2 * k));
    REQUIRE(t.has_value());
    auto b = cograph_lower_bound(*t);
    CHECK(b.certified >= k);
    CHECK(b.certified <= gamma_of(family::threshold(2 * k)));
  }
  auto f8 = cotree(builtin::fig8());
  REQUIRE(f8.has_value());
  CHECK(cograph_lower_bound(*f8).certified <= gamma_of(builtin::fig8()));
  CHECK(gamma_of(builtin::fig8()) == 3);
}

TEST_CASE("low-rank witnesses are genuine", "[critical]") {
  auto L = LaplacianForm::of(builtin::fig5(), Ring::integers());
  auto w = low_rank_point(L, {2, 3, 5, 7}, 4000, 1);
  REQUIRE(w.has_value());
  auto rep = corank(builtin::fig5());
  CHECK(w->rank >= rep.gamma);
}

TEST_CASE("budget exhaustion is reported", "[critical]") {
  CorankOptions o = groebner_only();
  o.gb.max_pairs = 1;
  CHECK_THROWS_AS(corank(builtin::fig2(), Ring::integers(), o), BudgetExceeded);
}
