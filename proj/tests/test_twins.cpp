#include <catch_amalgamated.hpp>

#include "criticalis/builtin.hpp"
#include "criticalis/critical.hpp"
#include "criticalis/enumerate.hpp"

using namespace criticalis;

namespace {

Ideal I(const std::vector<std::string>& gens, Ring r = Ring::integers()) {
  std::vector<Polynomial> ps;
  for (const auto& s : gens) ps.push_back(parse_polynomial(s, r));
  return Ideal::make(r, std::move(ps));
}

Ideal direct(const Graph& g, std::size_t v, std::size_t k, std::size_t j, TwinKind kind) {
  return critical_ideal_generators(duplicate_replicate(g, v, k, kind), j);
}

}  // namespace

TEST_CASE("copy variables follow the copies of duplicate_replicate", "[twins]") {
  auto g = family::path(3);
  auto vars = copy_variables(g, 1, 2);
  REQUIRE(vars.size() == 3);
  CHECK(vars[1] == Var{2, 1});
  auto d = duplicate_replicate(g, 1, 2, TwinKind::duplicate);
  CHECK(d.find(Vertex{2, 2}).has_value());
}

TEST_CASE("subset products", "[twins]") {
  Ring z = Ring::integers();
  std::vector<Var> vars{{1, 0}, {1, 1}, {1, 2}};
  CHECK(subset_products(z, vars, 0, TwinKind::duplicate).size() == 1);
  CHECK(subset_products(z, vars, 2, TwinKind::duplicate).size() == 3);
  CHECK(subset_products(z, vars, 3, TwinKind::replicate)[0] == parse_polynomial("(x1 + 1)*(x1_1 + 1)*(x1_2 + 1)"));
  CHECK(subset_products(z, vars, 4, TwinKind::replicate).empty());
}

TEST_CASE("expanded generator families equal direct enumeration", "[twins]") {
  for (const auto& g : {builtin::path3(), builtin::fig6(), family::cycle(4), family::complete(3)})
    for (auto kind : {TwinKind::duplicate, TwinKind::replicate})
      for (std::size_t k = 1; k <= 2; ++k)
        for (std::size_t j = 1; j <= g.size() + k; ++j)
          CHECK(ideal_equal(dup_rep_expanded_ideal(g, 0, k, j, kind), direct(g, 0, k, j, kind)));
}

TEST_CASE("expanded families on the six-vertex example", "[twins]") {
  auto g = builtin::fig4();
  CHECK(ideal_equal(dup_rep_expanded_ideal(g, 5, 1, 5, TwinKind::duplicate), direct(g, 5, 1, 5, TwinKind::duplicate)));
  CHECK(ideal_equal(dup_rep_expanded_ideal(g, 0, 1, 4, TwinKind::replicate), direct(g, 0, 1, 4, TwinKind::replicate)));
}

TEST_CASE("replication families miss clique minors on edgeless graphs", "[twins]") {
  // Replicating an isolated vertex creates a clique whose off-diagonal -1
  // entries already make I_1 trivial; the expanded families do not contain them.
  auto g = family::trivial(2);
  CHECK(is_trivial_ideal(direct(g, 0, 1, 1, TwinKind::replicate)));
  CHECK_FALSE(is_trivial_ideal(dup_rep_expanded_ideal(g, 0, 1, 1, TwinKind::replicate)));
  CHECK_FALSE(ideal_equal(dup_rep_expanded_ideal(g, 0, 2, 2, TwinKind::replicate), direct(g, 0, 2, 2, TwinKind::replicate)));
  CHECK(ideal_equal(dup_rep_expanded_ideal(g, 0, 2, 3, TwinKind::replicate), direct(g, 0, 2, 3, TwinKind::replicate)));
  for (std::size_t j = 1; j <= 4; ++j)
    CHECK(ideal_equal(dup_rep_expanded_ideal(g, 0, 2, j, TwinKind::duplicate), direct(g, 0, 2, j, TwinKind::duplicate)));
}

TEST_CASE("twin ideals sit inside the evaluated superset", "[twins]") {
  for (const auto& g : {builtin::path3(), builtin::fig6()})
    for (auto kind : {TwinKind::duplicate, TwinKind::replicate}) {
      TwinVector d;
      d.entries[g.vertex(0)] = kind == TwinKind::duplicate ? 1 : -1;
      for (std::size_t j = 1; j <= g.size(); ++j) {
        auto sup = blowup_ideal_superset(g, d, j);
        auto sub = critical_ideal_generators(blowup(g, d), j);
        CHECK(ideal_subset(sub, sup));
        CHECK(is_trivial_ideal(sub) == is_trivial_ideal(sup));
      }
    }
}

TEST_CASE("stabilization constants of the worked examples", "[twins]") {
  auto s6 = stabilization_constants(builtin::fig6(), 0, TwinKind::duplicate);
  CHECK(s6.gamma == 2);
  CHECK(s6.gamma_removed == 2);
  CHECK(s6.gamma_twin == 2);
  CHECK(s6.lambda == 0);
  auto s7 = stabilization_constants(builtin::fig7(), 0, TwinKind::replicate);
  CHECK(s7.gamma == 2);
  CHECK(s7.gamma_removed == 2);
  CHECK(s7.gamma_twin == 3);
  CHECK(s7.lambda == 1);
}

TEST_CASE("stabilized forms equal direct enumeration", "[twins]") {
  auto f6 = builtin::fig6(), f7 = builtin::fig7();
  auto s6 = stabilization_constants(f6, 0, TwinKind::duplicate);
  auto s7 = stabilization_constants(f7, 0, TwinKind::replicate);
  for (std::size_t k = 1; k <= 2; ++k)
    for (std::size_t i = 0; i <= 2; ++i) {
      CHECK(ideal_equal(stabilized_twin_ideal(f6, 0, k, i, TwinKind::duplicate, s6),
                        direct(f6, 0, k + s6.lambda + i, s6.gamma_twin + k, TwinKind::duplicate)));
      CHECK(ideal_equal(stabilized_twin_ideal(f7, 0, k, i, TwinKind::replicate, s7),
                        direct(f7, 0, k + s7.lambda + i, s7.gamma_twin + k, TwinKind::replicate)));
    }
}

TEST_CASE("stabilization cannot start earlier", "[twins]") {
  auto f6 = builtin::fig6();
  auto shown = I({"x1*(x2 + x4)", "x1_1*(x2 + x4)", "x1*(x3*x4 + 2)", "x2*x3 - x3*x4 - 4", "x1*x1_1*x4 + 2*x1 + 2*x1_1",
                  "x1*x3 + x1_1*x3 - x1*x1_1"});
  CHECK(ideal_equal(direct(f6, 0, 1, 4, TwinKind::duplicate), shown));
  CHECK_FALSE(ideal_equal(shown, twin_formula_ideal(f6, 0, 1, 2, 2, TwinKind::duplicate)));
  auto f7 = builtin::fig7();
  auto r1 = direct(f7, 0, 1, 4, TwinKind::replicate);
  CHECK(ideal_equal(r1, I({"(x1 + 1)*(x2 - 1)", "(x1 + 1)*(x3 - 1)", "(x1_1 + 1)*(x2 - 1)", "(x1_1 + 1)*(x3 - 1)",
                           "x4 + 1", "x5 + 1", "x6 + 1", "x2*x3 - 1", "x1*x1_1 - 1"})));
  CHECK_FALSE(ideal_equal(r1, I({"x1 + 1", "x1_1 + 1", "x4 + 1", "x5 + 1", "x6 + 1", "x2*x3 - 1"})));
}

TEST_CASE("stabilization preconditions", "[twins]") {
  CHECK_THROWS_AS(stabilized_twin_ideal(family::complete(3), 0, 1, 0, TwinKind::duplicate), PreconditionViolation);
  CHECK_THROWS_AS(stabilized_twin_ideal(builtin::fig6(), 0, 0, 0, TwinKind::duplicate), PreconditionViolation);
}

TEST_CASE("co-rank jump under twins stays in [0, 2]", "[twins]") {
  for (const auto& g : enumerate::simple_graphs_up_to(4, true)) {
    if (g.size() < 2) continue;
    for (std::size_t v = 0; v < g.size(); ++v)
      for (auto kind : {TwinKind::duplicate, TwinKind::replicate}) {
        auto s = stabilization_constants(g, v, kind);
        CHECK(s.gamma_twin >= s.gamma_removed);
        CHECK(s.gamma_twin <= s.gamma_removed + 2);
      }
  }
}
