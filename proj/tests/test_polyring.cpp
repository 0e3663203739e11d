#include <catch_amalgamated.hpp>

#include <random>

#include "criticalis/critical.hpp"
#include "criticalis/matrix.hpp"
#include "criticalis/polyring.hpp"

using namespace criticalis;

namespace {

Polynomial P(const std::string& s, Ring r = Ring::integers()) { return parse_polynomial(s, r); }

SymbolicMatrix random_matrix(std::mt19937_64& rng, std::size_t n, Ring ring) {
  SymbolicMatrix m(n, n, ring);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long c = static_cast<long>(rng() % 7) - 3;
      Polynomial e = Polynomial::constant(ring, c);
      if (i == j) e += Polynomial::variable(ring, Var{static_cast<std::uint32_t>(i + 1), 0});
      m.set(i, j, e);
    }
  return m;
}

}  // namespace

TEST_CASE("ring parsing", "[polyring]") {
  CHECK(Ring::parse("Z") == Ring::integers());
  CHECK(Ring::parse("Z/7").modulus() == 7);
  CHECK(Ring::parse("GF(5)").modulus() == 5);
  CHECK_THROWS_AS(Ring::parse("Z/6"), InvalidArgument);
  CHECK_THROWS_AS(Ring::parse("Q"), ParseError);
  CHECK(Ring::modular(3).to_string() == "Z/3");
}

TEST_CASE("polynomial arithmetic", "[polyring]") {
  auto a = P("x1 + x2"), b = P("x1 - x2");
  CHECK(a * b == P("x1^2 - x2^2"));
  CHECK((a + b) == P("2*x1"));
  CHECK((a - a).is_zero());
  CHECK(a.pow(3) == P("x1^3 + 3*x1^2*x2 + 3*x1*x2^2 + x2^3"));
  CHECK(P("(x1+1)*(x1_1+1)") == P("x1*x1_1 + x1 + x1_1 + 1"));
  CHECK(P("x3*x1 - 2").total_degree() == 2);
}

TEST_CASE("coefficients reduce modulo p", "[polyring]") {
  Ring r = Ring::modular(3);
  CHECK(P("3*x1 + 4", r) == P("1", r));
  CHECK(P("2*x1", r) * P("2*x1", r) == P("x1^2", r));
  CHECK_THROWS_AS(P("x1", r) + P("x1"), RingMismatch);
}

TEST_CASE("printing round-trips through the parser", "[polyring]") {
  for (const char* s : {"x1*x2*x3 - x1 - x3", "-2*x1_1^2 + x4 - 7", "0", "x2*x3*x4*x5 - x2*x3 - x2*x5 - x4*x5 + 1"}) {
    auto p = P(s);
    CHECK(P(p.to_string()) == p);
  }
}

TEST_CASE("parser rejects malformed input", "[polyring]") {
  CHECK_THROWS_AS(P("x1 +"), ParseError);
  CHECK_THROWS_AS(P("y1"), ParseError);
  CHECK_THROWS_AS(P("(x1"), ParseError);
}

TEST_CASE("substitution and evaluation", "[polyring]") {
  auto p = P("x1*x2*x3 - x1 - x3");
  Assignment a{{Var{2, 0}, P("-1")}};
  CHECK(substitute(p, a) == P("-x1*x3 - x1 - x3"));
  Point pt{{Var{1, 0}, 2}, {Var{2, 0}, 1}, {Var{3, 0}, 2}};
  CHECK(evaluate_full(p, pt) == 0);
}

TEST_CASE("monomial orders", "[polyring]") {
  auto lex = MonomialOrder::parse("lex"), drl = MonomialOrder::parse("degrevlex");
  auto m = [](const std::string& s) { return parse_polynomial(s).leading().mono; };
  CHECK(lex.greater(m("x1"), m("x2^5")));
  CHECK(drl.greater(m("x2^5"), m("x1")));
  CHECK(drl.greater(m("x2^2"), m("x1*x3")));
  CHECK(lex.greater(m("x1*x3"), m("x2^2")));
  CHECK_THROWS(MonomialOrder::parse("weird"));
}

TEST_CASE("cofactor, Bareiss and minor expansion agree", "[polyring][determinant]") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 1 + rng() % 5;
    auto m = random_matrix(rng, n, Ring::integers());
    auto c = cofactor_determinant(m);
    CHECK(bareiss_determinant(m) == c);
  }
}

TEST_CASE("minor engine matches cofactor expansion on Laplacians", "[polyring][determinant]") {
  Graph g = family::cycle(5);
  g.set_weight(0, 1, -1);
  auto L = LaplacianForm::of(g, Ring::integers());
  MinorEngine eng(L);
  auto M = L.to_matrix();
  detail::for_each_subset(5, 3, [&](std::uint32_t r) {
    detail::for_each_subset(5, 3, [&](std::uint32_t c) {
      std::vector<std::size_t> rows, cols;
      for (std::size_t i = 0; i < 5; ++i) {
        if (r >> i & 1U) rows.push_back(i);
        if (c >> i & 1U) cols.push_back(i);
      }
      CHECK(eng.minor(r, c) == cofactor_determinant(M.submatrix(rows, cols)));
      return true;
    });
    return true;
  });
}

TEST_CASE("integer determinant of a small matrix", "[polyring][determinant]") {
  std::vector<mpz_class> a{2, -1, 0, -1, 2, -1, 0, -1, 2};
  CHECK(integer_determinant(a, 3) == 4);
  std::int64_t b[4] = {1, 2, 3, 4};
  CHECK(small_integer_determinant(b, 2) == -2);
}

TEST_CASE("join determinant block formula", "[polyring][determinant]") {
  Ring z = Ring::integers();
  auto P1 = SymbolicMatrix::from_rows(z, {{P("x1"), P("1")}, {P("2"), P("x2")}});
  auto Q1 = SymbolicMatrix::from_rows(z, {{P("x3")}});
  std::vector<Polynomial> a{P("x4")}, b{P("x5")};
  auto J = join_matrix(P1, a, Q1, b);
  CHECK(join_determinant(P1, a, Q1, b) == cofactor_determinant(J));
}
