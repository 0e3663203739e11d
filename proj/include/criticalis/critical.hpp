#pragma once

// Generalized Laplacians, critical ideals, algebraic co-rank and the
// twin-vertex formulas.

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "criticalis/error.hpp"
#include "criticalis/groebner.hpp"
#include "criticalis/matrix.hpp"
#include "criticalis/polyring.hpp"
#include "criticalis/sgraph.hpp"

namespace criticalis {

// ------------------------------------------------------------ Laplacian form

/// Matrix whose off-diagonal entries and some diagonal entries are integer
/// constants, the remaining diagonal entries being distinct variables. Covers
/// L(G, X) and every partial evaluation of its diagonal.
struct LaplacianForm {
  Ring ring;
  std::size_t n = 0;
  std::vector<std::int64_t> a0;          // constant part, row-major
  std::vector<std::optional<Var>> diag;  // variable at (i, i), if any

  std::int64_t at(std::size_t i, std::size_t j) const { return a0[i * n + j]; }

  static LaplacianForm of(const Graph& g, Ring ring = Ring::integers()) {
    LaplacianForm L;
    L.ring = ring;
    L.n = g.size();
    L.a0.assign(L.n * L.n, 0);
    L.diag.resize(L.n);
    for (std::size_t i = 0; i < L.n; ++i) {
      L.diag[i] = g.var(i);
      for (std::size_t j = 0; j < L.n; ++j)
        if (i != j) L.a0[i * L.n + j] = -g.weight(i, j);
    }
    return L;
  }

  /// Replaces the diagonal variables at the given indices by constants.
  LaplacianForm evaluate(const std::map<std::size_t, std::int64_t>& fixed) const {
    LaplacianForm L = *this;
    for (auto [i, c] : fixed) {
      if (i >= n) throw InvalidArgument("evaluation index out of range");
      L.diag[i].reset();
      L.a0[i * n + i] = c;
    }
    return L;
  }

  LaplacianForm with_ring(Ring r) const {
    LaplacianForm L = *this;
    L.ring = r;
    return L;
  }

  /// Drops row and column i.
  LaplacianForm remove(std::size_t v) const {
    LaplacianForm L;
    L.ring = ring;
    L.n = n - 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == v) continue;
      L.diag.push_back(diag[i]);
      for (std::size_t j = 0; j < n; ++j)
        if (j != v) L.a0.push_back(at(i, j));
    }
    return L;
  }

  Polynomial entry(std::size_t i, std::size_t j) const {
    Polynomial c = Polynomial::constant(ring, at(i, j));
    if (i == j && diag[i]) c += Polynomial::variable(ring, *diag[i]);
    return c;
  }

  SymbolicMatrix to_matrix() const {
    SymbolicMatrix m(n, n, ring);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, entry(i, j));
    return m;
  }
};

/// L(G, X): x_v on the diagonal, -w_uv off the diagonal.
inline SymbolicMatrix generalized_laplacian(const Graph& g, Ring ring = Ring::integers()) {
  return LaplacianForm::of(g, ring).to_matrix();
}

// ------------------------------------------------------------ minors

/// Computes minors of a LaplacianForm by expanding the multilinear diagonal:
/// det L[R, C] = sum over subsets S of the variable positions in R and C of
/// prod_{v in S} x_v times a signed constant minor with S removed.
class MinorEngine {
 public:
  explicit MinorEngine(const LaplacianForm& L) : L_(L) {
    if (L.n > 32) throw InvalidArgument("minor enumeration supports at most 32 rows");
  }

  const LaplacianForm& form() const { return L_; }

  /// Determinant of the constant part on the given row and column masks.
  mpz_class constant_minor(std::uint32_t rmask, std::uint32_t cmask) const {
    std::uint64_t key = (std::uint64_t{rmask} << 32) | cmask;
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    std::size_t k = static_cast<std::size_t>(std::popcount(rmask));
    std::int64_t buf[32 * 32];
    std::size_t r = 0;
    for (std::uint32_t rm = rmask; rm; rm &= rm - 1, ++r) {
      std::size_t i = static_cast<std::size_t>(std::countr_zero(rm)), c = 0;
      for (std::uint32_t cm = cmask; cm; cm &= cm - 1, ++c)
        buf[r * k + c] = L_.at(i, static_cast<std::size_t>(std::countr_zero(cm)));
    }
    mpz_class d = small_integer_determinant(buf, k);
    if (cache_.size() > kCacheLimit) cache_.clear();
    cache_.emplace(key, d);
    return d;
  }

  /// True when the minor on (rmask, cmask) has no variable on its diagonal.
  bool is_constant_pattern(std::uint32_t rmask, std::uint32_t cmask) const {
    return (rmask & cmask & var_mask()) == 0;
  }

  std::uint32_t var_mask() const {
    if (!var_mask_) {
      std::uint32_t m = 0;
      for (std::size_t i = 0; i < L_.n; ++i)
        if (L_.diag[i]) m |= 1U << i;
      var_mask_ = m;
    }
    return *var_mask_;
  }

  Polynomial minor(std::uint32_t rmask, std::uint32_t cmask) const {
    std::uint32_t dmask = rmask & cmask & var_mask();
    std::vector<std::size_t> dpos;
    std::vector<int> parity;
    for (std::uint32_t m = dmask; m; m &= m - 1) {
      auto v = static_cast<std::uint32_t>(std::countr_zero(m));
      std::uint32_t below = (1U << v) - 1;
      dpos.push_back(v);
      parity.push_back((std::popcount(rmask & below) + std::popcount(cmask & below)) & 1);
    }
    std::vector<Term> terms;
    const std::uint32_t subsets = 1U << dpos.size();
    for (std::uint32_t s = 0; s < subsets; ++s) {
      std::uint32_t remove = 0;
      int sign = 0;
      std::vector<Monomial::Factor> fs;
      for (std::size_t t = 0; t < dpos.size(); ++t)
        if (s >> t & 1U) {
          remove |= 1U << dpos[t];
          sign ^= parity[t];
          fs.emplace_back(*L_.diag[dpos[t]], 1);
        }
      mpz_class d = constant_minor(rmask & ~remove, cmask & ~remove);
      if (d == 0) continue;
      if (sign) d = -d;
      terms.push_back({Monomial::from_factors(std::move(fs)), std::move(d)});
    }
    return Polynomial::from_terms(L_.ring, std::move(terms));
  }

  Polynomial minor(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    return minor(mask_of(rows), mask_of(cols));
  }

  static std::uint32_t mask_of(const std::vector<std::size_t>& idx) {
    std::uint32_t m = 0;
    for (auto i : idx) m |= 1U << i;
    return m;
  }

 private:
  static constexpr std::size_t kCacheLimit = 4'000'000;
  const LaplacianForm& L_;
  mutable std::unordered_map<std::uint64_t, mpz_class> cache_;
  mutable std::optional<std::uint32_t> var_mask_;
};

namespace detail {

/// Calls f(mask) for every k-subset of {0..n-1} in increasing mask order.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  if (k == 0) {
    f(0U);
    return;
  }
  std::uint64_t m = (std::uint64_t{1} << k) - 1, limit = std::uint64_t{1} << n;
  while (m < limit) {
    if (!f(static_cast<std::uint32_t>(m))) return;
    std::uint64_t c = m & -m, r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
}

struct PolyHashEq {
  std::size_t operator()(const Polynomial& p) const { return p.hash(); }
};

}  // namespace detail

/// Which minors to collect relative to a pivot vertex v.
enum class MinorPattern {
  all,          // every k x k minor
  avoid,        // v in neither rows nor columns: minors of L(G - v)
  column_only,  // v among the columns only: minors_k(a, L(G - v))
  row_only,     // v among the rows only: minors_k(L(G - v), b)
  both,         // v among rows and columns
};

/// Distinct sign-normalized nonzero k x k minors matching the pattern.
inline std::vector<Polynomial> collect_minors(const MinorEngine& eng, std::size_t k, MinorPattern pattern = MinorPattern::all,
                                              std::size_t pivot = 0, std::size_t* raw_count = nullptr) {
  const std::size_t n = eng.form().n;
  std::unordered_set<Polynomial, detail::PolyHashEq> seen;
  std::size_t raw = 0;
  const std::uint32_t pv = 1U << pivot;
  auto wants = [&](std::uint32_t mask, bool inside) { return pattern == MinorPattern::all || (((mask & pv) != 0) == inside); };
  bool row_in = pattern == MinorPattern::row_only || pattern == MinorPattern::both;
  bool col_in = pattern == MinorPattern::column_only || pattern == MinorPattern::both;
  detail::for_each_subset(n, k, [&](std::uint32_t r) {
    if (!wants(r, row_in)) return true;
    detail::for_each_subset(n, k, [&](std::uint32_t c) {
      if (!wants(c, col_in)) return true;
      ++raw;
      Polynomial p = eng.minor(r, c);
      if (!p.is_zero()) seen.insert(sign_normalize(p));
      return true;
    });
    return true;
  });
  if (raw_count) *raw_count = raw;
  std::vector<Polynomial> out(seen.begin(), seen.end());
  sort_canonical(out);
  return out;
}

/// I_k of a Laplacian form: <1> for k = 0, <0> for k > n.
inline Ideal minors_ideal(const LaplacianForm& L, std::size_t k, std::size_t* raw_count = nullptr) {
  if (k == 0) return Ideal::unit(L.ring);
  if (k > L.n) return Ideal::zero(L.ring);
  MinorEngine eng(L);
  return Ideal{L.ring, collect_minors(eng, k, MinorPattern::all, 0, raw_count)};
}

struct CriticalIdealResult {
  std::string graph;
  std::size_t index = 0;
  Ideal ideal;
  bool trivial = false;
  std::size_t generator_count_raw = 0;
  std::size_t generator_count = 0;
};

/// I_i(G, X) without the triviality decision.
inline Ideal critical_ideal_generators(const Graph& g, std::size_t i, Ring ring = Ring::integers()) {
  if (i < 1) throw InvalidArgument("critical ideal index must be at least 1");
  return minors_ideal(LaplacianForm::of(g, ring), i);
}

/// I_i(G, X) with its generators evaluated at the given diagonal constants.
inline Ideal evaluated_critical_ideal(const Graph& g, std::size_t i, const std::map<std::size_t, std::int64_t>& fixed,
                                      Ring ring = Ring::integers()) {
  if (i < 1) throw InvalidArgument("critical ideal index must be at least 1");
  return minors_ideal(LaplacianForm::of(g, ring).evaluate(fixed), i);
}

/// The four generator classes of I_j(G, X) relative to a pivot vertex v:
/// minors of L(G - v), minors bordered by the column a, minors bordered by the
/// row b, and the minors containing the pivot entry x_v.
struct BorderedMinorClasses {
  std::vector<Polynomial> inner, with_column, with_row, with_pivot;
};

inline BorderedMinorClasses bordered_minor_classes(const Graph& g, std::size_t v, std::size_t j, Ring ring = Ring::integers()) {
  if (v >= g.size()) throw InvalidArgument("pivot vertex out of range");
  if (j < 1) throw InvalidArgument("critical ideal index must be at least 1");
  LaplacianForm L = LaplacianForm::of(g, ring);
  MinorEngine eng(L);
  return {collect_minors(eng, j, MinorPattern::avoid, v), collect_minors(eng, j, MinorPattern::column_only, v),
          collect_minors(eng, j, MinorPattern::row_only, v), collect_minors(eng, j, MinorPattern::both, v)};
}

// ------------------------------------------------------------ triviality

struct CorankOptions {
  GroebnerConfig gb{};
  /// Points examined per prime in the rank-deficiency search.
  std::size_t point_budget = 4000;
  /// Primes tried by the rank-deficiency search over Z.
  std::vector<std::uint32_t> search_primes{2, 3, 5, 7, 11, 13};
  /// Use the certificate shortcuts (constant minors, rank-deficient points).
  bool certificates = true;
  std::uint64_t seed = 1;
};

/// Where a triviality verdict came from.
enum class Evidence { constant_minors, rank_deficient_point, partial_ideal, groebner, zero_ideal, unit_ideal };

inline std::string to_string(Evidence e) {
  switch (e) {
    case Evidence::constant_minors: return "constant-minors";
    case Evidence::rank_deficient_point: return "rank-deficient-point";
    case Evidence::partial_ideal: return "partial-ideal";
    case Evidence::groebner: return "groebner";
    case Evidence::zero_ideal: return "zero-ideal";
    default: return "unit-ideal";
  }
}

struct RankWitness {
  std::uint32_t prime = 0;
  std::size_t rank = 0;
  std::vector<std::uint32_t> point;  // values of the diagonal variables, in row order
};

namespace detail {

inline std::size_t rank_mod_p(std::vector<std::uint32_t> m, std::size_t n, std::uint32_t p) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t piv = rank;
    while (piv < n && m[piv * n + col] == 0) ++piv;
    if (piv == n) continue;
    for (std::size_t j = 0; j < n; ++j) std::swap(m[rank * n + j], m[piv * n + j]);
    std::uint64_t inv = 1, base = m[rank * n + col], e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (std::size_t i = rank + 1; i < n; ++i) {
      std::uint64_t f = m[i * n + col] * inv % p;
      if (!f) continue;
      for (std::size_t j = col; j < n; ++j)
        m[i * n + j] = static_cast<std::uint32_t>((m[i * n + j] + (p - f) * m[rank * n + j]) % p);
    }
    ++rank;
  }
  return rank;
}

/// Classes of variable-diagonal rows that are twins in the constant part.
inline std::vector<std::vector<std::size_t>> twin_classes(const LaplacianForm& L) {
  std::vector<std::size_t> parent(L.n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
  for (std::size_t u = 0; u < L.n; ++u)
    for (std::size_t v = u + 1; v < L.n; ++v) {
      if (!L.diag[u] || !L.diag[v]) continue;
      bool same = (L.at(u, v) == 0 && L.at(v, u) == 0) || (L.at(u, v) == -1 && L.at(v, u) == -1);
      for (std::size_t w = 0; w < L.n && same; ++w)
        if (w != u && w != v) same = L.at(u, w) == L.at(v, w) && L.at(w, u) == L.at(w, v);
      if (same) parent[root(u)] = root(v);
    }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < L.n; ++i)
    if (L.diag[i]) groups[root(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [r, g] : groups) out.push_back(std::move(g));
  return out;
}

}  // namespace detail

/// Searches points over F_p for a low rank of the evaluated form. A point of
/// rank r proves I_j nontrivial over F_p, hence over Z, for every j > r.
inline std::optional<RankWitness> low_rank_point(const LaplacianForm& L, const std::vector<std::uint32_t>& primes,
                                                 std::size_t budget, std::uint64_t seed) {
  std::optional<RankWitness> best;
  auto classes = detail::twin_classes(L);
  std::vector<std::size_t> free_rows;
  for (std::size_t i = 0; i < L.n; ++i)
    if (L.diag[i]) free_rows.push_back(i);
  std::mt19937_64 rng(seed);
  for (auto p : primes) {
    std::vector<std::uint32_t> base(L.n * L.n);
    for (std::size_t i = 0; i < L.n * L.n; ++i) {
      std::int64_t v = L.a0[i] % static_cast<std::int64_t>(p);
      base[i] = static_cast<std::uint32_t>(v < 0 ? v + p : v);
    }
    auto try_point = [&](const std::vector<std::uint32_t>& vals) {
      auto m = base;
      for (std::size_t t = 0; t < free_rows.size(); ++t) {
        auto i = free_rows[t];
        m[i * L.n + i] = static_cast<std::uint32_t>((m[i * L.n + i] + vals[t]) % p);
      }
      auto r = detail::rank_mod_p(std::move(m), L.n, p);
      if (!best || r < best->rank) best = RankWitness{p, r, vals};
    };
    std::size_t spent = 0;
    std::vector<std::size_t> class_of(L.n, 0);
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (auto i : classes[c]) class_of[i] = c;
    // Class-constant points in lexicographic order.
    std::vector<std::uint32_t> digits(classes.size(), 0);
    for (;;) {
      if (spent++ >= budget) break;
      std::vector<std::uint32_t> vals(free_rows.size());
      for (std::size_t t = 0; t < free_rows.size(); ++t) vals[t] = digits[class_of[free_rows[t]]];
      try_point(vals);
      std::size_t d = 0;
      while (d < digits.size() && ++digits[d] == p) digits[d++] = 0;
      if (d == digits.size()) break;
    }
    // Unrestricted random points with the rest of the budget.
    if (classes.size() < free_rows.size())
      for (; spent < budget; ++spent) {
        std::vector<std::uint32_t> vals(free_rows.size());
        for (auto& x : vals) x = static_cast<std::uint32_t>(rng() % p);
        try_point(vals);
      }
    if (best && best->rank == 0) break;
  }
  return best;
}

struct TrivialityVerdict {
  bool trivial = false;
  Evidence evidence = Evidence::groebner;
};

/// Decides whether I_k of the form is <1>, trying sound certificates first.
/// `known_rank` is an optional rank witness already found for this form.
inline TrivialityVerdict decide_minor_triviality(const LaplacianForm& L, std::size_t k, const CorankOptions& opt,
                                                 const std::optional<RankWitness>& known_rank = std::nullopt) {
  if (k == 0) return {true, Evidence::unit_ideal};
  if (k > L.n) return {false, Evidence::zero_ideal};
  MinorEngine eng(L);
  if (opt.certificates) {
    if (known_rank && known_rank->rank < k && (L.ring.is_integers() || L.ring.modulus() == known_rank->prime))
      return {false, Evidence::rank_deficient_point};
    // Constant minors.
    mpz_class g = 0;
    bool unit = false;
    detail::for_each_subset(L.n, k, [&](std::uint32_t r) {
      detail::for_each_subset(L.n, k, [&](std::uint32_t c) {
        if (!eng.is_constant_pattern(r, c)) return true;
        mpz_class d = eng.constant_minor(r, c);
        if (d == 0) return true;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        unit = L.ring.is_integers() ? g == 1 : L.ring.is_unit(d);
        return !unit;
      });
      return !unit;
    });
    if (unit) return {true, Evidence::constant_minors};
    // Minors with at most one diagonal variable form a sub-ideal; if it is
    // already trivial so is I_k.
    std::vector<Polynomial> partial;
    std::unordered_set<Polynomial, detail::PolyHashEq> seen;
    const std::size_t cap = 4000;
    detail::for_each_subset(L.n, k, [&](std::uint32_t r) {
      detail::for_each_subset(L.n, k, [&](std::uint32_t c) {
        if (std::popcount(r & c & eng.var_mask()) > 1) return true;
        auto p = eng.minor(r, c);
        if (!p.is_zero() && seen.insert(sign_normalize(p)).second) partial.push_back(sign_normalize(p));
        return seen.size() < cap;
      });
      return seen.size() < cap;
    });
    if (!partial.empty()) {
      Ideal sub = Ideal::make(L.ring, std::move(partial));
      if (is_trivial_ideal(sub, opt.gb)) return {true, Evidence::partial_ideal};
    }
  }
  Ideal full{L.ring, collect_minors(eng, k)};
  return {is_trivial_ideal(full, opt.gb), Evidence::groebner};
}

// ------------------------------------------------------------ co-rank

struct CorankReport {
  std::size_t gamma = 0;
  /// First nontrivial index (gamma + 1), or nullopt when every I_j with
  /// j <= n is trivial.
  std::optional<std::size_t> first_nontrivial;
  Ring ring;
  Evidence nontrivial_evidence = Evidence::zero_ideal;
  std::vector<Evidence> trivial_evidence;  // per index 1..gamma
  std::optional<RankWitness> witness;
};

/// Largest j <= n with I_j of the form trivial, scanning upward from j = 1.
inline CorankReport corank_of_form(const LaplacianForm& L, const CorankOptions& opt = {}) {
  CorankReport rep;
  rep.ring = L.ring;
  std::optional<RankWitness> w;
  if (opt.certificates) {
    std::vector<std::uint32_t> primes = L.ring.is_integers() ? opt.search_primes : std::vector<std::uint32_t>{L.ring.modulus()};
    w = low_rank_point(L, primes, opt.point_budget, opt.seed);
    rep.witness = w;
  }
  for (std::size_t j = 1; j <= L.n; ++j) {
    auto v = decide_minor_triviality(L, j, opt, w);
    if (!v.trivial) {
      rep.gamma = j - 1;
      rep.first_nontrivial = j;
      rep.nontrivial_evidence = v.evidence;
      return rep;
    }
    rep.trivial_evidence.push_back(v.evidence);
  }
  rep.gamma = L.n;
  return rep;
}

/// Algebraic co-rank over the given ring.
inline CorankReport corank(const Graph& g, Ring ring = Ring::integers(), const CorankOptions& opt = {}) {
  return corank_of_form(LaplacianForm::of(g, ring), opt);
}

/// phi(d): 0 for duplicated vertices, -1 for replicated ones; other variables stay.
inline std::map<std::size_t, std::int64_t> phi(const Graph& g, const TwinVector& d) {
  std::map<std::size_t, std::int64_t> fixed;
  auto dense = d.dense(g);
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) fixed[i] = dense[i] > 0 ? 0 : -1;
  return fixed;
}

/// gamma(G^d) from the evaluations I_j(G, X)|_{X = phi(d)}, j <= n, without
/// building G^d. With `check` the blowup G^supp(d) is built and its co-rank
/// must agree.
inline CorankReport corank_blowup(const Graph& g, const TwinVector& d, Ring ring = Ring::integers(),
                                  const CorankOptions& opt = {}, bool check = false) {
  CorankReport rep = corank_of_form(LaplacianForm::of(g, ring).evaluate(phi(g, d)), opt);
  if (check) {
    auto direct = corank(blowup(g, d.support()), ring, opt);
    if (direct.gamma != rep.gamma)
      throw Error("evaluation gives gamma=" + std::to_string(rep.gamma) + " but the built blowup gives gamma=" +
                  std::to_string(direct.gamma));
  }
  return rep;
}

inline CriticalIdealResult critical_ideal(const Graph& g, std::size_t i, Ring ring = Ring::integers(),
                                          const CorankOptions& opt = {}, std::string id = {}) {
  if (i < 1) throw InvalidArgument("critical ideal index must be at least 1");
  CriticalIdealResult r;
  r.graph = std::move(id);
  r.index = i;
  std::size_t raw = 0;
  r.ideal = minors_ideal(LaplacianForm::of(g, ring), i, &raw);
  r.generator_count_raw = raw;
  r.generator_count = r.ideal.generators.size();
  r.trivial = is_trivial_ideal(r.ideal, opt.gb);
  return r;
}

// ------------------------------------------------------------ twin formulas

/// Variables x_{v^0}, ..., x_{v^k} of v and the k copies that
/// duplicate_replicate would create.
inline std::vector<Var> copy_variables(const Graph& g, std::size_t v, std::size_t k) {
  Vertex base = g.vertex(v);
  std::uint32_t next = 0;
  for (auto u : g.vertices())
    if (u.base == base.base) next = std::max(next, u.copy + 1);
  std::vector<Var> out{Var{base.base, base.copy}};
  for (std::size_t c = 0; c < k; ++c) out.push_back(Var{base.base, next + static_cast<std::uint32_t>(c)});
  return out;
}

/// Products over the l-subsets of vars: prod x (duplicate) or prod (x + 1)
/// (replicate). The empty product is 1.
inline std::vector<Polynomial> subset_products(Ring ring, const std::vector<Var>& vars, std::size_t l, TwinKind kind) {
  std::vector<Polynomial> out;
  if (l > vars.size()) return out;
  detail::for_each_subset(vars.size(), l, [&](std::uint32_t m) {
    Polynomial p = Polynomial::constant(ring, 1);
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (m >> i & 1U) {
        Polynomial x = Polynomial::variable(ring, vars[i]);
        if (kind == TwinKind::replicate) x += Polynomial::constant(ring, 1);
        p *= x;
      }
    out.push_back(std::move(p));
    return true;
  });
  return out;
}

inline std::vector<Polynomial> product_set(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  std::vector<Polynomial> out;
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return out;
}

inline void append(std::vector<Polynomial>& dst, const std::vector<Polynomial>& src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

inline std::int64_t twin_constant(TwinKind kind) { return kind == TwinKind::duplicate ? 0 : -1; }

/// Superset of I_j(G^d, X): the copy variables (or their +1 shifts) together
/// with I_j(G, X)|_{X = phi(d)}.
inline Ideal blowup_ideal_superset(const Graph& g, const TwinVector& d, std::size_t j, Ring ring = Ring::integers()) {
  if (j < 1 || j > g.size()) throw InvalidArgument("index out of range 1..n");
  auto dense = d.dense(g);
  std::vector<Polynomial> gens;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (dense[v] == 0) continue;
    auto kind = dense[v] > 0 ? TwinKind::duplicate : TwinKind::replicate;
    std::size_t k = static_cast<std::size_t>(dense[v] > 0 ? dense[v] : -dense[v]);
    for (auto x : copy_variables(g, v, k)) {
      Polynomial p = Polynomial::variable(ring, x);
      if (kind == TwinKind::replicate) p += Polynomial::constant(ring, 1);
      gens.push_back(std::move(p));
    }
  }
  append(gens, evaluated_critical_ideal(g, j, phi(g, d), ring).generators);
  return Ideal::make(ring, std::move(gens));
}

/// I_j(d^k(G, v)) or I_j(r^k(G, v)) assembled from the generator families of
/// the duplication/replication lemmas with m = min(k, j - 1).
inline Ideal dup_rep_expanded_ideal(const Graph& g, std::size_t v, std::size_t k, std::size_t j, TwinKind kind,
                                    Ring ring = Ring::integers()) {
  const std::size_t n = g.size();
  if (v >= n) throw InvalidArgument("vertex out of range");
  if (n < 2) throw PreconditionViolation("the expansion needs at least two vertices");
  if (k < 1) throw InvalidArgument("copy count must be positive");
  if (j < 1 || j > n + k) throw InvalidArgument("index out of range 1..n+k");
  const std::size_t m = std::min(k, j - 1);
  const std::int64_t c = twin_constant(kind);
  auto vars = copy_variables(g, v, k);
  LaplacianForm L = LaplacianForm::of(g, ring);
  LaplacianForm Lc = L.evaluate({{v, c}});
  MinorEngine eng(L), engc(Lc);

  std::vector<Polynomial> gens;
  for (std::size_t l = 0; l < m; ++l)
    append(gens, product_set(subset_products(ring, vars, l, kind), minors_ideal(Lc, j - l).generators));
  auto Pm = subset_products(ring, vars, m, kind);
  if (j - m <= n) {
    append(gens, product_set(Pm, collect_minors(eng, j - m, MinorPattern::avoid, v)));
    append(gens, product_set(Pm, collect_minors(eng, j - m, MinorPattern::column_only, v)));
    append(gens, product_set(Pm, collect_minors(eng, j - m, MinorPattern::row_only, v)));
  }
  Polynomial one = Polynomial::constant(ring, 1);
  auto shifted = [&](Var x) {
    Polynomial p = Polynomial::variable(ring, x);
    return kind == TwinKind::replicate ? p + one : p;
  };
  if (j <= k + 1) {
    if (kind == TwinKind::duplicate) {
      append(gens, subset_products(ring, vars, j, kind));
    } else {
      detail::for_each_subset(vars.size(), j, [&](std::uint32_t mask) {
        Polynomial prod = one, sum(ring);
        for (std::size_t s = 0; s < vars.size(); ++s) {
          if (!(mask >> s & 1U)) continue;
          prod *= shifted(vars[s]);
          Polynomial rest = one;
          for (std::size_t t = 0; t < vars.size(); ++t)
            if (t != s && (mask >> t & 1U)) rest *= shifted(vars[t]);
          sum += rest;
        }
        gens.push_back(prod - sum);
        return true;
      });
    }
  } else if (j - k <= n) {
    Polynomial all = one, sigma(ring);
    for (std::size_t t = 0; t < vars.size(); ++t) {
      all *= shifted(vars[t]);
      Polynomial rest = one;
      for (std::size_t s = 0; s < vars.size(); ++s)
        if (s != t) rest *= shifted(vars[s]);
      sigma += rest;
    }
    const std::uint32_t pv = 1U << v;
    detail::for_each_subset(n, j - k, [&](std::uint32_t r) {
      if (!(r & pv)) return true;
      detail::for_each_subset(n, j - k, [&](std::uint32_t cm) {
        if (!(cm & pv)) return true;
        Polynomial inner = eng.minor(r & ~pv, cm & ~pv);
        Polynomial border = engc.minor(r, cm);
        // Removing the pivot row and column shifts the sign by the parity of
        // the pivot's positions.
        int parity = (std::popcount(r & (pv - 1)) + std::popcount(cm & (pv - 1))) & 1;
        if (parity) inner = -inner;
        Polynomial p = inner * all + border * sigma;
        if (!p.is_zero()) gens.push_back(std::move(p));
        return true;
      });
      return true;
    });
  }
  return Ideal::make(ring, std::move(gens));
}

struct StabilizationConstants {
  std::size_t gamma = 0;        // gamma(G)
  std::size_t gamma_twin = 0;   // gamma(d(G, v)) or gamma(r(G, v))
  std::size_t gamma_removed = 0;  // gamma(G - v)
  std::size_t lambda = 0;
};

inline StabilizationConstants stabilization_constants(const Graph& g, std::size_t v, TwinKind kind,
                                                      Ring ring = Ring::integers(), const CorankOptions& opt = {}) {
  if (v >= g.size()) throw InvalidArgument("vertex out of range");
  StabilizationConstants s;
  s.gamma = corank(g, ring, opt).gamma;
  s.gamma_removed = corank(g.remove_vertex(v), ring, opt).gamma;
  s.gamma_twin = corank(duplicate_replicate(g, v, 1, kind), ring, opt).gamma;
  s.lambda = s.gamma_removed == s.gamma_twin ? 0 : 1;
  return s;
}

/// <{P_l^K(v) * I_{base + k - l}(G, X)|_{x_v = c}}_{l = 0..k}> with K copies
/// of v, c = 0 (duplicate) or -1 (replicate). No hypotheses are checked.
inline Ideal twin_formula_ideal(const Graph& g, std::size_t v, std::size_t copies, std::size_t k, std::size_t base,
                                TwinKind kind, Ring ring = Ring::integers()) {
  auto vars = copy_variables(g, v, copies);
  LaplacianForm Lc = LaplacianForm::of(g, ring).evaluate({{v, twin_constant(kind)}});
  std::vector<Polynomial> gens;
  for (std::size_t l = 0; l <= k; ++l)
    append(gens, product_set(subset_products(ring, vars, l, kind), minors_ideal(Lc, base + k - l).generators));
  return Ideal::make(ring, std::move(gens));
}

/// The stabilized value of I_{gamma_t + k}(t^{k + lambda + i}(G, v), X).
/// Requires gamma(G) >= 2 and k >= 1.
inline Ideal stabilized_twin_ideal(const Graph& g, std::size_t v, std::size_t k, std::size_t i, TwinKind kind,
                                   const StabilizationConstants& s, Ring ring = Ring::integers()) {
  if (s.gamma < 2) throw PreconditionViolation("the stabilization formula needs gamma(G) >= 2, got " + std::to_string(s.gamma));
  if (k < 1) throw PreconditionViolation("the stabilization formula needs k >= 1");
  return twin_formula_ideal(g, v, k + s.lambda + i, k, s.gamma_twin, kind, ring);
}

inline Ideal stabilized_twin_ideal(const Graph& g, std::size_t v, std::size_t k, std::size_t i, TwinKind kind,
                                   Ring ring = Ring::integers(), const CorankOptions& opt = {}) {
  return stabilized_twin_ideal(g, v, k, i, kind, stabilization_constants(g, v, kind, ring, opt), ring);
}

// ------------------------------------------------------------ closed forms

/// I_n(K_n) and I_{n-1}(K_n) on the variables x1..xn.
inline Ideal complete_graph_ideal(std::size_t n, std::size_t j, Ring ring = Ring::integers()) {
  if (n < 2) throw PreconditionViolation("complete-graph forms need n >= 2");
  if (j != n && j + 1 != n) throw PreconditionViolation("complete-graph forms cover j = n - 1 and j = n only");
  std::vector<Var> vars;
  for (std::size_t i = 1; i <= n; ++i) vars.push_back(Var{static_cast<std::uint32_t>(i), 0});
  if (j + 1 == n) return Ideal::make(ring, subset_products(ring, vars, n - 2, TwinKind::replicate));
  Polynomial one = Polynomial::constant(ring, 1), prod = one, sum(ring);
  for (std::size_t i = 0; i < n; ++i) {
    prod *= Polynomial::variable(ring, vars[i]) + one;
    Polynomial rest = one;
    for (std::size_t t = 0; t < n; ++t)
      if (t != i) rest *= Polynomial::variable(ring, vars[t]) + one;
    sum += rest;
  }
  return Ideal::make(ring, {prod - sum});
}

/// I_l(T_k) = <products of l distinct variables among x1..xk>.
inline Ideal trivial_graph_ideal(std::size_t k, std::size_t l, Ring ring = Ring::integers()) {
  if (k < 1) throw PreconditionViolation("trivial graph needs k >= 1");
  std::vector<Var> vars;
  for (std::size_t i = 1; i <= k; ++i) vars.push_back(Var{static_cast<std::uint32_t>(i), 0});
  if (l == 0) return Ideal::unit(ring);
  return Ideal::make(ring, subset_products(ring, vars, l, TwinKind::duplicate));
}

/// K_{n,m} as K2^(n-1, m-1): sides {v1, v1_1, ..., v1_{n-1}} and
/// {v2, v2_1, ..., v2_{m-1}}.
inline Graph complete_bipartite(std::size_t n, std::size_t m) {
  if (n < 1 || m < 1) throw InvalidArgument("complete bipartite needs n, m >= 1");
  Graph g = family::complete(2);
  if (n > 1) g = duplicate_replicate(g, 0, n - 1, TwinKind::duplicate);
  if (m > 1) g = duplicate_replicate(g, 1, m - 1, TwinKind::duplicate);
  return g;
}

namespace detail {

inline std::vector<Var> side_variables(std::uint32_t base, std::size_t n) {
  std::vector<Var> vs;
  for (std::size_t s = 0; s < n; ++s) vs.push_back(Var{base, static_cast<std::uint32_t>(s)});
  return vs;
}

// sigma_{j,n}: the elementary sum of (n-1)-products when j = n - 1, else the
// set of j-products, over the n variables of one side.
inline std::vector<Polynomial> sigma(Ring ring, const std::vector<Var>& vs, std::size_t j) {
  const std::size_t n = vs.size();
  if (j + 1 == n) {
    Polynomial s(ring);
    for (const auto& p : subset_products(ring, vs, n - 1, TwinKind::duplicate)) s += p;
    return {s};
  }
  return subset_products(ring, vs, j, TwinKind::duplicate);
}

}  // namespace detail

/// Closed form of I_j(K_{n,m}) for m >= n >= 2 and 2 <= j <= n + m.
inline Ideal bipartite_ideal(std::size_t n, std::size_t m, std::size_t j, Ring ring = Ring::integers()) {
  if (n < 2 || m < n) throw PreconditionViolation("bipartite form needs m >= n >= 2");
  if (j < 2 || j > n + m) throw PreconditionViolation("bipartite form needs 2 <= j <= n + m");
  auto u = detail::side_variables(1, n), w = detail::side_variables(2, m);
  std::vector<Polynomial> gens;
  if (j <= n + m - 2) {
    for (std::size_t r = 0; r < n; ++r) {
      if (r > j - 2) break;
      std::size_t s = j - 2 - r;
      if (s >= m) continue;
      append(gens, product_set(detail::sigma(ring, u, r), detail::sigma(ring, w, s)));
    }
  } else if (j == n + m - 1) {
    append(gens, product_set(detail::sigma(ring, u, n - 1), detail::sigma(ring, w, m - 2)));
    append(gens, product_set(detail::sigma(ring, u, n - 2), detail::sigma(ring, w, m - 1)));
    append(gens, product_set(subset_products(ring, u, n - 1, TwinKind::duplicate),
                             subset_products(ring, w, m - 1, TwinKind::duplicate)));
  } else {
    Polynomial all = subset_products(ring, u, n, TwinKind::duplicate)[0] * subset_products(ring, w, m, TwinKind::duplicate)[0];
    gens.push_back(all - detail::sigma(ring, u, n - 1)[0] * detail::sigma(ring, w, m - 1)[0]);
  }
  return Ideal::make(ring, std::move(gens));
}

/// I_0, I_1, ..., I_n of a graph (I_0 = <1>).
inline std::vector<Ideal> ideal_ladder(const Graph& g, Ring ring = Ring::integers()) {
  LaplacianForm L = LaplacianForm::of(g, ring);
  std::vector<Ideal> out;
  for (std::size_t i = 0; i <= g.size(); ++i) out.push_back(minors_ideal(L, i));
  return out;
}

/// I_j(G + H) = <union over i of I_i(G) * I_{j-i}(H)> from the two ladders;
/// indices past a ladder's end contribute the zero ideal.
inline Ideal disjoint_union_ideal(const std::vector<Ideal>& g, const std::vector<Ideal>& h, std::size_t j) {
  if (g.empty() || h.empty()) throw InvalidArgument("empty ideal ladder");
  Ring ring = g[0].ring;
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i <= j; ++i) {
    if (i >= g.size() || j - i >= h.size()) continue;
    append(gens, product_set(g[i].generators, h[j - i].generators));
  }
  return Ideal::make(ring, std::move(gens));
}

// ------------------------------------------------------------ cographs

struct CographBound {
  std::size_t certified = 0;
  std::size_t from_paths = 0;
  std::size_t recursive = 0;
  std::int64_t conjectured = 0;
};

namespace detail {

inline bool has_edge(const Cotree& t) {
  if (t.kind == Cotree::Kind::leaf) return false;
  if (t.kind == Cotree::Kind::join) return true;
  return std::any_of(t.children.begin(), t.children.end(), [](const Cotree& c) { return has_edge(c); });
}

inline bool is_complete_cotree(const Cotree& t) {
  if (t.kind == Cotree::Kind::leaf) return true;
  if (t.kind == Cotree::Kind::disjoint_union) return false;
  return std::all_of(t.children.begin(), t.children.end(), [](const Cotree& c) { return is_complete_cotree(c); });
}

inline std::size_t recursive_bound(const Cotree& t) {
  if (t.kind == Cotree::Kind::leaf) return 0;
  std::size_t best = 0;
  if (t.kind == Cotree::Kind::disjoint_union) {
    for (const auto& c : t.children) best += std::max<std::size_t>(recursive_bound(c), has_edge(c) ? 1 : 0);
    return best;
  }
  std::size_t noncomplete = 0;
  for (const auto& c : t.children) {
    best = std::max(best, recursive_bound(c));
    noncomplete += !is_complete_cotree(c);
  }
  return noncomplete > 0 ? std::max(best, noncomplete - 1) : best;
}

// Longest induced threshold graph read off a root-to-leaf path: one vertex
// per ancestor plus the leaf itself when its parent is a join.
inline std::size_t threshold_order(const Cotree& t, std::size_t depth) {
  std::size_t best = 0;
  for (const auto& c : t.children) {
    if (c.kind == Cotree::Kind::leaf)
      best = std::max(best, t.kind == Cotree::Kind::join ? depth + 2 : depth + 1);
    else
      best = std::max(best, threshold_order(c, depth + 1));
  }
  return best;
}

inline void internal_stats(const Cotree& t, std::size_t& nodes, std::size_t& internal) {
  if (t.kind == Cotree::Kind::leaf) return;
  ++nodes;
  bool has_internal_child = false;
  for (const auto& c : t.children) {
    if (c.kind != Cotree::Kind::leaf) has_internal_child = true;
    internal_stats(c, nodes, internal);
  }
  internal += has_internal_child;
}

}  // namespace detail

/// Certified lower bound on gamma of the cograph of t, and the conjectural
/// quantity |E(T~)| - #internal(T~) for the leafless tree T~ (never asserted).
inline CographBound cograph_lower_bound(const Cotree& t) {
  CographBound b;
  b.from_paths = t.kind == Cotree::Kind::leaf ? 0 : detail::threshold_order(t, 0) / 2;
  b.recursive = detail::recursive_bound(t);
  b.certified = std::max(b.from_paths, b.recursive);
  std::size_t nodes = 0, internal = 0;
  detail::internal_stats(t, nodes, internal);
  std::int64_t edges = nodes > 0 ? static_cast<std::int64_t>(nodes) - 1 : 0;
  b.conjectured = std::max<std::int64_t>(0, edges - static_cast<std::int64_t>(internal));
  return b;
}

}  // namespace criticalis
