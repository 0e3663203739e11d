#pragma once

// Strong Groebner bases over Z and ordinary Groebner bases over Z/p.
//
// The engine works on packed exponent vectors (8 bits per variable) and is
// templated on the coefficient domain. Over Z it completes with S-polynomials
// and gcd polynomials and reduces with Euclidean division of leading
// coefficients; over Z/p every leading coefficient is a unit, the gcd
// polynomials vanish and the procedure is plain Buchberger.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "criticalis/error.hpp"
#include "criticalis/polyring.hpp"

namespace criticalis {

/// Generator list over a coefficient ring. Construction through make()
/// drops zeros, normalizes signs, dedupes and sorts.
struct Ideal {
  Ring ring;
  std::vector<Polynomial> generators;

  static Ideal make(Ring ring, std::vector<Polynomial> gens);

  /// The zero ideal over ring.
  static Ideal zero(Ring ring) { return Ideal{ring, {}}; }
  static Ideal unit(Ring ring) { return Ideal{ring, {Polynomial::constant(ring, 1)}}; }

  bool is_zero() const { return generators.empty(); }
  std::set<Var> variables() const {
    std::set<Var> vs;
    for (const auto& g : generators) {
      auto v = g.variables();
      vs.insert(v.begin(), v.end());
    }
    return vs;
  }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.ring == b.ring && a.generators == b.generators;
  }
};

/// Leading-sign normalization used by Ideal::make: over Z the degrevlex
/// leading coefficient becomes positive, over Z/p the polynomial is made monic.
inline Polynomial sign_normalize(const Polynomial& p) {
  if (p.is_zero()) return p;
  const Ring r = p.ring();
  const mpz_class& lc = p.leading().coeff;
  if (r.is_integers()) return lc < 0 ? -p : p;
  if (lc == 1) return p;
  mpz_class inv;
  mpz_class mod(r.modulus());
  mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), mod.get_mpz_t());
  return inv * p;
}

inline void sort_canonical(std::vector<Polynomial>& ps) {
  std::sort(ps.begin(), ps.end(),
            [](const Polynomial& a, const Polynomial& b) { return canonical_compare(a, b) < 0; });
}

inline Ideal Ideal::make(Ring ring, std::vector<Polynomial> gens) {
  Ideal out{ring, {}};
  out.generators.reserve(gens.size());
  for (auto& g : gens) {
    if (!(g.ring() == ring)) throw RingMismatch("generator over " + g.ring().to_string() + " in ideal over " + ring.to_string());
    if (!g.is_zero()) out.generators.push_back(sign_normalize(g));
  }
  sort_canonical(out.generators);
  out.generators.erase(std::unique(out.generators.begin(), out.generators.end()), out.generators.end());
  return out;
}

struct GroebnerConfig {
  MonomialOrder order{};
  /// Cap on processed critical pairs per completion.
  std::size_t max_pairs = 5'000'000;
  /// Cap on the total degree of any basis element (at most 127).
  std::uint32_t max_degree = 64;
  /// Re-verify S- and G-polynomial closure after completion.
  bool verify_closure = false;
};

namespace detail {

/// Packed exponent vector, 8 variables per word.
template <int W>
struct PMono {
  std::array<std::uint64_t, W> w{};
  std::uint32_t deg = 0;

  std::uint8_t exp(std::size_t i) const { return static_cast<std::uint8_t>(w[i >> 3] >> (8 * (i & 7))); }
  void set(std::size_t i, std::uint8_t e) {
    std::uint64_t shift = 8 * (i & 7);
    w[i >> 3] = (w[i >> 3] & ~(std::uint64_t{0xff} << shift)) | (std::uint64_t{e} << shift);
  }
  bool operator==(const PMono& o) const { return w == o.w; }

  bool divides(const PMono& b) const {
    if (deg > b.deg) return false;
    for (int k = 0; k < W; ++k)
      if (((b.w[k] - w[k]) & 0x8080808080808080ULL) != 0) return false;
    return true;
  }
  PMono operator*(const PMono& o) const {
    PMono r;
    for (int k = 0; k < W; ++k) r.w[k] = w[k] + o.w[k];
    r.deg = deg + o.deg;
    return r;
  }
  /// Requires o | *this.
  PMono operator/(const PMono& o) const {
    PMono r;
    for (int k = 0; k < W; ++k) r.w[k] = w[k] - o.w[k];
    r.deg = deg - o.deg;
    return r;
  }
  PMono lcm(const PMono& o) const {
    PMono r;
    for (std::size_t i = 0; i < 8 * W; ++i) {
      auto e = std::max(exp(i), o.exp(i));
      if (e) r.set(i, e), r.deg += e;
    }
    return r;
  }
  bool coprime(const PMono& o) const {
    for (int k = 0; k < W; ++k) {
      std::uint64_t a = w[k], b = o.w[k];
      for (int byte = 0; byte < 8; ++byte, a >>= 8, b >>= 8)
        if ((a & 0xff) && (b & 0xff)) return false;
    }
    return true;
  }
};

template <int W>
struct PackedOrder {
  MonomialOrder::Kind kind;

  // Returns >0 when a > b.
  int cmp(const PMono<W>& a, const PMono<W>& b) const {
    if (kind != MonomialOrder::Kind::lex && a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
    if (kind == MonomialOrder::Kind::degrevlex) {
      for (int k = W - 1; k >= 0; --k) {
        std::uint64_t x = a.w[k] ^ b.w[k];
        if (x == 0) continue;
        int shift = (63 - std::countl_zero(x)) & ~7;
        auto ea = (a.w[k] >> shift) & 0xff, eb = (b.w[k] >> shift) & 0xff;
        return ea < eb ? 1 : -1;
      }
      return 0;
    }
    for (int k = 0; k < W; ++k) {
      std::uint64_t x = a.w[k] ^ b.w[k];
      if (x == 0) continue;
      int shift = std::countr_zero(x) & ~7;
      auto ea = (a.w[k] >> shift) & 0xff, eb = (b.w[k] >> shift) & 0xff;
      return ea > eb ? 1 : -1;
    }
    return 0;
  }
};

struct IntegerDomain {
  using Coeff = mpz_class;
  static constexpr bool euclidean = true;

  Coeff from_mpz(const mpz_class& c) const { return c; }
  mpz_class to_mpz(const Coeff& c) const { return c; }
  static bool is_zero(const Coeff& c) { return c == 0; }
  static bool is_unit(const Coeff& c) { return c == 1 || c == -1; }
  static Coeff mul(const Coeff& a, const Coeff& b) { return a * b; }
  static Coeff sub(const Coeff& a, const Coeff& b) { return a - b; }
  static Coeff neg(const Coeff& a) { return -a; }
  static bool divides(const Coeff& a, const Coeff& b) { return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0; }
  static Coeff exact_div(const Coeff& b, const Coeff& a) {
    Coeff q;
    mpz_divexact(q.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
    return q;
  }
  /// Floor quotient of c by positive b; nonzero iff c is outside [0, b).
  static Coeff floor_quotient(const Coeff& c, const Coeff& b) {
    Coeff q;
    mpz_fdiv_q(q.get_mpz_t(), c.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  /// Factor that turns lc into the normalized leading coefficient.
  static Coeff normalizer(const Coeff& lc) { return lc < 0 ? Coeff(-1) : Coeff(1); }
  static bool coprime(const Coeff& a, const Coeff& b) {
    Coeff g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g == 1;
  }
  static Coeff lcm(const Coeff& a, const Coeff& b) {
    Coeff l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
  }
  static void gcdext(const Coeff& a, const Coeff& b, Coeff& g, Coeff& s, Coeff& t) {
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
};

struct PrimeFieldDomain {
  using Coeff = std::uint32_t;
  static constexpr bool euclidean = false;
  std::uint32_t p;

  Coeff from_mpz(const mpz_class& c) const {
    return static_cast<Coeff>(mpz_fdiv_ui(c.get_mpz_t(), p));
  }
  mpz_class to_mpz(Coeff c) const { return mpz_class(static_cast<unsigned long>(c)); }
  static bool is_zero(Coeff c) { return c == 0; }
  static bool is_unit(Coeff c) { return c != 0; }
  Coeff mul(Coeff a, Coeff b) const { return static_cast<Coeff>(std::uint64_t{a} * b % p); }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + (p - b); }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p - a; }
  static bool divides(Coeff, Coeff) { return true; }
  Coeff inverse(Coeff a) const {
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
      std::int64_t q = r / nr;
      t = std::exchange(nt, t - q * nt);
      r = std::exchange(nr, r - q * nr);
    }
    return static_cast<Coeff>(t < 0 ? t + p : t);
  }
  Coeff exact_div(Coeff b, Coeff a) const { return mul(b, inverse(a)); }
  static Coeff floor_quotient(Coeff, Coeff) { return 0; }
  Coeff normalizer(Coeff lc) const { return inverse(lc); }
  static bool coprime(Coeff, Coeff) { return true; }
  static Coeff lcm(Coeff, Coeff) { return 1; }
  static void gcdext(Coeff, Coeff, Coeff& g, Coeff& s, Coeff& t) { g = 1, s = 1, t = 0; }
};

/// Shared interface of the type-erased reducers stored inside StrongBasis.
class ReducerBase {
 public:
  virtual ~ReducerBase() = default;
  virtual Polynomial reduce(const Polynomial& p) const = 0;
  virtual bool covers(const std::set<Var>& vars) const = 0;
};

template <class D, int W>
class Engine : public ReducerBase {
 public:
  using Coeff = typename D::Coeff;
  using Mono = PMono<W>;
  struct Term {
    Mono m;
    Coeff c;
  };
  using Poly = std::vector<Term>;

  Engine(D dom, Ring ring, std::vector<Var> vars, const GroebnerConfig& cfg)
      : dom_(std::move(dom)), ring_(ring), vars_(std::move(vars)), ord_{cfg.order.kind}, cfg_(cfg) {
    for (std::size_t i = 0; i < vars_.size(); ++i) index_[vars_[i]] = i;
  }

  // ---- conversion ----

  Poly to_poly(const Polynomial& p) const {
    Poly out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
      Mono m;
      for (const auto& [v, e] : t.mono.factors()) {
        if (e > 127) throw BudgetExceeded("exponent above 127 in Groebner input");
        m.set(index_.at(v), static_cast<std::uint8_t>(e));
        m.deg += e;
      }
      Coeff c = dom_.from_mpz(t.coeff);
      if (!D::is_zero(c)) out.push_back({m, std::move(c)});
    }
    std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) { return ord_.cmp(a.m, b.m) > 0; });
    return out;
  }

  Polynomial from_poly(const Poly& p) const {
    std::vector<criticalis::Term> ts;
    ts.reserve(p.size());
    for (const auto& t : p) {
      std::vector<Monomial::Factor> fs;
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (auto e = t.m.exp(i)) fs.emplace_back(vars_[i], e);
      ts.push_back({Monomial::from_factors(std::move(fs)), dom_.to_mpz(t.c)});
    }
    return Polynomial::from_terms(ring_, std::move(ts));
  }

  // ---- arithmetic ----

  /// f - c * m * g
  Poly sub_mul(const Poly& f, const Coeff& c, const Mono& m, const Poly& g) const {
    Poly r;
    r.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < f.size() || j < g.size()) {
      if (j == g.size()) {
        r.push_back(f[i++]);
        continue;
      }
      Mono gm = g[j].m * m;
      int s = i == f.size() ? -1 : ord_.cmp(f[i].m, gm);
      if (s > 0) {
        r.push_back(f[i++]);
      } else if (s < 0) {
        r.push_back({gm, dom_.neg(dom_.mul(c, g[j].c))});
        ++j;
      } else {
        Coeff v = dom_.sub(f[i].c, dom_.mul(c, g[j].c));
        if (!D::is_zero(v)) r.push_back({gm, std::move(v)});
        ++i, ++j;
      }
    }
    return r;
  }

  /// a * ma * f + b * mb * g
  Poly combo(const Coeff& a, const Mono& ma, const Poly& f, const Coeff& b, const Mono& mb, const Poly& g) const {
    Poly left;
    left.reserve(f.size());
    for (const auto& t : f) left.push_back({t.m * ma, dom_.mul(a, t.c)});
    return sub_mul(left, dom_.neg(b), mb, g);
  }

  void normalize(Poly& p) const {
    if (p.empty()) return;
    Coeff k = dom_.normalizer(p.front().c);
    if (k == Coeff(1)) return;
    for (auto& t : p) t.c = dom_.mul(t.c, k);
  }

  // ---- reduction ----

  /// Full reduction of f by the active basis elements (except `skip`). With
  /// `keep_head` the leading term is left untouched (tail interreduction).
  Poly reduce_poly(Poly f, std::size_t skip = npos, bool keep_head = false) const {
    Poly out;
    if (keep_head && !f.empty()) {
      out.push_back(f.front());
      f.erase(f.begin());
    }
    while (!f.empty()) {
      const Term lt = f.front();
      std::size_t exact = npos, euclid = npos;
      for (std::size_t k = 0; k < basis_.size(); ++k) {
        if (!active_[k] || k == skip) continue;
        const Term& h = basis_[k].front();
        if (!h.m.divides(lt.m)) continue;
        if (D::divides(h.c, lt.c)) {
          if (exact == npos || basis_[k].size() < basis_[exact].size()) exact = k;
        } else if constexpr (D::euclidean) {
          if (!D::is_zero(D::floor_quotient(lt.c, h.c)) &&
              (euclid == npos || h.c < basis_[euclid].front().c))
            euclid = k;
        }
      }
      if (exact != npos) {
        const Poly& g = basis_[exact];
        f = sub_mul(f, dom_.exact_div(lt.c, g.front().c), lt.m / g.front().m, g);
      } else if (euclid != npos) {
        const Poly& g = basis_[euclid];
        f = sub_mul(f, D::floor_quotient(lt.c, g.front().c), lt.m / g.front().m, g);
      } else {
        out.push_back(lt);
        f.erase(f.begin());
      }
    }
    return out;
  }

  // ---- completion ----

  struct Pair {
    Mono lcm;
    std::size_t i, j;  // j == npos marks an input generator i
    bool gpoly;
    std::uint64_t seq;
  };

  /// Runs completion on the given inputs. Returns false when a unit was
  /// produced (the ideal is the whole ring).
  bool complete(const std::vector<Polynomial>& gens) {
    auto cmp = [this](const Pair& a, const Pair& b) {
      int c = ord_.cmp(a.lcm, b.lcm);
      if (c != 0) return c > 0;
      return a.seq > b.seq;
    };
    std::priority_queue<Pair, std::vector<Pair>, decltype(cmp)> queue(cmp);
    std::vector<Poly> pending;
    std::uint64_t seq = 0;
    auto push_input = [&](Poly p) {
      if (p.empty()) return;
      pending.push_back(std::move(p));
      queue.push({pending.back().front().m, pending.size() - 1, npos, false, seq++});
    };
    for (const auto& g : gens) push_input(to_poly(g));

    std::size_t processed = 0;
    while (!queue.empty()) {
      Pair pr = queue.top();
      queue.pop();
      Poly h;
      if (pr.j == npos) {
        h = std::move(pending[pr.i]);
      } else {
        if (!active_[pr.i] || !active_[pr.j]) continue;
        if (++processed > cfg_.max_pairs)
          throw BudgetExceeded("Groebner completion exceeded " + std::to_string(cfg_.max_pairs) + " pairs");
        h = pair_poly(pr.i, pr.j, pr.gpoly);
      }
      h = reduce_poly(std::move(h));
      if (h.empty()) continue;
      normalize(h);
      if (h.front().m.deg == 0 && D::is_unit(h.front().c)) {
        unit_ = true;
        return false;
      }
      if (h.front().m.deg > cfg_.max_degree)
        throw BudgetExceeded("Groebner basis degree exceeded " + std::to_string(cfg_.max_degree));
      std::size_t k = basis_.size();
      basis_.push_back(std::move(h));
      active_.push_back(true);
      const Term& lt = basis_[k].front();
      for (std::size_t g = 0; g < k; ++g) {
        if (!active_[g]) continue;
        const Term& gt = basis_[g].front();
        if (lt.m.divides(gt.m) && D::divides(lt.c, gt.c)) {
          active_[g] = false;
          push_input(basis_[g]);
          continue;
        }
        Mono l = lt.m.lcm(gt.m);
        if (!(lt.m.coprime(gt.m) && D::coprime(lt.c, gt.c))) queue.push({l, g, k, false, seq++});
        if (!D::divides(lt.c, gt.c) && !D::divides(gt.c, lt.c)) queue.push({l, g, k, true, seq++});
      }
    }
    interreduce();
    return true;
  }

  Poly pair_poly(std::size_t i, std::size_t j, bool gpoly) const {
    const Poly& f = basis_[i];
    const Poly& g = basis_[j];
    const Term& a = f.front();
    const Term& b = g.front();
    Mono l = a.m.lcm(b.m);
    if (gpoly) {
      Coeff gg, s, t;
      D::gcdext(a.c, b.c, gg, s, t);
      return combo(s, l / a.m, f, t, l / b.m, g);
    }
    Coeff lc = D::lcm(a.c, b.c);
    return combo(dom_.exact_div(lc, a.c), l / a.m, f, dom_.neg(dom_.exact_div(lc, b.c)), l / b.m, g);
  }

  void interreduce() {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (!active_[k]) continue;
      basis_[k] = reduce_poly(basis_[k], k, true);
      normalize(basis_[k]);
    }
  }

  /// Every S- and G-polynomial of active pairs reduces to zero.
  bool closure_holds() const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (!active_[i]) continue;
      for (std::size_t j = i + 1; j < basis_.size(); ++j) {
        if (!active_[j]) continue;
        if (!reduce_poly(pair_poly(i, j, false)).empty()) return false;
        if (!reduce_poly(pair_poly(i, j, true)).empty()) return false;
      }
    }
    return true;
  }

  std::vector<Polynomial> basis_polynomials() const {
    if (unit_) return {Polynomial::constant(ring_, 1)};
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k]) out.push_back(from_poly(basis_[k]));
    sort_canonical(out);
    return out;
  }

  bool is_unit() const { return unit_; }

  Polynomial reduce(const Polynomial& p) const override {
    if (unit_) return Polynomial(ring_);
    return from_poly(reduce_poly(to_poly(p)));
  }

  bool covers(const std::set<Var>& vars) const override {
    for (auto v : vars)
      if (!index_.contains(v)) return false;
    return true;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  D dom_;
  Ring ring_;
  std::vector<Var> vars_;
  std::map<Var, std::size_t> index_;
  PackedOrder<W> ord_;
  GroebnerConfig cfg_;
  std::vector<Poly> basis_;
  std::vector<bool> active_;
  bool unit_ = false;
};

struct CompletionResult {
  std::vector<Polynomial> basis;
  std::shared_ptr<const ReducerBase> reducer;
  bool closure_ok = true;
};

template <class D, int W>
CompletionResult run_engine(D dom, Ring ring, std::vector<Var> vars, const std::vector<Polynomial>& gens,
                            const GroebnerConfig& cfg) {
  auto eng = std::make_shared<Engine<D, W>>(std::move(dom), ring, std::move(vars), cfg);
  eng->complete(gens);
  CompletionResult r;
  r.basis = eng->basis_polynomials();
  if (cfg.verify_closure && !eng->is_unit()) r.closure_ok = eng->closure_holds();
  r.reducer = eng;
  return r;
}

template <class D>
CompletionResult dispatch_width(D dom, Ring ring, std::vector<Var> vars, const std::vector<Polynomial>& gens,
                                const GroebnerConfig& cfg) {
  if (cfg.max_degree > 127) throw InvalidArgument("max_degree must be at most 127");
  std::size_t n = vars.size();
  if (n <= 16) return run_engine<D, 2>(std::move(dom), ring, std::move(vars), gens, cfg);
  if (n <= 32) return run_engine<D, 4>(std::move(dom), ring, std::move(vars), gens, cfg);
  if (n <= 64) return run_engine<D, 8>(std::move(dom), ring, std::move(vars), gens, cfg);
  throw InvalidArgument("Groebner engine supports at most 64 variables, got " + std::to_string(n));
}

inline CompletionResult complete(Ring ring, const std::set<Var>& varset, const std::vector<Polynomial>& gens,
                                 const GroebnerConfig& cfg) {
  std::vector<Var> vars(varset.begin(), varset.end());
  if (ring.is_integers()) return dispatch_width(IntegerDomain{}, ring, std::move(vars), gens, cfg);
  return dispatch_width(PrimeFieldDomain{ring.modulus()}, ring, std::move(vars), gens, cfg);
}

}  // namespace detail

/// Completed strong Groebner basis (over Z) or reduced Groebner basis (over
/// Z/p) of an ideal.
struct StrongBasis {
  Ideal ideal;
  std::vector<Polynomial> basis;
  MonomialOrder order;
  std::set<Var> variables;
  /// Result of the post-hoc closure check; true when it was not requested.
  bool closure_verified = true;
  std::shared_ptr<const detail::ReducerBase> reducer;

  bool contains_unit() const { return basis.size() == 1 && basis[0].is_constant() && ideal.ring.is_unit(basis[0].constant_value()); }
};

/// Computes a strong Groebner basis of gens over `extra_vars` plus the
/// variables occurring in gens.
inline StrongBasis strong_groebner(const Ideal& gens, const GroebnerConfig& cfg = {},
                                   const std::set<Var>& extra_vars = {}) {
  std::set<Var> vars = gens.variables();
  vars.insert(extra_vars.begin(), extra_vars.end());
  auto r = detail::complete(gens.ring, vars, gens.generators, cfg);
  return StrongBasis{gens, std::move(r.basis), cfg.order, std::move(vars), r.closure_ok, std::move(r.reducer)};
}

/// Strong normal form of p modulo the basis. Zero exactly for ideal members.
inline Polynomial normal_form(const Polynomial& p, const StrongBasis& b) {
  if (!(p.ring() == b.ideal.ring))
    throw RingMismatch("normal_form of a polynomial over " + p.ring().to_string() + " by a basis over " +
                       b.ideal.ring.to_string());
  if (p.is_zero()) return p;
  if (b.contains_unit()) return Polynomial(p.ring());
  if (b.reducer && b.reducer->covers(p.variables())) return b.reducer->reduce(p);
  // Variables outside the basis ring: rebuild over the enlarged variable set.
  GroebnerConfig cfg;
  cfg.order = b.order;
  cfg.max_degree = 127;
  auto r = strong_groebner(Ideal{b.ideal.ring, b.basis}, cfg, p.variables());
  return r.reducer->reduce(p);
}

inline bool ideal_member(const Polynomial& p, const StrongBasis& b) { return normal_form(p, b).is_zero(); }

namespace detail {

inline std::vector<std::uint32_t> prime_factors(mpz_class c) {
  std::vector<std::uint32_t> ps;
  c = abs(c);
  for (std::uint32_t d = 2; c > 1; ++d) {
    if (mpz_class(d) * d > c) {
      if (!c.fits_uint_p()) throw BudgetExceeded("constant too large to factor: " + c.get_str());
      ps.push_back(static_cast<std::uint32_t>(c.get_ui()));
      break;
    }
    if (mpz_divisible_ui_p(c.get_mpz_t(), d)) {
      ps.push_back(d);
      while (mpz_divisible_ui_p(c.get_mpz_t(), d)) c /= d;
    }
    if (d > 1'000'000) throw BudgetExceeded("constant too large to factor: " + c.get_str());
  }
  return ps;
}

inline std::vector<Polynomial> reduce_mod(const std::vector<Polynomial>& gens, Ring target) {
  std::vector<Polynomial> out;
  out.reserve(gens.size());
  for (const auto& g : gens) {
    std::vector<Term> ts(g.terms().begin(), g.terms().end());
    auto p = Polynomial::from_terms(target, std::move(ts));
    if (!p.is_zero()) out.push_back(std::move(p));
  }
  return out;
}

inline bool trivial_over_field(const std::vector<Polynomial>& gens, std::uint32_t p, const GroebnerConfig& cfg) {
  Ring r = Ring::modular(p);
  auto red = reduce_mod(gens, r);
  std::set<Var> vars;
  for (const auto& g : red) {
    if (g.is_constant()) return true;
    auto v = g.variables();
    vars.insert(v.begin(), v.end());
  }
  if (red.empty()) return false;
  auto res = complete(r, vars, red, cfg);
  return res.basis.size() == 1 && res.basis[0].is_constant();
}

inline bool basis_is_unit(const std::vector<Polynomial>& basis) {
  return basis.size() == 1 && basis[0].is_constant() && (basis[0].constant_value() == 1 || basis[0].constant_value() == -1);
}

}  // namespace detail

/// Large prime used for the modular nontriviality certificate.
inline constexpr std::uint32_t kCertificatePrime = 32003;

/// True iff 1 lies in the ideal over its ring.
///
/// Over Z the decision runs through sound shortcuts before a full strong
/// basis: unit or coprime constant generators prove triviality; a nontrivial
/// basis modulo a prime proves nontriviality; a nonzero constant c in the
/// ideal reduces the question to the primes dividing c.
inline bool is_trivial_ideal(const Ideal& ideal, const GroebnerConfig& cfg = {}) {
  const Ring ring = ideal.ring;
  mpz_class g = 0;
  for (const auto& p : ideal.generators) {
    if (!p.is_constant()) continue;
    if (ring.is_unit(p.constant_value())) return true;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), p.constant_value().get_mpz_t());
  }
  if (ring.is_integers() && g == 1) return true;
  if (ideal.generators.empty()) return false;

  if (!ring.is_integers()) {
    auto r = detail::complete(ring, ideal.variables(), ideal.generators, cfg);
    return r.basis.size() == 1 && r.basis[0].is_constant();
  }

  if (!detail::trivial_over_field(ideal.generators, kCertificatePrime, cfg)) return false;
  if (g != 0) {
    for (auto p : detail::prime_factors(g))
      if (!detail::trivial_over_field(ideal.generators, p, cfg)) return false;
    return true;
  }
  // Growing prefixes: a trivial prefix settles the question early.
  const auto& gens = ideal.generators;
  for (std::size_t len = std::min<std::size_t>(8, gens.size()); ; len = std::min(gens.size(), len * 4)) {
    std::vector<Polynomial> sub(gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>(len));
    auto r = detail::complete(ring, Ideal{ring, sub}.variables(), sub, cfg);
    if (detail::basis_is_unit(r.basis)) return true;
    // A nonzero constant in the basis hands the decision to the primes.
    for (const auto& b : r.basis) {
      if (!b.is_constant()) continue;
      for (auto p : detail::prime_factors(b.constant_value()))
        if (!detail::trivial_over_field(gens, p, cfg)) return false;
      return true;
    }
    if (len == gens.size()) return false;
  }
}

/// Every generator of a lies in b.
inline bool ideal_subset(const Ideal& a, const StrongBasis& b) {
  for (const auto& p : a.generators)
    if (!ideal_member(p, b)) return false;
  return true;
}

inline bool ideal_subset(const Ideal& a, const Ideal& b, const GroebnerConfig& cfg = {}) {
  if (!(a.ring == b.ring)) throw RingMismatch("ideals over " + a.ring.to_string() + " and " + b.ring.to_string());
  std::vector<Polynomial> rest;
  for (const auto& p : a.generators)
    if (!std::binary_search(b.generators.begin(), b.generators.end(), p,
                            [](const Polynomial& x, const Polynomial& y) { return canonical_compare(x, y) < 0; }))
      rest.push_back(p);
  if (rest.empty()) return true;
  if (is_trivial_ideal(b, cfg)) return true;
  auto vars = a.variables();
  return ideal_subset(Ideal{a.ring, rest}, strong_groebner(b, cfg, vars));
}

/// Mutual containment.
inline bool ideal_equal(const Ideal& a, const Ideal& b, const GroebnerConfig& cfg = {}) {
  return ideal_subset(a, b, cfg) && ideal_subset(b, a, cfg);
}

}  // namespace criticalis
