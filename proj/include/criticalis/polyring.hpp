#pragma once

// Exact sparse multivariate polynomials over Z and Z/p.
//
// Variables are indexed by (vertex, copy); copy 0 is the original vertex.
// Terms are kept sorted descending in degrevlex, which is also the canonical
// printing order. Coefficients are GMP integers throughout; over Z/p they are
// kept in [0, p).

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "criticalis/error.hpp"

namespace criticalis {

/// Variable x_{v^i}. Ordered by (vertex, copy); a smaller Var is a larger
/// variable in every monomial order (x1 > x1_1 > x2 > ...).
struct Var {
  std::uint32_t vertex = 0;
  std::uint32_t copy = 0;

  friend constexpr auto operator<=>(const Var&, const Var&) = default;
};

inline std::string to_string(Var v) {
  std::string s = "x" + std::to_string(v.vertex);
  if (v.copy != 0) s += "_" + std::to_string(v.copy);
  return s;
}

/// Coefficient ring: Z (modulus 0) or Z/p with p prime.
class Ring {
 public:
  constexpr Ring() = default;

  static constexpr Ring integers() { return Ring{}; }

  static Ring modular(std::uint32_t p) {
    if (!is_prime(p)) throw InvalidArgument("Z/p requires a prime modulus, got " + std::to_string(p));
    Ring r;
    r.p_ = p;
    return r;
  }

  /// Accepts "Z", "ZZ", "Z/p" and "GF(p)".
  static Ring parse(std::string_view text) {
    if (text == "Z" || text == "ZZ") return integers();
    auto digits = [&](std::string_view s) -> std::uint32_t {
      if (s.empty() || s.size() > 9 ||
          !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw ParseError("bad ring '" + std::string(text) + "'");
      return static_cast<std::uint32_t>(std::stoul(std::string(s)));
    };
    if (text.starts_with("Z/")) return modular(digits(text.substr(2)));
    if (text.starts_with("GF(") && text.ends_with(")"))
      return modular(digits(text.substr(3, text.size() - 4)));
    throw ParseError("bad ring '" + std::string(text) + "'");
  }

  constexpr bool is_integers() const { return p_ == 0; }
  constexpr std::uint32_t modulus() const { return p_; }

  std::string to_string() const { return p_ == 0 ? "Z" : "Z/" + std::to_string(p_); }

  /// Canonical representative of c in this ring.
  mpz_class reduce(mpz_class c) const {
    if (p_ != 0) {
      mpz_class r;
      mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p_);
      return r;
    }
    return c;
  }

  /// True when c is invertible in the ring.
  bool is_unit(const mpz_class& c) const {
    if (p_ == 0) return c == 1 || c == -1;
    return mpz_fdiv_ui(c.get_mpz_t(), p_) != 0;
  }

  friend constexpr bool operator==(const Ring&, const Ring&) = default;

  static constexpr bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

 private:
  std::uint32_t p_ = 0;
};

/// Power product with sparse exponent storage. Factors sorted by Var, no
/// zero exponents.
class Monomial {
 public:
  using Factor = std::pair<Var, std::uint32_t>;

  Monomial() = default;

  explicit Monomial(Var v, std::uint32_t e = 1) {
    if (e != 0) factors_.emplace_back(v, e);
  }

  /// Builds from arbitrary factors; merges repeats and drops zero exponents.
  static Monomial from_factors(std::vector<Factor> fs) {
    std::sort(fs.begin(), fs.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
    Monomial m;
    for (const auto& [v, e] : fs) {
      if (e == 0) continue;
      if (!m.factors_.empty() && m.factors_.back().first == v)
        m.factors_.back().second += e;
      else
        m.factors_.emplace_back(v, e);
    }
    return m;
  }

  std::span<const Factor> factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  std::uint32_t degree() const {
    std::uint32_t d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
  }

  std::uint32_t exponent(Var v) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                               [](const Factor& f, Var x) { return f.first < x; });
    return (it != factors_.end() && it->first == v) ? it->second : 0;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin(), j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
      if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
        r.factors_.push_back(*i++);
      } else if (i == a.factors_.end() || j->first < i->first) {
        r.factors_.push_back(*j++);
      } else {
        r.factors_.emplace_back(i->first, i->second + j->second);
        ++i;
        ++j;
      }
    }
    return r;
  }

  bool divides(const Monomial& other) const {
    auto j = other.factors_.begin();
    for (const auto& [v, e] : factors_) {
      while (j != other.factors_.end() && j->first < v) ++j;
      if (j == other.factors_.end() || j->first != v || j->second < e) return false;
    }
    return true;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::size_t hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& [v, e] : factors_) {
      h ^= (std::size_t{v.vertex} * 0x100000001b3ULL + v.copy * 131 + e) + (h << 6) + (h >> 2);
    }
    return h;
  }

  std::string to_string() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (const auto& [v, e] : factors_) {
      if (!s.empty()) s += '*';
      s += criticalis::to_string(v);
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
  }

 private:
  std::vector<Factor> factors_;
};

/// Total monomial order over the fixed variable ordering by Var.
struct MonomialOrder {
  enum class Kind { degrevlex, lex, grlex };
  Kind kind = Kind::degrevlex;

  static MonomialOrder parse(std::string_view s) {
    if (s == "degrevlex" || s == "grevlex") return {Kind::degrevlex};
    if (s == "lex") return {Kind::lex};
    if (s == "grlex" || s == "deglex") return {Kind::grlex};
    throw ParseError("unknown monomial order '" + std::string(s) + "'");
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::lex: return "lex";
      case Kind::grlex: return "grlex";
      default: return "degrevlex";
    }
  }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    if (kind != Kind::lex) {
      auto da = a.degree(), db = b.degree();
      if (da != db) return da <=> db;
    }
    if (kind == Kind::degrevlex) return revlex_tail(a, b);
    return lex(a, b);
  }

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

 private:
  // Smallest variable where exponents differ decides; smaller exponent wins.
  static std::strong_ordering revlex_tail(const Monomial& a, const Monomial& b) {
    auto fa = a.factors(), fb = b.factors();
    auto i = fa.rbegin(), j = fb.rbegin();
    while (i != fa.rend() || j != fb.rend()) {
      if (j == fb.rend() || (i != fa.rend() && j->first < i->first)) return std::strong_ordering::less;
      if (i == fa.rend() || i->first < j->first) return std::strong_ordering::greater;
      if (i->second != j->second) return j->second <=> i->second;
      ++i;
      ++j;
    }
    return std::strong_ordering::equal;
  }

  // Largest variable where exponents differ decides; larger exponent wins.
  static std::strong_ordering lex(const Monomial& a, const Monomial& b) {
    auto fa = a.factors(), fb = b.factors();
    auto i = fa.begin(), j = fb.begin();
    while (i != fa.end() || j != fb.end()) {
      if (j == fb.end() || (i != fa.end() && i->first < j->first)) return std::strong_ordering::greater;
      if (i == fa.end() || j->first < i->first) return std::strong_ordering::less;
      if (i->second != j->second) return i->second <=> j->second;
      ++i;
      ++j;
    }
    return std::strong_ordering::equal;
  }
};

struct Term {
  Monomial mono;
  mpz_class coeff;

  friend bool operator==(const Term& a, const Term& b) { return a.mono == b.mono && a.coeff == b.coeff; }
};

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Ring ring) : ring_(ring) {}

  static Polynomial constant(Ring ring, const mpz_class& c) {
    Polynomial p(ring);
    mpz_class r = ring.reduce(c);
    if (r != 0) p.terms_.push_back({Monomial{}, std::move(r)});
    return p;
  }
  static Polynomial constant(Ring ring, long c) { return constant(ring, mpz_class(c)); }

  static Polynomial variable(Ring ring, Var v) {
    Polynomial p(ring);
    p.terms_.push_back({Monomial(v), mpz_class(1)});
    return p;
  }

  static Polynomial monomial(Ring ring, Monomial m, const mpz_class& c = 1) {
    Polynomial p(ring);
    mpz_class r = ring.reduce(c);
    if (r != 0) p.terms_.push_back({std::move(m), std::move(r)});
    return p;
  }

  /// Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(Ring ring, std::vector<Term> terms) {
    Polynomial p(ring);
    static const MonomialOrder order{};
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
        p.terms_.back().coeff += t.coeff;
      else
        p.terms_.push_back(std::move(t));
    }
    for (auto& t : p.terms_) t.coeff = ring.reduce(std::move(t.coeff));
    std::erase_if(p.terms_, [](const Term& t) { return t.coeff == 0; });
    return p;
  }

  Ring ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  std::size_t size() const { return terms_.size(); }

  /// Constant term (zero when absent).
  mpz_class constant_value() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return 0;
  }

  /// Leading term in degrevlex. Undefined for the zero polynomial.
  const Term& leading() const { return terms_.front(); }

  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  std::set<Var> variables() const {
    std::set<Var> vs;
    for (const auto& t : terms_)
      for (const auto& f : t.mono.factors()) vs.insert(f.first);
    return vs;
  }

  Polynomial operator-() const {
    Polynomial r(ring_);
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff = ring_.reduce(-t.coeff);
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) out.push_back({s.mono * t.mono, s.coeff * t.coeff});
    return from_terms(a.ring_, std::move(out));
  }

  friend Polynomial operator*(const mpz_class& c, const Polynomial& p) {
    return p * Polynomial::constant(p.ring_, c);
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(ring_, 1), base = *this;
    while (e != 0) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e != 0) base *= base;
    }
    return result;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  /// Deterministic total order used to sort generator lists.
  friend std::strong_ordering canonical_compare(const Polynomial& a, const Polynomial& b) {
    static const MonomialOrder order{};
    std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (auto c = order.compare(a.terms_[i].mono, b.terms_[i].mono); c != 0) return c;
      if (int c = cmp(a.terms_[i].coeff, b.terms_[i].coeff); c != 0) return c <=> 0;
    }
    return a.terms_.size() <=> b.terms_.size();
  }

  std::size_t hash() const {
    std::size_t h = terms_.size();
    for (const auto& t : terms_) {
      h ^= t.mono.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h ^= std::hash<long>{}(mpz_fdiv_ui(t.coeff.get_mpz_t(), 1000000007UL)) + (h << 6) + (h >> 2);
    }
    return h;
  }

  /// Canonical text: degrevlex-descending terms, "*" products, explicit
  /// " - " separators, "0" for the zero polynomial.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
      bool neg = t.coeff < 0;
      mpz_class mag = neg ? mpz_class(-t.coeff) : t.coeff;
      if (first)
        s += neg ? "-" : "";
      else
        s += neg ? " - " : " + ";
      first = false;
      if (t.mono.is_one()) {
        s += mag.get_str();
      } else {
        if (mag != 1) s += mag.get_str() + "*";
        s += t.mono.to_string();
      }
    }
    return s;
  }

 private:
  static void check_same_ring(const Polynomial& a, const Polynomial& b) {
    if (!(a.ring_ == b.ring_))
      throw RingMismatch("polynomials over " + a.ring_.to_string() + " and " + b.ring_.to_string());
  }

  static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract) {
    check_same_ring(a, b);
    static const MonomialOrder order{};
    Polynomial r(a.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin(), j = b.terms_.begin();
    auto push_b = [&](const Term& t) {
      mpz_class c = subtract ? a.ring_.reduce(-t.coeff) : t.coeff;
      r.terms_.push_back({t.mono, std::move(c)});
    };
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end()) {
        r.terms_.push_back(*i++);
      } else if (i == a.terms_.end()) {
        push_b(*j++);
      } else {
        auto c = order.compare(i->mono, j->mono);
        if (c > 0) {
          r.terms_.push_back(*i++);
        } else if (c < 0) {
          push_b(*j++);
        } else {
          mpz_class s = subtract ? mpz_class(i->coeff - j->coeff) : mpz_class(i->coeff + j->coeff);
          s = a.ring_.reduce(std::move(s));
          if (s != 0) r.terms_.push_back({i->mono, std::move(s)});
          ++i;
          ++j;
        }
      }
    }
    return r;
  }

  Ring ring_;
  std::vector<Term> terms_;
};

struct PolynomialHash {
  std::size_t operator()(const Polynomial& p) const { return p.hash(); }
};

using Assignment = std::map<Var, Polynomial>;
using Point = std::map<Var, mpz_class>;

/// Simultaneous substitution of the assigned variables; others untouched.
inline Polynomial substitute(const Polynomial& p, const Assignment& assignment) {
  if (assignment.empty()) return p;
  for (const auto& [v, img] : assignment)
    if (!(img.ring() == p.ring()))
      throw RingMismatch("substitution image for " + to_string(v) + " is over " + img.ring().to_string());
  std::map<std::pair<Var, std::uint32_t>, Polynomial> powers;
  auto power = [&](Var v, std::uint32_t e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, assignment.at(v).pow(e)).first;
    return it->second;
  };
  std::vector<Term> kept;
  Polynomial out(p.ring());
  for (const auto& t : p.terms()) {
    std::vector<Monomial::Factor> rest;
    Polynomial factor = Polynomial::constant(p.ring(), t.coeff);
    for (const auto& [v, e] : t.mono.factors()) {
      if (assignment.contains(v))
        factor *= power(v, e);
      else
        rest.emplace_back(v, e);
    }
    if (factor.is_zero()) continue;
    Monomial m = Monomial::from_factors(std::move(rest));
    for (const auto& ft : factor.terms()) kept.push_back({ft.mono * m, ft.coeff});
  }
  return Polynomial::from_terms(p.ring(), std::move(kept));
}

/// Exact value of p at a point assigning every variable of p.
inline mpz_class evaluate_full(const Polynomial& p, const Point& point) {
  mpz_class total = 0;
  for (const auto& t : p.terms()) {
    mpz_class v = t.coeff;
    for (const auto& [var, e] : t.mono.factors()) {
      auto it = point.find(var);
      if (it == point.end()) throw InvalidArgument("unassigned variable " + to_string(var));
      mpz_class pw;
      mpz_pow_ui(pw.get_mpz_t(), it->second.get_mpz_t(), e);
      v *= pw;
    }
    total += v;
  }
  return p.ring().reduce(total);
}

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, Ring ring) : s_(text), ring_(ring) {}

  Polynomial parse() {
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }
  std::uint32_t small_number() {
    auto d = digits();
    if (d.size() > 9) fail("number too large");
    return static_cast<std::uint32_t>(std::stoul(d));
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool first = true;
    for (;;) {
      bool neg = false;
      if (eat('-'))
        neg = true;
      else if (!eat('+') && !first)
        break;
      Polynomial t = term();
      acc = neg ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial t = factor();
    while (eat('*')) t *= factor();
    return t;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (eat('^')) base = base.pow(small_number());
    return base;
  }

  Polynomial atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(ring_, mpz_class(digits()));
    if (c == 'x') {
      ++pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected vertex index");
      Var v;
      v.vertex = small_number();
      if (pos_ < s_.size() && s_[pos_] == '_') {
        ++pos_;
        v.copy = small_number();
      }
      return Polynomial::variable(ring_, v);
    }
    fail("unexpected character");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  Ring ring_;
};

}  // namespace detail

/// Parses the polynomial text grammar: integers, variables x<v> or x<v>_<i>,
/// + - * ^ and parentheses. Whitespace-insensitive.
inline Polynomial parse_polynomial(std::string_view text, Ring ring = Ring::integers()) {
  return detail::PolyParser(text, ring).parse();
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

}  // namespace criticalis
